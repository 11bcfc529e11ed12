// SPDX-License-Identifier: Apache-2.0
//
// isac-eo: stochastic ISAC channel simulation with environment-object reflections
// Copyright (C) 2026 The isac-eo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef ISAC_EO_OUTPUT_HPP
#define ISAC_EO_OUTPUT_HPP

// Result files. Numbers are printed with fixed formats so that identical runs produce
// byte-identical files:
//   pdp.csv         delay_ns,power_db           non-empty bins only, dB relative to total power
//   ds_samples.csv  grid_value,drop_index,ds_ns
//   ds_cdf.csv      grid_value,ds_ns,cum_prob
//   run.json        metadata, config echo, per-grid summaries

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "experiment.hpp"
#include "metrics.hpp"
#include "scatterer_power.hpp"

namespace isac_eo
{

inline constexpr const char *tool_name = "isac-eo";
inline constexpr const char *tool_version = "1.0.0";

inline std::string format_number(const char *fmt, double v)
{
    char buf[64];
    const int n = std::snprintf(buf, sizeof(buf), fmt, v);
    return std::string(buf, static_cast<std::size_t>(n));
}

inline std::string format_grid_value(double v) { return format_number("%.10g", v); }

inline void write_pdp_csv(std::ostream &out, const Pdp &pdp)
{
    const double total = pdp.total_power();
    out << "delay_ns,power_db\n";
    if (!(total > 0.0))
        return;
    for (const auto &b : pdp.bins)
    {
        if (!(b.power > 0.0))
            continue;
        out << format_number("%.6f", b.delay * 1e9) << ',' << format_number("%.6f", 10.0 * std::log10(b.power / total))
            << '\n';
    }
}

struct GridSamples
{
    double grid_value = 0.0;
    const std::vector<DsSample> *samples = nullptr;
};

inline void write_ds_samples_csv(std::ostream &out, const std::vector<GridSamples> &rows)
{
    out << "grid_value,drop_index,ds_ns\n";
    for (const auto &g : rows)
        for (const auto &s : *g.samples)
            out << format_grid_value(g.grid_value) << ',' << s.drop_index << ',' << format_number("%.6f", s.rms_ds * 1e9)
                << '\n';
}

inline void write_ds_cdf_csv(std::ostream &out, const SweepResult &r)
{
    out << "grid_value,ds_ns,cum_prob\n";
    for (const auto &g : r.grid)
    {
        if (!g.cdf)
            continue;
        for (std::size_t i = 0; i < g.cdf->size(); ++i)
            out << format_grid_value(g.value) << ',' << format_number("%.6f", g.cdf->values[i] * 1e9) << ','
                << format_number("%.6f", g.cdf->probabilities[i]) << '\n';
    }
}

inline nlohmann::json eo_paths_json(const Experiment &exp)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto &e : exp.eo())
        arr.push_back({{"material", e.material.name},
                       {"d_eo_m", e.path.d_eo},
                       {"tau_eo_ns", e.path.tau_eo * 1e9},
                       {"incidence_angle_deg", e.path.incidence_angle * 180.0 / std::numbers::pi},
                       {"specular_point", detail::vec3_to_json(e.path.specular_point)}});
    return arr;
}

inline nlohmann::json run_metadata(const std::string &command, const SimConfig &config, const ScenarioParams &scenario)
{
    return {{"tool", tool_name},
            {"version", tool_version},
            {"command", command},
            {"seed", config.seed},
            {"num_drops", config.num_drops},
            {"bin_width_s", config.effective_bin_width()},
            {"config", to_json(config)},
            {"scenario_params", scenario}};
}

inline nlohmann::json sweep_summary_json(const SweepResult &r)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto &g : r.grid)
    {
        nlohmann::json e{{"grid_value", g.value}};
        if (g.error.empty())
        {
            e["num_samples"] = g.samples.size();
            e["mean_ds_ns"] = g.mean_ds * 1e9;
            e["median_ds_ns"] = g.median_ds * 1e9;
        }
        else
            e["error"] = g.error;
        arr.push_back(e);
    }
    return arr;
}

inline nlohmann::json padp_report_json(const ScattererPowerTable &table, const std::vector<ScattererShare> &shares,
                                       const std::string &source)
{
    nlohmann::json arr = nlohmann::json::array();
    double sum = 0.0;
    for (const auto &s : shares)
    {
        arr.push_back({{"scatterer", s.scatterer}, {"fraction", s.fraction}});
        sum += s.fraction;
    }
    return {{"source", source}, {"num_angles", table.num_angles()}, {"proportions", arr}, {"sum", sum}};
}

inline void write_padp_table(std::ostream &out, const std::vector<ScattererShare> &shares)
{
    std::size_t width = 9;
    for (const auto &s : shares)
        width = std::max(width, s.scatterer.size());
    auto pad = [&](const std::string &s) { return s + std::string(width - s.size() + 2, ' '); };
    out << pad("Scatterer") << "Power proportion\n";
    for (const auto &s : shares)
        out << pad(s.scatterer) << format_number("%.1f%%", 100.0 * s.fraction) << '\n';
}

inline void write_text_file(const std::filesystem::path &path, const std::string &content)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot write '" + path.string() + "'");
    out << content;
    if (!out)
        throw std::runtime_error("write failed for '" + path.string() + "'");
}

} // namespace isac_eo

#endif
