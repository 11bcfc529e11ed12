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

#ifndef ISAC_EO_CLI_HPP
#define ISAC_EO_CLI_HPP

// Command-line front end:
//   pdp              single drop: pdp.csv, ds_samples.csv, run.json
//   sweep-keo        K_EO sweep:  ds_samples.csv, ds_cdf.csv, run.json
//   sweep-drx        d_rx sweep:  ds_samples.csv, ds_cdf.csv, run.json
//   analyze-padp     per-scatterer power proportions of a measured angle/power table
//   validate-config  resolve and echo a config, non-zero exit on error

#include <filesystem>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "config.hpp"
#include "experiment.hpp"
#include "metrics.hpp"
#include "output.hpp"
#include "scatterer_power.hpp"
#include "scenario_library.hpp"

namespace isac_eo::cli
{

inline const std::vector<double> default_keo_grid = {0.1, 0.3, 0.5, 0.7, 0.9};
inline const std::vector<double> default_drx_grid = {3.25, 6.5, 13.0, 19.5};

struct Options
{
    std::string config_path;
    std::string scenario_file;
    std::string out_dir = "isac_eo_out";
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> drops;
    std::optional<double> k_eo;
    std::optional<double> time_s;
    std::optional<double> bin_width_ns;
    std::size_t threads = default_thread_count();
    std::size_t drop_index = 0;
    std::vector<double> grid;
    std::string padp_path;
    bool json = false;
};

inline SimConfig load_config(const Options &o)
{
    SimConfig c = o.config_path.empty() ? SimConfig{} : load_sim_config(o.config_path);
    if (o.seed)
        c.seed = *o.seed;
    if (o.drops)
        c.num_drops = *o.drops;
    if (o.k_eo)
        c.k_eo = *o.k_eo;
    if (o.time_s)
        c.time = *o.time_s;
    if (o.bin_width_ns)
        c.bin_width = *o.bin_width_ns * 1e-9;
    return c;
}

inline ScenarioLibrary load_scenarios(const Options &o)
{
    return o.scenario_file.empty() ? ScenarioLibrary::builtin() : ScenarioLibrary::load(o.scenario_file);
}

inline int cmd_pdp(const Options &o, std::ostream &out)
{
    const SimConfig config = load_config(o);
    const Experiment exp(config, load_scenarios(o));
    const DropResult drop = exp.run_drop(o.drop_index);
    const Pdp pdp = compute_pdp(drop.cir, config.effective_bin_width());

    const std::filesystem::path dir(o.out_dir);
    std::filesystem::create_directories(dir);

    std::ostringstream pdp_csv;
    write_pdp_csv(pdp_csv, pdp);
    write_text_file(dir / "pdp.csv", pdp_csv.str());

    const std::vector<DsSample> samples{drop.ds};
    std::ostringstream ds_csv;
    write_ds_samples_csv(ds_csv, {{config.k_eo, &samples}});
    write_text_file(dir / "ds_samples.csv", ds_csv.str());

    nlohmann::json meta = run_metadata("pdp", config, exp.scenario());
    meta["drop_index"] = o.drop_index;
    meta["eo_paths"] = eo_paths_json(exp);
    const double total = drop.cir.total_power();
    nlohmann::json taps = nlohmann::json::array();
    for (const auto &tap : drop.cir.taps)
        taps.push_back({{"delay_ns", tap.delay * 1e9},
                        {"kind", to_string(tap.kind)},
                        {"power_db", 10.0 * std::log10(tap.coeff.power() / total)}});
    meta["taps"] = taps;
    meta["ds_ns"] = drop.ds.rms_ds * 1e9;
    meta["eo_power_fraction"] = drop.cir.power(TapKind::eo) / total;
    write_text_file(dir / "run.json", meta.dump(2) + "\n");

    out << "pdp: drop " << o.drop_index << ", " << drop.cir.taps.size() << " taps, rms DS "
        << format_number("%.3f", drop.ds.rms_ds * 1e9) << " ns";
    for (const auto &e : exp.eo())
        out << ", EO path at " << format_number("%.3f", e.path.tau_eo * 1e9) << " ns";
    out << " -> " << dir.string() << "\n";
    return 0;
}

inline int cmd_sweep(const Options &o, SweepParameter parameter, std::ostream &out)
{
    SimConfig config = load_config(o);
    std::vector<double> grid = o.grid;
    if (grid.empty() && config.sweep && config.sweep->parameter == parameter)
        grid = config.sweep->grid;
    if (grid.empty())
        grid = parameter == SweepParameter::k_eo ? default_keo_grid : default_drx_grid;
    config.sweep = SweepConfig{parameter, grid};

    const ScenarioLibrary scenarios = load_scenarios(o);
    // Validates the base configuration before any drops are run
    SimConfig base = config;
    base.sweep.reset();
    if (parameter == SweepParameter::k_eo)
        base.k_eo = grid.front();
    const Experiment probe(base, scenarios);

    const SweepResult result = run_sweep(config, scenarios, o.threads);

    const std::filesystem::path dir(o.out_dir);
    std::filesystem::create_directories(dir);

    std::vector<GridSamples> rows;
    for (const auto &g : result.grid)
        rows.push_back({g.value, &g.samples});
    std::ostringstream ds_csv;
    write_ds_samples_csv(ds_csv, rows);
    write_text_file(dir / "ds_samples.csv", ds_csv.str());

    std::ostringstream cdf_csv;
    write_ds_cdf_csv(cdf_csv, result);
    write_text_file(dir / "ds_cdf.csv", cdf_csv.str());

    nlohmann::json meta = run_metadata(parameter == SweepParameter::k_eo ? "sweep-keo" : "sweep-drx", config,
                                       probe.scenario());
    meta["sweep_parameter"] = to_string(parameter);
    meta["results"] = sweep_summary_json(result);
    write_text_file(dir / "run.json", meta.dump(2) + "\n");

    out << "sweep " << to_string(parameter) << " (" << config.num_drops << " drops per value)\n";
    for (const auto &g : result.grid)
    {
        out << "  " << to_string(parameter) << " = " << format_grid_value(g.value) << ": ";
        if (g.error.empty())
            out << "mean DS " << format_number("%.3f", g.mean_ds * 1e9) << " ns, median "
                << format_number("%.3f", g.median_ds * 1e9) << " ns\n";
        else
            out << "skipped (" << g.error << ")\n";
    }
    out << "-> " << dir.string() << "\n";
    return 0;
}

inline int cmd_analyze_padp(const Options &o, bool out_dir_given, std::ostream &out)
{
    const ScattererPowerTable table = load_scatterer_power_table(o.padp_path);
    const auto shares = power_proportion(table);
    const nlohmann::json report = padp_report_json(table, shares, o.padp_path);

    if (o.json)
        out << report.dump(2) << "\n";
    else
        write_padp_table(out, shares);

    if (out_dir_given)
    {
        const std::filesystem::path dir(o.out_dir);
        std::filesystem::create_directories(dir);
        write_text_file(dir / "padp_report.json", report.dump(2) + "\n");
        std::ostringstream txt;
        write_padp_table(txt, shares);
        write_text_file(dir / "padp_report.txt", txt.str());
    }
    return 0;
}

inline int cmd_validate_config(const Options &o, std::ostream &out)
{
    const SimConfig config = load_config(o);
    const Experiment exp(config, load_scenarios(o));
    if (config.sweep)
        for (double v : config.sweep->grid)
        {
            SimConfig c = with_grid_value(config, config.sweep->parameter, v);
            c.sweep.reset();
            const Experiment check(std::move(c), load_scenarios(o));
        }
    nlohmann::json j{{"status", "ok"}, {"config", to_json(config)}, {"eo_paths", eo_paths_json(exp)}};
    out << j.dump(2) << "\n";
    return 0;
}

// Parses argv and runs one subcommand. Errors are reported on `err` with a non-zero return.
inline int run(int argc, const char *const *argv, std::ostream &out = std::cout, std::ostream &err = std::cerr)
{
    CLI::App app{"Stochastic ISAC channel simulation with environment-object reflections"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App *sub)
    {
        sub->add_option("-c,--config", o.config_path, "Experiment config (JSON)")->check(CLI::ExistingFile);
        sub->add_option("--scenario-file", o.scenario_file, "Scenario parameter file (JSON)")->check(CLI::ExistingFile);
        sub->add_option("--seed", o.seed, "Master seed");
        sub->add_option("--drops", o.drops, "Number of Monte Carlo drops")->check(CLI::PositiveNumber);
        sub->add_option("--k-eo", o.k_eo, "EO power share K_EO")->check(CLI::Range(0.0, 1.0));
        sub->add_option("--time", o.time_s, "Evaluation instant for the Doppler terms (s)");
        sub->add_option("--bin-width-ns", o.bin_width_ns, "PDP bin width (ns), default 1/bandwidth")
            ->check(CLI::PositiveNumber);
        sub->add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);
        sub->add_option("-o,--out-dir", o.out_dir, "Output directory");
    };

    auto *pdp = app.add_subcommand("pdp", "Single-drop power delay profile");
    add_common(pdp);
    pdp->add_option("--drop", o.drop_index, "Drop index");

    auto *keo = app.add_subcommand("sweep-keo", "Delay-spread CDFs over a K_EO grid");
    add_common(keo);
    keo->add_option("--grid", o.grid, "Comma-separated K_EO values")->delimiter(',');

    auto *drx = app.add_subcommand("sweep-drx", "Delay-spread CDFs over a d_rx grid");
    add_common(drx);
    drx->add_option("--grid", o.grid, "Comma-separated d_rx values (m)")->delimiter(',');

    auto *padp = app.add_subcommand("analyze-padp", "Scatterer power proportions of a measured table");
    padp->add_option("table", o.padp_path, "CSV table: angle_deg,<scatterers...>,target_total")->required();
    auto *padp_out = padp->add_option("-o,--out-dir", o.out_dir, "Also write padp_report.json/.txt here");
    padp->add_flag("--json", o.json, "Print JSON instead of the table");

    auto *validate = app.add_subcommand("validate-config", "Check and echo a configuration");
    add_common(validate);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        return app.exit(e, out, err);
    }

    try
    {
        if (pdp->parsed())
            return cmd_pdp(o, out);
        if (keo->parsed())
            return cmd_sweep(o, SweepParameter::k_eo, out);
        if (drx->parsed())
            return cmd_sweep(o, SweepParameter::d_rx, out);
        if (padp->parsed())
            return cmd_analyze_padp(o, padp_out->count() > 0, out);
        if (validate->parsed())
            return cmd_validate_config(o, out);
    }
    catch (const std::exception &e)
    {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

} // namespace isac_eo::cli

#endif
