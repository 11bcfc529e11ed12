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

#ifndef ISAC_EO_SCENARIO_LIBRARY_HPP
#define ISAC_EO_SCENARIO_LIBRARY_HPP

// Named ScenarioParams records. The scenario file is JSON:
//
//   { "scenarios": [ { "name": "umi_street_canyon_nlos", "ds_log_mean": -7.17, ... }, ... ] }
//
// Every ScenarioParams field is required in a file record; unknown keys are rejected.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "stochastic_clusters.hpp"

namespace isac_eo
{

// UMi street canyon NLOS parameters of the standard tables, evaluated at a carrier
// frequency and link distance (heights enter the ZSD mean only)
inline ScenarioParams umi_street_canyon_nlos(double carrier_freq_hz, double d_2d, double h_ut, double h_bs)
{
    const double lf = std::log10(1.0 + carrier_freq_hz * 1e-9);
    ScenarioParams p;
    p.name = "umi_street_canyon_nlos";
    p.ds_log_mean = -0.24 * lf - 6.83;
    p.ds_log_std = 0.16 * lf + 0.28;
    p.asd_log_mean = -0.23 * lf + 1.53;
    p.asd_log_std = 0.11 * lf + 0.33;
    p.asa_log_mean = -0.08 * lf + 1.81;
    p.asa_log_std = 0.05 * lf + 0.3;
    p.zsa_log_mean = -0.04 * lf + 0.92;
    p.zsa_log_std = -0.07 * lf + 0.41;
    p.zsd_log_mean = std::max(-0.5, -3.1 * d_2d / 1000.0 + 0.01 * std::max(h_ut - h_bs, 0.0) + 0.2);
    p.zsd_log_std = 0.35;
    p.zod_offset_deg = -std::pow(10.0, -1.5 * std::log10(std::max(10.0, d_2d)) + 3.3);
    p.num_clusters = 19;
    p.rays_per_cluster = 20;
    p.delay_scaling = 2.1;
    p.cluster_shadowing_std = 3.0;
    p.c_asa_deg = 22.0;
    p.c_asd_deg = 10.0;
    p.c_zsa_deg = 7.0;
    return p;
}

inline void to_json(nlohmann::json &j, const ScenarioParams &p)
{
    j = nlohmann::json{{"name", p.name},
                       {"ds_log_mean", p.ds_log_mean},
                       {"ds_log_std", p.ds_log_std},
                       {"asd_log_mean", p.asd_log_mean},
                       {"asd_log_std", p.asd_log_std},
                       {"asa_log_mean", p.asa_log_mean},
                       {"asa_log_std", p.asa_log_std},
                       {"zsa_log_mean", p.zsa_log_mean},
                       {"zsa_log_std", p.zsa_log_std},
                       {"zsd_log_mean", p.zsd_log_mean},
                       {"zsd_log_std", p.zsd_log_std},
                       {"zod_offset_deg", p.zod_offset_deg},
                       {"num_clusters", p.num_clusters},
                       {"rays_per_cluster", p.rays_per_cluster},
                       {"delay_scaling", p.delay_scaling},
                       {"cluster_shadowing_std", p.cluster_shadowing_std},
                       {"c_asa_deg", p.c_asa_deg},
                       {"c_asd_deg", p.c_asd_deg},
                       {"c_zsa_deg", p.c_zsa_deg}};
}

inline ScenarioParams scenario_from_json(const nlohmann::json &j, const std::string &source)
{
    if (!j.is_object())
        throw ParseError(source + ": scenario record must be a JSON object");
    ScenarioParams p;
    const nlohmann::json reference = p;
    for (const auto &[key, value] : j.items())
        if (!reference.contains(key))
            throw ParseError(source + ": unknown scenario field '" + key + "'");
    for (const auto &[key, value] : reference.items())
        if (!j.contains(key))
            throw ParseError(source + ": scenario field '" + key + "' is missing");
    try
    {
        p.name = j.at("name").get<std::string>();
        p.ds_log_mean = j.at("ds_log_mean").get<double>();
        p.ds_log_std = j.at("ds_log_std").get<double>();
        p.asd_log_mean = j.at("asd_log_mean").get<double>();
        p.asd_log_std = j.at("asd_log_std").get<double>();
        p.asa_log_mean = j.at("asa_log_mean").get<double>();
        p.asa_log_std = j.at("asa_log_std").get<double>();
        p.zsa_log_mean = j.at("zsa_log_mean").get<double>();
        p.zsa_log_std = j.at("zsa_log_std").get<double>();
        p.zsd_log_mean = j.at("zsd_log_mean").get<double>();
        p.zsd_log_std = j.at("zsd_log_std").get<double>();
        p.zod_offset_deg = j.at("zod_offset_deg").get<double>();
        p.num_clusters = j.at("num_clusters").get<std::size_t>();
        p.rays_per_cluster = j.at("rays_per_cluster").get<std::size_t>();
        p.delay_scaling = j.at("delay_scaling").get<double>();
        p.cluster_shadowing_std = j.at("cluster_shadowing_std").get<double>();
        p.c_asa_deg = j.at("c_asa_deg").get<double>();
        p.c_asd_deg = j.at("c_asd_deg").get<double>();
        p.c_zsa_deg = j.at("c_zsa_deg").get<double>();
    }
    catch (const nlohmann::json::exception &e)
    {
        throw ParseError(source + ": " + e.what());
    }
    try
    {
        p.validate();
    }
    catch (const std::invalid_argument &e)
    {
        throw ParseError(source + ": " + e.what());
    }
    return p;
}

class ScenarioLibrary
{
  public:
    // Bundled defaults: UMi street canyon NLOS at 26 GHz, d_2D = 26 m, equal Tx/Rx heights
    static ScenarioLibrary builtin()
    {
        ScenarioLibrary lib;
        lib.add(ScenarioParams{});
        return lib;
    }

    static ScenarioLibrary from_json(const nlohmann::json &j, const std::string &source)
    {
        if (!j.is_object() || !j.contains("scenarios") || !j.at("scenarios").is_array())
            throw ParseError(source + ": expected an object with a 'scenarios' array");
        ScenarioLibrary lib;
        std::size_t i = 0;
        for (const auto &rec : j.at("scenarios"))
        {
            const auto p = scenario_from_json(rec, source + ": scenarios[" + std::to_string(i++) + "]");
            if (lib.contains(p.name))
                throw ParseError(source + ": duplicate scenario '" + p.name + "'");
            lib.add(p);
        }
        return lib;
    }

    static ScenarioLibrary load(const std::string &path)
    {
        std::ifstream in(path);
        if (!in)
            throw ParseError(path + ": cannot open scenario file");
        nlohmann::json j;
        try
        {
            in >> j;
        }
        catch (const nlohmann::json::parse_error &e)
        {
            throw ParseError(path + ": " + e.what());
        }
        return from_json(j, path);
    }

    void add(const ScenarioParams &p) { records_[p.name] = p; }
    bool contains(const std::string &name) const { return records_.count(name) != 0; }

    const ScenarioParams &at(const std::string &name) const
    {
        const auto it = records_.find(name);
        if (it == records_.end())
            throw std::invalid_argument("unknown scenario '" + name + "'");
        return it->second;
    }

    nlohmann::json to_json() const
    {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto &[name, p] : records_)
            arr.push_back(p);
        return {{"scenarios", arr}};
    }

  private:
    std::map<std::string, ScenarioParams> records_;
};

} // namespace isac_eo

#endif
