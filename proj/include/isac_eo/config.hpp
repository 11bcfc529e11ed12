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

#ifndef ISAC_EO_CONFIG_HPP
#define ISAC_EO_CONFIG_HPP

// Experiment configuration (SimConfig) and its JSON form. All keys are optional; omitted keys
// take the defaults below, which reproduce the street-canyon reference deployment:
// 26 GHz carrier, 600 MHz bandwidth, Tx (0, 0, 1.6), Rx (0, 26, 1.6), one element per side,
// one concrete EO at d_tx = d_rx = 6.5 m, K_EO = 0.5.
//
// The default element is azimuth-omnidirectional (isotropic), which stands for a horn whose power
// is collected over a full rotation. A fixed 8 deg horn is available as
// {"pattern": "directional"}; see configs/street_canyon_horn.json.

#include <cstdint>
#include <fstream>
#include <map>
#include <numbers>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "antenna.hpp"
#include "errors.hpp"
#include "geometry.hpp"
#include "materials.hpp"
#include "scenario_library.hpp"

namespace isac_eo
{

// Where a directional element points:
//   eo    - toward the specular point of the first EO (falls back to link without EOs)
//   link  - Tx toward Rx and Rx toward Tx
//   fixed - fixed_zenith_deg / fixed_azimuth_deg
enum class BoresightMode
{
    eo,
    link,
    fixed
};

inline constexpr double default_horn_hpbw_deg = 8.0;
inline constexpr double default_horn_max_attenuation_db = 30.0;

struct AntennaConfig
{
    ElementPattern pattern = ElementPattern::isotropic();
    BoresightMode boresight = BoresightMode::eo;
    double fixed_zenith_deg = 90.0;
    double fixed_azimuth_deg = 0.0;
    ArrayLayout layout{};

    friend bool operator==(const AntennaConfig &, const AntennaConfig &) = default;
};

struct EoOffsets
{
    double d_tx = 6.5;
    double d_rx = 6.5;

    friend bool operator==(const EoOffsets &, const EoOffsets &) = default;
};

struct EoConfig
{
    std::variant<EoOffsets, EoPlane> placement = EoOffsets{};
    std::string material = "concrete";

    friend bool operator==(const EoConfig &, const EoConfig &) = default;
};

enum class SweepParameter
{
    k_eo,
    d_rx
};

inline const char *to_string(SweepParameter p) { return p == SweepParameter::k_eo ? "k_eo" : "d_rx"; }

struct SweepConfig
{
    SweepParameter parameter = SweepParameter::k_eo;
    std::vector<double> grid;

    friend bool operator==(const SweepConfig &, const SweepConfig &) = default;
};

struct SimConfig
{
    LinkGeometry link{{0.0, 0.0, 1.6}, {0.0, 26.0, 1.6}, {}, {}, 26e9};
    double bandwidth = 600e6; // Hz
    AntennaConfig tx_antenna{};
    AntennaConfig rx_antenna{};
    std::vector<EoConfig> eo{EoConfig{}};
    double k_eo = 0.5;
    std::string scenario = "umi_street_canyon_nlos";
    std::optional<ScenarioParams> scenario_params; // inline record, overrides the named scenario
    std::map<std::string, Material> materials;     // overrides and additions to the presets
    std::uint64_t seed = 1;
    std::size_t num_drops = 1000;
    std::optional<double> bin_width; // s; defaults to 1 / bandwidth
    double time = 0.0;               // s, Doppler evaluation instant
    std::optional<SweepConfig> sweep;

    double effective_bin_width() const { return bin_width.value_or(1.0 / bandwidth); }

    friend bool operator==(const SimConfig &, const SimConfig &) = default;
};

namespace detail
{
inline void check_keys(const nlohmann::json &j, std::initializer_list<const char *> allowed, const std::string &where)
{
    if (!j.is_object())
        throw ParseError("config: '" + where + "' must be an object");
    const std::set<std::string> ok(allowed.begin(), allowed.end());
    for (const auto &[key, value] : j.items())
        if (!ok.count(key))
            throw ParseError("config: unknown key '" + key + "' in '" + where + "'");
}

inline Vec3 vec3_from_json(const nlohmann::json &j, const std::string &where)
{
    if (!j.is_array() || j.size() != 3)
        throw ParseError("config: '" + where + "' must be an array of 3 numbers");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

inline nlohmann::json vec3_to_json(const Vec3 &v) { return nlohmann::json::array({v.x, v.y, v.z}); }

constexpr double deg = std::numbers::pi / 180.0;

inline nlohmann::json antenna_to_json(const AntennaConfig &a)
{
    nlohmann::json j;
    j["pattern"] = a.pattern.kind == ElementPattern::Kind::isotropic ? "isotropic" : "directional";
    if (a.pattern.kind == ElementPattern::Kind::directional)
    {
        j["azimuth_hpbw_deg"] = a.pattern.azimuth_hpbw_deg;
        j["zenith_hpbw_deg"] = a.pattern.zenith_hpbw_deg;
        j["max_attenuation_db"] = a.pattern.max_attenuation_db;
        if (a.boresight == BoresightMode::eo)
            j["boresight"] = "eo";
        else if (a.boresight == BoresightMode::link)
            j["boresight"] = "link";
        else
            j["boresight"] = {{"zenith_deg", a.fixed_zenith_deg}, {"azimuth_deg", a.fixed_azimuth_deg}};
    }
    nlohmann::json elems = nlohmann::json::array();
    for (const auto &e : a.layout.elements)
        elems.push_back(vec3_to_json(e));
    j["elements"] = elems;
    return j;
}

inline AntennaConfig antenna_from_json(const nlohmann::json &j, const std::string &where)
{
    check_keys(j, {"pattern", "azimuth_hpbw_deg", "zenith_hpbw_deg", "max_attenuation_db", "boresight", "elements"},
               where);
    AntennaConfig a;
    const std::string kind = j.value("pattern", std::string("isotropic"));
    if (kind == "isotropic")
    {
        a.pattern = ElementPattern::isotropic();
    }
    else if (kind == "directional" || kind == "horn")
    {
        a.pattern.kind = ElementPattern::Kind::directional;
        a.pattern.azimuth_hpbw_deg = j.value("azimuth_hpbw_deg", default_horn_hpbw_deg);
        a.pattern.zenith_hpbw_deg = j.value("zenith_hpbw_deg", default_horn_hpbw_deg);
        a.pattern.max_attenuation_db = j.value("max_attenuation_db", default_horn_max_attenuation_db);
        if (j.contains("boresight"))
        {
            const auto &b = j.at("boresight");
            if (b.is_string())
            {
                const std::string mode = b.get<std::string>();
                if (mode == "eo")
                    a.boresight = BoresightMode::eo;
                else if (mode == "link")
                    a.boresight = BoresightMode::link;
                else
                    throw ParseError("config: '" + where + ".boresight' must be \"eo\", \"link\" or an angle object");
            }
            else
            {
                check_keys(b, {"zenith_deg", "azimuth_deg"}, where + ".boresight");
                a.boresight = BoresightMode::fixed;
                a.fixed_zenith_deg = b.at("zenith_deg").get<double>();
                a.fixed_azimuth_deg = b.at("azimuth_deg").get<double>();
            }
        }
    }
    else
        throw ParseError("config: '" + where + ".pattern' must be \"isotropic\" or \"directional\"");

    if (j.contains("elements"))
    {
        a.layout.elements.clear();
        if (!j.at("elements").is_array())
            throw ParseError("config: '" + where + ".elements' must be an array");
        for (const auto &e : j.at("elements"))
            a.layout.elements.push_back(vec3_from_json(e, where + ".elements[]"));
    }
    return a;
}

inline nlohmann::json material_to_json(const Material &m)
{
    if (m.kind == Material::Kind::pec)
        return {{"kind", "pec"}};
    return {{"kind", "dielectric"}, {"eps_real", m.eps_real}, {"conductivity", m.conductivity}};
}

inline Material material_from_json(const nlohmann::json &j, const std::string &name)
{
    check_keys(j, {"kind", "eps_real", "conductivity"}, "materials." + name);
    const std::string kind = j.value("kind", std::string("dielectric"));
    if (kind == "pec")
        return Material::pec(name);
    if (kind != "dielectric")
        throw ParseError("config: 'materials." + name + ".kind' must be \"pec\" or \"dielectric\"");
    Material m{Material::Kind::dielectric, j.value("eps_real", 1.0), j.value("conductivity", 0.0), name};
    return m;
}
} // namespace detail

inline nlohmann::json to_json(const SimConfig &c)
{
    using detail::vec3_to_json;
    nlohmann::json j;
    j["carrier_freq_hz"] = c.link.carrier_freq;
    j["bandwidth_hz"] = c.bandwidth;
    j["tx"] = {{"position", vec3_to_json(c.link.tx_pos)},
               {"velocity", vec3_to_json(c.link.tx_vel)},
               {"antenna", detail::antenna_to_json(c.tx_antenna)}};
    j["rx"] = {{"position", vec3_to_json(c.link.rx_pos)},
               {"velocity", vec3_to_json(c.link.rx_vel)},
               {"antenna", detail::antenna_to_json(c.rx_antenna)}};
    nlohmann::json eo = nlohmann::json::array();
    for (const auto &e : c.eo)
    {
        nlohmann::json r;
        if (const auto *off = std::get_if<EoOffsets>(&e.placement))
        {
            r["d_tx"] = off->d_tx;
            r["d_rx"] = off->d_rx;
        }
        else
        {
            const auto &p = std::get<EoPlane>(e.placement);
            r["plane_point"] = vec3_to_json(p.point);
            r["plane_normal"] = vec3_to_json(p.normal);
        }
        r["material"] = e.material;
        eo.push_back(r);
    }
    j["eo"] = eo;
    j["k_eo"] = c.k_eo;
    j["scenario"] = c.scenario;
    if (c.scenario_params)
        j["scenario_params"] = *c.scenario_params;
    if (!c.materials.empty())
    {
        nlohmann::json m = nlohmann::json::object();
        for (const auto &[name, mat] : c.materials)
            m[name] = detail::material_to_json(mat);
        j["materials"] = m;
    }
    j["seed"] = c.seed;
    j["num_drops"] = c.num_drops;
    if (c.bin_width)
        j["bin_width_s"] = *c.bin_width;
    j["time_s"] = c.time;
    if (c.sweep)
        j["sweep"] = {{"parameter", to_string(c.sweep->parameter)}, {"grid", c.sweep->grid}};
    return j;
}

inline SimConfig sim_config_from_json(const nlohmann::json &j)
{
    using detail::check_keys;
    using detail::vec3_from_json;
    SimConfig c;
    try
    {
        check_keys(j,
                   {"carrier_freq_hz", "bandwidth_hz", "tx", "rx", "eo", "k_eo", "scenario", "scenario_params",
                    "materials", "seed", "num_drops", "bin_width_s", "time_s", "sweep"},
                   "<root>");
        c.link.carrier_freq = j.value("carrier_freq_hz", c.link.carrier_freq);
        c.bandwidth = j.value("bandwidth_hz", c.bandwidth);

        auto terminal = [&](const char *key, Vec3 &pos, Vec3 &vel, AntennaConfig &ant)
        {
            if (!j.contains(key))
                return;
            const auto &t = j.at(key);
            check_keys(t, {"position", "velocity", "antenna"}, key);
            if (t.contains("position"))
                pos = vec3_from_json(t.at("position"), std::string(key) + ".position");
            if (t.contains("velocity"))
                vel = vec3_from_json(t.at("velocity"), std::string(key) + ".velocity");
            if (t.contains("antenna"))
                ant = detail::antenna_from_json(t.at("antenna"), std::string(key) + ".antenna");
        };
        terminal("tx", c.link.tx_pos, c.link.tx_vel, c.tx_antenna);
        terminal("rx", c.link.rx_pos, c.link.rx_vel, c.rx_antenna);

        if (j.contains("eo"))
        {
            if (!j.at("eo").is_array())
                throw ParseError("config: 'eo' must be an array");
            c.eo.clear();
            for (const auto &r : j.at("eo"))
            {
                check_keys(r, {"d_tx", "d_rx", "plane_point", "plane_normal", "material"}, "eo[]");
                EoConfig e;
                const bool offsets = r.contains("d_tx") || r.contains("d_rx");
                const bool explicit_plane = r.contains("plane_point") || r.contains("plane_normal");
                if (offsets == explicit_plane)
                    throw ParseError("config: each 'eo' entry needs either d_tx/d_rx or plane_point/plane_normal");
                if (offsets)
                    e.placement = EoOffsets{r.at("d_tx").get<double>(), r.at("d_rx").get<double>()};
                else
                    e.placement = EoPlane{vec3_from_json(r.at("plane_point"), "eo[].plane_point"),
                                          vec3_from_json(r.at("plane_normal"), "eo[].plane_normal")};
                e.material = r.value("material", e.material);
                c.eo.push_back(e);
            }
        }

        c.k_eo = j.value("k_eo", c.k_eo);
        c.scenario = j.value("scenario", c.scenario);
        if (j.contains("scenario_params"))
            c.scenario_params = scenario_from_json(j.at("scenario_params"), "config: scenario_params");
        if (j.contains("materials"))
        {
            if (!j.at("materials").is_object())
                throw ParseError("config: 'materials' must be an object");
            for (const auto &[name, m] : j.at("materials").items())
                c.materials[name] = detail::material_from_json(m, name);
        }
        c.seed = j.value("seed", c.seed);
        c.num_drops = j.value("num_drops", c.num_drops);
        if (j.contains("bin_width_s") && !j.at("bin_width_s").is_null())
            c.bin_width = j.at("bin_width_s").get<double>();
        c.time = j.value("time_s", c.time);
        if (j.contains("sweep") && !j.at("sweep").is_null())
        {
            const auto &s = j.at("sweep");
            check_keys(s, {"parameter", "grid"}, "sweep");
            SweepConfig sw;
            const std::string p = s.at("parameter").get<std::string>();
            if (p == "k_eo")
                sw.parameter = SweepParameter::k_eo;
            else if (p == "d_rx")
                sw.parameter = SweepParameter::d_rx;
            else
                throw ParseError("config: 'sweep.parameter' must be \"k_eo\" or \"d_rx\"");
            sw.grid = s.at("grid").get<std::vector<double>>();
            c.sweep = sw;
        }
    }
    catch (const nlohmann::json::exception &e)
    {
        throw ParseError(std::string("config: ") + e.what());
    }
    return c;
}

inline SimConfig load_sim_config(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError(path + ": cannot open config file");
    nlohmann::json j;
    try
    {
        in >> j;
    }
    catch (const nlohmann::json::parse_error &e)
    {
        throw ParseError(path + ": " + e.what());
    }
    try
    {
        return sim_config_from_json(j);
    }
    catch (const ParseError &e)
    {
        throw ParseError(path + ": " + e.what());
    }
}

} // namespace isac_eo

#endif
