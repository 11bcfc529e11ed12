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

#ifndef ISAC_EO_STOCHASTIC_CLUSTERS_HPP
#define ISAC_EO_STOCHASTIC_CLUSTERS_HPP

// Reduced geometry-based stochastic cluster generator (3GPP TR 38.901 fast-fading steps).
//
// Covered steps:
//   - large-scale parameters DS, ASD, ASA, ZSD, ZSA drawn independently log-normal
//   - cluster delays  tau'_n = -r_tau DS ln(U_n), shifted to start at 0 and sorted
//   - cluster powers  p_n ~ exp(-tau_n (r_tau - 1) / (r_tau DS)) 10^(-Z_n / 10), unit sum
//   - cluster angles  inverse-Gaussian azimuth and inverse-Laplacian zenith mapping around the
//                     LOS direction, with random sign and Gaussian jitter
//   - ray angles      cluster angle + spread * alpha_m with a random sign per ray
//   - initial phases  uniform on (-pi, pi]
//
// Not covered: LSP cross-correlation, intra-cluster delay sub-clusters, cluster pruning
// below -25 dB, XPR, spatial consistency. Delays are relative; the first cluster sits at 0.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "geometry.hpp"
#include "random.hpp"

namespace isac_eo
{

// Log10 means/stds: DS in log10(s), angular spreads in log10(deg)
struct ScenarioParams
{
    std::string name = "umi_street_canyon_nlos";
    double ds_log_mean = -7.173527;
    double ds_log_std = 0.509018;
    double asd_log_mean = 1.200786;
    double asd_log_std = 0.487450;
    double asa_log_mean = 1.695491;
    double asa_log_std = 0.371568;
    double zsa_log_mean = 0.862745;
    double zsa_log_std = 0.309805;
    double zsd_log_mean = 0.119400;
    double zsd_log_std = 0.35;
    double zod_offset_deg = -15.050121;
    std::size_t num_clusters = 19;
    std::size_t rays_per_cluster = 20;
    double delay_scaling = 2.1;         // r_tau
    double cluster_shadowing_std = 3.0; // zeta, dB
    double c_asa_deg = 22.0;
    double c_asd_deg = 10.0;
    double c_zsa_deg = 7.0;

    void validate() const
    {
        auto finite = [](double v) { return std::isfinite(v); };
        for (double v : {ds_log_mean, asd_log_mean, asa_log_mean, zsa_log_mean, zsd_log_mean, zod_offset_deg})
            if (!finite(v))
                throw std::invalid_argument("ScenarioParams '" + name + "': log means must be finite.");
        for (double v : {ds_log_std, asd_log_std, asa_log_std, zsa_log_std, zsd_log_std, cluster_shadowing_std})
            if (!(v >= 0.0) || !finite(v))
                throw std::invalid_argument("ScenarioParams '" + name + "': standard deviations must be >= 0.");
        for (double v : {c_asa_deg, c_asd_deg, c_zsa_deg})
            if (!(v > 0.0) || !finite(v))
                throw std::invalid_argument("ScenarioParams '" + name + "': cluster angle spreads must be > 0.");
        if (num_clusters == 0 || rays_per_cluster == 0)
            throw std::invalid_argument("ScenarioParams '" + name + "': cluster and ray counts must be > 0.");
        if (!(delay_scaling > 1.0) || !finite(delay_scaling))
            throw std::invalid_argument("ScenarioParams '" + name + "': delay scaling r_tau must be > 1.");
    }

    friend bool operator==(const ScenarioParams &, const ScenarioParams &) = default;
};

// One drop's large-scale parameters: ds in seconds, angular spreads in degrees
struct LspSet
{
    double ds = 0.0;
    double asa = 0.0;
    double asd = 0.0;
    double zsa = 0.0;
    double zsd = 0.0;

    friend bool operator==(const LspSet &, const LspSet &) = default;
};

struct Ray
{
    SphericalAngles departure{}; // ZOD, AOD
    SphericalAngles arrival{};   // ZOA, AOA
    double initial_phase = 0.0;  // (-pi, pi]

    friend bool operator==(const Ray &, const Ray &) = default;
};

struct Cluster
{
    double delay = 0.0; // s, relative to the first cluster
    double power = 0.0; // linear, normalized over the set
    std::vector<Ray> rays;

    friend bool operator==(const Cluster &, const Cluster &) = default;
};

struct ClusterSet
{
    std::vector<Cluster> clusters;

    double total_power() const
    {
        double s = 0.0;
        for (const auto &c : clusters)
            s += c.power;
        return s;
    }

    friend bool operator==(const ClusterSet &, const ClusterSet &) = default;
};

// Reference directions the cluster angles are spread around
struct ClusterFrame
{
    SphericalAngles los_departure{}; // Tx toward Rx
    SphericalAngles los_arrival{};   // Rx toward Tx

    static ClusterFrame from_link(const LinkGeometry &link)
    {
        return {angles_of(link.rx_pos - link.tx_pos), angles_of(link.tx_pos - link.rx_pos)};
    }
};

namespace detail
{
// Angular spread caps of the standard procedure (deg)
inline constexpr double max_azimuth_spread = 104.0;
inline constexpr double max_zenith_spread = 52.0;

// Ray offset magnitudes for unit rms angular spread; each is used with both signs
inline constexpr std::array<double, 10> ray_offsets = {0.0447, 0.1413, 0.2492, 0.3715, 0.5129,
                                                       0.6797, 0.8844, 1.1481, 1.5195, 2.1551};

// Piecewise-linear lookup in (cluster count, value) tables, clamped at both ends
template <std::size_t N>
double interpolate_scaling(const std::array<std::pair<double, double>, N> &table, std::size_t n)
{
    const double x = static_cast<double>(n);
    if (x <= table.front().first)
        return table.front().second;
    if (x >= table.back().first)
        return table.back().second;
    for (std::size_t i = 1; i < N; ++i)
    {
        if (x <= table[i].first)
        {
            const auto [x0, y0] = table[i - 1];
            const auto [x1, y1] = table[i];
            return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
        }
    }
    return table.back().second;
}

// Azimuth scaling factor C_phi (NLOS)
inline double azimuth_scaling(std::size_t num_clusters)
{
    static constexpr std::array<std::pair<double, double>, 14> table = {{{2, 0.501},
                                                                         {3, 0.680},
                                                                         {4, 0.779},
                                                                         {5, 0.860},
                                                                         {8, 1.018},
                                                                         {10, 1.090},
                                                                         {11, 1.123},
                                                                         {12, 1.146},
                                                                         {14, 1.190},
                                                                         {15, 1.211},
                                                                         {16, 1.226},
                                                                         {19, 1.273},
                                                                         {20, 1.289},
                                                                         {25, 1.358}}};
    return interpolate_scaling(table, num_clusters);
}

// Zenith scaling factor C_theta (NLOS)
inline double zenith_scaling(std::size_t num_clusters)
{
    static constexpr std::array<std::pair<double, double>, 11> table = {{{2, 0.430},
                                                                         {3, 0.594},
                                                                         {4, 0.697},
                                                                         {8, 0.889},
                                                                         {10, 0.957},
                                                                         {11, 1.031},
                                                                         {12, 1.104},
                                                                         {15, 1.1088},
                                                                         {19, 1.184},
                                                                         {20, 1.178},
                                                                         {25, 1.282}}};
    return interpolate_scaling(table, num_clusters);
}

// Folds a zenith angle in degrees into [0, 180]
inline double fold_zenith_deg(double z)
{
    z = std::fmod(z, 360.0);
    if (z < 0.0)
        z += 360.0;
    return z > 180.0 ? 360.0 - z : z;
}

inline SphericalAngles to_angles(double zenith_deg, double azimuth_deg)
{
    constexpr double deg2rad = std::numbers::pi / 180.0;
    return {std::clamp(fold_zenith_deg(zenith_deg) * deg2rad, 0.0, std::numbers::pi),
            wrap_azimuth(azimuth_deg * deg2rad)};
}
} // namespace detail

inline LspSet draw_lsps(const ScenarioParams &params, RandomStream &rng)
{
    params.validate();
    LspSet l;
    l.ds = std::pow(10.0, rng.normal(params.ds_log_mean, params.ds_log_std));
    l.asd = std::min(std::pow(10.0, rng.normal(params.asd_log_mean, params.asd_log_std)), detail::max_azimuth_spread);
    l.asa = std::min(std::pow(10.0, rng.normal(params.asa_log_mean, params.asa_log_std)), detail::max_azimuth_spread);
    l.zsd = std::min(std::pow(10.0, rng.normal(params.zsd_log_mean, params.zsd_log_std)), detail::max_zenith_spread);
    l.zsa = std::min(std::pow(10.0, rng.normal(params.zsa_log_mean, params.zsa_log_std)), detail::max_zenith_spread);
    return l;
}

inline ClusterSet generate_clusters(const LspSet &lsps, const ScenarioParams &params, RandomStream &rng,
                                    const ClusterFrame &frame = {})
{
    params.validate();
    if (!(lsps.ds > 0.0) || !(lsps.asa > 0.0) || !(lsps.asd > 0.0) || !(lsps.zsa > 0.0) || !(lsps.zsd > 0.0))
        throw std::invalid_argument("generate_clusters: large-scale parameters must be positive.");

    const std::size_t n_clusters = params.num_clusters;
    const std::size_t n_rays = params.rays_per_cluster;
    const double r_tau = params.delay_scaling;

    // Delays
    std::vector<double> delays(n_clusters);
    for (auto &d : delays)
        d = -r_tau * lsps.ds * std::log(rng.uniform_open_zero());
    const double min_delay = *std::min_element(delays.begin(), delays.end());
    for (auto &d : delays)
        d -= min_delay;
    std::sort(delays.begin(), delays.end());

    // Powers
    std::vector<double> powers(n_clusters);
    double total = 0.0;
    for (std::size_t n = 0; n < n_clusters; ++n)
    {
        const double shadow_db = rng.normal(0.0, params.cluster_shadowing_std);
        powers[n] = std::exp(-delays[n] * (r_tau - 1.0) / (r_tau * lsps.ds)) * std::pow(10.0, -shadow_db / 10.0);
        total += powers[n];
    }
    for (auto &p : powers)
        p /= total;
    const double max_power = *std::max_element(powers.begin(), powers.end());

    // Angles (degrees until the final conversion)
    constexpr double rad2deg = 180.0 / std::numbers::pi;
    const double c_phi = detail::azimuth_scaling(n_clusters);
    const double c_theta = detail::zenith_scaling(n_clusters);
    const double los_aoa = frame.los_arrival.azimuth * rad2deg;
    const double los_aod = frame.los_departure.azimuth * rad2deg;
    const double los_zoa = frame.los_arrival.zenith * rad2deg;
    const double los_zod = frame.los_departure.zenith * rad2deg;
    const double zod_ray_spread = 0.375 * std::pow(10.0, params.zsd_log_mean);

    ClusterSet out;
    out.clusters.resize(n_clusters);
    for (std::size_t n = 0; n < n_clusters; ++n)
    {
        const double rel_log = -std::log(powers[n] / max_power);
        const double az_unit = 2.0 * std::sqrt(rel_log) / 1.4 / c_phi;
        const double zen_unit = rel_log / c_theta;

        const double aoa = rng.sign() * lsps.asa * az_unit + rng.normal(0.0, lsps.asa / 7.0) + los_aoa;
        const double aod = rng.sign() * lsps.asd * az_unit + rng.normal(0.0, lsps.asd / 7.0) + los_aod;
        const double zoa = rng.sign() * lsps.zsa * zen_unit + rng.normal(0.0, lsps.zsa / 7.0) + los_zoa;
        const double zod =
            rng.sign() * lsps.zsd * zen_unit + rng.normal(0.0, lsps.zsd / 7.0) + los_zod + params.zod_offset_deg;

        Cluster &c = out.clusters[n];
        c.delay = delays[n];
        c.power = powers[n];
        c.rays.resize(n_rays);
        for (std::size_t m = 0; m < n_rays; ++m)
        {
            const double alpha = detail::ray_offsets[(m / 2) % detail::ray_offsets.size()];
            const double ray_aoa = aoa + rng.sign() * params.c_asa_deg * alpha;
            const double ray_aod = aod + rng.sign() * params.c_asd_deg * alpha;
            const double ray_zoa = zoa + rng.sign() * params.c_zsa_deg * alpha;
            const double ray_zod = zod + rng.sign() * zod_ray_spread * alpha;
            c.rays[m].arrival = detail::to_angles(ray_zoa, ray_aoa);
            c.rays[m].departure = detail::to_angles(ray_zod, ray_aod);
            c.rays[m].initial_phase = rng.phase();
        }
    }
    return out;
}

// Realized power-weighted rms delay spread of a cluster set (cluster powers, no fading)
inline double cluster_rms_delay_spread(const ClusterSet &set)
{
    double p = 0.0, m1 = 0.0, m2 = 0.0;
    for (const auto &c : set.clusters)
    {
        p += c.power;
        m1 += c.power * c.delay;
        m2 += c.power * c.delay * c.delay;
    }
    if (!(p > 0.0))
        return 0.0;
    m1 /= p;
    return std::sqrt(std::max(0.0, m2 / p - m1 * m1));
}

} // namespace isac_eo

#endif
