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

#ifndef ISAC_EO_EXPERIMENT_HPP
#define ISAC_EO_EXPERIMENT_HPP

// Monte Carlo runner. Drop i always draws from RandomStream::for_drop(seed, i), so every grid
// value of a sweep sees the same stochastic clusters (common random numbers) and results do not
// depend on how drops are scheduled across threads.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "antenna.hpp"
#include "cir_assembly.hpp"
#include "config.hpp"
#include "geometry.hpp"
#include "materials.hpp"
#include "metrics.hpp"
#include "random.hpp"
#include "scenario_library.hpp"
#include "stochastic_clusters.hpp"

namespace isac_eo
{

struct ResolvedEo
{
    EoPlane plane;
    Material material;
    EoPathGeometry path;
};

struct DropResult
{
    Cir cir;
    DsSample ds;
    LspSet lsps;
};

// A validated SimConfig with planes, materials, antennas and scenario resolved
class Experiment
{
  public:
    Experiment(SimConfig config, const ScenarioLibrary &scenarios) : config_(std::move(config)), k_eo_(config_.k_eo)
    {
        const SimConfig &c = config_;
        c.link.validate();
        if (!(c.bandwidth > 0.0))
            throw std::invalid_argument("config: bandwidth must be positive.");
        if (c.num_drops == 0)
            throw std::invalid_argument("config: num_drops must be > 0.");
        if (!(c.effective_bin_width() > 0.0))
            throw std::invalid_argument("config: bin width must be positive.");
        if (!std::isfinite(c.time))
            throw std::invalid_argument("config: time must be finite.");
        if (c.sweep && c.sweep->grid.empty())
            throw std::invalid_argument("config: sweep grid must not be empty.");

        scenario_ = c.scenario_params ? *c.scenario_params : scenarios.at(c.scenario);
        scenario_.validate();

        auto materials = material_presets(c.link.carrier_freq);
        for (const auto &[name, m] : c.materials)
        {
            m.validate();
            materials[name] = m;
        }

        for (const auto &e : c.eo)
        {
            const auto it = materials.find(e.material);
            if (it == materials.end())
                throw std::invalid_argument("config: unknown material '" + e.material + "'");
            EoPlane plane;
            if (const auto *off = std::get_if<EoOffsets>(&e.placement))
                plane = resolve_plane(c.link, off->d_tx, off->d_rx);
            else
            {
                plane = std::get<EoPlane>(e.placement);
                plane.validate();
            }
            eo_.push_back({plane, it->second, eo_path_geometry(c.link, plane)});
        }
        std::optional<SphericalAngles> tx_to_eo, rx_to_eo;
        if (!eo_.empty())
        {
            tx_to_eo = eo_.front().path.depart;
            rx_to_eo = eo_.front().path.arrive;
        }
        tx_ = resolve_antenna(c.tx_antenna, angles_of(c.link.rx_pos - c.link.tx_pos), tx_to_eo);
        rx_ = resolve_antenna(c.rx_antenna, angles_of(c.link.tx_pos - c.link.rx_pos), rx_to_eo);

        if (k_eo_.value() > 0.0 && eo_.empty())
            throw DegenerateInput("config: K_EO > 0 requires at least one EO.");
    }

    const SimConfig &config() const { return config_; }
    const ScenarioParams &scenario() const { return scenario_; }
    const std::vector<ResolvedEo> &eo() const { return eo_; }
    const Antenna &tx_antenna() const { return tx_; }
    const Antenna &rx_antenna() const { return rx_; }

    std::vector<Tap> eo_taps(double t) const
    {
        std::vector<Tap> taps;
        for (const auto &e : eo_)
            taps.push_back({e.path.tau_eo, TapKind::eo, eo_coefficient(config_.link, e.path, e.material, tx_, rx_, t)});
        return taps;
    }

    DropResult run_drop(std::size_t drop_index) const { return run_drop(drop_index, config_.time); }

    DropResult run_drop(std::size_t drop_index, double t) const
    {
        RandomStream rng = RandomStream::for_drop(config_.seed, drop_index);
        DropResult r;
        r.lsps = draw_lsps(scenario_, rng);
        const ClusterSet clusters = generate_clusters(r.lsps, scenario_, rng, ClusterFrame::from_link(config_.link));
        const auto nlos = cluster_taps(clusters, config_.link, tx_, rx_, t);
        r.cir = combine_nlos(eo_taps(t), nlos, k_eo_, t);
        r.ds = {rms_delay_spread(r.cir), drop_index};
        return r;
    }

  private:
    static Antenna resolve_antenna(const AntennaConfig &a, const SphericalAngles &toward_peer,
                                   const std::optional<SphericalAngles> &toward_eo)
    {
        Antenna out{a.pattern, a.layout};
        switch (a.boresight)
        {
        case BoresightMode::eo:
            out.pattern.boresight = toward_eo.value_or(toward_peer);
            break;
        case BoresightMode::link:
            out.pattern.boresight = toward_peer;
            break;
        case BoresightMode::fixed:
            if (!(a.fixed_zenith_deg >= 0.0 && a.fixed_zenith_deg <= 180.0) || !std::isfinite(a.fixed_azimuth_deg))
                throw std::invalid_argument("config: fixed boresight zenith must be in [0, 180] degrees.");
            out.pattern.boresight = {a.fixed_zenith_deg * std::numbers::pi / 180.0,
                                     wrap_azimuth(a.fixed_azimuth_deg * std::numbers::pi / 180.0)};
            break;
        }
        out.validate();
        return out;
    }

    SimConfig config_;
    KeoFactor k_eo_;
    ScenarioParams scenario_;
    Antenna tx_;
    Antenna rx_;
    std::vector<ResolvedEo> eo_;
};

// Runs fn(i) for i in [0, n) on up to `threads` workers. The exception thrown for the lowest
// index is rethrown after all workers finish.
inline void parallel_for(std::size_t n, std::size_t threads, const std::function<void(std::size_t)> &fn)
{
    threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(n, 1));
    if (threads == 1)
    {
        for (std::size_t i = 0; i < n; ++i)
            fn(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::mutex mtx;
    std::optional<std::size_t> failed_index;
    std::exception_ptr failure;
    {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (std::size_t w = 0; w < threads; ++w)
            pool.emplace_back(
                [&]
                {
                    for (std::size_t i = next++; i < n; i = next++)
                    {
                        try
                        {
                            fn(i);
                        }
                        catch (...)
                        {
                            std::lock_guard lock(mtx);
                            if (!failed_index || i < *failed_index)
                            {
                                failed_index = i;
                                failure = std::current_exception();
                            }
                        }
                    }
                });
    }
    if (failure)
        std::rethrow_exception(failure);
}

inline std::size_t default_thread_count()
{
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : hc;
}

// Delay-spread samples of drops 0 .. num_drops-1, ordered by drop index
inline std::vector<DsSample> run_monte_carlo(const Experiment &exp, std::size_t threads = default_thread_count())
{
    std::vector<DsSample> out(exp.config().num_drops);
    parallel_for(out.size(), threads, [&](std::size_t i) { out[i] = exp.run_drop(i).ds; });
    return out;
}

// Config with one sweep parameter replaced. d_rx applies to the first EO, which must be in
// offsets form.
inline SimConfig with_grid_value(SimConfig c, SweepParameter parameter, double value)
{
    if (parameter == SweepParameter::k_eo)
    {
        c.k_eo = value;
        return c;
    }
    if (c.eo.empty())
        throw std::invalid_argument("d_rx sweep requires at least one EO.");
    auto *off = std::get_if<EoOffsets>(&c.eo.front().placement);
    if (off == nullptr)
        throw std::invalid_argument("d_rx sweep requires the first EO in d_tx/d_rx form.");
    off->d_rx = value;
    return c;
}

struct GridResult
{
    double value = 0.0;
    std::vector<DsSample> samples;
    std::optional<CdfTable> cdf;
    double mean_ds = 0.0;
    double median_ds = 0.0;
    std::string error; // non-empty when this grid value could not be simulated
};

struct SweepResult
{
    SweepParameter parameter = SweepParameter::k_eo;
    std::vector<GridResult> grid;
};

inline double median(std::vector<double> v)
{
    if (v.empty())
        throw EmptyInput("median: no samples.");
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

inline SweepResult run_sweep(const SimConfig &config, const ScenarioLibrary &scenarios,
                             std::size_t threads = default_thread_count())
{
    if (!config.sweep)
        throw std::invalid_argument("run_sweep: config has no sweep section.");
    if (config.sweep->grid.empty())
        throw std::invalid_argument("run_sweep: sweep grid must not be empty.");

    SweepResult result;
    result.parameter = config.sweep->parameter;
    for (double value : config.sweep->grid)
    {
        GridResult g;
        g.value = value;
        try
        {
            SimConfig c = with_grid_value(config, config.sweep->parameter, value);
            c.sweep.reset();
            const Experiment exp(std::move(c), scenarios);
            g.samples = run_monte_carlo(exp, threads);
            std::vector<double> ds;
            ds.reserve(g.samples.size());
            for (const auto &s : g.samples)
                ds.push_back(s.rms_ds);
            g.cdf = empirical_cdf(ds);
            g.mean_ds = mean(ds);
            g.median_ds = median(ds);
        }
        catch (const InfeasibleGeometry &e)
        {
            g.error = e.what();
        }
        catch (const DegenerateInput &e)
        {
            g.error = e.what();
        }
        result.grid.push_back(std::move(g));
    }
    return result;
}

} // namespace isac_eo

#endif
