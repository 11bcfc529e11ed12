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

#ifndef ISAC_EO_METRICS_HPP
#define ISAC_EO_METRICS_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "cir_assembly.hpp"
#include "errors.hpp"

namespace isac_eo
{

struct DelayPower
{
    double delay = 0.0; // s
    double power = 0.0; // linear

    friend bool operator==(const DelayPower &, const DelayPower &) = default;
};

// Delay-binned power; bin k covers [k * bin_width, (k + 1) * bin_width) and is labeled by its start
struct Pdp
{
    std::vector<DelayPower> bins;
    double bin_width = 0.0;

    double total_power() const
    {
        double p = 0.0;
        for (const auto &b : bins)
            p += b.power;
        return p;
    }
};

// Tap power mean_{u,s} |h|^2 per tap, in tap order
inline std::vector<DelayPower> tap_powers(const Cir &cir)
{
    std::vector<DelayPower> out;
    out.reserve(cir.taps.size());
    for (const auto &tap : cir.taps)
        out.push_back({tap.delay, tap.coeff.power()});
    return out;
}

inline Pdp compute_pdp(const Cir &cir, double bin_width)
{
    if (!(bin_width > 0.0) || !std::isfinite(bin_width))
        throw std::invalid_argument("compute_pdp: bin width must be positive.");

    Pdp pdp;
    pdp.bin_width = bin_width;
    for (const auto &tap : cir.taps)
    {
        if (tap.delay < 0.0)
            throw std::invalid_argument("compute_pdp: tap delays must be >= 0.");
        const auto k = static_cast<std::size_t>(std::floor(tap.delay / bin_width));
        if (k >= pdp.bins.size())
        {
            const std::size_t old = pdp.bins.size();
            pdp.bins.resize(k + 1);
            for (std::size_t i = old; i <= k; ++i)
                pdp.bins[i].delay = static_cast<double>(i) * bin_width;
        }
        pdp.bins[k].power += tap.coeff.power();
    }
    return pdp;
}

// sqrt(sum p tau^2 / sum p - (sum p tau / sum p)^2), evaluated with centered moments.
// Delays are taken relative to the first tap with positive power, so a lone tap gives exactly 0.
inline double rms_delay_spread(std::span<const DelayPower> taps)
{
    double total = 0.0;
    double first = 0.0;
    double origin = 0.0;
    bool have_origin = false;
    for (const auto &t : taps)
    {
        if (t.power < 0.0 || !std::isfinite(t.power) || !std::isfinite(t.delay))
            throw std::invalid_argument("rms_delay_spread: tap powers must be finite and >= 0.");
        if (t.power > 0.0 && !have_origin)
        {
            origin = t.delay;
            have_origin = true;
        }
        total += t.power;
        first += t.power * (t.delay - origin);
    }
    if (!(total > 0.0))
        throw EmptyInput("rms_delay_spread: no tap with positive power.");

    const double mean = first / total;
    double second = 0.0;
    for (const auto &t : taps)
    {
        const double d = (t.delay - origin) - mean;
        second += t.power * d * d;
    }
    return std::sqrt(second / total);
}

inline double rms_delay_spread(const Cir &cir)
{
    const auto taps = tap_powers(cir);
    return rms_delay_spread(std::span<const DelayPower>(taps));
}

struct DsSample
{
    double rms_ds = 0.0; // s
    std::size_t drop_index = 0;

    friend bool operator==(const DsSample &, const DsSample &) = default;
};

// Empirical CDF: distinct sorted sample values, each with P(X <= value)
struct CdfTable
{
    std::vector<double> values;
    std::vector<double> probabilities;

    std::size_t size() const { return values.size(); }

    // Right-continuous step function
    double evaluate(double x) const
    {
        const auto it = std::upper_bound(values.begin(), values.end(), x);
        if (it == values.begin())
            return 0.0;
        return probabilities[static_cast<std::size_t>(it - values.begin()) - 1];
    }
};

inline CdfTable empirical_cdf(std::vector<double> samples)
{
    if (samples.empty())
        throw EmptyInput("empirical_cdf: no samples.");
    for (double s : samples)
        if (std::isnan(s))
            throw std::invalid_argument("empirical_cdf: NaN sample.");
    std::sort(samples.begin(), samples.end());

    const double n = static_cast<double>(samples.size());
    CdfTable cdf;
    for (std::size_t i = 0; i < samples.size(); ++i)
    {
        if (i + 1 < samples.size() && samples[i + 1] == samples[i])
            continue;
        cdf.values.push_back(samples[i]);
        cdf.probabilities.push_back(i + 1 == samples.size() ? 1.0 : static_cast<double>(i + 1) / n);
    }
    return cdf;
}

inline double mean(std::span<const double> v)
{
    if (v.empty())
        throw EmptyInput("mean: no samples.");
    double s = 0.0;
    for (double x : v)
        s += x;
    return s / static_cast<double>(v.size());
}

} // namespace isac_eo

#endif
