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

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "isac_eo/metrics.hpp"

using namespace isac_eo;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace
{
Tap make_tap(double delay, double power)
{
    Tap t{delay, TapKind::nlos, TapMatrix(1, 1)};
    t.coeff(0, 0) = std::sqrt(power);
    return t;
}

std::vector<DelayPower> random_profile(std::mt19937_64 &gen, std::size_t n)
{
    std::uniform_real_distribution<double> d(0.0, 500e-9), p(0.0, 1.0);
    std::vector<DelayPower> out(n);
    for (auto &x : out)
        x = {d(gen), p(gen)};
    return out;
}

// Raw-moment evaluation in extended precision
double oracle_ds(const std::vector<DelayPower> &taps)
{
    long double p = 0, m1 = 0, m2 = 0;
    for (const auto &t : taps)
    {
        p += t.power;
        m1 += static_cast<long double>(t.power) * t.delay;
        m2 += static_cast<long double>(t.power) * t.delay * t.delay;
    }
    const long double mean = m1 / p;
    return static_cast<double>(std::sqrt(std::max(0.0L, m2 / p - mean * mean)));
}
} // namespace

TEST_CASE("Metrics - RMS delay spread")
{
    SECTION("Two equal taps")
    {
        for (double dt : {1e-9, 37.5e-9, 1e-6})
        {
            const std::vector<DelayPower> taps{{10e-9, 0.5}, {10e-9 + dt, 0.5}};
            CHECK_THAT(rms_delay_spread(taps), WithinRel(dt / 2.0, 1e-12));
        }
    }

    SECTION("Single tap")
    {
        const std::vector<DelayPower> taps{{96.95e-9, 0.7}};
        CHECK(rms_delay_spread(taps) == 0.0);
        // Zero-power taps do not contribute
        const std::vector<DelayPower> with_zero{{96.95e-9, 0.7}, {500e-9, 0.0}};
        CHECK(rms_delay_spread(with_zero) == 0.0);
    }

    SECTION("Agrees with the extended-precision raw-moment oracle")
    {
        std::mt19937_64 gen(4);
        for (int i = 0; i < 1000; ++i)
        {
            const auto taps = random_profile(gen, 1 + i % 40);
            CHECK_THAT(rms_delay_spread(taps), WithinAbs(oracle_ds(taps), 1e-9 * 500e-9));
        }
    }

    SECTION("Invariant under power scaling and delay translation")
    {
        std::mt19937_64 gen(8);
        for (int i = 0; i < 200; ++i)
        {
            const auto taps = random_profile(gen, 20);
            const double ds = rms_delay_spread(taps);
            for (double scale : {1e-12, 3.0, 1e9})
            {
                auto scaled = taps;
                for (auto &t : scaled)
                    t.power *= scale;
                CHECK_THAT(rms_delay_spread(scaled), WithinRel(ds, 1e-12));
            }
            for (double shift : {1e-9, 1e-6, 1e-3})
            {
                auto shifted = taps;
                for (auto &t : shifted)
                    t.delay += shift;
                CHECK_THAT(rms_delay_spread(shifted), WithinAbs(ds, 1e-9 * ds + shift * 1e-12));
            }
        }
    }

    SECTION("CIR overload uses mean element power")
    {
        Cir cir;
        cir.taps = {make_tap(0.0, 1.0), make_tap(20e-9, 1.0)};
        CHECK_THAT(rms_delay_spread(cir), WithinRel(10e-9, 1e-12));
    }

    SECTION("Errors")
    {
        CHECK_THROWS_AS(rms_delay_spread(std::vector<DelayPower>{}), EmptyInput);
        CHECK_THROWS_AS(rms_delay_spread(std::vector<DelayPower>{{1e-9, 0.0}}), EmptyInput);
        CHECK_THROWS_AS(rms_delay_spread(std::vector<DelayPower>{{1e-9, -1.0}, {2e-9, 2.0}}), std::invalid_argument);
    }
}

TEST_CASE("Metrics - PDP binning")
{
    SECTION("Conserves power")
    {
        std::mt19937_64 gen(12);
        std::uniform_real_distribution<double> d(0.0, 800e-9), p(0.0, 1.0);
        for (int i = 0; i < 200; ++i)
        {
            Cir cir;
            double total = 0.0;
            for (int k = 0; k < 30; ++k)
            {
                const double pw = p(gen);
                cir.taps.push_back(make_tap(d(gen), pw));
                total += pw;
            }
            for (double w : {1e-9, 1.0 / 600e6, 25e-9})
            {
                const Pdp pdp = compute_pdp(cir, w);
                CHECK_THAT(pdp.total_power(), WithinRel(total, 1e-12));
                CHECK(pdp.bin_width == w);
            }
        }
    }

    SECTION("Bin placement")
    {
        Cir cir;
        cir.taps = {make_tap(0.0, 1.0), make_tap(2.5e-9, 2.0), make_tap(2.9e-9, 3.0), make_tap(10e-9, 4.0)};
        const Pdp pdp = compute_pdp(cir, 1e-9);
        REQUIRE(pdp.bins.size() == 11);
        CHECK_THAT(pdp.bins[0].power, WithinRel(1.0, 1e-15));
        CHECK_THAT(pdp.bins[2].power, WithinRel(5.0, 1e-15));
        CHECK(pdp.bins[5].power == 0.0);
        CHECK_THAT(pdp.bins[10].power, WithinRel(4.0, 1e-15));
        CHECK_THAT(pdp.bins[2].delay, WithinRel(2e-9, 1e-15));
    }

    SECTION("Errors")
    {
        Cir cir;
        cir.taps = {make_tap(-1e-9, 1.0)};
        CHECK_THROWS_AS(compute_pdp(cir, 1e-9), std::invalid_argument);
        CHECK_THROWS_AS(compute_pdp(Cir{}, 0.0), std::invalid_argument);
    }
}

TEST_CASE("Metrics - Empirical CDF")
{
    SECTION("Distinct samples")
    {
        const auto cdf = empirical_cdf({3.0, 1.0, 2.0});
        REQUIRE(cdf.size() == 3);
        CHECK(cdf.values == std::vector<double>{1.0, 2.0, 3.0});
        CHECK_THAT(cdf.probabilities[0], WithinAbs(1.0 / 3.0, 1e-15));
        CHECK_THAT(cdf.probabilities[1], WithinAbs(2.0 / 3.0, 1e-15));
        CHECK(cdf.probabilities[2] == 1.0);
        CHECK(cdf.evaluate(0.5) == 0.0);
        CHECK(cdf.evaluate(2.0) == cdf.probabilities[1]);
        CHECK(cdf.evaluate(2.5) == cdf.probabilities[1]);
        CHECK(cdf.evaluate(10.0) == 1.0);
    }

    SECTION("Duplicates collapse into one step")
    {
        const auto cdf = empirical_cdf({1.0, 2.0, 1.0, 1.0});
        REQUIRE(cdf.size() == 2);
        CHECK(cdf.values == std::vector<double>{1.0, 2.0});
        CHECK(cdf.probabilities[0] == 0.75);
        CHECK(cdf.probabilities[1] == 1.0);
        const auto same = empirical_cdf({4.0, 4.0});
        REQUIRE(same.size() == 1);
        CHECK(same.probabilities[0] == 1.0);
    }

    SECTION("Close to the parent distribution")
    {
        std::mt19937_64 gen(21);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        std::vector<double> s(1000);
        for (auto &x : s)
            x = u(gen);
        const auto cdf = empirical_cdf(s);
        double sup = 0.0;
        for (std::size_t i = 0; i < cdf.size(); ++i)
        {
            const double below = i == 0 ? 0.0 : cdf.probabilities[i - 1];
            sup = std::max({sup, std::abs(cdf.probabilities[i] - cdf.values[i]), std::abs(below - cdf.values[i])});
        }
        CHECK(sup < 0.06);
        for (std::size_t i = 1; i < cdf.size(); ++i)
        {
            CHECK(cdf.values[i] > cdf.values[i - 1]);
            CHECK(cdf.probabilities[i] > cdf.probabilities[i - 1]);
        }
    }

    SECTION("Errors")
    {
        CHECK_THROWS_AS(empirical_cdf({}), EmptyInput);
        CHECK_THROWS_AS(empirical_cdf({1.0, std::nan("")}), std::invalid_argument);
        CHECK_THROWS_AS(mean(std::vector<double>{}), EmptyInput);
        const std::vector<double> v{1.0, 2.0, 6.0};
        CHECK(mean(v) == 3.0);
    }
}
