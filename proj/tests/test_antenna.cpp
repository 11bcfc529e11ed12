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

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "isac_eo/antenna.hpp"

using namespace isac_eo;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace
{
constexpr double pi = std::numbers::pi;
constexpr double deg = pi / 180.0;

ElementPattern horn() { return ElementPattern::directional(8.0, 8.0, 30.0, {pi / 2.0, 0.0}); }
} // namespace

TEST_CASE("Antenna - Isotropic element")
{
    const auto p = ElementPattern::isotropic();
    std::mt19937_64 gen(1);
    std::uniform_real_distribution<double> zen(0.0, pi), az(-pi, pi);
    for (int i = 0; i < 100; ++i)
    {
        const SphericalAngles dir{zen(gen), az(gen)};
        CHECK(power_gain_db(p, dir) == 0.0);
        const auto f = field_pattern(p, dir);
        CHECK(f.theta == 1.0);
        CHECK(f.phi == 0.0);
    }
}

TEST_CASE("Antenna - Directional element")
{
    const auto p = horn();

    SECTION("Boresight is 0 dB")
    {
        CHECK(power_gain_db(p, {pi / 2.0, 0.0}) == 0.0);
    }

    SECTION("Half-power points")
    {
        CHECK_THAT(power_gain_db(p, {pi / 2.0, 4.0 * deg}), WithinAbs(-3.0, 1e-12));
        CHECK_THAT(power_gain_db(p, {pi / 2.0, -4.0 * deg}), WithinAbs(-3.0, 1e-12));
        CHECK_THAT(power_gain_db(p, {pi / 2.0 + 4.0 * deg, 0.0}), WithinAbs(-3.0, 1e-12));
        // Azimuth and zenith attenuations add
        CHECK_THAT(power_gain_db(p, {pi / 2.0 - 4.0 * deg, 4.0 * deg}), WithinAbs(-6.0, 1e-12));
    }

    SECTION("Floor at the maximum attenuation")
    {
        CHECK(power_gain_db(p, {pi / 2.0, pi}) == -30.0);
        CHECK(power_gain_db(p, {0.0, pi / 2.0}) == -30.0);
    }

    SECTION("Azimuth offset wraps across +-pi")
    {
        const auto back = ElementPattern::directional(8.0, 8.0, 30.0, {pi / 2.0, pi - 1.0 * deg});
        CHECK_THAT(power_gain_db(back, {pi / 2.0, -pi + 3.0 * deg}), WithinAbs(-3.0, 1e-9));
    }

    SECTION("Gain decreases away from boresight")
    {
        double prev = 1.0;
        for (double a = 0.0; a <= 30.0; a += 0.5)
        {
            const double g = power_gain_db(p, {pi / 2.0, a * deg});
            CHECK(g <= prev);
            prev = g;
        }
    }

    SECTION("Field pattern squares to the power gain")
    {
        for (double a : {0.0, 1.0, 4.0, 9.0, 45.0})
        {
            const SphericalAngles dir{pi / 2.0 + 0.5 * a * deg, a * deg};
            const auto f = field_pattern(p, dir);
            CHECK_THAT(10.0 * std::log10(f.theta * f.theta), WithinAbs(power_gain_db(p, dir), 1e-12));
            CHECK(f.phi == 0.0);
        }
    }

    SECTION("Invalid parameters")
    {
        CHECK_THROWS_AS(ElementPattern::directional(0.0, 8.0, 30.0, {}), std::invalid_argument);
        CHECK_THROWS_AS(ElementPattern::directional(8.0, 200.0, 30.0, {}), std::invalid_argument);
        CHECK_THROWS_AS(ElementPattern::directional(8.0, 8.0, 0.0, {}), std::invalid_argument);
        ArrayLayout empty{{}};
        CHECK_THROWS_AS(empty.validate(), std::invalid_argument);
    }
}

TEST_CASE("Antenna - Array and Doppler phases")
{
    const double lambda = 299792458.0 / 26e9;

    SECTION("Unit modulus and dot-product phase")
    {
        std::mt19937_64 gen(5);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        for (int i = 0; i < 1000; ++i)
        {
            const Vec3 r = normalized({u(gen), u(gen), u(gen)});
            const Vec3 d{u(gen) * lambda, u(gen) * lambda, u(gen) * lambda};
            const auto a = array_phase(r, d, lambda);
            CHECK_THAT(std::abs(a), WithinAbs(1.0, 1e-15));
            const double expected = std::remainder(2.0 * pi * dot(r, d) / lambda, 2.0 * pi);
            CHECK_THAT(std::remainder(std::arg(a) - expected, 2.0 * pi), WithinAbs(0.0, 1e-12));
        }
    }

    SECTION("Half-wavelength offset along the ray flips the sign")
    {
        const auto a = array_phase({1.0, 0.0, 0.0}, {lambda / 2.0, 0.0, 0.0}, lambda);
        CHECK_THAT(a.real(), WithinAbs(-1.0, 1e-15));
        CHECK_THAT(a.imag(), WithinAbs(0.0, 1e-15));
        CHECK(array_phase({0.0, 1.0, 0.0}, {lambda / 2.0, 0.0, 0.0}, lambda) == std::complex<double>(1.0, 0.0));
    }

    SECTION("Doppler phase rate from finite differences")
    {
        const Vec3 r{0.0, 1.0, 0.0};
        for (double v : {1.0, 3.0, 15.0, -8.0})
        {
            const Vec3 vel{0.0, v, 0.0};
            const double h = 1e-7;
            const double t0 = 0.25e-3;
            const auto ratio = doppler_phase(r, vel, lambda, t0 + h) / doppler_phase(r, vel, lambda, t0);
            const double rate = std::arg(ratio) / h;
            CHECK_THAT(rate, WithinRel(2.0 * pi * v / lambda, 1e-6));
        }
        // Static terminals or t = 0 give exactly 1
        CHECK(doppler_phase(r, {}, lambda, 12.5) == std::complex<double>(1.0, 0.0));
        CHECK(doppler_phase(r, {0.0, 5.0, 0.0}, lambda, 0.0) == std::complex<double>(1.0, 0.0));
    }
}
