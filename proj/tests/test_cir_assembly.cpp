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
#include <vector>

#include "isac_eo/cir_assembly.hpp"

using namespace isac_eo;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace
{
constexpr double pi = std::numbers::pi;

LinkGeometry street_canyon() { return {{0.0, 0.0, 1.6}, {0.0, 26.0, 1.6}, {}, {}, 26e9}; }

std::vector<Tap> draw_nlos(std::uint64_t seed, const LinkGeometry &link, const Antenna &a = {})
{
    const ScenarioParams p;
    RandomStream rng(seed);
    const auto lsps = draw_lsps(p, rng);
    return cluster_taps(generate_clusters(lsps, p, rng, ClusterFrame::from_link(link)), link, a, a, 0.0);
}

// Two-element arrays along x, half a wavelength apart
Antenna two_element(double lambda) { return {ElementPattern::isotropic(), {{Vec3{}, Vec3{lambda / 2.0, 0.0, 0.0}}}}; }
} // namespace

TEST_CASE("CIR - EO coefficient")
{
    const LinkGeometry link = street_canyon();
    const auto geom = eo_path_geometry(link, 6.5, 6.5);
    const Antenna iso{};

    SECTION("Perfect conductor, isotropic, static: unit modulus and propagation phase")
    {
        const TapMatrix h = eo_coefficient(link, geom, Material::pec(), iso, iso, 0.0);
        REQUIRE(h.n_rx() == 1);
        REQUIRE(h.n_tx() == 1);
        CHECK_THAT(std::abs(h(0, 0)), WithinAbs(1.0, 1e-15));
        const std::complex<double> expected = std::polar(1.0, -2.0 * pi * geom.d_eo / link.wavelength());
        CHECK_THAT(std::abs(h(0, 0) - expected), WithinAbs(0.0, 1e-12));
    }

    SECTION("Dielectric magnitude follows the parallel coefficient")
    {
        const auto m = Material::dielectric(4.0, 0.0);
        const TapMatrix h = eo_coefficient(link, geom, m, iso, iso, 0.0);
        CHECK_THAT(std::abs(h(0, 0)), WithinRel(std::abs(fresnel(geom.incidence_angle, m, 26e9).par), 1e-14));

        // Normal incidence: Tx and Rx at the same point in front of the wall
        LinkGeometry mono{{0.0, 0.0, 1.6}, {0.0, 1e-9, 1.6}, {}, {}, 26e9};
        const auto g0 = eo_path_geometry(mono, EoPlane{{-5.0, 0.0, 0.0}, {-1.0, 0.0, 0.0}});
        CHECK_THAT(g0.incidence_angle, WithinAbs(0.0, 1e-9));
        CHECK_THAT(std::abs(eo_coefficient(mono, g0, m, iso, iso, 0.0)(0, 0)), WithinAbs(1.0 / 3.0, 1e-12));
    }

    SECTION("Directional pattern applies its gain on both ends")
    {
        const auto horn = ElementPattern::directional(8.0, 8.0, 30.0, {pi / 2.0, geom.depart.azimuth + 4.0 * pi / 180.0});
        const Antenna tx{horn, {}};
        const TapMatrix h = eo_coefficient(link, geom, Material::pec(), tx, iso, 0.0);
        CHECK_THAT(20.0 * std::log10(std::abs(h(0, 0))), WithinAbs(-3.0, 1e-9));
    }

    SECTION("Array phases")
    {
        const double lambda = link.wavelength();
        const Antenna arr = two_element(lambda);
        const TapMatrix h = eo_coefficient(link, geom, Material::pec(), arr, arr, 0.0);
        REQUIRE(h.n_rx() == 2);
        REQUIRE(h.n_tx() == 2);
        const auto ref = h(0, 0);
        const Vec3 d{lambda / 2.0, 0.0, 0.0};
        CHECK_THAT(std::abs(h(1, 0) - ref * array_phase(geom.r_hat_rx_eo, d, lambda)), WithinAbs(0.0, 1e-12));
        CHECK_THAT(std::abs(h(0, 1) - ref * array_phase(geom.r_hat_tx_eo, d, lambda)), WithinAbs(0.0, 1e-12));
        CHECK_THAT(h.power(), WithinAbs(1.0, 1e-12));
    }

    SECTION("Doppler phase rate")
    {
        for (double v : {1.0, 5.0, 20.0})
        {
            LinkGeometry moving = link;
            moving.rx_vel = v * geom.r_hat_rx_eo;
            const double h_t = 1e-7;
            const double t0 = 1e-3;
            const auto a = eo_coefficient(moving, geom, Material::pec(), iso, iso, t0)(0, 0);
            const auto b = eo_coefficient(moving, geom, Material::pec(), iso, iso, t0 + h_t)(0, 0);
            CHECK_THAT(std::arg(b / a) / h_t, WithinRel(2.0 * pi * v / link.wavelength(), 1e-6));
        }
    }

    SECTION("Static link is time invariant")
    {
        const auto m = Material::dielectric(5.24, 0.5);
        const TapMatrix h0 = eo_coefficient(link, geom, m, iso, iso, 0.0);
        for (double t : {1e-6, 0.1, 3.0, 1e4})
            CHECK(eo_coefficient(link, geom, m, iso, iso, t) == h0);
        const auto nlos0 = draw_nlos(4, link);
        const ScenarioParams p;
        RandomStream rng(4);
        const auto lsps = draw_lsps(p, rng);
        const auto set = generate_clusters(lsps, p, rng, ClusterFrame::from_link(link));
        CHECK(cluster_taps(set, link, iso, iso, 2.5) == nlos0);
    }
}

TEST_CASE("CIR - Cluster taps")
{
    const LinkGeometry link = street_canyon();

    SECTION("One tap per cluster at the cluster delay")
    {
        const ScenarioParams p;
        RandomStream rng(2);
        const auto set = generate_clusters(draw_lsps(p, rng), p, rng);
        const auto taps = cluster_taps(set, link, {}, {}, 0.0);
        REQUIRE(taps.size() == set.clusters.size());
        for (std::size_t n = 0; n < taps.size(); ++n)
        {
            CHECK(taps[n].delay == set.clusters[n].delay);
            CHECK(taps[n].kind == TapKind::nlos);
        }
    }

    SECTION("Coherent rays give the cluster power exactly")
    {
        ClusterSet set;
        Cluster c;
        c.delay = 10e-9;
        c.power = 0.25;
        c.rays.assign(20, Ray{});
        set.clusters.push_back(c);
        const auto taps = cluster_taps(set, link, {}, {}, 0.0);
        // |sum of 20 unit phasors|^2 / 20 = 20
        CHECK_THAT(taps.front().coeff.power(), WithinRel(0.25 * 20.0, 1e-12));
    }

    SECTION("Ensemble power over random phases")
    {
        double sum = 0.0;
        const int n = 10000;
        for (int i = 0; i < n; ++i)
            sum += total_power(draw_nlos(1000 + i, link));
        CHECK_THAT(sum / n, WithinAbs(1.0, 0.02));
    }
}

TEST_CASE("CIR - Combination")
{
    const LinkGeometry link = street_canyon();
    const auto geom = eo_path_geometry(link, 6.5, 6.5);
    const std::vector<Tap> eo{{geom.tau_eo, TapKind::eo, eo_coefficient(link, geom, Material::dielectric(5.24, 0.5), {}, {}, 0.0)}};
    const auto nlos = draw_nlos(31, link);

    SECTION("EO share equals K_EO and total power is one")
    {
        for (double k : {0.0, 0.1, 0.25, 0.5, 0.75, 0.9, 1.0})
        {
            const Cir cir = combine_nlos(eo, nlos, KeoFactor(k));
            CHECK_THAT(cir.total_power(), WithinAbs(1.0, 1e-9));
            CHECK_THAT(cir.power(TapKind::eo) / cir.total_power(), WithinAbs(k, 1e-9));
            CHECK_THAT(cir.power(TapKind::nlos) / cir.total_power(), WithinAbs(1.0 - k, 1e-9));
        }
        CHECK(combine_nlos(eo, nlos, KeoFactor(0.0)).taps.size() == nlos.size());
        CHECK(combine_nlos(eo, nlos, KeoFactor(1.0)).taps.size() == 1);
        CHECK(combine_nlos(eo, nlos, KeoFactor(0.5)).taps.size() == nlos.size() + 1);
    }

    SECTION("Taps sorted by delay")
    {
        const Cir cir = combine_nlos(eo, nlos, KeoFactor(0.5), 0.0);
        for (std::size_t i = 1; i < cir.taps.size(); ++i)
            CHECK(cir.taps[i].delay >= cir.taps[i - 1].delay);
        std::size_t n_eo = 0;
        for (const auto &tap : cir.taps)
            if (tap.kind == TapKind::eo)
            {
                ++n_eo;
                CHECK(tap.delay == geom.tau_eo);
            }
        CHECK(n_eo == 1);
    }

    SECTION("Degenerate inputs")
    {
        CHECK_THROWS_AS(combine_nlos({}, nlos, KeoFactor(0.5)), DegenerateInput);
        CHECK_THROWS_AS(combine_nlos(eo, {}, KeoFactor(0.5)), DegenerateInput);
        CHECK_NOTHROW(combine_nlos({}, nlos, KeoFactor(0.0)));
        CHECK_NOTHROW(combine_nlos(eo, {}, KeoFactor(1.0)));
        std::vector<Tap> zero{{1e-9, TapKind::eo, TapMatrix(1, 1)}};
        CHECK_THROWS_AS(combine_nlos(zero, nlos, KeoFactor(0.3)), DegenerateInput);
        std::vector<Tap> negative = eo;
        negative.front().delay = -1e-9;
        CHECK_THROWS_AS(combine_nlos(negative, nlos, KeoFactor(0.3)), std::invalid_argument);
        CHECK_THROWS_AS(KeoFactor(1.5), std::invalid_argument);
        CHECK_THROWS_AS(KeoFactor(-0.01), std::invalid_argument);
        CHECK_THROWS_AS(KeoFactor(std::nan("")), std::invalid_argument);
    }
}
