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

#ifndef ISAC_EO_CIR_ASSEMBLY_HPP
#define ISAC_EO_CIR_ASSEMBLY_HPP

// Composite NLOS channel impulse response:
//
//   H(tau, t) = sqrt(K_EO) sum_k H_k^EO(t) delta(tau - tau_EO,k) + sqrt(1 - K_EO) sum_n H_n(t) delta(tau - tau_n)
//
// Each of the two sums is first rescaled to unit power so that K_EO is exactly the EO share of
// the total NLOS power. Absolute path loss is not modeled.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "antenna.hpp"
#include "errors.hpp"
#include "geometry.hpp"
#include "materials.hpp"
#include "stochastic_clusters.hpp"

namespace isac_eo
{

// Complex coefficients indexed (u: rx element, s: tx element), row-major
class TapMatrix
{
  public:
    TapMatrix() = default;
    TapMatrix(std::size_t n_rx, std::size_t n_tx) : n_rx_(n_rx), n_tx_(n_tx), data_(n_rx * n_tx) {}

    std::size_t n_rx() const { return n_rx_; }
    std::size_t n_tx() const { return n_tx_; }

    std::complex<double> &operator()(std::size_t u, std::size_t s) { return data_[u * n_tx_ + s]; }
    const std::complex<double> &operator()(std::size_t u, std::size_t s) const { return data_[u * n_tx_ + s]; }

    const std::vector<std::complex<double>> &data() const { return data_; }

    // Mean |h|^2 over all (u, s) pairs
    double power() const
    {
        if (data_.empty())
            return 0.0;
        double p = 0.0;
        for (const auto &h : data_)
            p += std::norm(h);
        return p / static_cast<double>(data_.size());
    }

    TapMatrix &operator*=(double s)
    {
        for (auto &h : data_)
            h *= s;
        return *this;
    }

    friend bool operator==(const TapMatrix &, const TapMatrix &) = default;

  private:
    std::size_t n_rx_ = 0;
    std::size_t n_tx_ = 0;
    std::vector<std::complex<double>> data_;
};

enum class TapKind
{
    eo,
    nlos
};

inline const char *to_string(TapKind k) { return k == TapKind::eo ? "eo" : "nlos"; }

struct Tap
{
    double delay = 0.0; // s
    TapKind kind = TapKind::nlos;
    TapMatrix coeff;

    friend bool operator==(const Tap &, const Tap &) = default;
};

struct Cir
{
    std::vector<Tap> taps;
    double time = 0.0; // s, instant at which the Doppler terms were evaluated

    double power(TapKind kind) const
    {
        double p = 0.0;
        for (const auto &tap : taps)
            if (tap.kind == kind)
                p += tap.coeff.power();
        return p;
    }

    double total_power() const
    {
        double p = 0.0;
        for (const auto &tap : taps)
            p += tap.coeff.power();
        return p;
    }

    friend bool operator==(const Cir &, const Cir &) = default;
};

// Share of the total NLOS power carried by EO-reflected paths, in [0, 1]
class KeoFactor
{
  public:
    explicit KeoFactor(double value) : value_(value)
    {
        if (!(value >= 0.0 && value <= 1.0))
            throw std::invalid_argument("KeoFactor: value must be in [0, 1].");
    }

    double value() const { return value_; }

  private:
    double value_;
};

// Coefficient matrix of a single EO-reflected path:
//   F_rx(arrive)^T diag(R_par, -R_perp) F_tx(depart) exp(-j 2 pi d_EO / lambda0)
//     * array_phase(r_rx, d_u) array_phase(r_tx, d_s) doppler(r_tx, v_tx, t) doppler(r_rx, v_rx, t)
inline TapMatrix eo_coefficient(const LinkGeometry &link, const EoPathGeometry &geom, const Material &material,
                                const Antenna &tx, const Antenna &rx, double t)
{
    link.validate();
    material.validate();
    tx.validate();
    rx.validate();

    const double lambda0 = link.wavelength();
    const ReflectionCoefficients r = fresnel(geom.incidence_angle, material, link.carrier_freq);
    const FieldPattern f_rx = field_pattern(rx.pattern, geom.arrive);
    const FieldPattern f_tx = field_pattern(tx.pattern, geom.depart);
    const std::complex<double> polarization = f_rx.theta * r.par * f_tx.theta - f_rx.phi * r.perp * f_tx.phi;

    const std::complex<double> common = polarization * std::polar(1.0, -2.0 * std::numbers::pi * geom.d_eo / lambda0) *
                                        doppler_phase(geom.r_hat_tx_eo, link.tx_vel, lambda0, t) *
                                        doppler_phase(geom.r_hat_rx_eo, link.rx_vel, lambda0, t);

    TapMatrix h(rx.layout.size(), tx.layout.size());
    for (std::size_t u = 0; u < h.n_rx(); ++u)
    {
        const std::complex<double> rx_term = common * array_phase(geom.r_hat_rx_eo, rx.layout.elements[u], lambda0);
        for (std::size_t s = 0; s < h.n_tx(); ++s)
            h(u, s) = rx_term * array_phase(geom.r_hat_tx_eo, tx.layout.elements[s], lambda0);
    }
    return h;
}

// One NLOS tap per cluster: rays summed with their initial phases, element patterns, array and
// Doppler phases, scaled by sqrt(p_n / rays_per_cluster)
inline std::vector<Tap> cluster_taps(const ClusterSet &clusters, const LinkGeometry &link, const Antenna &tx,
                                     const Antenna &rx, double t)
{
    link.validate();
    tx.validate();
    rx.validate();

    const double lambda0 = link.wavelength();
    std::vector<Tap> taps;
    taps.reserve(clusters.clusters.size());
    for (const auto &cluster : clusters.clusters)
    {
        Tap tap{cluster.delay, TapKind::nlos, TapMatrix(rx.layout.size(), tx.layout.size())};
        if (cluster.rays.empty())
        {
            taps.push_back(std::move(tap));
            continue;
        }
        const double scale = std::sqrt(cluster.power / static_cast<double>(cluster.rays.size()));
        for (const auto &ray : cluster.rays)
        {
            const Vec3 r_rx = unit_vector(ray.arrival);
            const Vec3 r_tx = unit_vector(ray.departure);
            const double gain = field_pattern(rx.pattern, ray.arrival).theta * field_pattern(tx.pattern, ray.departure).theta;
            const std::complex<double> common = gain * std::polar(1.0, ray.initial_phase) *
                                                doppler_phase(r_tx, link.tx_vel, lambda0, t) *
                                                doppler_phase(r_rx, link.rx_vel, lambda0, t);
            for (std::size_t u = 0; u < tap.coeff.n_rx(); ++u)
            {
                const std::complex<double> rx_term = common * array_phase(r_rx, rx.layout.elements[u], lambda0);
                for (std::size_t s = 0; s < tap.coeff.n_tx(); ++s)
                    tap.coeff(u, s) += rx_term * array_phase(r_tx, tx.layout.elements[s], lambda0);
            }
        }
        tap.coeff *= scale;
        taps.push_back(std::move(tap));
    }
    return taps;
}

inline double total_power(const std::vector<Tap> &taps)
{
    double p = 0.0;
    for (const auto &tap : taps)
        p += tap.coeff.power();
    return p;
}

// Normalize-then-scale combination. A set whose weight is zero is dropped from the output.
// Taps are returned sorted by delay (stable, EO taps first on ties).
inline Cir combine_nlos(const std::vector<Tap> &eo_taps, const std::vector<Tap> &nlos_taps, KeoFactor k_eo, double t = 0.0)
{
    const double k = k_eo.value();
    const double p_eo = total_power(eo_taps);
    const double p_nlos = total_power(nlos_taps);
    if (k > 0.0 && !(p_eo > 0.0))
        throw DegenerateInput("combine_nlos: K_EO > 0 requires at least one EO tap with non-zero power.");
    if (k < 1.0 && !(p_nlos > 0.0))
        throw DegenerateInput("combine_nlos: K_EO < 1 requires at least one NLOS tap with non-zero power.");

    Cir cir;
    cir.time = t;
    auto append = [&](const std::vector<Tap> &taps, double weight, double power, TapKind kind)
    {
        if (weight == 0.0)
            return;
        const double scale = std::sqrt(weight / power);
        for (const auto &tap : taps)
        {
            if (tap.delay < 0.0)
                throw std::invalid_argument("combine_nlos: tap delays must be >= 0.");
            Tap out = tap;
            out.kind = kind;
            out.coeff *= scale;
            cir.taps.push_back(std::move(out));
        }
    };
    append(eo_taps, k, p_eo, TapKind::eo);
    append(nlos_taps, 1.0 - k, p_nlos, TapKind::nlos);
    std::stable_sort(cir.taps.begin(), cir.taps.end(), [](const Tap &a, const Tap &b) { return a.delay < b.delay; });
    return cir;
}

} // namespace isac_eo

#endif
