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

#ifndef ISAC_EO_ANTENNA_HPP
#define ISAC_EO_ANTENNA_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "geometry.hpp"
#include "vec3.hpp"

namespace isac_eo
{

// Element field pattern, vertical polarization only (F_phi == 0).
// The directional pattern is parabolic in dB around the boresight:
//   A_dB = -min(12 (d_az / hpbw_az)^2, A_max) - min(12 (d_zen / hpbw_zen)^2, A_max),  floored at -A_max
struct ElementPattern
{
    enum class Kind
    {
        isotropic,
        directional
    };

    Kind kind = Kind::isotropic;
    double azimuth_hpbw_deg = 360.0;
    double zenith_hpbw_deg = 180.0;
    double max_attenuation_db = 30.0;
    SphericalAngles boresight{};

    static ElementPattern isotropic() { return {}; }

    static ElementPattern directional(double azimuth_hpbw_deg, double zenith_hpbw_deg, double max_attenuation_db,
                                      SphericalAngles boresight)
    {
        ElementPattern p{Kind::directional, azimuth_hpbw_deg, zenith_hpbw_deg, max_attenuation_db, boresight};
        p.validate();
        return p;
    }

    void validate() const
    {
        if (kind == Kind::isotropic)
            return;
        if (!(azimuth_hpbw_deg > 0.0 && azimuth_hpbw_deg <= 180.0) ||
            !(zenith_hpbw_deg > 0.0 && zenith_hpbw_deg <= 180.0))
            throw std::invalid_argument("ElementPattern: HPBW must be in (0, 180] degrees.");
        if (!(max_attenuation_db > 0.0) || !std::isfinite(max_attenuation_db))
            throw std::invalid_argument("ElementPattern: maximum attenuation must be positive.");
    }

    friend bool operator==(const ElementPattern &, const ElementPattern &) = default;
};

struct FieldPattern
{
    double theta = 0.0;
    double phi = 0.0;
};

inline double power_gain_db(const ElementPattern &p, const SphericalAngles &dir)
{
    if (p.kind == ElementPattern::Kind::isotropic)
        return 0.0;
    constexpr double rad2deg = 180.0 / std::numbers::pi;
    const double d_az = wrap_azimuth(dir.azimuth - p.boresight.azimuth) * rad2deg;
    const double d_zen = (dir.zenith - p.boresight.zenith) * rad2deg;
    const double a_az = std::min(12.0 * (d_az / p.azimuth_hpbw_deg) * (d_az / p.azimuth_hpbw_deg), p.max_attenuation_db);
    const double a_zen = std::min(12.0 * (d_zen / p.zenith_hpbw_deg) * (d_zen / p.zenith_hpbw_deg), p.max_attenuation_db);
    return -std::min(a_az + a_zen, p.max_attenuation_db);
}

inline FieldPattern field_pattern(const ElementPattern &p, const SphericalAngles &dir)
{
    if (p.kind == ElementPattern::Kind::isotropic)
        return {1.0, 0.0};
    return {std::pow(10.0, power_gain_db(p, dir) / 20.0), 0.0};
}

// Element positions relative to the array phase center (m)
struct ArrayLayout
{
    std::vector<Vec3> elements{Vec3{}};

    std::size_t size() const { return elements.size(); }

    void validate() const
    {
        if (elements.empty())
            throw std::invalid_argument("ArrayLayout: at least one element is required.");
        for (const auto &e : elements)
            if (!is_finite(e))
                throw std::invalid_argument("ArrayLayout: element offsets must be finite.");
    }

    friend bool operator==(const ArrayLayout &, const ArrayLayout &) = default;
};

// Pattern and layout of one terminal; all elements share the same pattern
struct Antenna
{
    ElementPattern pattern{};
    ArrayLayout layout{};

    void validate() const
    {
        pattern.validate();
        layout.validate();
    }

    friend bool operator==(const Antenna &, const Antenna &) = default;
};

// exp(j 2 pi (r_hat . offset) / lambda0)
inline std::complex<double> array_phase(const Vec3 &r_hat, const Vec3 &element_offset, double lambda0)
{
    return std::polar(1.0, 2.0 * std::numbers::pi * dot(r_hat, element_offset) / lambda0);
}

// exp(j 2 pi (r_hat . vel) / lambda0 * t)
inline std::complex<double> doppler_phase(const Vec3 &r_hat, const Vec3 &vel, double lambda0, double t)
{
    return std::polar(1.0, 2.0 * std::numbers::pi * dot(r_hat, vel) / lambda0 * t);
}

} // namespace isac_eo

#endif
