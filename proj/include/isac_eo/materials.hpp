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

#ifndef ISAC_EO_MATERIALS_HPP
#define ISAC_EO_MATERIALS_HPP

#include <cmath>
#include <complex>
#include <limits>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>

#include "errors.hpp"

namespace isac_eo
{

inline constexpr double vacuum_permittivity = 8.8541878128e-12; // F/m

// Reflecting surface: a perfect conductor or a homogeneous half-space dielectric
struct Material
{
    enum class Kind
    {
        pec,
        dielectric
    };

    Kind kind = Kind::pec;
    double eps_real = 1.0;     // relative permittivity, >= 1
    double conductivity = 0.0; // S/m, >= 0
    std::string name;

    static Material pec(std::string name = "metal") { return {Kind::pec, 1.0, 0.0, std::move(name)}; }

    static Material dielectric(double eps_real, double conductivity, std::string name = "dielectric")
    {
        Material m{Kind::dielectric, eps_real, conductivity, std::move(name)};
        m.validate();
        return m;
    }

    void validate() const
    {
        if (kind == Kind::pec)
            return;
        if (!(eps_real >= 1.0) || !std::isfinite(eps_real))
            throw std::invalid_argument("Material '" + name + "': eps_real must be >= 1.");
        if (!(conductivity >= 0.0) || !std::isfinite(conductivity))
            throw std::invalid_argument("Material '" + name + "': conductivity must be >= 0.");
    }

    friend bool operator==(const Material &, const Material &) = default;
};

// eta = eps_r - j sigma / (2 pi f eps0). A perfect conductor returns +inf, which fresnel()
// handles as the |eta| -> inf limit.
inline std::complex<double> complex_permittivity(const Material &m, double freq)
{
    if (!(freq > 0.0))
        throw DomainError("complex_permittivity: frequency must be positive.");
    if (m.kind == Material::Kind::pec)
        return {std::numeric_limits<double>::infinity(), 0.0};
    return {m.eps_real, -m.conductivity / (2.0 * std::numbers::pi * freq * vacuum_permittivity)};
}

struct ReflectionCoefficients
{
    std::complex<double> par;
    std::complex<double> perp;
};

// Half-space Fresnel coefficients, theta_i measured from the surface normal:
//   R_par  = (eta cos - sqrt(eta - sin^2)) / (eta cos + sqrt(eta - sin^2))
//   R_perp = (cos - sqrt(eta - sin^2)) / (cos + sqrt(eta - sin^2))
// A perfect conductor gives (1, -1).
inline ReflectionCoefficients fresnel(double theta_i, const Material &m, double freq)
{
    if (!(theta_i >= 0.0 && theta_i < std::numbers::pi / 2.0))
        throw DomainError("fresnel: incidence angle must be in [0, pi/2).");
    if (m.kind == Material::Kind::pec)
        return {{1.0, 0.0}, {-1.0, 0.0}};

    const std::complex<double> eta = complex_permittivity(m, freq);
    const double c = std::cos(theta_i);
    const double s = std::sin(theta_i);
    const std::complex<double> root = std::sqrt(eta - s * s);
    return {(eta * c - root) / (eta * c + root), (c - root) / (c + root)};
}

// ITU-R P.2040 material model: eps_r = a f^b, sigma = c f^d with f in GHz
struct ItuMaterialModel
{
    double a, b, c, d;

    Material at(double freq_hz, std::string name) const
    {
        const double f_ghz = freq_hz * 1e-9;
        return Material::dielectric(a * std::pow(f_ghz, b), c * std::pow(f_ghz, d), std::move(name));
    }
};

// Preset surfaces evaluated at the given carrier frequency.
//   metal    - perfect conductor
//   concrete - ITU-R P.2040 (a, b, c, d) = (5.24, 0, 0.0462, 0.7822)
//   glass    - ITU-R P.2040 (a, b, c, d) = (6.31, 0, 0.0036, 1.3394)
//   brick    - ITU-R P.2040 (a, b, c, d) = (3.91, 0, 0.0238, 0.16)
//   wood     - ITU-R P.2040 (a, b, c, d) = (1.99, 0, 0.0047, 1.0718)
inline std::map<std::string, Material> material_presets(double freq_hz)
{
    std::map<std::string, Material> out;
    out.emplace("metal", Material::pec("metal"));
    out.emplace("concrete", ItuMaterialModel{5.24, 0.0, 0.0462, 0.7822}.at(freq_hz, "concrete"));
    out.emplace("glass", ItuMaterialModel{6.31, 0.0, 0.0036, 1.3394}.at(freq_hz, "glass"));
    out.emplace("brick", ItuMaterialModel{3.91, 0.0, 0.0238, 0.16}.at(freq_hz, "brick"));
    out.emplace("wood", ItuMaterialModel{1.99, 0.0, 0.0047, 1.0718}.at(freq_hz, "wood"));
    return out;
}

} // namespace isac_eo

#endif
