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

#ifndef ISAC_EO_GEOMETRY_HPP
#define ISAC_EO_GEOMETRY_HPP

// Single-bounce specular reflection off a vertical environment object (EO).
//
// The EO is an unbounded vertical plane. Its canonical public description is the
// pair of perpendicular horizontal distances (d_tx, d_rx) from the two terminals to
// the plane; internally the plane is held as a point and a horizontal unit normal.
// The reflected path is built with the image method: the Tx is mirrored across the
// plane and the path length is the straight distance from the image to the Rx.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "errors.hpp"
#include "vec3.hpp"

namespace isac_eo
{

inline constexpr double speed_of_light = 299792458.0; // m/s, exact

// Zenith in [0, pi], azimuth in (-pi, pi], both in radians
struct SphericalAngles
{
    double zenith = std::numbers::pi / 2.0;
    double azimuth = 0.0;

    friend bool operator==(const SphericalAngles &, const SphericalAngles &) = default;
};

// Wraps an angle in radians into (-pi, pi]
inline double wrap_azimuth(double a)
{
    constexpr double two_pi = 2.0 * std::numbers::pi;
    a = std::remainder(a, two_pi); // [-pi, pi]
    return a <= -std::numbers::pi ? a + two_pi : a;
}

// Direction angles of a (not necessarily unit) vector; the zero vector maps to the horizon at azimuth 0
inline SphericalAngles angles_of(const Vec3 &dir)
{
    const double rho = std::hypot(dir.x, dir.y);
    if (rho == 0.0 && dir.z == 0.0)
        return {};
    return {std::atan2(rho, dir.z), wrap_azimuth(std::atan2(dir.y, dir.x))};
}

inline Vec3 unit_vector(const SphericalAngles &a)
{
    const double st = std::sin(a.zenith);
    return {st * std::cos(a.azimuth), st * std::sin(a.azimuth), std::cos(a.zenith)};
}

struct LinkGeometry
{
    Vec3 tx_pos{};
    Vec3 rx_pos{};
    Vec3 tx_vel{};
    Vec3 rx_vel{};
    double carrier_freq = 0.0; // Hz

    double wavelength() const { return speed_of_light / carrier_freq; }
    double d_2d() const { return norm(horizontal(rx_pos - tx_pos)); }
    double d_3d() const { return norm(rx_pos - tx_pos); }
    double h_tx() const { return tx_pos.z; }
    double h_rx() const { return rx_pos.z; }

    void validate() const
    {
        if (!(carrier_freq > 0.0) || !std::isfinite(carrier_freq))
            throw std::invalid_argument("LinkGeometry: carrier frequency must be positive and finite.");
        if (!is_finite(tx_pos) || !is_finite(rx_pos) || !is_finite(tx_vel) || !is_finite(rx_vel))
            throw std::invalid_argument("LinkGeometry: positions and velocities must be finite.");
    }

    friend bool operator==(const LinkGeometry &, const LinkGeometry &) = default;
};

// Vertical reflecting plane: all points p with dot(normal, p - point) == 0.
// The normal is horizontal and unit length.
struct EoPlane
{
    Vec3 point{};
    Vec3 normal{1.0, 0.0, 0.0};

    double signed_distance(const Vec3 &p) const { return dot(normal, p - point); }

    void validate() const
    {
        if (!is_finite(point) || !is_finite(normal))
            throw std::invalid_argument("EoPlane: point and normal must be finite.");
        if (std::abs(normal.z) > 1e-12 || std::abs(norm(normal) - 1.0) > 1e-12)
            throw std::invalid_argument("EoPlane: normal must be a horizontal unit vector.");
    }

    friend bool operator==(const EoPlane &, const EoPlane &) = default;
};

struct EoPathGeometry
{
    double d_eo = 0.0;   // Tx -> EO -> Rx path length (m)
    double tau_eo = 0.0; // d_eo / c (s)
    SphericalAngles depart{};
    SphericalAngles arrive{};
    Vec3 r_hat_tx_eo{}; // unit, Tx toward the specular point
    Vec3 r_hat_rx_eo{}; // unit, Rx toward the specular point
    Vec3 specular_point{};
    double incidence_angle = 0.0;  // from the plane normal, [0, pi/2)
    double reflection_angle = 0.0; // equals incidence_angle up to rounding
};

// Mirror image of p across the plane
inline Vec3 image_point(const Vec3 &p, const EoPlane &plane)
{
    return p - (2.0 * plane.signed_distance(p)) * plane.normal;
}

// Vertical plane at perpendicular horizontal distances d_tx, d_rx from the Tx and Rx, with both
// terminals on the same side. Of the two mirror-symmetric solutions, the plane lies on the side
// reached by rotating the horizontal Tx->Rx direction by +90 degrees (counter-clockwise seen
// from above). The returned normal points from the terminals toward the plane.
inline EoPlane resolve_plane(const LinkGeometry &link, double d_tx, double d_rx)
{
    if (!(d_tx > 0.0) || !(d_rx > 0.0) || !std::isfinite(d_tx) || !std::isfinite(d_rx))
        throw InfeasibleGeometry("resolve_plane: d_tx and d_rx must be positive and finite.");

    const Vec3 axis = horizontal(link.rx_pos - link.tx_pos);
    const double d2d = norm(axis);
    const double diff = d_tx - d_rx;
    if (d2d * d2d < diff * diff)
        throw InfeasibleGeometry("resolve_plane: |d_tx - d_rx| exceeds the horizontal Tx-Rx distance.");

    // Co-located terminals: any plane at distance d_tx works, use the +x axis as the link direction
    const Vec3 u = d2d > 0.0 ? axis * (1.0 / d2d) : Vec3{1.0, 0.0, 0.0};
    const Vec3 w{-u.y, u.x, 0.0};

    const double along = d2d > 0.0 ? std::clamp(diff / d2d, -1.0, 1.0) : 0.0;
    const double across = std::sqrt(std::max(0.0, 1.0 - along * along));

    EoPlane plane;
    plane.normal = normalized(along * u + across * w);
    plane.point = horizontal(link.tx_pos) + d_tx * plane.normal;
    return plane;
}

// Path length from the offsets form in closed form:
// sqrt((h_tx - h_rx)^2 + (d_tx + d_rx)^2 + d_2D^2 - (d_tx - d_rx)^2)
inline double closed_form_eo_distance(const LinkGeometry &link, double d_tx, double d_rx)
{
    const double dh = link.h_tx() - link.h_rx();
    const double d2d = link.d_2d();
    const double sum = d_tx + d_rx;
    const double diff = d_tx - d_rx;
    return std::sqrt(dh * dh + sum * sum + d2d * d2d - diff * diff);
}

inline EoPathGeometry eo_path_geometry(const LinkGeometry &link, const EoPlane &plane)
{
    const double s_tx = plane.signed_distance(link.tx_pos);
    const double s_rx = plane.signed_distance(link.rx_pos);
    if (!(s_tx * s_rx > 0.0))
        throw InfeasibleGeometry("eo_path_geometry: Tx and Rx must lie strictly on the same side of the EO plane.");

    const Vec3 image = image_point(link.tx_pos, plane);
    const double t = s_tx / (s_tx + s_rx);
    if (!(t >= 0.0 && t <= 1.0))
        throw InfeasibleGeometry("eo_path_geometry: specular point outside the Tx/Rx projections.");

    EoPathGeometry g;
    g.d_eo = norm(link.rx_pos - image);
    g.tau_eo = g.d_eo / speed_of_light;
    g.specular_point = image + t * (link.rx_pos - image);
    // Snap onto the plane to remove rounding drift
    g.specular_point = g.specular_point - plane.signed_distance(g.specular_point) * plane.normal;

    g.r_hat_tx_eo = normalized(g.specular_point - link.tx_pos);
    g.r_hat_rx_eo = normalized(g.specular_point - link.rx_pos);
    g.depart = angles_of(g.r_hat_tx_eo);
    g.arrive = angles_of(g.r_hat_rx_eo);

    auto angle_from_normal = [&](const Vec3 &d)
    { return std::atan2(norm(cross(d, plane.normal)), std::abs(dot(d, plane.normal))); };
    g.incidence_angle = angle_from_normal(g.r_hat_tx_eo);
    g.reflection_angle = angle_from_normal(g.r_hat_rx_eo);
    return g;
}

// Convenience: offsets form straight to path geometry
inline EoPathGeometry eo_path_geometry(const LinkGeometry &link, double d_tx, double d_rx)
{
    return eo_path_geometry(link, resolve_plane(link, d_tx, d_rx));
}

} // namespace isac_eo

#endif
