/*
hypdel

Copyright 2026 The hypdel authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

   http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "hypdel/angle_functionals.hpp"
#include "hypdel/errors.hpp"
#include "hypdel/hyperbolic.hpp"
#include "hypdel/linalg.hpp"
#include "hypdel/surface_complex.hpp"

namespace hypdel {

namespace detail {

/** zeta(2), zeta(4), ...: direct sums with an Euler-Maclaurin tail. */
inline const std::array<double, 28>& zeta_even()
{
    static const std::array<double, 28> table = [] {
        std::array<double, 28> z{};
        for (int idx = 0; idx < 28; ++idx) {
            double s = 2.0 * (idx + 1);
            const int cutoff = 200;
            double sum = 0.0;
            for (int k = 1; k < cutoff; ++k) sum += std::pow(static_cast<double>(k), -s);
            double nd = cutoff;
            sum += std::pow(nd, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(nd, -s) +
                   s / 12.0 * std::pow(nd, -s - 1.0) -
                   s * (s + 1.0) * (s + 2.0) / 720.0 * std::pow(nd, -s - 3.0);
            z[idx] = sum;
        }
        return z;
    }();
    return table;
}

}  // namespace detail

/**
 * The volume kernel: -int_0^theta ln|2 sin t| dt. Odd and pi-periodic;
 * evaluated by reduction to [0, pi/2] and the series
 * theta (1 - ln 2 theta) + theta sum_n zeta(2n)/(n(2n+1)) (theta/pi)^{2n},
 * absolutely accurate to about 1e-15 after reduction.
 */
inline double lobachevsky(double theta)
{
    double t = std::remainder(theta, pi);  // in [-pi/2, pi/2]
    double sign = 1.0;
    if (t < 0.0) {
        t = -t;
        sign = -1.0;
    }
    if (t < 1e-300) return 0.0;
    const auto& zeta = detail::zeta_even();
    double u2 = (t / pi) * (t / pi);
    double series = 0.0, power = u2;
    for (int n = 1; n <= 28; ++n) {
        double term = zeta[n - 1] / (n * (2.0 * n + 1.0)) * power;
        series += term;
        if (term < 1e-19) break;
        power *= u2;
    }
    return sign * (t - t * std::log(2.0 * t) + t * series);
}

/** The three corner angles of one face, ordered by opposite side index. */
struct AngleData {
    std::array<double, 3> angle;

    double sigma() const { return angle[0] + angle[1] + angle[2]; }
    double curvature() const { return sigma() - pi; }
    bool realizable() const
    {
        for (double a : angle)
            if (!(a > 0.0 && a < pi)) return false;
        return sigma() < pi;
    }
};

inline AngleData face_angle_data(const AngleSystem& x, int face)
{
    return AngleData{{x.at(face, 0), x.at(face, 1), x.at(face, 2)}};
}

inline void require_realizable(const AngleData& d)
{
    require(d.realizable(), ErrorCode::NotRealizable,
            "angle data is not realizable as a hyperbolic triangle");
}

/**
 * Hyperbolic edge lengths from the angles: for the side opposite A,
 * cosh a = (cos A + cos B cos C) / (sin B sin C).
 * Computed through cosh a - 1 = (cos A + cos(B + C)) / (sin B sin C) to stay
 * accurate near the degenerate sigma -> pi limit, where lengths vanish.
 */
inline std::array<double, 3> triangle_lengths(const AngleData& d)
{
    require_realizable(d);
    double sigma = d.sigma();
    std::array<double, 3> l;
    for (int i = 0; i < 3; ++i) {
        double a = d.angle[i], b = d.angle[(i + 1) % 3], c = d.angle[(i + 2) % 3];
        double u = (std::cos(a) + std::cos(sigma - a)) / (std::sin(b) * std::sin(c));
        // u = cosh(edge) - 1 = 2 sinh^2(edge/2) > 0 for realizable data
        l[i] = std::log1p(u + std::sqrt(u * (2.0 + u)));
    }
    return l;
}

/**
 * Horosphere-truncated length of the prism edge over the given side:
 * 2 ln sinh(a/2) with a the hyperbolic length of that side. Negative for
 * short edges (a below 2 arcsinh 1), positive for long ones.
 */
inline double truncated_length(const AngleData& d, int side)
{
    double a = triangle_lengths(d)[side];
    return 2.0 * std::log(std::sinh(a / 2.0));
}

/**
 * The same quantity with the angle and curvature dependence decoupled:
 * ln((cos(A - k) - cos A)/k) + ln(-k) - ln 2 - ln sin B - ln sin C,
 * where k is the face curvature. The first term tends to ln sin A as the
 * curvature vanishes.
 */
inline double truncated_length_decoupled(const AngleData& d, int side)
{
    require_realizable(d);
    double k = d.curvature();
    double a = d.angle[side], b = d.angle[(side + 1) % 3], c = d.angle[(side + 2) % 3];
    return std::log((std::cos(a - k) - std::cos(a)) / k) + std::log(-k) - std::log(2.0) -
           std::log(std::sin(b)) - std::log(std::sin(c));
}

/** Ideal point above a Poincare-disk point: where the perpendicular geodesic
 *  through it meets the upper hemisphere at infinity. */
inline Vec3 lift_to_sphere(Vec2 u, bool upper = true)
{
    double r2 = dot(u, u);
    double w = 1.0 / (1.0 + r2);
    return {2.0 * u[0] * w, 2.0 * u[1] * w, (upper ? 1.0 : -1.0) * (1.0 - r2) * w};
}

namespace detail {

/** Rotation taking the unit vector p to the north pole. */
inline Mat3 rotate_to_north(Vec3 p)
{
    if (p[2] > 1.0 - 1e-14) return Mat3::identity();
    if (p[2] < -1.0 + 1e-14) return rotation_about({1.0, 0.0, 0.0}, pi);
    Vec3 axis = normalized(cross(p, Vec3{0.0, 0.0, 1.0}));
    return rotation_about(axis, std::acos(clamp_unit(p[2])));
}

inline std::complex<double> stereographic(Vec3 p)
{
    return {p[0] / (1.0 - p[2]), p[1] / (1.0 - p[2])};
}

}  // namespace detail

/**
 * Volume of the ideal tetrahedron spanned by four ideal points on the unit
 * sphere: three are sent to 0, 1, infinity; the dihedral angle parameters are
 * the Euclidean angles of the triangle formed by 0, 1 and the image of the
 * fourth point, and the volume is the sum of the kernel at those angles.
 */
inline double ideal_tetrahedron_volume(Vec3 p0, Vec3 p1, Vec3 p2, Vec3 p3)
{
    Mat3 rot = detail::rotate_to_north(p3);
    std::complex<double> z0 = detail::stereographic(rot * p0);
    std::complex<double> z1 = detail::stereographic(rot * p1);
    std::complex<double> z2 = detail::stereographic(rot * p2);
    std::complex<double> w = (z2 - z0) / (z1 - z0);
    double alpha = std::fabs(std::arg(w));
    double beta = std::fabs(std::arg(1.0 - w));
    double gamma = pi - alpha - beta;
    if (gamma < 0.0) gamma = 0.0;
    return lobachevsky(alpha) + lobachevsky(beta) + lobachevsky(gamma);
}

/**
 * Volume of the ideal prism over a triangle with the given angles: the
 * triangle is embedded in the equatorial plane, its vertices are lifted to
 * the sphere at infinity both ways, and the prism splits into three ideal
 * tetrahedra along a staircase of diagonals.
 */
inline double prism_volume(const AngleData& d)
{
    auto l = triangle_lengths(d);
    Vec2 v0{0.0, 0.0};
    Vec2 v1{std::tanh(l[2] / 2.0), 0.0};
    double r2d = std::tanh(l[1] / 2.0);
    Vec2 v2{r2d * std::cos(d.angle[0]), r2d * std::sin(d.angle[0])};
    std::array<Vec3, 3> up = {lift_to_sphere(v0, true), lift_to_sphere(v1, true),
                              lift_to_sphere(v2, true)};
    std::array<Vec3, 3> low = {lift_to_sphere(v0, false), lift_to_sphere(v1, false),
                               lift_to_sphere(v2, false)};
    return ideal_tetrahedron_volume(up[0], up[1], up[2], low[0]) +
           ideal_tetrahedron_volume(up[1], up[2], low[0], low[1]) +
           ideal_tetrahedron_volume(up[2], low[0], low[1], low[2]);
}

// == Objective over the conformal class ==

struct ObjectiveOptions {
    bool with_hessian = true;
    bool hessian_fd = false;  // face-local finite differences instead of the closed form
};

struct ObjectiveEval {
    double h = 0.0;
    std::vector<double> gradient;  // per edge, the derivative along w_e
    std::vector<double> hessian;   // |E| x |E| row-major; entries only between edges sharing a face
};

/**
 * H alone; minus infinity outside the realizable domain (used by line
 * searches). Angles below roughly 1e-7 exhaust the precision of the lifted
 * ideal points; such evaluations also report minus infinity.
 */
inline double objective_value(const AngleSystem& x, const SurfaceComplex& c)
{
    check_angle_dims(x, c);
    if (!(domain_margin(x, c) > 0.0)) return -std::numeric_limits<double>::infinity();
    double h = 0.0;
    for (int f = 0; f < c.face_count; ++f) h += prism_volume(face_angle_data(x, f));
    if (std::isnan(h)) return -std::numeric_limits<double>::infinity();
    return h;
}

namespace detail {

/** Per-face truncated lengths and their partials with respect to the angles. */
struct FaceStar {
    std::array<double, 3> star;                 // truncated length per side
    std::array<std::array<double, 3>, 3> dstar;  // dstar[m][n] = d star_m / d angle_n
};

inline FaceStar face_star_derivatives(const AngleData& d)
{
    FaceStar r;
    double sigma = d.sigma();
    std::array<double, 3> sins, coss;
    for (int i = 0; i < 3; ++i) {
        sins[i] = std::sin(d.angle[i]);
        coss[i] = std::cos(d.angle[i]);
    }
    for (int m = 0; m < 3; ++m) {
        int j = (m + 1) % 3, k = (m + 2) % 3;
        double rest = sigma - d.angle[m];
        double n_m = coss[m] + std::cos(rest);
        r.star[m] = std::log(n_m) - std::log(2.0 * sins[j] * sins[k]);
        double srest = std::sin(rest);
        r.dstar[m][m] = -sins[m] / n_m;
        r.dstar[m][j] = -srest / n_m - coss[j] / sins[j];
        r.dstar[m][k] = -srest / n_m - coss[k] / sins[k];
    }
    return r;
}

inline FaceStar face_star_fd(const AngleData& d)
{
    FaceStar r;
    auto star_of = [](const AngleData& dd) {
        std::array<double, 3> s;
        for (int m = 0; m < 3; ++m) s[m] = truncated_length(dd, m);
        return s;
    };
    r.star = star_of(d);
    const double h = 1e-6;
    for (int n = 0; n < 3; ++n) {
        AngleData dp = d, dm = d;
        dp.angle[n] += h;
        dm.angle[n] -= h;
        auto sp = star_of(dp), sm = star_of(dm);
        for (int m = 0; m < 3; ++m) r.dstar[m][n] = (sp[m] - sm[m]) / (2.0 * h);
    }
    return r;
}

}  // namespace detail

/**
 * The hyperbolic-volume objective H(x) = sum over faces of the prism volume,
 * with its exact differential and Hessian in the conformal coordinates.
 *
 * By the Schlafli identity the derivative along w_e is half the difference
 * of the truncated lengths of e computed inside its two faces, so the
 * gradient vanishes exactly when the two lengths of every edge agree. The
 * Hessian couples only edges sharing a face and is negative definite on the
 * realizable domain.
 */
inline ObjectiveEval volume_objective(const AngleSystem& x, const SurfaceComplex& c,
                                      ObjectiveOptions opts = {})
{
    check_angle_dims(x, c);
    require(domain_margin(x, c) >= 1e-12, ErrorCode::OutsideDomain,
            "angle system is not strictly inside the realizable domain");
    int E = c.edge_count();
    ObjectiveEval r;
    r.gradient.assign(E, 0.0);
    if (opts.with_hessian) r.hessian.assign(static_cast<std::size_t>(E) * E, 0.0);

    for (int f = 0; f < c.face_count; ++f) {
        AngleData d = face_angle_data(x, f);
        r.h += prism_volume(d);
        detail::FaceStar fs =
            opts.with_hessian && opts.hessian_fd ? detail::face_star_fd(d)
                                                 : detail::face_star_derivatives(d);
        std::array<int, 3> edge;
        std::array<double, 3> sign;
        for (int m = 0; m < 3; ++m) {
            int side = 3 * f + m;
            edge[m] = c.edge_of_side[side];
            sign[m] = c.side_sign(side);
            r.gradient[edge[m]] += sign[m] * fs.star[m] / 2.0;
        }
        if (!opts.with_hessian) continue;
        for (int m = 0; m < 3; ++m) {
            for (int mp = 0; mp < 3; ++mp) {
                double dmm = 0.0;
                for (int n = 0; n < 3; ++n)
                    if (n != mp) dmm += fs.dstar[m][n];
                r.hessian[static_cast<std::size_t>(edge[m]) * E + edge[mp]] +=
                    sign[m] * sign[mp] * dmm / 4.0;
            }
        }
    }
    return r;
}

/** Edge lengths as seen from both sides, and their largest mismatch. */
struct EdgeLengths {
    std::vector<double> side1, side2;
    double residual = 0.0;  // max |side1 - side2|

    std::vector<double> mean() const
    {
        std::vector<double> m(side1.size());
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = (side1[i] + side2[i]) / 2.0;
        return m;
    }
};

inline EdgeLengths edge_lengths(const AngleSystem& x, const SurfaceComplex& c)
{
    check_angle_dims(x, c);
    int E = c.edge_count();
    EdgeLengths r;
    r.side1.resize(E);
    r.side2.resize(E);
    std::vector<std::array<double, 3>> per_face(c.face_count);
    for (int f = 0; f < c.face_count; ++f) per_face[f] = triangle_lengths(face_angle_data(x, f));
    for (int e = 0; e < E; ++e) {
        int s1 = c.edge_sides[e][0], s2 = c.edge_sides[e][1];
        r.side1[e] = per_face[s1 / 3][s1 % 3];
        r.side2[e] = per_face[s2 / 3][s2 % 3];
        r.residual = std::max(r.residual, std::fabs(r.side1[e] - r.side2[e]));
    }
    return r;
}

}  // namespace hypdel
