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

#include <cmath>

#include "hypdel/errors.hpp"
#include "hypdel/linalg.hpp"

namespace hypdel {

// Hyperboloid model of H^2 in Minkowski R^{2,1}: points x with <x,x> = -1,
// x0 > 0, where <x,y> = -x0 y0 + x1 y1 + x2 y2. Orientation-preserving
// isometries are Lorentz matrices (columns form a Minkowski-orthonormal frame).

inline double minkowski_dot(Vec3 a, Vec3 b) { return -a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

inline Vec3 hyperboloid_origin() { return {1.0, 0.0, 0.0}; }

inline double hyperbolic_distance(Vec3 a, Vec3 b)
{
    double c = -minkowski_dot(a, b);
    return std::acosh(c < 1.0 ? 1.0 : c);
}

/** Unit spacelike tangent at p pointing toward q (p != q). */
inline Vec3 tangent_toward(Vec3 p, Vec3 q)
{
    double c = minkowski_dot(q, p);
    Vec3 t = q + c * p;
    double n = std::sqrt(minkowski_dot(t, t));
    return (1.0 / n) * t;
}

/** Tangent at p rotated a quarter turn counterclockwise. */
inline Vec3 tangent_perp(Vec3 p, Vec3 t)
{
    Vec3 c = cross(p, t);
    Vec3 n = {-c[0], c[1], c[2]};
    double s = std::sqrt(minkowski_dot(n, n));
    return (1.0 / s) * n;
}

/** Geodesic from p with unit tangent t, arc length s. */
inline Vec3 geodesic_point(Vec3 p, Vec3 t, double s)
{
    return std::cosh(s) * p + std::sinh(s) * t;
}

/** Orthonormal Lorentz frame [p | t | perp(t)]; maps the origin frame onto (p, t). */
inline Mat3 lorentz_frame(Vec3 p, Vec3 t) { return Mat3::from_columns(p, t, tangent_perp(p, t)); }

/** Inverse of a Lorentz matrix: eta * M^T * eta with eta = diag(-1,1,1). */
inline Mat3 lorentz_inverse(const Mat3& a)
{
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = (i == 0) != (j == 0) ? -1.0 : 1.0;
            r(i, j) = s * a(j, i);
        }
    return r;
}

/** Hyperboloid -> Poincare disk. */
inline Vec2 to_poincare_disk(Vec3 p) { return {p[1] / (1.0 + p[0]), p[2] / (1.0 + p[0])}; }

/** Poincare disk -> hyperboloid. */
inline Vec3 from_poincare_disk(Vec2 u)
{
    double r2 = dot(u, u);
    double d = 1.0 - r2;
    return {(1.0 + r2) / d, 2.0 * u[0] / d, 2.0 * u[1] / d};
}

// == Euclidean circles in the Poincare chart ==
//
// Circumscribing disk boundaries and geodesics are Euclidean circles or lines
// in the chart, so angle computations reduce to circle/circle intersections.

struct CircleOrLine {
    bool is_line = false;
    // circle: center, radius; line: point + unit direction
    Vec2 center{};
    double radius = 0.0;
    Vec2 point{};
    Vec2 direction{};

    /** Signed side value; zero on the curve, sign distinguishes the two sides. */
    double side_value(Vec2 x) const
    {
        if (is_line) return cross(direction, x - point);
        Vec2 d = x - center;
        return dot(d, d) - radius * radius;
    }

    /** Unit normal at a point p of the curve, pointing toward positive side values. */
    Vec2 normal_at(Vec2 p) const
    {
        if (is_line) return perp(direction);
        return normalized(p - center);
    }
};

/**
 * Circle through three points, with a line fallback when the circumcenter
 * system determinant falls below det_eps. Throws DegenerateCircle if the
 * points are too close to define a line either.
 */
inline CircleOrLine circle_through(Vec2 a, Vec2 b, Vec2 c, double det_eps = 1e-12)
{
    Vec2 ab = b - a, ac = c - a;
    double det = 2.0 * cross(ab, ac);
    if (std::fabs(det) >= det_eps) {
        double s1 = dot(ab, ab), s2 = dot(ac, ac);
        Vec2 center = a + (1.0 / det) * Vec2{ac[1] * s1 - ab[1] * s2, ab[0] * s2 - ac[0] * s1};
        CircleOrLine r;
        r.center = center;
        r.radius = norm(a - center);
        return r;
    }
    Vec2 d = norm(ab) >= norm(ac) ? ab : ac;
    if (norm(d) < 1e-14) fail(ErrorCode::DegenerateCircle, "three nearly coincident points");
    CircleOrLine r;
    r.is_line = true;
    r.point = a;
    r.direction = normalized(d);
    return r;
}

/**
 * The geodesic through two Poincare-disk points as a chart circle orthogonal
 * to the unit circle, or a diameter line when the points are collinear with
 * the origin.
 */
inline CircleOrLine geodesic_through(Vec2 a, Vec2 b)
{
    // circle orthogonal to the unit circle: 2 c.x = |x|^2 + 1 on both points
    double det = 2.0 * cross(a, b);
    if (std::fabs(det) < 1e-13) {
        Vec2 d = b - a;
        if (norm(d) < 1e-15) fail(ErrorCode::DegenerateCircle, "geodesic endpoints coincide");
        CircleOrLine r;
        r.is_line = true;
        r.point = a;
        r.direction = normalized(d);
        return r;
    }
    double ra = dot(a, a) + 1.0, rb = dot(b, b) + 1.0;
    Vec2 center = (1.0 / det) * Vec2{b[1] * ra - a[1] * rb, a[0] * rb - b[0] * ra};
    CircleOrLine r;
    r.center = center;
    r.radius = std::sqrt(dot(center, center) - 1.0);
    return r;
}

}  // namespace hypdel
