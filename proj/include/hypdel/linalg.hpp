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
#include <cstddef>
#include <vector>

namespace hypdel {

using Vec2 = std::array<double, 2>;
using Vec3 = std::array<double, 3>;
using Vec4 = std::array<double, 4>;

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a[0] + b[0], a[1] + b[1]}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a[0] - b[0], a[1] - b[1]}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a[0], s * a[1]}; }
inline double dot(Vec2 a, Vec2 b) { return a[0] * b[0] + a[1] * b[1]; }
inline double cross(Vec2 a, Vec2 b) { return a[0] * b[1] - a[1] * b[0]; }
inline double norm(Vec2 a) { return std::sqrt(dot(a, a)); }
inline Vec2 normalized(Vec2 a)
{
    double n = norm(a);
    return {a[0] / n, a[1] / n};
}
/** Counterclockwise quarter turn. */
inline Vec2 perp(Vec2 a) { return {-a[1], a[0]}; }

inline Vec3 operator+(Vec3 a, Vec3 b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
inline Vec3 operator-(Vec3 a, Vec3 b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
inline Vec3 operator*(double s, Vec3 a) { return {s * a[0], s * a[1], s * a[2]}; }
inline double dot(Vec3 a, Vec3 b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
inline Vec3 cross(Vec3 a, Vec3 b)
{
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
inline double norm(Vec3 a) { return std::sqrt(dot(a, a)); }
inline Vec3 normalized(Vec3 a)
{
    double n = norm(a);
    return {a[0] / n, a[1] / n, a[2] / n};
}

/** Row-major 3x3 matrix; used for Lorentz and rotation maps. */
struct Mat3 {
    std::array<double, 9> m{};

    static Mat3 identity()
    {
        Mat3 r;
        r.m = {1, 0, 0, 0, 1, 0, 0, 0, 1};
        return r;
    }
    static Mat3 from_columns(Vec3 c0, Vec3 c1, Vec3 c2)
    {
        Mat3 r;
        r.m = {c0[0], c1[0], c2[0], c0[1], c1[1], c2[1], c0[2], c1[2], c2[2]};
        return r;
    }
    double operator()(int i, int j) const { return m[3 * i + j]; }
    double& operator()(int i, int j) { return m[3 * i + j]; }
};

inline Vec3 operator*(const Mat3& a, Vec3 v)
{
    return {a(0, 0) * v[0] + a(0, 1) * v[1] + a(0, 2) * v[2],
            a(1, 0) * v[0] + a(1, 1) * v[1] + a(1, 2) * v[2],
            a(2, 0) * v[0] + a(2, 1) * v[1] + a(2, 2) * v[2]};
}

inline Mat3 operator*(const Mat3& a, const Mat3& b)
{
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j) + a(i, 2) * b(2, j);
    return r;
}

/** Rotation about a unit axis by the given angle (Rodrigues). */
inline Mat3 rotation_about(Vec3 axis, double angle)
{
    double c = std::cos(angle), s = std::sin(angle), t = 1.0 - c;
    auto [x, y, z] = axis;
    Mat3 r;
    r.m = {t * x * x + c,     t * x * y - s * z, t * x * z + s * y,
           t * x * y + s * z, t * y * y + c,     t * y * z - s * x,
           t * x * z - s * y, t * y * z + s * x, t * z * z + c};
    return r;
}

/**
 * In-place Cholesky solve of the symmetric positive definite system A x = b.
 * A is n x n row-major and is destroyed. Returns false if A is not
 * numerically positive definite.
 */
inline bool cholesky_solve(std::vector<double>& A, std::vector<double>& b, std::size_t n)
{
    for (std::size_t k = 0; k < n; ++k) {
        double d = A[k * n + k];
        for (std::size_t j = 0; j < k; ++j) d -= A[k * n + j] * A[k * n + j];
        if (!(d > 0.0)) return false;
        d = std::sqrt(d);
        A[k * n + k] = d;
        for (std::size_t i = k + 1; i < n; ++i) {
            double s = A[i * n + k];
            for (std::size_t j = 0; j < k; ++j) s -= A[i * n + j] * A[k * n + j];
            A[i * n + k] = s / d;
        }
    }
    // forward substitution L y = b
    for (std::size_t i = 0; i < n; ++i) {
        double s = b[i];
        for (std::size_t j = 0; j < i; ++j) s -= A[i * n + j] * b[j];
        b[i] = s / A[i * n + i];
    }
    // back substitution L^T x = y
    for (std::size_t ii = n; ii-- > 0;) {
        double s = b[ii];
        for (std::size_t j = ii + 1; j < n; ++j) s -= A[j * n + ii] * b[j];
        b[ii] = s / A[ii * n + ii];
    }
    return true;
}

inline double clamp_unit(double x) { return x < -1.0 ? -1.0 : (x > 1.0 ? 1.0 : x); }

}  // namespace hypdel
