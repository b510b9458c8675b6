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
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <vector>

#include "hypdel/errors.hpp"
#include "hypdel/surface_complex.hpp"

namespace hypdel {

inline constexpr double pi = std::numbers::pi_v<double>;

/**
 * A corner-indexed vector of angle slots. Slot (f, i) holds the angle of face
 * f at the corner opposite side i, in radians.
 */
struct AngleSystem {
    std::vector<double> values;

    AngleSystem() = default;
    explicit AngleSystem(std::vector<double> v) : values(std::move(v)) {}
    static AngleSystem constant(int face_count, double angle)
    {
        return AngleSystem(std::vector<double>(3 * face_count, angle));
    }

    double at(int face, int index) const { return values[3 * face + index]; }
    double& at(int face, int index) { return values[3 * face + index]; }
    int size() const { return static_cast<int>(values.size()); }
};

/** Edge-indexed target data: psi values; theta is derived as pi - psi. */
struct EdgeTarget {
    std::vector<double> psi;

    EdgeTarget() = default;
    explicit EdgeTarget(std::vector<double> p) : psi(std::move(p)) {}
    static EdgeTarget constant(int edge_count, double value)
    {
        return EdgeTarget(std::vector<double>(edge_count, value));
    }

    double theta(int e) const { return pi - psi[e]; }
    int size() const { return static_cast<int>(psi.size()); }
};

/** Edge-indexed coefficients of a conformal deformation sum_e b_e w_e. */
struct ConformalVector {
    std::vector<double> coefficients;

    ConformalVector() = default;
    explicit ConformalVector(std::vector<double> b) : coefficients(std::move(b)) {}
    static ConformalVector zero(int edge_count)
    {
        return ConformalVector(std::vector<double>(edge_count, 0.0));
    }
    int size() const { return static_cast<int>(coefficients.size()); }
};

inline void check_angle_dims(const AngleSystem& x, const SurfaceComplex& c)
{
    require(x.size() == c.side_count(), ErrorCode::DimensionMismatch,
            "angle system length does not match 3|F|");
}
inline void check_target_dims(const EdgeTarget& p, const SurfaceComplex& c)
{
    require(p.size() == c.edge_count(), ErrorCode::DimensionMismatch,
            "target length does not match |E|");
}

// == Per-face covector values ==

struct FaceFunctionals {
    double sigma;                        // corner sum
    double k;                            // curvature, sigma - pi
    std::array<double, 3> psi_corner;    // (B + C - A)/2 per side
    std::array<double, 3> theta_corner;  // (pi + A - B - C)/2 per side
};

/** Evaluate sigma, curvature and the one-sided psi/theta values of one face. */
inline FaceFunctionals face_functionals(const AngleSystem& x, int face)
{
    double a0 = x.at(face, 0), a1 = x.at(face, 1), a2 = x.at(face, 2);
    FaceFunctionals r;
    r.sigma = a0 + a1 + a2;
    r.k = r.sigma - pi;
    for (int i = 0; i < 3; ++i) {
        double a = x.at(face, i);
        r.psi_corner[i] = (r.sigma - 2.0 * a) / 2.0;
        r.theta_corner[i] = a - r.k / 2.0;
    }
    return r;
}

/** One-sided psi value of a single side, (B + C - A)/2 with A opposite. */
inline double psi_corner(const AngleSystem& x, int side)
{
    int f = side / 3, i = side % 3;
    return (x.at(f, (i + 1) % 3) + x.at(f, (i + 2) % 3) - x.at(f, i)) / 2.0;
}

/** One-sided theta value of a single side, pi/2 - psi_corner. */
inline double theta_corner(const AngleSystem& x, int side) { return pi / 2.0 - psi_corner(x, side); }

/** Recover corner angles from a face's three theta-corner values. */
inline std::array<double, 3> angles_from_theta_corners(const std::array<double, 3>& t)
{
    return {pi - t[1] - t[2], pi - t[0] - t[2], pi - t[0] - t[1]};
}

// == Edge and vertex covectors ==

struct EdgeVertexFunctionals {
    std::vector<double> psi_e;    // per edge, sum of the two side contributions
    std::vector<double> theta_e;  // pi - psi_e
    std::vector<double> r_v;      // per vertex, sum of incident corner angles
    EdgeTarget psi_of_x;          // Psi(x)
};

inline EdgeVertexFunctionals edge_and_vertex_functionals(const AngleSystem& x,
                                                         const SurfaceComplex& c)
{
    check_angle_dims(x, c);
    EdgeVertexFunctionals r;
    r.psi_e.resize(c.edge_count());
    r.theta_e.resize(c.edge_count());
    for (int e = 0; e < c.edge_count(); ++e) {
        r.psi_e[e] = psi_corner(x, c.edge_sides[e][0]) + psi_corner(x, c.edge_sides[e][1]);
        r.theta_e[e] = pi - r.psi_e[e];
    }
    r.r_v.assign(c.vertex_count, 0.0);
    for (int corner = 0; corner < c.side_count(); ++corner)
        r.r_v[c.vertex_of_corner[corner]] += x.values[corner];
    r.psi_of_x = EdgeTarget(r.psi_e);
    return r;
}

/** Psi(x): the edge vector of informal angle complements. */
inline EdgeTarget psi_map(const AngleSystem& x, const SurfaceComplex& c)
{
    check_angle_dims(x, c);
    EdgeTarget p;
    p.psi.resize(c.edge_count());
    for (int e = 0; e < c.edge_count(); ++e)
        p.psi[e] = psi_corner(x, c.edge_sides[e][0]) + psi_corner(x, c.edge_sides[e][1]);
    return p;
}

// == Conformal deformations ==
//
// The basis vector w_e carries +1/2 on the two corners of the
// lexicographically-first side's face adjacent to that side (not opposite
// it), and -1/2 on the corresponding corners of the other side's face.
// Contributions accumulate when an edge is glued to the same face twice.

/** Add the conformal deformation sum_e b_e w_e into the slot vector. */
inline void accumulate_conformal(std::vector<double>& slots, const ConformalVector& b,
                                 const SurfaceComplex& c)
{
    for (int e = 0; e < c.edge_count(); ++e) {
        double coeff = b.coefficients[e];
        if (coeff == 0.0) continue;
        for (int which = 0; which < 2; ++which) {
            int side = c.edge_sides[e][which];
            double half = (which == 0 ? 0.5 : -0.5) * coeff;
            int f = side / 3, i = side % 3;
            slots[3 * f + (i + 1) % 3] += half;
            slots[3 * f + (i + 2) % 3] += half;
        }
    }
}

/** x + sum_e b_e w_e; preserves Psi(x) and every vertex sum r^v. */
inline AngleSystem conformal_move(const AngleSystem& x, const ConformalVector& b,
                                  const SurfaceComplex& c)
{
    check_angle_dims(x, c);
    require(b.size() == c.edge_count(), ErrorCode::DimensionMismatch,
            "conformal vector length does not match |E|");
    AngleSystem y = x;
    accumulate_conformal(y.values, b, c);
    return y;
}

/**
 * Distance to the boundary of the realizable domain: the minimum over all
 * corner angles and all face values of pi - sigma. Positive iff every angle
 * is positive and every face has negative curvature.
 */
inline double domain_margin(const AngleSystem& x, const SurfaceComplex& c)
{
    check_angle_dims(x, c);
    double m = std::numeric_limits<double>::infinity();
    for (int f = 0; f < c.face_count; ++f) {
        double s = 0.0;
        for (int i = 0; i < 3; ++i) {
            double a = x.at(f, i);
            s += a;
            m = std::min(m, a);
        }
        m = std::min(m, pi - s);
    }
    return m;
}

// == Target predicates ==

struct TargetCheck {
    bool delaunay = false;
    bool nonsingular = false;
    std::vector<double> cone_angles;  // per vertex
};

/**
 * Delaunay and non-singularity checks. The cone angle at a vertex sums psi^e
 * over edge-endpoint incidences, counting loop edges twice; it coincides with
 * r^v(x) whenever p = Psi(x).
 */
inline TargetCheck check_target(const EdgeTarget& p, const SurfaceComplex& c,
                                double tol = 1e-12)
{
    check_target_dims(p, c);
    TargetCheck r;
    r.delaunay = true;
    for (double v : p.psi)
        if (!(v > 0.0 && v < pi)) r.delaunay = false;
    r.cone_angles.assign(c.vertex_count, 0.0);
    for (int e = 0; e < c.edge_count(); ++e) {
        r.cone_angles[c.edge_vertices[e][0]] += p.psi[e];
        r.cone_angles[c.edge_vertices[e][1]] += p.psi[e];
    }
    r.nonsingular = true;
    for (double a : r.cone_angles)
        if (std::fabs(a - 2.0 * pi) > tol) r.nonsingular = false;
    return r;
}

// == Feasibility by exhaustive face subsets ==

struct BruteForceResult {
    bool feasible = false;
    std::optional<std::vector<int>> witness;  // minimizing subset when infeasible
    double margin = 0.0;                      // min over S of (sum theta - pi |S|)
};

/**
 * Checks sum of theta^e over edges incident to S > pi |S| for every nonempty
 * subset S of faces. An edge is incident to S when at least one of its two
 * sides lies in a face of S.
 */
inline BruteForceResult feasibility_bruteforce(const EdgeTarget& p, const SurfaceComplex& c,
                                               int max_faces = 20)
{
    check_target_dims(p, c);
    require(c.face_count <= max_faces, ErrorCode::TooLarge,
            "face count exceeds brute-force limit");
    require(check_target(p, c).delaunay, ErrorCode::NotDelaunay,
            "brute-force feasibility requires a Delaunay target");

    int F = c.face_count, E = c.edge_count();
    std::vector<std::array<int, 2>> edge_faces(E);
    for (int e = 0; e < E; ++e)
        edge_faces[e] = {c.edge_sides[e][0] / 3, c.edge_sides[e][1] / 3};

    BruteForceResult r;
    double best = std::numeric_limits<double>::infinity();
    std::uint32_t best_mask = 0;
    for (std::uint32_t mask = 1; mask < (1u << F); ++mask) {
        double sum = 0.0;
        for (int e = 0; e < E; ++e) {
            if ((mask >> edge_faces[e][0] & 1u) || (mask >> edge_faces[e][1] & 1u))
                sum += p.theta(e);
        }
        double margin = sum - pi * std::popcount(mask);
        if (margin < best) {
            best = margin;
            best_mask = mask;
        }
    }
    r.margin = best;
    r.feasible = best > 0.0;
    if (!r.feasible) {
        std::vector<int> w;
        for (int f = 0; f < F; ++f)
            if (best_mask >> f & 1u) w.push_back(f);
        r.witness = std::move(w);
    }
    return r;
}

// == Subset identity ==

struct SubsetIdentity {
    double lhs;  // sum of theta^e over edges incident to S
    double rhs;  // sum over S of (pi - k^t/2) plus outside terms (pi/2 - psi^e_t)
};

/**
 * Both sides of the identity relating incident informal intersection angles
 * to face curvatures and the one-sided psi values facing S from outside.
 * Holds exactly for every subset and every slot vector.
 */
inline SubsetIdentity subset_theta_identity(const AngleSystem& x, const std::vector<int>& subset,
                                            const SurfaceComplex& c)
{
    check_angle_dims(x, c);
    std::vector<char> in_s(c.face_count, 0);
    for (int f : subset) {
        require(f >= 0 && f < c.face_count, ErrorCode::DimensionMismatch, "face id out of range");
        in_s[f] = 1;
    }
    auto ev = edge_and_vertex_functionals(x, c);
    SubsetIdentity r{0.0, 0.0};
    for (int e = 0; e < c.edge_count(); ++e) {
        if (in_s[c.edge_sides[e][0] / 3] || in_s[c.edge_sides[e][1] / 3]) r.lhs += ev.theta_e[e];
    }
    for (int f = 0; f < c.face_count; ++f)
        if (in_s[f]) r.rhs += pi - face_functionals(x, f).k / 2.0;
    for (int side = 0; side < c.side_count(); ++side) {
        if (!in_s[side / 3] && in_s[c.partner[side] / 3])
            r.rhs += pi / 2.0 - psi_corner(x, side);
    }
    return r;
}

}  // namespace hypdel
