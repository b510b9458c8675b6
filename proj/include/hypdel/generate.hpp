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

#include <cstdint>
#include <random>
#include <vector>

#include "hypdel/angle_functionals.hpp"
#include "hypdel/surface_complex.hpp"

namespace hypdel {

/** Deterministic RNG; doubles are drawn from the raw 53-bit mantissa. */
struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}

    double uniform()
    {
        return static_cast<double>(gen() >> 11) * 0x1.0p-53;
    }
    double uniform(double a, double b) { return a + (b - a) * uniform(); }
    int uniform_int(int n) { return static_cast<int>(gen() % static_cast<std::uint64_t>(n)); }
};

/**
 * Fan triangulation of the octagon with edge word a b a^-1 b^-1 c d c^-1 d^-1:
 * the one-vertex genus-2 surface with 6 faces and 9 edges.
 */
inline std::vector<GluingPair> genus2_one_vertex_gluing()
{
    return {
        {{{0, 0}, {2, 0}}},  // octagon side pair b
        {{{0, 1}, {1, 2}}},  // fan diagonal
        {{{0, 2}, {1, 0}}},  // octagon side pair a
        {{{1, 1}, {2, 2}}},  // fan diagonal
        {{{2, 1}, {3, 2}}},  // fan diagonal
        {{{3, 0}, {5, 0}}},  // octagon side pair c
        {{{3, 1}, {4, 2}}},  // fan diagonal
        {{{4, 0}, {5, 1}}},  // octagon side pair d
        {{{4, 1}, {5, 2}}},  // fan diagonal
    };
}

/**
 * The genus-2 surface above with face 0 subdivided around a new interior
 * vertex: 8 faces, 12 edges, 2 vertices. Faces 0..2 are the subdivision
 * triangles (corner 0 of each at the new vertex), faces 3..7 are the old
 * faces 1..5.
 */
inline std::vector<GluingPair> genus2_two_vertex_gluing()
{
    return {
        {{{0, 0}, {4, 0}}},  // old (0,0)~(2,0)
        {{{1, 0}, {3, 2}}},  // old (0,1)~(1,2)
        {{{2, 0}, {3, 0}}},  // old (0,2)~(1,0)
        {{{3, 1}, {4, 2}}},  // old (1,1)~(2,2)
        {{{4, 1}, {5, 2}}},  // old (2,1)~(3,2)
        {{{5, 0}, {7, 0}}},  // old (3,0)~(5,0)
        {{{5, 1}, {6, 2}}},  // old (3,1)~(4,2)
        {{{6, 0}, {7, 1}}},  // old (4,0)~(5,1)
        {{{6, 1}, {7, 2}}},  // old (4,1)~(5,2)
        {{{0, 2}, {2, 1}}},  // spoke
        {{{1, 2}, {0, 1}}},  // spoke
        {{{2, 2}, {1, 1}}},  // spoke
    };
}

/** Boundary of the tetrahedron, outward-oriented: genus 0, 4 vertices. */
inline std::vector<GluingPair> tetrahedron_gluing()
{
    return {
        {{{0, 0}, {1, 0}}}, {{{0, 1}, {2, 0}}}, {{{0, 2}, {3, 0}}},
        {{{1, 1}, {3, 2}}}, {{{1, 2}, {2, 1}}}, {{{2, 2}, {3, 1}}},
    };
}

/**
 * Random connected gluing on the given (even) number of faces: a uniformly
 * shuffled fixed-point-free pairing of the 3F sides, re-drawn until the dual
 * graph is connected.
 */
inline std::vector<GluingPair> random_gluing(int face_count, Rng& rng)
{
    require(face_count > 0 && face_count % 2 == 0, ErrorCode::IoError,
            "random gluing needs a positive even face count");
    int sides = 3 * face_count;
    std::vector<int> order(sides);
    for (;;) {
        for (int i = 0; i < sides; ++i) order[i] = i;
        for (int i = sides - 1; i > 0; --i) std::swap(order[i], order[rng.uniform_int(i + 1)]);
        std::vector<GluingPair> gluing;
        gluing.reserve(sides / 2);
        for (int i = 0; i < sides; i += 2) {
            int a = order[i], b = order[i + 1];
            gluing.push_back({SideRef{a / 3, a % 3}, SideRef{b / 3, b % 3}});
        }
        try {
            build_complex(face_count, gluing);
            return gluing;
        } catch (const Error& err) {
            if (err.code() != ErrorCode::Disconnected) throw;
        }
    }
}

/**
 * Sample an interior slot vector: per face, three theta-corner values in
 * (0.1, pi/2 - 0.1) with sum above pi + 0.1, converted back to corner angles.
 * Every face is realizable with margin at least 0.1.
 */
inline AngleSystem sample_interior_angle_system(const SurfaceComplex& c, Rng& rng)
{
    AngleSystem x;
    x.values.resize(c.side_count());
    for (int f = 0; f < c.face_count; ++f) {
        std::array<double, 3> t;
        do {
            for (double& v : t) v = rng.uniform(0.1, pi / 2.0 - 0.1);
        } while (t[0] + t[1] + t[2] <= pi + 0.1);
        auto angles = angles_from_theta_corners(t);
        for (int i = 0; i < 3; ++i) x.at(f, i) = angles[i];
    }
    return x;
}

/** A feasible Delaunay target by construction: Psi of a sampled interior point. */
inline EdgeTarget sample_roundtrip_target(const SurfaceComplex& c, Rng& rng)
{
    return psi_map(sample_interior_angle_system(c, rng), c);
}

/**
 * A Delaunay target on the two-vertex genus-2 complex that is infeasible:
 * the three edges of face 0 get psi close to pi, so the singleton {0}
 * violates the subset inequality.
 */
inline EdgeTarget infeasible_two_vertex_target(const SurfaceComplex& c)
{
    EdgeTarget p = EdgeTarget::constant(c.edge_count(), pi / 6.0);
    for (int i = 0; i < 3; ++i) p.psi[c.edge_of_side[3 * 0 + i]] = 2.9;
    return p;
}

}  // namespace hypdel
