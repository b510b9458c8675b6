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

#include <algorithm>
#include <array>
#include <numeric>
#include <queue>
#include <string>
#include <vector>

#include "hypdel/errors.hpp"

namespace hypdel {

/** A (face, side-index) reference; side index in 0..2. */
using SideRef = std::array<int, 2>;
/** One gluing entry identifying two sides. */
using GluingPair = std::array<SideRef, 2>;

/**
 * A closed oriented triangulated surface given combinatorially by a
 * side-pairing table.
 *
 * Sides and corners are both encoded as 3*face + index. Side i of a face runs
 * between the corners (i+1)%3 and (i+2)%3; corner i is the one opposite side
 * i. Faces are oriented counterclockwise and every gluing identifies the two
 * sides head-to-tail (opposite boundary orientations), which is what makes
 * every complete pairing an oriented closed surface. Edge k is the k-th
 * gluing pair; vertex ids follow the first corner of each class in
 * (face, side) lexicographic order.
 */
struct SurfaceComplex {
    int face_count = 0;
    int vertex_count = 0;
    std::vector<int> partner;                     // side -> glued side
    std::vector<int> edge_of_side;                // side -> edge id
    std::vector<std::array<int, 2>> edge_sides;   // edge -> {side1, side2}, side1 < side2
    std::vector<int> vertex_of_corner;            // corner -> vertex id
    std::vector<std::array<int, 2>> edge_vertices;  // edge -> endpoint vertex ids (from side1)

    int edge_count() const { return static_cast<int>(edge_sides.size()); }
    int side_count() const { return 3 * face_count; }
    static int side_id(int face, int index) { return 3 * face + index; }
    static int face_of(int side) { return side / 3; }
    static int index_of(int side) { return side % 3; }

    /** +1 if the side is the lexicographically-first side of its edge, else -1. */
    double side_sign(int side) const { return side == edge_sides[edge_of_side[side]][0] ? 1.0 : -1.0; }
};

namespace detail {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x)
    {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace detail

/**
 * Build and validate the complex from a face count and gluing list.
 *
 * Every side must appear in exactly one pair and the dual graph must be
 * connected. The head-to-tail gluing convention identifies corner (f, s+1)
 * with corner (g, t+2) and corner (f, s+2) with corner (g, t+1) for each pair
 * (f,s)~(g,t); vertices are the equivalence classes of corners.
 */
inline SurfaceComplex build_complex(int face_count, const std::vector<GluingPair>& gluing)
{
    require(face_count > 0, ErrorCode::IoError, "face count must be positive");
    SurfaceComplex c;
    c.face_count = face_count;
    int sides = 3 * face_count;
    c.partner.assign(sides, -1);
    c.edge_of_side.assign(sides, -1);

    auto side_of = [&](SideRef r) {
        require(r[0] >= 0 && r[0] < face_count, ErrorCode::IoError,
                "face index out of range: " + std::to_string(r[0]));
        require(r[1] >= 0 && r[1] < 3, ErrorCode::IoError,
                "side index out of range: " + std::to_string(r[1]));
        return 3 * r[0] + r[1];
    };

    for (const auto& pair : gluing) {
        int a = side_of(pair[0]);
        int b = side_of(pair[1]);
        require(a != b, ErrorCode::NonOrientable, "side glued to itself");
        require(c.partner[a] == -1, ErrorCode::SideReusedInTwoPairs,
                "side " + std::to_string(a) + " appears in two pairs");
        require(c.partner[b] == -1, ErrorCode::SideReusedInTwoPairs,
                "side " + std::to_string(b) + " appears in two pairs");
        int e = static_cast<int>(c.edge_sides.size());
        c.partner[a] = b;
        c.partner[b] = a;
        c.edge_of_side[a] = e;
        c.edge_of_side[b] = e;
        c.edge_sides.push_back({std::min(a, b), std::max(a, b)});
    }
    for (int s = 0; s < sides; ++s)
        require(c.partner[s] != -1, ErrorCode::UnpairedSide,
                "side " + std::to_string(s) + " is not glued");

    // vertex classes of corners under the head-to-tail identification
    detail::UnionFind uf(sides);
    for (const auto& e : c.edge_sides) {
        int a = e[0], b = e[1];
        int f = a / 3, s = a % 3, g = b / 3, t = b % 3;
        uf.unite(3 * f + (s + 1) % 3, 3 * g + (t + 2) % 3);
        uf.unite(3 * f + (s + 2) % 3, 3 * g + (t + 1) % 3);
    }
    c.vertex_of_corner.assign(sides, -1);
    std::vector<int> root_to_id(sides, -1);
    int next_vertex = 0;
    for (int corner = 0; corner < sides; ++corner) {
        int r = uf.find(corner);
        if (root_to_id[r] == -1) root_to_id[r] = next_vertex++;
        c.vertex_of_corner[corner] = root_to_id[r];
    }
    c.vertex_count = next_vertex;

    c.edge_vertices.resize(c.edge_sides.size());
    for (int e = 0; e < c.edge_count(); ++e) {
        int a = c.edge_sides[e][0];
        int f = a / 3, s = a % 3;
        c.edge_vertices[e] = {c.vertex_of_corner[3 * f + (s + 1) % 3],
                              c.vertex_of_corner[3 * f + (s + 2) % 3]};
    }

    // dual graph connectivity
    std::vector<char> seen(face_count, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int f = q.front();
        q.pop();
        for (int i = 0; i < 3; ++i) {
            int g = c.partner[3 * f + i] / 3;
            if (!seen[g]) {
                seen[g] = 1;
                ++reached;
                q.push(g);
            }
        }
    }
    require(reached == face_count, ErrorCode::Disconnected, "dual graph is not connected");
    return c;
}

/** Euler characteristic and genus: chi = V - E + F, genus = (2 - chi) / 2. */
inline std::pair<int, int> euler_and_genus(const SurfaceComplex& c)
{
    int chi = c.vertex_count - c.edge_count() + c.face_count;
    return {chi, (2 - chi) / 2};
}

/**
 * Spanning tree of the dual graph (faces as nodes, edges as arcs), used to
 * develop the surface into the hyperbolic plane.
 */
struct DualTree {
    int root_face = 0;
    std::vector<int> tree_edges;      // in BFS discovery order
    std::vector<int> non_tree_edges;  // ascending edge order
    std::vector<int> parent_face;     // face -> parent face, -1 at root
    std::vector<int> parent_edge;     // face -> edge crossed from parent, -1 at root
    std::vector<int> order;           // faces in BFS discovery order
};

/**
 * Deterministic BFS spanning tree: from each dequeued face its incident
 * edges are explored in ascending edge-index order.
 */
inline DualTree dual_spanning_tree(const SurfaceComplex& c, int root)
{
    require(root >= 0 && root < c.face_count, ErrorCode::IoError, "root face out of range");
    DualTree t;
    t.root_face = root;
    t.parent_face.assign(c.face_count, -1);
    t.parent_edge.assign(c.face_count, -1);
    std::vector<char> in_tree_edge(c.edge_count(), 0);
    std::vector<char> seen(c.face_count, 0);
    std::queue<int> q;
    q.push(root);
    seen[root] = 1;
    while (!q.empty()) {
        int f = q.front();
        q.pop();
        t.order.push_back(f);
        std::array<int, 3> edges = {c.edge_of_side[3 * f], c.edge_of_side[3 * f + 1],
                                    c.edge_of_side[3 * f + 2]};
        std::sort(edges.begin(), edges.end());
        for (int e : edges) {
            int a = c.edge_sides[e][0], b = c.edge_sides[e][1];
            int g = (a / 3 == f) ? b / 3 : a / 3;
            if (a / 3 == f && b / 3 == f) continue;  // self-glued edge
            if (!seen[g]) {
                seen[g] = 1;
                in_tree_edge[e] = 1;
                t.parent_face[g] = f;
                t.parent_edge[g] = e;
                t.tree_edges.push_back(e);
                q.push(g);
            }
        }
    }
    for (int e = 0; e < c.edge_count(); ++e)
        if (!in_tree_edge[e]) t.non_tree_edges.push_back(e);
    return t;
}

}  // namespace hypdel
