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

#include <string>
#include <vector>

#include "hypdel/angle_functionals.hpp"
#include "hypdel/errors.hpp"
#include "hypdel/surface_complex.hpp"

namespace hypdel {

/**
 * The strictly interior point available for any Delaunay target: set every
 * theta-corner to half the edge's informal intersection angle and recover the
 * corner angles. Satisfies Psi(x) = p exactly with all angles and all
 * theta-corners in (0, pi); the curvature sign is not guaranteed.
 */
inline AngleSystem initial_plus_point(const EdgeTarget& p, const SurfaceComplex& c)
{
    check_target_dims(p, c);
    require(check_target(p, c).delaunay, ErrorCode::NotDelaunay,
            "initial point requires a Delaunay target");
    AngleSystem x;
    x.values.resize(c.side_count());
    for (int f = 0; f < c.face_count; ++f) {
        std::array<double, 3> t;
        for (int i = 0; i < 3; ++i) t[i] = p.theta(c.edge_of_side[3 * f + i]) / 2.0;
        auto angles = angles_from_theta_corners(t);
        for (int i = 0; i < 3; ++i) x.at(f, i) = angles[i];
    }
    return x;
}

namespace detail {

/**
 * Dense two-phase simplex for
 *     minimize c.x  subject to  A_eq x = b_eq, A_le x <= b_le, x >= 0,
 * with Bland's anti-cycling pivot rule (lowest-index entering column,
 * ratio ties broken by lowest basic variable index). Deterministic.
 */
class DenseSimplex {
public:
    int n = 0;                          // structural variables
    std::vector<std::vector<double>> rows;  // coefficient rows
    std::vector<double> rhs;
    std::vector<char> is_equality;
    std::vector<double> objective;      // length n

    void add_row(std::vector<double> coeff, double b, bool equality)
    {
        rows.push_back(std::move(coeff));
        rhs.push_back(b);
        is_equality.push_back(equality ? 1 : 0);
    }

    struct Result {
        double objective_value = 0.0;
        std::vector<double> x;
    };

    Result solve()
    {
        const double tol = 1e-9;
        int m = static_cast<int>(rows.size());
        int slacks = 0;
        for (char eq : is_equality)
            if (!eq) ++slacks;

        // normalize RHS signs so artificial/slack columns start feasible
        for (int r = 0; r < m; ++r) {
            if (rhs[r] < 0.0) {
                require(is_equality[r], ErrorCode::NumericalBreakdown,
                        "inequality rows are expected with nonnegative rhs");
                for (double& v : rows[r]) v = -v;
                rhs[r] = -rhs[r];
            }
        }

        int art = 0;
        for (char eq : is_equality)
            if (eq) ++art;
        ncols_ = n + slacks + art;
        width_ = ncols_ + 1;

        tab_.assign(static_cast<std::size_t>(m) * width_, 0.0);
        basis_.assign(m, -1);
        std::vector<char> is_artificial(ncols_, 0);

        int next_slack = n, next_art = n + slacks;
        for (int r = 0; r < m; ++r) {
            double* row = tab_.data() + static_cast<std::size_t>(r) * width_;
            for (int j = 0; j < n; ++j) row[j] = rows[r][j];
            row[ncols_] = rhs[r];
            if (is_equality[r]) {
                row[next_art] = 1.0;
                is_artificial[next_art] = 1;
                basis_[r] = next_art++;
            } else {
                row[next_slack] = 1.0;
                basis_[r] = next_slack++;
            }
        }

        // phase-1 objective: minimize the sum of artificials
        cost_.assign(width_, 0.0);
        for (int j = n + slacks; j < ncols_; ++j) cost_[j] = 1.0;
        reduce_cost_row(m);
        run(m, tol, /*ignore_artificials=*/false);
        require(cost_[ncols_] > -tol * 10.0, ErrorCode::NumericalBreakdown,
                "phase 1 of the margin LP did not reach zero: " + std::to_string(-cost_[ncols_]));

        // pivot any remaining artificial out of the basis
        for (int r = 0; r < m; ++r) {
            if (!is_artificial[basis_[r]]) continue;
            const double* row = tab_.data() + static_cast<std::size_t>(r) * width_;
            int enter = -1;
            for (int j = 0; j < n + slacks; ++j) {
                if (std::fabs(row[j]) > tol) {
                    enter = j;
                    break;
                }
            }
            if (enter >= 0) pivot(m, r, enter);
            // a fully zero row is redundant; its artificial stays basic at zero
        }

        // phase-2 objective
        cost_.assign(width_, 0.0);
        for (int j = 0; j < n; ++j) cost_[j] = objective[j];
        reduce_cost_row(m);
        run(m, tol, /*ignore_artificials=*/true, is_artificial);

        Result res;
        res.x.assign(n, 0.0);
        for (int r = 0; r < m; ++r) {
            if (basis_[r] < n)
                res.x[basis_[r]] = tab_[static_cast<std::size_t>(r) * width_ + ncols_];
        }
        res.objective_value = -cost_[ncols_];
        return res;
    }

private:
    int ncols_ = 0, width_ = 0;
    std::vector<double> tab_;
    std::vector<double> cost_;  // reduced cost row, rhs entry holds -objective
    std::vector<int> basis_;

    void reduce_cost_row(int m)
    {
        for (int r = 0; r < m; ++r) {
            double c = cost_[basis_[r]];
            if (c == 0.0) continue;
            const double* row = tab_.data() + static_cast<std::size_t>(r) * width_;
            for (int j = 0; j < width_; ++j) cost_[j] -= c * row[j];
        }
    }

    void pivot(int m, int prow, int pcol)
    {
        double* prow_ptr = tab_.data() + static_cast<std::size_t>(prow) * width_;
        double inv = 1.0 / prow_ptr[pcol];
        for (int j = 0; j < width_; ++j) prow_ptr[j] *= inv;
        prow_ptr[pcol] = 1.0;
        for (int r = 0; r < m; ++r) {
            if (r == prow) continue;
            double* row = tab_.data() + static_cast<std::size_t>(r) * width_;
            double f = row[pcol];
            if (f == 0.0) continue;
            for (int j = 0; j < width_; ++j) row[j] -= f * prow_ptr[j];
            row[pcol] = 0.0;
        }
        double f = cost_[pcol];
        if (f != 0.0) {
            for (int j = 0; j < width_; ++j) cost_[j] -= f * prow_ptr[j];
            cost_[pcol] = 0.0;
        }
        basis_[prow] = pcol;
    }

    void run(int m, double tol, bool ignore_artificials,
             const std::vector<char>& is_artificial = {})
    {
        long max_pivots = 50000L + 200L * (m + ncols_);
        for (long it = 0; it < max_pivots; ++it) {
            // Bland: lowest-index column with negative reduced cost
            int enter = -1;
            for (int j = 0; j < ncols_; ++j) {
                if (ignore_artificials && is_artificial[j]) continue;
                if (cost_[j] < -tol) {
                    enter = j;
                    break;
                }
            }
            if (enter < 0) return;  // optimal
            int leave = -1;
            double best_ratio = 0.0;
            for (int r = 0; r < m; ++r) {
                double a = tab_[static_cast<std::size_t>(r) * width_ + enter];
                if (a <= tol) continue;
                double ratio = tab_[static_cast<std::size_t>(r) * width_ + ncols_] / a;
                if (leave < 0 || ratio < best_ratio - 1e-12 ||
                    (ratio < best_ratio + 1e-12 && basis_[r] < basis_[leave])) {
                    leave = r;
                    best_ratio = ratio;
                }
            }
            require(leave >= 0, ErrorCode::NumericalBreakdown,
                    "margin LP is unbounded, which contradicts the model bounds");
            pivot(m, leave, enter);
        }
        fail(ErrorCode::SimplexCycleGuardTripped,
             "pivot limit exceeded despite Bland's rule");
    }
};

}  // namespace detail

struct MarginLpResult {
    enum class Status { feasible, infeasible, degenerate };
    double epsilon_star = 0.0;
    AngleSystem x_star;
    Status status = Status::infeasible;
};

inline const char* to_string(MarginLpResult::Status s)
{
    switch (s) {
        case MarginLpResult::Status::feasible: return "feasible";
        case MarginLpResult::Status::infeasible: return "infeasible";
        case MarginLpResult::Status::degenerate: return "degenerate";
    }
    return "unknown";
}

/**
 * Constructive feasibility: maximize the margin eps subject to Psi(x) = p,
 * every corner angle >= eps and every face satisfying pi - sigma >= eps.
 * The target is feasible exactly when the optimum is positive, and the
 * maximizer is a strictly interior starting point for the volume ascent.
 *
 * Internally the slot variables are shifted by eps (a = x - eps), making all
 * variables nonnegative with eps split into a difference of nonnegative
 * parts. Per side, psi_corner(a + eps) = psi_corner(a) + eps/2, so each edge
 * row gains a +1 eps coefficient, and each face row reads sigma(a) + 4 eps
 * <= pi.
 */
inline MarginLpResult margin_lp(const EdgeTarget& p, const SurfaceComplex& c,
                                double eps_min = 1e-9)
{
    check_target_dims(p, c);
    require(check_target(p, c).delaunay, ErrorCode::NotDelaunay,
            "margin LP requires a Delaunay target");

    int F = c.face_count, E = c.edge_count();
    int n_slots = 3 * F;
    int col_ep = n_slots, col_em = n_slots + 1;

    detail::DenseSimplex lp;
    lp.n = n_slots + 2;
    lp.objective.assign(lp.n, 0.0);
    lp.objective[col_ep] = -1.0;  // maximize eps = ep - em
    lp.objective[col_em] = 1.0;

    for (int e = 0; e < E; ++e) {
        std::vector<double> row(lp.n, 0.0);
        for (int side : c.edge_sides[e]) {
            int f = side / 3, i = side % 3;
            row[3 * f + i] += -0.5;
            row[3 * f + (i + 1) % 3] += 0.5;
            row[3 * f + (i + 2) % 3] += 0.5;
        }
        row[col_ep] += 1.0;
        row[col_em] += -1.0;
        lp.add_row(std::move(row), p.psi[e], /*equality=*/true);
    }
    for (int f = 0; f < F; ++f) {
        std::vector<double> row(lp.n, 0.0);
        for (int i = 0; i < 3; ++i) row[3 * f + i] = 1.0;
        row[col_ep] = 4.0;
        row[col_em] = -4.0;
        lp.add_row(std::move(row), pi, /*equality=*/false);
    }

    auto sol = lp.solve();
    MarginLpResult r;
    r.epsilon_star = sol.x[col_ep] - sol.x[col_em];
    r.x_star.values.resize(n_slots);
    for (int s = 0; s < n_slots; ++s) r.x_star.values[s] = sol.x[s] + r.epsilon_star;
    if (r.epsilon_star > eps_min)
        r.status = MarginLpResult::Status::feasible;
    else if (r.epsilon_star < -eps_min)
        r.status = MarginLpResult::Status::infeasible;
    else
        r.status = MarginLpResult::Status::degenerate;
    return r;
}

}  // namespace hypdel
