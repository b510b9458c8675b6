#pragma once

// Shared test utilities: independent oracles and small numerics kept apart
// from the library implementation they check.

#include <cmath>
#include <functional>
#include <vector>

#include "hypdel/generate.hpp"

namespace test {

/** Numerical rank by Gaussian elimination with partial pivoting. */
inline int matrix_rank(std::vector<std::vector<double>> rows, double tol = 1e-9)
{
    if (rows.empty()) return 0;
    int m = static_cast<int>(rows.size());
    int n = static_cast<int>(rows[0].size());
    int rank = 0;
    for (int col = 0; col < n && rank < m; ++col) {
        int piv = -1;
        double best = tol;
        for (int r = rank; r < m; ++r) {
            if (std::fabs(rows[r][col]) > best) {
                best = std::fabs(rows[r][col]);
                piv = r;
            }
        }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        for (int r = rank + 1; r < m; ++r) {
            double f = rows[r][col] / rows[rank][col];
            for (int j = col; j < n; ++j) rows[r][j] -= f * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

/** Realizable face angles: positive, sum strictly below pi, away from corners. */
inline std::vector<double> random_realizable_face(hypdel::Rng& rng)
{
    for (;;) {
        double a = rng.uniform(0.05, 2.8);
        double b = rng.uniform(0.05, 2.8);
        double c = rng.uniform(0.05, 2.8);
        if (a + b + c < hypdel::pi - 0.05) return {a, b, c};
    }
}

/** Adaptive Simpson integration to the given absolute tolerance. */
inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double tol)
{
    struct Rec {
        const std::function<double(double)>& f;
        double operator()(double a, double fa, double b, double fb, double m, double fm,
                          double whole, double tol, int depth) const
        {
            double lm = (a + m) / 2.0, rm = (m + b) / 2.0;
            double flm = f(lm), frm = f(rm);
            double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
            double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
            if (depth > 60 || std::fabs(left + right - whole) <= 15.0 * tol)
                return left + right + (left + right - whole) / 15.0;
            return (*this)(a, fa, m, fm, lm, flm, left, tol / 2.0, depth + 1) +
                   (*this)(m, fm, b, fb, rm, frm, right, tol / 2.0, depth + 1);
        }
    };
    double m = (a + b) / 2.0;
    double fa = f(a), fb = f(b), fm = f(m);
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return Rec{f}(a, fa, b, fb, m, fm, whole, tol, 0);
}

/**
 * Quadrature oracle for the volume kernel: -int_0^theta ln|2 sin t| dt for
 * theta in [0, pi/2], with the log singularity integrated in closed form and
 * the smooth remainder ln(sin t / t) done numerically.
 */
inline double lobachevsky_quadrature(double theta)
{
    if (theta == 0.0) return 0.0;
    auto smooth = [](double t) { return t == 0.0 ? 0.0 : std::log(std::sin(t) / t); };
    double base = theta - theta * std::log(2.0 * theta);
    return base - adaptive_simpson(smooth, 0.0, theta, 1e-14);
}

/** Eigenvalues of a symmetric matrix by the cyclic Jacobi method. */
inline std::vector<double> symmetric_eigenvalues(std::vector<double> a, int n)
{
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += a[i * n + j] * a[i * n + j];
        if (off < 1e-26) break;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = a[p * n + q];
                if (std::fabs(apq) < 1e-300) continue;
                double tau = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                double t = (tau >= 0 ? 1.0 : -1.0) / (std::fabs(tau) + std::sqrt(1.0 + tau * tau));
                double c = 1.0 / std::sqrt(1.0 + t * t), s = t * c;
                for (int k = 0; k < n; ++k) {
                    double akp = a[k * n + p], akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = a[p * n + k], aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> eig(n);
    for (int i = 0; i < n; ++i) eig[i] = a[i * n + i];
    return eig;
}

}  // namespace test
