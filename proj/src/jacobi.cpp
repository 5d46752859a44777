#include <algorithm>
#include <cmath>
#include <numeric>

#include "estrada/eigen.hpp"
#include "estrada/errors.hpp"

namespace estrada {

namespace {

double off_diagonal_norm(const std::vector<double>& a, int n) {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) s += a[static_cast<std::size_t>(i) * n + j] *
                                              a[static_cast<std::size_t>(i) * n + j];
    return std::sqrt(2.0 * s);
}

}  // namespace

Spectrum jacobi_eigen(const SymMatrix& m, bool want_vectors, JacobiOptions opts) {
    const int n = m.order();
    std::vector<double> a(m.data().begin(), m.data().end());
    std::vector<double> v;
    if (want_vectors) {
        v.assign(static_cast<std::size_t>(n) * n, 0.0);
        for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i) * n + i] = 1.0;
    }
    auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };

    const double stop = opts.rel_tol * std::max(1.0, m.frobenius_norm());
    double off = off_diagonal_norm(a, n);
    int sweep = 0;
    while (off > stop && sweep < opts.max_sweeps) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (apq == 0.0) continue;
                const double app = at(p, p);
                const double aqq = at(q, q);
                const double theta = (aqq - app) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const double akp = at(k, p);
                    const double akq = at(k, q);
                    at(k, p) = at(p, k) = c * akp - s * akq;
                    at(k, q) = at(q, k) = s * akp + c * akq;
                }
                at(p, p) = app - t * apq;
                at(q, q) = aqq + t * apq;
                at(p, q) = at(q, p) = 0.0;
                if (want_vectors) {
                    for (int k = 0; k < n; ++k) {
                        const double vkp = v[static_cast<std::size_t>(k) * n + p];
                        const double vkq = v[static_cast<std::size_t>(k) * n + q];
                        v[static_cast<std::size_t>(k) * n + p] = c * vkp - s * vkq;
                        v[static_cast<std::size_t>(k) * n + q] = s * vkp + c * vkq;
                    }
                }
            }
        }
        ++sweep;
        off = off_diagonal_norm(a, n);
    }
    const double achieved = off / std::max(1.0, m.frobenius_norm());
    if (off > stop) {
        throw NoConvergence("Jacobi eigensolver did not converge in " +
                                std::to_string(opts.max_sweeps) + " sweeps",
                            achieved);
    }

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(),
                     [&](int i, int j) { return at(i, i) > at(j, j); });

    Spectrum out;
    out.values.resize(n);
    for (int i = 0; i < n; ++i) out.values[i] = at(perm[i], perm[i]);
    out.tol = achieved;
    if (want_vectors) {
        std::vector<double> sorted(static_cast<std::size_t>(n) * n);
        for (int col = 0; col < n; ++col)
            for (int row = 0; row < n; ++row)
                sorted[static_cast<std::size_t>(row) * n + col] =
                    v[static_cast<std::size_t>(row) * n + perm[col]];
        out.vectors = std::move(sorted);
    }
    return out;
}

RowSumStats row_sum_stats(const SymMatrix& m) {
    const int n = m.order();
    RowSumStats stats;
    stats.sums.resize(n);
    for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (int j = 0; j < n; ++j) s += m(i, j);
        stats.sums[i] = s;
    }
    stats.min_sum = *std::min_element(stats.sums.begin(), stats.sums.end());
    stats.max_sum = *std::max_element(stats.sums.begin(), stats.sums.end());
    return stats;
}

double trace(const SymMatrix& m) {
    double s = 0.0;
    for (int i = 0; i < m.order(); ++i) s += m(i, i);
    return s;
}

double zero_threshold(const Spectrum& s) {
    const double lead = s.values.empty() ? 0.0 : std::abs(s.values.front());
    return 1e-9 * std::max(1.0, lead);
}

DeterminantInfo determinant_from_spectrum(const Spectrum& s) {
    const double tau = zero_threshold(s);
    DeterminantInfo info;
    for (double v : s.values) {
        info.det *= v;
        if (std::abs(v) <= tau) info.singular = true;
    }
    info.abs_det = std::abs(info.det);
    return info;
}

}  // namespace estrada
