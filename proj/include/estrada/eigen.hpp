#pragma once

#include <optional>
#include <vector>

#include "estrada/sym_matrix.hpp"

namespace estrada {

/// Eigenvalues sorted non-increasing, optional orthonormal eigenvector
/// columns (row-major order x order), and the relative off-diagonal residual
/// the solver actually achieved.
struct Spectrum {
    std::vector<double> values;
    std::optional<std::vector<double>> vectors;
    double tol = 0.0;

    int order() const { return static_cast<int>(values.size()); }
};

struct JacobiOptions {
    double rel_tol = 1e-12;  // off-diagonal Frobenius norm <= rel_tol * max(1, ||M||_F)
    int max_sweeps = 100;
};

/// Cyclic Jacobi diagonalization, row-cyclic sweep order. Deterministic for a
/// fixed input. Throws NoConvergence (carrying the achieved residual) if the
/// threshold is not reached within the sweep cap.
Spectrum jacobi_eigen(const SymMatrix& m, bool want_vectors, JacobiOptions opts = {});

struct RowSumStats {
    std::vector<double> sums;
    double min_sum = 0.0;
    double max_sum = 0.0;
};

RowSumStats row_sum_stats(const SymMatrix& m);

/// Sum of diagonal entries.
double trace(const SymMatrix& m);

/// Classification threshold for "zero" eigenvalues: 1e-9 * max(1, |lambda_1|).
/// Single source of truth for singularity and sign-class counting.
double zero_threshold(const Spectrum& s);

struct DeterminantInfo {
    double det = 1.0;
    double abs_det = 1.0;
    bool singular = false;
};

/// Product of eigenvalues; singular iff some |lambda_i| <= zero_threshold.
DeterminantInfo determinant_from_spectrum(const Spectrum& s);

}  // namespace estrada
