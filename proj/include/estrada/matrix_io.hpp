#pragma once

#include <iosfwd>
#include <optional>

#include "estrada/bounds.hpp"
#include "estrada/sym_matrix.hpp"

namespace estrada {

/// Parses whitespace-separated rows, one per line; all rows must have equal
/// length and the result must be exactly symmetric. Throws MatrixParseError
/// with a row/column diagnostic.
SymMatrix parse_matrix_text(std::istream& in);

/// Report for an arbitrary symmetric matrix: Estrada index, trace, row-sum
/// bracket of the largest eigenvalue, and the row-sum Estrada bound. Bracket
/// and bound require a nonnegative matrix; otherwise they are skipped.
struct MatrixReport {
    int order = 0;
    double estrada = 0.0;
    double trace = 0.0;
    double min_row_sum = 0.0;
    double max_row_sum = 0.0;
    double rho1 = 0.0;  // largest eigenvalue
    bool nonnegative = false;
    std::optional<bool> bracket_holds;  // min_row_sum <= rho1 <= max_row_sum
    std::optional<double> bound_value;
    std::optional<bool> bound_holds;
    std::optional<bool> bound_equality;
};

MatrixReport evaluate_matrix(const SymMatrix& m, BoundTolerances tols = {});

}  // namespace estrada
