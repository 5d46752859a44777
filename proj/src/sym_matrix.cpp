#include "estrada/sym_matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "estrada/errors.hpp"

namespace estrada {

SymMatrix::SymMatrix(int order) : n_(order) {
    if (order < 1) throw std::invalid_argument("SymMatrix order must be >= 1");
    a_.assign(static_cast<std::size_t>(order) * order, 0.0);
}

SymMatrix SymMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
    const int n = static_cast<int>(rows.size());
    if (n == 0) throw MatrixParseError("matrix has no rows");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n) {
            throw MatrixParseError("row " + std::to_string(i + 1) + " has " +
                                   std::to_string(rows[i].size()) + " entries, expected " +
                                   std::to_string(n));
        }
    }
    SymMatrix m(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (!std::isfinite(rows[i][j])) {
                throw MatrixParseError("non-finite entry at row " + std::to_string(i + 1) +
                                       ", column " + std::to_string(j + 1));
            }
            if (rows[i][j] != rows[j][i]) {
                throw MatrixParseError("asymmetric at row " + std::to_string(i + 1) +
                                       ", column " + std::to_string(j + 1));
            }
            m.a_[static_cast<std::size_t>(i) * n + j] = rows[i][j];
        }
    }
    return m;
}

void SymMatrix::set(int i, int j, double value) {
    if (i < 0 || j < 0 || i >= n_ || j >= n_) throw std::out_of_range("SymMatrix::set index");
    if (!std::isfinite(value)) throw std::invalid_argument("SymMatrix entries must be finite");
    a_[static_cast<std::size_t>(i) * n_ + j] = value;
    a_[static_cast<std::size_t>(j) * n_ + i] = value;
}

double SymMatrix::frobenius_norm() const {
    double s = 0.0;
    for (double v : a_) s += v * v;
    return std::sqrt(s);
}

bool SymMatrix::nonnegative() const {
    for (double v : a_) {
        if (v < 0.0) return false;
    }
    return true;
}

}  // namespace estrada
