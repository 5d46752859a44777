#pragma once

#include <span>
#include <vector>

namespace estrada {

/// Dense real symmetric matrix. Symmetry is exact by construction: writes go
/// through set(), which mirrors the entry, and from_rows() rejects input that
/// is not bitwise symmetric.
class SymMatrix {
public:
    explicit SymMatrix(int order);

    /// Builds from full row data; requires a square layout, finite values and
    /// exact symmetry. Throws MatrixParseError with a row/column diagnostic.
    static SymMatrix from_rows(const std::vector<std::vector<double>>& rows);

    int order() const { return n_; }
    double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    /// Sets entries (i,j) and (j,i). Rejects non-finite values.
    void set(int i, int j, double value);

    double frobenius_norm() const;
    bool nonnegative() const;
    std::span<const double> data() const { return a_; }

private:
    int n_;
    std::vector<double> a_;  // row-major n x n
};

}  // namespace estrada
