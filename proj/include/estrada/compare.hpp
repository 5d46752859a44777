#pragma once

#include <optional>
#include <string>

#include "estrada/graph.hpp"

namespace estrada {

/// One row of the family comparison table: computed Estrada index next to
/// the closed-form-compatible J and CP values (JB when bipartite).
struct CompareRow {
    std::string family;
    int n = 0;
    int m = 0;
    double estrada = 0.0;
    double j = 0.0;
    double cp = 0.0;
    std::optional<double> jb;
    bool dominance = false;  // j >= cp
};

/// Builds the row for one family member. Propagates InvalidFamilyParam for
/// out-of-range n and OverflowGuard when exp(lambda_1) leaves double range.
CompareRow compare_row(Family family, int n);

}  // namespace estrada
