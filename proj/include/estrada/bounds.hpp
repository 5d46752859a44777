#pragma once

#include <optional>
#include <string>
#include <vector>

#include "estrada/graph.hpp"
#include "estrada/invariants.hpp"

namespace estrada {

/// Sign used in the determinant-based energy bounds. The printed form adds
/// ln(lambda_1); the corrected form subtracts it (the printed sign fails on
/// K_3, where the bound would exceed the energy).
enum class DasVariant { corrected, as_printed };

// EE lower bounds ------------------------------------------------------------

/// exp(2m/n) + (n-1) - 2m/n.
double bound_j(int n, int m);

/// exp(alpha) + n - alpha - 1; equals bound_j when 2m/n = alpha.
double bound_j_regular(int n, int alpha);

/// 2*cosh(2m/n) + (n-2); for connected bipartite graphs, n >= 2.
double bound_jb(int n, int m);

/// sqrt(n^2 + 4m).
double bound_cp(int n, int m);

/// E/2 + exp(lambda_1) + (k_nonneg - 1) - lambda_1.
double bound_energy_estrada(double energy, double lambda1, int k_nonneg);

/// E/2 + exp(2m/n) + (k_nonneg - 1) - 2m/n.
double bound_energy_estrada_avgdeg(double energy, int n, int m, int k_nonneg);

/// (1/2)(n - 1 + ln|det A| -/+ ln(lambda_1)) + exp(lambda_1) + (k_pos - 1)
/// - lambda_1/2; for connected nonsingular graphs.
double bound_combined_det(int n, double abs_det, double lambda1, int k_pos, DasVariant variant);

/// exp(r) + Tr(M) + (n-1) - r with r the minimum row sum; valid for symmetric
/// nonnegative matrices, nullopt when a negative entry is present.
std::optional<double> matrix_estrada_bound(const SymMatrix& m);

// EE upper bound -------------------------------------------------------------

/// n - 1 + exp(sqrt(2m)).
double bound_dlp_upper(int n, int m);

// E bounds -------------------------------------------------------------------

/// lambda_1 + sqrt((n-1)(2m - lambda_1^2)); negative radicand clamped to 0.
double koolen_moulton_upper(int n, int m, double lambda1);

/// lambda_1 + (n-1) + ln|det A| -/+ ln(lambda_1); for connected nonsingular
/// graphs.
double das_energy_lower(int n, double lambda1, double abs_det, DasVariant variant);

/// Same with lambda_1 replaced by 2m/n.
double das_energy_lower_avgdeg(int n, int m, double abs_det, DasVariant variant);

// SLEE lower bounds ----------------------------------------------------------

/// exp(4m/n) + (n-1) + 2m - 4m/n.
double bound_slee_nm(int n, int m);

/// QE + exp(q_1) + (n-1) - q_1; for connected graphs (and edgeless ones,
/// which attain it with equality).
double bound_slee_qe(double q_energy, double q1, int n);

/// QE + exp(4m/n) + (n-1) - 4m/n.
double bound_slee_qe_avgdeg(double q_energy, int n, int m);

// Per-graph evaluation --------------------------------------------------------

enum class BoundTarget { estrada, energy, slee };
enum class BoundDirection { lower, upper };

const char* to_string(BoundTarget t);
const char* to_string(BoundDirection d);

struct BoundTolerances {
    double holds_rel = 1e-9;  // direction-aware slack, relative to max(1, |target|)
    double eq_rel = 1e-7;     // equality window, relative to max(1, |target|)
};

struct BoundOutcome {
    std::string bound_id;
    BoundTarget target = BoundTarget::estrada;
    BoundDirection direction = BoundDirection::lower;
    bool applicable = false;
    std::string reason;  // set only when not applicable
    double value = 0.0;  // NaN when not applicable
    std::optional<bool> holds;
    std::optional<bool> equality;
};

struct BoundReport {
    std::string graph6;
    InvariantSet inv;
    std::vector<BoundOutcome> outcomes;
};

double target_value(const InvariantSet& inv, BoundTarget t);

/// Evaluates the full bound catalog against one graph, with per-bound
/// applicability gates. holds is a direction-aware comparison with
/// holds_rel slack; equality additionally requires |target - value| within
/// the eq_rel window, so equality implies holds.
BoundReport evaluate_all(const Graph& g, DasVariant variant = DasVariant::corrected,
                         BoundTolerances tols = {});

}  // namespace estrada
