#include "estrada/bounds.hpp"

#include <cmath>
#include <limits>

#include "estrada/graph6.hpp"

namespace estrada {

double bound_j(int n, int m) {
    const double x = 2.0 * m / n;
    return std::exp(x) + (n - 1) - x;
}

double bound_j_regular(int n, int alpha) {
    return std::exp(static_cast<double>(alpha)) + n - alpha - 1;
}

double bound_jb(int n, int m) {
    const double x = 2.0 * m / n;
    return 2.0 * std::cosh(x) + (n - 2);
}

double bound_cp(int n, int m) {
    return std::sqrt(static_cast<double>(n) * n + 4.0 * m);
}

double bound_energy_estrada(double energy, double lambda1, int k_nonneg) {
    return energy / 2.0 + std::exp(lambda1) + (k_nonneg - 1) - lambda1;
}

double bound_energy_estrada_avgdeg(double energy, int n, int m, int k_nonneg) {
    const double x = 2.0 * m / n;
    return energy / 2.0 + std::exp(x) + (k_nonneg - 1) - x;
}

double bound_combined_det(int n, double abs_det, double lambda1, int k_pos, DasVariant variant) {
    const double log_term = variant == DasVariant::corrected ? -std::log(lambda1)
                                                             : std::log(lambda1);
    return 0.5 * (n - 1 + std::log(abs_det) + log_term) + std::exp(lambda1) + (k_pos - 1) -
           lambda1 / 2.0;
}

std::optional<double> matrix_estrada_bound(const SymMatrix& m) {
    if (!m.nonnegative()) return std::nullopt;
    const double r = row_sum_stats(m).min_sum;
    return std::exp(r) + trace(m) + (m.order() - 1) - r;
}

double bound_dlp_upper(int n, int m) {
    return n - 1 + std::exp(std::sqrt(2.0 * m));
}

double koolen_moulton_upper(int n, int m, double lambda1) {
    const double radicand = (n - 1) * std::max(0.0, 2.0 * m - lambda1 * lambda1);
    return lambda1 + std::sqrt(radicand);
}

double das_energy_lower(int n, double lambda1, double abs_det, DasVariant variant) {
    const double log_term = variant == DasVariant::corrected ? -std::log(lambda1)
                                                             : std::log(lambda1);
    return lambda1 + (n - 1) + std::log(abs_det) + log_term;
}

double das_energy_lower_avgdeg(int n, int m, double abs_det, DasVariant variant) {
    const double x = 2.0 * m / n;
    const double log_term = variant == DasVariant::corrected ? -std::log(x) : std::log(x);
    return x + (n - 1) + std::log(abs_det) + log_term;
}

double bound_slee_nm(int n, int m) {
    const double x = 4.0 * m / n;
    return std::exp(x) + (n - 1) + 2.0 * m - x;
}

double bound_slee_qe(double q_energy, double q1, int n) {
    return q_energy + std::exp(q1) + (n - 1) - q1;
}

double bound_slee_qe_avgdeg(double q_energy, int n, int m) {
    const double x = 4.0 * m / n;
    return q_energy + std::exp(x) + (n - 1) - x;
}

const char* to_string(BoundTarget t) {
    switch (t) {
        case BoundTarget::estrada: return "estrada";
        case BoundTarget::energy: return "energy";
        case BoundTarget::slee: return "slee";
    }
    return "?";
}

const char* to_string(BoundDirection d) {
    return d == BoundDirection::lower ? "lower" : "upper";
}

double target_value(const InvariantSet& inv, BoundTarget t) {
    switch (t) {
        case BoundTarget::estrada: return inv.estrada;
        case BoundTarget::energy: return inv.energy;
        case BoundTarget::slee: return inv.slee;
    }
    return 0.0;
}

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct CatalogBuilder {
    const InvariantSet& inv;
    const BoundTolerances& tols;
    std::vector<BoundOutcome>& out;

    void add(const char* id, BoundTarget target, BoundDirection dir, double value) {
        const double tv = target_value(inv, target);
        const double holds_tol = tols.holds_rel * std::max(1.0, std::abs(tv));
        const double eq_tol = tols.eq_rel * std::max(1.0, std::abs(tv));
        BoundOutcome o;
        o.bound_id = id;
        o.target = target;
        o.direction = dir;
        o.applicable = true;
        o.value = value;
        const bool holds = dir == BoundDirection::lower ? value <= tv + holds_tol
                                                        : value >= tv - holds_tol;
        o.holds = holds;
        o.equality = holds && std::abs(tv - value) <= eq_tol;
        out.push_back(std::move(o));
    }

    void skip(const char* id, BoundTarget target, BoundDirection dir, const char* reason) {
        BoundOutcome o;
        o.bound_id = id;
        o.target = target;
        o.direction = dir;
        o.applicable = false;
        o.reason = reason;
        o.value = kNaN;
        out.push_back(std::move(o));
    }
};

}  // namespace

BoundReport evaluate_all(const Graph& g, DasVariant variant, BoundTolerances tols) {
    BoundReport report;
    report.graph6 = encode_graph6(g);
    report.inv = compute_invariants(g);
    const InvariantSet& inv = report.inv;

    const bool connected = is_connected(g);
    const bool bipartite = is_bipartite(g).has_value();
    const std::optional<int> alpha = regularity(g);
    const bool das_ok = connected && !inv.singular;

    CatalogBuilder cat{inv, tols, report.outcomes};
    const auto EE = BoundTarget::estrada;
    const auto E = BoundTarget::energy;
    const auto SL = BoundTarget::slee;
    const auto lower = BoundDirection::lower;
    const auto upper = BoundDirection::upper;

    cat.add("J", EE, lower, bound_j(inv.n, inv.m));
    if (alpha) {
        cat.add("J_regular", EE, lower, bound_j_regular(inv.n, *alpha));
    } else {
        cat.skip("J_regular", EE, lower, "graph is not regular");
    }
    if (inv.n < 2) {
        cat.skip("JB", EE, lower, "order below 2");
    } else if (!bipartite) {
        cat.skip("JB", EE, lower, "graph is not bipartite");
    } else if (!connected) {
        cat.skip("JB", EE, lower, "graph is not connected");
    } else {
        cat.add("JB", EE, lower, bound_jb(inv.n, inv.m));
    }
    cat.add("CP", EE, lower, bound_cp(inv.n, inv.m));
    cat.add("dlp_upper", EE, upper, bound_dlp_upper(inv.n, inv.m));
    cat.add("energy_estrada", EE, lower,
            bound_energy_estrada(inv.energy, inv.lambda1, inv.k_nonneg));
    cat.add("energy_estrada_avgdeg", EE, lower,
            bound_energy_estrada_avgdeg(inv.energy, inv.n, inv.m, inv.k_nonneg));
    if (das_ok) {
        cat.add("combined_det", EE, lower,
                bound_combined_det(inv.n, inv.abs_det_a, inv.lambda1, inv.k_pos, variant));
    } else {
        cat.skip("combined_det", EE, lower,
                 connected ? "adjacency matrix is singular" : "graph is not connected");
    }
    cat.add("rowsum_A", EE, lower, *matrix_estrada_bound(adjacency_matrix(g)));

    cat.add("koolen_moulton", E, upper, koolen_moulton_upper(inv.n, inv.m, inv.lambda1));
    if (das_ok) {
        cat.add("das", E, lower, das_energy_lower(inv.n, inv.lambda1, inv.abs_det_a, variant));
        cat.add("das_avgdeg", E, lower,
                das_energy_lower_avgdeg(inv.n, inv.m, inv.abs_det_a, variant));
    } else {
        const char* reason = connected ? "adjacency matrix is singular" : "graph is not connected";
        cat.skip("das", E, lower, reason);
        cat.skip("das_avgdeg", E, lower, reason);
    }

    cat.add("slee_nm", SL, lower, bound_slee_nm(inv.n, inv.m));
    if (connected || inv.m == 0) {
        cat.add("slee_qe", SL, lower, bound_slee_qe(inv.q_energy, inv.q1, inv.n));
    } else {
        cat.skip("slee_qe", SL, lower, "graph is not connected");
    }
    cat.add("slee_qe_avgdeg", SL, lower, bound_slee_qe_avgdeg(inv.q_energy, inv.n, inv.m));
    cat.add("rowsum_Q", SL, lower, *matrix_estrada_bound(signless_laplacian_matrix(g)));

    return report;
}

}  // namespace estrada
