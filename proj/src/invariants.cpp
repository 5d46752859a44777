#include "estrada/invariants.hpp"

#include <cmath>
#include <string>

#include "estrada/errors.hpp"

namespace estrada {

double spectral_moment(const Spectrum& s, int k) {
    if (k < 0 || k > 12) {
        throw UnsupportedMoment("spectral moment order " + std::to_string(k) +
                                " outside [0, 12]");
    }
    if (k == 0) return static_cast<double>(s.order());
    double sum = 0.0;
    for (double v : s.values) {
        double p = v;
        for (int c = 1; c < k; ++c) p *= v;
        sum += p;
    }
    return sum;
}

double estrada_index(const Spectrum& s) {
    if (!s.values.empty() && s.values.front() > 700.0) {
        throw OverflowGuard("exp(lambda_1) exceeds double range (lambda_1 = " +
                            std::to_string(s.values.front()) + ")");
    }
    // smallest exponentials first, to limit accumulation error
    double sum = 0.0;
    for (auto it = s.values.rbegin(); it != s.values.rend(); ++it) sum += std::exp(*it);
    return sum;
}

double graph_energy(const Spectrum& s) {
    double sum = 0.0;
    for (double v : s.values) sum += std::abs(v);
    return sum;
}

bool half_energy_identity_check(const Spectrum& s, double tol) {
    double pos = 0.0, neg = 0.0;
    for (double v : s.values) {
        if (v > 0.0) pos += v;
        if (v < 0.0) neg += v;
    }
    const double half = graph_energy(s) / 2.0;
    return std::abs(pos - half) <= tol && std::abs(neg + half) <= tol;
}

double slee(const Spectrum& q_spectrum) {
    if (!q_spectrum.values.empty() && q_spectrum.values.back() < -1e-6) {
        throw NotPSD("signless Laplacian spectrum has eigenvalue " +
                     std::to_string(q_spectrum.values.back()));
    }
    double sum = 0.0;
    for (auto it = q_spectrum.values.rbegin(); it != q_spectrum.values.rend(); ++it)
        sum += std::exp(*it);
    return sum;
}

double signless_laplacian_energy(const Spectrum& q_spectrum, int n, int m) {
    const double mean = 2.0 * m / n;
    double sum = 0.0;
    for (double q : q_spectrum.values) sum += std::abs(q - mean);
    return sum;
}

EigenClassCounts count_eigen_classes(const Spectrum& s) {
    const double tau = zero_threshold(s);
    EigenClassCounts counts;
    for (double v : s.values) {
        if (v >= -tau) ++counts.nonneg;
        if (v > tau) ++counts.pos;
    }
    return counts;
}

InvariantSet compute_invariants(const Graph& g) {
    const Spectrum a = jacobi_eigen(adjacency_matrix(g), false);
    const Spectrum q = jacobi_eigen(signless_laplacian_matrix(g), false);

    InvariantSet inv;
    inv.n = g.n();
    inv.m = g.m();
    inv.lambda1 = a.values.front();
    inv.q1 = q.values.front();
    inv.estrada = estrada_index(a);
    inv.energy = graph_energy(a);
    inv.slee = slee(q);
    inv.q_energy = signless_laplacian_energy(q, g.n(), g.m());
    const DeterminantInfo det = determinant_from_spectrum(a);
    inv.det_a = det.det;
    inv.abs_det_a = det.abs_det;
    inv.singular = det.singular;
    const EigenClassCounts counts = count_eigen_classes(a);
    inv.k_nonneg = counts.nonneg;
    inv.k_pos = counts.pos;
    inv.triangles = triangle_count(g);
    for (int k = 0; k < 4; ++k) inv.moments[k] = spectral_moment(a, k);
    return inv;
}

}  // namespace estrada
