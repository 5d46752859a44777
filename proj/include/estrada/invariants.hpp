#pragma once

#include <array>

#include "estrada/eigen.hpp"
#include "estrada/graph.hpp"

namespace estrada {

/// All scalar spectral invariants of one graph, from one adjacency eigensolve
/// and one signless-Laplacian eigensolve.
struct InvariantSet {
    int n = 0;
    int m = 0;
    double lambda1 = 0.0;   // largest adjacency eigenvalue
    double q1 = 0.0;        // largest signless Laplacian eigenvalue
    double estrada = 0.0;   // sum of exp(lambda_i)
    double energy = 0.0;    // sum of |lambda_i|
    double slee = 0.0;      // sum of exp(q_i)
    double q_energy = 0.0;  // sum of |q_i - 2m/n|
    double det_a = 0.0;
    double abs_det_a = 0.0;
    bool singular = false;
    int k_nonneg = 0;  // adjacency eigenvalues >= -tau
    int k_pos = 0;     // adjacency eigenvalues > +tau
    long long triangles = 0;
    std::array<double, 4> moments{};  // M0..M3
};

/// Sum of lambda_i^k. Throws UnsupportedMoment for k > 12.
double spectral_moment(const Spectrum& s, int k);

/// Sum of exp(lambda_i), accumulated from the smallest eigenvalue upward.
/// Throws OverflowGuard when lambda_1 > 700.
double estrada_index(const Spectrum& s);

/// Sum of |lambda_i|.
double graph_energy(const Spectrum& s);

/// True iff the positive eigenvalue parts sum to E/2 and the negative parts
/// to -E/2, both within tol. Meaningful for zero-trace spectra.
bool half_energy_identity_check(const Spectrum& s, double tol);

/// Sum of exp(q_i) over a signless-Laplacian spectrum. Throws NotPSD if some
/// eigenvalue is below -1e-6.
double slee(const Spectrum& q_spectrum);

/// Sum of |q_i - 2m/n|.
double signless_laplacian_energy(const Spectrum& q_spectrum, int n, int m);

struct EigenClassCounts {
    int nonneg = 0;
    int pos = 0;
};

/// Counts eigenvalues >= -tau and > +tau with tau = zero_threshold(s).
EigenClassCounts count_eigen_classes(const Spectrum& s);

InvariantSet compute_invariants(const Graph& g);

}  // namespace estrada
