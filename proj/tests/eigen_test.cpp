#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "estrada/eigen.hpp"
#include "estrada/errors.hpp"
#include "estrada/graph.hpp"
#include "estrada/scan.hpp"
#include "test_util.hpp"

using namespace estrada;

namespace {

double reconstruction_residual(const SymMatrix& m, const Spectrum& s) {
    const int n = m.order();
    const auto& v = *s.vectors;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            double entry = 0.0;
            for (int k = 0; k < n; ++k)
                entry += v[static_cast<std::size_t>(i) * n + k] * s.values[k] *
                         v[static_cast<std::size_t>(j) * n + k];
            const double d = entry - m(i, j);
            sum += d * d;
        }
    }
    return std::sqrt(sum);
}

double orthogonality_residual(const Spectrum& s) {
    const int n = s.order();
    const auto& v = *s.vectors;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            double dot = 0.0;
            for (int k = 0; k < n; ++k)
                dot += v[static_cast<std::size_t>(k) * n + i] * v[static_cast<std::size_t>(k) * n + j];
            const double d = dot - (i == j ? 1.0 : 0.0);
            sum += d * d;
        }
    }
    return std::sqrt(sum);
}

}  // namespace

TEST_CASE("jacobi on trivial matrices") {
    SymMatrix identity(3);
    for (int i = 0; i < 3; ++i) identity.set(i, i, 1.0);
    const Spectrum si = jacobi_eigen(identity, false);
    for (double v : si.values) CHECK(v == 1.0);

    const Spectrum sk2 = jacobi_eigen(adjacency_matrix(Graph::from_edge_list(2, {{0, 1}})), false);
    CHECK(sk2.values[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(sk2.values[1] == doctest::Approx(-1.0).epsilon(1e-14));

    const Spectrum zero = jacobi_eigen(SymMatrix(4), false);
    for (double v : zero.values) CHECK(v == 0.0);
}

TEST_CASE("jacobi matches the circulant spectrum of C6") {
    const Spectrum s = jacobi_eigen(adjacency_matrix(generate(FamilySpec::cycle(6))), false);
    const auto expected = oracle::cycle_spectrum(6);
    REQUIRE(s.values.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i)
        CHECK(std::abs(s.values[i] - expected[i]) <= 1e-10);
}

TEST_CASE("jacobi reconstruction and orthogonality on random matrices") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 1 + trial % 20;
        const SymMatrix m = oracle::random_symmetric(rng, n);
        const Spectrum s = jacobi_eigen(m, true);
        const double scale = std::max(1.0, m.frobenius_norm());
        CHECK(reconstruction_residual(m, s) <= 1e-10 * scale);
        CHECK(orthogonality_residual(s) <= 1e-10);
        CHECK(std::is_sorted(s.values.rbegin(), s.values.rend()));

        double value_sum = 0.0;
        for (double v : s.values) value_sum += v;
        CHECK(std::abs(value_sum - trace(m)) <= 1e-10 * scale);
    }
}

TEST_CASE("jacobi is deterministic and reports the achieved residual") {
    std::mt19937 rng(7);
    const SymMatrix m = oracle::random_symmetric(rng, 12);
    const Spectrum a = jacobi_eigen(m, false);
    const Spectrum b = jacobi_eigen(m, false);
    CHECK(a.values == b.values);
    CHECK(a.tol == b.tol);
    CHECK(a.tol <= 1e-12);
}

TEST_CASE("jacobi sweep cap raises NoConvergence with the residual") {
    std::mt19937 rng(8);
    const SymMatrix m = oracle::random_symmetric(rng, 6);
    JacobiOptions opts;
    opts.max_sweeps = 0;
    try {
        jacobi_eigen(m, false, opts);
        CHECK(false);
    } catch (const NoConvergence& e) {
        CHECK(e.residual > 0.0);
    }
}

TEST_CASE("row_sum_stats") {
    const RowSumStats star = row_sum_stats(adjacency_matrix(generate(FamilySpec::star(4))));
    CHECK(star.sums == std::vector<double>{3.0, 1.0, 1.0, 1.0});
    CHECK(star.min_sum == 1.0);
    CHECK(star.max_sum == 3.0);

    const RowSumStats c5 = row_sum_stats(adjacency_matrix(generate(FamilySpec::cycle(5))));
    CHECK(c5.min_sum == 2.0);
    CHECK(c5.max_sum == 2.0);

    const RowSumStats zero = row_sum_stats(SymMatrix(3));
    CHECK(zero.min_sum == 0.0);
    CHECK(zero.max_sum == 0.0);
}

TEST_CASE("trace") {
    CHECK(trace(signless_laplacian_matrix(Graph::from_edge_list(2, {{0, 1}}))) == 2.0);
    CHECK(trace(adjacency_matrix(generate(FamilySpec::complete(5)))) == 0.0);
    SymMatrix identity(4);
    for (int i = 0; i < 4; ++i) identity.set(i, i, 1.0);
    CHECK(trace(identity) == 4.0);
}

TEST_CASE("determinant from spectrum: examples") {
    const auto k2 = determinant_from_spectrum(
        jacobi_eigen(adjacency_matrix(Graph::from_edge_list(2, {{0, 1}})), false));
    CHECK(k2.det == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(k2.abs_det == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(!k2.singular);

    const auto k3 = determinant_from_spectrum(
        jacobi_eigen(adjacency_matrix(generate(FamilySpec::complete(3))), false));
    CHECK(k3.det == doctest::Approx(2.0).epsilon(1e-12));

    const auto c4 = determinant_from_spectrum(
        jacobi_eigen(adjacency_matrix(generate(FamilySpec::cycle(4))), false));
    CHECK(c4.singular);
}

TEST_CASE("determinant matches the integer cofactor oracle for all n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        for (std::uint64_t mask = 0; mask < exhaustive_count(n); ++mask) {
            const Graph g = graph_from_mask(n, mask);
            const auto info =
                determinant_from_spectrum(jacobi_eigen(adjacency_matrix(g), false));
            const long long expected = oracle::adjacency_det(g);
            REQUIRE(std::abs(info.det - expected) <= 1e-8);
            REQUIRE(info.singular == (expected == 0));
        }
    }
}

TEST_CASE("row-sum bracket of the leading eigenvalue on nonnegative matrices") {
    // adjacency and signless Laplacian of every graph with n <= 5
    for (int n = 1; n <= 5; ++n) {
        for (std::uint64_t mask = 0; mask < exhaustive_count(n); ++mask) {
            const Graph g = graph_from_mask(n, mask);
            for (const SymMatrix& m : {adjacency_matrix(g), signless_laplacian_matrix(g)}) {
                const RowSumStats stats = row_sum_stats(m);
                const double lead = jacobi_eigen(m, false).values.front();
                REQUIRE(stats.min_sum <= lead + 1e-9);
                REQUIRE(lead <= stats.max_sum + 1e-9);
            }
        }
    }
    // regular graphs: the bracket collapses onto the degree
    for (int n = 3; n <= 10; ++n) {
        const Graph c = generate(FamilySpec::cycle(n));
        const double lead = jacobi_eigen(adjacency_matrix(c), false).values.front();
        CHECK(std::abs(lead - 2.0) <= 1e-9);
    }
    for (int n = 1; n <= 5; ++n) {
        for (std::uint64_t mask = 0; mask < exhaustive_count(n); ++mask) {
            const Graph g = graph_from_mask(n, mask);
            const auto alpha = regularity(g);
            if (!alpha) continue;
            const SymMatrix a = adjacency_matrix(g);
            const RowSumStats stats = row_sum_stats(a);
            REQUIRE(stats.min_sum == stats.max_sum);
            REQUIRE(stats.min_sum == *alpha);
            const double lead = jacobi_eigen(a, false).values.front();
            REQUIRE(std::abs(lead - *alpha) <= 1e-9);
        }
    }
}

TEST_CASE("SymMatrix construction") {
    CHECK_THROWS_AS(SymMatrix::from_rows({{0.0, 1.0}, {2.0, 0.0}}), MatrixParseError);
    CHECK_THROWS_AS(SymMatrix::from_rows({{0.0, 1.0}}), MatrixParseError);
    CHECK_THROWS_AS(SymMatrix::from_rows({}), MatrixParseError);

    const SymMatrix m = SymMatrix::from_rows({{1.0, 2.0}, {2.0, 3.0}});
    CHECK(m(0, 1) == 2.0);
    CHECK(m.nonnegative());

    SymMatrix s(2);
    s.set(0, 1, -1.5);
    CHECK(s(1, 0) == -1.5);
    CHECK(!s.nonnegative());
    CHECK_THROWS(s.set(0, 1, std::nan("")));
}
