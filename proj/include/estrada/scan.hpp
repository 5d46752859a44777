#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "estrada/bounds.hpp"
#include "estrada/graph.hpp"

namespace estrada {

struct ScanOptions {
    DasVariant variant = DasVariant::corrected;
    BoundTolerances tols{};
    int jobs = 0;  // 0 = all hardware threads, 1 = serial reference path
};

struct Violation {
    std::string graph6;
    std::string bound_id;
    double target = 0.0;
    double value = 0.0;
    double gap = 0.0;      // positive amount by which the bound fails
    bool diagnostic = false;  // as_printed Das-family finding, expected
};

struct Equality {
    std::string graph6;
    std::string bound_id;
};

struct ScanSummary {
    long long graphs_scanned = 0;
    std::vector<Violation> violations;
    std::vector<Equality> equalities;
    double duration_seconds = 0.0;

    /// True when some violation is not an as_printed diagnostic.
    bool has_real_violations() const;
};

/// Number of labeled graphs on n vertices: 2^(n(n-1)/2).
std::uint64_t exhaustive_count(int n);

/// Graph whose edge set is the bitmask over pairs in lexicographic (i, j)
/// order. Requires n(n-1)/2 <= 63.
Graph graph_from_mask(int n, std::uint64_t mask);

// Serial reference implementation and OpenMP worker-pool implementation of
// the same sweep; results are canonically sorted and identical. scan_graphs /
// scan_exhaustive dispatch on opts.jobs.
ScanSummary scan_graphs_serial(std::span<const Graph> graphs, const ScanOptions& opts = {});
ScanSummary scan_graphs_parallel(std::span<const Graph> graphs, const ScanOptions& opts = {});
ScanSummary scan_graphs(std::span<const Graph> graphs, const ScanOptions& opts = {});

ScanSummary scan_exhaustive_serial(int n, const ScanOptions& opts = {});
ScanSummary scan_exhaustive_parallel(int n, const ScanOptions& opts = {});
ScanSummary scan_exhaustive(int n, const ScanOptions& opts = {});

}  // namespace estrada
