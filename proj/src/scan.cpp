#include "estrada/scan.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace estrada {

bool ScanSummary::has_real_violations() const {
    return std::any_of(violations.begin(), violations.end(),
                       [](const Violation& v) { return !v.diagnostic; });
}

std::uint64_t exhaustive_count(int n) {
    return std::uint64_t{1} << (static_cast<std::uint64_t>(n) * (n - 1) / 2);
}

Graph graph_from_mask(int n, std::uint64_t mask) {
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j, ++bit) {
            if ((mask >> bit) & 1) edges.emplace_back(i, j);
        }
    }
    return Graph::from_edge_list(n, edges);
}

namespace {

bool das_family(const std::string& id) {
    return id == "das" || id == "das_avgdeg" || id == "combined_det";
}

void collect(const BoundReport& report, const ScanOptions& opts, std::vector<Violation>& violations,
             std::vector<Equality>& equalities) {
    for (const BoundOutcome& o : report.outcomes) {
        if (!o.applicable) continue;
        if (!*o.holds) {
            const double tv = target_value(report.inv, o.target);
            Violation v;
            v.graph6 = report.graph6;
            v.bound_id = o.bound_id;
            v.target = tv;
            v.value = o.value;
            v.gap = o.direction == BoundDirection::lower ? o.value - tv : tv - o.value;
            v.diagnostic = opts.variant == DasVariant::as_printed && das_family(o.bound_id);
            violations.push_back(std::move(v));
        } else if (*o.equality) {
            equalities.push_back({report.graph6, o.bound_id});
        }
    }
}

void canonicalize(ScanSummary& summary) {
    std::sort(summary.violations.begin(), summary.violations.end(),
              [](const Violation& a, const Violation& b) {
                  return std::tie(a.graph6, a.bound_id) < std::tie(b.graph6, b.bound_id);
              });
    std::sort(summary.equalities.begin(), summary.equalities.end(),
              [](const Equality& a, const Equality& b) {
                  return std::tie(a.graph6, a.bound_id) < std::tie(b.graph6, b.bound_id);
              });
}

// One sweep over graphs produced by an indexed source. The parallel version
// is the OpenMP kernel; the serial version is the reference it is tested
// against.
template <typename MakeGraph>
ScanSummary sweep_serial(std::uint64_t count, const MakeGraph& make, const ScanOptions& opts) {
    const auto start = std::chrono::steady_clock::now();
    ScanSummary summary;
    summary.graphs_scanned = static_cast<long long>(count);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        const BoundReport report = evaluate_all(make(idx), opts.variant, opts.tols);
        collect(report, opts, summary.violations, summary.equalities);
    }
    canonicalize(summary);
    summary.duration_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return summary;
}

template <typename MakeGraph>
ScanSummary sweep_parallel(std::uint64_t count, const MakeGraph& make, const ScanOptions& opts) {
#ifndef _OPENMP
    return sweep_serial(count, make, opts);
#else
    const auto start = std::chrono::steady_clock::now();
    ScanSummary summary;
    summary.graphs_scanned = static_cast<long long>(count);
    const long long total = static_cast<long long>(count);
    const int threads = opts.jobs > 0 ? opts.jobs : omp_get_max_threads();
#pragma omp parallel num_threads(threads)
    {
        std::vector<Violation> local_violations;
        std::vector<Equality> local_equalities;
#pragma omp for schedule(dynamic, 64)
        for (long long idx = 0; idx < total; ++idx) {
            const BoundReport report =
                evaluate_all(make(static_cast<std::uint64_t>(idx)), opts.variant, opts.tols);
            collect(report, opts, local_violations, local_equalities);
        }
#pragma omp critical
        {
            summary.violations.insert(summary.violations.end(), local_violations.begin(),
                                      local_violations.end());
            summary.equalities.insert(summary.equalities.end(), local_equalities.begin(),
                                      local_equalities.end());
        }
    }
    canonicalize(summary);
    summary.duration_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return summary;
#endif
}

}  // namespace

ScanSummary scan_graphs_serial(std::span<const Graph> graphs, const ScanOptions& opts) {
    return sweep_serial(graphs.size(), [&](std::uint64_t i) { return graphs[i]; }, opts);
}

ScanSummary scan_graphs_parallel(std::span<const Graph> graphs, const ScanOptions& opts) {
    return sweep_parallel(graphs.size(), [&](std::uint64_t i) { return graphs[i]; }, opts);
}

ScanSummary scan_graphs(std::span<const Graph> graphs, const ScanOptions& opts) {
    return opts.jobs == 1 ? scan_graphs_serial(graphs, opts) : scan_graphs_parallel(graphs, opts);
}

namespace {

void check_exhaustive_order(int n) {
    if (n < 1 || n > 8) {
        throw std::invalid_argument("exhaustive scan supports 1 <= n <= 8, got " +
                                    std::to_string(n));
    }
}

}  // namespace

ScanSummary scan_exhaustive_serial(int n, const ScanOptions& opts) {
    check_exhaustive_order(n);
    return sweep_serial(exhaustive_count(n), [n](std::uint64_t mask) { return graph_from_mask(n, mask); },
                        opts);
}

ScanSummary scan_exhaustive_parallel(int n, const ScanOptions& opts) {
    check_exhaustive_order(n);
    return sweep_parallel(exhaustive_count(n),
                          [n](std::uint64_t mask) { return graph_from_mask(n, mask); }, opts);
}

ScanSummary scan_exhaustive(int n, const ScanOptions& opts) {
    return opts.jobs == 1 ? scan_exhaustive_serial(n, opts) : scan_exhaustive_parallel(n, opts);
}

}  // namespace estrada
