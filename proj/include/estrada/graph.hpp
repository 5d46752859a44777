#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "estrada/sym_matrix.hpp"

namespace estrada {

/// Simple undirected graph: vertices 0..n-1, edges stored as a sorted,
/// duplicate-free list of pairs (i, j) with i < j. No loops, no multi-edges.
class Graph {
public:
    /// Normalizes pair order and removes duplicates; rejects loops and
    /// out-of-range endpoints with InvalidEdge.
    static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& pairs);

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool has_edge(int i, int j) const;
    std::vector<int> degrees() const;
    /// Sorted neighbour lists, one per vertex.
    std::vector<std::vector<int>> adjacency_lists() const;

private:
    Graph() = default;

    int n_ = 1;
    std::vector<std::pair<int, int>> edges_;
};

enum class Family { empty, complete, star, path, cycle, complete_bipartite };

/// Parameterized named family. Single-parameter families use `size`;
/// complete_bipartite uses the two part sizes.
struct FamilySpec {
    Family kind = Family::empty;
    int size = 0;
    int part_p = 0;
    int part_q = 0;

    static FamilySpec empty(int n) { return {Family::empty, n, 0, 0}; }
    static FamilySpec complete(int n) { return {Family::complete, n, 0, 0}; }
    static FamilySpec star(int n) { return {Family::star, n, 0, 0}; }
    static FamilySpec path(int n) { return {Family::path, n, 0, 0}; }
    static FamilySpec cycle(int n) { return {Family::cycle, n, 0, 0}; }
    static FamilySpec complete_bipartite(int p, int q) {
        return {Family::complete_bipartite, p + q, p, q};
    }
};

/// Canonical labeled instance: star center is vertex 0, paths and cycles run
/// in index order, bipartition blocks are contiguous. Throws
/// InvalidFamilyParam outside each family's range (cycle needs n >= 3,
/// complete_bipartite needs p, q >= 1, everything else n >= 1).
Graph generate(const FamilySpec& spec);

const char* family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);

struct Bipartition {
    std::vector<int> left;
    std::vector<int> right;
};

/// Breadth-first 2-coloring per component; a valid bipartition (every edge
/// crosses it) or nullopt when an odd cycle exists.
std::optional<Bipartition> is_bipartite(const Graph& g);

bool is_connected(const Graph& g);

/// Common degree if the graph is regular, nullopt otherwise.
std::optional<int> regularity(const Graph& g);

/// Exact triangle count by common-neighbour intersection over edges.
long long triangle_count(const Graph& g);

/// 0/1 matrix with zero diagonal.
SymMatrix adjacency_matrix(const Graph& g);

/// Q = D + A. Row sum at vertex i is 2*deg(i); trace is 2m.
SymMatrix signless_laplacian_matrix(const Graph& g);

}  // namespace estrada
