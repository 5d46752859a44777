#include "estrada/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "estrada/errors.hpp"

namespace estrada {

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& pairs) {
    if (n < 1) throw InvalidEdge("graph needs at least one vertex, got n = " + std::to_string(n));
    std::vector<std::pair<int, int>> edges;
    edges.reserve(pairs.size());
    for (auto [i, j] : pairs) {
        if (i == j) {
            throw InvalidEdge("loop at vertex " + std::to_string(i));
        }
        if (i < 0 || j < 0 || i >= n || j >= n) {
            throw InvalidEdge("edge (" + std::to_string(i) + ", " + std::to_string(j) +
                              ") out of range for n = " + std::to_string(n));
        }
        if (i > j) std::swap(i, j);
        edges.emplace_back(i, j);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    Graph g;
    g.n_ = n;
    g.edges_ = std::move(edges);
    return g;
}

bool Graph::has_edge(int i, int j) const {
    if (i > j) std::swap(i, j);
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(i, j));
}

std::vector<int> Graph::degrees() const {
    std::vector<int> deg(n_, 0);
    for (auto [i, j] : edges_) {
        ++deg[i];
        ++deg[j];
    }
    return deg;
}

std::vector<std::vector<int>> Graph::adjacency_lists() const {
    std::vector<std::vector<int>> adj(n_);
    for (auto [i, j] : edges_) {
        adj[i].push_back(j);
        adj[j].push_back(i);
    }
    for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
    return adj;
}

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw InvalidFamilyParam(msg);
}

}  // namespace

Graph generate(const FamilySpec& spec) {
    std::vector<std::pair<int, int>> edges;
    switch (spec.kind) {
        case Family::empty:
            require(spec.size >= 1, "empty graph needs n >= 1");
            return Graph::from_edge_list(spec.size, edges);
        case Family::complete:
            require(spec.size >= 1, "complete graph needs n >= 1");
            for (int i = 0; i < spec.size; ++i)
                for (int j = i + 1; j < spec.size; ++j) edges.emplace_back(i, j);
            return Graph::from_edge_list(spec.size, edges);
        case Family::star:
            require(spec.size >= 1, "star graph needs n >= 1");
            for (int i = 1; i < spec.size; ++i) edges.emplace_back(0, i);
            return Graph::from_edge_list(spec.size, edges);
        case Family::path:
            require(spec.size >= 1, "path graph needs n >= 1");
            for (int i = 0; i + 1 < spec.size; ++i) edges.emplace_back(i, i + 1);
            return Graph::from_edge_list(spec.size, edges);
        case Family::cycle:
            require(spec.size >= 3, "cycle graph needs n >= 3");
            for (int i = 0; i + 1 < spec.size; ++i) edges.emplace_back(i, i + 1);
            edges.emplace_back(0, spec.size - 1);
            return Graph::from_edge_list(spec.size, edges);
        case Family::complete_bipartite:
            require(spec.part_p >= 1 && spec.part_q >= 1, "complete bipartite graph needs p, q >= 1");
            for (int i = 0; i < spec.part_p; ++i)
                for (int j = 0; j < spec.part_q; ++j) edges.emplace_back(i, spec.part_p + j);
            return Graph::from_edge_list(spec.part_p + spec.part_q, edges);
    }
    throw InvalidFamilyParam("unknown family");
}

const char* family_name(Family f) {
    switch (f) {
        case Family::empty: return "empty";
        case Family::complete: return "complete";
        case Family::star: return "star";
        case Family::path: return "path";
        case Family::cycle: return "cycle";
        case Family::complete_bipartite: return "complete_bipartite";
    }
    return "?";
}

std::optional<Family> family_from_name(std::string_view name) {
    for (Family f : {Family::empty, Family::complete, Family::star, Family::path, Family::cycle,
                     Family::complete_bipartite}) {
        if (name == family_name(f)) return f;
    }
    return std::nullopt;
}

std::optional<Bipartition> is_bipartite(const Graph& g) {
    const auto adj = g.adjacency_lists();
    std::vector<int> color(g.n(), -1);
    for (int start = 0; start < g.n(); ++start) {
        if (color[start] >= 0) continue;
        color[start] = 0;
        std::queue<int> queue;
        queue.push(start);
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop();
            for (int w : adj[v]) {
                if (color[w] < 0) {
                    color[w] = 1 - color[v];
                    queue.push(w);
                } else if (color[w] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition parts;
    for (int v = 0; v < g.n(); ++v) {
        (color[v] == 0 ? parts.left : parts.right).push_back(v);
    }
    return parts;
}

bool is_connected(const Graph& g) {
    const auto adj = g.adjacency_lists();
    std::vector<char> seen(g.n(), 0);
    std::queue<int> queue;
    seen[0] = 1;
    queue.push(0);
    int count = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop();
        for (int w : adj[v]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                queue.push(w);
            }
        }
    }
    return count == g.n();
}

std::optional<int> regularity(const Graph& g) {
    const auto deg = g.degrees();
    for (int d : deg) {
        if (d != deg[0]) return std::nullopt;
    }
    return deg[0];
}

long long triangle_count(const Graph& g) {
    const auto adj = g.adjacency_lists();
    long long incidences = 0;  // (edge, common neighbour) pairs; each triangle appears 3 times
    for (auto [i, j] : g.edges()) {
        const auto& a = adj[i];
        const auto& b = adj[j];
        std::size_t p = 0, q = 0;
        while (p < a.size() && q < b.size()) {
            if (a[p] < b[q]) {
                ++p;
            } else if (a[p] > b[q]) {
                ++q;
            } else {
                ++incidences;
                ++p;
                ++q;
            }
        }
    }
    return incidences / 3;
}

SymMatrix adjacency_matrix(const Graph& g) {
    SymMatrix a(g.n());
    for (auto [i, j] : g.edges()) a.set(i, j, 1.0);
    return a;
}

SymMatrix signless_laplacian_matrix(const Graph& g) {
    SymMatrix q(g.n());
    for (auto [i, j] : g.edges()) q.set(i, j, 1.0);
    const auto deg = g.degrees();
    for (int i = 0; i < g.n(); ++i) q.set(i, i, static_cast<double>(deg[i]));
    return q;
}

}  // namespace estrada
