#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "ricci/bitset.hpp"
#include "ricci/errors.hpp"

namespace ricci {

using Edge = std::pair<int, int>;  // stored with first < second

// Immutable simple undirected graph. Adjacency is a per-vertex bitset;
// hop distances are BFS-computed on first use and shared read-only afterwards
// (copies of a Graph share the same cache). Disconnected pairs carry the
// sentinel distance kUnreachable.
class Graph {
public:
    static constexpr int32_t kUnreachable = -1;

    // Builds a graph from an edge list. Edges are deduplicated; out-of-range
    // endpoints and self-loops are input errors.
    static Graph from_edges(int n, const std::vector<Edge>& edges);

    int vertex_count() const { return d_->n; }
    int edge_count() const { return d_->m; }

    bool adjacent(int u, int v) const { return d_->adj[u].test(v); }
    const Bitset& neighbors(int v) const { return d_->adj[v]; }
    int degree(int v) const { return d_->degree[v]; }

    // Edges in lexicographic (u, v) order with u < v.
    std::vector<Edge> edges() const;

    // BFS hop distance; kUnreachable when v is not reachable from u.
    int32_t distance(int u, int v) const {
        ensure_distances();
        return d_->dist[static_cast<size_t>(u) * d_->n + v];
    }

    // Full n*n matrix in row-major order (row u holds distances from u).
    const std::vector<int32_t>& distance_matrix() const {
        ensure_distances();
        return d_->dist;
    }

    bool connected() const {
        ensure_distances();
        return d_->connected;
    }

    // Max finite distance; input error on a disconnected graph. 0 for K_1.
    int diameter() const;

private:
    struct Data {
        int n = 0;
        int m = 0;
        std::vector<Bitset> adj;
        std::vector<int> degree;
        mutable std::once_flag dist_once;
        mutable std::vector<int32_t> dist;
        mutable bool connected = false;
    };

    explicit Graph(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
    void ensure_distances() const;

    std::shared_ptr<const Data> d_;
};

// Edge set complemented on the same vertex set.
Graph complement(const Graph& g);

// Cartesian product: (g,h) ~ (g',h') iff (g=g' and h~h') or (g~g' and h=h').
// Vertex (g, h) has index g * h_count + h.
Graph cartesian_product(const Graph& a, const Graph& b);

// If the complement of g has max degree <= 1, returns (a, b) with a the number
// of complement edges and b the number of complement-isolated vertices; g is
// then exactly K_{2a+b} minus a matching of size a, i.e. G(a, b) when a >= 1.
// Returns nullopt otherwise.
std::optional<std::pair<int, int>> matching_complement_decompose(const Graph& g);

}  // namespace ricci
