#include "ricci/graph.hpp"

#include <algorithm>
#include <string>

namespace ricci {

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
    if (n <= 0) throw InputError("Graph: vertex count must be positive");
    auto d = std::make_shared<Data>();
    d->n = n;
    d->adj.assign(n, Bitset(n));
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw InputError("Graph: edge endpoint out of range: (" + std::to_string(u) + ", " +
                             std::to_string(v) + ")");
        if (u == v) throw InputError("Graph: self-loop at vertex " + std::to_string(u));
        d->adj[u].set(v);
        d->adj[v].set(u);
    }
    d->degree.resize(n);
    d->m = 0;
    for (int v = 0; v < n; ++v) {
        d->degree[v] = d->adj[v].count();
        d->m += d->degree[v];
    }
    d->m /= 2;
    return Graph(std::move(d));
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(d_->m);
    for (int u = 0; u < d_->n; ++u)
        d_->adj[u].for_each([&](int v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;
}

void Graph::ensure_distances() const {
    const Data& d = *d_;
    std::call_once(d.dist_once, [&d] {
        const int n = d.n;
        d.dist.assign(static_cast<size_t>(n) * n, kUnreachable);
        std::vector<int> queue(n);
        bool connected = true;
        for (int s = 0; s < n; ++s) {
            int32_t* row = d.dist.data() + static_cast<size_t>(s) * n;
            int head = 0, tail = 0;
            row[s] = 0;
            queue[tail++] = s;
            while (head < tail) {
                int u = queue[head++];
                d.adj[u].for_each([&](int v) {
                    if (row[v] == kUnreachable) {
                        row[v] = row[u] + 1;
                        queue[tail++] = v;
                    }
                });
            }
            if (tail < n) connected = false;
        }
        d.connected = connected;
    });
}

int Graph::diameter() const {
    if (!connected()) throw InputError("diameter: graph is disconnected");
    int32_t best = 0;
    for (int32_t x : d_->dist) best = std::max(best, x);
    return best;
}

Graph complement(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph cartesian_product(const Graph& a, const Graph& b) {
    const int na = a.vertex_count(), nb = b.vertex_count();
    auto idx = [nb](int x, int y) { return x * nb + y; };
    std::vector<Edge> edges;
    for (int x = 0; x < na; ++x)
        for (int y = 0; y < nb; ++y) {
            b.neighbors(y).for_each([&](int y2) {
                if (y < y2) edges.emplace_back(idx(x, y), idx(x, y2));
            });
            a.neighbors(x).for_each([&](int x2) {
                if (x < x2) edges.emplace_back(idx(x, y), idx(x2, y));
            });
        }
    return Graph::from_edges(na * nb, edges);
}

std::optional<std::pair<int, int>> matching_complement_decompose(const Graph& g) {
    const int n = g.vertex_count();
    int matched_edges = 0, isolated = 0;
    for (int v = 0; v < n; ++v) {
        int cdeg = n - 1 - g.degree(v);
        if (cdeg > 1) return std::nullopt;
        if (cdeg == 0) ++isolated;
        else ++matched_edges;
    }
    return std::make_pair(matched_edges / 2, isolated);
}

}  // namespace ricci
