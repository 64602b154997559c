#include "ricci/transport.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace ricci {
namespace {

constexpr long long kCostInf = std::numeric_limits<long long>::max() / 4;

// Shortest-path metric lookup that rejects disconnected pairs.
struct GraphDist {
    const Graph& g;
    int operator()(int u, int v) const {
        const int d = g.distance(u, v);
        if (d == Graph::kUnreachable) throw InputError("wasserstein1: vertices lie in different components");
        return d;
    }
};

// Min-cost flow via successive shortest paths with Bellman-Ford (residual
// arcs carry negative costs). Capacities and flows are exact big integers;
// arc costs are graph distances, so path lengths fit comfortably in 64 bits.
class MinCostFlow {
public:
    explicit MinCostFlow(int nodes) : node_count_(nodes) {}

    // Returns the index of the forward arc, for later flow_on() queries.
    size_t add_arc(int from, int to, BigInt cap, long long cost) {
        const size_t id = arcs_.size();
        arcs_.push_back({from, to, std::move(cap), cost});
        arcs_.push_back({to, from, BigInt(0), -cost});
        return id;
    }

    // Augments along successively cheapest s-t paths until none remains.
    // Returns the total flow sent.
    BigInt run(int s, int t) {
        BigInt sent(0);
        while (true) {
            std::vector<long long> dist(node_count_, kCostInf);
            std::vector<size_t> pred(node_count_, SIZE_MAX);
            dist[s] = 0;
            for (int round = 0; round + 1 < node_count_; ++round) {
                bool changed = false;
                for (size_t a = 0; a < arcs_.size(); ++a) {
                    const Arc& arc = arcs_[a];
                    if (arc.cap == 0 || dist[arc.from] >= kCostInf) continue;
                    if (dist[arc.to] > dist[arc.from] + arc.cost) {
                        dist[arc.to] = dist[arc.from] + arc.cost;
                        pred[arc.to] = a;
                        changed = true;
                    }
                }
                if (!changed) break;
            }
            if (dist[t] >= kCostInf) break;

            BigInt push(-1);
            for (int v = t; v != s; v = arcs_[pred[v]].from) {
                const BigInt& cap = arcs_[pred[v]].cap;
                if (push < 0 || cap < push) push = cap;
            }
            for (int v = t; v != s; v = arcs_[pred[v]].from) {
                arcs_[pred[v]].cap -= push;
                arcs_[pred[v] ^ 1].cap += push;
            }
            sent += push;
        }
        return sent;
    }

    // Flow on a forward arc equals the residual capacity of its twin.
    const BigInt& flow_on(size_t arc_index) const { return arcs_[arc_index ^ 1].cap; }

private:
    struct Arc {
        int from;
        int to;
        BigInt cap;
        long long cost;
    };
    int node_count_;
    std::vector<Arc> arcs_;
};

// Feasible potential for the difference-constraint system
//   phi(u) - phi(v) <= d(u, v)        for all u != v in W (1-Lipschitz), and
//   phi(x) - phi(y) >= d(x, y)        for every plan arc (x, y),
// solved by Bellman-Ford from an implicit zero source. Infeasibility would
// mean the plan is not optimal, which the solver's invariants rule out, so it
// is reported as an internal error. Returned values are indexed like W.
std::vector<long long> solve_potential(const std::vector<int>& W,
                                       const std::vector<std::pair<int, int>>& plan_arcs,
                                       const GraphDist& dist) {
    const int k = static_cast<int>(W.size());
    auto index_of = [&](int v) {
        return static_cast<int>(std::lower_bound(W.begin(), W.end(), v) - W.begin());
    };

    struct Constraint {
        int from;
        int to;
        long long w;  // phi(to) <= phi(from) + w
    };
    std::vector<Constraint> arcs;
    arcs.reserve(static_cast<size_t>(k) * k + plan_arcs.size());
    for (int u = 0; u < k; ++u)
        for (int v = 0; v < k; ++v)
            if (u != v) arcs.push_back({v, u, dist(W[u], W[v])});
    for (const auto& [x, y] : plan_arcs)
        arcs.push_back({index_of(x), index_of(y), -static_cast<long long>(dist(x, y))});

    std::vector<long long> phi(k, 0);
    for (int round = 0; round < k; ++round) {
        bool changed = false;
        for (const auto& a : arcs) {
            if (phi[a.to] > phi[a.from] + a.w) {
                phi[a.to] = phi[a.from] + a.w;
                changed = true;
            }
        }
        if (!changed) break;
    }
    for (const auto& a : arcs) {
        if (phi[a.to] > phi[a.from] + a.w)
            throw InternalError("transport: optimal plan admits no feasible potential");
    }
    return phi;
}

TransportResult solve_core(const Graph& g, std::vector<int> universe,
                           const ProbabilityMeasure& mu1, const ProbabilityMeasure& mu2) {
    std::sort(universe.begin(), universe.end());
    universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
    if (universe.empty()) throw InputError("wasserstein1: empty universe");
    for (int v : universe) {
        if (v < 0 || v >= g.vertex_count()) throw InputError("wasserstein1: universe vertex out of range");
    }
    auto in_universe = [&](int v) {
        return std::binary_search(universe.begin(), universe.end(), v);
    };
    for (const auto& [v, m] : mu1.masses())
        if (!in_universe(v)) throw InputError("wasserstein1: source measure leaves the universe");
    for (const auto& [v, m] : mu2.masses())
        if (!in_universe(v)) throw InputError("wasserstein1: target measure leaves the universe");

    const GraphDist dist{g};

    // Mass shared by both measures ships in place at cost 0; only the signed
    // excess needs routing. This preserves the optimal value because the cost
    // is a metric: any crossing pair of moves can be uncrossed without
    // increasing cost, and the dual certificate below re-proves optimality of
    // the combined plan against all couplings.
    TransportPlan plan;
    std::map<int, Rational> excess;
    for (const auto& [v, m] : mu1.masses()) {
        const Rational common = std::min(m, mu2.at(v));
        if (common.sign() > 0) plan.entries[{v, v}] = common;
        const Rational e = m - mu2.at(v);
        if (!e.is_zero()) excess[v] = e;
    }
    for (const auto& [v, m] : mu2.masses()) {
        if (mu1.at(v).is_zero()) excess[v] = -m;
    }

    std::vector<int> sources, sinks;
    std::vector<Rational> supply, demand;
    for (const auto& [v, e] : excess) {
        if (e.sign() > 0) {
            sources.push_back(v);
            supply.push_back(e);
        } else {
            sinks.push_back(v);
            demand.push_back(-e);
        }
    }
    if (sources.empty() != sinks.empty())
        throw InternalError("transport: unbalanced excess despite equal total mass");

    Rational value(0);
    std::vector<int> support;
    for (const auto& [v, m] : mu1.masses()) support.push_back(v);
    for (const auto& [v, m] : mu2.masses())
        if (mu1.at(v).is_zero()) support.push_back(v);
    std::sort(support.begin(), support.end());

    std::vector<std::pair<int, int>> plan_arcs;
    if (!sources.empty()) {
        // Clear denominators: scale every excess by the lcm so the flow
        // problem has integer supplies and demands.
        BigInt lambda(1);
        for (const auto& r : supply) lambda = lcm(lambda, r.denominator());
        for (const auto& r : demand) lambda = lcm(lambda, r.denominator());
        auto scaled = [&](const Rational& r) -> BigInt {
            return r.numerator() * (lambda / r.denominator());
        };

        BigInt total(0);
        for (const auto& r : supply) total += scaled(r);

        const int ns = static_cast<int>(sources.size());
        const int nt = static_cast<int>(sinks.size());
        const int src = ns + nt;
        const int snk = ns + nt + 1;
        MinCostFlow mcf(ns + nt + 2);
        for (int i = 0; i < ns; ++i) mcf.add_arc(src, i, scaled(supply[i]), 0);
        const BigInt unbounded = total + 1;  // never binds: total flow is `total`
        std::vector<std::vector<size_t>> arc_id(ns, std::vector<size_t>(nt));
        for (int i = 0; i < ns; ++i)
            for (int j = 0; j < nt; ++j)
                arc_id[i][j] = mcf.add_arc(i, ns + j, unbounded, dist(sources[i], sinks[j]));
        for (int j = 0; j < nt; ++j) mcf.add_arc(ns + j, snk, scaled(demand[j]), 0);

        if (mcf.run(src, snk) != total)
            throw InternalError("transport: flow failed to route all mass");

        for (int i = 0; i < ns; ++i) {
            for (int j = 0; j < nt; ++j) {
                const BigInt& f = mcf.flow_on(arc_id[i][j]);
                if (f > 0) {
                    plan.entries[{sources[i], sinks[j]}] = Rational(f, lambda);
                    plan_arcs.emplace_back(sources[i], sinks[j]);
                    value += Rational(f, lambda) * Rational(dist(sources[i], sinks[j]));
                }
            }
        }
    }

    const std::vector<long long> phi = solve_potential(support, plan_arcs, dist);

    // Tightest 1-Lipschitz extension from the support to the universe, then a
    // shift so the minimum over the universe is exactly 0.
    std::vector<long long> ext(universe.size());
    for (size_t zi = 0; zi < universe.size(); ++zi) {
        long long best = kCostInf;
        for (size_t wi = 0; wi < support.size(); ++wi)
            best = std::min(best, phi[wi] + dist(universe[zi], support[wi]));
        ext[zi] = best;
    }
    const long long low = *std::min_element(ext.begin(), ext.end());
    DualCertificate cert;
    for (size_t zi = 0; zi < universe.size(); ++zi)
        cert.potential[universe[zi]] = Rational(static_cast<long>(ext[zi] - low));

    return {value, std::move(plan), std::move(cert)};
}

}  // namespace

TransportResult wasserstein1(const Graph& g, const ProbabilityMeasure& mu1,
                             const ProbabilityMeasure& mu2) {
    if (!g.connected()) throw InputError("wasserstein1: graph must be connected");
    std::vector<int> universe(static_cast<size_t>(g.vertex_count()));
    std::iota(universe.begin(), universe.end(), 0);
    return solve_core(g, std::move(universe), mu1, mu2);
}

TransportResult wasserstein1_restricted(const Graph& g, const std::vector<int>& universe,
                                        const ProbabilityMeasure& mu1,
                                        const ProbabilityMeasure& mu2) {
    return solve_core(g, universe, mu1, mu2);
}

bool verify_transport(const Graph& g, const ProbabilityMeasure& mu1,
                      const ProbabilityMeasure& mu2, const TransportResult& result) {
    auto fail = [](const std::string& what) {
        throw InternalError("verify_transport: " + what);
    };

    if (result.value.sign() < 0) fail("negative value");

    std::map<int, Rational> row, col;
    Rational cost(0);
    for (const auto& [xy, m] : result.plan.entries) {
        if (m.sign() <= 0) fail("non-positive plan entry");
        row[xy.first] += m;
        col[xy.second] += m;
        if (xy.first != xy.second) {
            const int d = g.distance(xy.first, xy.second);
            if (d == Graph::kUnreachable) fail("plan moves mass across components");
            cost += m * Rational(d);
        }
    }
    if (!(row == mu1.masses())) fail("row marginals differ from the source measure");
    if (!(col == mu2.masses())) fail("column marginals differ from the target measure");
    if (!(cost == result.value)) fail("plan cost differs from the reported value");

    const auto& pot = result.certificate.potential;
    for (const auto& [v, m] : mu1.masses())
        if (!pot.count(v)) fail("potential misses a source support vertex");
    for (const auto& [v, m] : mu2.masses())
        if (!pot.count(v)) fail("potential misses a target support vertex");

    bool attains_zero = false;
    for (const auto& [v, p] : pot) {
        if (!p.is_integer()) fail("potential is not integer-valued");
        if (p.sign() < 0) fail("negative potential value");
        if (p.is_zero()) attains_zero = true;
    }
    if (!attains_zero) fail("potential is not normalized to minimum 0");

    for (auto it = pot.begin(); it != pot.end(); ++it) {
        for (auto jt = std::next(it); jt != pot.end(); ++jt) {
            const int d = g.distance(it->first, jt->first);
            if (d == Graph::kUnreachable) fail("potential domain spans components");
            if (Rational(d) < (it->second - jt->second).abs())
                fail("potential violates the 1-Lipschitz bound");
        }
    }

    Rational dual(0);
    for (const auto& [v, m] : mu1.masses()) dual += pot.at(v) * m;
    for (const auto& [v, m] : mu2.masses()) dual -= pot.at(v) * m;
    if (!(dual == result.value)) fail("dual objective differs from the value");

    return true;
}

}  // namespace ricci
