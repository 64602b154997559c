#include "ricci/sharpness.hpp"

#include <algorithm>

#include "ricci/measure.hpp"
#include "ricci/parallel.hpp"
#include "ricci/transport.hpp"

namespace ricci {
namespace {

// Sharpness test specialized to diameter 2, with early exit. The bound is
// 2/2 = 1, and a positive minimum above 1 is impossible (diam <= 2/min would
// force diameter 1), so the graph is sharp exactly when every edge satisfies
// kappa_lly >= 1. That inequality is division-free: kappa_{p*} >= 1 - p*,
// i.e. the transport cost between the two step measures is at most p*.
bool sharp_diameter2(const Graph& g) {
    for (const Edge& e : g.edges()) {
        const Rational p = idleness_threshold(g, e.first, e.second);
        const TransportResult r =
            wasserstein1(g, vertex_measure(g, e.first, p), vertex_measure(g, e.second, p));
        if (p < r.value) return false;
    }
    return true;
}

}  // namespace

SharpnessVerdict verdict_from_report(const CurvatureReport& report) {
    SharpnessVerdict v;
    v.min_curvature = report.min_curvature;
    v.diameter = report.diameter;
    v.bound = Rational(2) / Rational(report.diameter == 0 ? 1 : report.diameter);
    for (const EdgeCurvature& ec : report.edges) {
        if (ec.kappa_lly == report.min_curvature) {
            v.witness_edge = ec.edge;
            break;
        }
    }
    v.is_sharp = report.min_curvature.sign() > 0 && report.min_curvature == v.bound;
    return v;
}

SharpnessVerdict is_bm_sharp(const Graph& g, int jobs) {
    return verdict_from_report(curvature_sweep(g, jobs));
}

Graph graph_from_edge_mask(int n, std::uint64_t mask) {
    if (n < 2 || n > 11) throw InputError("graph_from_edge_mask: n out of range");
    std::vector<Edge> edges;
    int bit = 0;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v, ++bit) {
            if ((mask >> bit) & 1u) edges.emplace_back(u, v);
        }
    }
    if (mask >> bit) throw InputError("graph_from_edge_mask: mask has bits beyond the last pair");
    return Graph::from_edges(n, edges);
}

ClassificationReport verify_diameter2_classification(int n, int jobs) {
    if (n < 3 || n > 7)
        throw InputError("verify_diameter2_classification: n must be between 3 and 7");

    const int pairs = n * (n - 1) / 2;
    const std::uint64_t total = std::uint64_t(1) << pairs;

    struct Stripe {
        std::uint64_t diameter2 = 0;
        std::uint64_t sharp = 0;
        std::vector<std::uint64_t> sharp_masks;
        std::vector<std::uint64_t> mismatch_masks;
    };
    const long long stripes = static_cast<long long>(std::min<std::uint64_t>(total, 256));
    std::vector<Stripe> parts(static_cast<size_t>(stripes));

    parallel_for(stripes, jobs, [&](long long s) {
        Stripe& part = parts[static_cast<size_t>(s)];
        const std::uint64_t si = static_cast<std::uint64_t>(s);
        const std::uint64_t base = total / static_cast<std::uint64_t>(stripes);
        const std::uint64_t rem = total % static_cast<std::uint64_t>(stripes);
        const std::uint64_t lo = base * si + std::min(si, rem);
        const std::uint64_t len = base + (si < rem ? 1 : 0);
        for (std::uint64_t mask = lo; mask < lo + len; ++mask) {
            const Graph g = graph_from_edge_mask(n, mask);
            if (!g.connected() || g.diameter() != 2) continue;
            ++part.diameter2;
            const bool sharp = sharp_diameter2(g);
            const auto decomp = matching_complement_decompose(g);
            const bool in_family = decomp.has_value() && decomp->first >= 1;
            if (sharp) {
                ++part.sharp;
                part.sharp_masks.push_back(mask);
            }
            if (sharp != in_family) part.mismatch_masks.push_back(mask);
        }
    });

    ClassificationReport report;
    report.n = n;
    report.graphs_scanned = total;
    for (const Stripe& part : parts) {
        report.diameter2_count += part.diameter2;
        report.sharp_count += part.sharp;
        report.sharp_masks.insert(report.sharp_masks.end(), part.sharp_masks.begin(),
                                  part.sharp_masks.end());
        report.mismatch_masks.insert(report.mismatch_masks.end(), part.mismatch_masks.begin(),
                                     part.mismatch_masks.end());
    }
    return report;
}

LemmaReport check_sharp_diameter2_lemmas(const Graph& g, int jobs) {
    const SharpnessVerdict verdict = is_bm_sharp(g, jobs);
    if (verdict.diameter != 2 || !verdict.is_sharp)
        throw InputError("check_sharp_diameter2_lemmas: graph is not sharp with diameter 2");

    const std::vector<Edge> edges = g.edges();
    LemmaReport report;
    report.edges.resize(edges.size());

    parallel_for(static_cast<long long>(edges.size()), jobs, [&](long long i) {
        const auto [x, y] = edges[static_cast<size_t>(i)];
        EdgeLemmaChecks checks;
        checks.edge = {x, y};

        const Rational p = idleness_threshold(g, x, y);
        const TransportResult r =
            wasserstein1(g, vertex_measure(g, x, p), vertex_measure(g, y, p));
        checks.mass_moved_ok = !(p < r.value);

        checks.same_degree_ok = true;
        if (g.degree(x) == g.degree(y)) {
            Bitset priv_x = g.neighbors(x);
            priv_x -= g.neighbors(y);
            priv_x.reset(y);
            Bitset priv_y = g.neighbors(y);
            priv_y -= g.neighbors(x);
            priv_y.reset(x);
            if (priv_x.count() > 1 || priv_y.count() > 1) {
                checks.same_degree_ok = false;
            } else if (priv_x.count() == 1 && priv_y.count() == 1) {
                int u = -1, w = -1;
                priv_x.for_each([&](int z) { u = z; });
                priv_y.for_each([&](int z) { w = z; });
                checks.same_degree_ok = g.adjacent(u, w);
            }
        }

        checks.diff_degree_ok = true;
        if (g.degree(x) != g.degree(y)) {
            const int lo = g.degree(x) < g.degree(y) ? x : y;
            const int hi = lo == x ? y : x;
            Bitset rest = g.neighbors(lo);
            rest.reset(hi);
            checks.diff_degree_ok = rest.subset_of(g.neighbors(hi));
        }

        report.edges[static_cast<size_t>(i)] = checks;
    });

    report.all_pass = std::all_of(report.edges.begin(), report.edges.end(), [](const EdgeLemmaChecks& c) {
        return c.mass_moved_ok && c.same_degree_ok && c.diff_degree_ok;
    });
    return report;
}

}  // namespace ricci
