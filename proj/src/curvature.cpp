#include "ricci/curvature.hpp"

#include <algorithm>

#include "ricci/measure.hpp"
#include "ricci/parallel.hpp"
#include "ricci/transport.hpp"

namespace ricci {
namespace {

void check_edge(const Graph& g, int x, int y) {
    if (x < 0 || x >= g.vertex_count() || y < 0 || y >= g.vertex_count())
        throw InputError("curvature: vertex out of range");
    if (x == y) throw InputError("curvature: the two vertices must differ");
    if (!g.adjacent(x, y)) throw InputError("curvature: vertices are not adjacent");
}

}  // namespace

Rational idleness_threshold(const Graph& g, int x, int y) {
    check_edge(g, x, y);
    return Rational(1, std::max(g.degree(x), g.degree(y)) + 1);
}

Rational kappa_p(const Graph& g, int x, int y, const Rational& p) {
    check_edge(g, x, y);
    const TransportResult r = wasserstein1(g, vertex_measure(g, x, p), vertex_measure(g, y, p));
    return Rational(1) - r.value;
}

Rational kappa_lly(const Graph& g, int x, int y) {
    const Rational p = idleness_threshold(g, x, y);
    return kappa_p(g, x, y, p) / (Rational(1) - p);
}

CurvatureReport curvature_sweep(const Graph& g, int jobs) {
    if (!g.connected()) throw InputError("curvature_sweep: graph must be connected");
    const std::vector<Edge> edges = g.edges();
    if (edges.empty()) throw InputError("curvature_sweep: graph has no edges");

    CurvatureReport report;
    report.diameter = g.diameter();  // also warms the shared distance cache
    report.edges.resize(edges.size());
    parallel_for(static_cast<long long>(edges.size()), jobs, [&](long long i) {
        const auto [x, y] = edges[static_cast<size_t>(i)];
        const Rational p = idleness_threshold(g, x, y);
        const Rational at_p = kappa_p(g, x, y, p);
        report.edges[static_cast<size_t>(i)] =
            EdgeCurvature{edges[static_cast<size_t>(i)], p, at_p, at_p / (Rational(1) - p)};
    });

    report.min_curvature = report.edges.front().kappa_lly;
    for (const EdgeCurvature& ec : report.edges)
        if (ec.kappa_lly < report.min_curvature) report.min_curvature = ec.kappa_lly;
    return report;
}

}  // namespace ricci
