#pragma once

#include <map>
#include <utility>
#include <vector>

#include "ricci/graph.hpp"
#include "ricci/measure.hpp"
#include "ricci/rational.hpp"

namespace ricci {

// A coupling of two measures: entries[(x, y)] is the mass moved from x to y.
// Entries are strictly positive; row sums give the source measure and column
// sums the target measure.
struct TransportPlan {
    std::map<std::pair<int, int>, Rational> entries;
};

// A Kantorovich potential certifying optimality: phi is 1-Lipschitz with
// respect to the graph metric and sum phi d(mu1 - mu2) equals the optimal
// cost. Stored for every vertex of the solve's universe, normalized so the
// minimum value is 0. Values are always integers for integer costs.
struct DualCertificate {
    std::map<int, Rational> potential;

    Rational at(int v) const {
        auto it = potential.find(v);
        if (it == potential.end()) throw InternalError("DualCertificate: vertex outside universe");
        return it->second;
    }
};

struct TransportResult {
    Rational value;
    TransportPlan plan;
    DualCertificate certificate;
};

// Exact Wasserstein-1 distance between mu1 and mu2 with the shortest-path
// metric of g as ground cost. The graph must be connected. Returns the
// optimal value together with an optimal plan and a dual certificate over
// all vertices of g.
TransportResult wasserstein1(const Graph& g, const ProbabilityMeasure& mu1,
                             const ProbabilityMeasure& mu2);

// Same solve, but restricted to an explicit universe of vertices carrying the
// metric of g. Both measures must be supported inside the universe. Used to
// check that solving on a metric-preserving subset reproduces the full value.
TransportResult wasserstein1_restricted(const Graph& g, const std::vector<int>& universe,
                                        const ProbabilityMeasure& mu1,
                                        const ProbabilityMeasure& mu2);

// Independent re-check of a result: plan marginals match the measures, plan
// cost equals value, the potential is 1-Lipschitz on every vertex pair of g,
// and the dual objective equals value. Throws InternalError with a message
// identifying the failed condition; returns true otherwise.
bool verify_transport(const Graph& g, const ProbabilityMeasure& mu1,
                      const ProbabilityMeasure& mu2, const TransportResult& result);

}  // namespace ricci
