#pragma once

#include <cstdint>
#include <vector>

#include "ricci/curvature.hpp"
#include "ricci/graph.hpp"
#include "ricci/rational.hpp"

namespace ricci {

// Bonnet-Myers data for a connected graph with at least one edge: when the
// minimum edge curvature is positive, diam <= 2 / min, and the graph is
// "sharp" when equality holds.
struct SharpnessVerdict {
    bool is_sharp = false;
    Rational min_curvature;
    int diameter = 0;
    Rational bound;      // 2 / diameter
    Edge witness_edge;   // lexicographically first edge attaining the minimum

    bool operator==(const SharpnessVerdict&) const = default;
};

SharpnessVerdict is_bm_sharp(const Graph& g, int jobs = 1);

// The verdict determined by an already-computed sweep.
SharpnessVerdict verdict_from_report(const CurvatureReport& report);

// Decodes an edge subset of the complete graph on n labeled vertices: bit i
// of mask is the i-th pair (u, v), u < v, in lexicographic order.
Graph graph_from_edge_mask(int n, std::uint64_t mask);

// Exhaustive scan of all labeled graphs on n vertices (3 <= n <= 7): every
// connected diameter-2 graph is tested for sharpness, and the verdict is
// compared against membership in the matching-deleted-complete family, i.e.
// whether the complement is a nonempty perfect-or-partial matching.
struct ClassificationReport {
    int n = 0;
    std::uint64_t graphs_scanned = 0;
    std::uint64_t diameter2_count = 0;   // connected with diameter exactly 2
    std::uint64_t sharp_count = 0;
    std::vector<std::uint64_t> sharp_masks;     // every sharp diameter-2 graph
    std::vector<std::uint64_t> mismatch_masks;  // verdict != family membership
};

ClassificationReport verify_diameter2_classification(int n, int jobs = 1);

// Structural facts that hold on every edge of a sharp diameter-2 graph,
// rechecked directly from adjacency and exact transport:
//  - mass_moved_ok: W1 of the two step measures at the idleness threshold p*
//    is at most p* (equivalent to kappa_lly >= 1);
//  - same_degree_ok: when deg x = deg y, each endpoint has at most one
//    neighbor that is not shared with the other (excluding the endpoints
//    themselves), and if both such private neighbors exist they are adjacent,
//    closing a 4-cycle through the edge;
//  - diff_degree_ok: when deg x < deg y, every neighbor of x other than y is
//    a neighbor of y (and symmetrically).
struct EdgeLemmaChecks {
    Edge edge;
    bool mass_moved_ok = false;
    bool same_degree_ok = false;
    bool diff_degree_ok = false;
};

struct LemmaReport {
    std::vector<EdgeLemmaChecks> edges;
    bool all_pass = false;
};

// Requires a connected sharp diameter-2 graph; throws InputError otherwise.
LemmaReport check_sharp_diameter2_lemmas(const Graph& g, int jobs = 1);

}  // namespace ricci
