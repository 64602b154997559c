#pragma once

#include <string>
#include <vector>

#include "ricci/affine.hpp"
#include "ricci/graph.hpp"
#include "ricci/rational.hpp"
#include "ricci/sharpness.hpp"

namespace ricci {

// Level sizes a_1, ..., a_N (N >= 2, every a_k >= 1) of a layered graph in
// which each level is a clique and consecutive levels are completely joined.
// The resulting graph has diameter N - 1. Closed-form curvature is available
// for rooted sequences, i.e. a_1 = 1.
class AntitreeSequence {
public:
    explicit AntitreeSequence(std::vector<long> levels);

    const std::vector<long>& levels() const { return levels_; }
    int level_count() const { return static_cast<int>(levels_.size()); }
    long level(int k) const;  // a_k, 1-based; 0 outside 1..N
    int diameter() const { return level_count() - 1; }
    long vertex_count() const;
    bool rooted() const { return levels_.front() == 1; }
    bool palindromic() const;

    std::string str() const;  // e.g. "AT(1,3,3,1)"

    bool operator==(const AntitreeSequence&) const = default;

private:
    std::vector<long> levels_;
};

Graph antitree_graph(const AntitreeSequence& seq);

// Edge classes of an antitree, each carrying one curvature value:
//  - RadialRoot: the edges between levels 1 and 2;
//  - RadialInner(k): the edges between levels k and k+1, 2 <= k <= N-1;
//  - Spherical(k): the edges inside level k, 2 <= k <= N (needs a_k >= 2).
struct EdgeLocus {
    enum class Kind { RadialRoot, RadialInner, Spherical };
    Kind kind = Kind::RadialRoot;
    int level = 1;

    static EdgeLocus radial_root() { return {Kind::RadialRoot, 1}; }
    static EdgeLocus radial_inner(int k) { return {Kind::RadialInner, k}; }
    static EdgeLocus spherical(int k) { return {Kind::Spherical, k}; }

    std::string str() const;
    bool operator==(const EdgeLocus&) const = default;
};

// All nonempty loci of the sequence, in the order radial root, radial inner
// by increasing level, spherical by increasing level.
std::vector<EdgeLocus> edge_loci(const AntitreeSequence& seq);

// The locus containing a given edge of antitree_graph(seq).
EdgeLocus classify_edge(const AntitreeSequence& seq, const Edge& e);

// One concrete edge of the locus, in antitree_graph numbering.
Edge representative_edge(const AntitreeSequence& seq, const EdgeLocus& locus);

// Exact kappa_lly of every edge in the locus, evaluated from the level sizes
// alone (no transport solve). Requires a rooted sequence. With the
// conventions a_0 = a_{N+1} = a_{N+2} = 0 and
//   A_k = (2 a_k + a_{k+1} - 1) / (a_k + a_{k+1} + a_{k+2} - 1),
// the radial values are A_1 for the root edges and A_k - A_{k-1} for the
// level k..k+1 edges; spherical edges in level k have value s/(s-1) where
// s = a_{k-1} + a_k + a_{k+1}.
Rational closed_form_curvature(const AntitreeSequence& seq, const EdgeLocus& locus);

// Sharpness decided entirely from the closed forms (rooted sequences only).
// The witness edge is the representative of the first minimizing locus in
// edge_loci order.
SharpnessVerdict antitree_sharpness(const AntitreeSequence& seq);

// One enumerated candidate of an odd-diameter scan.
struct ScanCandidate {
    AntitreeSequence seq;
    bool sharp = false;
    Rational min_curvature;
};

// Result of a sharpness scan at fixed diameter L over rooted palindromic
// sequences. Even L: the level sizes are solved symbolically in t = a_2, so
// the result is a one-parameter family (possibly empty after integrality).
// Odd L (3 or 5): a finite candidate region is enumerated exhaustively.
struct ScanResult {
    int diameter = 0;
    enum class Outcome { Family, FiniteList, Empty } outcome = Outcome::Empty;

    // Even scans: propagated forms for a_1..a_{L+1} in t, and the admitted
    // integers t. The family of solutions is trace restricted to admissible.
    std::vector<AffineForm> trace;
    IntegralityResult admissible = IntegralityResult::empty();

    // Odd scans: every candidate with its verdict; solutions = sharp ones.
    std::vector<ScanCandidate> region;
    std::vector<AntitreeSequence> solutions;
};

// Even diameter L >= 4: each radial curvature must equal the bound 2/L (the
// L radial values sum to 2 and each is at least the bound), which propagates
// level by level as a linear recurrence in t = a_2 and pins every level.
// A nonempty family is re-verified at its smallest admitted t.
ScanResult scan_even_diameter(int L);

// Odd diameter L in {3, 5}: necessary curvature inequalities confine the
// palindromic sequences to a finite region, which is enumerated and decided
// exactly.
ScanResult scan_odd_small(int L);

// Per-parameter recheck of the two infinite even-diameter families
//   AT(1, t, t+2, t, 1)                       (diameter 4) and
//   AT(1, t, 2t+3, 3t+1, 2t+3, t, 1)          (diameter 6):
// both members must be sharp for every t = 1..max_t, +/-1 perturbations of
// the determined middle sizes must not be, and for t <= 3 the closed-form
// verdict is cross-checked by full transport solves.
struct FamilyCheck {
    long t = 0;
    bool diam4_sharp = false;
    bool diam6_sharp = false;
    bool perturbations_not_sharp = false;
    bool lp_checked = false;
    bool lp_agrees = false;
};

struct FamilyLemmaReport {
    std::vector<FamilyCheck> entries;
    bool all_pass = false;
};

FamilyLemmaReport verify_family_lemmas(long max_t);

// Exhaustive agreement check between the closed-form curvatures and the
// transport-based solver over every rooted sequence with at most max_levels
// levels and level sizes in 1..max_size: each edge's exact curvature must
// match the closed form for its locus, and the two sharpness verdicts
// (including witness edge) must coincide. Any disagreement is reported as a
// human-readable string.
struct CrossValidationReport {
    long sequences_checked = 0;
    long edges_checked = 0;
    std::vector<std::string> disagreements;
    bool all_agree = false;
};

CrossValidationReport cross_validate_antitrees(int max_levels, long max_size,
                                               int jobs = 1);

}  // namespace ricci
