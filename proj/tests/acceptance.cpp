// Acceptance harness: runs the project's top-level checks and prints one
// PASS/FAIL line per criterion. Exit code 0 iff every gating criterion
// passes. The Gosset fixture is a long extended check, enabled with
// --gosset; its result is printed but never gates.

#include <chrono>
#include <cstring>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "ricci/antitree.hpp"
#include "ricci/curvature.hpp"
#include "ricci/errors.hpp"
#include "ricci/families.hpp"
#include "ricci/graph.hpp"
#include "ricci/measure.hpp"
#include "ricci/sharpness.hpp"
#include "ricci/transport.hpp"
#include "test_util.hpp"

using namespace ricci;

namespace {

// Collects the first failure so the FAIL line can say what broke.
struct Check {
    bool ok = true;
    std::string note;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            note = what;
        }
    }
};

// ------------------------------------------------------------- criterion 1

bool matched_pair_family_grid(Check& c) {
    for (int a = 1; a <= 5; ++a) {
        for (int b = 0; b <= 5; ++b) {
            if (a == 1 && b == 0) continue;
            const Graph g = gab_graph(a, b);
            const std::string tag = "G(" + std::to_string(a) + "," + std::to_string(b) + ")";
            const CurvatureReport report = curvature_sweep(g);
            const Rational vv(2 * a + b, 2 * a + b - 1);
            for (const EdgeCurvature& ec : report.edges) {
                const bool u1 = ec.edge.first < 2 * a;
                const bool u2 = ec.edge.second < 2 * a;
                const Rational expected = (!u1 && !u2) ? vv : Rational(1);
                c.require(ec.kappa_lly == expected, tag + ": wrong curvature on an edge");
            }
            c.require(report.min_curvature == Rational(1), tag + ": minimum is not 1");
            c.require(is_bm_sharp(g).is_sharp, tag + ": not sharp");
        }
    }
    return c.ok;
}

// ------------------------------------------------------------- criterion 2

// Labeled count of matching-deleted complete graphs on n vertices:
// sum over a >= 1, 2a + b = n of n! / (a! 2^a b!).
std::uint64_t labeled_family_count(int n) {
    auto factorial = [](int k) {
        std::uint64_t f = 1;
        for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
        return f;
    };
    std::uint64_t total = 0;
    for (int a = 1; 2 * a <= n; ++a) {
        const int b = n - 2 * a;
        std::uint64_t ways = factorial(n) / (factorial(a) * factorial(b));
        for (int i = 0; i < a; ++i) ways /= 2;
        total += ways;
    }
    return total;
}

bool diameter2_classification(Check& c) {
    for (int n = 4; n <= 6; ++n) {
        const ClassificationReport report = verify_diameter2_classification(n, 0);
        const std::string tag = "n = " + std::to_string(n);
        c.require(report.graphs_scanned == (std::uint64_t(1) << (n * (n - 1) / 2)),
                  tag + ": wrong scan size");
        c.require(report.mismatch_masks.empty(), tag + ": classification mismatches found");
        c.require(report.sharp_count == labeled_family_count(n),
                  tag + ": sharp count disagrees with the labeled family count");
    }
    return c.ok;
}

// ------------------------------------------------------------- criterion 3

bool closed_form_cross_validation(Check& c) {
    const CrossValidationReport report = cross_validate_antitrees(5, 4, 0);
    c.require(report.sequences_checked == 4 + 16 + 64 + 256, "unexpected sequence count");
    for (const std::string& d : report.disagreements) c.require(false, d);
    return c.ok;
}

// ------------------------------------------------------------- criterion 4

bool even_families_and_lemmas(Check& c) {
    const ScanResult four = scan_even_diameter(4);
    c.require(four.outcome == ScanResult::Outcome::Family, "diameter 4: no family");
    c.require(four.trace.size() == 5 &&
                  four.trace[0] == AffineForm{Rational(1), Rational(0)} &&
                  four.trace[1] == AffineForm{Rational(0), Rational(1)} &&
                  four.trace[2] == AffineForm{Rational(2), Rational(1)} &&
                  four.trace[3] == four.trace[1] && four.trace[4] == four.trace[0],
              "diameter 4: trace differs from (1, t, t+2, t, 1)");
    c.require(four.admissible.kind() == IntegralityResult::Kind::All &&
                  four.admissible.smallest() && *four.admissible.smallest() == 1,
              "diameter 4: admissible parameters are not exactly t >= 1");

    const ScanResult six = scan_even_diameter(6);
    c.require(six.outcome == ScanResult::Outcome::Family, "diameter 6: no family");
    c.require(six.trace.size() == 7 &&
                  six.trace[2] == AffineForm{Rational(3), Rational(2)} &&
                  six.trace[3] == AffineForm{Rational(1), Rational(3)} &&
                  six.trace[4] == six.trace[2] && six.trace[5] == six.trace[1] &&
                  six.trace[6] == six.trace[0],
              "diameter 6: trace differs from (1, t, 2t+3, 3t+1, 2t+3, t, 1)");
    c.require(six.admissible.kind() == IntegralityResult::Kind::All &&
                  six.admissible.smallest() && *six.admissible.smallest() == 1,
              "diameter 6: admissible parameters are not exactly t >= 1");

    const FamilyLemmaReport lemmas = verify_family_lemmas(50);
    c.require(lemmas.entries.size() == 50, "family lemmas: wrong entry count");
    c.require(lemmas.all_pass, "family lemmas failed");
    for (const FamilyCheck& entry : lemmas.entries)
        c.require(entry.lp_checked == (entry.t <= 3) && (!entry.lp_checked || entry.lp_agrees),
                  "family lemmas: transport re-verification missing or disagreeing");
    return c.ok;
}

// ------------------------------------------------------------- criterion 5

bool even_nonexistence(Check& c) {
    for (int L = 8; L <= 200; L += 2) {
        const ScanResult r = scan_even_diameter(L);
        c.require(r.outcome == ScanResult::Outcome::Empty,
                  "diameter " + std::to_string(L) + ": scan is not empty");
        c.require(r.solutions.empty() && r.admissible.is_empty(),
                  "diameter " + std::to_string(L) + ": admissible set is not empty");
    }
    const ScanResult ten = scan_even_diameter(10);
    c.require(ten.trace.size() == 11, "diameter 10: wrong trace length");
    if (ten.trace.size() == 11) {
        const AffineForm& level6 = ten.trace[5];
        c.require(level6.slope == Rational(19), "diameter 10: level-6 slope is not 19");
        c.require(!level6.constant.is_integer(),
                  "diameter 10: level-6 constant is unexpectedly an integer");
    }
    return c.ok;
}

// ------------------------------------------------------------- criterion 6

bool odd_scans(Check& c) {
    const ScanResult three = scan_odd_small(3);
    c.require(three.outcome == ScanResult::Outcome::FiniteList &&
                  three.solutions.size() == 1 &&
                  three.solutions[0] == AntitreeSequence({1, 3, 3, 1}),
              "diameter 3: solutions differ from {AT(1,3,3,1)}");
    c.require(!three.region.empty(), "diameter 3: candidate region not reported");

    const ScanResult five = scan_odd_small(5);
    c.require(five.outcome == ScanResult::Outcome::Empty && five.solutions.empty(),
              "diameter 5: expected an empty scan");
    c.require(five.region.size() == 9, "diameter 5: region is not the nine candidates");
    for (const ScanCandidate& cand : five.region)
        c.require(!cand.sharp && cand.min_curvature < Rational(2, 5),
                  "diameter 5: a candidate was sharp or above the bound");
    return c.ok;
}

// ------------------------------------------------------------- criterion 7

bool fixture_graph(Check& c, const std::string& name, const Graph& g, bool sharp,
                   const Rational& min) {
    const SharpnessVerdict v = is_bm_sharp(g, 0);
    c.require(v.is_sharp == sharp, name + ": wrong verdict");
    c.require(v.min_curvature == min, name + ": wrong minimum curvature");
    if (sharp) c.require(v.bound == min, name + ": minimum does not meet the diameter bound");
    return c.ok;
}

bool fixture(Check& c, const std::string& expr, bool sharp, const Rational& min) {
    return fixture_graph(c, expr, generate(FamilyExpr::parse(expr)), sharp, min);
}

bool named_fixtures(Check& c) {
    for (int n = 1; n <= 5; ++n)
        fixture(c, "Q:" + std::to_string(n), true, Rational(2, n == 0 ? 1 : n));
    for (int n = 2; n <= 5; ++n) fixture(c, "CP:" + std::to_string(n), true, Rational(1));
    fixture(c, "J:6,3", true, Rational(2, 3));
    fixture(c, "DemiQ:6", true, Rational(2, 3));
    fixture(c, "CP:3*CP:3", true, Rational(1, 2));
    fixture(c, "K:3", false, Rational(3, 2));
    fixture(c, "K:4", false, Rational(4, 3));
    fixture(c, "K:5", false, Rational(5, 4));
    fixture(c, "K:6", false, Rational(6, 5));
    fixture_graph(c, "C_5", cycle_graph(5), false, Rational(1, 2));
    fixture_graph(c, "C_6", cycle_graph(6), false, Rational(0));
    fixture_graph(c, "P_4", path_graph(4), false, Rational(0));
    return c.ok;
}

bool gosset_fixture(Check& c) { return fixture(c, "Gosset", true, Rational(2, 3)); }

// ------------------------------------------------------------- criterion 8

bool transport_properties(Check& c) {
    std::mt19937 rng(1234567);
    for (int trial = 0; trial < 500 && c.ok; ++trial) {
        const Graph g = testutil::random_connected_graph(rng, 10);
        const ProbabilityMeasure mu1 = testutil::random_measure(rng, g, 6, 12);
        const ProbabilityMeasure mu2 = testutil::random_measure(rng, g, 6, 12);
        const std::string tag = "instance " + std::to_string(trial);
        try {
            const TransportResult r = wasserstein1(g, mu1, mu2);
            verify_transport(g, mu1, mu2, r);  // duality, marginals, plan cost
            const TransportResult back = wasserstein1(g, mu2, mu1);
            c.require(r.value == back.value, tag + ": asymmetric value");
            testutil::CouplingOracle oracle(g, mu1, mu2);
            c.require(r.value == oracle.value(), tag + ": coupling oracle disagrees");
        } catch (const std::exception& e) {
            c.require(false, tag + ": " + e.what());
        }
    }
    return c.ok;
}

// ------------------------------------------------------------- criterion 9

bool idleness_theorem(Check& c) {
    std::vector<Graph> graphs;
    for (const char* expr : {"Q:2", "Q:3", "Q:4", "CP:2", "CP:3", "CP:4", "J:5,2", "G:2,3",
                             "G:3,2", "K:5", "AT:1,2,4,2,1", "AT:1,3,3,1"})
        graphs.push_back(generate(FamilyExpr::parse(expr)));
    graphs.push_back(cycle_graph(5));
    graphs.push_back(cycle_graph(6));
    graphs.push_back(path_graph(4));
    graphs.push_back(path_graph(6));

    std::vector<std::pair<size_t, Edge>> pool;
    for (size_t i = 0; i < graphs.size(); ++i)
        for (const Edge& e : graphs[i].edges()) pool.emplace_back(i, e);

    std::mt19937 rng(55555);
    std::shuffle(pool.begin(), pool.end(), rng);
    std::uniform_int_distribution<long> num(0, 12);

    const size_t edges_to_check = 100;
    for (size_t i = 0; i < edges_to_check && i < pool.size() && c.ok; ++i) {
        const Graph& g = graphs[pool[i].first];
        const auto [x, y] = pool[i].second;
        const std::string tag =
            "edge (" + std::to_string(x) + "," + std::to_string(y) + ") of graph " +
            std::to_string(pool[i].first);
        const Rational pstar = idleness_threshold(g, x, y);
        const Rational lly = kappa_lly(g, x, y);

        // Five exact samples of p across [p*, 1].
        for (int s = 0; s < 5; ++s) {
            const Rational u(num(rng), 12);
            const Rational p = pstar + (Rational(1) - pstar) * u;
            c.require(kappa_p(g, x, y, p) == (Rational(1) - p) * lly,
                      tag + ": linearity fails beyond the threshold");
        }

        // Concavity chord over three ordered samples spanning [0, 1].
        Rational ps[3] = {Rational(num(rng), 12), Rational(num(rng), 12), Rational(num(rng), 12)};
        std::sort(ps, ps + 3);
        if (ps[0] < ps[1] && ps[1] < ps[2]) {
            const Rational k0 = kappa_p(g, x, y, ps[0]);
            const Rational k1 = kappa_p(g, x, y, ps[1]);
            const Rational k2 = kappa_p(g, x, y, ps[2]);
            c.require(k1 * (ps[2] - ps[0]) >= k0 * (ps[2] - ps[1]) + k2 * (ps[1] - ps[0]),
                      tag + ": concavity chord fails");
        }
    }
    c.require(pool.size() >= edges_to_check, "fixture edge pool is too small");
    return c.ok;
}

// ------------------------------------------------------------- criterion 10

bool structural_lemma_suite(Check& c) {
    for (int n = 4; n <= 6; ++n) {
        const ClassificationReport report = verify_diameter2_classification(n, 0);
        for (std::uint64_t mask : report.sharp_masks) {
            const LemmaReport lemmas = check_sharp_diameter2_lemmas(graph_from_edge_mask(n, mask));
            c.require(lemmas.all_pass,
                      "n = " + std::to_string(n) + " mask " + std::to_string(mask) +
                          ": structural lemmas fail");
        }
    }
    for (int a = 1; 2 * a <= 10; ++a) {
        for (int b = 0; 2 * a + b <= 10; ++b) {
            if (a == 1 && b == 0) continue;
            const LemmaReport lemmas = check_sharp_diameter2_lemmas(gab_graph(a, b), 0);
            c.require(lemmas.all_pass, "G(" + std::to_string(a) + "," + std::to_string(b) +
                                           "): structural lemmas fail");
        }
    }
    return c.ok;
}

}  // namespace

int main(int argc, char** argv) {
    bool with_gosset = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--gosset") == 0) with_gosset = true;

    struct Entry {
        int number;
        const char* label;
        bool (*fn)(Check&);
        bool gating;
    };
    const Entry entries[] = {
        {1, "matched-pair complete family: exact curvatures 1 and (2a+b)/(2a+b-1), all sharp",
         matched_pair_family_grid, true},
        {2, "exhaustive diameter-2 classification at n = 4, 5, 6: zero mismatches",
         diameter2_classification, true},
        {3, "antitree closed forms match the transport solver on all rooted sequences (N <= 5, "
            "sizes <= 4)",
         closed_form_cross_validation, true},
        {4, "even scans return the two one-parameter families; family lemmas hold to t = 50",
         even_families_and_lemmas, true},
        {5, "even scans are empty on [8, 200]; diameter-10 trace has slope 19, non-integer "
            "constant",
         even_nonexistence, true},
        {6, "odd scans: diameter 3 yields exactly AT(1,3,3,1); diameter 5 empty over nine "
            "candidates",
         odd_scans, true},
        {7, "named fixtures: sharp and non-sharp verdicts with exact minima", named_fixtures,
         true},
        {8, "transport: 500 random instances pass duality, marginals, symmetry, coupling oracle",
         transport_properties, true},
        {9, "idleness: linearity beyond the threshold and concavity chords on 100 random edges",
         idleness_theorem, true},
        {10, "structural lemmas on every discovered sharp diameter-2 graph and the G(a,b) grid",
         structural_lemma_suite, true},
    };

    bool all_ok = true;
    for (const Entry& entry : entries) {
        Check c;
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = entry.fn(c);
        } catch (const std::exception& e) {
            c.require(false, std::string("unhandled exception: ") + e.what());
            ok = false;
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << (ok ? "PASS" : "FAIL") << " - criterion " << entry.number << ": "
                  << entry.label << " (" << secs << " s)";
        if (!ok) std::cout << " [" << c.note << "]";
        std::cout << std::endl;
        if (!ok && entry.gating) all_ok = false;
    }

    if (with_gosset) {
        Check c;
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = gosset_fixture(c);
        } catch (const std::exception& e) {
            c.require(false, std::string("unhandled exception: ") + e.what());
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << (ok ? "PASS" : "FAIL")
                  << " - extended (non-gating): Gosset fixture is sharp with minimum 2/3 ("
                  << secs << " s)";
        if (!ok) std::cout << " [" << c.note << "]";
        std::cout << std::endl;
    }

    return all_ok ? 0 : 1;
}
