#include <doctest.h>

#include <random>

#include "ricci/curvature.hpp"
#include "ricci/errors.hpp"
#include "ricci/families.hpp"

using namespace ricci;

TEST_CASE("idleness threshold uses the larger endpoint degree") {
    const Graph p3 = path_graph(3);  // degrees 1, 2, 1
    CHECK(idleness_threshold(p3, 0, 1) == Rational(1, 3));
    const Graph k4 = complete_graph(4);
    CHECK(idleness_threshold(k4, 0, 1) == Rational(1, 4));
}

TEST_CASE("hand-checked curvature values") {
    const Graph k2 = complete_graph(2);
    CHECK(kappa_p(k2, 0, 1, Rational(0)) == Rational(0));
    CHECK(kappa_p(k2, 0, 1, Rational(1, 2)) == Rational(1));
    CHECK(kappa_lly(k2, 0, 1) == Rational(2));

    const Graph k3 = complete_graph(3);
    CHECK(kappa_p(k3, 0, 1, Rational(1, 3)) == Rational(1));
    CHECK(kappa_lly(k3, 0, 1) == Rational(3, 2));

    const Graph c4 = cycle_graph(4);
    CHECK(kappa_p(c4, 0, 1, Rational(1, 3)) == Rational(2, 3));
    CHECK(kappa_lly(c4, 0, 1) == Rational(1));

    const Graph g12 = gab_graph(1, 2);  // dominating pair is (2, 3)
    CHECK(kappa_lly(g12, 2, 3) == Rational(4, 3));
    CHECK(kappa_lly(g12, 0, 2) == Rational(1));

    // Cycles of length at least 6 are flat.
    const Graph c6 = cycle_graph(6);
    CHECK(kappa_lly(c6, 0, 1) == Rational(0));
    // C_5 sits strictly between.
    const Graph c5 = cycle_graph(5);
    CHECK(kappa_lly(c5, 0, 1) == Rational(1, 2));
}

TEST_CASE("sweeps over vertex-transitive fixtures") {
    const CurvatureReport q3 = curvature_sweep(hypercube_graph(3));
    CHECK(q3.diameter == 3);
    CHECK(q3.edges.size() == 12);
    for (const EdgeCurvature& ec : q3.edges) CHECK(ec.kappa_lly == Rational(2, 3));
    CHECK(q3.min_curvature == Rational(2, 3));

    const CurvatureReport k4 = curvature_sweep(complete_graph(4));
    for (const EdgeCurvature& ec : k4.edges) CHECK(ec.kappa_lly == Rational(4, 3));

    const CurvatureReport g21 = curvature_sweep(gab_graph(2, 1));
    CHECK(g21.diameter == 2);
    for (const EdgeCurvature& ec : g21.edges) CHECK(ec.kappa_lly == Rational(1));
    CHECK(g21.min_curvature == Rational(1));
}

TEST_CASE("curvature is linear beyond the idleness threshold") {
    std::mt19937 rng(777);
    const Graph graphs[] = {hypercube_graph(3), cycle_graph(5), gab_graph(2, 2),
                            johnson_graph(5, 2), path_graph(5)};
    std::uniform_int_distribution<long> num(0, 11);
    for (const Graph& g : graphs) {
        const auto edges = g.edges();
        std::uniform_int_distribution<size_t> pick(0, edges.size() - 1);
        for (int s = 0; s < 4; ++s) {
            const auto [x, y] = edges[pick(rng)];
            const Rational pstar = idleness_threshold(g, x, y);
            const Rational lly = kappa_lly(g, x, y);
            // p = p* + (1 - p*) * u with u in [0, 1].
            const Rational u(num(rng), 11);
            const Rational p = pstar + (Rational(1) - pstar) * u;
            CHECK(kappa_p(g, x, y, p) == (Rational(1) - p) * lly);
        }
    }
}

TEST_CASE("curvature is concave in the idleness") {
    const Graph graphs[] = {cycle_graph(5), gab_graph(1, 3), path_graph(4)};
    for (const Graph& g : graphs) {
        const auto [x, y] = g.edges().front();
        // Chord check on a fixed grid of thirds/quarters across [0, 1].
        const Rational ps[] = {Rational(0), Rational(1, 4), Rational(1, 3), Rational(1, 2),
                               Rational(2, 3), Rational(3, 4), Rational(1)};
        std::vector<Rational> k;
        for (const Rational& p : ps) k.push_back(kappa_p(g, x, y, p));
        for (size_t a = 0; a < std::size(ps); ++a)
            for (size_t b = a + 1; b < std::size(ps); ++b)
                for (size_t c = b + 1; c < std::size(ps); ++c) {
                    // kappa(p_b) >= chord of (p_a, p_c) evaluated at p_b.
                    const Rational lhs = k[b] * (ps[c] - ps[a]);
                    const Rational rhs = k[a] * (ps[c] - ps[b]) + k[c] * (ps[b] - ps[a]);
                    CHECK(lhs >= rhs);
                }
    }
}

TEST_CASE("curvature vanishes at full idleness") {
    for (const Graph& g : {cycle_graph(6), complete_graph(5), gab_graph(2, 3)}) {
        const auto [x, y] = g.edges().front();
        CHECK(kappa_p(g, x, y, Rational(1)) == Rational(0));
    }
}

TEST_CASE("sweep is independent of the worker count") {
    const Graph g = johnson_graph(5, 2);
    const CurvatureReport a = curvature_sweep(g, 1);
    const CurvatureReport b = curvature_sweep(g, 4);
    REQUIRE(a.edges.size() == b.edges.size());
    CHECK(a.min_curvature == b.min_curvature);
    CHECK(a.diameter == b.diameter);
    for (size_t i = 0; i < a.edges.size(); ++i) {
        CHECK(a.edges[i].edge == b.edges[i].edge);
        CHECK(a.edges[i].idleness_used == b.edges[i].idleness_used);
        CHECK(a.edges[i].kappa_p == b.edges[i].kappa_p);
        CHECK(a.edges[i].kappa_lly == b.edges[i].kappa_lly);
    }
}

TEST_CASE("input validation") {
    const Graph c4 = cycle_graph(4);
    CHECK_THROWS_AS(kappa_p(c4, 0, 2, Rational(1, 3)), InputError);  // not an edge
    CHECK_THROWS_AS(kappa_p(c4, 0, 0, Rational(1, 3)), InputError);
    CHECK_THROWS_AS(kappa_p(c4, 0, 1, Rational(-1, 10)), InputError);
    CHECK_THROWS_AS(kappa_p(c4, 0, 1, Rational(11, 10)), InputError);
    CHECK_THROWS_AS(kappa_lly(c4, 0, 4), InputError);  // out of range

    const Graph disconnected = Graph::from_edges(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(kappa_lly(disconnected, 0, 1), InputError);
    CHECK_THROWS_AS(curvature_sweep(disconnected), InputError);

    const Graph edgeless = Graph::from_edges(1, {});
    CHECK_THROWS_AS(curvature_sweep(edgeless), InputError);
}
