#pragma once

#include <vector>

#include "ricci/graph.hpp"
#include "ricci/rational.hpp"

namespace ricci {

// Largest idleness at which the curvature function kappa_p is still linear
// up to p = 1: 1 / (max(deg x, deg y) + 1).
Rational idleness_threshold(const Graph& g, int x, int y);

// kappa_p(x, y) = 1 - W1(mu_x^p, mu_y^p) for an edge (x, y), computed by an
// exact transport solve. The graph must be connected.
Rational kappa_p(const Graph& g, int x, int y, const Rational& p);

// The idleness-free curvature: kappa_p is linear in p on
// [idleness_threshold, 1] and vanishes at p = 1, so its value anywhere is
// determined by the slope. Evaluating at the threshold p* gives
// kappa_lly = kappa_{p*} / (1 - p*), exactly.
Rational kappa_lly(const Graph& g, int x, int y);

struct EdgeCurvature {
    Edge edge;
    Rational idleness_used;  // the threshold p* the exact evaluation used
    Rational kappa_p;        // kappa at p*
    Rational kappa_lly;
};

struct CurvatureReport {
    std::vector<EdgeCurvature> edges;  // lexicographic edge order
    Rational min_curvature;            // minimum kappa_lly over all edges
    int diameter;
};

// Evaluates kappa_lly on every edge of a connected graph with at least one
// edge. Edge order and all values are independent of the job count.
CurvatureReport curvature_sweep(const Graph& g, int jobs = 1);

}  // namespace ricci
