#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ricci/graph.hpp"

namespace ricci {

// One atom of the family grammar:
//   K:n | CP:n | Q:n | J:n,k | DemiQ:n | Gosset | G:a,b | AT:a1,...,aN
struct FamilyAtom {
    enum class Kind { Complete, CocktailParty, Hypercube, Johnson, DemiCube, Gosset, Gab, Antitree };
    Kind kind;
    std::vector<long> params;

    std::string str() const;
};

// Left-associative product of atoms: expr := atom ( '*' atom )*
struct FamilyExpr {
    std::vector<FamilyAtom> factors;

    static FamilyExpr parse(std::string_view text);
    std::string str() const;
};

Graph generate(const FamilyAtom& atom);
Graph generate(const FamilyExpr& expr);

// Individual generators. Vertex numbering conventions are part of the
// contract (tests and reports rely on them).
Graph complete_graph(int n);                 // n >= 1
Graph cycle_graph(int n);                    // n >= 3
Graph path_graph(int n);                     // n >= 1
Graph cocktail_party_graph(int n);           // K_{2n} minus the matching (2i, 2i+1)
Graph hypercube_graph(int n);                // vertices are n-bit words, Hamming-1 adjacency
Graph johnson_graph(int n, int k);           // k-subsets of [n], adjacent iff |A ∩ B| = k-1
Graph demicube_graph(int d);                 // even-weight d-bit words, Hamming-2 adjacency
Graph gosset_graph();                        // 56 vertices, see implementation note

// Complement of a disjoint union of `a` edges and `b` isolated vertices,
// i.e. K_{2a+b} minus a matching of size a. Vertices 0..2a-1 are the matched
// endpoints u_1..u_2a (pair (2i, 2i+1) deleted), vertices 2a..2a+b-1 are the
// dominating vertices v_1..v_b. a = 0 (giving K_b) is allowed here but not
// through the family grammar.
Graph gab_graph(int a, int b);

}  // namespace ricci
