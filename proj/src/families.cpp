#include "ricci/families.hpp"

#include <bit>
#include <charconv>
#include <cstdint>

#include "ricci/antitree.hpp"

namespace ricci {

Graph complete_graph(int n) {
    if (n < 1) throw InputError("K:n requires n >= 1");
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph::from_edges(n, e);
}

Graph cycle_graph(int n) {
    if (n < 3) throw InputError("cycle requires n >= 3");
    std::vector<Edge> e;
    for (int v = 0; v < n; ++v) e.emplace_back(std::min(v, (v + 1) % n), std::max(v, (v + 1) % n));
    return Graph::from_edges(n, e);
}

Graph path_graph(int n) {
    if (n < 1) throw InputError("path requires n >= 1");
    std::vector<Edge> e;
    for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
    return Graph::from_edges(n, e);
}

Graph cocktail_party_graph(int n) {
    if (n < 1) throw InputError("CP:n requires n >= 1");
    std::vector<Edge> e;
    for (int u = 0; u < 2 * n; ++u)
        for (int v = u + 1; v < 2 * n; ++v)
            if (!(u / 2 == v / 2)) e.emplace_back(u, v);
    return Graph::from_edges(2 * n, e);
}

Graph hypercube_graph(int n) {
    if (n < 1 || n > 24) throw InputError("Q:n requires 1 <= n <= 24");
    const int size = 1 << n;
    std::vector<Edge> e;
    for (int v = 0; v < size; ++v)
        for (int b = 0; b < n; ++b) {
            int u = v ^ (1 << b);
            if (v < u) e.emplace_back(v, u);
        }
    return Graph::from_edges(size, e);
}

Graph johnson_graph(int n, int k) {
    if (!(0 < k && k < n) || n > 30) throw InputError("J:n,k requires 0 < k < n (n <= 30)");
    std::vector<uint32_t> subsets;
    for (uint32_t m = 0; m < (uint32_t(1) << n); ++m)
        if (std::popcount(m) == k) subsets.push_back(m);
    std::vector<Edge> e;
    for (size_t i = 0; i < subsets.size(); ++i)
        for (size_t j = i + 1; j < subsets.size(); ++j)
            if (std::popcount(subsets[i] & subsets[j]) == k - 1)
                e.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return Graph::from_edges(static_cast<int>(subsets.size()), e);
}

Graph demicube_graph(int d) {
    if (d < 2 || d % 2 != 0 || d > 24) throw InputError("DemiQ:n requires even n >= 2 (n <= 24)");
    std::vector<uint32_t> words;
    for (uint32_t w = 0; w < (uint32_t(1) << d); ++w)
        if (std::popcount(w) % 2 == 0) words.push_back(w);
    std::vector<Edge> e;
    for (size_t i = 0; i < words.size(); ++i)
        for (size_t j = i + 1; j < words.size(); ++j)
            if (std::popcount(words[i] ^ words[j]) == 2)
                e.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return Graph::from_edges(static_cast<int>(words.size()), e);
}

// Two copies A, B of the 2-subsets of {1..8} (28 each, lexicographic order;
// A first). A-A and B-B pairs are adjacent iff the subsets share exactly one
// element; A-B pairs are adjacent iff the subsets are disjoint. This yields a
// 27-regular graph on 56 vertices of diameter 3.
Graph gosset_graph() {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j) pairs.emplace_back(i, j);
    const int np = static_cast<int>(pairs.size());
    auto shared = [&](int s, int t) {
        auto [a, b] = pairs[s];
        auto [c, d] = pairs[t];
        return (a == c) + (a == d) + (b == c) + (b == d);
    };
    std::vector<Edge> e;
    for (int s = 0; s < np; ++s)
        for (int t = s + 1; t < np; ++t)
            if (shared(s, t) == 1) {
                e.emplace_back(s, t);            // A-A
                e.emplace_back(np + s, np + t);  // B-B
            }
    for (int s = 0; s < np; ++s)
        for (int t = 0; t < np; ++t)
            if (shared(s, t) == 0) {
                int u = s, v = np + t;
                if (u < v) e.emplace_back(u, v);  // A-B, always true
            }
    return Graph::from_edges(2 * np, e);
}

Graph gab_graph(int a, int b) {
    if (a < 0 || b < 0 || 2 * a + b < 1) throw InputError("G:a,b requires a,b >= 0 and 2a+b >= 1");
    const int n = 2 * a + b;
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            bool matched = u < 2 * a && v == u + 1 && u % 2 == 0;
            if (!matched) e.emplace_back(u, v);
        }
    return Graph::from_edges(n, e);
}

std::string FamilyAtom::str() const {
    auto join = [this] {
        std::string s;
        for (size_t i = 0; i < params.size(); ++i)
            s += (i ? "," : "") + std::to_string(params[i]);
        return s;
    };
    switch (kind) {
        case Kind::Complete: return "K:" + join();
        case Kind::CocktailParty: return "CP:" + join();
        case Kind::Hypercube: return "Q:" + join();
        case Kind::Johnson: return "J:" + join();
        case Kind::DemiCube: return "DemiQ:" + join();
        case Kind::Gosset: return "Gosset";
        case Kind::Gab: return "G:" + join();
        case Kind::Antitree: return "AT:" + join();
    }
    throw InternalError("FamilyAtom::str: bad kind");
}

std::string FamilyExpr::str() const {
    std::string s;
    for (size_t i = 0; i < factors.size(); ++i) s += (i ? "*" : "") + factors[i].str();
    return s;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

long parse_long(std::string_view s) {
    s = trim(s);
    long value = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || p != s.data() + s.size())
        throw InputError("family: bad integer parameter '" + std::string(s) + "'");
    return value;
}

FamilyAtom parse_atom(std::string_view text) {
    text = trim(text);
    if (text.empty()) throw InputError("family: empty atom");
    std::string_view name = text;
    std::vector<long> params;
    if (auto colon = text.find(':'); colon != std::string_view::npos) {
        name = trim(text.substr(0, colon));
        std::string_view rest = text.substr(colon + 1);
        while (true) {
            auto comma = rest.find(',');
            params.push_back(parse_long(rest.substr(0, comma)));
            if (comma == std::string_view::npos) break;
            rest = rest.substr(comma + 1);
        }
    }
    auto want = [&](size_t k, const char* sig) {
        if (params.size() != k) throw InputError(std::string("family: ") + sig);
    };
    if (name == "K") { want(1, "K takes one parameter K:n"); return {FamilyAtom::Kind::Complete, params}; }
    if (name == "CP") { want(1, "CP takes one parameter CP:n"); return {FamilyAtom::Kind::CocktailParty, params}; }
    if (name == "Q") { want(1, "Q takes one parameter Q:n"); return {FamilyAtom::Kind::Hypercube, params}; }
    if (name == "J") { want(2, "J takes two parameters J:n,k"); return {FamilyAtom::Kind::Johnson, params}; }
    if (name == "DemiQ") { want(1, "DemiQ takes one parameter DemiQ:n"); return {FamilyAtom::Kind::DemiCube, params}; }
    if (name == "Gosset") { want(0, "Gosset takes no parameters"); return {FamilyAtom::Kind::Gosset, params}; }
    if (name == "G") {
        want(2, "G takes two parameters G:a,b");
        if (params[0] < 1) throw InputError("family: G:a,b requires a >= 1");
        return {FamilyAtom::Kind::Gab, params};
    }
    if (name == "AT") {
        if (params.size() < 2) throw InputError("family: AT takes at least two level sizes");
        for (long a : params)
            if (a < 1) throw InputError("family: AT level sizes must be >= 1");
        return {FamilyAtom::Kind::Antitree, params};
    }
    throw InputError("family: unknown atom '" + std::string(name) + "'");
}

int checked_int(long v, const char* what) {
    if (v < 0 || v > 1'000'000) throw InputError(std::string("family: parameter out of range for ") + what);
    return static_cast<int>(v);
}

}  // namespace

FamilyExpr FamilyExpr::parse(std::string_view text) {
    FamilyExpr expr;
    size_t start = 0;
    std::string s(text);
    while (true) {
        auto star = s.find('*', start);
        expr.factors.push_back(parse_atom(std::string_view(s).substr(
            start, star == std::string::npos ? std::string::npos : star - start)));
        if (star == std::string::npos) break;
        start = star + 1;
    }
    return expr;
}

Graph generate(const FamilyAtom& atom) {
    const auto& p = atom.params;
    switch (atom.kind) {
        case FamilyAtom::Kind::Complete: return complete_graph(checked_int(p[0], "K"));
        case FamilyAtom::Kind::CocktailParty: return cocktail_party_graph(checked_int(p[0], "CP"));
        case FamilyAtom::Kind::Hypercube: return hypercube_graph(checked_int(p[0], "Q"));
        case FamilyAtom::Kind::Johnson: return johnson_graph(checked_int(p[0], "J"), checked_int(p[1], "J"));
        case FamilyAtom::Kind::DemiCube: return demicube_graph(checked_int(p[0], "DemiQ"));
        case FamilyAtom::Kind::Gosset: return gosset_graph();
        case FamilyAtom::Kind::Gab: return gab_graph(checked_int(p[0], "G"), checked_int(p[1], "G"));
        case FamilyAtom::Kind::Antitree: return antitree_graph(AntitreeSequence(p));
    }
    throw InternalError("generate: bad atom kind");
}

Graph generate(const FamilyExpr& expr) {
    if (expr.factors.empty()) throw InputError("family: empty expression");
    Graph g = generate(expr.factors[0]);
    for (size_t i = 1; i < expr.factors.size(); ++i) {
        Graph h = generate(expr.factors[i]);
        if (!g.connected() || !h.connected())
            throw InputError("family: Cartesian product factors must be connected");
        g = cartesian_product(g, h);
    }
    return g;
}

}  // namespace ricci
