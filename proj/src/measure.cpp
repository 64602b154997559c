#include "ricci/measure.hpp"

namespace ricci {

ProbabilityMeasure vertex_measure(const Graph& g, int x, const Rational& p) {
    if (x < 0 || x >= g.vertex_count()) throw InputError("vertex_measure: vertex out of range");
    if (p.sign() < 0 || Rational(1) < p) throw InputError("vertex_measure: idleness must lie in [0, 1]");
    const int deg = g.degree(x);
    if (deg == 0) throw InputError("vertex_measure: isolated vertex has no step measure");

    std::map<int, Rational> masses;
    if (p.sign() > 0) masses[x] = p;
    const Rational share = (Rational(1) - p) / Rational(deg);
    if (share.sign() > 0) {
        g.neighbors(x).for_each([&](int v) { masses[v] = share; });
    }
    return ProbabilityMeasure::from_masses(std::move(masses));
}

}  // namespace ricci
