#pragma once

#include <map>

#include "ricci/graph.hpp"
#include "ricci/rational.hpp"

namespace ricci {

// Finitely supported probability measure on the vertex set. Only strictly
// positive masses are stored; masses sum to exactly 1.
class ProbabilityMeasure {
public:
    static ProbabilityMeasure from_masses(std::map<int, Rational> masses) {
        Rational total;
        for (const auto& [v, m] : masses) {
            if (m.sign() <= 0) throw InputError("ProbabilityMeasure: masses must be positive");
            total += m;
        }
        if (!(total == Rational(1))) throw InputError("ProbabilityMeasure: masses must sum to 1");
        ProbabilityMeasure mu;
        mu.masses_ = std::move(masses);
        return mu;
    }

    const std::map<int, Rational>& masses() const { return masses_; }

    Rational at(int v) const {
        auto it = masses_.find(v);
        return it == masses_.end() ? Rational(0) : it->second;
    }

    bool operator==(const ProbabilityMeasure&) const = default;

private:
    ProbabilityMeasure() = default;
    std::map<int, Rational> masses_;
};

// The lazy random-walk step measure: mass p stays at x, mass (1-p)/deg(x)
// goes to each neighbor. Defined only for non-isolated x and 0 <= p <= 1.
ProbabilityMeasure vertex_measure(const Graph& g, int x, const Rational& p);

}  // namespace ricci
