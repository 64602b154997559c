#pragma once

#include <optional>
#include <string>

#include "ricci/rational.hpp"

namespace ricci {

// Degree-1 form slope*t + constant in a single rational parameter t.
struct AffineForm {
    Rational constant;
    Rational slope;

    Rational eval(const Rational& t) const { return slope * t + constant; }
    bool is_constant() const { return slope.is_zero(); }

    bool operator==(const AffineForm&) const = default;

    friend AffineForm operator+(const AffineForm& a, const AffineForm& b) {
        return {a.constant + b.constant, a.slope + b.slope};
    }
    friend AffineForm operator-(const AffineForm& a, const AffineForm& b) {
        return {a.constant - b.constant, a.slope - b.slope};
    }
    friend AffineForm operator*(const Rational& c, const AffineForm& f) {
        return {c * f.constant, c * f.slope};
    }
    friend AffineForm operator+(const AffineForm& f, const Rational& c) {
        return {f.constant + c, f.slope};
    }
    friend AffineForm operator-(const AffineForm& f, const Rational& c) {
        return {f.constant - c, f.slope};
    }

    // e.g. "19t + 25/2", "t + 2", "5"
    std::string str() const;
};

// The set { integer t >= threshold : f(t) is a positive integer }, described
// exactly as a residue class t = residue (mod modulus) with a lower threshold
// and, for decreasing forms, an upper bound. modulus == 1 means every integer
// from the threshold on is admissible.
class IntegralityResult {
public:
    enum class Kind { Empty, All, Residue };

    static IntegralityResult empty() { return IntegralityResult(); }
    static IntegralityResult residue_class(BigInt residue, BigInt modulus, BigInt threshold,
                                           std::optional<BigInt> max_t = std::nullopt);

    Kind kind() const {
        if (empty_) return Kind::Empty;
        return modulus_ == 1 ? Kind::All : Kind::Residue;
    }
    bool is_empty() const { return empty_; }

    // Valid only when non-empty.
    const BigInt& modulus() const { return modulus_; }
    const BigInt& residue() const { return residue_; }
    const BigInt& threshold() const { return threshold_; }
    const std::optional<BigInt>& max_t() const { return max_; }

    bool admits(const BigInt& t) const;
    std::optional<BigInt> smallest() const;

    std::string str() const;

    friend IntegralityResult intersect(const IntegralityResult& a, const IntegralityResult& b);

private:
    IntegralityResult() = default;
    bool empty_ = true;
    BigInt residue_ = 0;
    BigInt modulus_ = 1;
    BigInt threshold_ = 0;
    std::optional<BigInt> max_;
};

// Exact solution of "f(t) is a positive integer" over integers t >= t_min.
// No floating point: the answer is an exact residue class or empty.
IntegralityResult integer_solutions(const AffineForm& f, const BigInt& t_min);

}  // namespace ricci
