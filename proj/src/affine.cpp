#include "ricci/affine.hpp"

#include "ricci/errors.hpp"

namespace ricci {

namespace {

BigInt mod_nonneg(const BigInt& a, const BigInt& m) {
    BigInt r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

}  // namespace

std::string AffineForm::str() const {
    if (slope.is_zero()) return constant.str();
    std::string s;
    if (slope == Rational(1)) {
        s = "t";
    } else if (slope == Rational(-1)) {
        s = "-t";
    } else if (slope.is_integer()) {
        s = slope.str() + "t";
    } else {
        s = "(" + slope.str() + ")t";
    }
    if (!constant.is_zero()) {
        s += (constant.sign() > 0 ? " + " : " - ") + constant.abs().str();
    }
    return s;
}

IntegralityResult IntegralityResult::residue_class(BigInt residue, BigInt modulus, BigInt threshold,
                                                   std::optional<BigInt> max_t) {
    if (modulus < 1) throw InputError("IntegralityResult: modulus must be positive");
    IntegralityResult r;
    r.empty_ = false;
    r.modulus_ = std::move(modulus);
    r.residue_ = mod_nonneg(residue, r.modulus_);
    // Lift the threshold to the smallest member of the class.
    r.threshold_ = threshold + mod_nonneg(r.residue_ - threshold, r.modulus_);
    r.max_ = std::move(max_t);
    if (r.max_ && *r.max_ < r.threshold_) return IntegralityResult();
    return r;
}

bool IntegralityResult::admits(const BigInt& t) const {
    if (empty_) return false;
    if (t < threshold_) return false;
    if (max_ && t > *max_) return false;
    return mod_nonneg(t, modulus_) == residue_;
}

std::optional<BigInt> IntegralityResult::smallest() const {
    if (empty_) return std::nullopt;
    return threshold_;
}

std::string IntegralityResult::str() const {
    if (empty_) return "empty";
    std::string s;
    if (modulus_ == 1) {
        s = "all integers t >= " + threshold_.get_str();
    } else {
        s = "t = " + residue_.get_str() + " (mod " + modulus_.get_str() + "), t >= " +
            threshold_.get_str();
    }
    if (max_) s += ", t <= " + max_->get_str();
    return s;
}

IntegralityResult intersect(const IntegralityResult& a, const IntegralityResult& b) {
    if (a.is_empty() || b.is_empty()) return IntegralityResult::empty();
    const BigInt& m1 = a.modulus_;
    const BigInt& m2 = b.modulus_;
    BigInt g = gcd(m1, m2);
    BigInt diff = b.residue_ - a.residue_;
    if (mod_nonneg(diff, g) != 0) return IntegralityResult::empty();

    // CRT: t = a.residue + m1*k with m1*k = diff (mod m2), i.e.
    // (m1/g)*k = diff/g (mod m2/g).
    BigInt m2g = m2 / g;
    BigInt k = 0;
    if (m2g != 1) {
        BigInt inv;
        if (mpz_invert(inv.get_mpz_t(), BigInt(m1 / g).get_mpz_t(), m2g.get_mpz_t()) == 0)
            throw InternalError("intersect: no modular inverse (gcd logic broken)");
        k = mod_nonneg((diff / g) * inv, m2g);
    }
    BigInt modulus = m1 / g * m2;
    BigInt residue = a.residue_ + m1 * k;

    BigInt threshold = std::max(a.threshold_, b.threshold_);
    std::optional<BigInt> max_t;
    if (a.max_ && b.max_) max_t = std::min(*a.max_, *b.max_);
    else if (a.max_) max_t = a.max_;
    else if (b.max_) max_t = b.max_;

    return IntegralityResult::residue_class(residue, modulus, threshold, max_t);
}

IntegralityResult integer_solutions(const AffineForm& f, const BigInt& t_min) {
    if (t_min < 1) throw InputError("integer_solutions: t_min must be >= 1");

    const Rational& beta = f.slope;
    const Rational& alpha = f.constant;

    if (beta.is_zero()) {
        if (alpha.is_integer() && alpha.sign() > 0)
            return IntegralityResult::residue_class(0, 1, t_min);
        return IntegralityResult::empty();
    }

    // f(t) = (p/q)t + (r/s) in canonical form. f(t) is an integer iff
    // p*s*t + r*q = 0 (mod q*s); since gcd(p,q)=1 and gcd(r,s)=1 this is
    // solvable iff s | q, in which case t runs over one residue class mod q.
    BigInt p = beta.numerator(), q = beta.denominator();
    BigInt r = alpha.numerator(), s = alpha.denominator();
    if (mod_nonneg(q, s) != 0) return IntegralityResult::empty();

    BigInt residue = 0;
    if (q != 1) {
        BigInt pinv;
        if (mpz_invert(pinv.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t()) == 0)
            throw InternalError("integer_solutions: slope not invertible mod its denominator");
        residue = mod_nonneg(-r * (q / s) * pinv, q);
    }

    // Positivity f(t) > 0 gives a one-sided bound since beta != 0.
    Rational crossing = -alpha / beta;  // f(crossing) = 0
    if (beta.sign() > 0) {
        BigInt low = crossing.floor() + 1;
        return IntegralityResult::residue_class(residue, q, std::max(t_min, low));
    }
    BigInt high = crossing.ceil() - 1;
    if (high < t_min) return IntegralityResult::empty();
    return IntegralityResult::residue_class(residue, q, t_min, high);
}

}  // namespace ricci
