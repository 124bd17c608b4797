#ifndef BRAIDSYM_LAURENT_HPP
#define BRAIDSYM_LAURENT_HPP

#include <map>
#include <string>

#include "braidsym/rational.hpp"

namespace braidsym {

/// Sparse Laurent polynomial in q over the rationals. Only nonzero
/// coefficients are stored; the empty map is the zero polynomial.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const Rational& c) {
        if (!c.is_zero()) coeffs_[0] = c;
    }
    LaurentPoly(long c) : LaurentPoly(Rational(c)) {}

    static LaurentPoly monomial(const Rational& c, long exp) {
        LaurentPoly p;
        if (!c.is_zero()) p.coeffs_[exp] = c;
        return p;
    }
    static LaurentPoly q_power(long exp) { return monomial(Rational(1), exp); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const {
        return coeffs_.size() == 1 && coeffs_.begin()->first == 0 && coeffs_.begin()->second.is_one();
    }

    /// Exponent of the highest term. Zero polynomial has no degree.
    long degree() const;
    /// Exponent of the lowest term.
    long valuation() const;

    Rational coeff(long exp) const {
        auto it = coeffs_.find(exp);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }
    Rational leading_coeff() const;

    const std::map<long, Rational>& terms() const { return coeffs_; }

    void add_term(long exp, const Rational& c);

    friend LaurentPoly operator-(const LaurentPoly& a);
    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator+=(const LaurentPoly& b) { *this = *this + b; return *this; }
    LaurentPoly& operator-=(const LaurentPoly& b) { *this = *this - b; return *this; }
    LaurentPoly& operator*=(const LaurentPoly& b) { *this = *this * b; return *this; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    LaurentPoly scaled(const Rational& c) const;
    LaurentPoly shifted(long dexp) const;

    /// The substitution q -> q^{-1} (negates every exponent).
    LaurentPoly bar() const;

    /// Exact division; throws Internal error on a nonzero remainder, which
    /// always indicates an upstream bug.
    LaurentPoly divide_exact(const LaurentPoly& d) const;

    /// Division with remainder after shifting both operands to ordinary
    /// polynomials: *this = q*d + r with r of degree-span < d's.
    void div_rem(const LaurentPoly& d, LaurentPoly& quo, LaurentPoly& rem) const;

    /// Evaluation at a nonzero rational point.
    Rational evaluate(const Rational& q0) const;

    /// Canonical rendering: descending exponents, explicit signs,
    /// e.g. "q^4 + q^2 + 2 + q^-2 + q^-4".
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

private:
    std::map<long, Rational> coeffs_;
};

/// Monic gcd in q of two Laurent polynomials (unit factors q^k discarded);
/// gcd(0, b) = normalized b, gcd(0, 0) = 0.
LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Quantum integer [n] = (q^n - q^-n)/(q - q^-1) = q^{n-1} + q^{n-3} + ... + q^{1-n}.
LaurentPoly q_int(long n);

/// Quantum factorial [m]! = [1][2]...[m], m >= 0.
LaurentPoly q_factorial(long m);

/// Balanced quantum binomial [m]! / ([i]! [m-i]!); zero outside 0 <= i <= m.
/// The division is exact, enforced by divide_exact.
LaurentPoly q_binomial(long m, long i);

} // namespace braidsym

#endif
