#include "braidsym/laurent.hpp"

#include <ostream>
#include <sstream>

namespace braidsym {

long LaurentPoly::degree() const {
    if (coeffs_.empty()) throw Error(ErrorCode::Internal, "degree of zero polynomial");
    return coeffs_.rbegin()->first;
}

long LaurentPoly::valuation() const {
    if (coeffs_.empty()) throw Error(ErrorCode::Internal, "valuation of zero polynomial");
    return coeffs_.begin()->first;
}

Rational LaurentPoly::leading_coeff() const {
    if (coeffs_.empty()) return Rational(0);
    return coeffs_.rbegin()->second;
}

void LaurentPoly::add_term(long exp, const Rational& c) {
    if (c.is_zero()) return;
    auto it = coeffs_.find(exp);
    if (it == coeffs_.end()) {
        coeffs_[exp] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly r;
    for (const auto& [e, c] : a.coeffs_) r.coeffs_[e] = -c;
    return r;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    for (const auto& [e, c] : b.coeffs_) r.add_term(e, c);
    return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    for (const auto& [e, c] : b.coeffs_) r.add_term(e, -c);
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.coeffs_)
        for (const auto& [eb, cb] : b.coeffs_)
            r.add_term(ea + eb, ca * cb);
    return r;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
    LaurentPoly r;
    if (c.is_zero()) return r;
    for (const auto& [e, v] : coeffs_) r.coeffs_[e] = v * c;
    return r;
}

LaurentPoly LaurentPoly::shifted(long dexp) const {
    LaurentPoly r;
    for (const auto& [e, v] : coeffs_) r.coeffs_[e + dexp] = v;
    return r;
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly r;
    for (const auto& [e, v] : coeffs_) r.coeffs_[-e] = v;
    return r;
}

void LaurentPoly::div_rem(const LaurentPoly& d, LaurentPoly& quo, LaurentPoly& rem) const {
    if (d.is_zero()) throw Error(ErrorCode::Internal, "LaurentPoly: division by zero");
    quo = LaurentPoly();
    rem = *this;
    if (rem.is_zero()) return;
    const long dd = d.degree();
    const Rational dl = d.leading_coeff();
    // Standard long division on leading terms; exponents may go negative,
    // which is fine for Laurent polynomials.
    while (!rem.is_zero() && rem.degree() - rem.valuation() >= dd - d.valuation()) {
        long shift = rem.degree() - dd;
        Rational c = rem.leading_coeff() / dl;
        quo.add_term(shift, c);
        rem -= d.shifted(shift).scaled(c);
    }
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& d) const {
    LaurentPoly quo, rem;
    div_rem(d, quo, rem);
    if (!rem.is_zero())
        throw Error(ErrorCode::Internal, "LaurentPoly: inexact division, remainder " + rem.str());
    return quo;
}

Rational LaurentPoly::evaluate(const Rational& q0) const {
    if (q0.is_zero()) throw UsageError("LaurentPoly: evaluation at q = 0");
    Rational acc(0);
    for (const auto& [e, c] : coeffs_) acc += c * q0.pow(e);
    return acc;
}

std::string LaurentPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const long e = it->first;
        Rational c = it->second;
        if (first) {
            if (c.sign() < 0) { os << "-"; c = -c; }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
            if (c.sign() < 0) c = -c;
        }
        first = false;
        if (e == 0) {
            os << c.str();
        } else {
            if (!c.is_one()) os << c.str() << "*";
            if (e == 1) os << "q";
            else os << "q^" << e;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.str(); }
std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.v_.get_str(); }

namespace {

// Integer primitive part: clears denominators, divides out the integer
// content, shifts to valuation 0 and makes the leading coefficient positive.
// Keeps the Euclidean loop below in small integer arithmetic.
LaurentPoly primitive_integer(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    mpz_class den_lcm = 1;
    for (const auto& [e, c] : p.terms()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
    mpz_class content = 0;
    for (const auto& [e, c] : p.terms()) {
        mpz_class scaled = c.num() * (den_lcm / c.den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), scaled.get_mpz_t());
    }
    if (p.leading_coeff().sign() < 0) content = -content;
    LaurentPoly out;
    long val = p.valuation();
    for (const auto& [e, c] : p.terms()) {
        mpz_class v = c.num() * mpz_class(den_lcm / c.den());
        out.add_term(e - val, Rational(mpz_class(v / content)));
    }
    return out;
}

// Pseudo-remainder of two integer Laurent polynomials with valuation 0:
// lc(y)^k x  mod  y, all intermediate coefficients integral.
LaurentPoly pseudo_rem(LaurentPoly x, const LaurentPoly& y) {
    const long dy = y.degree();
    const Rational ly = y.leading_coeff();
    while (!x.is_zero() && x.degree() >= dy) {
        Rational lx = x.leading_coeff();
        long shift = x.degree() - dy;
        x = x.scaled(ly) - y.shifted(shift).scaled(lx);
    }
    return x;
}

} // namespace

LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly x = primitive_integer(a), y = primitive_integer(b);
    if (x.is_zero()) std::swap(x, y);
    while (!y.is_zero()) {
        if (x.degree() < y.degree()) {
            std::swap(x, y);
            continue;
        }
        LaurentPoly r = primitive_integer(pseudo_rem(x, y));
        x = std::move(y);
        y = std::move(r);
    }
    if (x.is_zero()) return x;
    // monic representative
    return x.scaled(x.leading_coeff().inverse());
}

LaurentPoly q_int(long n) {
    if (n == 0) return LaurentPoly();
    if (n < 0) return -q_int(-n);
    LaurentPoly p;
    for (long e = n - 1; e >= 1 - n; e -= 2) p.add_term(e, Rational(1));
    return p;
}

LaurentPoly q_factorial(long m) {
    LaurentPoly p(1);
    for (long k = 2; k <= m; ++k) p *= q_int(k);
    return p;
}

LaurentPoly q_binomial(long m, long i) {
    if (i < 0 || i > m) return LaurentPoly();
    return q_factorial(m).divide_exact(q_factorial(i) * q_factorial(m - i));
}

} // namespace braidsym
