#include "braidsym/ratfunc.hpp"

#include <ostream>

namespace braidsym {

void RatFunc::reduce() {
    if (num_.is_zero()) {
        den_ = LaurentPoly(1);
        return;
    }
    // Clear Laurent units so both parts are ordinary polynomials with
    // nonzero constant term, then cancel the gcd.
    long v = num_.valuation() - den_.valuation();
    num_ = num_.shifted(-num_.valuation());
    den_ = den_.shifted(-den_.valuation());
    LaurentPoly g = laurent_gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_.divide_exact(g);
        den_ = den_.divide_exact(g);
    }
    // den monic, valuation 0; the unit q^v and the leading coefficient
    // move into the numerator.
    Rational lc = den_.leading_coeff();
    den_ = den_.scaled(lc.inverse());
    num_ = num_.scaled(lc.inverse()).shifted(v);
}

RatFunc operator-(const RatFunc& a) {
    RatFunc r;
    r.num_ = -a.num_;
    r.den_ = a.den_;
    return r;
}

// Normalizes units only; numerator and denominator must already be coprime.
RatFunc RatFunc::coprime(LaurentPoly num, LaurentPoly den) {
    RatFunc r;
    if (num.is_zero()) return r;
    long v = num.valuation() - den.valuation();
    Rational lc = den.leading_coeff();
    r.den_ = den.shifted(-den.valuation()).scaled(lc.inverse());
    r.num_ = num.scaled(lc.inverse()).shifted(-num.valuation() + v);
    return r;
}

// Sums with the denominator-gcd split: with g = gcd(da, db) and
// t = na (db/g) + nb (da/g), the only possible common factor of t with the
// combined denominator divides g.
static RatFunc add_impl(const RatFunc& a, const RatFunc& b, bool negate) {
    const LaurentPoly& nb_raw = b.num();
    LaurentPoly nb = negate ? -nb_raw : nb_raw;
    if (a.den().is_one() && b.den().is_one()) return RatFunc::coprime(a.num() + nb, LaurentPoly(1));
    LaurentPoly g = laurent_gcd(a.den(), b.den());
    LaurentPoly da1 = g.is_one() ? a.den() : a.den().divide_exact(g);
    LaurentPoly db1 = g.is_one() ? b.den() : b.den().divide_exact(g);
    LaurentPoly t = a.num() * db1 + nb * da1;
    if (t.is_zero()) return RatFunc();
    if (g.is_one()) return RatFunc::coprime(std::move(t), da1 * db1);
    LaurentPoly h = laurent_gcd(t, g);
    if (!h.is_one()) {
        t = t.divide_exact(h);
        g = g.divide_exact(h);
    }
    return RatFunc::coprime(std::move(t), da1 * db1 * g);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    return add_impl(a, b, false);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return -b;
    return add_impl(a, b, true);
}

// Cross-cancellation: with canonical operands the only common factors of
// na nb and da db are gcd(na, db) and gcd(nb, da).
RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    if (a.den_.is_one() && b.den_.is_one()) return RatFunc::coprime(a.num_ * b.num_, LaurentPoly(1));
    LaurentPoly g1 = laurent_gcd(a.num_, b.den_);
    LaurentPoly g2 = laurent_gcd(b.num_, a.den_);
    LaurentPoly num = (g1.is_one() ? a.num_ : a.num_.divide_exact(g1)) *
                      (g2.is_one() ? b.num_ : b.num_.divide_exact(g2));
    LaurentPoly den = (g2.is_one() ? a.den_ : a.den_.divide_exact(g2)) *
                      (g1.is_one() ? b.den_ : b.den_.divide_exact(g1));
    return RatFunc::coprime(std::move(num), std::move(den));
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw UsageError("RatFunc: division by zero");
    if (a.is_zero()) return RatFunc();
    LaurentPoly g1 = laurent_gcd(a.num_, b.num_);
    LaurentPoly g2 = laurent_gcd(b.den_, a.den_);
    LaurentPoly num = (g1.is_one() ? a.num_ : a.num_.divide_exact(g1)) *
                      (g2.is_one() ? b.den_ : b.den_.divide_exact(g2));
    LaurentPoly den = (g2.is_one() ? a.den_ : a.den_.divide_exact(g2)) *
                      (g1.is_one() ? b.num_ : b.num_.divide_exact(g1));
    return RatFunc::coprime(std::move(num), std::move(den));
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw UsageError("RatFunc: inverse of zero");
    return RatFunc(den_, num_);
}

Rational RatFunc::specialize(const Rational& q0) const {
    if (q0.is_zero()) throw UsageError("RatFunc: specialization at q = 0");
    Rational d = den_.evaluate(q0);
    if (d.is_zero()) throw PoleError("RatFunc: pole at q = " + q0.str());
    return num_.evaluate(q0) / d;
}

std::string RatFunc::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.str(); }

void primitivize_row(std::vector<Rational>& row) {
    mpz_class dens = 1, content = 0;
    for (const auto& x : row)
        if (!x.is_zero()) mpz_lcm(dens.get_mpz_t(), dens.get_mpz_t(), x.den().get_mpz_t());
    for (const auto& x : row) {
        if (x.is_zero()) continue;
        mpz_class v = x.num() * mpz_class(dens / x.den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    }
    if (content == 0) return;
    for (auto& x : row) {
        if (x.is_zero()) continue;
        mpz_class v = x.num() * mpz_class(dens / x.den());
        x = Rational(mpz_class(v / content));
    }
}

void primitivize_row(std::vector<RatFunc>& row) {
    LaurentPoly den_lcm(1);
    for (const auto& x : row) {
        if (x.is_zero() || x.den().is_one()) continue;
        LaurentPoly g = laurent_gcd(den_lcm, x.den());
        den_lcm = den_lcm * (g.is_one() ? x.den() : x.den().divide_exact(g));
    }
    mpz_class dens = 1, content = 0;
    bool any = false;
    for (auto& x : row) {
        if (x.is_zero()) continue;
        any = true;
        if (!den_lcm.is_one()) x = RatFunc(x.num() * den_lcm.divide_exact(x.den()));
        for (const auto& [e, c] : x.num().terms())
            mpz_lcm(dens.get_mpz_t(), dens.get_mpz_t(), c.den().get_mpz_t());
    }
    if (!any) return;
    for (const auto& x : row)
        for (const auto& [e, c] : x.num().terms()) {
            mpz_class v = c.num() * mpz_class(dens / c.den());
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        }
    if (content == 0) return;
    for (auto& x : row) {
        if (x.is_zero()) continue;
        LaurentPoly scaled;
        for (const auto& [e, c] : x.num().terms()) {
            mpz_class v = c.num() * mpz_class(dens / c.den());
            scaled.add_term(e, Rational(mpz_class(v / content)));
        }
        x = RatFunc(scaled);
    }
}

Rational entry_divide_exact(const Rational& a, const Rational& b) { return a / b; }

RatFunc entry_divide_exact(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return a;
    if (!a.den().is_one() || !b.den().is_one())
        throw Error(ErrorCode::Internal, "entry_divide_exact: nontrivial denominator");
    return RatFunc(a.num().divide_exact(b.num()));
}

} // namespace braidsym
