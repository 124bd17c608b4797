#ifndef BRAIDSYM_RATFUNC_HPP
#define BRAIDSYM_RATFUNC_HPP

#include <string>

#include "braidsym/laurent.hpp"

namespace braidsym {

/// Element of the rational-function field Q(q), stored canonically:
/// gcd(num, den) = 1 (Laurent unit factors cleared), den monic with
/// valuation 0. The unique representative makes equality-to-zero and
/// hashing structural.
class RatFunc {
public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(long c) : num_(c), den_(1) {}
    RatFunc(const Rational& c) : num_(c), den_(1) {}
    RatFunc(const LaurentPoly& p) : num_(p), den_(1) {}
    RatFunc(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
        if (den_.is_zero()) throw UsageError("RatFunc: zero denominator");
        reduce();
    }

    static RatFunc q_power(long e) { return RatFunc(LaurentPoly::q_power(e)); }
    static RatFunc q() { return q_power(1); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    friend RatFunc operator-(const RatFunc& a);
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& b) { *this = *this + b; return *this; }
    RatFunc& operator-=(const RatFunc& b) { *this = *this - b; return *this; }
    RatFunc& operator*=(const RatFunc& b) { *this = *this * b; return *this; }
    RatFunc& operator/=(const RatFunc& b) { *this = *this / b; return *this; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc inverse() const;

    /// Evaluation at q = q0 != 0. Throws PoleError when the denominator
    /// vanishes at q0.
    Rational specialize(const Rational& q0) const;

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const RatFunc& f);

    /// Builds from an already-coprime pair, normalizing units only.
    static RatFunc coprime(LaurentPoly num, LaurentPoly den);

private:
    void reduce();

    LaurentPoly num_;
    LaurentPoly den_;
};

/// Field-generic helpers used by the templated linear algebra and module
/// layers. `Scalars<F>` provides the q-dependent constants of a backend:
/// exact symbols over Q(q), or their values at a rational point q0 for the
/// specialized backend, or the classical q = 1 limits.
template <class F>
struct Scalars;

template <>
struct Scalars<RatFunc> {
    Scalars() = default;
    RatFunc q_power(long e) const { return RatFunc::q_power(e); }
    RatFunc q_int(long n) const { return RatFunc(braidsym::q_int(n)); }
    RatFunc q_binomial(long m, long i) const { return RatFunc(braidsym::q_binomial(m, i)); }
    static std::string backend_name() { return "exact"; }
};

template <>
struct Scalars<Rational> {
    Scalars() : q0(1) {}
    explicit Scalars(const Rational& q) : q0(q) {
        if (q0.is_zero()) throw UsageError("specialized backend: q0 must be nonzero");
    }
    Rational q_power(long e) const { return q0.pow(e); }
    Rational q_int(long n) const { return braidsym::q_int(n).evaluate(q0); }
    Rational q_binomial(long m, long i) const { return braidsym::q_binomial(m, i).evaluate(q0); }
    static std::string backend_name() { return "specialize"; }

    Rational q0;
};

/// Rescales a row by a nonzero scalar to clear denominators and integer
/// content. The row's span is unchanged; subsequent products against it stay
/// polynomial with small coefficients.
void primitivize_row(std::vector<Rational>& row);
void primitivize_row(std::vector<RatFunc>& row);

/// Exact entry division for fraction-free elimination: both operands must
/// have trivial denominators and divide exactly.
Rational entry_divide_exact(const Rational& a, const Rational& b);
RatFunc entry_divide_exact(const RatFunc& a, const RatFunc& b);

} // namespace braidsym

#endif
