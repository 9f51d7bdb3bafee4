#pragma once

#include "qsd/poly.hpp"

#include <string>

namespace qsd {

/// Element of the field Q(q): canonical fraction num/den with gcd(num,den)=1
/// and monic denominator. Negative powers of q live in the denominator.
class RatFunc {
  public:
    RatFunc() = default;
    RatFunc(int c) : num_(c) {}
    RatFunc(const Rational& c) : num_(c) {}
    RatFunc(const Poly& p) : num_(p) {}
    RatFunc(const Poly& num, const Poly& den) { normalize(num, den); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc inverse() const;
    RatFunc pow(int e) const;

    /// Exact evaluation at q = a; throws "specialization pole" at poles.
    Rational specialize(const Rational& a) const;

    /// "num/den" with descending-degree polynomials, e.g. "q^2+1/q".
    std::string to_string() const;

    /// The variable q.
    static RatFunc q() { return RatFunc(Poly::var()); }
    /// q^k, any sign of k.
    static RatFunc q_pow(int k);

  private:
    void normalize(Poly num, Poly den);

    Poly num_ = Poly(0);
    Poly den_ = Poly(1);
};

/// Quantum integer [k] = (q^k - q^{-k})/(q - q^{-1}); [0] = 0.
RatFunc q_int(int k);
/// Quantum factorial [k]! = [1][2]...[k]; [0]! = 1.
RatFunc q_factorial(int k);

}  // namespace qsd
