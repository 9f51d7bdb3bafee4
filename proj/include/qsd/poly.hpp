#pragma once

#include "qsd/rational.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace qsd {

/// Univariate polynomial in q over the rationals, dense ascending-degree
/// coefficient storage with trailing zeros stripped (zero poly = empty).
class Poly {
  public:
    Poly() = default;
    Poly(const Rational& c) { if (!c.is_zero()) c_ = {c}; }
    Poly(int c) : Poly(Rational(c)) {}
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { strip(); }

    static Poly monomial(int deg, const Rational& coeff = Rational(1));
    /// The variable q.
    static Poly var() { return monomial(1); }

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int deg() const { return static_cast<int>(c_.size()) - 1; }
    Rational coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rational(0);
    }
    Rational lc() const { return c_.empty() ? Rational(0) : c_.back(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator*(const Rational& s) const;
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Rational eval(const Rational& x) const;

    /// Quotient and remainder over the rationals; divisor must be nonzero.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
    /// Exact division; throws if the remainder is nonzero.
    static Poly div_exact(const Poly& a, const Poly& b);

    /// Monic gcd, via primitive pseudo-remainder sequences on the
    /// integer-scaled operands (no coefficient blowup at small degree).
    static Poly gcd(const Poly& a, const Poly& b);

    Poly monic() const;

    /// Descending-degree sparse rendering, e.g. "q^2+1", "2*q^3-q".
    std::string to_string() const;

  private:
    void strip() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    /// Scales to an integer-coefficient polynomial with coprime coefficients
    /// and positive leading coefficient.
    Poly integer_primitive() const;

    std::vector<Rational> c_;
};

}  // namespace qsd
