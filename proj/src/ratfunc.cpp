#include "qsd/ratfunc.hpp"

#include <stdexcept>

namespace qsd {

void RatFunc::normalize(Poly num, Poly den) {
    if (den.is_zero())
        throw std::domain_error("division by zero polynomial");
    if (num.is_zero()) {
        num_ = Poly(0);
        den_ = Poly(1);
        return;
    }
    Poly g = Poly::gcd(num, den);
    if (g.deg() > 0) {
        num = Poly::div_exact(num, g);
        den = Poly::div_exact(den, g);
    }
    Rational s = den.lc().inverse();
    num_ = num * s;
    den_ = den * s;
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_)
        return RatFunc(a.num_ + b.num_, a.den_);
    Poly g = Poly::gcd(a.den_, b.den_);
    if (g.deg() == 0)
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    Poly ad = Poly::div_exact(a.den_, g);
    Poly bd = Poly::div_exact(b.den_, g);
    return RatFunc(a.num_ * bd + b.num_ * ad, a.den_ * bd);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero())
        return RatFunc();
    // Cross-cancel before multiplying to keep intermediates small.
    Poly g1 = Poly::gcd(a.num_, b.den_);
    Poly g2 = Poly::gcd(b.num_, a.den_);
    Poly n1 = (g1.deg() > 0) ? Poly::div_exact(a.num_, g1) : a.num_;
    Poly d2 = (g1.deg() > 0) ? Poly::div_exact(b.den_, g1) : b.den_;
    Poly n2 = (g2.deg() > 0) ? Poly::div_exact(b.num_, g2) : b.num_;
    Poly d1 = (g2.deg() > 0) ? Poly::div_exact(a.den_, g2) : a.den_;
    return RatFunc(n1 * n2, d1 * d2);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

RatFunc RatFunc::inverse() const {
    if (is_zero())
        throw std::domain_error("division by zero polynomial");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(int e) const {
    RatFunc base = (e < 0) ? inverse() : *this;
    int n = (e < 0) ? -e : e;
    RatFunc r(1);
    while (n > 0) {
        if (n & 1) r *= base;
        base *= base;
        n >>= 1;
    }
    return r;
}

Rational RatFunc::specialize(const Rational& a) const {
    Rational d = den_.eval(a);
    if (d.is_zero())
        throw std::domain_error("specialization pole");
    return num_.eval(a) / d;
}

std::string RatFunc::to_string() const {
    if (den_.is_one())
        return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

RatFunc RatFunc::q_pow(int k) {
    if (k >= 0)
        return RatFunc(Poly::monomial(k));
    return RatFunc(Poly(1), Poly::monomial(-k));
}

RatFunc q_int(int k) {
    if (k < 0)
        throw std::invalid_argument("q_int: negative argument");
    return (RatFunc::q_pow(k) - RatFunc::q_pow(-k)) / (RatFunc::q_pow(1) - RatFunc::q_pow(-1));
}

RatFunc q_factorial(int k) {
    if (k < 0)
        throw std::invalid_argument("q_factorial: negative argument");
    RatFunc r(1);
    for (int j = 1; j <= k; ++j)
        r *= q_int(j);
    return r;
}

}  // namespace qsd
