#include "qsd/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace qsd {

Poly Poly::monomial(int deg, const Rational& coeff) {
    if (coeff.is_zero() || deg < 0)
        return Poly();
    std::vector<Rational> c(static_cast<size_t>(deg) + 1, Rational(0));
    c.back() = coeff;
    return Poly(std::move(c));
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero())
        return Poly();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero())
            continue;
        for (size_t j = 0; j < b.c_.size(); ++j)
            if (!b.c_[j].is_zero())
                c[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(c));
}

Poly Poly::operator*(const Rational& s) const {
    if (s.is_zero())
        return Poly();
    Poly r = *this;
    for (auto& x : r.c_) x *= s;
    return r;
}

Rational Poly::eval(const Rational& x) const {
    Rational r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        r = r * x + *it;
    return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
    if (b.is_zero())
        throw std::domain_error("division by zero polynomial");
    Poly q, r = a;
    const Rational lb = b.lc().inverse();
    while (!r.is_zero() && r.deg() >= b.deg()) {
        Poly t = monomial(r.deg() - b.deg(), r.lc() * lb);
        q = q + t;
        r = r - t * b;
    }
    return {q, r};
}

Poly Poly::div_exact(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero())
        throw std::logic_error("inexact polynomial division");
    return q;
}

Poly Poly::integer_primitive() const {
    if (is_zero())
        return Poly();
    mpz_class l(1);
    for (const auto& c : c_)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    mpz_class g(0);
    std::vector<Rational> out;
    out.reserve(c_.size());
    for (const auto& c : c_) {
        mpz_class z = c.num() * (l / c.den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
        out.emplace_back(z);
    }
    if (lc().sign() < 0)
        g = -g;
    Rational inv_g = Rational(g).inverse();
    for (auto& c : out) c *= inv_g;
    return Poly(std::move(out));
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
    if (a.is_zero())
        return b.is_zero() ? Poly() : b.monic();
    if (b.is_zero())
        return a.monic();
    Poly f = a.integer_primitive();
    Poly g = b.integer_primitive();
    if (f.deg() < g.deg())
        std::swap(f, g);
    while (!g.is_zero()) {
        // Pseudo-remainder: scale f by lc(g) until g's leading term divides.
        Poly r = f;
        while (!r.is_zero() && r.deg() >= g.deg()) {
            Poly t = monomial(r.deg() - g.deg(), r.lc());
            r = r * g.lc() - t * g;
        }
        f = g;
        g = r.integer_primitive();
    }
    return f.monic();
}

Poly Poly::monic() const {
    if (is_zero())
        return Poly();
    return *this * lc().inverse();
}

std::string Poly::to_string() const {
    if (is_zero())
        return "0";
    std::string s;
    for (int i = deg(); i >= 0; --i) {
        Rational c = coeff(i);
        if (c.is_zero())
            continue;
        if (!s.empty())
            s += (c.sign() > 0) ? "+" : "-";
        else if (c.sign() < 0)
            s += "-";
        Rational ac = (c.sign() < 0) ? -c : c;
        if (i == 0) {
            s += ac.to_string();
        } else {
            if (!ac.is_one())
                s += ac.to_string() + "*";
            s += (i == 1) ? "q" : "q^" + std::to_string(i);
        }
    }
    return s;
}

}  // namespace qsd
