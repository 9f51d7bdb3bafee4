#include "qsd/hecke.hpp"

#include <stdexcept>

namespace qsd {

HeckeElement HeckeElement::one(int rank, Mode mode) {
    HeckeElement h(rank, mode);
    h.add_term(Perm::identity(rank), RatFunc(1));
    return h;
}

HeckeElement HeckeElement::basis(const Perm& w, Mode mode) {
    HeckeElement h(w.rank(), mode);
    h.add_term(w, RatFunc(1));
    return h;
}

HeckeElement HeckeElement::generator(int i, int rank, Mode mode) {
    return basis(Perm::transposition(rank, i), mode);
}

HeckeElement HeckeElement::generator_power(int i, int e, int rank, Mode mode) {
    if (i < 1 || i >= rank)
        throw std::invalid_argument("generator index out of range");
    if (e != 1 && e != -1)
        throw std::invalid_argument("generator exponent must be +1 or -1");
    HeckeElement h = generator(i, rank, mode);
    if (e == -1 && mode == Mode::Quantum)
        h.add_term(Perm::identity(rank), RatFunc::q_pow(-1) - RatFunc::q_pow(1));
    return h;
}

void HeckeElement::add_term(const Perm& w, const RatFunc& c) {
    if (c.is_zero())
        return;
    if (w.rank() != rank_)
        throw std::invalid_argument("rank mismatch");
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

HeckeElement operator+(const HeckeElement& a, const HeckeElement& b) {
    if (a.rank_ != b.rank_ || a.mode_ != b.mode_)
        throw std::invalid_argument("rank mismatch");
    HeckeElement r = a;
    for (const auto& [w, c] : b.terms_)
        r.add_term(w, c);
    return r;
}

HeckeElement operator-(const HeckeElement& a, const HeckeElement& b) { return a + (-b); }

HeckeElement HeckeElement::operator*(const RatFunc& c) const {
    HeckeElement r(rank_, mode_);
    if (c.is_zero())
        return r;
    for (const auto& [w, t] : terms_)
        r.terms_.emplace(w, t * c);
    return r;
}

HeckeElement HeckeElement::mul_gen(int i, int e) const {
    if (i < 1 || i >= rank_)
        throw std::invalid_argument("generator index out of range");
    if (e != 1 && e != -1)
        throw std::invalid_argument("generator exponent must be +1 or -1");
    const Perm si = Perm::transposition(rank_, i);
    HeckeElement r(rank_, mode_);
    for (const auto& [w, c] : terms_) {
        Perm ws = w * si;
        if (mode_ == Mode::Classical) {
            r.add_term(ws, c);
            continue;
        }
        r.add_term(ws, c);
        if (ws.length() < w.length())
            r.add_term(w, c * (RatFunc::q_pow(1) - RatFunc::q_pow(-1)));
    }
    if (e == -1 && mode_ == Mode::Quantum)
        r = r + *this * (RatFunc::q_pow(-1) - RatFunc::q_pow(1));
    return r;
}

HeckeElement operator*(const HeckeElement& a, const HeckeElement& b) {
    if (a.rank_ != b.rank_ || a.mode_ != b.mode_)
        throw std::invalid_argument("rank mismatch");
    HeckeElement r(a.rank_, a.mode_);
    for (const auto& [w, c] : b.terms_) {
        HeckeElement x = a * c;
        for (int i : w.reduced_word())
            x = x.mul_gen(i);
        r = r + x;
    }
    return r;
}

HeckeElement HeckeElement::shift_up(int k, int new_rank) const {
    if (new_rank < rank_ + k)
        throw std::invalid_argument("shift_up: insufficient rank");
    HeckeElement r(new_rank, mode_);
    for (const auto& [w, c] : terms_)
        r.add_term(w.shift_up(k).widen(new_rank), c);
    return r;
}

HeckeElement HeckeElement::widen(int new_rank) const { return shift_up(0, new_rank); }

std::string HeckeElement::to_string() const {
    if (terms_.empty())
        return "0";
    std::string s;
    for (const auto& [w, c] : terms_) {
        if (!s.empty())
            s += " + ";
        s += "(" + c.to_string() + ")*T" + w.to_string();
    }
    return s;
}

}  // namespace qsd
