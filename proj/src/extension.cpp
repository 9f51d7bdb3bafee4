#include "qsd/extension.hpp"

#include <stdexcept>

namespace qsd {

ExtElement::ExtElement(const SuperSig& sig, Mode mode, int degree, int rank)
    : sig_(sig), mode_(mode), degree_(degree), rank_(rank) {
    if (degree < 0 || rank < degree)
        throw std::invalid_argument("rank below degree");
}

ExtElement ExtElement::unit(const SuperSig& sig, Mode mode, int rank) {
    ExtElement e(sig, mode, 0, rank);
    e.add_term(TensorIndex(), Perm::identity(rank), RatFunc(1));
    return e;
}

ExtElement ExtElement::basis(const SuperSig& sig, Mode mode, const TensorIndex& I,
                             const Perm& w) {
    ExtElement e(sig, mode, I.degree(), w.rank());
    e.add_term(I, w, RatFunc(1));
    return e;
}

ExtElement ExtElement::normal_form(const SuperSig& sig, Mode mode, const TensorIndex& I,
                                   const HeckeElement& h) {
    const int d = I.degree();
    if (h.rank() < d)
        throw std::invalid_argument("rank below degree");
    ExtElement out(sig, mode, d, h.rank());
    for (const auto& [sigma, c] : h.terms()) {
        auto [u, w] = sigma.coset_factorize(d);
        SuperTensor folded =
            SuperTensor::basis(sig, I).act_alg(HeckeElement::basis(u.restrict_to(d), mode));
        for (const auto& [J, c2] : folded.terms())
            out.add_term(J, w, c * c2);
    }
    return out;
}

void ExtElement::add_term(const TensorIndex& I, const Perm& w, const RatFunc& c) {
    if (c.is_zero())
        return;
    if (I.degree() != degree_ || w.rank() != rank_)
        throw std::invalid_argument("degree/rank mismatch");
    auto key = std::make_pair(I, w);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), c);
    } else {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

ExtElement operator+(const ExtElement& a, const ExtElement& b) {
    // the zero element is shared by all graded pieces
    if (a.terms_.empty() && (a.degree_ != b.degree_ || a.rank_ != b.rank_))
        return b;
    if (b.terms_.empty() && (a.degree_ != b.degree_ || a.rank_ != b.rank_))
        return a;
    if (a.mode_ != b.mode_ || a.degree_ != b.degree_ || a.rank_ != b.rank_)
        throw std::invalid_argument("mode/degree/rank mismatch");
    ExtElement r = a;
    for (const auto& [key, c] : b.terms_)
        r.add_term(key.first, key.second, c);
    return r;
}

ExtElement operator-(const ExtElement& a, const ExtElement& b) { return a + (-b); }

ExtElement ExtElement::operator*(const RatFunc& c) const {
    ExtElement r(sig_, mode_, degree_, rank_);
    if (c.is_zero())
        return r;
    for (const auto& [key, t] : terms_)
        r.terms_.emplace(key, t * c);
    return r;
}

ExtElement ExtElement::widen(int new_rank) const {
    if (new_rank == rank_)
        return *this;
    if (new_rank < rank_)
        throw std::invalid_argument("widen: rank would shrink");
    ExtElement r(sig_, mode_, degree_, new_rank);
    for (const auto& [key, c] : terms_)
        r.add_term(key.first, key.second.widen(new_rank), c);
    return r;
}

ExtElement product(const ExtElement& a, const ExtElement& b) {
    if (a.mode_ != b.mode_)
        throw std::invalid_argument("mode mismatch");
    const int d = a.degree_ + b.degree_;
    const int N = std::max(a.rank_ + b.degree_, b.rank_);
    ExtElement out(a.sig_, a.mode_, d, N);
    for (const auto& [ka, ca] : a.terms_) {
        const HeckeElement tau_shifted =
            HeckeElement::basis(ka.second, a.mode_).shift_up(b.degree_, N);
        for (const auto& [kb, cb] : b.terms_) {
            // tensor factors concatenate, a's to the left of b's
            std::vector<int> entries = kb.first.entries();
            for (int v : ka.first.entries())
                entries.push_back(v);
            HeckeElement tail = tau_shifted * HeckeElement::basis(kb.second, b.mode_).widen(N);
            out = out + ExtElement::normal_form(a.sig_, a.mode_, TensorIndex(entries), tail) *
                            (ca * cb);
        }
    }
    return out;
}

ExtElement ExtElement::right_act(const HeckeElement& h) const {
    if (h.mode() != mode_)
        throw std::invalid_argument("mode mismatch");
    if (h.rank() > rank_)
        return widen(h.rank()).right_act(h);
    ExtElement out(sig_, mode_, degree_, rank_);
    const HeckeElement hw = h.widen(rank_);
    for (const auto& [key, c] : terms_) {
        HeckeElement tail = HeckeElement::basis(key.second, mode_) * hw;
        out = out + normal_form(sig_, mode_, key.first, tail) * c;
    }
    return out;
}

ExtElement ExtElement::left_mul_tail(const HeckeElement& h) const {
    if (h.mode() != mode_)
        throw std::invalid_argument("mode mismatch");
    const int N = std::max(rank_, h.rank() + degree_);
    ExtElement out(sig_, mode_, degree_, N);
    const HeckeElement shifted = h.shift_up(degree_, N);
    for (const auto& [key, c] : terms_) {
        HeckeElement tail = shifted * HeckeElement::basis(key.second.widen(N), mode_);
        out = out + normal_form(sig_, mode_, key.first, tail) * c;
    }
    return out;
}

std::string ExtElement::to_string() const {
    if (terms_.empty())
        return "0";
    std::string s;
    for (const auto& [key, c] : terms_) {
        if (!s.empty())
            s += " + ";
        s += "(" + c.to_string() + ")*" + key.first.to_string() + "(x)T" + key.second.to_string();
    }
    return s;
}

std::vector<std::pair<TensorIndex, Perm>> ext_basis_pairs(const SuperSig& sig, int d, int N) {
    std::vector<std::pair<TensorIndex, Perm>> out;
    for (const TensorIndex& I : all_indices(sig, d))
        for (const Perm& w : min_coset_reps(d, N))
            out.emplace_back(I, w);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace qsd
