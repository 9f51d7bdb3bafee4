#include "qsd/superspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace qsd {

int SuperSig::parity(int i) const {
    if (i < 1 || i > dim())
        throw std::invalid_argument("basis index out of range");
    return i <= m ? 0 : 1;
}

int sign_eps(const std::vector<int>& parities, const Perm& sigma) {
    if (static_cast<int>(parities.size()) != sigma.rank())
        throw std::invalid_argument("rank mismatch");
    std::vector<int> p = parities;  // p[k-1] = parity at position k
    int sign = 1;
    for (int i : sigma.reduced_word()) {
        if (p[static_cast<size_t>(i) - 1] == 1 && p[static_cast<size_t>(i)] == 1)
            sign = -sign;
        std::swap(p[static_cast<size_t>(i) - 1], p[static_cast<size_t>(i)]);
    }
    return sign;
}

int TensorIndex::mult(int k) const {
    return static_cast<int>(std::count(e_.begin(), e_.end(), k));
}

TensorIndex TensorIndex::act(const Perm& sigma) const {
    if (sigma.rank() != degree())
        throw std::invalid_argument("rank mismatch");
    std::vector<int> out(e_.size());
    for (int p = 1; p <= degree(); ++p)
        out[static_cast<size_t>(p) - 1] = entry(sigma(p));
    return TensorIndex(std::move(out));
}

TensorIndex TensorIndex::swapped(int k) const {
    std::vector<int> out = e_;
    std::swap(out[static_cast<size_t>(k) - 1], out[static_cast<size_t>(k)]);
    return TensorIndex(std::move(out));
}

TensorIndex TensorIndex::prepend_left(int j) const {
    std::vector<int> out = e_;
    out.push_back(j);
    return TensorIndex(std::move(out));
}

TensorIndex TensorIndex::erase(int k) const {
    std::vector<int> out = e_;
    out.erase(out.begin() + (k - 1));
    return TensorIndex(std::move(out));
}

std::string TensorIndex::to_string() const {
    std::string s = "e[";
    for (int p = degree(); p >= 1; --p) {
        s += std::to_string(entry(p));
        if (p > 1)
            s += ",";
    }
    return s + "]";
}

std::vector<TensorIndex> all_indices(const SuperSig& sig, int d) {
    std::vector<TensorIndex> out;
    std::vector<int> cur(static_cast<size_t>(d), 1);
    if (d == 0) {
        out.emplace_back(cur);
        return out;
    }
    while (true) {
        out.emplace_back(cur);
        int p = 0;
        while (p < d && cur[static_cast<size_t>(p)] == sig.dim()) {
            cur[static_cast<size_t>(p)] = 1;
            ++p;
        }
        if (p == d)
            break;
        ++cur[static_cast<size_t>(p)];
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<TensorIndex> decreasing_indices(const SuperSig& sig, int d) {
    std::vector<TensorIndex> out;
    for (const TensorIndex& I : all_indices(sig, d)) {
        bool ok = true;
        for (int p = 1; p < d; ++p)
            if (I.entry(p + 1) > I.entry(p)) {  // need i_{p+1} <= i_p
                ok = false;
                break;
            }
        if (ok)
            out.push_back(I);
    }
    return out;
}

SuperTensor SuperTensor::basis(const SuperSig& sig, const TensorIndex& I) {
    SuperTensor t(sig, I.degree());
    t.add_term(I, RatFunc(1));
    return t;
}

void SuperTensor::add_term(const TensorIndex& I, const RatFunc& c) {
    if (c.is_zero())
        return;
    if (I.degree() != degree_)
        throw std::invalid_argument("degree mismatch");
    auto it = terms_.find(I);
    if (it == terms_.end()) {
        terms_.emplace(I, c);
    } else {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

SuperTensor operator+(const SuperTensor& a, const SuperTensor& b) {
    if (a.degree_ != b.degree_)
        throw std::invalid_argument("degree mismatch");
    SuperTensor r = a;
    for (const auto& [I, c] : b.terms_)
        r.add_term(I, c);
    return r;
}

SuperTensor operator-(const SuperTensor& a, const SuperTensor& b) { return a + (-b); }

SuperTensor SuperTensor::operator*(const RatFunc& c) const {
    SuperTensor r(sig_, degree_);
    if (c.is_zero())
        return r;
    for (const auto& [I, t] : terms_)
        r.terms_.emplace(I, t * c);
    return r;
}

SuperTensor SuperTensor::act_sym(const Perm& sigma) const {
    if (sigma.rank() != degree_)
        throw std::invalid_argument("rank mismatch");
    SuperTensor r(sig_, degree_);
    const std::vector<int> word = sigma.reduced_word();
    for (const auto& [I, c] : terms_) {
        TensorIndex J = I;
        int sign = 1;
        for (int k : word) {
            if (sig_.parity(J.entry(k)) == 1 && sig_.parity(J.entry(k + 1)) == 1)
                sign = -sign;
            J = J.swapped(k);
        }
        r.add_term(J, c * RatFunc(sign));
    }
    return r;
}

SuperTensor SuperTensor::act_hecke_gen(int k, int e) const {
    if (k < 1 || k >= degree_)
        throw std::invalid_argument("position out of range");
    if (e != 1 && e != -1)
        throw std::invalid_argument("generator exponent must be +1 or -1");
    SuperTensor r(sig_, degree_);
    for (const auto& [I, c] : terms_) {
        const int ik = I.entry(k), ik1 = I.entry(k + 1);
        const int pk = sig_.parity(ik), pk1 = sig_.parity(ik1);
        if (ik == ik1) {
            // e_I . T_k = (-1)^{\hat i_k} q_{i_k} e_I
            RatFunc ev = sig_.q_i(ik) * RatFunc(pk == 0 ? 1 : -1);
            r.add_term(I, c * (e == 1 ? ev : ev.inverse()));
            continue;
        }
        const RatFunc swap_coeff(pk * pk1 == 1 ? -1 : 1);
        r.add_term(I.swapped(k), c * swap_coeff);
        if ((e == 1 && ik < ik1) || (e == -1 && ik > ik1)) {
            RatFunc diag = RatFunc::q_pow(1) - RatFunc::q_pow(-1);
            r.add_term(I, c * (e == 1 ? diag : -diag));
        }
    }
    return r;
}

SuperTensor SuperTensor::act_alg(const HeckeElement& h) const {
    if (h.rank() > degree_)
        throw std::invalid_argument("rank mismatch");
    SuperTensor r(sig_, degree_);
    for (const auto& [w, c] : h.terms()) {
        if (h.mode() == Mode::Classical) {
            r = r + act_sym(w.widen(degree_)) * c;
        } else {
            SuperTensor x = *this * c;
            for (int i : w.reduced_word())
                x = x.act_hecke_gen(i, 1);
            r = r + x;
        }
    }
    return r;
}

std::string SuperTensor::to_string() const {
    if (terms_.empty())
        return "0";
    std::string s;
    for (const auto& [I, c] : terms_) {
        if (!s.empty())
            s += " + ";
        s += "(" + c.to_string() + ")*" + I.to_string();
    }
    return s;
}

}  // namespace qsd
