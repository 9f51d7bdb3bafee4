#include "qsd/operators.hpp"

#include <stdexcept>

namespace qsd {

ExtElement creation(int j, const ExtElement& phi) {
    if (j < 1 || j > phi.sig().dim())
        throw std::invalid_argument("basis index out of range");
    const int d = phi.degree() + 1;
    const int N = std::max(phi.rank(), d);
    ExtElement out(phi.sig(), phi.mode(), d, N);
    for (const auto& [key, c] : phi.terms()) {
        out = out + ExtElement::normal_form(phi.sig(), phi.mode(), key.first.prepend_left(j),
                                            HeckeElement::basis(key.second.widen(N), phi.mode())) *
                        c;
    }
    return out;
}

namespace {

// k-th summand of the annihilation operator on one basis pair. Quantum:
// tail T_{d-1}^{-gamma(j,i_d)} ... T_k^{-gamma(j,i_{k+1})} T_w and scalar
// q_j^{-#\{r<k : i_r=j\}} from the f factors; classical: plain s_{r-1}
// factors, scalar 1.
ExtElement annihilate_summand(const SuperSig& sig, Mode mode, int j, const TensorIndex& I,
                              const Perm& w, const RatFunc& coeff, int k) {
    const int d = I.degree();
    const int N = w.rank();
    ExtElement out(sig, mode, d - 1, N);
    if (I.entry(k) != j)
        return out;
    int par_above = 0;
    for (int p = k + 1; p <= d; ++p)
        par_above += sig.parity(I.entry(p));
    RatFunc c = coeff * RatFunc((sig.parity(j) * par_above) % 2 == 1 ? -1 : 1);
    if (mode == Mode::Quantum) {
        int count_j_below = 0;
        for (int r = 1; r < k; ++r)
            if (I.entry(r) == j)
                ++count_j_below;
        c *= sig.q_i(j).pow(-count_j_below);
    }
    HeckeElement tail = HeckeElement::basis(w, mode);
    for (int r = k + 1; r <= d; ++r) {
        int e = (mode == Mode::Quantum) ? -gamma(j, I.entry(r)) : 1;
        tail = HeckeElement::generator_power(r - 1, e, N, mode) * tail;
    }
    return out + ExtElement::normal_form(sig, mode, I.erase(k), tail) * c;
}

ExtElement annihilate_term(const SuperSig& sig, Mode mode, int j, const TensorIndex& I,
                           const Perm& w, const RatFunc& coeff) {
    ExtElement out(sig, mode, I.degree() - 1, w.rank());
    for (int k = 1; k <= I.degree(); ++k)
        out = out + annihilate_summand(sig, mode, j, I, w, coeff, k);
    return out;
}

}  // namespace

ExtElement annihilation(int j, const ExtElement& phi) {
    if (j < 1 || j > phi.sig().dim())
        throw std::invalid_argument("basis index out of range");
    if (phi.degree() == 0)
        return ExtElement::zero(phi.sig(), phi.mode(), 0, phi.rank());
    ExtElement out(phi.sig(), phi.mode(), phi.degree() - 1, phi.rank());
    for (const auto& [key, c] : phi.terms())
        out = out + annihilate_term(phi.sig(), phi.mode(), j, key.first, key.second, c);
    return out;
}

ExtElement h_map(int j, int k, const SuperTensor& t, int rank) {
    const int d = t.degree();
    if (k < 1 || k > d)
        throw std::invalid_argument("position out of range");
    const int N = (rank < 0) ? d : rank;
    ExtElement out(t.sig(), Mode::Quantum, d - 1, N);
    for (const auto& [I, coeff] : t.terms())
        out = out + annihilate_summand(t.sig(), Mode::Quantum, j, I, Perm::identity(N), coeff, k);
    return out;
}

ExtElement euler_chain(const TensorIndex& I, const ExtElement& phi) {
    const int d = I.degree();
    ExtElement x = phi;
    for (int p = d; p >= 1; --p)
        x = annihilation(I.entry(p), x);
    for (int p = 1; p <= d; ++p)
        x = creation(I.entry(p), x);
    return x;
}

ExtElement euler_classical(int d, const ExtElement& phi) {
    if (phi.mode() != Mode::Classical || phi.degree() != d)
        throw std::invalid_argument("euler_classical: degree/mode mismatch");
    ExtElement sum = ExtElement::zero(phi.sig(), phi.mode(), d, phi.rank());
    for (const TensorIndex& I : all_indices(phi.sig(), d))
        sum = sum + euler_chain(I, phi);
    return sum * RatFunc(factorial(d).inverse());
}

ExtElement euler_quantum(int d, const ExtElement& phi) {
    if (phi.mode() != Mode::Quantum || phi.degree() != d)
        throw std::invalid_argument("euler_quantum: degree/mode mismatch");
    ExtElement sum = ExtElement::zero(phi.sig(), phi.mode(), d, phi.rank());
    for (const TensorIndex& I : decreasing_indices(phi.sig(), d)) {
        RatFunc weight(1);
        for (int i = 1; i <= phi.sig().dim(); ++i)
            weight *= q_factorial(I.mult(i));
        sum = sum + euler_chain(I, phi) * weight.inverse();
    }
    return sum;
}

SuperTensor k_bracket(int i, int a, const SuperTensor& t) {
    SuperTensor out(t.sig(), t.degree());
    const RatFunc qi = t.sig().q_i(i);
    const RatFunc denom = qi - qi.inverse();
    for (const auto& [J, c] : t.terms()) {
        const int x = a + J.mult(i);
        out.add_term(J, c * (qi.pow(x) - qi.pow(-x)) / denom);
    }
    return out;
}

SuperTensor k_bracket_factorial(int i, int h, const SuperTensor& t) {
    SuperTensor out = t;
    for (int a = 0; a >= 1 - h; --a)
        out = k_bracket(i, a, out);
    return out;
}

SuperTensor k_action(int i, int e, const SuperTensor& t) {
    SuperTensor out(t.sig(), t.degree());
    for (const auto& [J, c] : t.terms())
        out.add_term(J, c * t.sig().q_i(i).pow(e * J.mult(i)));
    return out;
}

ExtElement k_action(int i, int e, const ExtElement& phi) {
    ExtElement out(phi.sig(), phi.mode(), phi.degree(), phi.rank());
    for (const auto& [key, c] : phi.terms())
        out.add_term(key.first, key.second, c * phi.sig().q_i(i).pow(e * key.first.mult(i)));
    return out;
}

ExtOperator op_creation(int j) {
    return {"L(e_" + std::to_string(j) + ")", +1,
            [j](const ExtElement& phi) { return creation(j, phi); }};
}

ExtOperator op_annihilation(int j) {
    return {"L(e_" + std::to_string(j) + "^*)", -1,
            [j](const ExtElement& phi) { return annihilation(j, phi); }};
}

ExtOperator op_left_tail(const HeckeElement& h) {
    return {"L(T)", 0, [h](const ExtElement& phi) { return phi.left_mul_tail(h); }};
}

ExtOperator op_right_act(const HeckeElement& h) {
    return {"pi(T)", 0, [h](const ExtElement& phi) { return phi.right_act(h); }};
}

ExtOperator op_k(int i, int e) {
    return {"K_" + std::to_string(i) + (e < 0 ? "^-1" : ""), 0,
            [i, e](const ExtElement& phi) { return k_action(i, e, phi); }};
}

ExtOperator op_compose(const std::vector<ExtOperator>& ops) {
    ExtOperator out;
    int delta = 0;
    std::string desc;
    for (const auto& op : ops) {
        delta += op.degree_delta;
        desc += (desc.empty() ? "" : " ") + op.desc;
    }
    out.desc = desc;
    out.degree_delta = delta;
    out.fn = [ops](const ExtElement& phi) {
        ExtElement x = phi;
        for (auto it = ops.rbegin(); it != ops.rend(); ++it)
            x = (*it)(x);
        return x;
    };
    return out;
}

}  // namespace qsd
