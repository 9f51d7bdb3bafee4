#pragma once

#include "qsd/extension.hpp"

#include <functional>
#include <string>
#include <vector>

namespace qsd {

/// Creation operator L(e_j): left multiplication by e_j (x) 1. Raises the
/// degree by one; the rank grows to fit if needed.
ExtElement creation(int j, const ExtElement& phi);

/// Annihilation operator L(e_j^*). Lowers the degree by one; on degree 0 it
/// returns the zero element. Classical: the signed omission sum with tail
/// s_{d-1}...s_k w. Quantum: the g/f-word form, which evaluates to the tail
/// T_{d-1}^{-gamma(j,i_d)} ... T_k^{-gamma(j,i_{k+1})} T_w with a
/// q_j^{-#\{r<k : i_r=j\}} scalar from the f factors.
ExtElement annihilation(int j, const ExtElement& phi);

/// The k-th summand of the quantum annihilation operator on a pure tensor,
/// as a degree-(d-1) element at the given rank (default: rank d).
ExtElement h_map(int j, int k, const SuperTensor& t, int rank = -1);

/// Classical Euler operator
/// A_d = (1/d!) sum_I L(e_{i_d})...L(e_{i_1}) L(e_{i_1}^*)...L(e_{i_d}^*).
ExtElement euler_classical(int d, const ExtElement& phi);

/// Quantum Euler operator: the same sum restricted to weakly decreasing I,
/// each weighted by 1/[m(I)]!.
ExtElement euler_quantum(int d, const ExtElement& phi);

/// The full creation-then-annihilation chain for one index tuple I:
/// L(e_{i_d})...L(e_{i_1}) L(e_{i_1}^*)...L(e_{i_d}^*) applied to phi.
ExtElement euler_chain(const TensorIndex& I, const ExtElement& phi);

/// Diagonal bracket operator [K_i : a] with eigenvalue
/// (q_i^{a+c} - q_i^{-a-c})/(q_i - q_i^{-1}) on e_J, c = m_i(J).
SuperTensor k_bracket(int i, int a, const SuperTensor& t);

/// [K_i]^h_! = [K_i:0][K_i:-1]...[K_i:1-h]; h = 0 gives the identity.
SuperTensor k_bracket_factorial(int i, int h, const SuperTensor& t);

/// Diagonal action of K_i^{e} (e = +1 or -1) on a tensor or on the tensor
/// part of an extension element.
SuperTensor k_action(int i, int e, const SuperTensor& t);
ExtElement k_action(int i, int e, const ExtElement& phi);

/// Composable degree-graded operator on the extension algebra: a closure
/// plus a printable tag chain.
struct ExtOperator {
    std::string desc;
    int degree_delta = 0;
    std::function<ExtElement(const ExtElement&)> fn;

    ExtElement operator()(const ExtElement& phi) const { return fn(phi); }
};

ExtOperator op_creation(int j);
ExtOperator op_annihilation(int j);
ExtOperator op_left_tail(const HeckeElement& h);   // L(T), tail left-multiplication
ExtOperator op_right_act(const HeckeElement& h);   // pi(T), right action
ExtOperator op_k(int i, int e);                    // K_i^{e} on the tensor part
/// Composition a after b after c ... (apply rightmost first).
ExtOperator op_compose(const std::vector<ExtOperator>& ops);

}  // namespace qsd
