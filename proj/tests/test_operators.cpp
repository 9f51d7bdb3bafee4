#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qsd/operators.hpp"

#include <algorithm>

using namespace qsd;

namespace {

TensorIndex idx(std::initializer_list<int> left_to_right) {
    std::vector<int> v(left_to_right);
    std::reverse(v.begin(), v.end());
    return TensorIndex(v);
}

ExtElement basis(const SuperSig& sig, Mode mode, std::initializer_list<int> I, int rank) {
    return ExtElement::basis(sig, mode, idx(I), Perm::identity(rank));
}

const SuperSig sig11{1, 1};
const RatFunc qq = RatFunc::q_pow(1);
const RatFunc qi = RatFunc::q_pow(-1);

}  // namespace

TEST_CASE("creation") {
    for (Mode mode : {Mode::Classical, Mode::Quantum}) {
        ExtElement unit = ExtElement::unit(sig11, mode, 0);
        ExtElement e1 = creation(1, unit);
        CHECK(e1 == ExtElement::basis(sig11, mode, idx({1}), Perm::identity(1)));
        // L(e_1)L(e_1)(1) . T_1 = q e_{(1,1)} (x) 1 in quantum mode
        if (mode == Mode::Quantum) {
            ExtElement e11 = creation(1, e1);
            CHECK(e11.right_act(HeckeElement::generator(1, 2, mode)) == e11 * qq);
        }
    }
    CHECK_THROWS(creation(3, ExtElement::unit(sig11, Mode::Quantum, 0)));
}

TEST_CASE("classical annihilation: defining sum on small cases") {
    const Mode mode = Mode::Classical;
    CHECK(annihilation(1, basis(sig11, mode, {1}, 1)) == ExtElement::unit(sig11, mode, 1));
    CHECK(annihilation(1, basis(sig11, mode, {2}, 1)).is_zero());
    // L(e_1^*)(e_1 e_2 (x) 1) = e_2 (x) 1: only k = 2 survives, trivial cycle
    CHECK(annihilation(1, basis(sig11, mode, {1, 2}, 2)) == basis(sig11, mode, {2}, 2));
    // degree 0: empty sum
    CHECK(annihilation(1, ExtElement::unit(sig11, mode, 2)).is_zero());
}

TEST_CASE("classical annihilation against the explicit formula") {
    // oracle: the signed omission sum with cycle (d ... k) group-multiplied
    // into the tail, evaluated without the production code path
    const Mode mode = Mode::Classical;
    for (const SuperSig& sig : {SuperSig{1, 1}, SuperSig{2, 1}}) {
        for (int d = 1; d <= 3; ++d) {
            const int N = d + 1;
            for (const auto& [I, w] : ext_basis_pairs(sig, d, N)) {
                for (int j = 1; j <= sig.dim(); ++j) {
                    ExtElement expect(sig, mode, d - 1, N);
                    for (int k = 1; k <= d; ++k) {
                        if (I.entry(k) != j)
                            continue;
                        int par = 0;
                        for (int p = k + 1; p <= d; ++p)
                            par += sig.parity(I.entry(p));
                        int sign = (sig.parity(j) * par) % 2 == 1 ? -1 : 1;
                        std::vector<int> cyc;
                        for (int r = d; r >= k; --r)
                            cyc.push_back(r);
                        Perm cycle = Perm::from_cycle(cyc, N);
                        expect = expect + ExtElement::normal_form(
                                              sig, mode, I.erase(k),
                                              HeckeElement::basis(cycle * w, mode)) *
                                              RatFunc(sign);
                    }
                    CHECK(annihilation(j, ExtElement::basis(sig, mode, I, w)) == expect);
                }
            }
        }
    }
}

TEST_CASE("quantum annihilation small cases") {
    const Mode mode = Mode::Quantum;
    for (int j = 1; j <= 2; ++j)
        CHECK(annihilation(j, basis(sig11, mode, {j}, 1)) == ExtElement::unit(sig11, mode, 1));
    // L(e_1)L(e_1^*) matches (K_1 - K_1^{-1})/(q_1 - q_1^{-1}) on V
    ExtElement e1 = basis(sig11, mode, {1}, 1);
    ExtElement e2 = basis(sig11, mode, {2}, 1);
    CHECK(creation(1, annihilation(1, e1)) == e1);
    CHECK(creation(1, annihilation(1, e2)).is_zero());
    // frozen two-step value: L(e_2^*)(e_{(2,2)} (x) 1) = q e_2 (x) 1 - e_2 (x) T_1
    ExtElement got = annihilation(2, basis(sig11, mode, {2, 2}, 2));
    ExtElement expect =
        basis(sig11, mode, {2}, 2) * qq -
        ExtElement::basis(sig11, mode, idx({2}), Perm::transposition(2, 1));
    CHECK(got == expect);
}

TEST_CASE("quantum annihilation against the literal word-product form") {
    // oracle: each summand is the product of the decorated degree-1 factors
    // g_j(e_r) = e_r (x) T_1^{-gamma(j,r)} (for r above the hit) and the
    // scaled bare factors f_j(e_r) = q_j^{-d_jr} e_r (below it), evaluated
    // left-to-right with the extension product and then right-multiplied by
    // the original tail
    const Mode mode = Mode::Quantum;
    for (const SuperSig& sig : {SuperSig{1, 1}, SuperSig{2, 1}}) {
        for (int d = 1; d <= 3; ++d) {
            const int N = d + 1;
            for (const auto& [I, w] : ext_basis_pairs(sig, d, N)) {
                for (int j = 1; j <= sig.dim(); ++j) {
                    ExtElement expect(sig, mode, d - 1, N);
                    for (int k = 1; k <= d; ++k) {
                        if (I.entry(k) != j)
                            continue;
                        int par = 0;
                        for (int p = k + 1; p <= d; ++p)
                            par += sig.parity(I.entry(p));
                        RatFunc sign((sig.parity(j) * par) % 2 == 1 ? -1 : 1);
                        ExtElement word = ExtElement::unit(sig, mode, 0);
                        for (int r = d; r >= k + 1; --r)
                            word = product(
                                word, ExtElement::normal_form(
                                          sig, mode, TensorIndex({I.entry(r)}),
                                          HeckeElement::generator_power(
                                              1, -gamma(j, I.entry(r)), 2, mode)));
                        for (int r = k - 1; r >= 1; --r)
                            word = product(
                                word,
                                ExtElement::basis(sig, mode, TensorIndex({I.entry(r)}),
                                                  Perm::identity(1)) *
                                    sig.q_i(j).pow(I.entry(r) == j ? -1 : 0));
                        ExtElement tail(sig, mode, 0, N);
                        tail.add_term(TensorIndex(), w, RatFunc(1));
                        expect = expect + product(word, tail) * sign;
                    }
                    ExtElement got = annihilation(j, ExtElement::basis(sig, mode, I, w));
                    const int R = std::max(got.rank(), expect.rank());
                    CHECK(got.widen(R) == expect.widen(R));
                }
            }
        }
    }
}

TEST_CASE("h_map sums to the annihilation operator") {
    for (const SuperSig& sig : {SuperSig{1, 1}, SuperSig{2, 1}}) {
        for (int d = 1; d <= 3; ++d) {
            for (const TensorIndex& I : all_indices(sig, d)) {
                SuperTensor t = SuperTensor::basis(sig, I);
                for (int j = 1; j <= sig.dim(); ++j) {
                    ExtElement sum = ExtElement::zero(sig, Mode::Quantum, d - 1, d);
                    for (int k = 1; k <= d; ++k)
                        sum = sum + h_map(j, k, t);
                    ExtElement phi(sig, Mode::Quantum, d, d);
                    phi.add_term(I, Perm::identity(d), RatFunc(1));
                    CHECK(sum == annihilation(j, phi));
                }
            }
        }
    }
    CHECK_THROWS(h_map(1, 3, SuperTensor::basis(sig11, idx({1, 1})), 2));
}

TEST_CASE("euler operators act as the identity") {
    ExtElement phi = ExtElement::basis(sig11, Mode::Classical, idx({1}), Perm::identity(2));
    CHECK(euler_classical(1, phi) == phi);
    ExtElement psi = ExtElement::basis(sig11, Mode::Quantum, idx({2}),
                                       Perm::transposition(2, 1));
    CHECK(euler_quantum(1, psi) == psi);
    for (const auto& [I, w] : ext_basis_pairs(sig11, 2, 3)) {
        ExtElement x = ExtElement::basis(sig11, Mode::Quantum, I, w);
        CHECK(euler_quantum(2, x) == x);
        ExtElement y = ExtElement::basis(sig11, Mode::Classical, I, w);
        CHECK(euler_classical(2, y) == y);
    }
}

TEST_CASE("k_bracket eigenvalues are quantum integers") {
    SuperTensor e1 = SuperTensor::basis(sig11, TensorIndex({1}));
    CHECK(k_bracket(1, 0, e1) == e1);
    for (const SuperSig& sig : {SuperSig{1, 1}, SuperSig{2, 1}}) {
        for (int d = 1; d <= 3; ++d)
            for (const TensorIndex& J : all_indices(sig, d)) {
                SuperTensor t = SuperTensor::basis(sig, J);
                for (int i = 1; i <= sig.dim(); ++i)
                    for (int a = -2; a <= 2; ++a) {
                        int x = a + J.mult(i);
                        RatFunc ev = x >= 0 ? q_int(x) : -q_int(-x);
                        CHECK(k_bracket(i, a, t) == t * ev);
                    }
            }
    }
}

TEST_CASE("k_bracket_factorial") {
    SuperTensor t = SuperTensor::basis(sig11, idx({1, 1, 1}));
    // eigenvalue [3][2][1] for h = 3 on triple multiplicity
    CHECK(k_bracket_factorial(1, 3, t) == t * (q_int(3) * q_int(2) * q_int(1)));
    CHECK(k_bracket_factorial(1, 0, t) == t);
    // kills lower multiplicity
    SuperTensor s = SuperTensor::basis(sig11, idx({1, 2, 1}));
    CHECK(k_bracket_factorial(1, 3, s).is_zero());
}

TEST_CASE("k_action on tensors and extension elements") {
    SuperTensor t = SuperTensor::basis(sig11, idx({2, 1}));
    CHECK(k_action(1, 1, t) == t * qq);
    CHECK(k_action(2, 1, t) == t * qi);
    CHECK(k_action(2, -1, t) == t * qq);
    ExtElement phi = ExtElement::basis(sig11, Mode::Quantum, idx({2, 2}), Perm::identity(3));
    CHECK(k_action(2, 1, phi) == phi * (qi * qi));
}

TEST_CASE("operator composition helper") {
    ExtOperator op = op_compose({op_creation(1), op_annihilation(1)});
    CHECK(op.degree_delta == 0);
    ExtElement e1 = basis(sig11, Mode::Quantum, {1}, 1);
    CHECK(op(e1) == e1);
}
