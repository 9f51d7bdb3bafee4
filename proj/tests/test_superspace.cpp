#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qsd/superspace.hpp"

using namespace qsd;

namespace {

// Index literal written the paper's way: (i_d, ..., i_1), leftmost first.
TensorIndex idx(std::initializer_list<int> left_to_right) {
    std::vector<int> v(left_to_right);
    std::reverse(v.begin(), v.end());
    return TensorIndex(v);
}

SuperTensor e(const SuperSig& sig, std::initializer_list<int> left_to_right) {
    return SuperTensor::basis(sig, idx(left_to_right));
}

const SuperSig sig11{1, 1};
const RatFunc qq = RatFunc::q_pow(1);
const RatFunc qi = RatFunc::q_pow(-1);

// Oracle: fold a specific word over positions, independent of reduced_word.
int fold_sign(std::vector<int> parities, const std::vector<int>& word) {
    int sign = 1;
    for (int i : word) {
        if (parities[i - 1] == 1 && parities[i] == 1)
            sign = -sign;
        std::swap(parities[i - 1], parities[i]);
    }
    return sign;
}

}  // namespace

TEST_CASE("parity and gamma") {
    CHECK(sig11.parity(1) == 0);
    CHECK(sig11.parity(2) == 1);
    CHECK(SuperSig{2, 1}.parity(2) == 0);
    CHECK_THROWS(sig11.parity(3));

    CHECK(gamma(2, 1) == 1);
    CHECK(gamma(1, 1) == -1);
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j)
            CHECK(gamma(j, i) == -2 * (i == j ? 1 : 0) - gamma(i, j));
}

TEST_CASE("sign_eps") {
    for (const Perm& s : symmetric_group(3))
        CHECK(sign_eps({0, 0, 0}, s) == 1);
    // sigma = (123): (v_3 v_2 v_1).sigma = (-1)^{|v_2||v_1| + |v_3||v_1|} v_1 v_3 v_2
    Perm c123 = Perm::from_cycle({1, 2, 3}, 3);
    for (int p1 = 0; p1 <= 1; ++p1)
        for (int p2 = 0; p2 <= 1; ++p2)
            for (int p3 = 0; p3 <= 1; ++p3) {
                int expect = ((p2 * p1 + p3 * p1) % 2 == 1) ? -1 : 1;
                CHECK(sign_eps({p1, p2, p3}, c123) == expect);
            }
    CHECK(sign_eps({1, 1}, Perm::transposition(2, 1)) == -1);
    // independence of the reduced word: longest element of S_3 two ways
    Perm w0({3, 2, 1});
    for (int p1 = 0; p1 <= 1; ++p1)
        for (int p2 = 0; p2 <= 1; ++p2)
            for (int p3 = 0; p3 <= 1; ++p3) {
                std::vector<int> ps{p1, p2, p3};
                CHECK(fold_sign(ps, {1, 2, 1}) == fold_sign(ps, {2, 1, 2}));
                CHECK(sign_eps(ps, w0) == fold_sign(ps, {1, 2, 1}));
            }
}

TEST_CASE("signed symmetric action") {
    CHECK(e(sig11, {1, 2}).act_sym(Perm::transposition(2, 1)) == e(sig11, {2, 1}));
    CHECK(e(sig11, {2, 2}).act_sym(Perm::transposition(2, 1)) == -e(sig11, {2, 2}));
    // right action and invertibility
    SuperSig sig21{2, 1};
    for (const SuperSig& sig : {sig11, sig21})
        for (const TensorIndex& I : all_indices(sig, 3)) {
            SuperTensor t = SuperTensor::basis(sig, I);
            for (const Perm& s : symmetric_group(3)) {
                CHECK(t.act_sym(s).act_sym(s.inverse()) == t);
                for (const Perm& u : symmetric_group(3))
                    CHECK(t.act_sym(s * u) == t.act_sym(s).act_sym(u));
            }
        }
}

TEST_CASE("Hecke generator action, the three cases") {
    CHECK(e(sig11, {1, 1}).act_hecke_gen(1, 1) == e(sig11, {1, 1}) * qq);
    CHECK(e(sig11, {2, 2}).act_hecke_gen(1, 1) == -(e(sig11, {2, 2}) * qi));
    // I = (2,1): i_1 = 1 < i_2 = 2
    CHECK(e(sig11, {2, 1}).act_hecke_gen(1, 1) ==
          e(sig11, {1, 2}) + e(sig11, {2, 1}) * (qq - qi));
    CHECK_THROWS(e(sig11, {1, 1}).act_hecke_gen(2, 1));
}

TEST_CASE("inverse generator action") {
    for (const TensorIndex& I : all_indices(sig11, 3)) {
        SuperTensor t = SuperTensor::basis(sig11, I);
        for (int k = 1; k < 3; ++k) {
            CHECK(t.act_hecke_gen(k, 1).act_hecke_gen(k, -1) == t);
            CHECK(t.act_hecke_gen(k, -1).act_hecke_gen(k, 1) == t);
        }
    }
}

TEST_CASE("module well-definedness: Hecke relations on tensors") {
    for (const SuperSig& sig : {SuperSig{1, 1}, SuperSig{2, 1}, SuperSig{1, 2}, SuperSig{2, 2}}) {
        for (const TensorIndex& I : all_indices(sig, 3)) {
            SuperTensor t = SuperTensor::basis(sig, I);
            for (int k = 1; k < 3; ++k) {
                // (T_k - q)(T_k + q^{-1}) = 0
                SuperTensor x = t.act_hecke_gen(k, 1).act_hecke_gen(k, 1);
                CHECK(x == t.act_hecke_gen(k, 1) * (qq - qi) + t);
            }
            CHECK(t.act_hecke_gen(1, 1).act_hecke_gen(2, 1).act_hecke_gen(1, 1) ==
                  t.act_hecke_gen(2, 1).act_hecke_gen(1, 1).act_hecke_gen(2, 1));
        }
    }
}

TEST_CASE("rewritten action (gamma form) and corollaries") {
    for (const SuperSig& sig : {SuperSig{1, 1}, SuperSig{2, 1}, SuperSig{1, 2}}) {
        for (int d = 2; d <= 3; ++d)
            for (const TensorIndex& I : all_indices(sig, d)) {
                SuperTensor t = SuperTensor::basis(sig, I);
                for (int k = 1; k < d; ++k) {
                    const int ik = I.entry(k), ik1 = I.entry(k + 1);
                    const int delta = (ik == ik1) ? 1 : 0;
                    // e_I . T_k^{gamma(i_k,i_{k+1})} = (-1)^{p p'} q_{i_k}^{-delta} e_{I.s_k}
                    RatFunc coeff = sig.q_i(ik).pow(-delta) *
                                    RatFunc(sig.parity(ik) * sig.parity(ik1) == 1 ? -1 : 1);
                    CHECK(t.act_hecke_gen(k, gamma(ik, ik1)) ==
                          SuperTensor::basis(sig, I.swapped(k)) * coeff);
                    // e_I . T_k^{gamma(i_{k+1},i_k)} = q_{i_k}^{-2 delta} e_I . T_k^{-gamma(i_k,i_{k+1})}
                    CHECK(t.act_hecke_gen(k, gamma(ik1, ik)) ==
                          t.act_hecke_gen(k, -gamma(ik, ik1)) * sig.q_i(ik).pow(-2 * delta));
                }
            }
    }
}

TEST_CASE("action of algebra elements matches generator chains") {
    HeckeElement t1 = HeckeElement::generator(1, 3, Mode::Quantum);
    HeckeElement t2 = HeckeElement::generator(2, 3, Mode::Quantum);
    for (const TensorIndex& I : all_indices(sig11, 3)) {
        SuperTensor t = SuperTensor::basis(sig11, I);
        CHECK(t.act_alg(t1 * t2) == t.act_hecke_gen(1, 1).act_hecke_gen(2, 1));
        CHECK(t.act_alg(t1 * t2 * t1) == t.act_alg(t2 * t1 * t2));
    }
}

TEST_CASE("printing") {
    CHECK(idx({1, 2}).to_string() == "e[1,2]");
    CHECK(e(sig11, {1, 2}).to_string() == "(1)*e[1,2]");
}
