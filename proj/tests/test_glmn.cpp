#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qsd/centralizer.hpp"
#include "qsd/glmn.hpp"
#include "qsd/operators.hpp"

#include <algorithm>

using namespace qsd;

namespace {

TensorIndex idx(std::initializer_list<int> left_to_right) {
    std::vector<int> v(left_to_right);
    std::reverse(v.begin(), v.end());
    return TensorIndex(v);
}

const SuperSig sig11{1, 1};
const RatFunc qq = RatFunc::q_pow(1);
const RatFunc qi = RatFunc::q_pow(-1);

}  // namespace

TEST_CASE("natural representation on V") {
    CHECK(act_on_v(sig11, QGenerator::k(1), 1) ==
          SuperTensor::basis(sig11, TensorIndex({1})) * qq);
    CHECK(act_on_v(sig11, QGenerator::k(2), 1) == SuperTensor::basis(sig11, TensorIndex({1})));
    CHECK(act_on_v(sig11, QGenerator::e(1), 2) == SuperTensor::basis(sig11, TensorIndex({1})));
    CHECK(act_on_v(sig11, QGenerator::f(1), 2).is_zero());
    CHECK(act_on_v(sig11, QGenerator::f(1), 1) == SuperTensor::basis(sig11, TensorIndex({2})));
    CHECK_THROWS(act_on_v(sig11, QGenerator::e(2), 1));
}

TEST_CASE("K acts by counted powers") {
    for (const SuperSig& sig : {SuperSig{1, 1}, SuperSig{2, 1}})
        for (int d = 1; d <= 3; ++d)
            for (const TensorIndex& I : all_indices(sig, d)) {
                SuperTensor t = SuperTensor::basis(sig, I);
                for (int j = 1; j <= sig.dim(); ++j) {
                    CHECK(act_rho(sig, QGenerator::k(j), t) == t * sig.q_i(j).pow(I.mult(j)));
                    CHECK(act_rho(sig, QGenerator::k_inv(j), t) ==
                          t * sig.q_i(j).pow(-I.mult(j)));
                }
            }
}

TEST_CASE("coproduct action, frozen hand expansion") {
    // E_1 on e_2 (x) e_2 at (1|1): -e_2 (x) e_1 + q e_1 (x) e_2
    SuperTensor t = SuperTensor::basis(sig11, idx({2, 2}));
    SuperTensor got = act_rho(sig11, QGenerator::e(1), t);
    SuperTensor expect = SuperTensor::basis(sig11, idx({2, 1})) * RatFunc(-1) +
                         SuperTensor::basis(sig11, idx({1, 2})) * qq;
    CHECK(got == expect);
    // F_1 on e_1 (x) e_1: e_2 (x) e_1 + q^{-1} e_1 (x) e_2
    SuperTensor s = SuperTensor::basis(sig11, idx({1, 1}));
    CHECK(act_rho(sig11, QGenerator::f(1), s) ==
          SuperTensor::basis(sig11, idx({2, 1})) +
              SuperTensor::basis(sig11, idx({1, 2})) * qi);
}

TEST_CASE("classical matrix units") {
    SuperTensor t = SuperTensor::basis(sig11, idx({1, 1}));
    CHECK(act_matrix_unit(sig11, 1, 1, t) == t * RatFunc(2));
    // sum of diagonal units counts the degree
    for (const SuperSig& sig : {SuperSig{1, 1}, SuperSig{2, 1}})
        for (int d = 1; d <= 3; ++d)
            for (const TensorIndex& I : all_indices(sig, d)) {
                SuperTensor x = SuperTensor::basis(sig, I);
                SuperTensor sum(sig, d);
                for (int i = 1; i <= sig.dim(); ++i)
                    sum = sum + act_matrix_unit(sig, i, i, x);
                CHECK(sum == x * RatFunc(d));
            }
}

TEST_CASE("classical rho_d(E_ij) equals L(e_i)L(e_j^*)") {
    for (const SuperSig& sig : {SuperSig{1, 1}, SuperSig{2, 1}})
        for (int d = 1; d <= 3; ++d) {
            const auto basis = ext_basis_pairs(sig, d, d);
            for (int i = 1; i <= sig.dim(); ++i)
                for (int j = 1; j <= sig.dim(); ++j) {
                    Mat<RatFunc> lhs = matrix_unit_matrix(sig, d, i, j);
                    Mat<RatFunc> rhs =
                        to_matrix(op_compose({op_creation(i), op_annihilation(j)}), sig,
                                  Mode::Classical, d, d, basis);
                    CHECK(lhs == rhs);
                }
        }
}

TEST_CASE("relation checker") {
    CHECK(check_relation(sig11, 1, "k-kinv-1"));
    CHECK(check_relation(sig11, 2, "ef-1-1"));
    CHECK(check_relation(sig11, 2, "e-m-squared"));
    CHECK(check_relation(sig11, 2, "f-m-squared"));
    CHECK_THROWS(check_relation(sig11, 1, "no-such-relation"));
    auto ids = relation_ids(sig11);
    CHECK(std::find(ids.begin(), ids.end(), "ef-1-1") != ids.end());
    CHECK(std::find(ids.begin(), ids.end(), "quartic-E") == ids.end());

    SuperSig sig21{2, 1};
    for (const std::string& rel : relation_ids(sig21))
        CHECK(check_relation(sig21, 2, rel));
}

TEST_CASE("quartic relations at (2|2)") {
    SuperSig sig22{2, 2};
    CHECK(quartic_defined(sig22));
    CHECK(!quartic_defined(SuperSig{2, 1}));
    auto ids = relation_ids(sig22);
    CHECK(std::find(ids.begin(), ids.end(), "quartic-E") != ids.end());
    for (int d = 1; d <= 2; ++d) {
        CHECK(check_relation(sig22, d, "quartic-E"));
        CHECK(check_relation(sig22, d, "quartic-F"));
    }
    CHECK_THROWS(quartic_matrix(SuperSig{1, 2}, 1, false));
}

TEST_CASE("generator actions commute with the right Hecke action") {
    // the module structure extends to the induced modules:
    // x.(e_I (x) T) = (x.e_I) (x) T is compatible with right multiplication
    for (const SuperSig& sig : {SuperSig{1, 1}, SuperSig{2, 1}}) {
        std::vector<QGenerator> gens;
        for (int i = 1; i <= sig.dim(); ++i) {
            gens.push_back(QGenerator::k(i));
            gens.push_back(QGenerator::k_inv(i));
        }
        for (int i = 1; i < sig.dim(); ++i) {
            gens.push_back(QGenerator::e(i));
            gens.push_back(QGenerator::f(i));
        }
        for (int d = 1; d <= 2; ++d) {
            const int N = d + 1;
            for (const auto& [I, w] : ext_basis_pairs(sig, d, N)) {
                ExtElement phi = ExtElement::basis(sig, Mode::Quantum, I, w);
                for (const QGenerator& g : gens)
                    for (int r = 1; r < N; ++r) {
                        HeckeElement tr = HeckeElement::generator(r, N, Mode::Quantum);
                        CHECK(act_rho(sig, g, phi.right_act(tr)) ==
                              act_rho(sig, g, phi).right_act(tr));
                    }
            }
        }
    }
}

TEST_CASE("composite root vectors need a valid pivot") {
    SuperSig sig21{2, 1};
    CHECK_THROWS(composite_eij_matrix(sig21, 1, 1, 1));
    CHECK_THROWS(composite_eij_matrix(sig21, 1, 1, 3, 3));
    // single possible pivot at m+n = 3
    CHECK(composite_eij_matrix(sig21, 1, 1, 3) == composite_eij_matrix(sig21, 1, 1, 3, 2));
}
