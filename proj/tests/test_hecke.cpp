#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qsd/hecke.hpp"
#include "qsd/superspace.hpp"

#include <set>

using namespace qsd;

namespace {

HeckeElement T(int i, int rank) { return HeckeElement::generator(i, rank, Mode::Quantum); }

const RatFunc qq = RatFunc::q_pow(1);
const RatFunc qi = RatFunc::q_pow(-1);

}  // namespace

TEST_CASE("basis-by-generator products") {
    HeckeElement one = HeckeElement::one(3, Mode::Quantum);
    CHECK(one.mul_gen(1) == T(1, 3));
    // T_{s_1} T_1 = 1 + (q - q^{-1}) T_{s_1}
    CHECK(T(1, 3).mul_gen(1) == one + T(1, 3) * (qq - qi));
    // length-additive product
    CHECK(T(1, 3).mul_gen(2) ==
          HeckeElement::basis(Perm::transposition(3, 1) * Perm::transposition(3, 2),
                              Mode::Quantum));
    CHECK_THROWS(T(1, 3).mul_gen(3));
}

TEST_CASE("unit and inverses") {
    HeckeElement a = T(1, 3) * (qq - qi) + T(2, 3);
    CHECK(a * HeckeElement::one(3, Mode::Quantum) == a);
    HeckeElement inv = HeckeElement::generator_power(1, -1, 3, Mode::Quantum);
    CHECK(inv == T(1, 3) + HeckeElement::one(3, Mode::Quantum) * (qi - qq));
    CHECK(inv * T(1, 3) == HeckeElement::one(3, Mode::Quantum));
    CHECK(T(1, 3) * inv == HeckeElement::one(3, Mode::Quantum));
}

TEST_CASE("defining relations in H_4") {
    const int n = 4;
    HeckeElement one = HeckeElement::one(n, Mode::Quantum);
    for (int i = 1; i < n; ++i) {
        // (T_i - q)(T_i + q^{-1}) = 0
        CHECK((T(i, n) - one * qq) * (T(i, n) + one * qi) ==
              HeckeElement::zero(n, Mode::Quantum));
    }
    for (int i = 1; i + 1 < n; ++i)
        CHECK(T(i, n) * T(i + 1, n) * T(i, n) == T(i + 1, n) * T(i, n) * T(i + 1, n));
    CHECK(T(1, n) * T(3, n) == T(3, n) * T(1, n));
}

TEST_CASE("multiplication reaches the whole T_w basis") {
    for (int n = 2; n <= 4; ++n) {
        std::set<Perm> reached;
        std::vector<HeckeElement> queue = {HeckeElement::one(n, Mode::Quantum)};
        reached.insert(Perm::identity(n));
        while (!queue.empty()) {
            HeckeElement h = queue.back();
            queue.pop_back();
            for (int i = 1; i < n; ++i) {
                HeckeElement next = h.mul_gen(i);
                for (const auto& [w, c] : next.terms())
                    if (reached.insert(w).second)
                        queue.push_back(HeckeElement::basis(w, Mode::Quantum));
            }
        }
        CHECK(reached.size() == symmetric_group(n).size());
    }
}

TEST_CASE("shift embedding") {
    CHECK(T(1, 2).shift_up(1, 3) == T(2, 3));
    CHECK(HeckeElement::one(2, Mode::Quantum).shift_up(2, 4) ==
          HeckeElement::one(4, Mode::Quantum));
    // T_{s_1 s_2} shifted by 2: remultiply the shifted word
    Perm s1s2 = Perm::transposition(3, 1) * Perm::transposition(3, 2);
    CHECK(HeckeElement::basis(s1s2, Mode::Quantum).shift_up(2, 5) == T(3, 5) * T(4, 5));

    std::vector<HeckeElement> samples = {
        T(1, 3), T(2, 3), T(1, 3) * T(2, 3) + T(2, 3) * (qq - qi),
        HeckeElement::one(3, Mode::Quantum) + T(1, 3) * qi};
    for (const auto& a : samples)
        for (const auto& b : samples)
            CHECK((a * b).shift_up(2, 5) == a.shift_up(2, 5) * b.shift_up(2, 5));
}

TEST_CASE("triple twist identity") {
    // T_1^{g(i,j)} T_2^{g(i,k)} T_1^{g(j,k)} = T_2^{g(j,k)} T_1^{g(i,k)} T_2^{g(i,j)}
    auto tp = [&](int pos, int e) {
        return HeckeElement::generator_power(pos, e, 3, Mode::Quantum);
    };
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j)
            for (int k = 1; k <= 4; ++k)
                CHECK(tp(1, gamma(i, j)) * tp(2, gamma(i, k)) * tp(1, gamma(j, k)) ==
                      tp(2, gamma(j, k)) * tp(1, gamma(i, k)) * tp(2, gamma(i, j)));
}

TEST_CASE("classical mode is the group algebra") {
    HeckeElement s1 = HeckeElement::generator(1, 3, Mode::Classical);
    CHECK(s1 * s1 == HeckeElement::one(3, Mode::Classical));
    CHECK(HeckeElement::generator_power(1, -1, 3, Mode::Classical) == s1);
    HeckeElement s2 = HeckeElement::generator(2, 3, Mode::Classical);
    CHECK(s1 * s2 * s1 == s2 * s1 * s2);
}

TEST_CASE("printing") {
    CHECK(HeckeElement::zero(2, Mode::Quantum).to_string() == "0");
    CHECK(T(1, 3).to_string() == "(1)*T[2,1,3]");
    CHECK((T(1, 2) * (qq - qi)).to_string() == "(q^2-1/q)*T[2,1]");
}

TEST_CASE("rank errors") {
    CHECK_THROWS(T(1, 2) * T(1, 3));
    CHECK_THROWS(T(1, 3).shift_up(2, 4));
}
