#include "qsd/glmn.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace qsd {

std::string QGenerator::name() const {
    switch (kind) {
        case Kind::K: return "K_" + std::to_string(i);
        case Kind::Kinv: return "K_" + std::to_string(i) + "^-1";
        case Kind::E: return "E_" + std::to_string(i);
        case Kind::F: return "F_" + std::to_string(i);
    }
    return "?";
}

namespace {

void validate(const SuperSig& sig, const QGenerator& g) {
    const int mn = sig.dim();
    if (g.kind == QGenerator::Kind::K || g.kind == QGenerator::Kind::Kinv) {
        if (g.i < 1 || g.i > mn)
            throw std::invalid_argument("K index out of range");
    } else if (g.i < 1 || g.i >= mn) {
        throw std::invalid_argument("E/F index out of range");
    }
}

// Parity of E_i / F_i: odd exactly for i = m.
int gen_parity(const SuperSig& sig, const QGenerator& g) {
    return (g.kind == QGenerator::Kind::E || g.kind == QGenerator::Kind::F) && g.i == sig.m ? 1
                                                                                            : 0;
}

// Recursive coproduct action on one basis index over positions 1..p
// (position p is the current leftmost factor). Appends (index, coeff) pairs
// scaled by c into out.
void act_basis(const SuperSig& sig, const QGenerator& g, const TensorIndex& I, int p,
               const RatFunc& c, SuperTensor& out) {
    if (c.is_zero())
        return;
    if (g.kind == QGenerator::Kind::K || g.kind == QGenerator::Kind::Kinv) {
        int count = 0;
        for (int r = 1; r <= p; ++r)
            if (I.entry(r) == g.i)
                ++count;
        int e = (g.kind == QGenerator::Kind::K) ? count : -count;
        out.add_term(I, c * sig.q_i(g.i).pow(e));
        return;
    }
    if (p == 0)
        return;  // E, F act as zero in degree 0
    const int top = I.entry(p);
    if (g.kind == QGenerator::Kind::E) {
        // Delta^{(p-1)}(E_i) = 1 (x) Delta^{(p-2)}(E_i) + E_i (x) (K_i K_{i+1}^{-1})^{(x)(p-1)}
        if (p > 1) {
            RatFunc sign((gen_parity(sig, g) * sig.parity(top)) % 2 == 1 ? -1 : 1);
            act_basis(sig, g, I, p - 1, c * sign, out);
        }
        if (top == g.i + 1) {
            RatFunc scal = c;
            for (int r = 1; r < p; ++r) {
                if (I.entry(r) == g.i)
                    scal *= sig.q_i(g.i);
                if (I.entry(r) == g.i + 1)
                    scal *= sig.q_i(g.i + 1).inverse();
            }
            std::vector<int> entries = I.entries();
            entries[static_cast<size_t>(p) - 1] = g.i;
            out.add_term(TensorIndex(entries), scal);
        }
        return;
    }
    // F: Delta^{(p-1)}(F_i) = F_i (x) 1^{(x)(p-1)} + K_{i+1} K_i^{-1} (x) Delta^{(p-2)}(F_i)
    if (top == g.i) {
        std::vector<int> entries = I.entries();
        entries[static_cast<size_t>(p) - 1] = g.i + 1;
        out.add_term(TensorIndex(entries), c);
    }
    if (p > 1) {
        RatFunc scal((gen_parity(sig, g) * sig.parity(top)) % 2 == 1 ? -1 : 1);
        if (top == g.i + 1)
            scal *= sig.q_i(g.i + 1);
        if (top == g.i)
            scal *= sig.q_i(g.i).inverse();
        act_basis(sig, g, I, p - 1, c * scal, out);
    }
}

}  // namespace

SuperTensor act_on_v(const SuperSig& sig, const QGenerator& g, int j) {
    SuperTensor t = SuperTensor::basis(sig, TensorIndex({j}));
    return act_rho(sig, g, t);
}

SuperTensor act_rho(const SuperSig& sig, const QGenerator& g, const SuperTensor& t) {
    validate(sig, g);
    SuperTensor out(sig, t.degree());
    for (const auto& [I, c] : t.terms())
        act_basis(sig, g, I, t.degree(), c, out);
    return out;
}

ExtElement act_rho(const SuperSig& sig, const QGenerator& g, const ExtElement& phi) {
    validate(sig, g);
    ExtElement out(phi.sig(), phi.mode(), phi.degree(), phi.rank());
    for (const auto& [key, c] : phi.terms()) {
        SuperTensor t(sig, phi.degree());
        t.add_term(key.first, RatFunc(1));
        SuperTensor img = act_rho(sig, g, t);
        for (const auto& [J, c2] : img.terms())
            out.add_term(J, key.second, c * c2);
    }
    return out;
}

SuperTensor act_matrix_unit(const SuperSig& sig, int i, int j, const SuperTensor& t) {
    const int par = (sig.parity(i) + sig.parity(j)) % 2;
    SuperTensor out(sig, t.degree());
    for (const auto& [I, c] : t.terms()) {
        int par_above = 0;
        for (int k = t.degree(); k >= 1; --k) {
            if (I.entry(k) == j) {
                std::vector<int> entries = I.entries();
                entries[static_cast<size_t>(k) - 1] = i;
                out.add_term(TensorIndex(entries),
                             c * RatFunc((par * par_above) % 2 == 1 ? -1 : 1));
            }
            par_above += sig.parity(I.entry(k));
        }
    }
    return out;
}

ExtElement act_matrix_unit(const SuperSig& sig, int i, int j, const ExtElement& phi) {
    ExtElement out(phi.sig(), phi.mode(), phi.degree(), phi.rank());
    for (const auto& [key, c] : phi.terms()) {
        SuperTensor t(sig, phi.degree());
        t.add_term(key.first, RatFunc(1));
        SuperTensor img = act_matrix_unit(sig, i, j, t);
        for (const auto& [J, c2] : img.terms())
            out.add_term(J, key.second, c * c2);
    }
    return out;
}

namespace {

Mat<RatFunc> tensor_matrix(const SuperSig& sig, int d,
                           const std::function<SuperTensor(const SuperTensor&)>& fn) {
    const std::vector<TensorIndex> basis = all_indices(sig, d);
    std::map<TensorIndex, int> pos;
    for (size_t c = 0; c < basis.size(); ++c)
        pos[basis[c]] = static_cast<int>(c);
    Mat<RatFunc> m(static_cast<int>(basis.size()), static_cast<int>(basis.size()));
    for (size_t c = 0; c < basis.size(); ++c) {
        SuperTensor img = fn(SuperTensor::basis(sig, basis[c]));
        for (const auto& [J, coeff] : img.terms())
            m.at(pos.at(J), static_cast<int>(c)) = coeff;
    }
    return m;
}

}  // namespace

Mat<RatFunc> generator_matrix(const SuperSig& sig, int d, const QGenerator& g) {
    return tensor_matrix(sig, d, [&](const SuperTensor& t) { return act_rho(sig, g, t); });
}

Mat<RatFunc> matrix_unit_matrix(const SuperSig& sig, int d, int i, int j) {
    return tensor_matrix(sig, d,
                         [&](const SuperTensor& t) { return act_matrix_unit(sig, i, j, t); });
}

Mat<RatFunc> composite_eij_matrix(const SuperSig& sig, int d, int i, int j, int pivot) {
    if (i == j)
        throw std::invalid_argument("composite E_ij needs i != j");
    if (j == i + 1)
        return generator_matrix(sig, d, QGenerator::e(i));
    if (i == j + 1)
        return generator_matrix(sig, d, QGenerator::f(j));
    if (i < j) {
        const int k = (pivot > 0) ? pivot : j - 1;
        if (k <= i || k >= j)
            throw std::invalid_argument("pivot out of range");
        Mat<RatFunc> a = composite_eij_matrix(sig, d, i, k);
        Mat<RatFunc> b = composite_eij_matrix(sig, d, k, j);
        return a * b - (b * a) * sig.q_i(k);
    }
    const int k = (pivot > 0) ? pivot : i - 1;
    if (k <= j || k >= i)
        throw std::invalid_argument("pivot out of range");
    Mat<RatFunc> a = composite_eij_matrix(sig, d, i, k);
    Mat<RatFunc> b = composite_eij_matrix(sig, d, k, j);
    return a * b - (b * a) * sig.q_i(k).inverse();
}

bool quartic_defined(const SuperSig& sig) { return sig.m >= 2 && sig.n >= 2; }

Mat<RatFunc> quartic_matrix(const SuperSig& sig, int d, bool use_f) {
    if (!quartic_defined(sig))
        throw std::invalid_argument("quartic element undefined for this signature");
    const int m = sig.m;
    auto g = [&](int i) {
        return generator_matrix(sig, d, use_f ? QGenerator::f(i) : QGenerator::e(i));
    };
    Mat<RatFunc> a = g(m - 1), b = g(m), c = g(m + 1);
    const RatFunc qp = RatFunc::q_pow(1), qm = RatFunc::q_pow(-1);
    return a * b * c - (a * c * b) * qm - (b * c * a) * qp + c * b * a;
}

std::vector<std::string> relation_ids(const SuperSig& sig) {
    const int mn = sig.dim();
    std::vector<std::string> ids;
    auto add = [&](const std::string& base, int i, int j) {
        ids.push_back(base + "-" + std::to_string(i) + "-" + std::to_string(j));
    };
    for (int i = 1; i <= mn; ++i)
        for (int j = i + 1; j <= mn; ++j)
            add("kk-commute", i, j);
    for (int i = 1; i <= mn; ++i)
        ids.push_back("k-kinv-" + std::to_string(i));
    for (int i = 1; i <= mn; ++i)
        for (int j = 1; j < mn; ++j) {
            add("ke", i, j);
            add("kf", i, j);
        }
    for (int i = 1; i < mn; ++i)
        for (int j = 1; j < mn; ++j)
            add("ef", i, j);
    for (int i = 1; i < mn; ++i)
        for (int j = i + 2; j < mn; ++j) {
            add("ee-commute", i, j);
            add("ff-commute", i, j);
        }
    for (int i = 1; i < mn; ++i) {
        if (i == sig.m)
            continue;
        for (int j : {i - 1, i + 1}) {
            if (j < 1 || j >= mn)
                continue;
            add("serre-E", i, j);
            add("serre-F", i, j);
        }
    }
    ids.push_back("e-m-squared");
    ids.push_back("f-m-squared");
    if (quartic_defined(sig)) {
        ids.push_back("quartic-E");
        ids.push_back("quartic-F");
    }
    return ids;
}

namespace {

// "name-i-j" -> (name, i, j); throws on anything else.
void split_indexed(const std::string& rel, std::string& base, int& i, int& j) {
    size_t p2 = rel.rfind('-');
    size_t p1 = rel.rfind('-', p2 - 1);
    if (p1 == std::string::npos || p2 == std::string::npos)
        throw std::invalid_argument("unknown relation id: " + rel);
    base = rel.substr(0, p1);
    i = std::stoi(rel.substr(p1 + 1, p2 - p1 - 1));
    j = std::stoi(rel.substr(p2 + 1));
}

}  // namespace

bool check_relation(const SuperSig& sig, int d, const std::string& rel) {
    using G = QGenerator;
    auto mat = [&](const QGenerator& g) { return generator_matrix(sig, d, g); };
    const int mn = sig.dim();

    if (rel == "e-m-squared") {
        Mat<RatFunc> e = mat(G::e(sig.m));
        return (e * e).is_zero();
    }
    if (rel == "f-m-squared") {
        Mat<RatFunc> f = mat(G::f(sig.m));
        return (f * f).is_zero();
    }
    if (rel == "quartic-E" || rel == "quartic-F") {
        if (!quartic_defined(sig))
            throw std::invalid_argument("quartic element undefined for this signature");
        bool use_f = (rel == "quartic-F");
        Mat<RatFunc> x = mat(use_f ? G::f(sig.m) : G::e(sig.m));
        Mat<RatFunc> y = quartic_matrix(sig, d, use_f);
        return (x * y + y * x).is_zero();
    }
    if (rel.rfind("k-kinv-", 0) == 0) {
        int i = std::stoi(rel.substr(7));
        Mat<RatFunc> a = mat(G::k(i)) * mat(G::k_inv(i));
        return a == Mat<RatFunc>::identity(a.rows);
    }

    std::string base;
    int i = 0, j = 0;
    split_indexed(rel, base, i, j);
    if (base == "kk-commute")
        return commutator(mat(G::k(i)), mat(G::k(j))).is_zero();
    if (base == "ke") {
        RatFunc c = sig.q_i(i).pow((i == j ? 1 : 0) - (i == j + 1 ? 1 : 0));
        return mat(G::k(i)) * mat(G::e(j)) == (mat(G::e(j)) * mat(G::k(i))) * c;
    }
    if (base == "kf") {
        RatFunc c = sig.q_i(i).pow((i == j + 1 ? 1 : 0) - (i == j ? 1 : 0));
        return mat(G::k(i)) * mat(G::f(j)) == (mat(G::f(j)) * mat(G::k(i))) * c;
    }
    if (base == "ef") {
        Mat<RatFunc> e = mat(G::e(i)), f = mat(G::f(j));
        int sign = (i == sig.m && j == sig.m) ? -1 : 1;
        Mat<RatFunc> lhs = e * f - (f * e) * RatFunc(sign);
        Mat<RatFunc> rhs(lhs.rows, lhs.cols);
        if (i == j) {
            RatFunc denom = sig.q_i(i) - sig.q_i(i).inverse();
            Mat<RatFunc> num = mat(G::k(i)) * mat(G::k_inv(i + 1)) -
                               mat(G::k_inv(i)) * mat(G::k(i + 1));
            rhs = num * denom.inverse();
        }
        return lhs == rhs;
    }
    if (base == "ee-commute")
        return commutator(mat(G::e(i)), mat(G::e(j))).is_zero();
    if (base == "ff-commute")
        return commutator(mat(G::f(i)), mat(G::f(j))).is_zero();
    if (base == "serre-E" || base == "serre-F") {
        if (i == sig.m || i < 1 || i >= mn || j < 1 || j >= mn)
            throw std::invalid_argument("unknown relation id: " + rel);
        Mat<RatFunc> x = (base == "serre-E") ? mat(G::e(i)) : mat(G::f(i));
        Mat<RatFunc> y = (base == "serre-E") ? mat(G::e(j)) : mat(G::f(j));
        RatFunc c = sig.q_i(i) + sig.q_i(i).inverse();
        return (x * x * y - (x * y * x) * c + y * x * x).is_zero();
    }
    throw std::invalid_argument("unknown relation id: " + rel);
}

}  // namespace qsd
