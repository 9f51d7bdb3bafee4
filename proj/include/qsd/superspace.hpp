#pragma once

#include "qsd/hecke.hpp"
#include "qsd/perm.hpp"
#include "qsd/ratfunc.hpp"

#include <map>
#include <string>
#include <vector>

namespace qsd {

/// Superspace signature: V = Q(q)^{m|n}, basis e_1..e_{m+n}; e_i is even
/// for i <= m and odd otherwise.
struct SuperSig {
    int m = 1;
    int n = 1;

    int dim() const { return m + n; }
    /// Parity: 0 if i <= m, 1 if i > m.
    int parity(int i) const;
    /// q_i = q^{+1} for even i, q^{-1} for odd i.
    RatFunc q_i(int i) const { return RatFunc::q_pow(parity(i) == 0 ? 1 : -1); }
};

/// gamma(i,j) = +1 if i > j, -1 if i <= j.
inline int gamma(int i, int j) { return i > j ? 1 : -1; }

/// Koszul sign picked up when permuting factors of given parities by sigma
/// (right action); independent of the reduced word used.
int sign_eps(const std::vector<int>& parities, const Perm& sigma);

/// Index I = (i_d,...,i_1) of a basis tensor e_I = e_{i_d} x ... x e_{i_1}.
/// Storage is by position: entry(p) = i_p, position 1 = rightmost factor.
class TensorIndex {
  public:
    TensorIndex() = default;
    explicit TensorIndex(std::vector<int> entries) : e_(std::move(entries)) {}

    int degree() const { return static_cast<int>(e_.size()); }
    int entry(int p) const { return e_[static_cast<size_t>(p) - 1]; }
    const std::vector<int>& entries() const { return e_; }

    /// Multiplicity m_k(I) = #{p : i_p = k}.
    int mult(int k) const;
    /// I.sigma = (i_{sigma(d)},...,i_{sigma(1)}).
    TensorIndex act(const Perm& sigma) const;
    TensorIndex swapped(int k) const;  // swap positions k, k+1
    /// Index with e_j appended as the new leftmost factor (position d+1).
    TensorIndex prepend_left(int j) const;
    /// Index with position k removed.
    TensorIndex erase(int k) const;

    friend bool operator==(const TensorIndex& a, const TensorIndex& b) { return a.e_ == b.e_; }
    friend bool operator!=(const TensorIndex& a, const TensorIndex& b) { return !(a == b); }
    friend bool operator<(const TensorIndex& a, const TensorIndex& b) {
        if (a.e_.size() != b.e_.size())
            return a.e_.size() < b.e_.size();
        return a.e_ < b.e_;
    }

    /// "e[i_d,...,i_1]".
    std::string to_string() const;

  private:
    std::vector<int> e_;
};

/// All indices in [m+n]^d, sorted.
std::vector<TensorIndex> all_indices(const SuperSig& sig, int d);
/// The weakly decreasing indices i_d <= ... <= i_1 (the set used by the
/// quantum Euler operator), sorted.
std::vector<TensorIndex> decreasing_indices(const SuperSig& sig, int d);

/// Element of V^{(x)d}: linear combination of basis tensors e_I over Q(q).
class SuperTensor {
  public:
    SuperTensor() = default;
    SuperTensor(const SuperSig& sig, int degree) : sig_(sig), degree_(degree) {}

    static SuperTensor basis(const SuperSig& sig, const TensorIndex& I);

    const SuperSig& sig() const { return sig_; }
    int degree() const { return degree_; }
    const std::map<TensorIndex, RatFunc>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const TensorIndex& I, const RatFunc& c);
    SuperTensor operator-() const { return *this * RatFunc(-1); }
    friend SuperTensor operator+(const SuperTensor& a, const SuperTensor& b);
    friend SuperTensor operator-(const SuperTensor& a, const SuperTensor& b);
    SuperTensor operator*(const RatFunc& c) const;
    friend bool operator==(const SuperTensor& a, const SuperTensor& b) {
        return a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const SuperTensor& a, const SuperTensor& b) { return !(a == b); }

    /// Signed right action of sigma (classical).
    SuperTensor act_sym(const Perm& sigma) const;
    /// Right action of T_k^{e}, e = +1 or -1 (quantum).
    SuperTensor act_hecke_gen(int k, int e) const;
    /// Right action of a Hecke-algebra or group-algebra element; dispatches
    /// on the element's mode.
    SuperTensor act_alg(const HeckeElement& h) const;

    std::string to_string() const;

  private:
    SuperSig sig_;
    int degree_ = 0;
    std::map<TensorIndex, RatFunc> terms_;
};

}  // namespace qsd
