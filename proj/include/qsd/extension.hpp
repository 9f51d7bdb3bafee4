#pragma once

#include "qsd/hecke.hpp"
#include "qsd/superspace.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qsd {

/// Element of the degree-d graded piece of the super-extension algebra at
/// finite rank N: V^{(x)d} tensored over the degree-d algebra (QS_d or H_d)
/// with the rank-N algebra (QS_N or H_N). Normal form: basis pairs
/// e_I (x) T_w with w a minimal-length representative of S_d \ S_N, so the
/// rank-N algebra is free over the degree-d one on these w.
class ExtElement {
  public:
    ExtElement(const SuperSig& sig, Mode mode, int degree, int rank);

    static ExtElement zero(const SuperSig& sig, Mode mode, int degree, int rank) {
        return ExtElement(sig, mode, degree, rank);
    }
    /// 1 (x) 1 at degree 0.
    static ExtElement unit(const SuperSig& sig, Mode mode, int rank);
    /// e_I (x) T_w; w must already be a minimal coset representative.
    static ExtElement basis(const SuperSig& sig, Mode mode, const TensorIndex& I, const Perm& w);
    /// e_I (x) h brought to normal form: each T_sigma is factored as
    /// T_u T_w (lengths add), and T_u folds onto the tensor through the
    /// module action.
    static ExtElement normal_form(const SuperSig& sig, Mode mode, const TensorIndex& I,
                                  const HeckeElement& h);

    const SuperSig& sig() const { return sig_; }
    Mode mode() const { return mode_; }
    int degree() const { return degree_; }
    int rank() const { return rank_; }
    const std::map<std::pair<TensorIndex, Perm>, RatFunc>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const TensorIndex& I, const Perm& w, const RatFunc& c);
    ExtElement operator-() const { return *this * RatFunc(-1); }
    friend ExtElement operator+(const ExtElement& a, const ExtElement& b);
    friend ExtElement operator-(const ExtElement& a, const ExtElement& b);
    ExtElement operator*(const RatFunc& c) const;
    friend bool operator==(const ExtElement& a, const ExtElement& b) {
        return a.mode_ == b.mode_ && a.degree_ == b.degree_ && a.rank_ == b.rank_ &&
               a.terms_ == b.terms_;
    }
    friend bool operator!=(const ExtElement& a, const ExtElement& b) { return !(a == b); }

    /// Same element at a larger rank (the inclusions are honest on T_w).
    ExtElement widen(int new_rank) const;

    /// Juxtaposition-and-shift product:
    /// (e_J (x) T_tau)(e_I (x) T_sigma) = e_J e_I (x) T_tau^{^d} T_sigma.
    friend ExtElement product(const ExtElement& a, const ExtElement& b);

    /// Right action of the rank-N algebra (pi); widens first if needed.
    ExtElement right_act(const HeckeElement& h) const;
    /// Left multiplication by a degree-0 tail (the operator L(h)): the tail
    /// is shifted up by the degree before multiplying.
    ExtElement left_mul_tail(const HeckeElement& h) const;

    std::string to_string() const;

  private:
    SuperSig sig_;
    Mode mode_;
    int degree_;
    int rank_;
    std::map<std::pair<TensorIndex, Perm>, RatFunc> terms_;
};

/// Normal-form basis pairs (I, w) of the degree-d rank-N piece, sorted;
/// count = (m+n)^d * N!/d!.
std::vector<std::pair<TensorIndex, Perm>> ext_basis_pairs(const SuperSig& sig, int d, int N);

}  // namespace qsd
