#pragma once

#include "qsd/perm.hpp"
#include "qsd/ratfunc.hpp"

#include <map>
#include <string>

namespace qsd {

/// Selects the algebra a basis {T_w} multiplies in: the group algebra QS_N
/// (classical) or the type-A Hecke algebra over Q(q) (quantum). Both sides
/// of the library run over Q(q); classical coefficients are constants.
enum class Mode { Classical, Quantum };

inline const char* mode_name(Mode m) { return m == Mode::Classical ? "classical" : "quantum"; }

/// Finite linear combination of basis elements T_w, w in S_rank, over Q(q).
/// In quantum mode T_i satisfies (T_i - q)(T_i + q^{-1}) = 0 and the braid
/// relations; in classical mode T_w is the group basis w. No zero
/// coefficients are stored.
class HeckeElement {
  public:
    HeckeElement(int rank, Mode mode) : rank_(rank), mode_(mode) {}

    static HeckeElement zero(int rank, Mode mode) { return HeckeElement(rank, mode); }
    static HeckeElement one(int rank, Mode mode);
    static HeckeElement basis(const Perm& w, Mode mode);
    /// T_i (or s_i in classical mode).
    static HeckeElement generator(int i, int rank, Mode mode);
    /// T_i^{e} for e = +1 or -1; T_i^{-1} = T_i + (q^{-1} - q) quantum, s_i classical.
    static HeckeElement generator_power(int i, int e, int rank, Mode mode);

    int rank() const { return rank_; }
    Mode mode() const { return mode_; }
    const std::map<Perm, RatFunc>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Perm& w, const RatFunc& c);
    HeckeElement operator-() const { return *this * RatFunc(-1); }
    friend HeckeElement operator+(const HeckeElement& a, const HeckeElement& b);
    friend HeckeElement operator-(const HeckeElement& a, const HeckeElement& b);
    HeckeElement operator*(const RatFunc& c) const;
    friend bool operator==(const HeckeElement& a, const HeckeElement& b) {
        return a.rank_ == b.rank_ && a.mode_ == b.mode_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const HeckeElement& a, const HeckeElement& b) { return !(a == b); }

    /// Right multiplication by T_i^{e}. Quantum basis rule:
    /// T_w T_i = T_{w s_i} if the length goes up, else T_{w s_i} + (q - q^{-1}) T_w.
    HeckeElement mul_gen(int i, int e = 1) const;
    friend HeckeElement operator*(const HeckeElement& a, const HeckeElement& b);

    /// Image under the shift homomorphism T_i -> T_{i+k}, widened to new_rank.
    HeckeElement shift_up(int k, int new_rank) const;
    /// Same element viewed in a larger rank.
    HeckeElement widen(int new_rank) const;

    std::string to_string() const;

  private:
    int rank_;
    Mode mode_;
    std::map<Perm, RatFunc> terms_;
};

}  // namespace qsd
