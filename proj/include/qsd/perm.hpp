#pragma once

#include <string>
#include <utility>
#include <vector>

namespace qsd {

/// Permutation of [N] in one-line notation. Composition convention used
/// project-wide: (a*b)(i) = a(b(i)).
class Perm {
  public:
    Perm() = default;
    explicit Perm(std::vector<int> images);

    static Perm identity(int n);
    /// Adjacent transposition s_i = (i, i+1) in S_n; requires 1 <= i < n.
    static Perm transposition(int n, int i);
    /// Cycle (i_1 i_2 ... i_k): maps i_r -> i_{r+1}, i_k -> i_1.
    static Perm from_cycle(const std::vector<int>& entries, int n);

    int rank() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[static_cast<size_t>(i) - 1]; }
    bool is_identity() const;

    friend Perm operator*(const Perm& a, const Perm& b);
    Perm inverse() const;
    friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
    friend bool operator!=(const Perm& a, const Perm& b) { return !(a == b); }
    friend bool operator<(const Perm& a, const Perm& b) {
        if (a.rank() != b.rank())
            return a.rank() < b.rank();
        return a.img_ < b.img_;
    }

    /// Coxeter length = inversion count.
    int length() const;

    /// A reduced word s_{i_1}...s_{i_k} multiplying out to this permutation;
    /// deterministic (smallest-descent bubble sort).
    std::vector<int> reduced_word() const;

    /// Unique factorization sigma = sigma_1 ... sigma_{d-1} with
    /// sigma_i in {1, s_i, s_i s_{i-1}, ..., s_i ... s_1}; the concatenated
    /// word is reduced. Entry [i-1] holds sigma_i (rank d).
    std::vector<Perm> staircase_decompose() const;

    /// Factors sigma = u * w with u in S_d (fixing d+1..N pointwise) and w
    /// the minimal-length representative of the right coset S_d sigma;
    /// lengths add.
    std::pair<Perm, Perm> coset_factorize(int d) const;

    /// Image under the shift homomorphism s_i -> s_{i+k}; result has rank+k.
    Perm shift_up(int k) const;
    /// Same permutation viewed in S_{new_rank}, fixing the new points.
    Perm widen(int new_rank) const;
    /// Restriction to S_d; requires d+1..N to be fixed pointwise.
    Perm restrict_to(int d) const;

    /// Cycle notation, e.g. "(1 2 3)(5 6)"; identity prints "()".
    std::string to_cycles() const;
    /// One-line notation, e.g. "[2,3,1]".
    std::string to_string() const;
    /// Parses cycle notation as printed by to_cycles.
    static Perm parse_cycles(const std::string& s, int n);

  private:
    std::vector<int> img_;
};

/// All elements of S_n in lexicographic one-line order.
std::vector<Perm> symmetric_group(int n);

/// Minimal-length representatives of the right cosets S_d \ S_N, sorted.
std::vector<Perm> min_coset_reps(int d, int N);

}  // namespace qsd
