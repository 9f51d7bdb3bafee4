#pragma once

#include "qsd/extension.hpp"
#include "qsd/glmn.hpp"
#include "qsd/matrix.hpp"
#include "qsd/operators.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsd {

/// Raised when a requested module exceeds the configured dimension cap
/// (rational-function elimination degrades superlinearly).
class ResourceCapError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

using ExactMatrix = Mat<RatFunc>;
using ModuleBasis = std::vector<std::pair<TensorIndex, Perm>>;

/// Matrix of a degree-preserving operator in the given normal-form basis
/// (column j = coordinates of op(basis_j)).
ExactMatrix to_matrix(const ExtOperator& op, const SuperSig& sig, Mode mode, int d, int N,
                      const ModuleBasis& basis);

/// Matrices of the right actions pi(T_1)..pi(T_{N-1}).
std::vector<ExactMatrix> pi_generator_matrices(const SuperSig& sig, Mode mode, int d, int N,
                                               const ModuleBasis& basis);

/// Matrices of pi(T_w) for every w in S_N.
std::vector<ExactMatrix> pi_basis_matrices(const SuperSig& sig, Mode mode, int d, int N,
                                           const ModuleBasis& basis);

/// All spanning operators L(e_{j_d})..L(e_{j_1}) L(T_w) L(e_{i_1}^*)..L(e_{i_d}^*)
/// of the centralizer candidate algebra, as matrices.
std::vector<ExactMatrix> span_adk_matrices(const SuperSig& sig, Mode mode, int d, int k,
                                           const ModuleBasis& basis);

/// Generators whose closure realizes the dual algebra at k = 0: the quantum
/// group generators K_i^{+-1}, E_i, F_i (quantum) or all matrix units E_ij
/// (classical).
std::vector<ExactMatrix> dual_algebra_generators(const SuperSig& sig, Mode mode, int d,
                                                 const ModuleBasis& basis);

/// Result of one duality verification.
struct DualityReport {
    Mode mode = Mode::Quantum;
    int m = 0, n = 0, d = 0, k = 0;
    int dim_module = 0;
    int dim_commutant = 0;
    int dim_span_adk = 0;
    int dim_bicommutant = 0;
    int dim_hecke_image = 0;
    bool containment_checked = false;
    bool passed = false;
    /// Present when k = 0: dimension of the algebra closure of the dual
    /// generators and whether they all commute with the right action.
    std::optional<int> dim_closure;
    std::optional<bool> closure_contained;
};

/// Full pipeline over Q(q): commutant of the right action, span of the
/// creation/tail/annihilation operators, element-wise containment,
/// bicommutant vs the right-action image, and (k = 0) the algebra closure
/// of the dual generators.
DualityReport verify_duality(const SuperSig& sig, Mode mode, int d, int k, int dim_cap = 64);

/// Same dimensions computed over Q at q = a (generic specialization); used
/// as a fast cross-check. Requires [j](a) != 0 for j <= d+k.
DualityReport verify_duality_specialized(const SuperSig& sig, Mode mode, int d, int k,
                                         const Rational& a, int dim_cap = 64);

/// Guard for specializations: [j](a) != 0 for all 1 <= j <= bound.
bool specialization_generic(const Rational& a, int bound);

}  // namespace qsd
