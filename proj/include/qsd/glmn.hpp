#pragma once

#include "qsd/extension.hpp"
#include "qsd/matrix.hpp"
#include "qsd/superspace.hpp"

#include <string>
#include <vector>

namespace qsd {

/// Generator of U_q(gl(m|n)): K_i^{+-1} (1 <= i <= m+n), E_i, F_i
/// (1 <= i < m+n). E_m and F_m are the odd generators.
struct QGenerator {
    enum class Kind { K, Kinv, E, F };
    Kind kind;
    int i;

    static QGenerator k(int i) { return {Kind::K, i}; }
    static QGenerator k_inv(int i) { return {Kind::Kinv, i}; }
    static QGenerator e(int i) { return {Kind::E, i}; }
    static QGenerator f(int i) { return {Kind::F, i}; }

    std::string name() const;
};

/// Action on V: K_i.e_j = q_i^{d_ij} e_j, E_i.e_j = d_{i+1,j} e_i,
/// F_i.e_j = d_ij e_{i+1}.
SuperTensor act_on_v(const SuperSig& sig, const QGenerator& g, int j);

/// Action on V^{(x)d} through the iterated coproduct, with the super sign
/// rule (x (x) y)(v (x) w) = (-1)^{|y||v|} xv (x) yw; the first coproduct
/// slot acts on the leftmost tensor factor.
SuperTensor act_rho(const SuperSig& sig, const QGenerator& g, const SuperTensor& t);

/// The same action on the tensor part of an extension element:
/// x.(e_I (x) T) = (x.e_I) (x) T.
ExtElement act_rho(const SuperSig& sig, const QGenerator& g, const ExtElement& phi);

/// Classical matrix-unit action of U(gl(m|n)):
/// rho_d(E_ij)(v_d...v_1) = sum_k (-1)^{|E_ij|(|v_d|+...+|v_{k+1}|)}
/// v_d...(E_ij v_k)...v_1.
SuperTensor act_matrix_unit(const SuperSig& sig, int i, int j, const SuperTensor& t);
ExtElement act_matrix_unit(const SuperSig& sig, int i, int j, const ExtElement& phi);

/// Matrix of a generator action on the basis {e_I : I in [m+n]^d}.
Mat<RatFunc> generator_matrix(const SuperSig& sig, int d, const QGenerator& g);
Mat<RatFunc> matrix_unit_matrix(const SuperSig& sig, int d, int i, int j);

/// Matrix of the composite root vector E_ij (i != j) on V^{(x)d}, expanded
/// through E_ij = E_ik E_kj - q_k E_kj E_ik (i<k<j) and its mirrored form;
/// pivot defaults to k = j-1 (i<j) resp. k = i-1 (i>j) but any admissible
/// pivot gives the same operator.
Mat<RatFunc> composite_eij_matrix(const SuperSig& sig, int d, int i, int j, int pivot = -1);

/// Matrix of the quartic elements E_{m-1,m+2} / F_{m-1,m+2}; defined only
/// when m >= 2 and n >= 2.
Mat<RatFunc> quartic_matrix(const SuperSig& sig, int d, bool use_f);
bool quartic_defined(const SuperSig& sig);

/// Stable identifiers of the defining relations of U_q(gl(m|n)) (indices
/// baked in, e.g. "serre-E-1-2", "quartic-E").
std::vector<std::string> relation_ids(const SuperSig& sig);

/// True iff both sides of the relation agree as operators on V^{(x)d}.
bool check_relation(const SuperSig& sig, int d, const std::string& rel);

}  // namespace qsd
