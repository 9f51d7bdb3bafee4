#include "qsd/centralizer.hpp"

#include <map>

namespace qsd {

namespace {

long module_dimension(const SuperSig& sig, int d, int N) {
    long dim = 1;
    for (int i = 0; i < d; ++i)
        dim *= sig.dim();
    for (int j = d + 1; j <= N; ++j)
        dim *= j;
    return dim;
}

std::map<std::pair<TensorIndex, Perm>, int> index_of(const ModuleBasis& basis) {
    std::map<std::pair<TensorIndex, Perm>, int> pos;
    for (size_t i = 0; i < basis.size(); ++i)
        pos[basis[i]] = static_cast<int>(i);
    return pos;
}

}  // namespace

ExactMatrix to_matrix(const ExtOperator& op, const SuperSig& sig, Mode mode, int d, int N,
                      const ModuleBasis& basis) {
    if (op.degree_delta != 0)
        throw std::invalid_argument("operator is not degree-preserving");
    const auto pos = index_of(basis);
    const int s = static_cast<int>(basis.size());
    ExactMatrix m(s, s);
    for (int c = 0; c < s; ++c) {
        const auto& [I, w] = basis[static_cast<size_t>(c)];
        ExtElement img = op(ExtElement::basis(sig, mode, I, w));
        if (img.degree() != d || img.rank() != N)
            throw std::invalid_argument("operator left the module");
        for (const auto& [key, coeff] : img.terms())
            m.at(pos.at(key), c) = coeff;
    }
    return m;
}

std::vector<ExactMatrix> pi_generator_matrices(const SuperSig& sig, Mode mode, int d, int N,
                                               const ModuleBasis& basis) {
    std::vector<ExactMatrix> out;
    for (int r = 1; r < N; ++r)
        out.push_back(to_matrix(op_right_act(HeckeElement::generator(r, N, mode)), sig, mode, d,
                                N, basis));
    return out;
}

std::vector<ExactMatrix> pi_basis_matrices(const SuperSig& sig, Mode mode, int d, int N,
                                           const ModuleBasis& basis) {
    std::vector<ExactMatrix> out;
    for (const Perm& w : symmetric_group(N))
        out.push_back(to_matrix(op_right_act(HeckeElement::basis(w, mode)), sig, mode, d, N,
                                basis));
    return out;
}

std::vector<ExactMatrix> span_adk_matrices(const SuperSig& sig, Mode mode, int d, int k,
                                           const ModuleBasis& basis) {
    const int N = d + k;
    std::vector<ExactMatrix> out;
    const auto tuples = all_indices(sig, d);
    for (const TensorIndex& J : tuples) {
        for (const TensorIndex& I : tuples) {
            for (const Perm& w : symmetric_group(N)) {
                std::vector<ExtOperator> chain;
                for (int p = d; p >= 1; --p)
                    chain.push_back(op_creation(J.entry(p)));
                chain.push_back(op_left_tail(HeckeElement::basis(w, mode)));
                for (int p = 1; p <= d; ++p)
                    chain.push_back(op_annihilation(I.entry(p)));
                out.push_back(to_matrix(op_compose(chain), sig, mode, d, N, basis));
            }
        }
    }
    return out;
}

std::vector<ExactMatrix> dual_algebra_generators(const SuperSig& sig, Mode mode, int d,
                                                 const ModuleBasis& basis) {
    std::vector<ExactMatrix> out;
    const int N = d;
    if (mode == Mode::Quantum) {
        std::vector<QGenerator> gens;
        for (int i = 1; i <= sig.dim(); ++i) {
            gens.push_back(QGenerator::k(i));
            gens.push_back(QGenerator::k_inv(i));
        }
        for (int i = 1; i < sig.dim(); ++i) {
            gens.push_back(QGenerator::e(i));
            gens.push_back(QGenerator::f(i));
        }
        for (const QGenerator& g : gens) {
            ExtOperator op{g.name(), 0,
                           [&sig, g](const ExtElement& phi) { return act_rho(sig, g, phi); }};
            out.push_back(to_matrix(op, sig, mode, d, N, basis));
        }
    } else {
        for (int i = 1; i <= sig.dim(); ++i)
            for (int j = 1; j <= sig.dim(); ++j) {
                ExtOperator op{"E_" + std::to_string(i) + std::to_string(j), 0,
                               [&sig, i, j](const ExtElement& phi) {
                                   return act_matrix_unit(sig, i, j, phi);
                               }};
                out.push_back(to_matrix(op, sig, mode, d, N, basis));
            }
    }
    return out;
}

namespace {

struct PipelineInput {
    std::vector<ExactMatrix> pi_gens;
    std::vector<ExactMatrix> pi_all;
    std::vector<ExactMatrix> span_ops;
    std::vector<ExactMatrix> dual_gens;  // only for k = 0
};

PipelineInput build_matrices(const SuperSig& sig, Mode mode, int d, int k) {
    const int N = d + k;
    const ModuleBasis basis = ext_basis_pairs(sig, d, N);
    PipelineInput in;
    in.pi_gens = pi_generator_matrices(sig, mode, d, N, basis);
    in.pi_all = pi_basis_matrices(sig, mode, d, N, basis);
    in.span_ops = span_adk_matrices(sig, mode, d, k, basis);
    if (k == 0)
        in.dual_gens = dual_algebra_generators(sig, mode, d, basis);
    return in;
}

template <class F>
void run_pipeline(const std::vector<Mat<F>>& pi_gens, const std::vector<Mat<F>>& pi_all,
                  const std::vector<Mat<F>>& span_ops, const std::vector<Mat<F>>& dual_gens,
                  int s, bool with_closure, DualityReport& rep) {
    auto [dim_comm, comm_basis] = commutant(pi_gens, s);
    rep.dim_commutant = dim_comm;

    bool contained = true;
    for (const auto& op : span_ops) {
        for (const auto& g : pi_gens)
            if (!commutator(op, g).is_zero()) {
                contained = false;
                break;
            }
        if (!contained)
            break;
    }
    rep.containment_checked = contained;

    auto [dim_span, span_b] = span_basis(span_ops);
    rep.dim_span_adk = dim_span;

    auto [dim_bicomm, bicomm_basis] = commutant(span_b, s);
    rep.dim_bicommutant = dim_bicomm;

    auto [dim_hecke, hecke_b] = span_basis(pi_all);
    rep.dim_hecke_image = dim_hecke;

    rep.passed = (rep.dim_commutant == rep.dim_span_adk) &&
                 (rep.dim_bicommutant == rep.dim_hecke_image) && rep.containment_checked;

    if (with_closure) {
        auto [dim_closure, closure_b] = algebra_closure(dual_gens, s);
        rep.dim_closure = dim_closure;
        bool cc = true;
        for (const auto& g : dual_gens) {
            for (const auto& p : pi_gens)
                if (!commutator(g, p).is_zero()) {
                    cc = false;
                    break;
                }
            if (!cc)
                break;
        }
        rep.closure_contained = cc;
    }
}

DualityReport make_report(const SuperSig& sig, Mode mode, int d, int k, int dim_cap) {
    if (d < 1 || k < 0 || k > d)
        throw std::invalid_argument("duality parameters out of range (need d >= 1, 0 <= k <= d)");
    DualityReport rep;
    rep.mode = mode;
    rep.m = sig.m;
    rep.n = sig.n;
    rep.d = d;
    rep.k = k;
    const long dim = module_dimension(sig, d, d + k);
    if (dim > dim_cap)
        throw ResourceCapError("module dimension " + std::to_string(dim) +
                               " exceeds cap " + std::to_string(dim_cap));
    rep.dim_module = static_cast<int>(dim);
    return rep;
}

}  // namespace

DualityReport verify_duality(const SuperSig& sig, Mode mode, int d, int k, int dim_cap) {
    DualityReport rep = make_report(sig, mode, d, k, dim_cap);
    PipelineInput in = build_matrices(sig, mode, d, k);
    run_pipeline(in.pi_gens, in.pi_all, in.span_ops, in.dual_gens, rep.dim_module, k == 0, rep);
    return rep;
}

DualityReport verify_duality_specialized(const SuperSig& sig, Mode mode, int d, int k,
                                         const Rational& a, int dim_cap) {
    if (!specialization_generic(a, d + k))
        throw std::invalid_argument("specialization not generic: some [j] vanishes at q = a");
    DualityReport rep = make_report(sig, mode, d, k, dim_cap);
    PipelineInput in = build_matrices(sig, mode, d, k);
    auto spec = [&a](const std::vector<ExactMatrix>& ms) {
        std::vector<Mat<Rational>> out;
        for (const auto& m : ms) {
            Mat<Rational> r(m.rows, m.cols);
            for (size_t i = 0; i < m.a.size(); ++i)
                r.a[i] = m.a[i].specialize(a);
            out.push_back(std::move(r));
        }
        return out;
    };
    run_pipeline(spec(in.pi_gens), spec(in.pi_all), spec(in.span_ops), spec(in.dual_gens),
                 rep.dim_module, k == 0, rep);
    return rep;
}

bool specialization_generic(const Rational& a, int bound) {
    for (int j = 1; j <= bound; ++j) {
        try {
            if (q_int(j).specialize(a).is_zero())
                return false;
        } catch (const std::domain_error&) {
            return false;  // pole of [j] at a (a = 0)
        }
    }
    return true;
}

}  // namespace qsd
