#pragma once

#include <random>
#include <vector>

#include "ebt/markov/decompose.hpp"
#include "ebt/tensor/operators.hpp"

namespace ebt {

namespace detail {
inline MatrixXc support_proj_of(const MatrixXc& rho, const Tolerances& tols) {
    Eigen::SelfAdjointEigenSolver<MatrixXc> es(rho);
    double lmax = es.eigenvalues().maxCoeff();
    std::size_t rank = 0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
        if (es.eigenvalues()[i] > tols.tau_rank * lmax) ++rank;
    MatrixXc v = es.eigenvectors().rightCols(rank);
    return v * v.adjoint();
}
}  // namespace detail

struct ProjectorFactorizationReport {
    double dev_ab = 0.0;  // ||P_AB - sum_j P_{A bl_j} (x) P_{br_j}||_op
    double dev_bc = 0.0;  // ||P_BC - sum_j P_{bl_j} (x) P_{br_j C}||_op
};

/// Verify the block form of the support projectors of a Markov chain.
inline ProjectorFactorizationReport verify_projector_factorization(
    const MarkovDecomposition& dec, const DensityOperator& rho_abc,
    const Tolerances& tols = default_tolerances()) {
    const std::size_t a = dec.dim_a, b = dec.dim_b, c = dec.dim_c;
    MatrixXc p_ab = detail::support_proj_of(partial_trace(rho_abc, {"A", "B"}).mat, tols);
    MatrixXc p_bc = detail::support_proj_of(partial_trace(rho_abc, {"B", "C"}).mat, tols);

    MatrixXc sum_ab = MatrixXc::Zero(a * b, a * b);
    MatrixXc sum_bc = MatrixXc::Zero(b * c, b * c);
    for (const auto& blk : dec.blocks) {
        MatrixXc p_abl = detail::support_proj_of(blk.rho_abl, tols);
        MatrixXc p_brc = detail::support_proj_of(blk.rho_brc, tols);
        MatrixXc p_bl = detail::support_proj_of(
            [&] {
                FactorSpace fs({"L", "R"}, {blk.bl, blk.br});
                DensityOperator d;
                d.space = fs;
                // marginal of rho_abl on L has trace 1; reuse partial_trace
                FactorSpace fal({"A", "L"}, {a, blk.bl});
                DensityOperator dal;
                dal.space = fal;
                dal.mat = blk.rho_abl;
                return partial_trace(dal, {"L"}).mat;
            }(),
            tols);
        MatrixXc p_br = detail::support_proj_of(
            [&] {
                FactorSpace frc({"R", "C"}, {blk.br, c});
                DensityOperator drc;
                drc.space = frc;
                drc.mat = blk.rho_brc;
                return partial_trace(drc, {"R"}).mat;
            }(),
            tols);
        // A (x) B side: conjugate (P_{A bl} (x) P_{br}) by I_A (x) V_j.
        MatrixXc va = detail::kron(MatrixXc::Identity(a, a), blk.isometry);
        sum_ab += va * detail::kron(p_abl, p_br) * va.adjoint();
        // B (x) C side: conjugate (P_{bl} (x) P_{br C}) by V_j (x) I_C.
        MatrixXc vc = detail::kron(blk.isometry, MatrixXc::Identity(c, c));
        sum_bc += vc * detail::kron(p_bl, p_brc) * vc.adjoint();
    }
    ProjectorFactorizationReport rep;
    rep.dev_ab = operator_norm_hermitian(p_ab - sum_ab, tols);
    rep.dev_bc = operator_norm_hermitian(p_bc - sum_bc, tols);
    return rep;
}

struct CommutationReport {
    double cmi_bits = 0.0;
    double commutator_norm = 0.0;  // ||[P_AB, P_BC]||_op on ABC
};

/// Prop.-2 style check: support projectors of the AB and BC marginals,
/// embedded into ABC, must commute when I(A:C|B) = 0.
inline CommutationReport check_commutation(const DensityOperator& rho_abc,
                                           const Tolerances& tols = default_tolerances()) {
    CommutationReport rep;
    rep.cmi_bits = cmi_bits(rho_abc, {"A"}, {"B"}, {"C"}, tols);
    auto p_ab = support_projector(partial_trace(rho_abc, {"A", "B"}), tols);
    auto p_bc = support_projector(partial_trace(rho_abc, {"B", "C"}), tols);
    Projector pab_f = embed(p_ab.projector, rho_abc.space);
    Projector pbc_f = embed(p_bc.projector, rho_abc.space);
    rep.commutator_norm = commutator_norm(pab_f, pbc_f, tols);
    return rep;
}

struct ProductLemmaReport {
    double cmi_bits = 0.0;
    double deviation = 0.0;      // ||P_ABC - P_AB P_BC||_op
    double idempotency = 0.0;    // ||(P_AB P_BC)^2 - P_AB P_BC||_op
    double min_eigenvalue = 0.0; // of (I-P_AB) + (I-P_BC) - (I - P_AB P_BC)
};

/// Lemma-3 style check: P_ABC = P_AB P_BC for Markov states, with the
/// resulting projector inequality (I-P_AB) + (I-P_BC) >= I - P_ABC.
inline ProductLemmaReport check_product_lemma(const DensityOperator& rho_abc,
                                              const Tolerances& tols = default_tolerances()) {
    ProductLemmaReport rep;
    rep.cmi_bits = cmi_bits(rho_abc, {"A"}, {"B"}, {"C"}, tols);
    auto p_ab = embed(support_projector(partial_trace(rho_abc, {"A", "B"}), tols).projector,
                      rho_abc.space);
    auto p_bc = embed(support_projector(partial_trace(rho_abc, {"B", "C"}), tols).projector,
                      rho_abc.space);
    MatrixXc p_abc = detail::support_proj_of(rho_abc.mat, tols);
    MatrixXc prod = p_ab.mat * p_bc.mat;
    rep.deviation = MatrixXc(p_abc - prod).jacobiSvd().singularValues().maxCoeff();
    rep.idempotency = MatrixXc(prod * prod - prod).jacobiSvd().singularValues().maxCoeff();
    const std::size_t d = rho_abc.space.dim();
    MatrixXc lhs = (MatrixXc::Identity(d, d) - p_ab.mat) +
                   (MatrixXc::Identity(d, d) - p_bc.mat) -
                   (MatrixXc::Identity(d, d) - p_abc);
    rep.min_eigenvalue = hermitian_eigenvalues(0.5 * (lhs + lhs.adjoint()), tols).minCoeff();
    return rep;
}

struct SandwichLemmaReport {
    bool applicable = false;
    double precondition_bits = 0.0;  // S(C) + S(B|C)
    double max_deviation = 0.0;      // max_tau tracedist(tau_C, rho_C)
    std::size_t samples = 0;
};

/// Lemma-1 style check on rho_BC with S(C) + S(B|C) = 0: every density matrix
/// in supp(rho_BC) has the same C marginal as rho_BC.
inline SandwichLemmaReport check_sandwich_lemma(const DensityOperator& rho_bc,
                                                std::size_t samples = 20, uint64_t seed = 0,
                                                const Tolerances& tols = default_tolerances()) {
    SandwichLemmaReport rep;
    rep.samples = samples;
    // S(C) + S(B|C) = S(BC)
    rep.precondition_bits = entropy_bits(rho_bc, tols);
    rep.applicable = rep.precondition_bits <= tols.eps_cmi_bits;
    if (!rep.applicable) return rep;

    MatrixXc pi = detail::support_proj_of(rho_bc.mat, tols);
    MatrixXc rho_c = partial_trace(rho_bc, {"C"}).mat;
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 5);
    for (std::size_t k = 0; k < samples; ++k) {
        MatrixXc raw = detail::random_density(rho_bc.space.dim(), rng);
        MatrixXc tau = pi * raw * pi;
        tau /= tau.trace().real();
        DensityOperator dtau;
        dtau.space = rho_bc.space;
        dtau.mat = tau;
        MatrixXc tau_c = partial_trace(dtau, {"C"}).mat;
        rep.max_deviation = std::max(rep.max_deviation, trace_distance(tau_c, rho_c, tols));
    }
    return rep;
}

struct MergeLemmaReport {
    bool applicable = false;
    double cmi_rho = 0.0, cmi_sigma = 0.0;
    double dist_ab = 0.0, dist_bc = 0.0;  // ||rho_AB - sigma_AB||_1 etc.
    double dist_full = 0.0;               // ||rho_ABC - sigma_ABC||_1
};

/// Lemma-2 style check: two Markov chains with equal AB and BC marginals are
/// equal. Distances reported as trace norms.
inline MergeLemmaReport check_merge_lemma(const DensityOperator& rho, const DensityOperator& sigma,
                                          double tol = 1e-8,
                                          const Tolerances& tols = default_tolerances()) {
    MergeLemmaReport rep;
    rep.cmi_rho = cmi_bits(rho, {"A"}, {"B"}, {"C"}, tols);
    rep.cmi_sigma = cmi_bits(sigma, {"A"}, {"B"}, {"C"}, tols);
    rep.dist_ab = 2.0 * trace_distance(partial_trace(rho, {"A", "B"}).mat,
                                       partial_trace(sigma, {"A", "B"}).mat, tols);
    rep.dist_bc = 2.0 * trace_distance(partial_trace(rho, {"B", "C"}).mat,
                                       partial_trace(sigma, {"B", "C"}).mat, tols);
    rep.dist_full = 2.0 * trace_distance(rho.mat, sigma.mat, tols);
    rep.applicable = rep.cmi_rho <= tol && rep.cmi_sigma <= tol && rep.dist_ab <= tol &&
                     rep.dist_bc <= tol;
    return rep;
}

}  // namespace ebt
