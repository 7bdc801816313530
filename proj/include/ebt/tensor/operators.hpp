#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "ebt/tensor/space.hpp"
#include "ebt/tolerances.hpp"

namespace ebt {

using Complex = std::complex<double>;
using MatrixXc = Eigen::MatrixXcd;
using VectorXd = Eigen::VectorXd;

namespace detail {

inline void check_hermitian(const MatrixXc& m, double tol, const char* who) {
    if (m.rows() != m.cols()) throw std::invalid_argument(std::string(who) + ": not square");
    double dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (dev > tol)
        throw std::invalid_argument(std::string(who) + ": not Hermitian, dev=" +
                                    std::to_string(dev));
}

/// Decompose a flat index into per-factor digits (row-major).
inline void decompose_index(std::size_t idx, const std::vector<std::size_t>& dims,
                            std::vector<std::size_t>& out) {
    for (std::size_t i = dims.size(); i-- > 0;) {
        out[i] = idx % dims[i];
        idx /= dims[i];
    }
}

}  // namespace detail

/// Dense density operator over labeled factors: Hermitian, PSD, unit trace
/// (all to tolerance).
struct DensityOperator {
    FactorSpace space;
    MatrixXc mat;

    DensityOperator() = default;
    DensityOperator(FactorSpace s, MatrixXc m, const Tolerances& tol = default_tolerances())
        : space(std::move(s)), mat(std::move(m)) {
        if (static_cast<std::size_t>(mat.rows()) != space.dim())
            throw std::invalid_argument("DensityOperator: matrix/space dim mismatch");
        detail::check_hermitian(mat, tol.herm_tol, "DensityOperator");
        if (std::abs(mat.trace().real() - 1.0) > tol.trace_tol ||
            std::abs(mat.trace().imag()) > tol.trace_tol)
            throw std::invalid_argument("DensityOperator: trace != 1");
    }
};

/// Dense projector over labeled factors: Hermitian idempotent to tolerance.
struct Projector {
    FactorSpace space;
    MatrixXc mat;

    Projector() = default;
    Projector(FactorSpace s, MatrixXc m, const Tolerances& tol = default_tolerances())
        : space(std::move(s)), mat(std::move(m)) {
        if (static_cast<std::size_t>(mat.rows()) != space.dim())
            throw std::invalid_argument("Projector: matrix/space dim mismatch");
        detail::check_hermitian(mat, tol.herm_tol, "Projector");
        double dev = (mat * mat - mat).cwiseAbs().maxCoeff();
        if (dev > tol.proj_tol)
            throw std::invalid_argument("Projector: not idempotent, dev=" + std::to_string(dev));
    }

    std::size_t rank() const { return static_cast<std::size_t>(std::llround(mat.trace().real())); }
};

/// op (x) identity on target's missing factors, reordered to target's label
/// order. Density operators are not renormalized: the trace scales by the
/// product of the added dimensions.
inline MatrixXc embed_matrix(const MatrixXc& m, const FactorSpace& from, const FactorSpace& to) {
    for (auto& l : from.labels())
        if (!to.has_label(l) || to.dim_of(l) != from.dim_of(l))
            throw std::invalid_argument("embed: label/dim mismatch for " + l);
    const std::size_t dt = to.dim();
    const std::size_t df = from.dim();
    // Position of each target factor: in `from` (index) or missing.
    const auto& tl = to.labels();
    std::vector<long> from_pos(tl.size(), -1);
    for (std::size_t i = 0; i < tl.size(); ++i)
        if (from.has_label(tl[i])) from_pos[i] = static_cast<long>(from.index_of(tl[i]));

    // Strides of `to` per target factor, and of `from` per from-factor.
    auto tstr = to.strides();
    auto fstr = from.strides();
    std::vector<std::size_t> fdims = from.dims();

    // For every (row, col) of the small matrix and every assignment of the
    // missing factors, scatter into the big matrix.
    std::size_t dmiss = dt / df;
    MatrixXc out = MatrixXc::Zero(dt, dt);
    std::vector<std::size_t> fidx(from.num_factors()), gidx(from.num_factors());
    std::vector<std::size_t> missing;  // target factor positions not in from
    for (std::size_t i = 0; i < tl.size(); ++i)
        if (from_pos[i] < 0) missing.push_back(i);

    for (std::size_t a = 0; a < df; ++a) {
        detail::decompose_index(a, fdims, fidx);
        for (std::size_t b = 0; b < df; ++b) {
            Complex v = m(a, b);
            if (v == Complex(0)) continue;
            detail::decompose_index(b, fdims, gidx);
            std::size_t base_r = 0, base_c = 0;
            for (std::size_t i = 0; i < tl.size(); ++i)
                if (from_pos[i] >= 0) {
                    base_r += fidx[from_pos[i]] * tstr[i];
                    base_c += gidx[from_pos[i]] * tstr[i];
                }
            // identity over missing factors
            for (std::size_t mi = 0; mi < dmiss; ++mi) {
                std::size_t rem = mi, off = 0;
                for (std::size_t k = missing.size(); k-- > 0;) {
                    std::size_t dk = to.dims()[missing[k]];
                    off += (rem % dk) * tstr[missing[k]];
                    rem /= dk;
                }
                out(base_r + off, base_c + off) += v;
            }
        }
    }
    return out;
}

inline DensityOperator embed(const DensityOperator& op, const FactorSpace& target) {
    MatrixXc m = embed_matrix(op.mat, op.space, target);
    // not renormalized; bypass trace validation
    DensityOperator out;
    out.space = target;
    out.mat = std::move(m);
    return out;
}

inline Projector embed(const Projector& op, const FactorSpace& target) {
    return Projector(target, embed_matrix(op.mat, op.space, target));
}

/// Partial trace keeping the given labels (result ordered per `keep`).
inline DensityOperator partial_trace(const DensityOperator& state,
                                     const std::vector<std::string>& keep) {
    const FactorSpace& sp = state.space;
    FactorSpace out_space = sp.subspace(keep);
    // Order kept factors as they appear in the original space, then permute
    // to the requested order via index arithmetic (we build directly in the
    // subspace order of `out_space`, which preserves sp order).
    std::vector<std::size_t> kpos, tpos;
    for (std::size_t i = 0; i < sp.num_factors(); ++i) {
        if (out_space.has_label(sp.labels()[i]))
            kpos.push_back(i);
        else
            tpos.push_back(i);
    }
    auto str = sp.strides();
    std::size_t dk = out_space.dim();
    std::size_t dt = sp.dim() / dk;
    auto kdims = out_space.dims();
    std::vector<std::size_t> kidx(kpos.size()), lidx(kpos.size());

    MatrixXc out = MatrixXc::Zero(dk, dk);
    for (std::size_t a = 0; a < dk; ++a) {
        detail::decompose_index(a, kdims, kidx);
        std::size_t base_r = 0;
        for (std::size_t i = 0; i < kpos.size(); ++i) base_r += kidx[i] * str[kpos[i]];
        for (std::size_t b = 0; b < dk; ++b) {
            detail::decompose_index(b, kdims, lidx);
            std::size_t base_c = 0;
            for (std::size_t i = 0; i < kpos.size(); ++i) base_c += lidx[i] * str[kpos[i]];
            Complex acc(0);
            for (std::size_t t = 0; t < dt; ++t) {
                std::size_t rem = t, off = 0;
                for (std::size_t k = tpos.size(); k-- > 0;) {
                    std::size_t dkk = sp.dims()[tpos[k]];
                    off += (rem % dkk) * str[tpos[k]];
                    rem /= dkk;
                }
                acc += state.mat(base_r + off, base_c + off);
            }
            out(a, b) = acc;
        }
    }
    DensityOperator res;
    res.space = std::move(out_space);
    res.mat = std::move(out);
    return res;
}

inline VectorXd hermitian_eigenvalues(const MatrixXc& m, const Tolerances& tol) {
    if (static_cast<std::size_t>(m.rows()) > tol.eig_dim_cap)
        throw std::invalid_argument("spectral op: dimension exceeds eigendecomposition cap");
    Eigen::SelfAdjointEigenSolver<MatrixXc> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues();
}

/// Von Neumann entropy in bits over eigenvalues above tau_rank.
inline double entropy_bits(const DensityOperator& state,
                           const Tolerances& tol = default_tolerances()) {
    VectorXd ev = hermitian_eigenvalues(state.mat, tol);
    if (ev.minCoeff() < -tol.psd_tol)
        throw std::invalid_argument("entropy: state not PSD, min eig=" +
                                    std::to_string(ev.minCoeff()));
    double s = 0.0;
    for (Eigen::Index i = 0; i < ev.size(); ++i)
        if (ev[i] > tol.tau_rank) s -= ev[i] * std::log2(ev[i]);
    return s;
}

inline double entropy_bits(const DensityOperator& state, const std::vector<std::string>& keep,
                           const Tolerances& tol = default_tolerances()) {
    return entropy_bits(partial_trace(state, keep), tol);
}

/// I(A:C|B) in bits.
inline double cmi_bits(const DensityOperator& state, const std::vector<std::string>& a,
                       const std::vector<std::string>& b, const std::vector<std::string>& c,
                       const Tolerances& tol = default_tolerances()) {
    auto cat = [](std::vector<std::string> x, const std::vector<std::string>& y) {
        x.insert(x.end(), y.begin(), y.end());
        return x;
    };
    for (auto& la : a)
        for (auto& lb : b)
            if (la == lb) throw std::invalid_argument("cmi: A,B overlap");
    for (auto& la : a)
        for (auto& lc : c)
            if (la == lc) throw std::invalid_argument("cmi: A,C overlap");
    for (auto& lb : b)
        for (auto& lc : c)
            if (lb == lc) throw std::invalid_argument("cmi: B,C overlap");
    return entropy_bits(state, cat(a, b), tol) + entropy_bits(state, cat(b, c), tol) -
           entropy_bits(state, b, tol) - entropy_bits(state, cat(cat(a, b), c), tol);
}

/// S(A|B) + S(A|C) in bits; >= 0 for every tripartite state (weak
/// monotonicity).
inline double weak_monotonicity_slack_bits(const DensityOperator& state,
                                           const std::vector<std::string>& a,
                                           const std::vector<std::string>& b,
                                           const std::vector<std::string>& c,
                                           const Tolerances& tol = default_tolerances()) {
    auto cat = [](std::vector<std::string> x, const std::vector<std::string>& y) {
        x.insert(x.end(), y.begin(), y.end());
        return x;
    };
    return entropy_bits(state, cat(a, b), tol) - entropy_bits(state, b, tol) +
           entropy_bits(state, cat(a, c), tol) - entropy_bits(state, c, tol);
}

struct SupportProjectorResult {
    Projector projector;
    std::size_t rank = 0;
    bool ill_conditioned = false;  // spectral gap around the cutoff too small
};

/// Projector onto the span of eigenvectors with eigenvalue > tau * lambda_max.
inline SupportProjectorResult support_projector(const DensityOperator& state, double tau_rank,
                                                const Tolerances& tol = default_tolerances()) {
    if (static_cast<std::size_t>(state.mat.rows()) > tol.eig_dim_cap)
        throw std::invalid_argument("support_projector: dimension exceeds cap");
    Eigen::SelfAdjointEigenSolver<MatrixXc> es(state.mat);
    const VectorXd& ev = es.eigenvalues();
    if (ev.minCoeff() < -tol.psd_tol)
        throw std::invalid_argument("support_projector: state not PSD");
    double lmax = ev.maxCoeff();
    double cutoff = tau_rank * lmax;
    std::size_t rank = 0;
    double largest_dropped = 0.0, smallest_kept = lmax;
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        if (ev[i] > cutoff) {
            ++rank;
            smallest_kept = std::min(smallest_kept, ev[i]);
        } else {
            largest_dropped = std::max(largest_dropped, ev[i]);
        }
    }
    bool warn = (smallest_kept - largest_dropped) < 10.0 * cutoff;
    const std::size_t d = static_cast<std::size_t>(ev.size());
    MatrixXc v = es.eigenvectors().rightCols(rank);  // eigenvalues ascending
    MatrixXc p = v * v.adjoint();
    SupportProjectorResult res;
    res.projector = Projector(state.space, std::move(p), tol);
    res.rank = rank;
    res.ill_conditioned = warn && rank < d;
    return res;
}

inline SupportProjectorResult support_projector(const DensityOperator& state,
                                                const Tolerances& tol = default_tolerances()) {
    return support_projector(state, tol.tau_rank, tol);
}

/// Operator norm of PQ - QP (i[P,Q] is Hermitian, so use its spectrum).
inline double commutator_norm(const Projector& p, const Projector& q,
                              const Tolerances& tol = default_tolerances()) {
    if (!(p.space == q.space))
        throw std::invalid_argument("commutator_norm: spaces differ (embed first)");
    MatrixXc c = Complex(0, 1) * (p.mat * q.mat - q.mat * p.mat);
    VectorXd ev = hermitian_eigenvalues(c, tol);
    return std::max(std::abs(ev.minCoeff()), std::abs(ev.maxCoeff()));
}

inline double operator_norm_hermitian(const MatrixXc& m, const Tolerances& tol) {
    VectorXd ev = hermitian_eigenvalues(m, tol);
    return std::max(std::abs(ev.minCoeff()), std::abs(ev.maxCoeff()));
}

/// Trace distance (1/2)||rho - sigma||_1 via the spectrum of the difference.
inline double trace_distance(const MatrixXc& a, const MatrixXc& b,
                             const Tolerances& tol = default_tolerances()) {
    VectorXd ev = hermitian_eigenvalues(a - b, tol);
    double s = 0.0;
    for (Eigen::Index i = 0; i < ev.size(); ++i) s += std::abs(ev[i]);
    return 0.5 * s;
}

struct ModularCommutatorResult {
    double value = 0.0;          // J(A,B,C) = i tr(rho [K_AB, K_BC])
    double imag_residue = 0.0;   // |imaginary part| of the raw trace expression
};

/// Modular commutator with K_X = -ln rho_X on supp(rho_X), embedded into ABC.
inline ModularCommutatorResult modular_commutator(const DensityOperator& state,
                                                  const std::vector<std::string>& a,
                                                  const std::vector<std::string>& b,
                                                  const std::vector<std::string>& c,
                                                  const Tolerances& tol = default_tolerances()) {
    auto cat = [](std::vector<std::string> x, const std::vector<std::string>& y) {
        x.insert(x.end(), y.begin(), y.end());
        return x;
    };
    std::vector<std::string> abc = cat(cat(a, b), c);
    DensityOperator rho_abc = partial_trace(state, abc);
    auto modular_hamiltonian = [&](const std::vector<std::string>& keep) {
        DensityOperator rho = partial_trace(state, keep);
        Eigen::SelfAdjointEigenSolver<MatrixXc> es(rho.mat);
        const VectorXd& ev = es.eigenvalues();
        MatrixXc k = MatrixXc::Zero(rho.mat.rows(), rho.mat.cols());
        for (Eigen::Index i = 0; i < ev.size(); ++i) {
            if (ev[i] > tol.tau_rank) {
                MatrixXc vi = es.eigenvectors().col(i);
                k -= std::log(ev[i]) * (vi * vi.adjoint());
            }
        }
        DensityOperator wrap;  // reuse embed for plain Hermitian operators
        wrap.space = rho.space;
        wrap.mat = std::move(k);
        return wrap;
    };
    DensityOperator kab = modular_hamiltonian(cat(a, b));
    DensityOperator kbc = modular_hamiltonian(cat(b, c));
    MatrixXc kab_f = embed_matrix(kab.mat, kab.space, rho_abc.space);
    MatrixXc kbc_f = embed_matrix(kbc.mat, kbc.space, rho_abc.space);
    Complex tr = (rho_abc.mat * (kab_f * kbc_f - kbc_f * kab_f)).trace();
    Complex j = Complex(0, 1) * tr;
    ModularCommutatorResult res;
    res.value = j.real();
    res.imag_residue = std::abs(j.imag());
    return res;
}

}  // namespace ebt
