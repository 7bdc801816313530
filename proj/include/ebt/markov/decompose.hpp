#pragma once

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "ebt/markov/generate.hpp"
#include "ebt/tensor/operators.hpp"

namespace ebt {

struct MarkovBlock {
    double weight = 0.0;
    std::size_t bl = 1, br = 1;
    MatrixXc isometry;   // dim(B) x (bl*br), columns orthonormal
    MatrixXc rho_abl;    // on A (x) bl
    MatrixXc rho_brc;    // on br (x) C
};

/// Structure decomposition of a quantum Markov chain: an orthogonal block
/// split of supp(rho_B) with each block factored so that
/// rho_ABC = sum_j q_j rho_{A bl_j} (x) rho_{br_j C}.
struct MarkovDecomposition {
    std::vector<MarkovBlock> blocks;
    std::size_t dim_a = 0, dim_b = 0, dim_c = 0;

    MatrixXc reconstruct() const {
        MatrixXc rho = MatrixXc::Zero(dim_a * dim_b * dim_c, dim_a * dim_b * dim_c);
        for (const auto& blk : blocks) {
            MatrixXc term = detail::kron(blk.rho_abl, blk.rho_brc);
            MatrixXc m = detail::kron(
                detail::kron(MatrixXc::Identity(dim_a, dim_a), blk.isometry),
                MatrixXc::Identity(dim_c, dim_c));
            rho += blk.weight * (m * term * m.adjoint());
        }
        return rho;
    }
};

struct NotMarkovError : std::runtime_error {
    explicit NotMarkovError(const std::string& msg) : std::runtime_error(msg) {}
};
struct DecompositionError : std::runtime_error {
    explicit DecompositionError(const std::string& msg) : std::runtime_error(msg) {}
};

namespace detail {

/// Hilbert-Schmidt orthonormal closure of a *-algebra given Hermitian
/// generators. Returns an orthonormal basis (HS inner product) of the span.
inline std::vector<MatrixXc> star_algebra_basis(std::vector<MatrixXc> gens, std::size_t dim,
                                                double tol = 1e-9) {
    std::vector<MatrixXc> basis;
    auto add = [&](MatrixXc m) {
        for (const auto& b : basis) {
            Complex ip = (b.adjoint() * m).trace();
            m -= ip * b;
        }
        double nrm = std::sqrt(std::abs((m.adjoint() * m).trace().real()));
        if (nrm > tol) {
            basis.push_back(m / nrm);
            return true;
        }
        return false;
    };
    add(MatrixXc::Identity(dim, dim));
    for (auto& g : gens) add(std::move(g));
    bool grew = true;
    while (grew) {
        grew = false;
        const std::size_t k = basis.size();
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                if (add(basis[i] * basis[j])) grew = true;
        if (basis.size() > dim * dim)
            throw DecompositionError("algebra closure exceeded full dimension");
    }
    return basis;
}

/// Basis of the center of the algebra spanned by `basis` (coefficient-space
/// kernel of the commutator map).
inline std::vector<MatrixXc> algebra_center(const std::vector<MatrixXc>& basis,
                                            std::size_t dim) {
    const std::size_t k = basis.size();
    MatrixXc sys(k * dim * dim, k);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < k; ++i) {
            MatrixXc comm = basis[j] * basis[i] - basis[i] * basis[j];
            for (Eigen::Index p = 0; p < comm.rows(); ++p)
                for (Eigen::Index q = 0; q < comm.cols(); ++q)
                    sys(i * dim * dim + p * dim + q, j) = comm(p, q);
        }
    Eigen::JacobiSVD<MatrixXc> svd(sys, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    double smax = sv.size() ? sv(0) : 0.0;
    std::vector<MatrixXc> out;
    for (Eigen::Index c = 0; c < svd.matrixV().cols(); ++c) {
        if (c < sv.size() && sv(c) > 1e-8 * std::max(1.0, smax)) continue;
        MatrixXc z = MatrixXc::Zero(dim, dim);
        for (std::size_t j = 0; j < k; ++j) z += svd.matrixV()(j, c) * basis[j];
        out.push_back(std::move(z));
    }
    return out;
}

/// Cluster sorted eigenvalues by gaps; returns cluster index per eigenvalue.
inline std::vector<std::size_t> cluster_eigenvalues(const VectorXd& ev, double tol) {
    std::vector<std::size_t> cl(ev.size(), 0);
    std::size_t c = 0;
    for (Eigen::Index i = 1; i < ev.size(); ++i) {
        if (ev[i] - ev[i - 1] > tol) ++c;
        cl[i] = c;
    }
    return cl;
}

}  // namespace detail

/// Recover the block decomposition of a quantum Markov chain. The algebra of
/// A-side conditional operators on supp(rho_B) is generated, split by the
/// spectrum of a random central element (two seeded draws must agree), and
/// each block is factored into bl (x) br by eigenbasis alignment.
inline MarkovDecomposition markov_decompose(const DensityOperator& rho_abc, double tol = 1e-8,
                                            uint64_t seed = 0,
                                            const Tolerances& tols = default_tolerances()) {
    const std::size_t a = rho_abc.space.dim_of("A");
    const std::size_t b = rho_abc.space.dim_of("B");
    const std::size_t c = rho_abc.space.dim_of("C");

    double cmi = cmi_bits(rho_abc, {"A"}, {"B"}, {"C"}, tols);
    if (cmi > tol)
        throw NotMarkovError("markov_decompose: I(A:C|B) = " + std::to_string(cmi) + " bits");

    DensityOperator rho_ab = partial_trace(rho_abc, {"A", "B"});
    DensityOperator rho_b = partial_trace(rho_abc, {"B"});

    // Support compression of B.
    Eigen::SelfAdjointEigenSolver<MatrixXc> esb(rho_b.mat);
    std::size_t s = 0;
    for (Eigen::Index i = 0; i < esb.eigenvalues().size(); ++i)
        if (esb.eigenvalues()[i] > tols.tau_rank) ++s;
    MatrixXc vb = esb.eigenvectors().rightCols(s);  // b x s
    VectorXd evb = esb.eigenvalues().tail(s);
    MatrixXc rb_inv_half = MatrixXc::Zero(s, s);
    for (std::size_t i = 0; i < s; ++i) rb_inv_half(i, i) = 1.0 / std::sqrt(evb[i]);

    // Conditional operator family {rb^{-1/2} Tr_A[(X_A (x) I) rho_AB] rb^{-1/2}}.
    MatrixXc vab = detail::kron(MatrixXc::Identity(a, a), vb);
    MatrixXc rho_ab_c = vab.adjoint() * rho_ab.mat * vab;  // compressed to A (x) supp
    std::vector<MatrixXc> gens;
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < a; ++j) {
            // Tr_A[(E_ij (x) I) rho] = sum over the A index: block (j,i) pattern
            MatrixXc t = MatrixXc::Zero(s, s);
            t = rho_ab_c.block(j * s, i * s, s, s);
            if (i == j) {
                gens.push_back(rb_inv_half * t * rb_inv_half);
            } else {
                MatrixXc tt = rho_ab_c.block(i * s, j * s, s, s);
                gens.push_back(rb_inv_half * (t + tt) * rb_inv_half);
                gens.push_back(rb_inv_half * (Complex(0, 1) * (t - tt)) * rb_inv_half);
            }
        }
    auto basis = detail::star_algebra_basis(std::move(gens), s);
    auto center = detail::algebra_center(basis, s);

    // Block projectors from the spectrum of a random Hermitian central
    // element; two independent draws must agree on the block structure.
    struct Draw {
        std::vector<std::vector<std::size_t>> groups;
        MatrixXc eigvecs;
    };
    auto draw_blocks = [&](uint64_t which) -> Draw {
        std::mt19937_64 rng(seed * 0x2545f4914f6cdd1dull + which + 1);
        std::normal_distribution<double> g;
        MatrixXc z = MatrixXc::Zero(s, s);
        for (auto& zc : center) {
            z += g(rng) * MatrixXc(0.5 * (zc + zc.adjoint()));
            z += g(rng) * MatrixXc(Complex(0, 0.5) * (zc - zc.adjoint()));
        }
        Eigen::SelfAdjointEigenSolver<MatrixXc> es(z);
        double span = es.eigenvalues().maxCoeff() - es.eigenvalues().minCoeff();
        auto cl = detail::cluster_eigenvalues(es.eigenvalues(), 1e-7 * std::max(1.0, span));
        std::size_t nc = cl.empty() ? 0 : cl.back() + 1;
        Draw d;
        d.groups.resize(nc);
        for (std::size_t i = 0; i < cl.size(); ++i) d.groups[cl[i]].push_back(i);
        d.eigvecs = es.eigenvectors();
        return d;
    };

    std::vector<std::vector<std::size_t>> groups;
    MatrixXc block_vecs;
    bool ok = false;
    for (uint64_t attempt = 0; attempt < 5 && !ok; ++attempt) {
        Draw g1 = draw_blocks(2 * attempt);
        Draw g2 = draw_blocks(2 * attempt + 1);
        std::vector<std::size_t> d1, d2;
        for (auto& g : g1.groups) d1.push_back(g.size());
        for (auto& g : g2.groups) d2.push_back(g.size());
        std::sort(d1.begin(), d1.end());
        std::sort(d2.begin(), d2.end());
        if (d1 == d2) {
            groups = g1.groups;
            block_vecs = g1.eigvecs;
            ok = true;
        }
    }
    if (!ok) throw DecompositionError("center probing did not stabilize");

    MarkovDecomposition dec;
    dec.dim_a = a;
    dec.dim_b = b;
    dec.dim_c = c;

    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 17);
    std::normal_distribution<double> g;

    for (auto& grp : groups) {
        const std::size_t m = grp.size();
        MatrixXc bj(s, m);  // block basis inside supp(B)
        for (std::size_t i = 0; i < m; ++i) bj.col(i) = block_vecs.col(grp[i]);

        // Restricted algebra and a generic Hermitian element of it.
        std::vector<MatrixXc> restr;
        for (auto& v : basis) restr.push_back(bj.adjoint() * v * bj);

        std::size_t d1 = 0, d2 = 0;
        MatrixXc uvecs;  // m x m eigenvectors of the generic element
        std::vector<std::vector<std::size_t>> clusters;
        bool fine = false;
        for (int attempt = 0; attempt < 8 && !fine; ++attempt) {
            MatrixXc ge = MatrixXc::Zero(m, m);
            for (auto& v : restr) {
                ge += g(rng) * MatrixXc(0.5 * (v + v.adjoint()));
                ge += g(rng) * MatrixXc(Complex(0, 0.5) * (v - v.adjoint()));
            }
            Eigen::SelfAdjointEigenSolver<MatrixXc> es(ge);
            double span = es.eigenvalues().maxCoeff() - es.eigenvalues().minCoeff();
            auto cl = detail::cluster_eigenvalues(es.eigenvalues(),
                                                  1e-7 * std::max(1.0, span));
            std::size_t nc = cl.empty() ? 0 : cl.back() + 1;
            std::vector<std::vector<std::size_t>> grps(nc);
            for (std::size_t i = 0; i < cl.size(); ++i) grps[cl[i]].push_back(i);
            std::size_t mult = grps[0].size();
            bool equal = true;
            for (auto& gg : grps) equal = equal && (gg.size() == mult);
            if (!equal || nc * mult != m) continue;
            d1 = nc;
            d2 = mult;
            uvecs = es.eigenvectors();
            clusters = grps;
            fine = true;
        }
        if (!fine) throw DecompositionError("block factorization did not converge");

        // Align cluster bases with a second generic element so the algebra
        // becomes full-matrix (x) identity.
        std::vector<MatrixXc> uk(d1);
        for (std::size_t k = 0; k < d1; ++k) {
            uk[k] = MatrixXc(m, d2);
            for (std::size_t i = 0; i < d2; ++i) uk[k].col(i) = uvecs.col(clusters[k][i]);
        }
        if (d1 > 1) {
            bool aligned = false;
            for (int attempt = 0; attempt < 8 && !aligned; ++attempt) {
                MatrixXc he = MatrixXc::Zero(m, m);
                for (auto& v : restr) {
                    he += g(rng) * MatrixXc(0.5 * (v + v.adjoint()));
                    he += g(rng) * MatrixXc(Complex(0, 0.5) * (v - v.adjoint()));
                }
                aligned = true;
                std::vector<MatrixXc> uk_new = uk;
                for (std::size_t k = 1; k < d1; ++k) {
                    MatrixXc hk = uk[k].adjoint() * he * uk[0];  // ~ h_{k0} * unitary
                    Eigen::JacobiSVD<MatrixXc> svd(hk, Eigen::ComputeFullU | Eigen::ComputeFullV);
                    double smin = svd.singularValues().minCoeff();
                    double smax = svd.singularValues().maxCoeff();
                    if (smax <= 0 || smin < 1e-6 * smax) {
                        aligned = false;
                        break;
                    }
                    MatrixXc q = svd.matrixU() * svd.matrixV().adjoint();
                    uk_new[k] = uk[k] * q;
                }
                if (aligned) uk = uk_new;
            }
            if (!aligned) throw DecompositionError("cluster alignment did not converge");
        }

        MarkovBlock blk;
        blk.bl = d1;
        blk.br = d2;
        blk.isometry = MatrixXc(b, d1 * d2);
        for (std::size_t k = 0; k < d1; ++k)
            for (std::size_t i = 0; i < d2; ++i) blk.isometry.col(k * d2 + i) = vb * uk[k].col(i);

        // Weight and factor states.
        MatrixXc pj = blk.isometry * blk.isometry.adjoint();
        blk.weight = (pj * rho_b.mat).trace().real();
        MatrixXc mj = detail::kron(detail::kron(MatrixXc::Identity(a, a), blk.isometry),
                                   MatrixXc::Identity(c, c));
        MatrixXc sigma = (mj.adjoint() * rho_abc.mat * mj) / blk.weight;  // on A,bl,br,C
        // Partial traces on the 4-factor ordering (a, d1, d2, c).
        FactorSpace fs({"A", "L", "R", "C"}, {a, d1, d2, c});
        DensityOperator sig;
        sig.space = fs;
        sig.mat = std::move(sigma);
        blk.rho_abl = partial_trace(sig, {"A", "L"}).mat;
        blk.rho_brc = partial_trace(sig, {"R", "C"}).mat;
        dec.blocks.push_back(std::move(blk));
    }

    // Reconstruction is the correctness gate.
    double dist = trace_distance(dec.reconstruct(), rho_abc.mat, tols);
    if (dist > 100 * tol)
        throw DecompositionError("reconstruction residual " + std::to_string(dist));
    return dec;
}

}  // namespace ebt
