#pragma once

#include <random>
#include <stdexcept>
#include <vector>

#include "ebt/tensor/operators.hpp"

namespace ebt {

struct MarkovBlockSpec {
    std::size_t bl = 1, br = 1;  // factor dims inside B
    double weight = 1.0;
};

struct MarkovStateSpec {
    std::size_t dim_a = 2, dim_c = 2;
    std::vector<MarkovBlockSpec> blocks;
    uint64_t seed = 0;

    std::size_t dim_b() const {
        std::size_t d = 0;
        for (auto& b : blocks) d += b.bl * b.br;
        return d;
    }
};

namespace detail {

inline MatrixXc random_density(std::size_t d, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    MatrixXc m(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m(i, j) = Complex(g(rng), g(rng));
    MatrixXc rho = m * m.adjoint();
    rho /= rho.trace().real();
    return rho;
}

inline MatrixXc random_unitary(std::size_t d, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    MatrixXc m(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m(i, j) = Complex(g(rng), g(rng));
    Eigen::HouseholderQR<MatrixXc> qr(m);
    MatrixXc q = qr.householderQ();
    MatrixXc r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (std::size_t i = 0; i < d; ++i) {
        Complex ri = r(i, i);
        q.col(i) *= ri / std::abs(ri);
    }
    return q;
}

inline MatrixXc kron(const MatrixXc& a, const MatrixXc& b) {
    MatrixXc out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

}  // namespace detail

/// Random state of the exact block-decomposed form
/// rho_ABC = sum_j q_j rho_{A bl_j} (x) rho_{br_j C}, with the block sum
/// embedded into B by a seeded random unitary. I(A:C|B) = 0 by construction.
inline DensityOperator make_markov_state(const MarkovStateSpec& spec) {
    if (spec.blocks.empty()) throw std::invalid_argument("make_markov_state: no blocks");
    const std::size_t a = spec.dim_a, c = spec.dim_c, b = spec.dim_b();
    std::mt19937_64 rng(spec.seed * 0x9e3779b97f4a7c15ull + 0xd1b54a32d192ed03ull);
    double wsum = 0;
    for (auto& bl : spec.blocks) {
        if (bl.weight <= 0) throw std::invalid_argument("make_markov_state: weight <= 0");
        wsum += bl.weight;
    }
    MatrixXc u_b = detail::random_unitary(b, rng);
    MatrixXc rho = MatrixXc::Zero(a * b * c, a * b * c);
    std::size_t offset = 0;
    for (auto& blk : spec.blocks) {
        MatrixXc rho_abl = detail::random_density(a * blk.bl, rng);
        MatrixXc rho_brc = detail::random_density(blk.br * c, rng);
        MatrixXc term = detail::kron(rho_abl, rho_brc);  // on A (x) bl (x) br (x) C
        // Isometry bl (x) br -> B: unitary times block inclusion at `offset`.
        MatrixXc inc = MatrixXc::Zero(b, blk.bl * blk.br);
        for (std::size_t k = 0; k < blk.bl * blk.br; ++k) inc(offset + k, k) = 1.0;
        MatrixXc v = u_b * inc;
        MatrixXc m = detail::kron(detail::kron(MatrixXc::Identity(a, a), v),
                                  MatrixXc::Identity(c, c));
        rho += (blk.weight / wsum) * (m * term * m.adjoint());
        offset += blk.bl * blk.br;
    }
    FactorSpace space({"A", "B", "C"}, {a, b, c});
    return DensityOperator(space, std::move(rho));
}

}  // namespace ebt
