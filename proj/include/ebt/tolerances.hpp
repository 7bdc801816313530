#pragma once

#include <cstddef>

namespace ebt {

/// Shared numeric tolerance ledger. All entropies are in bits (log base 2);
/// stabilizer-backend quantities are exact integers and are gated at zero.
struct Tolerances {
    double tau_rank = 1e-10;      // relative eigenvalue cutoff for supports
    double eps_cmi_bits = 1e-8;   // zero test for CMI / axiom deficits (dense)
    double psd_tol = 1e-8;        // allowed negative eigenvalue magnitude
    double herm_tol = 1e-9;       // allowed ||M - M^dag||_max
    double trace_tol = 1e-10;     // allowed |tr - 1|
    double proj_tol = 1e-9;       // allowed ||P^2 - P||_op
    std::size_t dense_dim_cap = std::size_t(1) << 20;  // matrix side cap
    std::size_t eig_dim_cap = std::size_t(1) << 13;    // cap for spectral ops
};

inline const Tolerances& default_tolerances() {
    static const Tolerances t{};
    return t;
}

}  // namespace ebt
