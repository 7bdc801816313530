#pragma once

#include <cstring>
#include <vector>

#include "ebt/gf2.hpp"
#include "ebt/stabilizer/state.hpp"

namespace ebt {

namespace detail {

inline BitMatrix symplectic_rows(const std::vector<Pauli>& gens, std::size_t n) {
    BitMatrix m(gens.size(), 2 * n);
    for (std::size_t i = 0; i < gens.size(); ++i)
        for_each_support_qubit(gens[i], [&](std::size_t q) {
            if (gens[i].get_x(q)) m.set(i, q, true);
            if (gens[i].get_z(q)) m.set(i, n + q, true);
        });
    return m;
}

}  // namespace detail

/// Exact GF(2) criterion for commutation of two stabilizer-code projectors
/// P1 = avg of group(c1), P2 = avg of group(c2):
///   [P1,P2] = 0  iff  (no element of c1 anticommutes with an element of c2)
///             or  (some Pauli lies in both symplectic spans with opposite
///                  signs, which forces P1 P2 = P2 P1 = 0).
/// Anticommutation is bilinear, so generator pairs suffice for the first
/// branch; the second is the sign character on span(c1) cap span(c2).
inline bool codes_commute(const StabilizerCode& c1, const StabilizerCode& c2) {
    if (c1.n != c2.n) throw std::invalid_argument("codes_commute: ambient size mismatch");
    bool all_commute = true;
    for (const auto& g : c1.gens) {
        for (const auto& h : c2.gens)
            if (!g.commutes_with(h)) {
                all_commute = false;
                break;
            }
        if (!all_commute) break;
    }
    if (all_commute) return true;

    // Intersection of spans with sign comparison: kernel combos of the
    // stacked generator matrix give pairs (a, b) with a.G1 = b.G2 bitwise.
    const std::size_t k1 = c1.gens.size(), k2 = c2.gens.size();
    std::vector<Pauli> all;
    all.reserve(k1 + k2);
    for (auto& g : c1.gens) all.push_back(g);
    for (auto& g : c2.gens) all.push_back(g);
    BitMatrix m = detail::symplectic_rows(all, c1.n);
    BitMatrix kernel = gf2_left_nullspace(m);
    for (std::size_t i = 0; i < kernel.rows(); ++i) {
        Pauli g1(c1.n), g2(c2.n);
        bool nontrivial = false;
        for (std::size_t j = 0; j < k1; ++j)
            if (kernel.get(i, j)) {
                g1.mul(c1.gens[j]);
                nontrivial = true;
            }
        for (std::size_t j = 0; j < k2; ++j)
            if (kernel.get(i, k1 + j)) g2.mul(c2.gens[j]);
        if (!nontrivial) continue;
        if (!g1.same_bits(g2))
            throw std::logic_error("codes_commute: kernel combo is not an intersection element");
        if (g1.phase != g2.phase) return true;  // opposite signs: P1 P2 = 0
    }
    return false;
}

/// True iff some Pauli supported on the given qubits commutes with the whole
/// code group but is not an element of it (a logical operator inside A).
inline bool logical_operator_on_qubits(const StabilizerCode& code,
                                       const std::vector<std::size_t>& qubits) {
    const std::size_t m = qubits.size();
    // Solution space: Paulis on `qubits` commuting with every generator.
    // Row per generator: (z|x swapped) restricted to the qubit set.
    BitMatrix constraints(code.gens.size(), 2 * m);
    std::vector<int32_t> col(code.n, -1);
    for (std::size_t i = 0; i < m; ++i) col[qubits[i]] = static_cast<int32_t>(i);
    for (std::size_t i = 0; i < code.gens.size(); ++i)
        detail::for_each_support_qubit(code.gens[i], [&](std::size_t q) {
            if (col[q] < 0) return;
            if (code.gens[i].get_z(q)) constraints.set(i, col[q], true);
            if (code.gens[i].get_x(q)) constraints.set(i, m + col[q], true);
        });
    std::size_t normalizer_dim = 2 * m - gf2_rank(std::move(constraints));

    // Subgroup of the code supported on the qubit set.
    std::vector<int32_t> ccol(code.n, -1);
    std::size_t cidx = 0;
    for (std::size_t q = 0; q < code.n; ++q)
        if (col[q] < 0) ccol[q] = static_cast<int32_t>(cidx++);
    BitMatrix restr(code.gens.size(), 2 * cidx);
    for (std::size_t i = 0; i < code.gens.size(); ++i)
        detail::for_each_support_qubit(code.gens[i], [&](std::size_t q) {
            if (ccol[q] < 0) return;
            if (code.gens[i].get_x(q)) restr.set(i, ccol[q], true);
            if (code.gens[i].get_z(q)) restr.set(i, cidx + ccol[q], true);
        });
    std::size_t subgroup_dim = code.gens.size() - gf2_rank(std::move(restr));

    return normalizer_dim > subgroup_dim;
}

inline bool logical_operator_in_region(const StabilizerState& state, const StabilizerCode& code,
                                       const Region& a) {
    return logical_operator_on_qubits(code, state.qubits_in(a));
}

/// Merge several codes into one (generators concatenated then canonicalized).
inline StabilizerCode merge_codes(const std::vector<const StabilizerCode*>& codes,
                                  std::size_t n) {
    StabilizerCode out;
    out.n = n;
    std::vector<Pauli> gens;
    Region support;
    for (auto* c : codes) {
        gens.insert(gens.end(), c->gens.begin(), c->gens.end());
        support = support | c->support;
    }
    out.gens = canonical_generators(std::move(gens));
    out.support = support;
    return out;
}

}  // namespace ebt
