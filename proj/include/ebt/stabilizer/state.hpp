#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ebt/gf2.hpp"
#include "ebt/lattice/hex.hpp"
#include "ebt/stabilizer/pauli.hpp"

namespace ebt {

namespace detail {
template <typename F>
void for_each_support_qubit(const Pauli& p, F&& f) {
    for (std::size_t k = 0; k < p.words(); ++k) {
        uint64_t w = p.x[k] | p.z[k];
        while (w) {
            std::size_t q = k * 64 + std::countr_zero(w);
            if (q < p.n) f(q);
            w &= w - 1;
        }
    }
}
}  // namespace detail

/// Signed Gaussian elimination over a list of Hermitian +-1 Paulis, using the
/// group product as the row operation so phases stay exact. Returns a
/// canonical independent generating set (unique for a given group).
inline std::vector<Pauli> canonical_generators(std::vector<Pauli> gens) {
    if (gens.empty()) return gens;
    const std::size_t n = gens[0].n;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < 2 * n && rank < gens.size(); ++col) {
        const bool is_x = col < n;
        const std::size_t q = is_x ? col : col - n;
        auto bit = [&](const Pauli& p) { return is_x ? p.get_x(q) : p.get_z(q); };
        std::size_t piv = rank;
        while (piv < gens.size() && !bit(gens[piv])) ++piv;
        if (piv == gens.size()) continue;
        std::swap(gens[rank], gens[piv]);
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (i != rank && bit(gens[i])) gens[i].mul(gens[rank]);
        ++rank;
    }
    for (std::size_t i = rank; i < gens.size(); ++i)
        if (!gens[i].is_identity_bits() || gens[i].phase != 0)
            throw std::logic_error("canonical_generators: inconsistent group (contains -I)");
    gens.resize(rank);
    return gens;
}

inline bool same_signed_group(const std::vector<Pauli>& a, const std::vector<Pauli>& b) {
    auto ca = canonical_generators(a);
    auto cb = canonical_generators(b);
    if (ca.size() != cb.size()) return false;
    for (std::size_t i = 0; i < ca.size(); ++i)
        if (!(ca[i] == cb[i])) return false;
    return true;
}

/// Membership of a Pauli in the signed group generated by canonical gens
/// (reduce over each generator's leading column; member iff +identity left).
inline bool in_signed_group(const std::vector<Pauli>& canonical, const Pauli& p) {
    Pauli acc = p;
    for (const auto& g : canonical) {
        // leading column of g
        std::size_t lead_col = 2 * g.n;
        for (std::size_t col = 0; col < 2 * g.n; ++col) {
            bool is_x = col < g.n;
            std::size_t q = is_x ? col : col - g.n;
            if (is_x ? g.get_x(q) : g.get_z(q)) { lead_col = col; break; }
        }
        if (lead_col == 2 * g.n) continue;
        bool is_x = lead_col < g.n;
        std::size_t q = is_x ? lead_col : lead_col - g.n;
        if (is_x ? acc.get_x(q) : acc.get_z(q)) acc.mul(g);
    }
    return acc.is_identity_bits() && acc.phase == 0;
}

enum class TranslationSymmetry { None, ColsOnly, Full };

/// Stabilizer code: an independent commuting set of Hermitian +-1 Paulis on an
/// n-qubit ambient space, supported on the faces of `support`. The codespace
/// is the joint +1 eigenspace; its projector has rank 2^(|qubits| - gens).
struct StabilizerCode {
    std::size_t n = 0;
    std::vector<Pauli> gens;
    Region support;
};

/// A pure n-qubit stabilizer state with one face assigned to each qubit.
/// Generators are exactly n independent commuting Hermitian +-1 Paulis.
class StabilizerState {
public:
    StabilizerState() = default;
    StabilizerState(std::size_t n, std::vector<Pauli> gens, std::vector<FaceCoord> qubit_face,
                    Extent extent)
        : n_(n), gens_(std::move(gens)), qubit_face_(std::move(qubit_face)),
          extent_(extent) {
        if (gens_.size() != n_) throw std::invalid_argument("StabilizerState: need n generators");
        if (qubit_face_.size() != n_)
            throw std::invalid_argument("StabilizerState: need a face per qubit");
        for (std::size_t q = 0; q < n_; ++q) face_qubits_[qubit_face_[q]].push_back(q);
        validate();
    }

    std::size_t num_qubits() const { return n_; }
    const std::vector<Pauli>& generators() const { return gens_; }
    const std::vector<FaceCoord>& qubit_faces() const { return qubit_face_; }
    const Extent& extent() const { return extent_; }

    TranslationSymmetry translation_symmetry = TranslationSymmetry::None;
    /// True when every group element supported on a simply connected face
    /// region is a product of whole generators supported inside it. Builders
    /// of fixed-point models set this; it is cross-checked in the tests.
    bool local_complete = false;

    std::vector<std::size_t> qubits_in(const Region& a) const {
        std::vector<std::size_t> out;
        for (auto f : a) {
            auto it = face_qubits_.find(extent_.canon(f));
            if (it == face_qubits_.end())
                throw std::invalid_argument("qubits_in: region face carries no qubits");
            out.insert(out.end(), it->second.begin(), it->second.end());
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    Region all_faces() const {
        Region r;
        for (auto& [f, qs] : face_qubits_) r.insert(f);
        return r;
    }

    /// Exact integer entanglement entropy in bits: S(A) = |A| - n + rank(G|_Ac).
    long entropy_bits(const Region& a_in) const {
        Region a = a_in.canon(extent_);
        auto key = qubits_in(a);
        auto it = entropy_cache_.find(key);
        if (it != entropy_cache_.end()) return it->second;
        long s;
        if (local_complete && usable_disk(a))
            s = static_cast<long>(key.size()) - static_cast<long>(count_gens_within(key));
        else
            s = static_cast<long>(key.size()) - static_cast<long>(n_) +
                static_cast<long>(complement_rank(key));
        entropy_cache_.emplace(std::move(key), s);
        return s;
    }

    /// I(A:C|B), exact integer bits; >= 0 by strong subadditivity.
    long cmi_bits(const Region& a, const Region& b, const Region& c) const {
        if (!(a & b).empty() || !(a & c).empty() || !(b & c).empty())
            throw std::invalid_argument("cmi_bits: regions must be disjoint");
        return entropy_bits(a | b) + entropy_bits(b | c) - entropy_bits(b) -
               entropy_bits(a | b | c);
    }

    /// Maximal subgroup of the stabilizer group supported inside region A,
    /// as an independent canonical generating set.
    std::vector<Pauli> subgroup_in(const Region& a_in) const {
        Region a = a_in.canon(extent_);
        auto qs = qubits_in(a);
        if (local_complete && usable_disk(a)) {
            auto mask = qubit_mask(qs);
            std::vector<Pauli> out;
            for (const auto& g : gens_)
                if (g.support_within(mask)) out.push_back(g);
            return canonical_generators(std::move(out));
        }
        return canonical_generators(subgroup_in_general(qs));
    }

    StabilizerCode region_support_code(const Region& a) const {
        return StabilizerCode{n_, subgroup_in(a), a.canon(extent_)};
    }

    /// Flip generator signs under conjugation by a Pauli error (applying U to
    /// the state maps each generator g to +-g).
    void apply_pauli(const Pauli& u) {
        for (auto& g : gens_)
            if (!g.commutes_with(u)) g.phase = static_cast<uint8_t>((g.phase + 2) & 3);
        entropy_cache_.clear();
    }

    std::vector<uint64_t> qubit_mask(const std::vector<std::size_t>& qs) const {
        std::vector<uint64_t> mask((n_ + 63) / 64, 0);
        for (auto q : qs) mask[q / 64] |= uint64_t(1) << (q % 64);
        return mask;
    }

    /// GF(2)-independent generator check plus pairwise commutation.
    void validate() const {
        BitMatrix m(n_, 2 * n_);
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t k = 0; k < gens_[i].words(); ++k) {
                // columns [0,n) = x bits, [n,2n) = z bits
                for (std::size_t b = 0; b < 64; ++b) {
                    std::size_t q = k * 64 + b;
                    if (q >= n_) break;
                    if ((gens_[i].x[k] >> b) & 1) m.set(i, q, true);
                    if ((gens_[i].z[k] >> b) & 1) m.set(i, n_ + q, true);
                }
            }
            if (!gens_[i].is_hermitian())
                throw std::invalid_argument("StabilizerState: generator not Hermitian");
        }
        if (gf2_rank(m) != n_)
            throw std::invalid_argument("StabilizerState: generators not independent");
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i + 1; j < n_; ++j)
                if (!gens_[i].commutes_with(gens_[j]))
                    throw std::invalid_argument("StabilizerState: generators do not commute");
    }

    /// General-path subgroup computation (no locality assumption).
    std::vector<Pauli> subgroup_in_general(const std::vector<std::size_t>& qs) const {
        std::vector<int32_t> col(n_, -1);
        for (std::size_t i = 0; i < qs.size(); ++i) col[qs[i]] = static_cast<int32_t>(i);
        const std::size_t comp = n_ - qs.size();
        // complement columns: ascending complement qubit order, x then z halves
        std::vector<int32_t> ccol(n_, -1);
        {
            std::size_t idx = 0;
            for (std::size_t q = 0; q < n_; ++q)
                if (col[q] < 0) ccol[q] = static_cast<int32_t>(idx++);
        }
        BitMatrix m(n_, 2 * comp);
        for (std::size_t i = 0; i < n_; ++i) {
            detail::for_each_support_qubit(gens_[i], [&](std::size_t q) {
                if (ccol[q] < 0) return;
                if (gens_[i].get_x(q)) m.set(i, ccol[q], true);
                if (gens_[i].get_z(q)) m.set(i, comp + ccol[q], true);
            });
        }
        BitMatrix basis = gf2_left_nullspace(m);
        std::vector<Pauli> out;
        out.reserve(basis.rows());
        for (std::size_t i = 0; i < basis.rows(); ++i) {
            Pauli acc = Pauli(n_);
            for (std::size_t j = 0; j < n_; ++j)
                if (basis.get(i, j)) acc.mul(gens_[j]);
            out.push_back(std::move(acc));
        }
        return out;
    }

private:
    bool usable_disk(const Region& a) const {
        auto it = disk_cache_.find(a);
        if (it != disk_cache_.end()) return it->second;
        bool d = is_simply_connected(a, extent_);
        disk_cache_.emplace(a, d);
        return d;
    }

    std::size_t count_gens_within(const std::vector<std::size_t>& qs) const {
        auto mask = qubit_mask(qs);
        std::size_t k = 0;
        for (const auto& g : gens_)
            if (g.support_within(mask)) ++k;
        return k;
    }

    std::size_t complement_rank(const std::vector<std::size_t>& qs) const {
        std::vector<int32_t> ccol(n_, -1);
        std::vector<uint64_t> mask = qubit_mask(qs);
        std::size_t idx = 0;
        for (std::size_t q = 0; q < n_; ++q)
            if (!((mask[q / 64] >> (q % 64)) & 1)) ccol[q] = static_cast<int32_t>(idx++);
        const std::size_t comp = idx;
        BitMatrix m(n_, 2 * comp);
        std::size_t row = 0;
        for (std::size_t i = 0; i < n_; ++i) {
            bool touches = false;
            detail::for_each_support_qubit(gens_[i], [&](std::size_t q) {
                if (ccol[q] < 0) return;
                touches = true;
                if (gens_[i].get_x(q)) m.set(row, ccol[q], true);
                if (gens_[i].get_z(q)) m.set(row, comp + ccol[q], true);
            });
            if (touches) ++row;
        }
        // rows beyond `row` are all zero; rank unaffected
        return gf2_rank(std::move(m));
    }

    std::size_t n_ = 0;
    std::vector<Pauli> gens_;
    std::vector<FaceCoord> qubit_face_;
    Extent extent_;
    std::map<FaceCoord, std::vector<std::size_t>> face_qubits_;
    mutable std::map<std::vector<std::size_t>, long> entropy_cache_;
    mutable std::map<Region, bool> disk_cache_;
};

}  // namespace ebt
