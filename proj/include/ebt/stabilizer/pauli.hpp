#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ebt {

namespace detail {
inline std::size_t and_popcount(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b) {
    std::size_t n = 0;
    for (std::size_t k = 0; k < a.size(); ++k) n += std::popcount(a[k] & b[k]);
    return n;
}
}  // namespace detail

/// An n-qubit Pauli operator i^phase * X^x * Z^z with phase in Z_4.
/// Hermitian iff phase == |x & z| (mod 2); stabilizer elements carry sign +-1.
struct Pauli {
    std::size_t n = 0;
    std::vector<uint64_t> x, z;
    uint8_t phase = 0;

    Pauli() = default;
    explicit Pauli(std::size_t nq)
        : n(nq), x((nq + 63) / 64, 0), z((nq + 63) / 64, 0), phase(0) {}

    std::size_t words() const { return x.size(); }

    bool get_x(std::size_t q) const { return (x[q / 64] >> (q % 64)) & 1; }
    bool get_z(std::size_t q) const { return (z[q / 64] >> (q % 64)) & 1; }
    void set_x(std::size_t q, bool v) {
        uint64_t m = uint64_t(1) << (q % 64);
        if (v) x[q / 64] |= m; else x[q / 64] &= ~m;
    }
    void set_z(std::size_t q, bool v) {
        uint64_t m = uint64_t(1) << (q % 64);
        if (v) z[q / 64] |= m; else z[q / 64] &= ~m;
    }

    bool is_identity_bits() const {
        for (std::size_t k = 0; k < words(); ++k)
            if (x[k] | z[k]) return false;
        return true;
    }

    bool commutes_with(const Pauli& o) const {
        return ((detail::and_popcount(x, o.z) + detail::and_popcount(z, o.x)) & 1) == 0;
    }

    /// this <- this * o (operator product, phase tracked exactly).
    void mul(const Pauli& o) {
        // X^x1 Z^z1 X^x2 Z^z2 = (-1)^{z1.x2} X^{x1+x2} Z^{z1+z2}
        std::size_t cross = detail::and_popcount(z, o.x);
        phase = static_cast<uint8_t>((phase + o.phase + 2 * (cross & 1)) & 3);
        for (std::size_t k = 0; k < words(); ++k) {
            x[k] ^= o.x[k];
            z[k] ^= o.z[k];
        }
    }

    bool is_hermitian() const {
        return ((phase ^ detail::and_popcount(x, z)) & 1) == 0;
    }

    /// Sign of a Hermitian Pauli relative to its canonical Y-form
    /// (the tensor product of single-qubit X, Y, Z, I).
    int sign() const {
        std::size_t y = detail::and_popcount(x, z);
        return ((phase - y) & 3) == 0 ? +1 : -1;
    }

    bool support_within(const std::vector<uint64_t>& mask) const {
        for (std::size_t k = 0; k < words(); ++k)
            if ((x[k] | z[k]) & ~mask[k]) return false;
        return true;
    }

    bool acts_on(std::size_t q) const { return get_x(q) || get_z(q); }

    /// Restriction to a qubit subset (indices in ascending order); phase kept.
    Pauli restricted_to(const std::vector<std::size_t>& qubits) const {
        Pauli out(qubits.size());
        for (std::size_t i = 0; i < qubits.size(); ++i) {
            out.set_x(i, get_x(qubits[i]));
            out.set_z(i, get_z(qubits[i]));
        }
        out.phase = phase;
        return out;
    }

    bool same_bits(const Pauli& o) const { return x == o.x && z == o.z; }
    bool operator==(const Pauli& o) const {
        return n == o.n && x == o.x && z == o.z && phase == o.phase;
    }
};

/// +-[XZY_]^n  (e.g. "+XX_Z"); '_' is identity.
inline std::string pauli_to_string(const Pauli& p) {
    if (!p.is_hermitian()) throw std::invalid_argument("pauli_to_string: not Hermitian");
    std::string s;
    s.push_back(p.sign() > 0 ? '+' : '-');
    for (std::size_t q = 0; q < p.n; ++q) {
        bool xb = p.get_x(q), zb = p.get_z(q);
        s.push_back(xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : '_'));
    }
    return s;
}

inline Pauli pauli_from_string(const std::string& s) {
    if (s.size() < 2 || (s[0] != '+' && s[0] != '-'))
        throw std::invalid_argument("pauli_from_string: expected sign prefix");
    Pauli p(s.size() - 1);
    std::size_t y = 0;
    for (std::size_t q = 0; q < p.n; ++q) {
        switch (s[q + 1]) {
            case 'X': p.set_x(q, true); break;
            case 'Z': p.set_z(q, true); break;
            case 'Y': p.set_x(q, true); p.set_z(q, true); ++y; break;
            case '_': case 'I': break;
            default: throw std::invalid_argument("pauli_from_string: bad character");
        }
    }
    p.phase = static_cast<uint8_t>(((s[0] == '-' ? 2 : 0) + y) & 3);
    return p;
}

}  // namespace ebt
