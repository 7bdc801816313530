#pragma once

#include <bit>
#include <cstdint>
#include <cstring>
#include <stdexcept>
#include <vector>

namespace ebt {

/// Dense bit matrix over GF(2), rows packed into 64-bit words. Pivot order is
/// deterministic (lowest column, then lowest row) so canonical forms and
/// nullspace bases are reproducible.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(rows * words_, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t words() const { return words_; }

    bool get(std::size_t i, std::size_t j) const {
        return (data_[i * words_ + j / 64] >> (j % 64)) & 1;
    }
    void set(std::size_t i, std::size_t j, bool v) {
        uint64_t& w = data_[i * words_ + j / 64];
        uint64_t m = uint64_t(1) << (j % 64);
        if (v) w |= m; else w &= ~m;
    }

    uint64_t* row(std::size_t i) { return data_.data() + i * words_; }
    const uint64_t* row(std::size_t i) const { return data_.data() + i * words_; }

    void xor_rows(std::size_t dst, std::size_t src) {
        uint64_t* d = row(dst);
        const uint64_t* s = row(src);
        for (std::size_t k = 0; k < words_; ++k) d[k] ^= s[k];
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        uint64_t* ra = row(a);
        uint64_t* rb = row(b);
        for (std::size_t k = 0; k < words_; ++k) std::swap(ra[k], rb[k]);
    }

    bool row_is_zero(std::size_t i) const {
        const uint64_t* r = row(i);
        for (std::size_t k = 0; k < words_; ++k)
            if (r[k]) return false;
        return true;
    }

    void append_row() {
        data_.resize((rows_ + 1) * words_, 0);
        ++rows_;
    }

    /// In-place reduced row echelon form. Returns (pivot column, pivot row)
    /// pairs in ascending column order.
    std::vector<std::pair<std::size_t, std::size_t>> rref() {
        std::vector<std::pair<std::size_t, std::size_t>> pivots;
        std::size_t rank = 0;
        for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
            std::size_t piv = rank;
            while (piv < rows_ && !get(piv, col)) ++piv;
            if (piv == rows_) continue;
            swap_rows(rank, piv);
            for (std::size_t i = 0; i < rows_; ++i)
                if (i != rank && get(i, col)) xor_rows(i, rank);
            pivots.emplace_back(col, rank);
            ++rank;
        }
        return pivots;
    }

private:
    std::size_t rows_ = 0, cols_ = 0, words_ = 0;
    std::vector<uint64_t> data_;
};

inline std::size_t gf2_rank(BitMatrix m) { return m.rref().size(); }

/// Basis of {c : c^T M = 0}, i.e. row combinations summing to zero. Each
/// returned row has m.rows() bits.
inline BitMatrix gf2_left_nullspace(const BitMatrix& m) {
    const std::size_t n = m.rows();
    BitMatrix aug(n, m.cols() + n);
    for (std::size_t i = 0; i < n; ++i) {
        std::memcpy(aug.row(i), m.row(i), m.words() * 8);
        aug.set(i, m.cols() + i, true);
    }
    // Eliminate on the M-part only.
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < n; ++col) {
        std::size_t piv = rank;
        while (piv < n && !aug.get(piv, col)) ++piv;
        if (piv == n) continue;
        aug.swap_rows(rank, piv);
        for (std::size_t i = 0; i < n; ++i)
            if (i != rank && aug.get(i, col)) aug.xor_rows(i, rank);
        ++rank;
    }
    BitMatrix basis(n - rank, n);
    for (std::size_t i = rank; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            basis.set(i - rank, j, aug.get(i, m.cols() + j));
    return basis;
}

/// Row-space membership test against an RREF basis (pivots from rref()).
inline bool gf2_in_rowspace(const BitMatrix& rref_basis,
                            const std::vector<std::pair<std::size_t, std::size_t>>& pivots,
                            std::vector<uint64_t> vec) {
    for (auto [col, prow] : pivots) {
        if ((vec[col / 64] >> (col % 64)) & 1) {
            const uint64_t* r = rref_basis.row(prow);
            for (std::size_t k = 0; k < rref_basis.words(); ++k) vec[k] ^= r[k];
        }
    }
    for (auto w : vec)
        if (w) return false;
    return true;
}

}  // namespace ebt
