#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lrcodes/errors.hpp"

namespace lrc {

/// Packed bit vector over GF(2). Bits beyond size() in the last word are
/// kept zero so word-level weight/equality are exact.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t n) : size_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return size_; }

    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }

    void set(std::size_t i, bool v) {
        const std::uint64_t m = std::uint64_t{1} << (i & 63);
        if (v) w_[i >> 6] |= m; else w_[i >> 6] &= ~m;
    }

    void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    void xor_in(const BitVec& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
    }

    std::size_t weight() const {
        std::size_t s = 0;
        for (auto x : w_) s += static_cast<std::size_t>(std::popcount(x));
        return s;
    }

    bool zero() const {
        for (auto x : w_) if (x) return false;
        return true;
    }

    const std::vector<std::uint64_t>& words() const { return w_; }
    std::vector<std::uint64_t>& words() { return w_; }

    /// Value as an integer; only valid for size() <= 64.
    std::uint64_t to_u64() const { return w_.empty() ? 0 : w_[0]; }

    friend bool operator==(const BitVec& a, const BitVec& b) {
        return a.size_ == b.size_ && a.w_ == b.w_;
    }

    std::string to_string() const {
        std::string s(size_, '0');
        for (std::size_t i = 0; i < size_; ++i) if (get(i)) s[i] = '1';
        return s;
    }

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> w_;
};

inline bool dot(const BitVec& a, const BitVec& b) {
    std::uint64_t acc = 0;
    const auto& aw = a.words();
    const auto& bw = b.words();
    for (std::size_t k = 0; k < aw.size(); ++k) acc ^= aw[k] & bw[k];
    return (std::popcount(acc) & 1) != 0;
}

/// Bit-packed matrix over GF(2), row-major, 64-bit word granularity.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), data_(rows * wpr_, 0) {}

    static BitMatrix identity(std::size_t n) {
        BitMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
        return m;
    }

    /// Rows given as strings of '0'/'1' (debug-dump format).
    static BitMatrix from_rows(const std::vector<std::string>& rows) {
        const std::size_t r = rows.size();
        const std::size_t c = r ? rows[0].size() : 0;
        BitMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c) throw ConfigError("ragged bit-row input");
            for (std::size_t j = 0; j < c; ++j)
                if (rows[i][j] == '1') m.set(i, j, true);
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t words_per_row() const { return wpr_; }

    bool get(std::size_t r, std::size_t c) const {
        return (data_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1u;
    }

    void set(std::size_t r, std::size_t c, bool v) {
        const std::uint64_t m = std::uint64_t{1} << (c & 63);
        auto& w = data_[r * wpr_ + (c >> 6)];
        if (v) w |= m; else w &= ~m;
    }

    void flip(std::size_t r, std::size_t c) {
        data_[r * wpr_ + (c >> 6)] ^= std::uint64_t{1} << (c & 63);
    }

    const std::uint64_t* row(std::size_t r) const { return data_.data() + r * wpr_; }
    std::uint64_t* row(std::size_t r) { return data_.data() + r * wpr_; }

    void xor_row(std::size_t dst, std::size_t src) {
        std::uint64_t* d = row(dst);
        const std::uint64_t* s = row(src);
        for (std::size_t k = 0; k < wpr_; ++k) d[k] ^= s[k];
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        std::uint64_t* x = row(a);
        std::uint64_t* y = row(b);
        for (std::size_t k = 0; k < wpr_; ++k) std::swap(x[k], y[k]);
    }

    std::size_t row_weight(std::size_t r) const {
        const std::uint64_t* w = row(r);
        std::size_t s = 0;
        for (std::size_t k = 0; k < wpr_; ++k) s += static_cast<std::size_t>(std::popcount(w[k]));
        return s;
    }

    bool row_zero(std::size_t r) const {
        const std::uint64_t* w = row(r);
        for (std::size_t k = 0; k < wpr_; ++k) if (w[k]) return false;
        return true;
    }

    BitVec row_vec(std::size_t r) const {
        BitVec v(cols_);
        const std::uint64_t* w = row(r);
        for (std::size_t k = 0; k < wpr_; ++k) v.words()[k] = w[k];
        return v;
    }

    void set_row(std::size_t r, const BitVec& v) {
        std::uint64_t* w = row(r);
        for (std::size_t k = 0; k < wpr_; ++k) w[k] = v.words()[k];
    }

    std::size_t col_weight(std::size_t c) const {
        std::size_t s = 0;
        for (std::size_t r = 0; r < rows_; ++r) s += get(r, c);
        return s;
    }

    BitMatrix transposed() const {
        BitMatrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            const std::uint64_t* w = row(r);
            for (std::size_t k = 0; k < wpr_; ++k) {
                std::uint64_t word = w[k];
                while (word) {
                    const int b = std::countr_zero(word);
                    t.set(k * 64 + static_cast<std::size_t>(b), r, true);
                    word &= word - 1;
                }
            }
        }
        return t;
    }

    /// Debug dump: one '0'/'1' row per line.
    std::string dump() const {
        std::string out;
        out.reserve(rows_ * (cols_ + 1));
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) out += get(r, c) ? '1' : '0';
            out += '\n';
        }
        return out;
    }

    friend bool operator==(const BitMatrix& a, const BitMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<std::uint64_t> data_;
};

inline BitVec mat_vec(const BitMatrix& m, const BitVec& x) {
    if (x.size() != m.cols()) throw InternalError("mat_vec: size mismatch");
    BitVec y(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::uint64_t acc = 0;
        const std::uint64_t* w = m.row(r);
        for (std::size_t k = 0; k < m.words_per_row(); ++k) acc ^= w[k] & x.words()[k];
        if (std::popcount(acc) & 1) y.set(r, true);
    }
    return y;
}

/// Row-major Gaussian elimination, leftmost-first pivot search. Works on a
/// private copy; the deterministic pivot order is part of the contract.
inline std::size_t rank(BitMatrix m) {
    std::size_t r = 0;
    const std::size_t rows = m.rows(), cols = m.cols();
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && !m.get(p, c)) ++p;
        if (p == rows) continue;
        m.swap_rows(r, p);
        for (std::size_t i = r + 1; i < rows; ++i)
            if (m.get(i, c)) m.xor_row(i, r);
        ++r;
    }
    return r;
}

struct Rref {
    BitMatrix m;
    std::vector<std::size_t> pivot_cols;  // one per nonzero row, ascending
};

inline Rref rref(BitMatrix m) {
    Rref out;
    std::size_t r = 0;
    const std::size_t rows = m.rows(), cols = m.cols();
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && !m.get(p, c)) ++p;
        if (p == rows) continue;
        m.swap_rows(r, p);
        for (std::size_t i = 0; i < rows; ++i)
            if (i != r && m.get(i, c)) m.xor_row(i, r);
        out.pivot_cols.push_back(c);
        ++r;
    }
    out.m = std::move(m);
    return out;
}

/// Basis of {x : Mx = 0} as rows; row count == cols - rank.
inline BitMatrix nullspace(const BitMatrix& m) {
    Rref rr = rref(m);
    const std::size_t cols = m.cols();
    const std::size_t k = rr.pivot_cols.size();
    std::vector<bool> is_pivot(cols, false);
    for (auto c : rr.pivot_cols) is_pivot[c] = true;

    BitMatrix basis(cols - k, cols);
    std::size_t bi = 0;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        basis.set(bi, f, true);
        for (std::size_t i = 0; i < k; ++i)
            if (rr.m.get(i, f)) basis.set(bi, rr.pivot_cols[i], true);
        ++bi;
    }
    return basis;
}

/// Nonzero rows of the RREF: a canonical basis of the row space.
inline BitMatrix row_space_basis(const BitMatrix& m) {
    Rref rr = rref(m);
    const std::size_t k = rr.pivot_cols.size();
    BitMatrix basis(k, m.cols());
    for (std::size_t i = 0; i < k; ++i)
        basis.set_row(i, rr.m.row_vec(i));
    return basis;
}

/// One solution of A x = b, if any.
inline std::optional<BitVec> solve(const BitMatrix& a, const BitVec& b) {
    if (b.size() != a.rows()) throw InternalError("solve: rhs size mismatch");
    const std::size_t rows = a.rows(), cols = a.cols();
    BitMatrix aug(rows, cols + 1);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t k = 0; k < a.words_per_row(); ++k)
            aug.row(r)[k] = a.row(r)[k];
        if (b.get(r)) aug.set(r, cols, true);
    }
    std::size_t r = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && !aug.get(p, c)) ++p;
        if (p == rows) continue;
        aug.swap_rows(r, p);
        for (std::size_t i = 0; i < rows; ++i)
            if (i != r && aug.get(i, c)) aug.xor_row(i, r);
        pivots.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (aug.get(i, cols)) return std::nullopt;  // inconsistent row 0...0 | 1
    BitVec x(cols);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        if (aug.get(i, cols)) x.set(pivots[i], true);
    return x;
}

}  // namespace lrc
