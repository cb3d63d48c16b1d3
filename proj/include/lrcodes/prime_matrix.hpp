#pragma once

#include <cstdint>
#include <vector>

#include "lrcodes/errors.hpp"

namespace lrc {

inline bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

/// Dense matrix over GF(p), p prime. Entries stored reduced to [0, p).
class PrimeMatrix {
public:
    PrimeMatrix() = default;
    PrimeMatrix(std::uint32_t p, std::size_t rows, std::size_t cols)
        : p_(p), rows_(rows), cols_(cols), a_(rows * cols, 0) {
        if (!is_prime(p)) throw ConfigError("modulus " + std::to_string(p) + " is not prime");
    }

    std::uint32_t modulus() const { return p_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::uint32_t at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    void set(std::size_t r, std::size_t c, std::int64_t v) {
        std::int64_t m = v % static_cast<std::int64_t>(p_);
        if (m < 0) m += p_;
        a_[r * cols_ + c] = static_cast<std::uint32_t>(m);
    }

    void add_at(std::size_t r, std::size_t c, std::int64_t v) {
        set(r, c, static_cast<std::int64_t>(at(r, c)) + v);
    }

private:
    std::uint32_t p_ = 2;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<std::uint32_t> a_;
};

namespace detail {
inline std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}
}  // namespace detail

/// Rank over GF(p), Gaussian elimination on a working copy.
inline std::size_t rank_mod_p(PrimeMatrix m) {
    const std::uint64_t p = m.modulus();
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m.at(piv, c) == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols; ++j) {
                auto t = m.at(r, j);
                m.set(r, j, m.at(piv, j));
                m.set(piv, j, t);
            }
        const std::uint64_t inv = detail::pow_mod(m.at(r, c), p - 2, p);
        for (std::size_t j = c; j < cols; ++j)
            m.set(r, j, static_cast<std::int64_t>(m.at(r, j) * inv % p));
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            const std::uint64_t f = m.at(i, c);
            if (!f) continue;
            for (std::size_t j = c; j < cols; ++j) {
                std::uint64_t v = m.at(i, j) + (p - f * m.at(r, j) % p);
                m.set(i, j, static_cast<std::int64_t>(v % p));
            }
        }
        ++r;
    }
    return r;
}

}  // namespace lrc
