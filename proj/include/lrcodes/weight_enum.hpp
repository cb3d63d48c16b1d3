#pragma once

#include <cstdint>
#include <map>
#include <thread>
#include <vector>

#include "lrcodes/bitmatrix.hpp"
#include "lrcodes/errors.hpp"

namespace lrc {

struct WeightCaps {
    std::uint32_t exact_rows = 24;        // exact mode: at most 2^24 codewords
    std::uint64_t combo_cap = 1ull << 26; // truncated mode: combination budget
};

struct WeightDistribution {
    std::map<std::uint64_t, std::uint64_t> counts;  // weight -> codeword count
    bool exact = true;
    std::uint64_t w_max = 0;  // truncated mode: counts are exact for w <= w_max only
};

namespace detail {

inline void gray_enumerate(const BitMatrix& basis, std::uint64_t lo, std::uint64_t hi,
                           std::vector<std::uint64_t>& hist) {
    // enumerates codeword indices [lo, hi) in Gray order, seeded at lo
    const std::size_t words = basis.words_per_row();
    std::vector<std::uint64_t> cur(words, 0);
    auto gray = [](std::uint64_t m) { return m ^ (m >> 1); };
    std::uint64_t cur_mask = gray(lo);
    for (std::size_t r = 0; r < basis.rows(); ++r)
        if (cur_mask >> r & 1)
            for (std::size_t k = 0; k < words; ++k) cur[k] ^= basis.row(r)[k];
    for (std::uint64_t m = lo;;) {
        std::size_t w = 0;
        for (std::size_t k = 0; k < words; ++k) w += static_cast<std::size_t>(std::popcount(cur[k]));
        ++hist[w];
        if (++m >= hi) break;
        const std::uint64_t nxt = gray(m);
        const auto bit = static_cast<std::size_t>(std::countr_zero(cur_mask ^ nxt));
        cur_mask = nxt;
        const std::uint64_t* row = basis.row(bit);
        for (std::size_t k = 0; k < words; ++k) cur[k] ^= row[k];
    }
}

}  // namespace detail

/// Exact weight distribution of the code spanned by the basis rows:
/// enumerates all 2^rows combinations with Gray-code updates. Rows must be
/// independent. Deterministic regardless of thread count (per-block
/// histograms are merged by block order; counts commute).
inline WeightDistribution weight_distribution_exact(const BitMatrix& basis,
                                                    const WeightCaps& caps = {},
                                                    unsigned threads = 1) {
    const std::size_t k = basis.rows();
    if (k > caps.exact_rows)
        throw CapExceeded("exact weight enumeration over 2^" + std::to_string(k) +
                          " codewords exceeds cap 2^" + std::to_string(caps.exact_rows));
    if (rank(basis) != k) throw InternalError("weight_distribution: basis rows not independent");

    const std::uint64_t total = 1ull << k;
    std::vector<std::vector<std::uint64_t>> hists;
    if (threads <= 1 || total < 1024) {
        hists.emplace_back(basis.cols() + 1, 0);
        detail::gray_enumerate(basis, 0, total, hists[0]);
    } else {
        const unsigned nb = std::min<std::uint64_t>(threads, 16);
        const std::uint64_t per = total / nb;
        hists.assign(nb, std::vector<std::uint64_t>(basis.cols() + 1, 0));
        std::vector<std::thread> pool;
        for (unsigned b = 0; b < nb; ++b) {
            const std::uint64_t lo = b * per;
            const std::uint64_t hi = (b + 1 == nb) ? total : lo + per;
            pool.emplace_back([&, b, lo, hi] { detail::gray_enumerate(basis, lo, hi, hists[b]); });
        }
        for (auto& t : pool) t.join();
    }
    WeightDistribution out;
    out.exact = true;
    out.w_max = basis.cols();
    for (const auto& h : hists)
        for (std::size_t w = 0; w < h.size(); ++w)
            if (h[w]) out.counts[w] += h[w];
    return out;
}

/// Exact counts of codewords of weight <= w_max without full enumeration.
/// Works on the RREF of the basis: a codeword of weight <= w restricted to
/// the pivot columns has at most w ones, so it is a sum of at most w RREF
/// rows. Enumerates combinations of <= w_max rows.
inline WeightDistribution weight_distribution_truncated(const BitMatrix& basis,
                                                        std::uint64_t w_max,
                                                        const WeightCaps& caps = {}) {
    const BitMatrix r = row_space_basis(basis);
    const std::size_t k = r.rows();
    const std::size_t words = r.words_per_row();
    WeightDistribution out;
    out.exact = false;
    out.w_max = w_max;
    out.counts[0] = 1;
    std::uint64_t budget = caps.combo_cap;

    std::vector<std::uint64_t> acc(words, 0);
    std::vector<std::size_t> chosen;
    // depth-first over increasing row indices, pruning on combination size
    auto rec = [&](auto&& self, std::size_t next, std::size_t depth) -> void {
        if (depth == 0) return;
        for (std::size_t i = next; i < k; ++i) {
            if (budget == 0)
                throw CapExceeded("bounded-weight search exceeded combination budget");
            --budget;
            for (std::size_t w = 0; w < words; ++w) acc[w] ^= r.row(i)[w];
            std::size_t wt = 0;
            for (std::size_t w = 0; w < words; ++w)
                wt += static_cast<std::size_t>(std::popcount(acc[w]));
            if (wt <= w_max) ++out.counts[wt];
            self(self, i + 1, depth - 1);
            for (std::size_t w = 0; w < words; ++w) acc[w] ^= r.row(i)[w];
        }
    };
    rec(rec, 0, std::min<std::size_t>(w_max, k));
    return out;
}

struct WeightMode {
    bool exact = true;
    std::uint64_t w_max = 0;
};

inline WeightDistribution weight_distribution(const BitMatrix& basis, const WeightMode& mode,
                                              const WeightCaps& caps = {}, unsigned threads = 1) {
    return mode.exact ? weight_distribution_exact(basis, caps, threads)
                      : weight_distribution_truncated(basis, mode.w_max, caps);
}

}  // namespace lrc
