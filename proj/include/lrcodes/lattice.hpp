#pragma once

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <string>
#include <vector>

#include "lrcodes/errors.hpp"

namespace lrc {

using Int = long long;
using IntMat = std::vector<std::vector<Int>>;  // square, row-major; rows generate the lattice

namespace lat {

inline Int det(IntMat a) {
    const std::size_t d = a.size();
    if (d == 0) return 1;
    // Bareiss fraction-free elimination; exact over the integers.
    __int128 prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < d; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < d && a[p][k] == 0) ++p;
            if (p == d) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < d; ++i)
            for (std::size_t j = k + 1; j < d; ++j) {
                __int128 v = (__int128)a[i][j] * a[k][k] - (__int128)a[i][k] * a[k][j];
                a[i][j] = static_cast<Int>(v / prev);
            }
        prev = a[k][k];
    }
    return sign * a[d - 1][d - 1];
}

inline Int pos_mod(Int v, Int m) {
    Int r = v % m;
    return r < 0 ? r + m : r;
}

/// Canonical row-style Hermite normal form of a full-rank integer matrix:
/// upper triangular, positive diagonal, entries above each diagonal reduced
/// modulo it (0 <= H[i][j] < H[j][j] for i < j). Row operations only, so the
/// generated lattice is unchanged.
inline IntMat hnf(IntMat h) {
    const std::size_t d = h.size();
    for (const auto& row : h)
        if (row.size() != d) throw ConfigError("kernel matrix must be square");
    if (det(h) == 0) throw ConfigError("singular lattice matrix");
    for (std::size_t c = 0; c < d; ++c) {
        // gcd-reduce column c over rows c..d-1 until one nonzero remains at (c,c)
        for (;;) {
            std::size_t piv = d;
            for (std::size_t i = c; i < d; ++i)
                if (h[i][c] != 0 && (piv == d || std::abs(h[i][c]) < std::abs(h[piv][c]))) piv = i;
            if (piv == d) throw InternalError("hnf: lost rank");
            std::swap(h[c], h[piv]);
            bool done = true;
            for (std::size_t i = c + 1; i < d; ++i) {
                if (h[i][c] == 0) continue;
                const Int q = h[i][c] / h[c][c];
                for (std::size_t j = 0; j < d; ++j) h[i][j] -= q * h[c][j];
                if (h[i][c] != 0) done = false;
            }
            if (done) break;
        }
        if (h[c][c] < 0)
            for (std::size_t j = 0; j < d; ++j) h[c][j] = -h[c][j];
    }
    // reduce above-diagonal entries
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < j; ++i) {
            const Int q = (h[i][j] - pos_mod(h[i][j], h[j][j])) / h[j][j];
            if (q)
                for (std::size_t k = 0; k < d; ++k) h[i][k] -= q * h[j][k];
        }
    return h;
}

inline std::vector<Int> divisors(Int n) {
    std::vector<Int> out;
    for (Int d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

/// All index-n sublattices of Z^d as canonical HNF matrices, d in {1,2,3}.
/// Deterministic order: diagonals lexicographic, then off-diagonal entries
/// lexicographic.
inline std::vector<IntMat> enumerate_sublattices(int d, Int n) {
    if (n < 1) throw ConfigError("sublattice index must be >= 1");
    std::vector<IntMat> out;
    if (d == 1) {
        out.push_back({{n}});
    } else if (d == 2) {
        for (Int d1 : divisors(n)) {
            const Int d2 = n / d1;
            for (Int b = 0; b < d2; ++b)
                out.push_back({{d1, b}, {0, d2}});
        }
    } else if (d == 3) {
        for (Int d1 : divisors(n))
            for (Int d2 : divisors(n / d1)) {
                const Int d3 = n / d1 / d2;
                for (Int b01 = 0; b01 < d2; ++b01)
                    for (Int b02 = 0; b02 < d3; ++b02)
                        for (Int b12 = 0; b12 < d3; ++b12)
                            out.push_back({{d1, b01, b02}, {0, d2, b12}, {0, 0, d3}});
            }
    } else {
        throw ConfigError("sublattice enumeration supports dimensions 1..3");
    }
    return out;
}

/// Smith normal form data for a full-rank d x d integer matrix A:
/// D = U A V with U, V unimodular. Only the column transform V and its
/// inverse are kept; they carry the quotient-map coordinates
/// (phi(x) = (x V) mod diag, lift(y) = y Vinv).
struct Snf {
    std::vector<Int> diag;  // positive, diag[i] | diag[i+1]
    IntMat v, vinv;
};

inline Snf snf_with_transform(IntMat a) {
    const std::size_t d = a.size();
    for (const auto& row : a)
        if (row.size() != d) throw ConfigError("kernel matrix must be square");
    if (det(a) == 0) throw ConfigError("singular lattice matrix");

    IntMat v(d, std::vector<Int>(d, 0)), vinv(d, std::vector<Int>(d, 0));
    for (std::size_t i = 0; i < d; ++i) v[i][i] = vinv[i][i] = 1;

    auto col_swap = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < d; ++r) std::swap(a[r][i], a[r][j]);
        for (std::size_t r = 0; r < d; ++r) std::swap(v[r][i], v[r][j]);
        std::swap(vinv[i], vinv[j]);
    };
    auto col_addmul = [&](std::size_t dst, std::size_t src, Int q) {
        for (std::size_t r = 0; r < d; ++r) a[r][dst] += q * a[r][src];
        for (std::size_t r = 0; r < d; ++r) v[r][dst] += q * v[r][src];
        for (std::size_t c = 0; c < d; ++c) vinv[src][c] -= q * vinv[dst][c];
    };
    auto col_negate = [&](std::size_t i) {
        for (std::size_t r = 0; r < d; ++r) a[r][i] = -a[r][i];
        for (std::size_t r = 0; r < d; ++r) v[r][i] = -v[r][i];
        for (std::size_t c = 0; c < d; ++c) vinv[i][c] = -vinv[i][c];
    };

    auto diagonalize = [&]() {
        for (std::size_t t = 0; t < d; ++t) {
            for (;;) {
                std::size_t bi = d, bj = d;
                for (std::size_t i = t; i < d; ++i)
                    for (std::size_t j = t; j < d; ++j)
                        if (a[i][j] != 0 &&
                            (bi == d || std::llabs(a[i][j]) < std::llabs(a[bi][bj]))) {
                            bi = i;
                            bj = j;
                        }
                if (bi == d) throw InternalError("snf: lost rank");
                if (bi != t) std::swap(a[t], a[bi]);  // row ops affect only U
                col_swap(t, bj == t ? t : bj);
                bool clean = true;
                for (std::size_t i = t + 1; i < d; ++i) {
                    if (a[i][t] == 0) continue;
                    const Int q = a[i][t] / a[t][t];
                    for (std::size_t c = 0; c < d; ++c) a[i][c] -= q * a[t][c];
                    if (a[i][t] != 0) clean = false;
                }
                for (std::size_t j = t + 1; j < d; ++j) {
                    if (a[t][j] == 0) continue;
                    col_addmul(j, t, -(a[t][j] / a[t][t]));
                    if (a[t][j] != 0) clean = false;
                }
                if (clean) break;
            }
            if (a[t][t] < 0) col_negate(t);
        }
    };

    diagonalize();
    // enforce the divisibility chain: fold offending entries together and
    // re-diagonalize until stable (d <= 3, so brute repetition is fine)
    for (;;) {
        bool ok = true;
        for (std::size_t t = 0; t + 1 < d && ok; ++t)
            if (a[t + 1][t + 1] % a[t][t] != 0) {
                col_addmul(t, t + 1, 1);  // puts d_{t+1} into column t, row t+1
                diagonalize();
                ok = false;
            }
        if (ok) break;
    }

    Snf out;
    out.diag.resize(d);
    for (std::size_t i = 0; i < d; ++i) out.diag[i] = a[i][i];
    out.v = std::move(v);
    out.vinv = std::move(vinv);
    return out;
}

/// x in the lattice generated by the rows of the HNF matrix h?
inline bool lattice_contains(const IntMat& h, std::vector<Int> x) {
    const std::size_t d = h.size();
    // back-substitute against the upper-triangular rows, top to bottom
    for (std::size_t i = 0; i < d; ++i) {
        if (x[i] % h[i][i] != 0) return false;
        const Int q = x[i] / h[i][i];
        for (std::size_t j = i; j < d; ++j) x[j] -= q * h[i][j];
    }
    for (auto val : x)
        if (val) return false;
    return true;
}

/// lattice(inner) subset of lattice(outer)? Both in HNF.
inline bool lattice_subset(const IntMat& inner, const IntMat& outer) {
    for (const auto& row : inner)
        if (!lattice_contains(outer, row)) return false;
    return true;
}

inline std::string mat_to_string(const IntMat& m) {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) out += ';';
        for (std::size_t j = 0; j < m[i].size(); ++j) {
            if (j) out += ',';
            out += std::to_string(m[i][j]);
        }
    }
    return out;
}

inline IntMat mat_from_string(const std::string& s, int expect_dim) {
    IntMat m;
    std::string row;
    auto flush = [&](const std::string& r) {
        std::vector<Int> vals;
        std::string cur;
        for (char ch : r + ",") {
            if (ch == ',') {
                if (!cur.empty()) vals.push_back(std::stoll(cur));
                cur.clear();
            } else if (!std::isspace(static_cast<unsigned char>(ch))) {
                cur += ch;
            }
        }
        if (!vals.empty()) m.push_back(std::move(vals));
    };
    for (char ch : s + ";") {
        if (ch == ';') { flush(row); row.clear(); }
        else row += ch;
    }
    if (static_cast<int>(m.size()) != expect_dim)
        throw ConfigError("kernel matrix '" + s + "' is not " + std::to_string(expect_dim) +
                          "x" + std::to_string(expect_dim));
    for (const auto& r : m)
        if (static_cast<int>(r.size()) != expect_dim)
            throw ConfigError("kernel matrix '" + s + "' has a ragged row");
    return m;
}

}  // namespace lat
}  // namespace lrc
