#pragma once

#include <cstdint>
#include <string>

#include "lrcodes/bitmatrix.hpp"
#include "lrcodes/errors.hpp"
#include "lrcodes/group.hpp"

namespace lrc {

/// The LR stabilizer code of a triple (G; S1, S2).
///
/// Sites are the bi-qubit layers G x {+,-}: site (g,+) has index g, site
/// (g,-) has index |G| + g. Symplectic vectors are [X-part | Z-part], each
/// part of length 2|G| (4|G| total); X_g has empty Z-part and Z_g empty
/// X-part, so only the nonzero halves are stored.
///
/// Stabilizer supports:
///   Z_g : Z-part on {(g v, +) : v in S1} and {(w^-1 g, -) : w in S2}
///   X_g : X-part on {(w g, +) : w in S2} and {(g v^-1, -) : v in S1}
struct LRCode {
    FiniteGroup::Ptr group;
    GroupSubset s1, s2;
    BitMatrix x_support;  // row g = X-part of X_g, length 2|G|
    BitMatrix z_support;  // row g = Z-part of Z_g, length 2|G|

    std::uint32_t order() const { return group->order(); }
    std::size_t sites() const { return 2ull * group->order(); }

    /// Full symplectic vector [X-part | Z-part] of X_g.
    BitVec x_symplectic(std::uint32_t g) const {
        BitVec v(2 * sites());
        for (std::size_t i = 0; i < sites(); ++i)
            if (x_support.get(g, i)) v.set(i, true);
        return v;
    }

    /// Full symplectic vector of Z_g.
    BitVec z_symplectic(std::uint32_t g) const {
        BitVec v(2 * sites());
        for (std::size_t i = 0; i < sites(); ++i)
            if (z_support.get(g, i)) v.set(sites() + i, true);
        return v;
    }

    /// Stabilizer column label; columns ordered X_g then Z_g.
    std::string stabilizer_label(std::size_t col) const {
        const std::uint32_t n = order();
        return col < n ? "X_" + group->label(static_cast<std::uint32_t>(col))
                       : "Z_" + group->label(static_cast<std::uint32_t>(col - n));
    }

    /// Site label "(g,+)" / "(g,-)".
    std::string site_label(std::size_t site) const {
        const std::uint32_t n = order();
        const bool minus = site >= n;
        return "(" + group->label(static_cast<std::uint32_t>(minus ? site - n : site)) +
               (minus ? ",-)" : ",+)");
    }
};

inline LRCode build_code(const FiniteGroup::Ptr& g, const GroupSubset& s1, const GroupSubset& s2) {
    if (s1.parent().get() != g.get() || s2.parent().get() != g.get())
        throw ConfigError("S1/S2 parent group mismatch");
    if (s1.empty() || s2.empty()) throw ConfigError("S1 and S2 must be nonempty");
    const std::uint32_t n = g->order();
    LRCode code{g, s1, s2, BitMatrix(n, 2ull * n), BitMatrix(n, 2ull * n)};
    for (std::uint32_t e = 0; e < n; ++e) {
        for (auto w : s2.members())
            code.x_support.set(e, g->mul(w, e), true);              // (wg, +)
        for (auto v : s1.members())
            code.x_support.set(e, n + g->mul(e, g->inv(v)), true);  // (gv^-1, -)
        for (auto v : s1.members())
            code.z_support.set(e, g->mul(e, v), true);              // (gv, +)
        for (auto w : s2.members())
            code.z_support.set(e, n + g->mul(g->inv(w), e), true);  // (w^-1 g, -)
    }
    return code;
}

/// The 4|G| x 2|G| matrix M_G whose columns are the stabilizer vectors:
/// columns 0..|G|-1 are X_g, columns |G|..2|G|-1 are Z_g, in canonical
/// element order. Row blocks top to bottom: (site,+,X-part), (site,-,X-part),
/// (site,+,Z-part), (site,-,Z-part), each block in canonical element order.
inline BitMatrix assemble_MG(const LRCode& code) {
    const std::size_t n = code.order();
    const std::size_t sites = 2 * n;
    BitMatrix m(4 * n, 2 * n);
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t i = 0; i < sites; ++i) {
            if (code.x_support.get(g, i)) m.set(i, g, true);
            if (code.z_support.get(g, i)) m.set(sites + i, n + g, true);
        }
    return m;
}

struct DegeneracyReport {
    std::uint32_t group_order = 0;
    std::uint32_t rank_k = 0;
    std::int64_t log2_degeneracy = 0;  // = 2|G| - k
    std::int64_t logical_qubits = 0;   // same count; degeneracies stay in log2 form
};

inline DegeneracyReport degeneracy(const LRCode& code) {
    DegeneracyReport rep;
    rep.group_order = code.order();
    rep.rank_k = static_cast<std::uint32_t>(rank(assemble_MG(code)));
    rep.log2_degeneracy = 2ll * rep.group_order - rep.rank_k;
    rep.logical_qubits = rep.log2_degeneracy;
    return rep;
}

/// log2 degeneracy via the double-coset count: 2 * |<t>\G/<s>| for
/// S1 = {1,s}, S2 = {1,t}. Independent of the rank path.
inline std::int64_t degeneracy_by_double_cosets(const FiniteGroup& g, std::uint32_t s,
                                                std::uint32_t t) {
    if (s == g.identity() || t == g.identity())
        throw ConfigError("double-coset degeneracy requires nontrivial s and t");
    return 2ll * static_cast<std::int64_t>(double_cosets(g, t, s).size());
}

/// True iff all pairs of stabilizers commute. Pairs (X_g, X_h) and
/// (Z_g, Z_h) commute trivially; (X_g, Z_h) pairs to
/// |support(X_g) intersect support(Z_h)| mod 2.
inline bool check_commutation(const LRCode& code) {
    const std::uint32_t n = code.order();
    const std::size_t words = code.x_support.words_per_row();
    for (std::uint32_t i = 0; i < n; ++i) {
        const std::uint64_t* x = code.x_support.row(i);
        for (std::uint32_t j = 0; j < n; ++j) {
            const std::uint64_t* z = code.z_support.row(j);
            std::uint64_t acc = 0;
            for (std::size_t k = 0; k < words; ++k) acc ^= x[k] & z[k];
            if (std::popcount(acc) & 1) return false;
        }
    }
    return true;
}

/// Checks prod_g Z_g = prod_g X_g = I for even-parity subsets: the GF(2)
/// sum of all Z_g columns and of all X_g columns must vanish.
inline bool check_parity_identity(const LRCode& code) {
    if (code.s1.size() % 2 || code.s2.size() % 2)
        throw ConfigError("parity identity requires |S1| and |S2| both even");
    const std::uint32_t n = code.order();
    BitVec xsum(code.sites()), zsum(code.sites());
    for (std::uint32_t g = 0; g < n; ++g) {
        xsum.xor_in(code.x_support.row_vec(g));
        zsum.xor_in(code.z_support.row_vec(g));
    }
    return xsum.zero() && zsum.zero();
}

}  // namespace lrc
