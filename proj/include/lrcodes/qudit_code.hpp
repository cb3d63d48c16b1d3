#pragma once

#include <cstdint>
#include <vector>

#include "lrcodes/errors.hpp"
#include "lrcodes/group.hpp"
#include "lrcodes/prime_matrix.hpp"

namespace lrc {

/// Qudit generalization L(G,d,2) for prime d: stabilizers
///   A_g = prod (U1_{gv})^{m1(v)} (U2_{w^-1 g})^{m2(w)}        (Z-type)
///   B_g = prod (V1_{wg})^{m2(w)} (V2_{gv^-1})^{-m1(v)}        (X-type)
/// Exponents live in GF(d); a site whose accumulated exponent is 0 mod d
/// drops out of the support.
struct QuditLRCode {
    FiniteGroup::Ptr group;
    GroupSubset s1, s2;
    std::uint32_t d = 2;
    std::vector<std::uint32_t> m1, m2;  // aligned with s1/s2 members
    PrimeMatrix a_exponents;  // row g = Z-part exponents of A_g over the 2|G| sites
    PrimeMatrix b_exponents;  // row g = X-part exponents of B_g

    std::uint32_t order() const { return group->order(); }
};

inline QuditLRCode build_qudit_code(const FiniteGroup::Ptr& g, const GroupSubset& s1,
                                    const GroupSubset& s2, std::uint32_t d,
                                    const std::vector<std::uint32_t>& m1,
                                    const std::vector<std::uint32_t>& m2) {
    if (s1.parent().get() != g.get() || s2.parent().get() != g.get())
        throw ConfigError("S1/S2 parent group mismatch");
    if (s1.empty() || s2.empty()) throw ConfigError("S1 and S2 must be nonempty");
    if (!is_prime(d)) throw ConfigError("qudit dimension " + std::to_string(d) + " is not prime");
    if (m1.size() != s1.size() || m2.size() != s2.size())
        throw ConfigError("m1/m2 must assign one exponent per S1/S2 element");
    for (auto v : m1)
        if (v == 0 || v >= d) throw ConfigError("m1 values must lie in 1..d-1");
    for (auto v : m2)
        if (v == 0 || v >= d) throw ConfigError("m2 values must lie in 1..d-1");

    const std::uint32_t n = g->order();
    QuditLRCode code{g, s1, s2, d, m1, m2,
                     PrimeMatrix(d, n, 2ull * n), PrimeMatrix(d, n, 2ull * n)};
    for (std::uint32_t e = 0; e < n; ++e) {
        for (std::size_t i = 0; i < s1.size(); ++i) {
            const std::uint32_t v = s1.members()[i];
            code.a_exponents.add_at(e, g->mul(e, v), m1[i]);                    // (gv, +)
            code.b_exponents.add_at(e, n + g->mul(e, g->inv(v)),
                                    -static_cast<std::int64_t>(m1[i]));         // (gv^-1, -)
        }
        for (std::size_t i = 0; i < s2.size(); ++i) {
            const std::uint32_t w = s2.members()[i];
            code.a_exponents.add_at(e, n + g->mul(g->inv(w), e), m2[i]);        // (w^-1 g, -)
            code.b_exponents.add_at(e, g->mul(w, e), m2[i]);                    // (wg, +)
        }
    }
    return code;
}

/// The GF(d) analogue of M_G: columns 0..|G|-1 are B_g (X-type),
/// |G|..2|G|-1 are A_g (Z-type); rows as in the qubit layout.
inline PrimeMatrix assemble_qudit_MG(const QuditLRCode& code) {
    const std::size_t n = code.order();
    const std::size_t sites = 2 * n;
    PrimeMatrix m(code.d, 4 * n, 2 * n);
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t i = 0; i < sites; ++i) {
            m.set(i, g, code.b_exponents.at(g, i));
            m.set(sites + i, n + g, code.a_exponents.at(g, i));
        }
    return m;
}

/// All pairs (B_g, A_h) must satisfy x1.z2 - z1.x2 = 0 mod d; pure types
/// reduce this to B_g's X-part dotted with A_h's Z-part.
inline bool check_qudit_commutation(const QuditLRCode& code) {
    const std::uint32_t n = code.order();
    const std::uint64_t d = code.d;
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) {
            std::uint64_t acc = 0;
            for (std::size_t k = 0; k < 2ull * n; ++k)
                acc = (acc + static_cast<std::uint64_t>(code.b_exponents.at(i, k)) *
                                 code.a_exponents.at(j, k)) % d;
            if (acc) return false;
        }
    return true;
}

/// log_d degeneracy = 2|G| - rank of the GF(d) stabilizer matrix.
inline std::int64_t qudit_degeneracy(const QuditLRCode& code) {
    return 2ll * code.order() -
           static_cast<std::int64_t>(rank_mod_p(assemble_qudit_MG(code)));
}

}  // namespace lrc
