#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "lrcodes/bitmatrix.hpp"
#include "lrcodes/errors.hpp"
#include "lrcodes/lr_code.hpp"
#include "lrcodes/weight_enum.hpp"

namespace lrc {

/// A Pauli error: X/Z indicator bits over the 2|G| sites (Y = both).
struct PauliError {
    BitVec x, z;

    static PauliError empty(const LRCode& code) {
        return PauliError{BitVec(code.sites()), BitVec(code.sites())};
    }
};

/// One "hit site" of an error spec: group element label, layer, Pauli letter.
struct ErrorOp {
    std::string site;
    char layer = '+';   // '+' or '-'
    char pauli = 'X';   // 'X', 'Y', 'Z'
};

inline PauliError make_error(const LRCode& code, const std::vector<ErrorOp>& ops) {
    PauliError e = PauliError::empty(code);
    const std::uint32_t n = code.order();
    for (const auto& op : ops) {
        const std::uint32_t g = code.group->parse_element(op.site);
        std::size_t site = g;
        if (op.layer == '-') site += n;
        else if (op.layer != '+') throw ConfigError("error layer must be '+' or '-'");
        switch (op.pauli) {
            case 'X': e.x.flip(site); break;
            case 'Z': e.z.flip(site); break;
            case 'Y': e.x.flip(site); e.z.flip(site); break;
            default: throw ConfigError("Pauli letter must be X, Y or Z");
        }
    }
    return e;
}

struct AppliedError {
    BitVec syndrome;                     // one bit per stabilizer column, X_g then Z_g
    std::uint64_t energy = 0;            // number of violated stabilizer terms
    std::vector<std::string> violated;   // labels of violated stabilizers
};

/// Syndrome of a Pauli error: bit c is the symplectic pairing with stabilizer
/// column c. X_g is violated by the error's Z-part on its support, Z_g by the
/// error's X-part.
inline AppliedError apply_error(const LRCode& code, const PauliError& err) {
    const std::uint32_t n = code.order();
    if (err.x.size() != code.sites() || err.z.size() != code.sites())
        throw ConfigError("error vector length does not match the code's sites");
    AppliedError out;
    out.syndrome = BitVec(2ull * n);
    for (std::uint32_t g = 0; g < n; ++g) {
        std::uint64_t accx = 0, accz = 0;
        const std::uint64_t* xs = code.x_support.row(g);
        const std::uint64_t* zs = code.z_support.row(g);
        for (std::size_t k = 0; k < code.x_support.words_per_row(); ++k) {
            accx ^= xs[k] & err.z.words()[k];
            accz ^= zs[k] & err.x.words()[k];
        }
        if (std::popcount(accx) & 1) out.syndrome.set(g, true);
        if (std::popcount(accz) & 1) out.syndrome.set(n + g, true);
    }
    out.energy = out.syndrome.weight();
    for (std::size_t c = 0; c < 2ull * n; ++c)
        if (out.syndrome.get(c)) out.violated.push_back(code.stabilizer_label(c));
    return out;
}

/// Independent-stabilizer count, the dependency space among stabilizer
/// columns, and a basis of achievable syndromes with witness errors.
struct SyndromeSpace {
    std::uint32_t k = 0;          // rank of M_G
    BitMatrix dependency_basis;   // basis of {y : M_G y = 0}, dim 2|G| - k
    BitMatrix achievable_basis;   // RREF basis of the row space of M_G, dim k
    std::vector<PauliError> witnesses;  // witnesses[i] realizes achievable_basis row i
};

inline SyndromeSpace syndrome_space(const LRCode& code) {
    const BitMatrix m = assemble_MG(code);
    SyndromeSpace ss;
    ss.dependency_basis = nullspace(m);
    ss.achievable_basis = row_space_basis(m);
    ss.k = static_cast<std::uint32_t>(ss.achievable_basis.rows());
    if (ss.dependency_basis.rows() + ss.k != m.cols())
        throw InternalError("syndrome space: rank/nullity mismatch");

    // witness errors: solve M^T f = s, then e = (x,z) with z = f's X-half,
    // x = f's Z-half (the symplectic form swaps the halves)
    const BitMatrix mt = m.transposed();
    const std::size_t sites = code.sites();
    for (std::size_t i = 0; i < ss.k; ++i) {
        const BitVec s = ss.achievable_basis.row_vec(i);
        auto f = solve(mt, s);
        if (!f) throw InternalError("achievable syndrome basis vector is unsolvable");
        PauliError e = PauliError::empty(code);
        for (std::size_t j = 0; j < sites; ++j) {
            if (f->get(j)) e.z.set(j, true);
            if (f->get(sites + j)) e.x.set(j, true);
        }
        if (!(apply_error(code, e).syndrome == s))
            throw InternalError("witness error does not reproduce its syndrome");
        ss.witnesses.push_back(std::move(e));
    }
    return ss;
}

struct SpectrumEntry {
    std::uint64_t energy = 0;
    std::uint64_t syndrome_count = 0;  // achievable syndromes of this weight
};

/// Exact or truncated energy spectrum. The eigenspace dimension at energy E
/// is syndrome_count(E) * 2^(2|G| - k); dimensions are reported as that pair
/// (counts can be astronomically large otherwise).
struct SpectrumTable {
    std::vector<SpectrumEntry> entries;
    std::uint32_t group_order = 0;
    std::uint32_t k = 0;
    std::int64_t log2_factor = 0;  // 2|G| - k
    bool exact = true;
    std::uint64_t e_max = 0;  // truncated mode: entries cover E <= e_max only
};

struct SpectrumMode {
    bool exact = true;
    std::uint64_t e_max = 0;
};

inline SpectrumTable spectrum(const LRCode& code, const SpectrumMode& mode,
                              const WeightCaps& caps = {}, unsigned threads = 1) {
    const SyndromeSpace ss = syndrome_space(code);
    SpectrumTable t;
    t.group_order = code.order();
    t.k = ss.k;
    t.log2_factor = 2ll * code.order() - ss.k;
    t.exact = mode.exact;
    const WeightDistribution wd =
        weight_distribution(ss.achievable_basis, WeightMode{mode.exact, mode.e_max}, caps, threads);
    const std::uint64_t top = mode.exact ? 2ull * code.order() : mode.e_max;
    t.e_max = top;
    for (std::uint64_t e = 0; e <= top; ++e) {
        const auto it = wd.counts.find(e);
        t.entries.push_back({e, it == wd.counts.end() ? 0 : it->second});
    }
    return t;
}

enum class ExcitationStrategy { syndrome_enum, error_bfs, auto_pick };

struct MinExcitationResult {
    std::uint64_t energy = 0;
    bool exact = true;          // false: proven upper bound only
    std::string strategy;       // which search produced the value
    std::uint64_t radius = 0;   // error-bfs: largest support size explored
};

struct BfsCaps {
    std::size_t node_cap = 1u << 25;  // hash-set mode: max distinct syndromes
};

namespace detail {

/// BFS over the syndrome space by increasing error support size. Moves are
/// single-site Paulis (X, Z, Y), one move per site, so BFS depth equals the
/// minimal support of an error realizing the syndrome. Exact once the
/// frontier closes (all achievable syndromes seen) or energy 1 is found.
inline MinExcitationResult min_excitation_bfs(const LRCode& code, const BfsCaps& caps) {
    const std::uint32_t n = code.order();
    const std::size_t cols = 2ull * n;
    // generator syndromes for single-site X / Z / Y errors
    std::vector<BitVec> gens;
    gens.reserve(3 * cols);
    for (std::size_t site = 0; site < cols; ++site) {
        BitVec sx(cols), sz(cols);
        for (std::uint32_t g = 0; g < n; ++g) {
            if (code.z_support.get(g, site)) sx.set(n + g, true);  // X error flips Z_g checks
            if (code.x_support.get(g, site)) sz.set(g, true);      // Z error flips X_g checks
        }
        BitVec sy = sx;
        sy.xor_in(sz);
        gens.push_back(std::move(sx));
        gens.push_back(std::move(sz));
        gens.push_back(std::move(sy));
    }

    MinExcitationResult res;
    res.strategy = "error-bfs";
    std::uint64_t best = ~0ull;

    if (cols <= 26) {
        // dense visited bitset over the full syndrome space
        std::vector<std::uint64_t> gen_masks;
        gen_masks.reserve(gens.size());
        for (const auto& g : gens) gen_masks.push_back(g.to_u64());
        std::vector<std::uint64_t> visited((1ull << cols) / 64 + 1, 0);
        auto test_and_set = [&](std::uint64_t s) {
            const std::uint64_t m = 1ull << (s & 63);
            const bool was = visited[s >> 6] & m;
            visited[s >> 6] |= m;
            return was;
        };
        std::vector<std::uint32_t> frontier{0};
        test_and_set(0);
        std::uint64_t level = 0;
        while (!frontier.empty() && best > 1) {
            ++level;
            std::vector<std::uint32_t> next;
            for (const std::uint32_t s : frontier)
                for (const std::uint64_t g : gen_masks) {
                    const auto ns = static_cast<std::uint32_t>(s ^ g);
                    if (test_and_set(ns)) continue;
                    const auto w = static_cast<std::uint64_t>(std::popcount(ns));
                    if (ns && w < best) best = w;
                    next.push_back(ns);
                }
            frontier = std::move(next);
            res.radius = level;
            if (frontier.empty()) break;  // closure: every achievable syndrome seen
        }
        res.energy = best;
        res.exact = true;  // closure reached or best == 1
        return res;
    }

    // hash-set mode for wider syndromes; exact only on closure within the cap
    struct VecHash {
        std::size_t operator()(const std::vector<std::uint64_t>& v) const {
            std::size_t h = 1469598103934665603ull;
            for (auto x : v) {
                h ^= x;
                h *= 1099511628211ull;
            }
            return h;
        }
    };
    std::unordered_set<std::vector<std::uint64_t>, VecHash> visited;
    std::vector<BitVec> frontier{BitVec(cols)};
    visited.insert(frontier[0].words());
    bool closed = false;
    std::uint64_t level = 0;
    while (!frontier.empty() && best > 1) {
        ++level;
        std::vector<BitVec> next;
        for (const auto& s : frontier)
            for (const auto& g : gens) {
                BitVec ns = s;
                ns.xor_in(g);
                if (!visited.insert(ns.words()).second) continue;
                const std::uint64_t w = ns.weight();
                if (w && w < best) best = w;
                next.push_back(std::move(ns));
                if (visited.size() > caps.node_cap) {
                    MinExcitationResult out;
                    out.strategy = "error-bfs";
                    out.energy = best;
                    out.exact = false;  // upper bound only: search hit the node cap
                    out.radius = level;
                    return out;
                }
            }
        closed = next.empty();
        frontier = std::move(next);
        res.radius = level;
    }
    res.energy = best;
    res.exact = closed || best == 1;
    return res;
}

}  // namespace detail

/// Minimal excitation energy: the smallest Hamming weight over nonzero
/// achievable syndromes.
inline MinExcitationResult min_excitation_energy(const LRCode& code,
                                                 ExcitationStrategy strategy,
                                                 const WeightCaps& wcaps = {},
                                                 const BfsCaps& bcaps = {},
                                                 unsigned threads = 1) {
    if (strategy == ExcitationStrategy::auto_pick) {
        const std::size_t k = rank(assemble_MG(code));
        strategy = k <= wcaps.exact_rows ? ExcitationStrategy::syndrome_enum
                                         : ExcitationStrategy::error_bfs;
    }
    if (strategy == ExcitationStrategy::error_bfs)
        return detail::min_excitation_bfs(code, bcaps);

    const SyndromeSpace ss = syndrome_space(code);
    const WeightDistribution wd =
        weight_distribution_exact(ss.achievable_basis, wcaps, threads);
    MinExcitationResult res;
    res.strategy = "syndrome-enum";
    res.exact = true;
    for (const auto& [w, c] : wd.counts)
        if (w > 0 && c > 0) {
            res.energy = w;
            return res;
        }
    throw InternalError("no nonzero achievable syndrome exists");
}

}  // namespace lrc
