#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "lrcodes/errors.hpp"
#include "lrcodes/families.hpp"
#include "lrcodes/lr_code.hpp"
#include "lrcodes/qudit_code.hpp"
#include "lrcodes/syndrome.hpp"

namespace lrc {

inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 1469598103934665603ull;
    for (const unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string fnv1a64_hex(std::string_view s) {
    static const char* hexd = "0123456789abcdef";
    std::uint64_t h = fnv1a64(s);
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = hexd[h & 15];
        h >>= 4;
    }
    return out;
}

/// Positional qudit data: prime d plus one exponent per S1/S2 entry.
struct QuditBlock {
    std::uint32_t d = 2;
    std::vector<std::uint32_t> m1, m2;
};

enum class TowerMode { chain, all_up_to_index, explicit_list };

inline const char* tower_mode_name(TowerMode m) {
    switch (m) {
        case TowerMode::chain: return "chain";
        case TowerMode::all_up_to_index: return "all-up-to-index";
        case TowerMode::explicit_list: return "explicit-list";
    }
    return "?";
}

/// A finite, explicitly enumerated family of FINs of a group family.
struct TowerSpec {
    GroupFamily family;
    TowerMode mode = TowerMode::explicit_list;
    std::vector<KernelSpec> nodes;
    std::uint64_t index_max = 0;  // all-up-to-index mode
};

/// Expands all-up-to-index mode into a concrete node list; other modes pass
/// through. Order: ascending index, then canonical enumeration order.
inline std::vector<KernelSpec> expand_nodes(const TowerSpec& spec) {
    if (spec.mode != TowerMode::all_up_to_index) return spec.nodes;
    if (spec.index_max < 1) throw ConfigError("all-up-to-index mode needs index_max >= 1");
    std::vector<KernelSpec> nodes;
    switch (spec.family.kind) {
        case GroupFamily::Kind::lattice:
            for (Int idx = 1; idx <= static_cast<Int>(spec.index_max); ++idx)
                for (auto& h : lat::enumerate_sublattices(spec.family.dim, idx))
                    nodes.push_back(KernelSpec::for_lattice(std::move(h)));
            break;
        case GroupFamily::Kind::dihedral_inf:
            for (Int n = 1; 2 * n <= static_cast<Int>(spec.index_max); ++n)
                nodes.push_back(KernelSpec::for_dihedral(n));
            break;
        case GroupFamily::Kind::finite: {
            auto subs = normal_subgroups(spec.family.base);
            std::stable_sort(subs.begin(), subs.end(),
                             [](const GroupSubset& a, const GroupSubset& b) {
                                 return a.size() > b.size();  // larger N = smaller index first
                             });
            for (const auto& n : subs)
                if (spec.family.base->order() / n.size() <= spec.index_max)
                    nodes.push_back(KernelSpec::for_finite(n.members()));
            break;
        }
    }
    return nodes;
}

struct ChainReport {
    bool nested = false;
    std::vector<std::uint64_t> indices;
    bool strictly_increasing = false;  // computable proxy for cofinality
};

namespace detail {

inline std::uint64_t kernel_index(const GroupFamily& fam, const KernelSpec& k) {
    switch (fam.kind) {
        case GroupFamily::Kind::lattice:
            return static_cast<std::uint64_t>(std::llabs(lat::det(k.lattice)));
        case GroupFamily::Kind::dihedral_inf:
            return 2ull * static_cast<std::uint64_t>(k.dihedral_n);
        case GroupFamily::Kind::finite:
            return fam.base->order() / k.elements.size();
    }
    return 0;
}

inline bool kernel_nested(const GroupFamily& fam, const KernelSpec& outer,
                          const KernelSpec& inner) {
    // outer contains inner (N superset M)
    switch (fam.kind) {
        case GroupFamily::Kind::lattice:
            return lat::lattice_subset(inner.lattice, outer.lattice);
        case GroupFamily::Kind::dihedral_inf:
            return inner.dihedral_n % outer.dihedral_n == 0;
        case GroupFamily::Kind::finite:
            return std::includes(outer.elements.begin(), outer.elements.end(),
                                 inner.elements.begin(), inner.elements.end());
    }
    return false;
}

}  // namespace detail

/// Confirms each consecutive pair of a chain is nested (N_i contains N_{i+1})
/// and reports the index sequence. Throws on a non-nested chain.
inline ChainReport verify_chain(const TowerSpec& spec) {
    if (spec.mode != TowerMode::chain) throw ConfigError("verify_chain needs chain mode");
    if (spec.nodes.empty()) throw ConfigError("chain has no nodes");
    ChainReport rep;
    for (std::size_t i = 0; i + 1 < spec.nodes.size(); ++i)
        if (!detail::kernel_nested(spec.family, spec.nodes[i], spec.nodes[i + 1]))
            throw ConfigError("chain is not nested at step " + std::to_string(i) + ": " +
                              spec.nodes[i + 1].canonical(spec.family) + " is not contained in " +
                              spec.nodes[i].canonical(spec.family));
    rep.nested = true;
    for (const auto& n : spec.nodes)
        rep.indices.push_back(detail::kernel_index(spec.family, n));
    rep.strictly_increasing = true;
    for (std::size_t i = 0; i + 1 < rep.indices.size(); ++i)
        if (rep.indices[i + 1] <= rep.indices[i]) rep.strictly_increasing = false;
    return rep;
}

struct ScanCaps {
    GroupCaps group;
    WeightCaps weight;
    BfsCaps bfs;
};

struct ScanOptions {
    bool min_excitation = false;
    bool timing = false;  // off: seconds column reports 0 (bit-exact reruns)
    std::optional<QuditBlock> qudit;
    unsigned threads = 1;
    std::optional<std::string> cache_dir;
    ScanCaps caps;
};

struct ScanRow {
    std::string kernel;
    std::uint64_t index = 0;
    std::optional<std::uint32_t> rank;
    std::optional<std::int64_t> log_degeneracy;  // log2, or log_d for qudit scans
    std::optional<std::uint64_t> min_excitation;
    double seconds = 0.0;
    std::vector<std::string> warnings;
    std::optional<std::string> error;
    bool from_cache = false;
};

namespace detail {

inline std::string canonical_family_label(const GroupFamily& fam, const std::string& label) {
    const FamilyElement e = parse_family_element(fam, label);
    switch (fam.kind) {
        case GroupFamily::Kind::lattice: {
            std::string out = "(";
            for (std::size_t i = 0; i < e.coords.size(); ++i)
                out += (i ? "," : "") + std::to_string(e.coords[i]);
            return out + ")";
        }
        case GroupFamily::Kind::dihedral_inf: {
            if (!e.dih_s && !e.dih_r) return "1";
            std::string out = e.dih_s ? "s" : "";
            if (e.dih_r) out += "r" + std::to_string(e.dih_r);
            return out;
        }
        case GroupFamily::Kind::finite:
            return fam.base->label(e.finite_index);
    }
    return label;
}

inline std::string cache_key(const GroupFamily& fam, const KernelSpec& kernel,
                             const std::vector<std::string>& s1,
                             const std::vector<std::string>& s2,
                             const std::optional<QuditBlock>& qudit) {
    std::string key = fam.spec + "|" + kernel.canonical(fam) + "|s1=";
    for (const auto& l : s1) key += canonical_family_label(fam, l) + " ";
    key += "|s2=";
    for (const auto& l : s2) key += canonical_family_label(fam, l) + " ";
    key += "|qudit=";
    if (qudit) {
        key += "d" + std::to_string(qudit->d) + ";m1=";
        for (auto m : qudit->m1) key += std::to_string(m) + " ";
        key += ";m2=";
        for (auto m : qudit->m2) key += std::to_string(m) + " ";
    } else {
        key += "-";
    }
    return key;
}

}  // namespace detail

/// File cache for scan rows, keyed by (family, kernel, S1, S2, qudit block).
/// Single-writer: all access is serialized through one mutex.
class ScanCache {
public:
    explicit ScanCache(std::string dir) : dir_(std::move(dir)) {
        std::filesystem::create_directories(dir_);
    }

    std::optional<ScanRow> lookup(const std::string& key, bool need_min_excitation) {
        std::lock_guard<std::mutex> lock(mu_);
        std::ifstream in(path_for(key));
        if (!in) return std::nullopt;
        nlohmann::json j;
        try {
            in >> j;
        } catch (const std::exception&) {
            return std::nullopt;  // corrupt entry: recompute
        }
        if (j.value("key", "") != key) return std::nullopt;  // hash collision guard
        ScanRow row;
        row.index = j.at("index").get<std::uint64_t>();
        row.rank = j.at("rank").get<std::uint32_t>();
        row.log_degeneracy = j.at("log_degeneracy").get<std::int64_t>();
        if (j.contains("min_excitation") && !j["min_excitation"].is_null())
            row.min_excitation = j["min_excitation"].get<std::uint64_t>();
        else if (need_min_excitation)
            return std::nullopt;
        if (j.contains("warnings"))
            row.warnings = j["warnings"].get<std::vector<std::string>>();
        row.from_cache = true;
        return row;
    }

    void store(const std::string& key, const ScanRow& row) {
        std::lock_guard<std::mutex> lock(mu_);
        nlohmann::json j;
        j["key"] = key;
        j["index"] = row.index;
        j["rank"] = *row.rank;
        j["log_degeneracy"] = *row.log_degeneracy;
        if (row.min_excitation) j["min_excitation"] = *row.min_excitation;
        else j["min_excitation"] = nullptr;
        j["warnings"] = row.warnings;
        std::ofstream out(path_for(key));
        out << j.dump();
    }

private:
    std::string path_for(const std::string& key) const {
        return dir_ + "/" + fnv1a64_hex(key) + ".json";
    }

    std::string dir_;
    std::mutex mu_;
};

/// Scans LR-code invariants over the tower nodes. One row per node in spec
/// order; per-node failures are recorded in the row, not thrown. Rows are
/// byte-identical across runs and thread counts (timing defaults to off).
inline std::vector<ScanRow> tower_scan(const TowerSpec& spec,
                                       const std::vector<std::string>& s1_labels,
                                       const std::vector<std::string>& s2_labels,
                                       const ScanOptions& opt = {}) {
    if (spec.mode == TowerMode::chain) verify_chain(spec);
    const std::vector<KernelSpec> nodes = expand_nodes(spec);
    if (nodes.empty()) throw ConfigError("tower has no nodes");
    if (opt.qudit && opt.min_excitation)
        throw ConfigError("min-excitation is not supported for qudit scans");
    if (opt.qudit && (opt.qudit->m1.size() != s1_labels.size() ||
                      opt.qudit->m2.size() != s2_labels.size()))
        throw ConfigError("qudit m1/m2 must assign one exponent per S1/S2 element");

    std::optional<ScanCache> cache;
    if (opt.cache_dir) cache.emplace(*opt.cache_dir);

    std::vector<ScanRow> rows(nodes.size());
    auto run_node = [&](std::size_t i) {
        ScanRow& row = rows[i];
        row.kernel = nodes[i].canonical(spec.family);
        const std::string key =
            detail::cache_key(spec.family, nodes[i], s1_labels, s2_labels, opt.qudit);
        if (cache) {
            if (auto hit = cache->lookup(key, opt.min_excitation)) {
                row.index = hit->index;
                row.rank = hit->rank;
                row.log_degeneracy = hit->log_degeneracy;
                row.min_excitation = hit->min_excitation;
                row.warnings = hit->warnings;
                row.from_cache = true;
                return;
            }
        }
        const auto t0 = std::chrono::steady_clock::now();
        try {
            ProjectedSubsets pr =
                project_subsets(spec.family, s1_labels, s2_labels, nodes[i], opt.caps.group);
            row.index = pr.quotient.index();
            row.warnings = pr.warnings;
            if (opt.qudit) {
                // descend exponents with the subsets: collapsing elements
                // accumulate additively mod d
                const std::uint32_t d = opt.qudit->d;
                auto descend = [&](const std::vector<std::string>& labels,
                                   const std::vector<std::uint32_t>& m, const GroupSubset& img,
                                   const char* name) {
                    std::vector<std::uint32_t> out(img.size(), 0);
                    for (std::size_t j = 0; j < labels.size(); ++j) {
                        const std::uint32_t tgt =
                            pr.quotient.map(parse_family_element(spec.family, labels[j]));
                        const auto pos = std::lower_bound(img.members().begin(),
                                                          img.members().end(), tgt) -
                                         img.members().begin();
                        out[static_cast<std::size_t>(pos)] =
                            (out[static_cast<std::size_t>(pos)] + m[j]) % d;
                    }
                    for (auto v : out)
                        if (v == 0)
                            throw ConfigError(std::string(name) +
                                              " qudit exponents collapse to 0 mod d under kernel");
                    return out;
                };
                const auto m1 = descend(s1_labels, opt.qudit->m1, pr.s1, "s1");
                const auto m2 = descend(s2_labels, opt.qudit->m2, pr.s2, "s2");
                QuditLRCode code = build_qudit_code(pr.quotient.target, pr.s1, pr.s2, d, m1, m2);
                const auto k = static_cast<std::uint32_t>(rank_mod_p(assemble_qudit_MG(code)));
                row.rank = k;
                row.log_degeneracy = 2ll * code.order() - k;
            } else {
                LRCode code = build_code(pr.quotient.target, pr.s1, pr.s2);
                DegeneracyReport rep = degeneracy(code);
                row.rank = rep.rank_k;
                row.log_degeneracy = rep.log2_degeneracy;
                if (opt.min_excitation)
                    row.min_excitation = min_excitation_energy(code, ExcitationStrategy::auto_pick,
                                                               opt.caps.weight, opt.caps.bfs)
                                             .energy;
            }
            if (cache) cache->store(key, row);
        } catch (const std::exception& e) {
            row.error = e.what();
        }
        if (opt.timing) {
            const auto t1 = std::chrono::steady_clock::now();
            row.seconds = std::chrono::duration<double>(t1 - t0).count();
        }
    };

    if (opt.threads <= 1 || nodes.size() == 1) {
        for (std::size_t i = 0; i < nodes.size(); ++i) run_node(i);
    } else {
        std::atomic<std::size_t> next{0};
        const unsigned nt = std::min<std::size_t>(opt.threads, nodes.size());
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < nt; ++t)
            pool.emplace_back([&] {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= nodes.size()) break;
                    run_node(i);
                }
            });
        for (auto& t : pool) t.join();
    }
    return rows;
}

}  // namespace lrc
