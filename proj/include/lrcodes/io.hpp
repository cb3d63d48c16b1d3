#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lrcodes/errors.hpp"
#include "lrcodes/lr_code.hpp"
#include "lrcodes/qudit_code.hpp"
#include "lrcodes/syndrome.hpp"
#include "lrcodes/tower.hpp"
#include "lrcodes/version.hpp"

namespace lrc {

using json = nlohmann::json;

enum class Command { verify, degeneracy, spectrum, min_excitation, scan, apply_error };

inline const char* command_name(Command c) {
    switch (c) {
        case Command::verify: return "verify";
        case Command::degeneracy: return "degeneracy";
        case Command::spectrum: return "spectrum";
        case Command::min_excitation: return "min-excitation";
        case Command::scan: return "scan";
        case Command::apply_error: return "apply-error";
    }
    return "?";
}

namespace detail {

inline void reject_unknown_keys(const json& j, std::initializer_list<const char*> allowed,
                                const char* where) {
    for (const auto& [key, _] : j.items()) {
        bool ok = false;
        for (const char* a : allowed)
            if (key == a) { ok = true; break; }
        if (!ok)
            throw ConfigError(std::string("unknown key '") + key + "' in " + where);
    }
}

inline std::vector<std::string> string_list(const json& j, const char* what) {
    std::vector<std::string> out;
    if (!j.is_array()) throw ConfigError(std::string(what) + " must be a list");
    for (const auto& v : j) {
        if (v.is_string()) out.push_back(v.get<std::string>());
        else if (v.is_number_integer()) out.push_back(std::to_string(v.get<long long>()));
        else if (v.is_array()) {
            std::string t = "(";
            for (std::size_t i = 0; i < v.size(); ++i)
                t += (i ? "," : "") + std::to_string(v[i].get<long long>());
            out.push_back(t + ")");
        } else {
            throw ConfigError(std::string(what) + " entries must be labels, integers or tuples");
        }
    }
    return out;
}

}  // namespace detail

/// Code spec: group, subsets, optional qudit block. The JSON file form is
///   {"group": "...", "s1": [...], "s2": [...], "qudit": {"d":p,"m1":[...],"m2":[...]}}
struct CodeSpec {
    std::string group_spec;
    std::vector<std::string> s1, s2;
    std::optional<QuditBlock> qudit;

    static CodeSpec from_json(const json& j) {
        detail::reject_unknown_keys(j, {"group", "s1", "s2", "qudit"}, "code spec");
        CodeSpec c;
        if (!j.contains("group")) throw ConfigError("code spec needs a 'group' key");
        c.group_spec = j.at("group").get<std::string>();
        c.s1 = detail::string_list(j.at("s1"), "s1");
        c.s2 = detail::string_list(j.at("s2"), "s2");
        if (j.contains("qudit")) {
            const auto& q = j.at("qudit");
            detail::reject_unknown_keys(q, {"d", "m1", "m2"}, "qudit block");
            QuditBlock b;
            b.d = q.at("d").get<std::uint32_t>();
            if (q.contains("m1")) b.m1 = q.at("m1").get<std::vector<std::uint32_t>>();
            else b.m1.assign(c.s1.size(), 1);
            if (q.contains("m2")) b.m2 = q.at("m2").get<std::vector<std::uint32_t>>();
            else b.m2.assign(c.s2.size(), 1);
            c.qudit = std::move(b);
        }
        return c;
    }

    static CodeSpec from_file(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw ConfigError("cannot open code spec file '" + path + "'");
        json j;
        try {
            in >> j;
        } catch (const std::exception& e) {
            throw ConfigError("bad JSON in '" + path + "': " + e.what());
        }
        return from_json(j);
    }
};

/// Tower config:
///   {"family":"Z3","mode":"chain|all-up-to-index|explicit-list",
///    "nodes":[...], "index_max":n, "s1":[...], "s2":[...],
///    "options":{"min_excitation":bool,"timing":bool,"qudit":{...}}}
struct TowerConfig {
    TowerSpec spec;
    std::vector<std::string> s1, s2;
    bool min_excitation = false;
    bool timing = false;
    std::optional<QuditBlock> qudit;

    static TowerConfig from_json(const json& j, const GroupCaps& caps = {}) {
        detail::reject_unknown_keys(
            j, {"family", "mode", "nodes", "index_max", "s1", "s2", "options"}, "tower config");
        TowerConfig t;
        t.spec.family = GroupFamily::parse(j.at("family").get<std::string>(), caps);
        const std::string mode = j.value("mode", "explicit-list");
        if (mode == "chain") t.spec.mode = TowerMode::chain;
        else if (mode == "all-up-to-index") t.spec.mode = TowerMode::all_up_to_index;
        else if (mode == "explicit-list") t.spec.mode = TowerMode::explicit_list;
        else throw ConfigError("unknown tower mode '" + mode + "'");

        if (t.spec.mode == TowerMode::all_up_to_index) {
            if (!j.contains("index_max"))
                throw ConfigError("all-up-to-index mode needs 'index_max'");
            t.spec.index_max = j.at("index_max").get<std::uint64_t>();
        } else {
            if (!j.contains("nodes")) throw ConfigError("tower config needs 'nodes'");
            for (const auto& node : j.at("nodes")) t.spec.nodes.push_back(parse_node(t.spec.family, node));
        }
        t.s1 = detail::string_list(j.at("s1"), "s1");
        t.s2 = detail::string_list(j.at("s2"), "s2");
        if (j.contains("options")) {
            const auto& o = j.at("options");
            detail::reject_unknown_keys(o, {"min_excitation", "timing", "qudit"}, "tower options");
            t.min_excitation = o.value("min_excitation", false);
            t.timing = o.value("timing", false);
            if (o.contains("qudit")) {
                const auto& q = o.at("qudit");
                detail::reject_unknown_keys(q, {"d", "m1", "m2"}, "qudit block");
                QuditBlock b;
                b.d = q.at("d").get<std::uint32_t>();
                if (q.contains("m1")) b.m1 = q.at("m1").get<std::vector<std::uint32_t>>();
                else b.m1.assign(t.s1.size(), 1);
                if (q.contains("m2")) b.m2 = q.at("m2").get<std::vector<std::uint32_t>>();
                else b.m2.assign(t.s2.size(), 1);
                t.qudit = std::move(b);
            }
        }
        return t;
    }

    static TowerConfig from_file(const std::string& path, const GroupCaps& caps = {}) {
        std::ifstream in(path);
        if (!in) throw ConfigError("cannot open tower config '" + path + "'");
        json j;
        try {
            in >> j;
        } catch (const std::exception& e) {
            throw ConfigError("bad JSON in '" + path + "': " + e.what());
        }
        return from_json(j, caps);
    }

private:
    static KernelSpec parse_node(const GroupFamily& fam, const json& node) {
        switch (fam.kind) {
            case GroupFamily::Kind::lattice: {
                if (node.is_number_integer()) {
                    if (fam.dim != 1)
                        throw ConfigError("integer node only valid for family Z; give matrix rows");
                    return KernelSpec::for_lattice({{node.get<Int>()}});
                }
                if (node.is_string())
                    return KernelSpec::for_lattice(
                        lat::mat_from_string(node.get<std::string>(), fam.dim));
                if (node.is_array()) {
                    IntMat m;
                    for (const auto& row : node) m.push_back(row.get<std::vector<Int>>());
                    if (static_cast<int>(m.size()) != fam.dim)
                        throw ConfigError("kernel matrix must be " + std::to_string(fam.dim) +
                                          "x" + std::to_string(fam.dim));
                    return KernelSpec::for_lattice(std::move(m));
                }
                throw ConfigError("lattice node must be an integer, 'a,b;c,d' string, or matrix");
            }
            case GroupFamily::Kind::dihedral_inf:
                if (node.is_number_integer()) return KernelSpec::for_dihedral(node.get<Int>());
                if (node.is_string()) {
                    std::string s = node.get<std::string>();
                    if (s.rfind("r^", 0) == 0) s = s.substr(2);
                    return KernelSpec::for_dihedral(std::stoll(s));
                }
                throw ConfigError("dihedral node must be n or 'r^n' (kernel <r^n>)");
            case GroupFamily::Kind::finite: {
                if (!node.is_array())
                    throw ConfigError("finite-family node must be a list of element labels");
                std::vector<std::uint32_t> elems;
                for (const auto& lbl : detail::string_list(node, "kernel"))
                    elems.push_back(fam.base->parse_element(lbl));
                return KernelSpec::for_finite(std::move(elems));
            }
        }
        throw ConfigError("bad tower node");
    }
};

struct Caps {
    std::uint32_t group_order = 4096;
    std::uint32_t enumeration = 24;  // exact weight/syndrome enumeration: 2^24
    std::uint64_t search_radius = 1ull << 25;  // error-bfs node budget
};

struct RunConfig {
    Command command = Command::verify;
    std::optional<CodeSpec> code;
    std::optional<TowerConfig> tower;
    // spectrum
    SpectrumMode spectrum_mode;
    // min-excitation
    ExcitationStrategy strategy = ExcitationStrategy::auto_pick;
    // apply-error
    std::vector<ErrorOp> error_ops;
    // output
    std::string format = "text";
    std::optional<std::string> out_path;
    Caps caps;
    unsigned threads = 1;
    std::optional<std::string> cache_dir;
    std::vector<std::string> warnings;  // accumulated while resolving config
};

struct ResultEnvelope {
    std::string command;
    std::string input_digest;
    std::string version = kVersion;
    json payload;
    std::vector<std::string> warnings;
};

namespace detail {

inline json digest_region(const RunConfig& c) {
    // the part of the resolved config that determines the payload; format,
    // caps, threads, cache and timing are excluded by contract
    json j;
    j["command"] = command_name(c.command);
    if (c.code) {
        json cs;
        cs["group"] = c.code->group_spec;
        cs["s1"] = c.code->s1;
        cs["s2"] = c.code->s2;
        if (c.code->qudit) {
            cs["qudit"] = {{"d", c.code->qudit->d},
                           {"m1", c.code->qudit->m1},
                           {"m2", c.code->qudit->m2}};
        }
        j["code"] = cs;
    }
    if (c.tower) {
        json ts;
        ts["family"] = c.tower->spec.family.spec;
        ts["mode"] = tower_mode_name(c.tower->spec.mode);
        std::vector<std::string> nodes;
        for (const auto& n : c.tower->spec.nodes) nodes.push_back(n.canonical(c.tower->spec.family));
        ts["nodes"] = nodes;
        ts["index_max"] = c.tower->spec.index_max;
        ts["s1"] = c.tower->s1;
        ts["s2"] = c.tower->s2;
        ts["min_excitation"] = c.tower->min_excitation;
        if (c.tower->qudit)
            ts["qudit"] = {{"d", c.tower->qudit->d},
                           {"m1", c.tower->qudit->m1},
                           {"m2", c.tower->qudit->m2}};
        j["tower"] = ts;
    }
    if (c.command == Command::spectrum)
        j["spectrum"] = {{"exact", c.spectrum_mode.exact}, {"e_max", c.spectrum_mode.e_max}};
    if (c.command == Command::min_excitation) {
        const char* s = c.strategy == ExcitationStrategy::syndrome_enum ? "syndrome-enum"
                        : c.strategy == ExcitationStrategy::error_bfs   ? "error-bfs"
                                                                        : "auto";
        j["strategy"] = s;
    }
    if (c.command == Command::apply_error) {
        json ops = json::array();
        for (const auto& op : c.error_ops)
            ops.push_back({{"site", op.site},
                           {"layer", std::string(1, op.layer)},
                           {"pauli", std::string(1, op.pauli)}});
        j["error"] = ops;
    }
    return j;
}

struct BuiltCode {
    FiniteGroup::Ptr group;
    LRCode code;
    std::optional<QuditLRCode> qudit;
};

inline BuiltCode build_from_spec(const CodeSpec& spec, const Caps& caps) {
    GroupCaps gc;
    gc.order_cap = caps.group_order;
    FiniteGroup::Ptr g = FiniteGroup::make(spec.group_spec, gc);
    GroupSubset s1 = GroupSubset::from_labels(g, spec.s1);
    GroupSubset s2 = GroupSubset::from_labels(g, spec.s2);
    BuiltCode out{g, build_code(g, s1, s2), std::nullopt};
    if (spec.qudit)
        out.qudit = build_qudit_code(g, s1, s2, spec.qudit->d, spec.qudit->m1, spec.qudit->m2);
    return out;
}

}  // namespace detail

inline ResultEnvelope run(const RunConfig& cfg) {
    ResultEnvelope env;
    env.command = command_name(cfg.command);
    env.input_digest = "fnv1a64:" + fnv1a64_hex(detail::digest_region(cfg).dump());
    env.warnings = cfg.warnings;

    WeightCaps wcaps;
    wcaps.exact_rows = cfg.caps.enumeration;
    BfsCaps bcaps;
    bcaps.node_cap = cfg.caps.search_radius;

    switch (cfg.command) {
        case Command::verify: {
            if (!cfg.code) throw ConfigError("verify needs a code spec");
            auto built = detail::build_from_spec(*cfg.code, cfg.caps);
            json p;
            p["group"] = built.group->spec();
            p["order"] = built.group->order();
            p["s1"] = built.code.s1.labels();
            p["s2"] = built.code.s2.labels();
            p["commutation"] = check_commutation(built.code);
            const bool even = built.code.s1.size() % 2 == 0 && built.code.s2.size() % 2 == 0;
            p["parity_applicable"] = even;
            p["parity_identity"] = even ? json(check_parity_identity(built.code)) : json(nullptr);
            const DegeneracyReport rep = degeneracy(built.code);
            p["rank"] = rep.rank_k;
            p["rank_even"] = rep.rank_k % 2 == 0;
            p["log2_degeneracy"] = rep.log2_degeneracy;
            if (built.qudit) {
                p["qudit_d"] = built.qudit->d;
                p["qudit_commutation"] = check_qudit_commutation(*built.qudit);
            }
            env.payload = p;
            break;
        }
        case Command::degeneracy: {
            if (!cfg.code) throw ConfigError("degeneracy needs a code spec");
            auto built = detail::build_from_spec(*cfg.code, cfg.caps);
            json p;
            p["group"] = built.group->spec();
            p["order"] = built.group->order();
            p["s1"] = built.code.s1.labels();
            p["s2"] = built.code.s2.labels();
            if (built.qudit) {
                const std::int64_t k = rank_mod_p(assemble_qudit_MG(*built.qudit));
                const std::int64_t logd = 2ll * built.group->order() - k;
                p["d"] = built.qudit->d;
                p["rank"] = k;
                p["log_d_degeneracy"] = logd;
                p["degeneracy"] = std::to_string(built.qudit->d) + "^" + std::to_string(logd);
            } else {
                const DegeneracyReport rep = degeneracy(built.code);
                p["rank"] = rep.rank_k;
                p["log2_degeneracy"] = rep.log2_degeneracy;
                p["logical_qubits"] = rep.logical_qubits;
                p["degeneracy"] = "2^" + std::to_string(rep.log2_degeneracy);
            }
            env.payload = p;
            break;
        }
        case Command::spectrum: {
            if (!cfg.code) throw ConfigError("spectrum needs a code spec");
            if (cfg.code->qudit) throw ConfigError("spectrum supports qubit codes only");
            auto built = detail::build_from_spec(*cfg.code, cfg.caps);
            const SpectrumTable t = spectrum(built.code, cfg.spectrum_mode, wcaps, cfg.threads);
            json p;
            p["group"] = built.group->spec();
            p["order"] = t.group_order;
            p["k"] = t.k;
            p["log2_factor"] = t.log2_factor;
            p["exact"] = t.exact;
            p["e_max"] = t.e_max;
            json entries = json::array();
            for (const auto& e : t.entries)
                entries.push_back({{"energy", e.energy},
                                   {"syndrome_count", e.syndrome_count},
                                   {"log2_eigenspace_dim", t.log2_factor}});
            p["entries"] = entries;
            env.payload = p;
            break;
        }
        case Command::min_excitation: {
            if (!cfg.code) throw ConfigError("min-excitation needs a code spec");
            if (cfg.code->qudit) throw ConfigError("min-excitation supports qubit codes only");
            auto built = detail::build_from_spec(*cfg.code, cfg.caps);
            const MinExcitationResult r =
                min_excitation_energy(built.code, cfg.strategy, wcaps, bcaps, cfg.threads);
            json p;
            p["group"] = built.group->spec();
            p["order"] = built.group->order();
            p["energy"] = r.energy;
            p["exact"] = r.exact;
            p["strategy"] = r.strategy;
            if (r.strategy == "error-bfs") p["radius"] = r.radius;
            env.payload = p;
            break;
        }
        case Command::apply_error: {
            if (!cfg.code) throw ConfigError("apply-error needs a code spec");
            if (cfg.code->qudit) throw ConfigError("apply-error supports qubit codes only");
            auto built = detail::build_from_spec(*cfg.code, cfg.caps);
            const PauliError err = make_error(built.code, cfg.error_ops);
            const AppliedError a = apply_error(built.code, err);
            json p;
            p["group"] = built.group->spec();
            p["order"] = built.group->order();
            p["energy"] = a.energy;
            p["violated"] = a.violated;
            env.payload = p;
            break;
        }
        case Command::scan: {
            if (!cfg.tower) throw ConfigError("scan needs a tower config");
            ScanOptions opt;
            opt.min_excitation = cfg.tower->min_excitation;
            opt.timing = cfg.tower->timing;
            opt.qudit = cfg.tower->qudit;
            opt.threads = cfg.threads;
            opt.cache_dir = cfg.cache_dir;
            opt.caps.group.order_cap = cfg.caps.group_order;
            opt.caps.weight.exact_rows = cfg.caps.enumeration;
            opt.caps.bfs.node_cap = cfg.caps.search_radius;
            const auto rows =
                tower_scan(cfg.tower->spec, cfg.tower->s1, cfg.tower->s2, opt);
            json p;
            p["family"] = cfg.tower->spec.family.spec;
            p["mode"] = tower_mode_name(cfg.tower->spec.mode);
            p["s1"] = cfg.tower->s1;
            p["s2"] = cfg.tower->s2;
            if (cfg.tower->qudit) p["d"] = cfg.tower->qudit->d;
            json jr = json::array();
            for (const auto& r : rows) {
                json row;
                row["kernel"] = r.kernel;
                row["index"] = r.index;
                row["rank"] = r.rank ? json(*r.rank) : json(nullptr);
                row["log2_degeneracy"] = r.log_degeneracy ? json(*r.log_degeneracy) : json(nullptr);
                row["min_excitation"] = r.min_excitation ? json(*r.min_excitation) : json(nullptr);
                row["seconds"] = r.seconds;
                row["warnings"] = r.warnings;
                row["error"] = r.error ? json(*r.error) : json(nullptr);
                jr.push_back(row);
            }
            p["rows"] = jr;
            env.payload = p;
            break;
        }
    }
    return env;
}

namespace detail {

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    return out + "\"";
}

inline std::string format_seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", s);
    return buf;
}

}  // namespace detail

/// Serializes an envelope. CSV follows the per-command column contracts;
/// JSON mirrors the full envelope; text is human-readable.
inline std::string emit(const ResultEnvelope& env, const std::string& format) {
    if (format == "json") {
        json j;
        j["command"] = env.command;
        j["input_digest"] = env.input_digest;
        j["version"] = env.version;
        j["payload"] = env.payload;
        j["warnings"] = env.warnings;
        return j.dump(2) + "\n";
    }
    if (format == "csv") {
        std::string out;
        const auto& p = env.payload;
        if (env.command == "scan") {
            out = "kernel,index,rank,log2_degeneracy,min_excitation,seconds\n";
            for (const auto& r : p.at("rows")) {
                out += detail::csv_field(r.at("kernel").get<std::string>()) + ",";
                out += std::to_string(r.at("index").get<std::uint64_t>()) + ",";
                out += r.at("rank").is_null() ? "" : std::to_string(r.at("rank").get<std::int64_t>());
                out += ",";
                out += r.at("log2_degeneracy").is_null()
                           ? ""
                           : std::to_string(r.at("log2_degeneracy").get<std::int64_t>());
                out += ",";
                out += r.at("min_excitation").is_null()
                           ? ""
                           : std::to_string(r.at("min_excitation").get<std::uint64_t>());
                out += "," + detail::format_seconds(r.at("seconds").get<double>()) + "\n";
            }
            return out;
        }
        if (env.command == "spectrum") {
            out = "energy,syndrome_count,log2_eigenspace_dim\n";
            for (const auto& e : p.at("entries"))
                out += std::to_string(e.at("energy").get<std::uint64_t>()) + "," +
                       std::to_string(e.at("syndrome_count").get<std::uint64_t>()) + "," +
                       std::to_string(e.at("log2_eigenspace_dim").get<std::int64_t>()) + "\n";
            return out;
        }
        if (env.command == "degeneracy") {
            const bool qudit = p.contains("d");
            out = qudit ? "group,order,rank,log_d_degeneracy,degeneracy\n"
                        : "group,order,rank,log2_degeneracy,degeneracy\n";
            out += detail::csv_field(p.at("group").get<std::string>()) + "," +
                   std::to_string(p.at("order").get<std::uint64_t>()) + "," +
                   std::to_string(p.at("rank").get<std::int64_t>()) + "," +
                   std::to_string(qudit ? p.at("log_d_degeneracy").get<std::int64_t>()
                                        : p.at("log2_degeneracy").get<std::int64_t>()) +
                   "," + p.at("degeneracy").get<std::string>() + "\n";
            return out;
        }
        if (env.command == "verify") {
            out = "check,result\n";
            out += "commutation," + std::string(p.at("commutation").get<bool>() ? "true" : "false") + "\n";
            out += "parity_identity,";
            out += p.at("parity_identity").is_null()
                       ? "n/a"
                       : (p.at("parity_identity").get<bool>() ? "true" : "false");
            out += "\n";
            out += "rank_even," + std::string(p.at("rank_even").get<bool>() ? "true" : "false") + "\n";
            if (p.contains("qudit_commutation"))
                out += "qudit_commutation," +
                       std::string(p.at("qudit_commutation").get<bool>() ? "true" : "false") + "\n";
            return out;
        }
        if (env.command == "min-excitation") {
            out = "energy,exact,strategy\n";
            out += std::to_string(p.at("energy").get<std::uint64_t>()) + "," +
                   (p.at("exact").get<bool>() ? "true" : "false") + "," +
                   p.at("strategy").get<std::string>() + "\n";
            return out;
        }
        if (env.command == "apply-error") {
            out = "energy,violated\n";
            std::string v;
            for (const auto& lbl : p.at("violated"))
                v += (v.empty() ? "" : ";") + lbl.get<std::string>();
            out += std::to_string(p.at("energy").get<std::uint64_t>()) + "," +
                   detail::csv_field(v) + "\n";
            return out;
        }
        throw InternalError("no CSV emitter for command " + env.command);
    }
    if (format == "text") {
        std::ostringstream out;
        out << "# " << env.command << " (lrcodes " << env.version << ")\n";
        out << "# digest " << env.input_digest << "\n";
        for (const auto& w : env.warnings) out << "warning: " << w << "\n";
        const auto& p = env.payload;
        if (env.command == "scan") {
            out << "family " << p.at("family").get<std::string>() << "\n";
            out << "kernel\tindex\trank\tlog2_deg\tmin_exc\tseconds\n";
            for (const auto& r : p.at("rows")) {
                out << r.at("kernel").get<std::string>() << "\t" << r.at("index") << "\t";
                if (r.at("rank").is_null()) out << "-"; else out << r.at("rank");
                out << "\t";
                if (r.at("log2_degeneracy").is_null()) out << "-"; else out << r.at("log2_degeneracy");
                out << "\t";
                if (r.at("min_excitation").is_null()) out << "-"; else out << r.at("min_excitation");
                out << "\t" << detail::format_seconds(r.at("seconds").get<double>());
                if (!r.at("error").is_null())
                    out << "\terror: " << r.at("error").get<std::string>();
                for (const auto& w : r.at("warnings"))
                    out << "\twarning: " << w.get<std::string>();
                out << "\n";
            }
        } else if (env.command == "spectrum") {
            out << "group " << p.at("group").get<std::string>() << ", k = " << p.at("k")
                << ", eigenspace dim = syndrome_count * 2^" << p.at("log2_factor") << "\n";
            out << "energy\tsyndrome_count\n";
            for (const auto& e : p.at("entries"))
                out << e.at("energy") << "\t" << e.at("syndrome_count") << "\n";
        } else {
            for (const auto& [k, v] : p.items())
                out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
        }
        return out.str();
    }
    throw ConfigError("unknown output format '" + format + "' (want text, csv or json)");
}

/// Error-spec grammar for the CLI: semicolon-separated triples
/// "site:layer:P", e.g. "sr:+:X;sr:-:X;sr2:-:X".
inline std::vector<ErrorOp> parse_error_spec(const std::string& s) {
    std::vector<ErrorOp> ops;
    for (const auto& part : detail::split(s, ';')) {
        const std::string t = detail::trim(part);
        if (t.empty()) continue;
        const auto last = t.rfind(':');
        const auto mid = t.rfind(':', last == std::string::npos ? 0 : last - 1);
        if (last == std::string::npos || mid == std::string::npos || mid == 0)
            throw ConfigError("bad error op '" + t + "' (want site:layer:P)");
        ErrorOp op;
        op.site = detail::trim(t.substr(0, mid));
        const std::string layer = detail::trim(t.substr(mid + 1, last - mid - 1));
        const std::string pauli = detail::trim(t.substr(last + 1));
        if (layer != "+" && layer != "-")
            throw ConfigError("error op layer must be + or - in '" + t + "'");
        if (pauli.size() != 1 || (pauli != "X" && pauli != "Y" && pauli != "Z"))
            throw ConfigError("error op Pauli must be X, Y or Z in '" + t + "'");
        op.layer = layer[0];
        op.pauli = pauli[0];
        ops.push_back(op);
    }
    if (ops.empty()) throw ConfigError("error spec is empty");
    return ops;
}

}  // namespace lrc
