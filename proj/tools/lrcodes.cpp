// lrcodes: build LR stabilizer codes on finite groups, compute ground-state
// degeneracy, exact spectra and minimal excitations, and scan towers of
// finite quotients.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "lrcodes/io.hpp"

namespace {

struct CodeFlags {
    std::string group;
    std::string s1, s2;
    std::string code_file;
    std::uint32_t qudit_d = 0;
    std::string qudit_m1, qudit_m2;
};

std::vector<std::string> split_labels(const std::string& s) {
    // comma-separated labels; tuples "(a,b)" keep their inner commas
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(lrc::detail::trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!lrc::detail::trim(cur).empty()) out.push_back(lrc::detail::trim(cur));
    return out;
}

std::vector<std::uint32_t> split_uints(const std::string& s) {
    std::vector<std::uint32_t> out;
    for (const auto& part : split_labels(s))
        out.push_back(static_cast<std::uint32_t>(lrc::detail::parse_int(part, "exponent")));
    return out;
}

void add_code_flags(CLI::App* cmd, CodeFlags& f) {
    cmd->add_option("--group", f.group, "group spec: cyclic:n | abelian:n1,n2,.. | dihedral:n | table:path");
    cmd->add_option("--s1", f.s1, "S1 as comma-separated element labels");
    cmd->add_option("--s2", f.s2, "S2 as comma-separated element labels");
    cmd->add_option("--code", f.code_file, "code spec JSON file (takes precedence over inline flags)");
    cmd->add_option("--qudit-d", f.qudit_d, "prime qudit dimension (qubit code if omitted)");
    cmd->add_option("--qudit-m1", f.qudit_m1, "qudit exponents for S1 (default all 1)");
    cmd->add_option("--qudit-m2", f.qudit_m2, "qudit exponents for S2 (default all 1)");
}

lrc::CodeSpec resolve_code_spec(const CodeFlags& f, std::vector<std::string>& warnings) {
    const bool inline_given = !f.group.empty() || !f.s1.empty() || !f.s2.empty();
    if (!f.code_file.empty()) {
        if (inline_given)
            warnings.push_back("both --code file and inline flags given; the file takes precedence");
        return lrc::CodeSpec::from_file(f.code_file);
    }
    if (f.group.empty()) throw lrc::ConfigError("missing --group (or --code file)");
    if (f.s1.empty() || f.s2.empty()) throw lrc::ConfigError("missing --s1/--s2 (or --code file)");
    lrc::CodeSpec spec;
    spec.group_spec = f.group;
    spec.s1 = split_labels(f.s1);
    spec.s2 = split_labels(f.s2);
    if (f.qudit_d) {
        lrc::QuditBlock q;
        q.d = f.qudit_d;
        q.m1 = f.qudit_m1.empty() ? std::vector<std::uint32_t>(spec.s1.size(), 1)
                                  : split_uints(f.qudit_m1);
        q.m2 = f.qudit_m2.empty() ? std::vector<std::uint32_t>(spec.s2.size(), 1)
                                  : split_uints(f.qudit_m2);
        spec.qudit = std::move(q);
    }
    return spec;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"LR stabilizer codes on finite groups"};
    app.require_subcommand(1);

    lrc::RunConfig cfg;
    std::string format = "text";
    std::string out_path;
    std::string cache_dir;
    unsigned threads = 1;
    std::uint32_t cap_order = 4096, cap_enum = 24;
    std::uint64_t cap_radius = 1ull << 25;

    app.add_option("--format", format, "output format: text | csv | json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    app.add_option("--out", out_path, "write output to this path instead of stdout");
    app.add_option("--threads", threads, "worker threads for scans/enumeration");
    app.add_option("--cache-dir", cache_dir, "scan result cache directory (env LRCODES_CACHE_DIR)");
    app.add_option("--cap-order", cap_order, "max concrete group order");
    app.add_option("--cap-enum", cap_enum, "max log2 of exact enumeration size");
    app.add_option("--cap-radius", cap_radius, "error-bfs node budget");

    CodeFlags fverify, fdeg, fspec, fmin, ferr;
    auto* cverify = app.add_subcommand("verify", "check commutation, parity identity and rank parity");
    add_code_flags(cverify, fverify);

    auto* cdeg = app.add_subcommand("degeneracy", "ground-state degeneracy via rank of M_G");
    add_code_flags(cdeg, fdeg);

    auto* cspec = app.add_subcommand("spectrum", "exact or truncated energy spectrum");
    add_code_flags(cspec, fspec);
    std::string spectrum_mode = "exact";
    std::uint64_t emax = 0;
    cspec->add_option("--mode", spectrum_mode, "exact | truncated")
        ->check(CLI::IsMember({"exact", "truncated"}));
    cspec->add_option("--emax", emax, "truncated mode: largest energy to count exactly");

    auto* cmin = app.add_subcommand("min-excitation", "minimal excitation energy");
    add_code_flags(cmin, fmin);
    std::string strategy = "auto";
    cmin->add_option("--strategy", strategy, "syndrome-enum | error-bfs | auto")
        ->check(CLI::IsMember({"syndrome-enum", "error-bfs", "auto"}));

    auto* cerr = app.add_subcommand("apply-error", "syndrome and energy of an explicit Pauli error");
    add_code_flags(cerr, ferr);
    std::string error_spec, error_file;
    cerr->add_option("--error", error_spec, "error ops 'site:layer:P;...', e.g. 'sr:+:X;sr:-:X'");
    cerr->add_option("--error-file", error_file, "JSON list of {site,layer,pauli} objects");

    auto* cscan = app.add_subcommand("scan", "scan LR-code invariants along a tower of quotients");
    std::string tower_file;
    bool scan_minexc = false, scan_timing = false;
    cscan->add_option("--config", tower_file, "tower config JSON file")->required();
    cscan->add_flag("--min-excitation", scan_minexc, "also compute minimal excitation per node");
    cscan->add_flag("--timing", scan_timing, "fill the seconds column with wall time");

    try {
        app.parse(argc, argv);

        cfg.format = format;
        if (!out_path.empty()) cfg.out_path = out_path;
        cfg.threads = threads;
        cfg.caps.group_order = cap_order;
        cfg.caps.enumeration = cap_enum;
        cfg.caps.search_radius = cap_radius;
        if (!cache_dir.empty()) cfg.cache_dir = cache_dir;
        else if (const char* env = std::getenv("LRCODES_CACHE_DIR")) cfg.cache_dir = env;

        if (cverify->parsed()) {
            cfg.command = lrc::Command::verify;
            cfg.code = resolve_code_spec(fverify, cfg.warnings);
        } else if (cdeg->parsed()) {
            cfg.command = lrc::Command::degeneracy;
            cfg.code = resolve_code_spec(fdeg, cfg.warnings);
        } else if (cspec->parsed()) {
            cfg.command = lrc::Command::spectrum;
            cfg.code = resolve_code_spec(fspec, cfg.warnings);
            cfg.spectrum_mode.exact = spectrum_mode == "exact";
            cfg.spectrum_mode.e_max = emax;
            if (!cfg.spectrum_mode.exact && emax == 0)
                throw lrc::ConfigError("truncated spectrum needs --emax");
        } else if (cmin->parsed()) {
            cfg.command = lrc::Command::min_excitation;
            cfg.code = resolve_code_spec(fmin, cfg.warnings);
            cfg.strategy = strategy == "syndrome-enum" ? lrc::ExcitationStrategy::syndrome_enum
                           : strategy == "error-bfs"   ? lrc::ExcitationStrategy::error_bfs
                                                       : lrc::ExcitationStrategy::auto_pick;
        } else if (cerr->parsed()) {
            cfg.command = lrc::Command::apply_error;
            cfg.code = resolve_code_spec(ferr, cfg.warnings);
            if (!error_file.empty()) {
                if (!error_spec.empty())
                    cfg.warnings.push_back("both --error-file and --error given; the file takes precedence");
                std::ifstream in(error_file);
                if (!in) throw lrc::ConfigError("cannot open error file '" + error_file + "'");
                lrc::json j;
                in >> j;
                for (const auto& op : j) {
                    lrc::detail::reject_unknown_keys(op, {"site", "layer", "pauli"}, "error op");
                    lrc::ErrorOp e;
                    e.site = op.at("site").get<std::string>();
                    e.layer = op.at("layer").get<std::string>().at(0);
                    e.pauli = op.at("pauli").get<std::string>().at(0);
                    cfg.error_ops.push_back(e);
                }
            } else if (!error_spec.empty()) {
                cfg.error_ops = lrc::parse_error_spec(error_spec);
            } else {
                throw lrc::ConfigError("apply-error needs --error or --error-file");
            }
        } else if (cscan->parsed()) {
            cfg.command = lrc::Command::scan;
            lrc::GroupCaps gc;
            gc.order_cap = cfg.caps.group_order;
            auto tower = lrc::TowerConfig::from_file(tower_file, gc);
            if (scan_minexc) tower.min_excitation = true;
            if (scan_timing) tower.timing = true;
            cfg.tower = std::move(tower);
        }

        const lrc::ResultEnvelope env = lrc::run(cfg);
        const std::string bytes = lrc::emit(env, cfg.format);
        if (cfg.out_path) {
            std::ofstream out(*cfg.out_path, std::ios::binary);
            if (!out) throw lrc::ConfigError("cannot write output to '" + *cfg.out_path + "'");
            out << bytes;
        } else {
            std::cout << bytes;
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << "error: config: " << e.what() << "\n";
        return 2;
    } catch (const lrc::ConfigError& e) {
        std::cerr << "error: config: " << e.what() << "\n";
        return 2;
    } catch (const lrc::CapExceeded& e) {
        std::cerr << "error: cap: " << e.what() << "\n";
        return 3;
    } catch (const lrc::InternalError& e) {
        std::cerr << "error: internal: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << "\n";
        return 4;
    }
}
