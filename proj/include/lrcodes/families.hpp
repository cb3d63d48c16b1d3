#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lrcodes/errors.hpp"
#include "lrcodes/group.hpp"
#include "lrcodes/lattice.hpp"

namespace lrc {

/// A group family whose finite-index normal subgroups we can enumerate and
/// quotient by: Z^d (d = 1..3), the infinite dihedral group, or a fixed
/// finite group.
struct GroupFamily {
    enum class Kind { lattice, dihedral_inf, finite };

    Kind kind = Kind::lattice;
    int dim = 1;                 // lattice dimension
    FiniteGroup::Ptr base;       // finite base group
    std::string spec;            // canonical spec string

    /// "Z" | "Z2" | "Z3" | "dihedral" | "group:<group-spec>"
    static GroupFamily parse(const std::string& s, const GroupCaps& caps = {}) {
        GroupFamily f;
        f.spec = s;
        if (s == "Z" || s == "Z1") { f.kind = Kind::lattice; f.dim = 1; f.spec = "Z"; return f; }
        if (s == "Z2") { f.kind = Kind::lattice; f.dim = 2; return f; }
        if (s == "Z3") { f.kind = Kind::lattice; f.dim = 3; return f; }
        if (s == "dihedral") { f.kind = Kind::dihedral_inf; return f; }
        if (s.rfind("group:", 0) == 0) {
            f.kind = Kind::finite;
            f.base = FiniteGroup::make(s.substr(6), caps);
            return f;
        }
        throw ConfigError("unknown group family '" + s + "' (want Z, Z2, Z3, dihedral, group:<spec>)");
    }
};

/// An element of the (possibly infinite) family group.
struct FamilyElement {
    std::vector<Int> coords;   // lattice
    int dih_s = 0;             // dihedral: s-exponent (0/1)
    Int dih_r = 0;             // dihedral: r-exponent (any integer)
    std::uint32_t finite_index = 0;
};

namespace detail {

inline FamilyElement parse_lattice_element(const std::string& raw, int dim) {
    const std::string s = trim(raw);
    FamilyElement e;
    e.coords.assign(dim, 0);
    if (s.empty()) throw ConfigError("empty element label");
    if (s.front() == '(') {
        if (s.back() != ')') throw ConfigError("unbalanced tuple '" + s + "'");
        auto parts = split(s.substr(1, s.size() - 2), ',');
        if (static_cast<int>(parts.size()) != dim)
            throw ConfigError("tuple '" + s + "' needs " + std::to_string(dim) + " coordinates");
        for (int i = 0; i < dim; ++i)
            e.coords[i] = parse_int(trim(parts[i]), "lattice coordinate");
        return e;
    }
    if (s == "1" || s == "0" || s == "e") return e;  // identity
    if (dim == 1 && s.find_first_of("xyz") == std::string::npos) {
        e.coords[0] = parse_int(s, "lattice element");
        return e;
    }
    // monomial word: x, xy, x2y-1z, ...
    std::size_t i = 0;
    while (i < s.size()) {
        const char axis = s[i];
        const int ax = axis == 'x' ? 0 : axis == 'y' ? 1 : axis == 'z' ? 2 : 3;
        if (ax >= dim)
            throw ConfigError("axis '" + std::string(1, axis) + "' not valid for dim " +
                              std::to_string(dim) + " in '" + s + "'");
        ++i;
        Int ex = 1;
        if (i < s.size() && (s[i] == '-' || std::isdigit(static_cast<unsigned char>(s[i])))) {
            std::size_t k = i + (s[i] == '-' ? 1 : 0);
            while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
            ex = parse_int(s.substr(i, k - i), "exponent");
            i = k;
        }
        e.coords[ax] += ex;
    }
    return e;
}

inline FamilyElement parse_dihedral_inf_element(const std::string& raw) {
    const std::string s = trim(raw);
    FamilyElement e;
    if (s == "1" || s == "e") return e;
    std::size_t i = 0;
    if (s[i] == 's') { e.dih_s = 1; ++i; }
    if (i < s.size()) {
        if (s[i] != 'r') throw ConfigError("cannot parse dihedral element '" + s + "'");
        ++i;
        e.dih_r = 1;
        if (i < s.size()) e.dih_r = parse_int(s.substr(i), "rotation exponent");
    } else if (e.dih_s == 0) {
        throw ConfigError("cannot parse dihedral element '" + s + "'");
    }
    return e;
}

}  // namespace detail

inline FamilyElement parse_family_element(const GroupFamily& fam, const std::string& label) {
    FamilyElement e;
    switch (fam.kind) {
        case GroupFamily::Kind::lattice:
            return detail::parse_lattice_element(label, fam.dim);
        case GroupFamily::Kind::dihedral_inf:
            return detail::parse_dihedral_inf_element(label);
        case GroupFamily::Kind::finite:
            e.finite_index = fam.base->parse_element(label);
            return e;
    }
    return e;
}

/// Kernel specifier: a finite-index normal subgroup of the family group.
struct KernelSpec {
    IntMat lattice;                     // lattice families: canonical HNF
    Int dihedral_n = 0;                 // dihedral family: <r^n>
    std::vector<std::uint32_t> elements;  // finite family: sorted member list

    static KernelSpec for_lattice(IntMat m) {
        KernelSpec k;
        k.lattice = lat::hnf(std::move(m));
        return k;
    }
    static KernelSpec for_dihedral(Int n) {
        if (n < 1) throw ConfigError("dihedral kernel <r^n> needs n >= 1");
        KernelSpec k;
        k.dihedral_n = n;
        return k;
    }
    static KernelSpec for_finite(std::vector<std::uint32_t> elems) {
        KernelSpec k;
        std::sort(elems.begin(), elems.end());
        elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
        k.elements = std::move(elems);
        return k;
    }

    std::string canonical(const GroupFamily& fam) const {
        switch (fam.kind) {
            case GroupFamily::Kind::lattice:
                if (fam.dim == 1) return std::to_string(lattice[0][0]);
                return lat::mat_to_string(lattice);
            case GroupFamily::Kind::dihedral_inf:
                return "r^" + std::to_string(dihedral_n);
            case GroupFamily::Kind::finite: {
                std::string out = "{";
                for (std::size_t i = 0; i < elements.size(); ++i)
                    out += (i ? " " : "") + fam.base->label(elements[i]);
                return out + "}";
            }
        }
        return {};
    }
};

/// A surjective homomorphism from a family group onto a finite quotient,
/// with enough data to map elements and lift them back.
struct QuotientMap {
    GroupFamily source;
    KernelSpec kernel;
    FiniteGroup::Ptr target;

    // lattice family data: phi(x) = (x V) mod diag, coordinates at
    // nontrivial moduli index the target group
    std::vector<Int> snf_diag;
    IntMat v, vinv;
    std::vector<std::size_t> nontrivial;

    // finite family data
    std::vector<std::uint32_t> coset_of;  // source index -> target index
    std::vector<std::uint32_t> rep_of;    // target index -> representative

    std::uint64_t index() const { return target->order(); }

    std::uint32_t map(const FamilyElement& e) const {
        switch (source.kind) {
            case GroupFamily::Kind::lattice: {
                const std::size_t d = snf_diag.size();
                std::uint32_t out = 0;
                const auto* mods = target->moduli();
                std::size_t mi = 0;
                for (std::size_t j = 0; j < d; ++j) {
                    __int128 acc = 0;
                    for (std::size_t i = 0; i < d; ++i) acc += (__int128)e.coords[i] * v[i][j];
                    const Int r = lat::pos_mod(static_cast<Int>(acc % snf_diag[j]), snf_diag[j]);
                    if (snf_diag[j] > 1) {
                        out = out * (*mods)[mi] + static_cast<std::uint32_t>(r);
                        ++mi;
                    }
                }
                return out;
            }
            case GroupFamily::Kind::dihedral_inf: {
                const Int n = kernel.dihedral_n;
                return static_cast<std::uint32_t>(e.dih_s) * static_cast<std::uint32_t>(n) +
                       static_cast<std::uint32_t>(lat::pos_mod(e.dih_r, n));
            }
            case GroupFamily::Kind::finite:
                return coset_of[e.finite_index];
        }
        return 0;
    }

    /// A representative of the coset of a target element.
    FamilyElement lift(std::uint32_t t) const {
        FamilyElement e;
        switch (source.kind) {
            case GroupFamily::Kind::lattice: {
                const std::size_t d = snf_diag.size();
                std::vector<Int> y(d, 0);
                const auto* mods = target->moduli();
                std::uint32_t rem = t;
                for (std::size_t k = nontrivial.size(); k-- > 0;) {
                    const std::uint32_t m = (*mods)[k];
                    y[nontrivial[k]] = rem % m;
                    rem /= m;
                }
                e.coords.assign(d, 0);
                for (std::size_t i = 0; i < d; ++i) {
                    __int128 acc = 0;
                    for (std::size_t j = 0; j < d; ++j) acc += (__int128)y[j] * vinv[j][i];
                    e.coords[i] = static_cast<Int>(acc);
                }
                return e;
            }
            case GroupFamily::Kind::dihedral_inf:
                e.dih_s = static_cast<int>(t / kernel.dihedral_n);
                e.dih_r = static_cast<Int>(t % kernel.dihedral_n);
                return e;
            case GroupFamily::Kind::finite:
                e.finite_index = rep_of[t];
                return e;
        }
        return e;
    }
};

namespace detail {

inline void verify_homomorphism(const QuotientMap& q, const GroupCaps& caps) {
    const auto& G = *q.target;
    auto mul_elements = [&](const FamilyElement& a, const FamilyElement& b) {
        FamilyElement c;
        switch (q.source.kind) {
            case GroupFamily::Kind::lattice:
                c.coords.resize(a.coords.size());
                for (std::size_t i = 0; i < a.coords.size(); ++i)
                    c.coords[i] = a.coords[i] + b.coords[i];
                break;
            case GroupFamily::Kind::dihedral_inf:
                c.dih_s = a.dih_s ^ b.dih_s;
                c.dih_r = b.dih_s ? b.dih_r - a.dih_r : a.dih_r + b.dih_r;
                break;
            case GroupFamily::Kind::finite:
                c.finite_index = q.source.base->mul(a.finite_index, b.finite_index);
                break;
        }
        return c;
    };
    std::mt19937 rng(0x5eed'cafe);
    auto random_element = [&]() {
        FamilyElement e;
        switch (q.source.kind) {
            case GroupFamily::Kind::lattice: {
                std::uniform_int_distribution<Int> d(-1000, 1000);
                e.coords.resize(q.snf_diag.size());
                for (auto& c : e.coords) c = d(rng);
                break;
            }
            case GroupFamily::Kind::dihedral_inf: {
                std::uniform_int_distribution<Int> d(-1000, 1000);
                e.dih_s = static_cast<int>(d(rng) & 1);
                e.dih_r = d(rng);
                break;
            }
            case GroupFamily::Kind::finite: {
                std::uniform_int_distribution<std::uint32_t> d(0, q.source.base->order() - 1);
                e.finite_index = d(rng);
                break;
            }
        }
        return e;
    };
    if (q.source.kind == GroupFamily::Kind::finite &&
        q.source.base->order() <= caps.assoc_cap) {
        const std::uint32_t n = q.source.base->order();
        for (std::uint32_t a = 0; a < n; ++a)
            for (std::uint32_t b = 0; b < n; ++b) {
                FamilyElement ea, eb;
                ea.finite_index = a;
                eb.finite_index = b;
                if (q.map(mul_elements(ea, eb)) != G.mul(q.map(ea), q.map(eb)))
                    throw InternalError("quotient map is not a homomorphism");
            }
        return;
    }
    for (std::uint32_t i = 0; i < caps.spot_checks; ++i) {
        const FamilyElement a = random_element(), b = random_element();
        if (q.map(mul_elements(a, b)) != G.mul(q.map(a), q.map(b)))
            throw InternalError("quotient map is not a homomorphism");
    }
    // surjectivity + lift consistency
    for (std::uint32_t t = 0; t < G.order(); ++t)
        if (q.map(q.lift(t)) != t)
            throw InternalError("quotient lift is not a section of the map");
}

}  // namespace detail

/// Builds G_N = source/N as a concrete FiniteGroup plus the projection map.
inline QuotientMap make_quotient(const GroupFamily& fam, const KernelSpec& kernel,
                                 const GroupCaps& caps = {}) {
    QuotientMap q;
    q.source = fam;
    q.kernel = kernel;
    switch (fam.kind) {
        case GroupFamily::Kind::lattice: {
            auto snf = lat::snf_with_transform(kernel.lattice);
            q.snf_diag = snf.diag;
            q.v = snf.v;
            q.vinv = snf.vinv;
            std::vector<std::uint32_t> mods;
            for (std::size_t i = 0; i < snf.diag.size(); ++i)
                if (snf.diag[i] > 1) {
                    q.nontrivial.push_back(i);
                    mods.push_back(static_cast<std::uint32_t>(snf.diag[i]));
                }
            if (mods.empty()) mods.push_back(1);
            q.target = FiniteGroup::product_of_cyclics(
                mods, caps, FamilyTag::quotient,
                "quotient:" + fam.spec + "/" + kernel.canonical(fam));
            break;
        }
        case GroupFamily::Kind::dihedral_inf: {
            const Int n = kernel.dihedral_n;
            if (n < 1) throw ConfigError("dihedral kernel needs n >= 1");
            if (2 * n > caps.order_cap)
                throw CapExceeded("quotient order " + std::to_string(2 * n) + " exceeds cap");
            q.target = FiniteGroup::dihedral(static_cast<std::uint32_t>(n), caps);
            break;
        }
        case GroupFamily::Kind::finite: {
            GroupSubset n(fam.base, kernel.elements);
            if (!is_normal_subgroup(n))
                throw ConfigError("kernel {" + kernel.canonical(fam).substr(1) +
                                  " is not a normal subgroup");
            const std::uint32_t order = fam.base->order();
            q.coset_of.assign(order, order);
            std::vector<std::uint32_t> reps;
            for (std::uint32_t g = 0; g < order; ++g) {
                if (q.coset_of[g] != order) continue;
                const auto idx = static_cast<std::uint32_t>(reps.size());
                for (auto h : n.members()) q.coset_of[fam.base->mul(g, h)] = idx;
                reps.push_back(g);
            }
            q.rep_of = reps;
            const auto qn = static_cast<std::uint32_t>(reps.size());
            if (static_cast<std::uint64_t>(qn) * n.size() != order)
                throw InternalError("coset partition size mismatch");
            std::vector<std::uint32_t> table(static_cast<std::size_t>(qn) * qn);
            for (std::uint32_t a = 0; a < qn; ++a)
                for (std::uint32_t b = 0; b < qn; ++b)
                    table[static_cast<std::size_t>(a) * qn + b] =
                        q.coset_of[fam.base->mul(reps[a], reps[b])];
            std::vector<std::string> labels;
            labels.reserve(qn);
            for (auto r : reps) labels.push_back(fam.base->label(r));
            q.target = FiniteGroup::from_table(
                qn, std::move(table), caps, std::move(labels), FamilyTag::quotient,
                "quotient:" + fam.spec + "/" + kernel.canonical(fam));
            break;
        }
    }
    detail::verify_homomorphism(q, caps);
    return q;
}

/// S1, S2 pushed through the quotient map. Images are sets; a collapse
/// (|image| < |S|) is reported as a warning, not an error.
struct ProjectedSubsets {
    QuotientMap quotient;
    GroupSubset s1, s2;
    std::vector<std::string> warnings;
};

inline ProjectedSubsets project_subsets(const GroupFamily& fam,
                                        const std::vector<std::string>& s1_labels,
                                        const std::vector<std::string>& s2_labels,
                                        const KernelSpec& kernel,
                                        const GroupCaps& caps = {}) {
    QuotientMap q = make_quotient(fam, kernel, caps);
    std::vector<std::string> warnings;
    auto project = [&](const std::vector<std::string>& labels, const char* name) {
        std::vector<std::uint32_t> img;
        for (const auto& lbl : labels)
            img.push_back(q.map(parse_family_element(fam, lbl)));
        std::sort(img.begin(), img.end());
        img.erase(std::unique(img.begin(), img.end()), img.end());
        if (img.size() < labels.size())
            warnings.push_back(std::string(name) + " image collapsed: " +
                               std::to_string(labels.size()) + " -> " +
                               std::to_string(img.size()) + " under kernel " +
                               kernel.canonical(fam));
        return GroupSubset(q.target, std::move(img));
    };
    GroupSubset s1 = project(s1_labels, "s1");
    GroupSubset s2 = project(s2_labels, "s2");
    return ProjectedSubsets{std::move(q), std::move(s1), std::move(s2), std::move(warnings)};
}

}  // namespace lrc
