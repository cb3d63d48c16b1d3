#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <memory>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lrcodes/errors.hpp"

namespace lrc {

enum class FamilyTag { cyclic, product_of_cyclics, dihedral, from_table, quotient };

struct GroupCaps {
    std::uint32_t order_cap = 4096;   // hard cap on concrete group order
    std::uint32_t assoc_cap = 256;    // exhaustive associativity check up to this order
    std::uint32_t spot_checks = 1000; // random triples above the exhaustive cap
};

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) { out.push_back(cur); cur.clear(); }
        else cur += ch;
    }
    out.push_back(cur);
    return out;
}

inline std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

inline long long parse_int(const std::string& s, const char* what) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ConfigError(std::string("expected integer for ") + what + ", got '" + s + "'");
    }
}

}  // namespace detail

/// A finite group with a fixed canonical element indexing. Immutable after
/// construction; instances are shared via shared_ptr and safe to use from
/// any thread.
///
/// Canonical indexing per family:
///   cyclic:n       residues 0..n-1
///   abelian:n1,..  mixed-radix tuples, first coordinate most significant
///   dihedral:n     s^a r^b -> a*n + b, a in {0,1}, b in 0..n-1
///   table:path     indices as given in the file
class FiniteGroup {
public:
    using Ptr = std::shared_ptr<const FiniteGroup>;

    std::uint32_t order() const { return order_; }
    std::uint32_t identity() const { return identity_; }
    FamilyTag tag() const { return tag_; }
    const std::string& spec() const { return spec_; }
    bool is_abelian() const { return abelian_; }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        switch (backend_) {
            case Backend::table:
                return table_[static_cast<std::size_t>(a) * order_ + b];
            case Backend::abelian: {
                std::uint32_t out = 0;
                for (std::size_t i = 0; i < mods_.size(); ++i) {
                    const std::uint32_t m = mods_[i], rad = radix_[i];
                    const std::uint32_t ca = a / rad % m, cb = b / rad % m;
                    out += (ca + cb) % m * rad;
                }
                return out;
            }
            case Backend::dihedral: {
                const std::uint32_t n = dn_;
                const std::uint32_t a1 = a / n, b1 = a % n;
                const std::uint32_t a2 = b / n, b2 = b % n;
                if (a2) return (a1 ^ 1u) * n + (b2 + n - b1) % n;
                return a1 * n + (b1 + b2) % n;
            }
        }
        return 0;
    }

    std::uint32_t inv(std::uint32_t a) const {
        switch (backend_) {
            case Backend::table:
                return inv_[a];
            case Backend::abelian: {
                std::uint32_t out = 0;
                for (std::size_t i = 0; i < mods_.size(); ++i) {
                    const std::uint32_t m = mods_[i], rad = radix_[i];
                    const std::uint32_t c = a / rad % m;
                    out += (m - c) % m * rad;
                }
                return out;
            }
            case Backend::dihedral: {
                const std::uint32_t n = dn_;
                if (a / n) return a;                  // reflections are involutions
                return (n - a % n) % n;
            }
        }
        return 0;
    }

    /// Canonical label of an element.
    std::string label(std::uint32_t g) const {
        if (!labels_.empty()) return labels_[g];
        switch (backend_) {
            case Backend::table:
                return std::to_string(g);
            case Backend::abelian: {
                if (mods_.size() == 1) return std::to_string(g);
                std::string out = "(";
                for (std::size_t i = 0; i < mods_.size(); ++i) {
                    if (i) out += ',';
                    out += std::to_string(g / radix_[i] % mods_[i]);
                }
                return out + ")";
            }
            case Backend::dihedral: {
                const std::uint32_t n = dn_, a = g / n, b = g % n;
                std::string out = a ? "s" : "";
                if (b == 1) out += "r";
                else if (b > 1) out += "r" + std::to_string(b);
                return out.empty() ? "1" : out;
            }
        }
        return {};
    }

    /// Parses a canonical (or equivalent) element label. Integers are reduced
    /// into range for cyclic/abelian families, so "-1" in Z/8Z means 7.
    std::uint32_t parse_element(const std::string& raw) const {
        const std::string s = detail::trim(raw);
        if (s.empty()) throw ConfigError("empty element label");
        switch (backend_) {
            case Backend::table: {
                if (!labels_.empty()) {
                    auto it = std::find(labels_.begin(), labels_.end(), s);
                    if (it != labels_.end())
                        return static_cast<std::uint32_t>(it - labels_.begin());
                }
                const long long v = detail::parse_int(s, "table group element");
                if (v < 0 || v >= order_)
                    throw ConfigError("element index " + s + " out of range for group of order " +
                                      std::to_string(order_));
                return static_cast<std::uint32_t>(v);
            }
            case Backend::abelian:
                return parse_abelian(s);
            case Backend::dihedral:
                return parse_dihedral(s);
        }
        throw ConfigError("unparsable element '" + s + "'");
    }

    // --- constructors -------------------------------------------------

    static Ptr cyclic(std::uint32_t n, const GroupCaps& caps = {}) {
        return abelian_backed({n}, FamilyTag::cyclic, "cyclic:" + std::to_string(n), caps);
    }

    static Ptr product_of_cyclics(const std::vector<std::uint32_t>& mods,
                                  const GroupCaps& caps = {}, FamilyTag tag = FamilyTag::product_of_cyclics,
                                  std::string spec = "") {
        if (spec.empty()) {
            spec = "abelian:";
            for (std::size_t i = 0; i < mods.size(); ++i)
                spec += (i ? "," : "") + std::to_string(mods[i]);
        }
        return abelian_backed(mods, tag, spec, caps);
    }

    static Ptr dihedral(std::uint32_t n, const GroupCaps& caps = {}) {
        if (n == 0) throw ConfigError("dihedral:n requires n >= 1");
        check_cap(2ull * n, caps);
        auto g = std::make_shared<FiniteGroup>(Private{});
        g->backend_ = Backend::dihedral;
        g->dn_ = n;
        g->order_ = 2 * n;
        g->identity_ = 0;
        g->tag_ = FamilyTag::dihedral;
        g->spec_ = "dihedral:" + std::to_string(n);
        g->abelian_ = n <= 2;
        return g;
    }

    static Ptr from_table(std::uint32_t order, std::vector<std::uint32_t> table,
                          const GroupCaps& caps = {}, std::vector<std::string> labels = {},
                          FamilyTag tag = FamilyTag::from_table, std::string spec = "") {
        check_cap(order, caps);
        if (order == 0 || table.size() != static_cast<std::size_t>(order) * order)
            throw ConfigError("table size does not match declared order");
        auto g = std::make_shared<FiniteGroup>(Private{});
        g->backend_ = Backend::table;
        g->order_ = order;
        g->table_ = std::move(table);
        g->labels_ = std::move(labels);
        g->tag_ = tag;
        g->spec_ = spec.empty() ? "table:<inline>" : std::move(spec);
        g->validate_table(caps);
        return g;
    }

    static Ptr from_table_file(const std::string& path, const GroupCaps& caps = {}) {
        std::ifstream in(path);
        if (!in) throw ConfigError("cannot open table file '" + path + "'");
        std::uint64_t n = 0;
        if (!(in >> n) || n == 0) throw ConfigError("table file: bad order line");
        check_cap(n, caps);
        std::vector<std::uint32_t> t(n * n);
        for (auto& x : t) {
            long long v;
            if (!(in >> v)) throw ConfigError("table file: truncated table");
            if (v < 0 || static_cast<std::uint64_t>(v) >= n)
                throw ConfigError("table file: entry out of range");
            x = static_cast<std::uint32_t>(v);
        }
        return from_table(static_cast<std::uint32_t>(n), std::move(t), caps, {},
                          FamilyTag::from_table, "table:" + path);
    }

    /// Parses the group-spec grammar:
    ///   cyclic:<n> | abelian:<n1>,<n2>,... | dihedral:<n> | table:<path>
    static Ptr make(const std::string& spec, const GroupCaps& caps = {}) {
        const auto pos = spec.find(':');
        if (pos == std::string::npos)
            throw ConfigError("malformed group spec '" + spec + "' (expected family:args)");
        const std::string family = spec.substr(0, pos);
        const std::string args = spec.substr(pos + 1);
        if (family == "cyclic") {
            const long long n = detail::parse_int(args, "cyclic order");
            if (n < 1) throw ConfigError("cyclic:n requires n >= 1");
            return cyclic(static_cast<std::uint32_t>(n), caps);
        }
        if (family == "abelian") {
            std::vector<std::uint32_t> mods;
            for (const auto& part : detail::split(args, ',')) {
                const long long m = detail::parse_int(detail::trim(part), "abelian modulus");
                if (m < 1) throw ConfigError("abelian moduli must be >= 1");
                mods.push_back(static_cast<std::uint32_t>(m));
            }
            if (mods.empty()) throw ConfigError("abelian: needs at least one modulus");
            return product_of_cyclics(mods, caps);
        }
        if (family == "dihedral") {
            const long long n = detail::parse_int(args, "dihedral order parameter");
            if (n < 1) throw ConfigError("dihedral:n requires n >= 1");
            return dihedral(static_cast<std::uint32_t>(n), caps);
        }
        if (family == "table") return from_table_file(args, caps);
        throw ConfigError("unknown group family '" + family + "'");
    }

    // moduli of the abelian backend, or nullptr
    const std::vector<std::uint32_t>* moduli() const {
        return backend_ == Backend::abelian ? &mods_ : nullptr;
    }
    // dihedral rotation order, or 0
    std::uint32_t dihedral_n() const { return backend_ == Backend::dihedral ? dn_ : 0; }

    struct Private { };  // make_shared access
    explicit FiniteGroup(Private) {}

private:
    enum class Backend { table, abelian, dihedral };

    static void check_cap(std::uint64_t order, const GroupCaps& caps) {
        if (order > caps.order_cap)
            throw CapExceeded("group order " + std::to_string(order) +
                              " exceeds cap " + std::to_string(caps.order_cap));
    }

    static Ptr abelian_backed(const std::vector<std::uint32_t>& mods, FamilyTag tag,
                              const std::string& spec, const GroupCaps& caps) {
        std::uint64_t order = 1;
        for (auto m : mods) {
            if (m == 0) throw ConfigError("zero modulus in abelian spec");
            order *= m;
            if (order > caps.order_cap) check_cap(order, caps);
        }
        auto g = std::make_shared<FiniteGroup>(Private{});
        g->backend_ = Backend::abelian;
        g->mods_ = mods;
        g->radix_.resize(mods.size());
        std::uint32_t rad = 1;
        for (std::size_t i = mods.size(); i-- > 0;) {
            g->radix_[i] = rad;
            rad *= mods[i];
        }
        g->order_ = static_cast<std::uint32_t>(order);
        g->identity_ = 0;
        g->tag_ = tag;
        g->spec_ = spec;
        g->abelian_ = true;
        return g;
    }

    void validate_table(const GroupCaps& caps) {
        const std::uint32_t n = order_;
        for (auto x : table_)
            if (x >= n) throw ConfigError("table not a group: entry out of range");
        // identity: the unique two-sided neutral element
        std::uint32_t id = n;
        for (std::uint32_t e = 0; e < n; ++e) {
            bool ok = true;
            for (std::uint32_t g = 0; g < n && ok; ++g)
                ok = mul(e, g) == g && mul(g, e) == g;
            if (ok) { id = e; break; }
        }
        if (id == n) throw ConfigError("table not a group: no identity element");
        identity_ = id;
        inv_.assign(n, n);
        for (std::uint32_t g = 0; g < n; ++g) {
            for (std::uint32_t h = 0; h < n; ++h)
                if (mul(g, h) == id && mul(h, g) == id) { inv_[g] = h; break; }
            if (inv_[g] == n) throw ConfigError("table not a group: no inverse for element " +
                                                std::to_string(g));
        }
        // associativity: exhaustive up to the cap, random triples beyond
        if (n <= caps.assoc_cap) {
            for (std::uint32_t a = 0; a < n; ++a)
                for (std::uint32_t b = 0; b < n; ++b)
                    for (std::uint32_t c = 0; c < n; ++c)
                        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                            throw ConfigError("table not a group: associativity fails");
        } else {
            std::mt19937 rng(0xa55a'1234u);
            std::uniform_int_distribution<std::uint32_t> d(0, n - 1);
            for (std::uint32_t i = 0; i < caps.spot_checks; ++i) {
                const std::uint32_t a = d(rng), b = d(rng), c = d(rng);
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw ConfigError("table not a group: associativity fails");
            }
        }
        abelian_ = true;
        for (std::uint32_t a = 0; a < n && abelian_; ++a)
            for (std::uint32_t b = a + 1; b < n; ++b)
                if (mul(a, b) != mul(b, a)) { abelian_ = false; break; }
    }

    std::uint32_t parse_abelian(const std::string& s) const {
        const std::size_t d = mods_.size();
        auto reduce = [](long long v, std::uint32_t m) {
            long long r = v % static_cast<long long>(m);
            if (r < 0) r += m;
            return static_cast<std::uint32_t>(r);
        };
        if (s.front() == '(') {
            if (s.back() != ')') throw ConfigError("unbalanced tuple '" + s + "'");
            auto parts = detail::split(s.substr(1, s.size() - 2), ',');
            if (parts.size() != d)
                throw ConfigError("tuple '" + s + "' has " + std::to_string(parts.size()) +
                                  " coordinates, group needs " + std::to_string(d));
            std::uint32_t out = 0;
            for (std::size_t i = 0; i < d; ++i)
                out += reduce(detail::parse_int(detail::trim(parts[i]), "tuple coordinate"),
                              mods_[i]) * radix_[i];
            return out;
        }
        // xyz monomial words for d <= 3: "1", "x", "xy", "x2y-1", ...
        if (d <= 3 && (s == "1" || s.find_first_of("xyz") != std::string::npos)) {
            std::vector<long long> exp(d, 0);
            if (s != "1") {
                std::size_t i = 0;
                while (i < s.size()) {
                    const char axis = s[i];
                    const std::size_t ax = axis == 'x' ? 0 : axis == 'y' ? 1 : axis == 'z' ? 2 : 3;
                    if (ax >= d) throw ConfigError("axis '" + std::string(1, axis) +
                                                   "' not valid in '" + s + "'");
                    ++i;
                    long long e = 1;
                    std::size_t j = i;
                    if (j < s.size() && (s[j] == '-' || std::isdigit(static_cast<unsigned char>(s[j])))) {
                        std::size_t k = j + (s[j] == '-' ? 1 : 0);
                        while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
                        e = detail::parse_int(s.substr(j, k - j), "exponent");
                        i = k;
                    }
                    exp[ax] += e;
                }
            }
            std::uint32_t out = 0;
            for (std::size_t i = 0; i < d; ++i) out += reduce(exp[i], mods_[i]) * radix_[i];
            return out;
        }
        if (d == 1)
            return reduce(detail::parse_int(s, "cyclic element"), mods_[0]);
        throw ConfigError("cannot parse element '" + s + "' for " + spec_);
    }

    std::uint32_t parse_dihedral(const std::string& s) const {
        const std::uint32_t n = dn_;
        if (s == "1" || s == "e") return 0;
        std::size_t i = 0;
        std::uint32_t a = 0;
        if (s[i] == 's') { a = 1; ++i; }
        long long b = 0;
        if (i < s.size()) {
            if (s[i] != 'r') throw ConfigError("cannot parse dihedral element '" + s + "'");
            ++i;
            b = 1;
            if (i < s.size()) b = detail::parse_int(s.substr(i), "rotation exponent");
        } else if (a == 0) {
            throw ConfigError("cannot parse dihedral element '" + s + "'");
        }
        long long bm = b % static_cast<long long>(n);
        if (bm < 0) bm += n;
        return a * n + static_cast<std::uint32_t>(bm);
    }

    Backend backend_ = Backend::abelian;
    std::uint32_t order_ = 1;
    std::uint32_t identity_ = 0;
    FamilyTag tag_ = FamilyTag::cyclic;
    std::string spec_;
    bool abelian_ = true;

    std::vector<std::uint32_t> table_, inv_;      // table backend
    std::vector<std::uint32_t> mods_, radix_;     // abelian backend
    std::uint32_t dn_ = 0;                        // dihedral backend
    std::vector<std::string> labels_;             // optional label override

    friend class GroupBuilder;
};

/// Sorted duplicate-free subset of a group's elements.
class GroupSubset {
public:
    GroupSubset(FiniteGroup::Ptr parent, std::vector<std::uint32_t> members)
        : parent_(std::move(parent)), members_(std::move(members)) {
        if (!parent_) throw InternalError("GroupSubset without parent");
        std::sort(members_.begin(), members_.end());
        for (std::size_t i = 0; i < members_.size(); ++i) {
            if (members_[i] >= parent_->order())
                throw ConfigError("subset element index " + std::to_string(members_[i]) +
                                  " out of range");
            if (i && members_[i] == members_[i - 1])
                throw ConfigError("duplicate element '" + parent_->label(members_[i]) +
                                  "' in subset (subsets are sets)");
        }
    }

    static GroupSubset from_labels(const FiniteGroup::Ptr& parent,
                                   const std::vector<std::string>& labels) {
        std::vector<std::uint32_t> m;
        m.reserve(labels.size());
        for (const auto& s : labels) m.push_back(parent->parse_element(s));
        return GroupSubset(parent, std::move(m));
    }

    const FiniteGroup::Ptr& parent() const { return parent_; }
    const std::vector<std::uint32_t>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }

    bool contains(std::uint32_t g) const {
        return std::binary_search(members_.begin(), members_.end(), g);
    }

    std::vector<std::string> labels() const {
        std::vector<std::string> out;
        out.reserve(members_.size());
        for (auto g : members_) out.push_back(parent_->label(g));
        return out;
    }

    friend bool operator==(const GroupSubset& a, const GroupSubset& b) {
        return a.parent_ == b.parent_ && a.members_ == b.members_;
    }

private:
    FiniteGroup::Ptr parent_;
    std::vector<std::uint32_t> members_;
};

enum class Side { left, right };

/// {g h | h in S} or {h g | h in S}.
inline GroupSubset translate_set(const GroupSubset& s, std::uint32_t g, Side side) {
    const auto& G = *s.parent();
    if (g >= G.order()) throw ConfigError("translation element out of range");
    std::vector<std::uint32_t> out;
    out.reserve(s.size());
    for (auto h : s.members())
        out.push_back(side == Side::left ? G.mul(g, h) : G.mul(h, g));
    return GroupSubset(s.parent(), std::move(out));
}

/// {h^-1 | h in S}.
inline GroupSubset invert_set(const GroupSubset& s) {
    const auto& G = *s.parent();
    std::vector<std::uint32_t> out;
    out.reserve(s.size());
    for (auto h : s.members()) out.push_back(G.inv(h));
    return GroupSubset(s.parent(), std::move(out));
}

/// Partition of G into double cosets <t>\G/<s>. Classes are ordered by their
/// minimal element; members sorted ascending.
inline std::vector<std::vector<std::uint32_t>> double_cosets(const FiniteGroup& g,
                                                             std::uint32_t t, std::uint32_t s) {
    if (t >= g.order() || s >= g.order()) throw ConfigError("double_cosets: element out of range");
    std::vector<bool> seen(g.order(), false);
    std::vector<std::vector<std::uint32_t>> classes;
    for (std::uint32_t start = 0; start < g.order(); ++start) {
        if (seen[start]) continue;
        std::vector<std::uint32_t> stack{start};
        std::vector<std::uint32_t> cls;
        seen[start] = true;
        while (!stack.empty()) {
            const std::uint32_t h = stack.back();
            stack.pop_back();
            cls.push_back(h);
            for (const std::uint32_t nx : {g.mul(t, h), g.mul(h, s)}) {
                if (!seen[nx]) { seen[nx] = true; stack.push_back(nx); }
            }
        }
        std::sort(cls.begin(), cls.end());
        classes.push_back(std::move(cls));
    }
    return classes;
}

/// Closure of gens under multiplication and inversion; contains the identity.
inline GroupSubset subgroup_generated(const FiniteGroup::Ptr& g,
                                      const std::vector<std::uint32_t>& gens) {
    if (gens.empty()) throw ConfigError("subgroup_generated: empty generator list");
    std::vector<bool> in(g->order(), false);
    std::vector<std::uint32_t> members{g->identity()};
    in[g->identity()] = true;
    std::vector<std::uint32_t> work = members;
    std::vector<std::uint32_t> gen_closed;
    for (auto x : gens) {
        if (x >= g->order()) throw ConfigError("generator out of range");
        gen_closed.push_back(x);
        gen_closed.push_back(g->inv(x));
    }
    while (!work.empty()) {
        const std::uint32_t h = work.back();
        work.pop_back();
        for (auto x : gen_closed) {
            const std::uint32_t p = g->mul(h, x);
            if (!in[p]) {
                in[p] = true;
                members.push_back(p);
                work.push_back(p);
            }
        }
    }
    return GroupSubset(g, std::move(members));
}

inline bool is_subgroup(const GroupSubset& s) {
    const auto& g = *s.parent();
    if (!s.contains(g.identity())) return false;
    for (auto a : s.members())
        for (auto b : s.members())
            if (!s.contains(g.mul(a, b))) return false;
    return true;
}

inline bool is_normal_subgroup(const GroupSubset& s) {
    if (!is_subgroup(s)) return false;
    const auto& g = *s.parent();
    for (std::uint32_t x = 0; x < g.order(); ++x) {
        const std::uint32_t xi = g.inv(x);
        for (auto h : s.members())
            if (!s.contains(g.mul(g.mul(x, h), xi))) return false;
    }
    return true;
}

/// All subgroups, by closure BFS over generator extensions. Orders above 64
/// are rejected (element sets are tracked as 64-bit masks).
inline std::vector<GroupSubset> all_subgroups(const FiniteGroup::Ptr& g) {
    const std::uint32_t n = g->order();
    if (n > 64) throw CapExceeded("subgroup enumeration supports order <= 64");
    auto closure_mask = [&](std::uint64_t seed) {
        std::vector<std::uint32_t> members, work;
        std::uint64_t mask = 0;
        for (std::uint32_t i = 0; i < n; ++i)
            if (seed >> i & 1) { members.push_back(i); work.push_back(i); mask |= 1ull << i; }
        while (!work.empty()) {
            const std::uint32_t h = work.back();
            work.pop_back();
            for (std::size_t k = 0; k < members.size(); ++k) {
                for (const std::uint32_t p : {g->mul(h, members[k]), g->mul(members[k], h)}) {
                    if (!(mask >> p & 1)) {
                        mask |= 1ull << p;
                        members.push_back(p);
                        work.push_back(p);
                    }
                }
            }
            const std::uint32_t hi = g->inv(h);
            if (!(mask >> hi & 1)) { mask |= 1ull << hi; members.push_back(hi); work.push_back(hi); }
        }
        return mask;
    };
    std::set<std::uint64_t> found;
    std::vector<std::uint64_t> frontier;
    const std::uint64_t triv = closure_mask(1ull << g->identity());
    found.insert(triv);
    frontier.push_back(triv);
    while (!frontier.empty()) {
        const std::uint64_t h = frontier.back();
        frontier.pop_back();
        for (std::uint32_t x = 0; x < n; ++x) {
            if (h >> x & 1) continue;
            const std::uint64_t ext = closure_mask(h | (1ull << x));
            if (found.insert(ext).second) frontier.push_back(ext);
        }
    }
    std::vector<GroupSubset> out;
    for (const std::uint64_t mask : found) {
        std::vector<std::uint32_t> members;
        for (std::uint32_t i = 0; i < n; ++i)
            if (mask >> i & 1) members.push_back(i);
        out.emplace_back(g, std::move(members));
    }
    std::sort(out.begin(), out.end(), [](const GroupSubset& a, const GroupSubset& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.members() < b.members();
    });
    return out;
}

inline std::vector<GroupSubset> normal_subgroups(const FiniteGroup::Ptr& g) {
    std::vector<GroupSubset> out;
    for (auto& h : all_subgroups(g))
        if (is_normal_subgroup(h)) out.push_back(std::move(h));
    return out;
}

}  // namespace lrc
