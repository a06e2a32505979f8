#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "report.hpp"

namespace pact {

/// Finite group as a Cayley table over elements 0..order-1. Identity and
/// inverses are located at construction; full axioms are the job of
/// check_group.
struct Group {
    std::size_t order = 0;
    std::vector<std::size_t> table;  // row-major: table[a * order + b] = a b
    std::size_t identity = 0;
    std::vector<std::size_t> inverse;

    std::size_t op(std::size_t a, std::size_t b) const { return table[a * order + b]; }
    std::size_t inv(std::size_t a) const { return inverse[a]; }

    static Group from_table(const std::vector<std::vector<std::size_t>>& rows) {
        Group g;
        g.order = rows.size();
        if (g.order == 0) throw std::invalid_argument("empty group table");
        g.table.reserve(g.order * g.order);
        for (const auto& row : rows) {
            if (row.size() != g.order) throw std::invalid_argument("group table is not square");
            for (std::size_t x : row) {
                if (x >= g.order) throw std::invalid_argument("group table entry out of range");
                g.table.push_back(x);
            }
        }
        g.locate_identity_and_inverses();
        return g;
    }

    void locate_identity_and_inverses() {
        std::optional<std::size_t> id;
        for (std::size_t e = 0; e < order; ++e) {
            bool ok = true;
            for (std::size_t a = 0; a < order && ok; ++a)
                ok = op(e, a) == a && op(a, e) == a;
            if (ok) {
                id = e;
                break;
            }
        }
        if (!id) throw std::invalid_argument("group table has no identity");
        identity = *id;
        inverse.assign(order, 0);
        for (std::size_t a = 0; a < order; ++a) {
            bool found = false;
            for (std::size_t b = 0; b < order; ++b)
                if (op(a, b) == identity && op(b, a) == identity) {
                    inverse[a] = b;
                    found = true;
                    break;
                }
            if (!found) throw std::invalid_argument("group table has a non-invertible element");
        }
    }
};

inline Report check_group(const Group& g) {
    Report rep;
    const std::size_t n = g.order;
    if (g.table.size() != n * n) {
        rep.add("group-shape", "table size != order^2");
        return rep;
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (g.op(a, b) >= n) {
                rep.add_once("group-closure", "(" + std::to_string(a) + "," + std::to_string(b) + ")");
                return rep;
            }
    for (std::size_t a = 0; a < n && !rep.has("group-associativity"); ++a)
        for (std::size_t b = 0; b < n && !rep.has("group-associativity"); ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (g.op(g.op(a, b), c) != g.op(a, g.op(b, c))) {
                    std::ostringstream os;
                    os << "(" << a << "," << b << "," << c << ")";
                    rep.add("group-associativity", os.str());
                    break;
                }
    for (std::size_t a = 0; a < n; ++a)
        if (g.op(g.identity, a) != a || g.op(a, g.identity) != a) {
            rep.add_once("group-identity", std::to_string(a));
            break;
        }
    for (std::size_t a = 0; a < n; ++a)
        if (g.op(a, g.inv(a)) != g.identity || g.op(g.inv(a), a) != g.identity) {
            rep.add_once("group-inverse", std::to_string(a));
            break;
        }
    return rep;
}

namespace detail {

inline std::vector<std::vector<std::size_t>> permutations_of(std::size_t n) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), std::size_t{0});
    std::vector<std::vector<std::size_t>> all;
    do {
        all.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return all;
}

}  // namespace detail

inline Group cyclic_group(std::size_t n) {
    if (n == 0) throw std::invalid_argument("cyclic group order must be positive");
    Group g;
    g.order = n;
    g.table.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) g.table[a * n + b] = (a + b) % n;
    g.locate_identity_and_inverses();
    return g;
}

/// Permutations of {0..n-1} in lexicographic order; product is composition,
/// (p q)(x) = p(q(x)).
inline Group symmetric_group(std::size_t n) {
    if (n == 0 || n > 5) throw std::invalid_argument("symmetric group degree out of range");
    auto perms = detail::permutations_of(n);
    const std::size_t m = perms.size();
    auto index_of = [&](const std::vector<std::size_t>& p) {
        return static_cast<std::size_t>(
            std::lower_bound(perms.begin(), perms.end(), p) - perms.begin());
    };
    Group g;
    g.order = m;
    g.table.resize(m * m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            std::vector<std::size_t> c(n);
            for (std::size_t x = 0; x < n; ++x) c[x] = perms[a][perms[b][x]];
            g.table[a * m + b] = index_of(c);
        }
    g.locate_identity_and_inverses();
    return g;
}

/// Element k < n is the rotation r^k, element n + k is the reflection s r^k.
inline Group dihedral_group(std::size_t n) {
    if (n < 2) throw std::invalid_argument("dihedral parameter must be at least 2");
    const std::size_t m = 2 * n;
    auto rot = [&](std::size_t x) { return x % n; };
    auto is_ref = [&](std::size_t x) { return x >= n; };
    Group g;
    g.order = m;
    g.table.resize(m * m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            // (s^i r^j)(s^k r^l) = s^(i+k) r^(±j+l), the sign flipped by k.
            std::size_t j = rot(a), l = rot(b);
            bool ref = is_ref(a) != is_ref(b);
            std::size_t j_adj = is_ref(b) ? (n - j) % n : j;
            g.table[a * m + b] = (ref ? n : 0) + (j_adj + l) % n;
        }
    g.locate_identity_and_inverses();
    return g;
}

inline Group direct_product(const Group& a, const Group& b) {
    Group g;
    g.order = a.order * b.order;
    g.table.resize(g.order * g.order);
    auto enc = [&](std::size_t x, std::size_t y) { return x * b.order + y; };
    for (std::size_t x1 = 0; x1 < a.order; ++x1)
        for (std::size_t y1 = 0; y1 < b.order; ++y1)
            for (std::size_t x2 = 0; x2 < a.order; ++x2)
                for (std::size_t y2 = 0; y2 < b.order; ++y2)
                    g.table[enc(x1, y1) * g.order + enc(x2, y2)] =
                        enc(a.op(x1, x2), b.op(y1, y2));
    g.locate_identity_and_inverses();
    return g;
}

/// Builds a group from a description like "cyclic(6)", "symmetric(3)",
/// "dihedral(4)" or products of those joined by "x". Throws
/// std::invalid_argument on syntax errors or when the order exceeds the cap.
inline Group build_group(std::string_view desc, std::size_t max_order = 64) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
        while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
        return s;
    };
    auto parse_factor = [&](std::string_view s) {
        s = trim(s);
        auto open = s.find('(');
        if (open == std::string_view::npos || s.back() != ')')
            throw std::invalid_argument("group factor must look like name(n)");
        std::string name(trim(s.substr(0, open)));
        std::string arg(trim(s.substr(open + 1, s.size() - open - 2)));
        if (arg.empty() || arg.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("group factor parameter must be a number");
        std::size_t n = static_cast<std::size_t>(std::stoul(arg));
        if (name == "cyclic") return cyclic_group(n);
        if (name == "symmetric") return symmetric_group(n);
        if (name == "dihedral") return dihedral_group(n);
        throw std::invalid_argument("unknown group family: " + name);
    };
    desc = trim(desc);
    if (desc.empty()) throw std::invalid_argument("empty group description");
    std::optional<Group> acc;
    std::size_t start = 0;
    for (std::size_t k = 0; k <= desc.size(); ++k) {
        if (k == desc.size() || desc[k] == 'x') {
            Group f = parse_factor(desc.substr(start, k - start));
            acc = acc ? direct_product(*acc, f) : std::move(f);
            if (acc->order > max_order)
                throw std::invalid_argument("group order exceeds cap of " +
                                            std::to_string(max_order));
            start = k + 1;
        }
    }
    return *acc;
}

inline bool is_abelian(const Group& g) {
    for (std::size_t a = 0; a < g.order; ++a)
        for (std::size_t b = a + 1; b < g.order; ++b)
            if (g.op(a, b) != g.op(b, a)) return false;
    return true;
}

}  // namespace pact
