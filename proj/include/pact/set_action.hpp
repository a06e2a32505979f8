#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "builders.hpp"
#include "group.hpp"
#include "partial_action.hpp"

namespace pact {

/// Partial action of a finite group on the point set {0..points-1}: per group
/// element a subset and a bijection from the subset at the inverse onto it.
/// maps[t] is aligned with subsets[inv(t)], which is kept sorted.
struct SetPAction {
    Group group;
    std::size_t points = 0;
    std::vector<std::vector<std::size_t>> subsets;
    std::vector<std::vector<std::size_t>> maps;

    bool member(std::size_t t, std::size_t x) const {
        const auto& s = subsets[t];
        return std::binary_search(s.begin(), s.end(), x);
    }

    /// Image of x under the map at t; x must lie in the subset at inv(t).
    std::size_t apply(std::size_t t, std::size_t x) const {
        const auto& src = subsets[group.inv(t)];
        auto it = std::lower_bound(src.begin(), src.end(), x);
        if (it == src.end() || *it != x)
            throw std::invalid_argument("point outside the domain at inv(t)");
        return maps[t][static_cast<std::size_t>(it - src.begin())];
    }

    void require_shapes() const {
        const std::size_t n = group.order;
        if (subsets.size() != n || maps.size() != n)
            throw std::invalid_argument("one subset and one map per group element required");
        for (std::size_t t = 0; t < n; ++t) {
            if (!std::is_sorted(subsets[t].begin(), subsets[t].end()) ||
                std::adjacent_find(subsets[t].begin(), subsets[t].end()) != subsets[t].end())
                throw std::invalid_argument("subset at t=" + std::to_string(t) +
                                            " is not sorted and duplicate free");
            for (std::size_t x : subsets[t])
                if (x >= points)
                    throw std::invalid_argument("subset entry out of range at t=" +
                                                std::to_string(t));
            if (maps[t].size() != subsets[group.inv(t)].size())
                throw std::invalid_argument("map at t=" + std::to_string(t) +
                                            " is not aligned with the subset at inv(t)");
            for (std::size_t y : maps[t])
                if (y >= points)
                    throw std::invalid_argument("map entry out of range at t=" + std::to_string(t));
        }
    }
};

/// All the set-action axioms by exhaustive enumeration: identity element acts
/// as the identity on everything, each map is a bijection onto its subset,
/// subsets translate compatibly, and composition holds wherever both sides
/// are defined.
inline Report check_set_paction(const SetPAction& pa) {
    pa.require_shapes();
    Report rep;
    const Group& g = pa.group;
    const std::size_t n = g.order;
    const std::size_t e = g.identity;

    if (pa.subsets[e].size() != pa.points)
        rep.add("set-identity", "subset at the identity misses points");
    else
        for (std::size_t k = 0; k < pa.points; ++k)
            if (pa.maps[e][k] != pa.subsets[e][k]) {
                rep.add("set-identity", detail::idx_witness({{"x", pa.subsets[e][k]}}));
                break;
            }

    for (std::size_t t = 0; t < n; ++t) {
        std::vector<std::size_t> image = pa.maps[t];
        std::sort(image.begin(), image.end());
        image.erase(std::unique(image.begin(), image.end()), image.end());
        if (image != pa.subsets[t] || pa.maps[t].size() != image.size())
            rep.add_once("set-bijection", detail::idx_witness({{"t", t}}));
    }
    if (!rep.pass()) return rep;  // the remaining rules assume working bijections

    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t) {
            // map_t of (X_{inv(t)} meet X_s) must equal X_t meet X_{ts}.
            std::vector<std::size_t> lhs;
            for (std::size_t x : pa.subsets[g.inv(t)])
                if (pa.member(s, x)) lhs.push_back(pa.apply(t, x));
            std::sort(lhs.begin(), lhs.end());
            std::vector<std::size_t> rhs;
            for (std::size_t y : pa.subsets[t])
                if (pa.member(g.op(t, s), y)) rhs.push_back(y);
            if (lhs != rhs) rep.add_once("set-compatible", detail::idx_witness({{"s", s}, {"t", t}}));
        }

    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t) {
            const std::size_t st = g.op(s, t);
            for (std::size_t x : pa.subsets[g.inv(t)]) {
                if (!pa.member(g.inv(st), x)) continue;
                std::size_t once = pa.apply(t, x);
                if (!pa.member(g.inv(s), once)) {
                    rep.add_once("set-composition",
                                 detail::idx_witness({{"s", s}, {"t", t}, {"x", x}}));
                    continue;
                }
                if (pa.apply(s, once) != pa.apply(st, x))
                    rep.add_once("set-composition",
                                 detail::idx_witness({{"s", s}, {"t", t}, {"x", x}}));
            }
        }

    return rep;
}

/// Quotient of the product G x X that turns a set partial action global:
/// classes of (s,x), translation moving the group coordinate, the base set
/// included along the identity. Class labels count classes in order of their
/// smallest member, (s,x) ordered by s then x.
struct SetEnvelope {
    SetPAction base;
    std::size_t classes = 0;
    std::vector<std::size_t> class_of;           // flat (s, x) -> class label
    std::vector<std::vector<std::size_t>> beta;  // beta[g][c]
    std::vector<std::size_t> iota;               // x -> class label

    std::size_t flat(std::size_t s, std::size_t x) const { return s * base.points + x; }
};

namespace detail {

struct UnionFind {
    std::vector<std::size_t> parent;

    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
    }

    std::size_t find(std::size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }

    void unite(std::size_t a, std::size_t b) { parent[find(a)] = parent[find(b)]; }
};

}  // namespace detail

/// Builds the quotient envelope. The identifying relation is generated
/// explicitly and checked to be an equivalence, and every claimed property
/// of the result is verified on the spot; failures throw std::logic_error,
/// since on a validated action they can only mean a bug on this side.
inline SetEnvelope set_envelope(const SetPAction& pa) {
    pa.require_shapes();
    const Group& g = pa.group;
    const std::size_t n = g.order;
    const std::size_t m = pa.points;
    const std::size_t total = n * m;

    // (s,x) ~ (t,y) iff x lies in the subset at inv(s)t and the map at
    // inv(t)s sends x to y.
    std::vector<std::vector<char>> rel(total, std::vector<char>(total, 0));
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t) {
            const std::size_t u = g.op(g.inv(t), s);
            for (std::size_t x : pa.subsets[g.inv(u)])
                rel[s * m + x][t * m + pa.apply(u, x)] = 1;
        }

    for (std::size_t p = 0; p < total; ++p)
        if (!rel[p][p]) throw std::logic_error("the identification relation is not reflexive");
    for (std::size_t p = 0; p < total; ++p)
        for (std::size_t q = 0; q < total; ++q)
            if (rel[p][q] && !rel[q][p])
                throw std::logic_error("the identification relation is not symmetric");
    for (std::size_t p = 0; p < total; ++p)
        for (std::size_t q = 0; q < total; ++q) {
            if (!rel[p][q]) continue;
            for (std::size_t r = 0; r < total; ++r)
                if (rel[q][r] && !rel[p][r])
                    throw std::logic_error("the identification relation is not transitive");
        }

    detail::UnionFind uf(total);
    for (std::size_t p = 0; p < total; ++p)
        for (std::size_t q = p + 1; q < total; ++q)
            if (rel[p][q]) uf.unite(p, q);

    SetEnvelope env;
    env.base = pa;
    env.class_of.assign(total, total);
    std::size_t next = 0;
    for (std::size_t p = 0; p < total; ++p) {  // ascending p labels by smallest member
        std::size_t root = uf.find(p);
        std::size_t seen = env.class_of[uf.find(root)];
        if (seen == total) {
            env.class_of[root] = next++;
            seen = env.class_of[root];
        }
        env.class_of[p] = seen;
    }
    env.classes = next;

    env.beta.assign(n, std::vector<std::size_t>(env.classes));
    for (std::size_t t = 0; t < n; ++t) {
        std::vector<char> set(env.classes, 0);
        for (std::size_t s = 0; s < n; ++s)
            for (std::size_t x = 0; x < m; ++x) {
                const std::size_t c = env.class_of[env.flat(s, x)];
                const std::size_t img = env.class_of[env.flat(g.op(t, s), x)];
                if (set[c] && env.beta[t][c] != img)
                    throw std::logic_error("translation is not constant on classes");
                env.beta[t][c] = img;
                set[c] = 1;
            }
    }
    for (std::size_t c = 0; c < env.classes; ++c)
        if (env.beta[g.identity][c] != c)
            throw std::logic_error("translation by the identity moves a class");
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t)
            for (std::size_t c = 0; c < env.classes; ++c)
                if (env.beta[s][env.beta[t][c]] != env.beta[g.op(s, t)][c])
                    throw std::logic_error("translation does not compose");

    env.iota.resize(m);
    for (std::size_t x = 0; x < m; ++x) env.iota[x] = env.class_of[env.flat(g.identity, x)];
    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = x + 1; y < m; ++y)
            if (env.iota[x] == env.iota[y])
                throw std::logic_error("the inclusion of the base set is not injective");

    // iota(X_t) must be exactly the part of iota(X) that translation by t
    // keeps inside, and the translates of iota(X) must exhaust the classes.
    std::vector<char> in_base(env.classes, 0);
    for (std::size_t x = 0; x < m; ++x) in_base[env.iota[x]] = 1;
    std::vector<char> covered(env.classes, 0);
    for (std::size_t t = 0; t < n; ++t) {
        std::vector<char> lhs(env.classes, 0);
        for (std::size_t x : pa.subsets[t]) lhs[env.iota[x]] = 1;
        for (std::size_t x = 0; x < m; ++x) {
            const std::size_t moved = env.beta[t][env.iota[x]];
            covered[moved] = 1;
            const char meets = in_base[moved];
            if (meets != lhs[moved])
                throw std::logic_error("the included subset at t=" + std::to_string(t) +
                                       " is not the meet with its translate");
            if (meets) lhs[moved] = 0;
        }
        for (std::size_t c = 0; c < env.classes; ++c)
            if (lhs[c]) throw std::logic_error("the included subset at t=" + std::to_string(t) +
                                               " is not the meet with its translate");
    }
    for (std::size_t c = 0; c < env.classes; ++c)
        if (!covered[c]) throw std::logic_error("the translates of the base set miss a class");

    return env;
}

/// The commutative picture of a set partial action: functions on the points,
/// one delta per point, subsets becoming ideals and point maps becoming the
/// partial maps.
inline PartialAction function_action(const SetPAction& pa) {
    pa.require_shapes();
    const std::size_t n = pa.group.order;
    const std::size_t m = pa.points;
    StarAlgebra alg = diagonal_algebra(m);

    std::vector<Subspace> domains;
    domains.reserve(n);
    for (std::size_t t = 0; t < n; ++t) {
        std::vector<Vec> rows;
        rows.reserve(pa.subsets[t].size());
        for (std::size_t x : pa.subsets[t]) rows.push_back(alg.basis(x));
        domains.push_back(Subspace::span(m, rows));
    }

    std::vector<DenseMatrix> maps;
    maps.reserve(n);
    for (std::size_t t = 0; t < n; ++t) {
        const auto& src = pa.subsets[pa.group.inv(t)];
        DenseMatrix mt(m, src.size());
        for (std::size_t k = 0; k < src.size(); ++k) mt(pa.maps[t][k], k) = GaussianRational(1);
        maps.push_back(std::move(mt));
    }

    return PartialAction{pa.group, std::move(alg), std::move(domains), std::move(maps)};
}

/// Functions on the quotient: the diagonal algebra over the classes with
/// translation permuting coordinates, the ideal of functions supported on
/// the included base, and the inclusion itself as a matrix of delta images.
struct FunctionModel {
    GlobalAction global;
    Subspace support_ideal;
    DenseMatrix embedding;  // classes x points, column x is delta at iota(x)
};

/// Builds the function model and asserts it recovers the function picture of
/// the base action when cut down to the support ideal.
inline FunctionModel functions_functor(const SetEnvelope& env) {
    const Group& g = env.base.group;
    const std::size_t n = g.order;
    const std::size_t m = env.base.points;
    const std::size_t c = env.classes;

    std::vector<DenseMatrix> maps;
    maps.reserve(n);
    for (std::size_t t = 0; t < n; ++t) {
        DenseMatrix mt(c, c);
        for (std::size_t q = 0; q < c; ++q) mt(env.beta[t][q], q) = GaussianRational(1);
        maps.push_back(std::move(mt));
    }
    GlobalAction global = GlobalAction::from_maps(g, diagonal_algebra(c), std::move(maps));

    std::vector<Vec> deltas;
    deltas.reserve(m);
    DenseMatrix embedding(c, m);
    for (std::size_t x = 0; x < m; ++x) {
        embedding(env.iota[x], x) = GaussianRational(1);
        deltas.push_back(global.action.algebra.basis(env.iota[x]));
    }
    Subspace ideal = Subspace::span(c, deltas);

    RestrictedAction cut = restrict_action(global, ideal);
    PartialAction fa = function_action(env.base);
    DenseMatrix to_view(m, m);
    for (std::size_t x = 0; x < m; ++x) {
        Vec img = cut.view.project(deltas[x]);
        for (std::size_t r = 0; r < m; ++r) to_view(r, x) = img[r];
    }
    auto from_view = inverse(to_view);
    if (!from_view || !verify_morphism(to_view, fa, cut.action).pass() ||
        !verify_morphism(*from_view, cut.action, fa).pass())
        throw std::logic_error("the function model does not recover the base action");

    return FunctionModel{std::move(global), std::move(ideal), std::move(embedding)};
}

}  // namespace pact
