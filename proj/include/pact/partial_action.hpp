#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "group.hpp"
#include "report.hpp"
#include "star_algebra.hpp"
#include "subspace.hpp"

namespace pact {

/// Partial action of a finite group on a StarAlgebra: one domain per group
/// element and one linear map per group element. maps[t] sends the RREF
/// basis of domains[inv(t)] into ambient coordinates, column by column, so
/// its shape is dim x dim(domains[inv(t)]).
///
/// The struct itself only fixes shapes; every axiom with mathematical
/// content lives in check_partial_action.
struct PartialAction {
    Group group;
    StarAlgebra algebra;
    std::vector<Subspace> domains;
    std::vector<DenseMatrix> maps;

    std::size_t order() const { return group.order; }
    std::size_t dim() const { return algebra.dim(); }

    const Subspace& domain(std::size_t t) const { return domains.at(t); }

    /// Value of the map at t on an ambient vector inside domains[inv(t)].
    Vec apply(std::size_t t, const Vec& v) const {
        auto out = try_apply(t, v);
        if (!out) throw std::invalid_argument("vector outside the domain of the map");
        return *out;
    }

    std::optional<Vec> try_apply(std::size_t t, const Vec& v) const {
        auto c = domains.at(group.inv(t)).coords(v);
        if (!c) return std::nullopt;
        return maps.at(t).apply(*c);
    }

    /// Image of a subspace of domains[inv(t)] under the map at t.
    Subspace image_subspace(std::size_t t, const Subspace& s) const {
        std::vector<Vec> rows;
        rows.reserve(s.dim());
        for (std::size_t k = 0; k < s.dim(); ++k) rows.push_back(apply(t, s.basis_row(k)));
        return Subspace::span(dim(), rows);
    }

    void require_shapes() const {
        const std::size_t n = group.order;
        if (domains.size() != n || maps.size() != n)
            throw std::invalid_argument("one domain and one map per group element required");
        for (std::size_t t = 0; t < n; ++t) {
            if (domains[t].ambient_dim() != dim())
                throw std::invalid_argument("domain ambient dimension mismatch");
            if (maps[t].rows() != dim() || maps[t].cols() != domains[group.inv(t)].dim())
                throw std::invalid_argument("map shape mismatch at t=" + std::to_string(t));
        }
    }
};

/// Everywhere-defined action; the constructor pins all domains to the full
/// space so only the maps need providing.
struct GlobalAction {
    PartialAction action;

    static GlobalAction from_maps(Group group, StarAlgebra algebra, std::vector<DenseMatrix> maps) {
        PartialAction pa{std::move(group), std::move(algebra), {}, std::move(maps)};
        pa.domains.assign(pa.group.order, Subspace::full(pa.algebra.dim()));
        pa.require_shapes();
        return GlobalAction{std::move(pa)};
    }

    const DenseMatrix& map(std::size_t t) const { return action.maps.at(t); }
    std::size_t order() const { return action.order(); }
    std::size_t dim() const { return action.dim(); }
};

inline GlobalAction trivial_global_action(Group group, StarAlgebra algebra) {
    std::vector<DenseMatrix> maps(group.order, DenseMatrix::identity(algebra.dim()));
    return GlobalAction::from_maps(std::move(group), std::move(algebra), std::move(maps));
}

/// Checks every axiom and reports all broken ones at once, each with its
/// lexicographically first witness. Index parts of witnesses name basis
/// positions of the relevant domain. Throws std::invalid_argument only for
/// shape mismatches.
inline Report check_partial_action(const PartialAction& pa) {
    pa.require_shapes();
    Report rep;
    const Group& g = pa.group;
    const StarAlgebra& alg = pa.algebra;
    const std::size_t n = g.order;

    for (std::size_t t = 0; t < n; ++t) {
        const Subspace& d = pa.domains[t];
        for (std::size_t k = 0; k < d.dim(); ++k) {
            Vec v = d.basis_row(k);
            for (std::size_t j = 0; j < alg.dim(); ++j) {
                if (!d.contains(alg.mul(alg.basis(j), v)) || !d.contains(alg.mul(v, alg.basis(j)))) {
                    rep.add_once("domain-ideal", detail::idx_witness({{"t", t}, {"j", j}, {"k", k}}));
                }
            }
            if (!d.contains(alg.star(v)))
                rep.add_once("domain-star-closed", detail::idx_witness({{"t", t}, {"k", k}}));
        }
    }

    if (!pa.domains[g.identity].is_full())
        rep.add("identity-domain", "domain at the identity is a proper subspace");
    else if (pa.maps[g.identity] != DenseMatrix::identity(pa.dim()))
        rep.add("identity-map", "map at the identity is not the identity");

    for (std::size_t t = 0; t < n; ++t) {
        if (rref(pa.maps[t]).rank != pa.domains[g.inv(t)].dim())
            rep.add_once("map-injective", detail::idx_witness({{"t", t}}));
        for (std::size_t k = 0; k < pa.maps[t].cols(); ++k)
            if (!pa.domains[t].contains(pa.maps[t].col(k)))
                rep.add_once("map-into-domain", detail::idx_witness({{"t", t}, {"k", k}}));
    }

    for (std::size_t t = 0; t < n; ++t) {
        const Subspace& src = pa.domains[g.inv(t)];
        for (std::size_t k = 0; k < src.dim(); ++k) {
            Vec u = src.basis_row(k);
            for (std::size_t l = 0; l < src.dim(); ++l) {
                Vec v = src.basis_row(l);
                Vec uv = alg.mul(u, v);  // stays in the ideal src
                auto lhs = pa.try_apply(t, uv);
                if (!lhs) continue;  // ideal violation already reported
                if (*lhs != alg.mul(pa.apply(t, u), pa.apply(t, v)))
                    rep.add_once("map-multiplicative",
                                 detail::idx_witness({{"t", t}, {"k", k}, {"l", l}}));
            }
            auto starred = pa.try_apply(t, alg.star(u));
            if (starred && *starred != alg.star(pa.apply(t, u)))
                rep.add_once("map-star", detail::idx_witness({{"t", t}, {"k", k}}));
        }
    }

    // Domain compatibility: the map at t carries D[inv(t)] meet D[s] onto
    // D[t] meet D[ts].
    for (std::size_t t = 0; t < n; ++t)
        for (std::size_t s = 0; s < n; ++s) {
            Subspace lhs =
                pa.image_subspace(t, intersect(pa.domains[g.inv(t)], pa.domains[s]));
            if (lhs != intersect(pa.domains[t], pa.domains[g.op(t, s)]))
                rep.add_once("compatibility", detail::idx_witness({{"t", t}, {"s", s}}));
        }

    // Composition wherever both sides are defined.
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t) {
            const std::size_t st = g.op(s, t);
            Subspace both = intersect(pa.domains[g.inv(t)], pa.domains[g.inv(st)]);
            for (std::size_t k = 0; k < both.dim(); ++k) {
                Vec v = both.basis_row(k);
                auto mid = pa.try_apply(t, v);
                std::optional<Vec> lhs;
                if (mid) lhs = pa.try_apply(s, *mid);
                if (!lhs || *lhs != pa.apply(st, v))
                    rep.add_once("composition",
                                 detail::idx_witness({{"s", s}, {"t", t}, {"k", k}}));
            }
        }

    return rep;
}

/// A partial action obtained by cutting a global action down to an ideal,
/// kept together with the coordinate view of that ideal.
struct RestrictedAction {
    PartialAction action;
    SubalgebraView view;
};

/// Restriction of a global action to a star-closed ideal: the subalgebra
/// structure comes from the ideal, the new domain at t is the ideal meet its
/// image at t, and the maps are cut down accordingly. Throws if the subspace
/// is not closed under products and star; the ideal property itself is
/// check_partial_action's business afterwards.
inline RestrictedAction restrict_action(const GlobalAction& ga, const Subspace& ideal) {
    const PartialAction& base = ga.action;
    SubalgebraView view = subalgebra(base.algebra, ideal);
    const std::size_t n = base.group.order;
    const std::size_t m = ideal.dim();

    std::vector<Subspace> sub_domains;
    sub_domains.reserve(n);
    for (std::size_t t = 0; t < n; ++t) {
        Subspace cut = intersect(ideal, apply_to_subspace(ga.map(t), ideal));
        std::vector<Vec> rows;
        rows.reserve(cut.dim());
        for (std::size_t k = 0; k < cut.dim(); ++k) rows.push_back(view.project(cut.basis_row(k)));
        sub_domains.push_back(Subspace::span(m, rows));
    }

    std::vector<DenseMatrix> sub_maps;
    sub_maps.reserve(n);
    for (std::size_t t = 0; t < n; ++t) {
        const Subspace& src = sub_domains[base.group.inv(t)];
        DenseMatrix mt(m, src.dim());
        for (std::size_t k = 0; k < src.dim(); ++k) {
            Vec img = view.project(ga.map(t).apply(view.lift(src.basis_row(k))));
            for (std::size_t r = 0; r < m; ++r) mt(r, k) = img[r];
        }
        sub_maps.push_back(std::move(mt));
    }

    PartialAction pa{base.group, view.algebra, std::move(sub_domains), std::move(sub_maps)};
    return RestrictedAction{std::move(pa), std::move(view)};
}

/// Morphism check for phi : A -> B between two partial actions of the same
/// group: *-homomorphism, domains into domains, and intertwining with the
/// maps wherever defined.
inline Report verify_morphism(const DenseMatrix& phi, const PartialAction& alpha,
                              const PartialAction& beta) {
    Report rep;
    if (alpha.group.table != beta.group.table || alpha.group.order != beta.group.order) {
        rep.add("morphism-group", "the two actions live over different groups");
        return rep;
    }
    if (phi.rows() != beta.dim() || phi.cols() != alpha.dim())
        throw std::invalid_argument("morphism matrix shape mismatch");
    const StarAlgebra& a = alpha.algebra;
    const StarAlgebra& b = beta.algebra;

    for (std::size_t i = 0; i < a.dim() && !rep.has("morphism-multiplicative"); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (phi.apply(a.mul(a.basis(i), a.basis(j))) !=
                b.mul(phi.apply(a.basis(i)), phi.apply(a.basis(j)))) {
                rep.add("morphism-multiplicative", detail::idx_witness({{"i", i}, {"j", j}}));
                break;
            }
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (phi.apply(a.star(a.basis(i))) != b.star(phi.apply(a.basis(i)))) {
            rep.add_once("morphism-star", detail::idx_witness({{"i", i}}));
            break;
        }

    const std::size_t n = alpha.group.order;
    for (std::size_t t = 0; t < n; ++t)
        for (std::size_t k = 0; k < alpha.domains[t].dim(); ++k)
            if (!beta.domains[t].contains(phi.apply(alpha.domains[t].basis_row(k))))
                rep.add_once("morphism-domain", detail::idx_witness({{"t", t}, {"k", k}}));

    for (std::size_t t = 0; t < n; ++t) {
        const Subspace& src = alpha.domains[alpha.group.inv(t)];
        for (std::size_t k = 0; k < src.dim(); ++k) {
            Vec v = src.basis_row(k);
            auto rhs = beta.try_apply(t, phi.apply(v));
            if (!rhs || *rhs != phi.apply(alpha.apply(t, v)))
                rep.add_once("morphism-equivariant", detail::idx_witness({{"t", t}, {"k", k}}));
        }
    }
    return rep;
}

}  // namespace pact
