#pragma once

#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "env_family.hpp"
#include "gmultiplier.hpp"
#include "partial_action.hpp"

namespace pact {

/// The inclusion of a single element into the multipliers of A^G, read off a
/// family: T f at slot r is F at inv(r) of (a, f(r)), and f T at slot r pulls
/// F at r of (f(r), a) back through the map at inv(r). Throws when a family
/// value escapes the domain that pullback needs; validated families never do.
inline GMultiplier mu_multiplier(const PartialAction& pa, const EnvelopingFamily& fam,
                                 const Vec& a) {
    const StarAlgebra& alg = pa.algebra;
    const Group& g = pa.group;
    const std::size_t n = g.order;
    const std::size_t d = alg.dim();
    if (fam.slots() != n || fam.dim() != d) throw std::invalid_argument("family shape mismatch");
    if (a.size() != d) throw std::invalid_argument("element dimension mismatch");
    GMultiplier m(n, d);
    for (std::size_t r = 0; r < n; ++r) {
        const std::size_t ri = g.inv(r);
        for (std::size_t j = 0; j < d; ++j) {
            Vec lcol = fam.eval_left(ri, a, j);
            Vec rcol = pa.apply(ri, fam.eval_right(r, j, a));
            for (std::size_t i = 0; i < d; ++i) {
                m.left[r](i, j) = lcol[i];
                m.right[r](i, j) = rcol[i];
            }
        }
    }
    return m;
}

/// A verification clause of the globalization failed; the construction has
/// no meaningful value in that case, so this is thrown rather than reported.
class GlobalizeError : public std::runtime_error {
public:
    GlobalizeError(std::string clause, std::string witness)
        : std::runtime_error(clause + " failed at " + witness),
          clause_(std::move(clause)),
          witness_(std::move(witness)) {}

    const std::string& clause() const { return clause_; }
    const std::string& witness() const { return witness_; }

private:
    std::string clause_, witness_;
};

/// A global action enveloping a partial one, constructed and certified inside
/// the multipliers of A^G. Coordinates of the enveloping algebra refer to the
/// echelon basis of the flattened orbit of the included copy.
struct EnvelopePair {
    PartialAction base;
    EnvelopingFamily family;
    std::vector<GMultiplier> mu;  // images of the base basis vectors
    Subspace mu_span;             // flattened span of those images
    Subspace orbit_span;          // flattened span of all their translates
    StarAlgebra b_algebra;        // the enveloping algebra in orbit coordinates
    GlobalAction beta;            // translation, in orbit coordinates
    DenseMatrix mu_matrix;        // base coordinates -> orbit coordinates
    std::vector<std::string> clauses;  // every verified clause, in check order

    std::size_t envelope_dim() const { return orbit_span.dim(); }

    /// mu of an arbitrary element, by linearity.
    GMultiplier embed(const Vec& a) const {
        GMultiplier acc(mu.empty() ? 0 : mu[0].slots(), mu.empty() ? 0 : mu[0].dim());
        for (std::size_t i = 0; i < a.size(); ++i)
            if (!a[i].is_zero()) acc = acc + a[i] * mu[i];
        return acc;
    }

    GMultiplier from_orbit_coords(const Vec& c) const {
        return unflatten(base.group.order, base.algebra.dim(), orbit_span.lift(c));
    }

    std::optional<Vec> orbit_coords(const GMultiplier& m) const {
        return orbit_span.coords(flatten(m));
    }
};

/// Builds the envelope of the action from a family and certifies every clause
/// that makes it one: each image is a multiplier, the embedding is injective,
/// star preserving and equivariant, translated images multiply back into the
/// embedded copy exactly as the family says, the copy is an ideal meeting its
/// translates in the images of the domains, and the resulting algebra has
/// trivial annihilator and carries the translation action. Throws
/// GlobalizeError naming the first clause that fails.
inline EnvelopePair globalize(const PartialAction& pa, const EnvelopingFamily& fam) {
    const StarAlgebra& alg = pa.algebra;
    const Group& g = pa.group;
    const std::size_t n = g.order;
    const std::size_t d = alg.dim();
    if (fam.slots() != n || fam.dim() != d) throw std::invalid_argument("family shape mismatch");

    std::vector<GMultiplier> mu;
    std::vector<std::string> clauses;

    mu.reserve(d);
    try {
        for (std::size_t i = 0; i < d; ++i) mu.push_back(mu_multiplier(pa, fam, alg.basis(i)));
    } catch (const std::invalid_argument& e) {
        throw GlobalizeError("family-range", e.what());
    }
    auto embed = [&](const Vec& a) {
        GMultiplier acc(n, d);
        for (std::size_t i = 0; i < d; ++i)
            if (!a[i].is_zero()) acc = acc + a[i] * mu[i];
        return acc;
    };

    for (std::size_t i = 0; i < d; ++i) {
        Report rep = check_gmultiplier(alg, mu[i]);
        if (!rep.pass())
            throw GlobalizeError("mu-multiplier",
                                 detail::idx_witness({{"i", i}}) + " " + rep.summary());
    }
    clauses.push_back("mu-multiplier");

    const std::size_t flat = 2 * n * d * d;
    Subspace mu_span = Subspace::zero(flat);
    {
        std::vector<Vec> rows;
        rows.reserve(d);
        for (const GMultiplier& m : mu) rows.push_back(flatten(m));
        mu_span = Subspace::span(flat, rows);
    }
    if (mu_span.dim() != d)
        throw GlobalizeError("mu-injective", "rank " + std::to_string(mu_span.dim()) + " of " +
                                                 std::to_string(d));
    clauses.push_back("mu-injective");

    for (std::size_t i = 0; i < d; ++i)
        if (adjoint(mu[i], alg) != embed(alg.star(alg.basis(i))))
            throw GlobalizeError("mu-star", detail::idx_witness({{"i", i}}));
    clauses.push_back("mu-star");

    for (std::size_t t = 0; t < n; ++t) {
        const Subspace& src = pa.domains[g.inv(t)];
        for (std::size_t k = 0; k < src.dim(); ++k) {
            Vec a = src.basis_row(k);
            if (translate(embed(a), g, t) != embed(pa.apply(t, a)))
                throw GlobalizeError("mu-equivariant", detail::idx_witness({{"t", t}, {"k", k}}));
        }
    }
    clauses.push_back("mu-equivariant");

    Subspace orbit_span = Subspace::zero(flat);
    {
        std::vector<Vec> rows;
        rows.reserve(n * d);
        for (std::size_t s = 0; s < n; ++s)
            for (std::size_t i = 0; i < d; ++i) rows.push_back(flatten(translate(mu[i], g, s)));
        orbit_span = Subspace::span(flat, rows);
    }
    const std::size_t bdim = orbit_span.dim();

    // Products of translated images against images decide everything at once:
    // they certify that the embedded copy absorbs its translates, and that
    // pulling the product back through the embedding recovers the family.
    // The general two-translate product follows by translating these.
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t i = 0; i < d; ++i) {
            GMultiplier shifted = translate(mu[i], g, u);
            for (std::size_t j = 0; j < d; ++j)
                if (shifted * mu[j] != embed(fam.at(u, i, j)))
                    throw GlobalizeError("closure",
                                         detail::idx_witness({{"u", u}, {"i", i}, {"j", j}}));
        }
    clauses.push_back("closure");
    clauses.push_back("family-recovery");

    std::vector<GMultiplier> orbit;
    orbit.reserve(bdim);
    for (std::size_t q = 0; q < bdim; ++q) orbit.push_back(unflatten(n, d, orbit_span.basis_row(q)));

    for (std::size_t q = 0; q < bdim; ++q)
        for (std::size_t i = 0; i < d; ++i) {
            if (!mu_span.contains(flatten(orbit[q] * mu[i])) ||
                !mu_span.contains(flatten(mu[i] * orbit[q])))
                throw GlobalizeError("mu-ideal", detail::idx_witness({{"q", q}, {"i", i}}));
        }
    clauses.push_back("mu-ideal");

    for (std::size_t t = 0; t < n; ++t) {
        std::vector<Vec> rows;
        rows.reserve(d);
        for (std::size_t i = 0; i < d; ++i) rows.push_back(flatten(translate(mu[i], g, t)));
        Subspace met = intersect(Subspace::span(flat, rows), mu_span);
        std::vector<Vec> image;
        const Subspace& dom = pa.domains[t];
        image.reserve(dom.dim());
        for (std::size_t k = 0; k < dom.dim(); ++k)
            image.push_back(flatten(embed(dom.basis_row(k))));
        if (!(met == Subspace::span(flat, image)))
            throw GlobalizeError("domain-intersection", detail::idx_witness({{"t", t}}));
    }
    clauses.push_back("domain-intersection");

    std::vector<GaussianRational> sc(bdim * bdim * bdim);
    for (std::size_t q = 0; q < bdim; ++q)
        for (std::size_t p = 0; p < bdim; ++p) {
            auto c = orbit_span.coords(flatten(orbit[q] * orbit[p]));
            if (!c) throw GlobalizeError("b-closed", detail::idx_witness({{"q", q}, {"p", p}}));
            for (std::size_t k = 0; k < bdim; ++k) sc[(q * bdim + p) * bdim + k] = (*c)[k];
        }
    DenseMatrix inv(bdim, bdim);
    for (std::size_t q = 0; q < bdim; ++q) {
        auto c = orbit_span.coords(flatten(adjoint(orbit[q], alg)));
        if (!c) throw GlobalizeError("b-star-closed", detail::idx_witness({{"q", q}}));
        for (std::size_t k = 0; k < bdim; ++k) inv(q, k) = (*c)[k];
    }
    StarAlgebra b_algebra(bdim, std::move(sc), std::move(inv));
    clauses.push_back("b-closed");
    clauses.push_back("b-star-closed");

    std::vector<DenseMatrix> maps;
    maps.reserve(n);
    for (std::size_t t = 0; t < n; ++t) {
        DenseMatrix bt(bdim, bdim);
        for (std::size_t q = 0; q < bdim; ++q) {
            auto c = orbit_span.coords(flatten(translate(orbit[q], g, t)));
            if (!c) throw GlobalizeError("b-invariant", detail::idx_witness({{"t", t}, {"q", q}}));
            for (std::size_t k = 0; k < bdim; ++k) bt(k, q) = (*c)[k];
        }
        maps.push_back(std::move(bt));
    }
    GlobalAction beta = GlobalAction::from_maps(g, b_algebra, std::move(maps));
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t)
            if (beta.map(s) * beta.map(t) != beta.map(g.op(s, t)))
                throw GlobalizeError("ad-group-law", detail::idx_witness({{"s", s}, {"t", t}}));
    clauses.push_back("ad-group-law");

    {
        Subspace ann = annihilator(b_algebra, Subspace::full(bdim));
        if (ann.dim() != 0)
            throw GlobalizeError("ann-trivial", "nonzero annihilator containing " +
                                                   detail::vec_str(ann.basis_row(0)));
    }
    clauses.push_back("ann-trivial");

    DenseMatrix mu_matrix(bdim, d);
    for (std::size_t i = 0; i < d; ++i) {
        Vec c = orbit_span.coords(flatten(mu[i])).value();
        for (std::size_t k = 0; k < bdim; ++k) mu_matrix(k, i) = c[k];
    }

    return EnvelopePair{pa,
                        fam,
                        std::move(mu),
                        std::move(mu_span),
                        std::move(orbit_span),
                        std::move(b_algebra),
                        std::move(beta),
                        std::move(mu_matrix),
                        std::move(clauses)};
}

/// The copy of the base action sitting inside a constructed envelope: the
/// translation action cut down to the embedded ideal, with the coordinate
/// changes induced by the embedding. Both directions are morphisms; tests
/// assert that, this only assembles the data.
struct RecoveredBase {
    RestrictedAction restricted;
    DenseMatrix to_view;    // base coordinates -> ideal view coordinates
    DenseMatrix from_view;  // the inverse change
};

inline RecoveredBase recovered_base(const EnvelopePair& env) {
    const std::size_t d = env.base.algebra.dim();
    const std::size_t bdim = env.envelope_dim();
    std::vector<Vec> rows;
    rows.reserve(d);
    for (std::size_t i = 0; i < d; ++i) {
        Vec col(bdim);
        for (std::size_t k = 0; k < bdim; ++k) col[k] = env.mu_matrix(k, i);
        rows.push_back(std::move(col));
    }
    RestrictedAction ra = restrict_action(env.beta, Subspace::span(bdim, rows));
    DenseMatrix to_view(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        Vec img = ra.view.project(rows[i]);
        for (std::size_t r = 0; r < d; ++r) to_view(r, i) = img[r];
    }
    auto back = inverse(to_view);
    if (!back) throw std::logic_error("embedded copy lost rank in the view");
    return RecoveredBase{std::move(ra), std::move(to_view), std::move(*back)};
}

/// An enveloping pair presented directly: a global action on some algebra
/// together with the embedding of the base algebra into it, as a matrix of
/// column images. Used to feed hand-built envelopes into the classification.
struct EnvelopeCandidate {
    GlobalAction global;
    DenseMatrix embedding;
};

/// Whether the candidate really is an enveloping pair for the action, by the
/// definition: injective equivariant *-embedding whose translates span, whose
/// image is an ideal meeting each translate in the image of that domain. The
/// annihilator rule restricts classification, not existence.
inline Report check_envelope_candidate(const PartialAction& pa, const EnvelopeCandidate& cand) {
    Report rep;
    const StarAlgebra& balg = cand.global.action.algebra;
    const std::size_t d = pa.algebra.dim();
    const std::size_t bdim = balg.dim();
    const std::size_t n = pa.group.order;
    if (cand.embedding.rows() != bdim || cand.embedding.cols() != d)
        throw std::invalid_argument("embedding shape mismatch");
    if (pa.group.table != cand.global.action.group.table)
        throw std::invalid_argument("the actions live over different groups");

    std::vector<Vec> image;
    image.reserve(d);
    for (std::size_t i = 0; i < d; ++i) {
        Vec col(bdim);
        for (std::size_t k = 0; k < bdim; ++k) col[k] = cand.embedding(k, i);
        image.push_back(std::move(col));
    }
    Subspace mu_span = Subspace::span(bdim, image);
    if (mu_span.dim() != d) rep.add("pair-embedding-injective", "rank " + std::to_string(mu_span.dim()));

    rep.merge(verify_morphism(cand.embedding, pa, cand.global.action));

    {
        std::vector<Vec> orbit;
        orbit.reserve(n * d);
        for (std::size_t s = 0; s < n; ++s)
            for (std::size_t i = 0; i < d; ++i) orbit.push_back(cand.global.map(s).apply(image[i]));
        if (Subspace::span(bdim, orbit).dim() != bdim)
            rep.add("pair-orbit-spans", "the translates of the image do not span");
    }

    for (std::size_t q = 0; q < bdim && !rep.has("pair-ideal"); ++q)
        for (std::size_t i = 0; i < d; ++i)
            if (!mu_span.contains(balg.mul(image[i], balg.basis(q))) ||
                !mu_span.contains(balg.mul(balg.basis(q), image[i]))) {
                rep.add("pair-ideal", detail::idx_witness({{"q", q}, {"i", i}}));
                break;
            }

    for (std::size_t t = 0; t < n; ++t) {
        Subspace met = intersect(mu_span, apply_to_subspace(cand.global.map(t), mu_span));
        const Subspace& dom = pa.domains[t];
        std::vector<Vec> rows;
        rows.reserve(dom.dim());
        for (std::size_t k = 0; k < dom.dim(); ++k)
            rows.push_back(cand.embedding.apply(dom.basis_row(k)));
        if (!(met == Subspace::span(bdim, rows)))
            rep.add_once("pair-domain", detail::idx_witness({{"t", t}}));
    }

    if (annihilator(balg, Subspace::full(bdim)).dim() != 0)
        rep.add("pair-annihilator", "enveloping algebra has a nonzero annihilator");

    return rep;
}

/// The induced inclusion into the multipliers of A^G, computed from a family
/// alone. This is the classifying object: two enveloping pairs with trivial
/// annihilator agree exactly when their inclusions agree entrywise.
inline std::vector<GMultiplier> multiplier_inclusion(const PartialAction& pa,
                                                     const EnvelopingFamily& fam) {
    std::vector<GMultiplier> out;
    out.reserve(pa.algebra.dim());
    for (std::size_t i = 0; i < pa.algebra.dim(); ++i)
        out.push_back(mu_multiplier(pa, fam, pa.algebra.basis(i)));
    return out;
}

inline std::vector<GMultiplier> multiplier_inclusion(const EnvelopePair& env) { return env.mu; }

/// The same inclusion computed from a candidate pair instead: slot r of the
/// image of a acts by pulling products with the translate of a back through
/// the embedding. Throws when a product escapes the embedded copy, which
/// means the candidate was not enveloping.
inline std::vector<GMultiplier> multiplier_inclusion(const PartialAction& pa,
                                                     const EnvelopeCandidate& cand) {
    const StarAlgebra& balg = cand.global.action.algebra;
    const Group& g = pa.group;
    const std::size_t d = pa.algebra.dim();
    const std::size_t n = g.order;
    auto pull_back = [&](const Vec& v) {
        LinearSolution ls = solve(cand.embedding, v);
        if (!ls.particular) throw std::invalid_argument("product escapes the embedded copy");
        return *ls.particular;
    };
    std::vector<Vec> image;
    image.reserve(d);
    for (std::size_t i = 0; i < d; ++i) image.push_back(cand.embedding.apply(pa.algebra.basis(i)));

    std::vector<GMultiplier> out;
    out.reserve(d);
    for (std::size_t i = 0; i < d; ++i) {
        GMultiplier m(n, d);
        for (std::size_t r = 0; r < n; ++r) {
            Vec shifted = cand.global.map(g.inv(r)).apply(image[i]);
            for (std::size_t j = 0; j < d; ++j) {
                Vec lcol = pull_back(balg.mul(shifted, image[j]));
                Vec rcol = pull_back(balg.mul(image[j], shifted));
                for (std::size_t k = 0; k < d; ++k) {
                    m.left[r](k, j) = lcol[k];
                    m.right[r](k, j) = rcol[k];
                }
            }
        }
        out.push_back(std::move(m));
    }
    return out;
}

/// The inclusion is pinned down by the action alone wherever the domains have
/// trivial annihilator: each value of the left action, multiplied by or under
/// any member of the domain at that slot, is a plain expression in the action.
/// This holds for every inclusion of an actual enveloping pair.
inline Report check_inclusion_determined(const PartialAction& pa,
                                         const std::vector<GMultiplier>& mus) {
    Report rep;
    const StarAlgebra& alg = pa.algebra;
    const Group& g = pa.group;
    const std::size_t d = alg.dim();
    if (mus.size() != d) throw std::invalid_argument("one multiplier per basis vector expected");
    for (std::size_t r = 0; r < g.order; ++r) {
        const std::size_t ri = g.inv(r);
        const Subspace& dom = pa.domains[ri];
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                Vec val = mus[i].left[r].apply(alg.basis(j));
                for (std::size_t k = 0; k < dom.dim(); ++k) {
                    Vec dk = dom.basis_row(k);
                    Vec lhs1 = alg.mul(val, dk);
                    Vec rhs1 = pa.apply(ri, alg.mul(alg.basis(i),
                                                    pa.apply(r, alg.mul(alg.basis(j), dk))));
                    if (lhs1 != rhs1)
                        rep.add_once("inclusion-determined",
                                     "right " + detail::idx_witness(
                                                    {{"r", r}, {"i", i}, {"j", j}, {"k", k}}));
                    Vec lhs2 = alg.mul(dk, val);
                    Vec rhs2 = alg.mul(pa.apply(ri, alg.mul(pa.apply(r, dk), alg.basis(j))),
                                       alg.basis(i));
                    if (lhs2 != rhs2)
                        rep.add_once("inclusion-determined",
                                     "left " + detail::idx_witness(
                                                   {{"r", r}, {"i", i}, {"j", j}, {"k", k}}));
                }
            }
    }
    return rep;
}

struct InclusionComparison {
    bool equal = true;
    std::string witness;  // first differing entry when not equal
};

/// Entrywise comparison of two inclusions over the same base. By the
/// classification, equality here is isomorphism of the underlying pairs.
inline InclusionComparison compare_inclusions(const std::vector<GMultiplier>& x,
                                              const std::vector<GMultiplier>& y) {
    if (x.size() != y.size()) throw std::invalid_argument("inclusions over different bases");
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].slots() != y[i].slots() || x[i].dim() != y[i].dim())
            throw std::invalid_argument("inclusions over different bases");
        for (std::size_t r = 0; r < x[i].slots(); ++r)
            for (std::size_t p = 0; p < x[i].dim(); ++p)
                for (std::size_t q = 0; q < x[i].dim(); ++q) {
                    if (x[i].left[r](p, q) != y[i].left[r](p, q))
                        return {false, "left " + detail::idx_witness({{"i", i},
                                                                     {"r", r},
                                                                     {"row", p},
                                                                     {"col", q}})};
                    if (x[i].right[r](p, q) != y[i].right[r](p, q))
                        return {false, "right " + detail::idx_witness({{"i", i},
                                                                      {"r", r},
                                                                      {"row", p},
                                                                      {"col", q}})};
                }
    }
    return {true, ""};
}

/// Outcome of the existence question. Yes carries the certified envelope; No
/// carries the reasons, ending with a justification entry that states the
/// strength of the conclusion.
struct Decision {
    std::optional<EnvelopePair> envelope;
    Report reasons;

    bool yes() const { return envelope.has_value(); }
};

/// Decides whether an enveloping action exists by building the only possible
/// family and globalizing it. A missing or ambiguous family witness refutes
/// existence outright when the algebra has a unit; otherwise the refusal is
/// reported as such, since non-unital algebras may fall outside the reach of
/// this construction.
inline Decision decide(const PartialAction& pa) {
    FamilyOutcome out = canonical_family(pa);
    if (const auto* obs = std::get_if<FamilyObstruction>(&out)) {
        Decision no;
        if (!obs->domain_unital)
            no.reasons.add("domain-without-unit", detail::idx_witness({{"t", obs->t}}));
        no.reasons.add(obs->ambiguous ? "family-witness-ambiguous" : "family-witness-missing",
                       detail::idx_witness(
                           {{"t", obs->t}, {"a", obs->a_index}, {"b", obs->b_index}}));
        if (pa.algebra.unit() && !obs->domain_unital)
            no.reasons.add("decision",
                           "the algebra has a unit while the domain at t=" +
                               std::to_string(obs->t) +
                               " has none, so no enveloping action exists");
        else
            no.reasons.add("decision", "no enveloping family found by this procedure");
        return no;
    }
    try {
        Decision yes;
        yes.envelope = globalize(pa, std::get<EnvelopingFamily>(out));
        return yes;
    } catch (const GlobalizeError& e) {
        Decision no;
        no.reasons.add("globalize-" + e.clause(), e.witness());
        no.reasons.add("decision", "the canonical family exists but its globalization failed");
        return no;
    }
}

/// The four identities the domain units satisfy under any partial action that
/// has them: centrality, that products of units are units of intersections,
/// that their inclusion-exclusion sum is the unit of the sum, and that the
/// maps move units to products of units. Throws when some unit is missing.
inline Report unital_identities_check(const PartialAction& pa) {
    Report rep;
    const StarAlgebra& alg = pa.algebra;
    const Group& g = pa.group;
    const std::size_t n = g.order;
    const std::size_t d = alg.dim();
    std::vector<Vec> unit(n);
    for (std::size_t t = 0; t < n; ++t) {
        auto u = unit_of(alg, pa.domains[t]);
        if (!u)
            throw std::invalid_argument("domain at t=" + std::to_string(t) + " has no unit");
        unit[t] = *u;
    }

    auto is_unit_of = [&](const Vec& u, const Subspace& space) {
        if (!space.contains(u)) return false;
        for (std::size_t k = 0; k < space.dim(); ++k) {
            Vec v = space.basis_row(k);
            if (alg.mul(u, v) != v || alg.mul(v, u) != v) return false;
        }
        return true;
    };

    for (std::size_t t = 0; t < n; ++t)
        for (std::size_t k = 0; k < d; ++k)
            if (alg.mul(unit[t], alg.basis(k)) != alg.mul(alg.basis(k), unit[t])) {
                rep.add_once("unit-central", detail::idx_witness({{"t", t}, {"k", k}}));
                break;
            }

    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t) {
            Vec meet = alg.mul(unit[s], unit[t]);
            if (!is_unit_of(meet, intersect(pa.domains[s], pa.domains[t])))
                rep.add_once("unit-intersection", detail::idx_witness({{"s", s}, {"t", t}}));
            Vec join = vec_sub(vec_add(unit[t], unit[s]), meet);
            if (!is_unit_of(join, sum(pa.domains[t], pa.domains[s])))
                rep.add_once("unit-sum", detail::idx_witness({{"s", s}, {"t", t}}));
            if (pa.apply(t, alg.mul(unit[g.inv(t)], unit[s])) !=
                alg.mul(unit[t], unit[g.op(t, s)]))
                rep.add_once("unit-translate", detail::idx_witness({{"s", s}, {"t", t}}));
        }

    return rep;
}

}  // namespace pact
