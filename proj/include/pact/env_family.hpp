#pragma once

#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "partial_action.hpp"

namespace pact {

/// Family of bilinear maps F_t : A x A -> A, one per group element, stored
/// through their values on basis pairs. The intended meaning is
/// F_t(a,b) = "the part of (a shifted into the t component) times b", and
/// check_family decides whether a candidate really has that meaning.
struct EnvelopingFamily {
    // tensors[t][i][j] is F_t(e_i, e_j) in ambient coordinates.
    std::vector<std::vector<std::vector<Vec>>> tensors;

    std::size_t slots() const { return tensors.size(); }
    std::size_t dim() const { return tensors.empty() ? 0 : tensors[0].size(); }

    const Vec& at(std::size_t t, std::size_t i, std::size_t j) const {
        return tensors.at(t).at(i).at(j);
    }

    /// F_t(v, e_j) by linearity in the first slot.
    Vec eval_left(std::size_t t, const Vec& v, std::size_t j) const {
        Vec out(dim());
        for (std::size_t l = 0; l < dim(); ++l)
            if (!v[l].is_zero()) out = vec_add(out, vec_scale(v[l], at(t, l, j)));
        return out;
    }

    /// F_t(e_i, v) by linearity in the second slot.
    Vec eval_right(std::size_t t, std::size_t i, const Vec& v) const {
        Vec out(dim());
        for (std::size_t l = 0; l < dim(); ++l)
            if (!v[l].is_zero()) out = vec_add(out, vec_scale(v[l], at(t, i, l)));
        return out;
    }

    Vec eval(std::size_t t, const Vec& a, const Vec& b) const {
        Vec out(dim());
        for (std::size_t i = 0; i < dim(); ++i)
            if (!a[i].is_zero()) out = vec_add(out, vec_scale(a[i], eval_right(t, i, b)));
        return out;
    }

    friend bool operator==(const EnvelopingFamily& a, const EnvelopingFamily& b) {
        return a.tensors == b.tensors;
    }
    friend bool operator!=(const EnvelopingFamily& a, const EnvelopingFamily& b) {
        return !(a == b);
    }
};

/// Solution of the two-sided division problem at t for the pair (a,b): the
/// x in D[t] with d x = map_t(map_inv(t)(d) a) b and x d = map_t(a map_inv(t)(b d))
/// for every d in D[t]. Existence for all pairs is exactly what separates
/// actions with an envelope from the rest.
struct FamilyWitness {
    std::optional<Vec> value;  // canonical solution when one exists
    bool unique = false;       // no other solution in D[t]
};

/// Requires a validated partial action; the linear system is solved exactly
/// in the coordinates of D[t].
inline FamilyWitness family_witness(const PartialAction& pa, std::size_t t, const Vec& a,
                                    const Vec& b) {
    const StarAlgebra& alg = pa.algebra;
    const std::size_t d = alg.dim();
    const Subspace& target = pa.domains.at(t);
    const std::size_t m = target.dim();
    const std::size_t tinv = pa.group.inv(t);
    DenseMatrix lift = target.lift_matrix();
    DenseMatrix sys(2 * m * d, m);
    Vec rhs(2 * m * d);
    for (std::size_t k = 0; k < m; ++k) {
        Vec dk = target.basis_row(k);
        DenseMatrix lm = alg.left_mult(dk) * lift;   // c -> d_k x
        DenseMatrix rm = alg.right_mult(dk) * lift;  // c -> x d_k
        Vec r1 = alg.mul(pa.apply(t, alg.mul(pa.apply(tinv, dk), a)), b);
        Vec r2 = pa.apply(t, alg.mul(a, pa.apply(tinv, alg.mul(b, dk))));
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t c = 0; c < m; ++c) {
                sys((2 * k) * d + i, c) = lm(i, c);
                sys((2 * k + 1) * d + i, c) = rm(i, c);
            }
            rhs[(2 * k) * d + i] = r1[i];
            rhs[(2 * k + 1) * d + i] = r2[i];
        }
    }
    LinearSolution ls = solve(sys, rhs);
    FamilyWitness out;
    out.unique = ls.kernel.rows() == 0;
    if (ls.particular) out.value = target.lift(*ls.particular);
    return out;
}

/// Why no canonical family could be produced at slot t: the source domain
/// D[inv(t)] has no unit and the witness system fails for the basis pair
/// (a_index, b_index), either with no solution or with several.
struct FamilyObstruction {
    std::size_t t = 0;
    std::size_t a_index = 0;
    std::size_t b_index = 0;
    bool domain_unital = false;
    bool ambiguous = false;  // false: no solution, true: several solutions

    std::string describe() const {
        std::ostringstream os;
        os << (ambiguous ? "ambiguous" : "no") << " family witness at (t=" << t
           << ",a=" << a_index << ",b=" << b_index << ")";
        if (!domain_unital) os << "; domain at inv(t) has no unit";
        return os.str();
    }
};

using FamilyOutcome = std::variant<EnvelopingFamily, FamilyObstruction>;

/// The only family a validated action can possibly have: the product at the
/// identity and, away from it, either the unital formula
/// F_t(a,b) = map_t(u a) b with u the unit of D[inv(t)], or the witness
/// solution when that domain has no unit. Fails only when some witness is
/// missing or ambiguous.
inline FamilyOutcome canonical_family(const PartialAction& pa) {
    const StarAlgebra& alg = pa.algebra;
    const std::size_t n = pa.group.order;
    const std::size_t d = alg.dim();
    EnvelopingFamily fam;
    fam.tensors.assign(n, std::vector<std::vector<Vec>>(d, std::vector<Vec>(d)));
    for (std::size_t t = 0; t < n; ++t) {
        if (t == pa.group.identity) {
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j)
                    fam.tensors[t][i][j] = alg.mul(alg.basis(i), alg.basis(j));
            continue;
        }
        const std::size_t tinv = pa.group.inv(t);
        std::optional<Vec> u = unit_of(alg, pa.domains[tinv]);
        if (u) {
            for (std::size_t i = 0; i < d; ++i) {
                Vec shifted = pa.apply(t, alg.mul(*u, alg.basis(i)));
                for (std::size_t j = 0; j < d; ++j)
                    fam.tensors[t][i][j] = alg.mul(shifted, alg.basis(j));
            }
            continue;
        }
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                FamilyWitness w = family_witness(pa, t, alg.basis(i), alg.basis(j));
                if (!w.value || !w.unique)
                    return FamilyObstruction{t, i, j, false, w.value.has_value()};
                fam.tensors[t][i][j] = *w.value;
            }
    }
    return fam;
}

enum class FamilyMode { algebraic, star };

namespace detail {

inline std::string vec_str(const Vec& v) {
    std::ostringstream os;
    os << "[";
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k) os << ", ";
        os << v[k].str();
    }
    os << "]";
    return os.str();
}

}  // namespace detail

/// Decides whether a candidate family is enveloping for the action. The
/// algebraic mode checks rules I through VI; the star mode checks the
/// shorter equivalent list I' through III' that folds the involution in.
/// Rule names in the report carry those labels. Instances that cannot be
/// evaluated because a value escaped its domain are skipped; the escape
/// itself is what rule I reports.
inline Report check_family(const PartialAction& pa, const EnvelopingFamily& fam,
                           FamilyMode mode) {
    Report rep;
    const StarAlgebra& alg = pa.algebra;
    const Group& g = pa.group;
    const std::size_t n = g.order;
    const std::size_t d = alg.dim();
    if (fam.slots() != n || fam.dim() != d)
        throw std::invalid_argument("family shape mismatch");
    const bool star = mode == FamilyMode::star;
    const std::string rI = star ? "family-I'" : "family-I";

    for (std::size_t t = 0; t < n; ++t)
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                if (!pa.domains[t].contains(fam.at(t, i, j)))
                    rep.add_once(rI, "range " + detail::idx_witness({{"t", t}, {"i", i}, {"j", j}}));
                if (t == g.identity && fam.at(t, i, j) != alg.mul(alg.basis(i), alg.basis(j)))
                    rep.add_once(rI, "identity slot " + detail::idx_witness({{"i", i}, {"j", j}}));
            }

    // Shared subexpressions guarded by domain membership; nullopt means the
    // range rule already failed and the instance is skipped.
    auto shift = [&](std::size_t t, const Vec& v) { return pa.try_apply(t, v); };

    if (!star) {
        // II: module identities tying F_t to products on either side.
        for (std::size_t t = 0; t < n; ++t) {
            const std::size_t ti = g.inv(t);
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j)
                    for (std::size_t k = 0; k < d; ++k) {
                        if (fam.eval_right(t, i, alg.mul(alg.basis(j), alg.basis(k))) !=
                            alg.mul(fam.at(t, i, j), alg.basis(k)))
                            rep.add_once("family-II",
                                         "eq1 " + detail::idx_witness(
                                                      {{"t", t}, {"i", i}, {"j", j}, {"k", k}}));
                        auto l2 = shift(t, fam.eval_left(ti, alg.mul(alg.basis(i), alg.basis(j)), k));
                        auto r2 = shift(t, fam.at(ti, j, k));
                        if (l2 && r2 && *l2 != alg.mul(alg.basis(i), *r2))
                            rep.add_once("family-II",
                                         "eq2 " + detail::idx_witness(
                                                      {{"t", t}, {"i", i}, {"j", j}, {"k", k}}));
                        auto r3 = shift(t, fam.at(ti, i, j));
                        if (r3 && alg.mul(alg.basis(i), fam.at(t, j, k)) !=
                                      alg.mul(*r3, alg.basis(k)))
                            rep.add_once("family-II",
                                         "eq3 " + detail::idx_witness(
                                                      {{"t", t}, {"i", i}, {"j", j}, {"k", k}}));
                    }
        }
        // III: composition identities across two slots.
        for (std::size_t s = 0; s < n; ++s)
            for (std::size_t t = 0; t < n; ++t)
                for (std::size_t i = 0; i < d; ++i)
                    for (std::size_t j = 0; j < d; ++j)
                        for (std::size_t k = 0; k < d; ++k) {
                            if (fam.eval_left(t, fam.at(s, i, j), k) !=
                                fam.eval_right(g.op(t, s), i, fam.at(t, j, k)))
                                rep.add_once(
                                    "family-III",
                                    "eq1 " + detail::idx_witness(
                                                 {{"s", s}, {"t", t}, {"i", i}, {"j", j}, {"k", k}}));
                            auto back = shift(g.inv(s), fam.at(s, i, j));
                            if (back && fam.eval_left(t, *back, k) !=
                                            fam.eval_right(t, i, fam.at(g.op(t, g.inv(s)), j, k)))
                                rep.add_once(
                                    "family-III",
                                    "eq2 " + detail::idx_witness(
                                                 {{"s", s}, {"t", t}, {"i", i}, {"j", j}, {"k", k}}));
                        }
    } else {
        // II': star, module, composition and balance identities in one rule.
        std::vector<Vec> starred(d);
        for (std::size_t i = 0; i < d; ++i) starred[i] = alg.star(alg.basis(i));
        for (std::size_t t = 0; t < n; ++t) {
            const std::size_t ti = g.inv(t);
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j) {
                    auto st = shift(t, fam.eval(ti, starred[j], starred[i]));
                    if (st && alg.star(fam.at(t, i, j)) != *st)
                        rep.add_once("family-II'",
                                     "eq1 " + detail::idx_witness({{"t", t}, {"i", i}, {"j", j}}));
                    for (std::size_t k = 0; k < d; ++k) {
                        if (fam.eval_right(t, i, alg.mul(alg.basis(j), alg.basis(k))) !=
                            alg.mul(fam.at(t, i, j), alg.basis(k)))
                            rep.add_once("family-II'",
                                         "eq2 " + detail::idx_witness(
                                                      {{"t", t}, {"i", i}, {"j", j}, {"k", k}}));
                        auto r4 = shift(t, fam.at(ti, i, j));
                        if (r4 && alg.mul(alg.basis(i), fam.at(t, j, k)) !=
                                      alg.mul(*r4, alg.basis(k)))
                            rep.add_once("family-II'",
                                         "eq4 " + detail::idx_witness(
                                                      {{"t", t}, {"i", i}, {"j", j}, {"k", k}}));
                    }
                }
        }
        for (std::size_t s = 0; s < n && !rep.has("family-II'"); ++s)
            for (std::size_t t = 0; t < n; ++t)
                for (std::size_t i = 0; i < d; ++i)
                    for (std::size_t j = 0; j < d; ++j)
                        for (std::size_t k = 0; k < d; ++k)
                            if (fam.eval_left(t, fam.at(s, i, j), k) !=
                                fam.eval_right(g.op(t, s), i, fam.at(t, j, k)))
                                rep.add_once(
                                    "family-II'",
                                    "eq3 " + detail::idx_witness(
                                                 {{"s", s}, {"t", t}, {"i", i}, {"j", j}, {"k", k}}));
    }

    if (!star) {
        // IV: joint injectivity of all the maps a -> F_t(a,b), a -> F_t(b,a).
        DenseMatrix sys(2 * n * d * d, d);
        std::size_t row = 0;
        for (std::size_t t = 0; t < n; ++t)
            for (std::size_t j = 0; j < d; ++j) {
                for (std::size_t r = 0; r < d; ++r, ++row)
                    for (std::size_t i = 0; i < d; ++i) sys(row, i) = fam.at(t, i, j)[r];
                for (std::size_t r = 0; r < d; ++r, ++row)
                    for (std::size_t i = 0; i < d; ++i) sys(row, i) = fam.at(t, j, i)[r];
            }
        DenseMatrix ker = kernel_basis(sys);
        if (ker.rows() != 0)
            rep.add("family-IV", "nonzero joint kernel containing " + detail::vec_str(ker.row(0)));
    }

    // V in the algebraic list, III' in the star list: compatibility with the
    // maps on the first slot (and, algebraically, its mirrored form).
    const std::string rV = star ? "family-III'" : "family-V";
    for (std::size_t t = 0; t < n; ++t) {
        const std::size_t ti = g.inv(t);
        const Subspace& src = pa.domains[ti];
        for (std::size_t k = 0; k < src.dim(); ++k) {
            Vec a = src.basis_row(k);
            Vec ta = pa.apply(t, a);
            for (std::size_t s = 0; s < n; ++s)
                for (std::size_t j = 0; j < d; ++j) {
                    if (fam.eval_left(g.op(s, t), a, j) != fam.eval_left(s, ta, j))
                        rep.add_once(rV, "eq1 " + detail::idx_witness(
                                                      {{"t", t}, {"s", s}, {"k", k}, {"j", j}}));
                    if (!star) {
                        const std::size_t st = g.op(s, t);
                        auto lhs = shift(st, fam.eval_right(g.inv(st), j, a));
                        auto rhs = shift(s, fam.eval_right(g.inv(s), j, ta));
                        if (lhs && rhs && *lhs != *rhs)
                            rep.add_once(rV, "eq2 " + detail::idx_witness(
                                                          {{"t", t}, {"s", s}, {"k", k}, {"j", j}}));
                    }
                }
        }
    }

    if (!star) {
        // VI: anything that behaves like a member of D[t] against the whole
        // family already lies in D[t]. For each t the behaving pairs (a,b)
        // form the kernel of a linear system; project to a and test.
        for (std::size_t t = 0; t < n; ++t) {
            if (pa.domains[t].is_full()) continue;
            const std::size_t ti = g.inv(t);
            const Subspace& src = pa.domains[ti];
            // alpha_t as an everywhere-defined formula: select coordinates in
            // D[inv(t)] and push through the map; rows below force membership
            // so the formula only ever gets used where it is valid.
            DenseMatrix shift_t = pa.maps[t] * src.coord_matrix();
            DenseMatrix member(d, d);
            {
                DenseMatrix reproj = src.lift_matrix() * src.coord_matrix();
                member = DenseMatrix::identity(d) - reproj;
            }
            std::vector<Vec> rows;
            for (std::size_t s = 0; s < n; ++s) {
                const std::size_t st = g.op(s, t);
                const std::size_t tis = g.op(ti, s);
                for (std::size_t k = 0; k < d; ++k) {
                    std::vector<Vec> shifted(d), escaped(d);
                    for (std::size_t i = 0; i < d; ++i) {
                        shifted[i] = shift_t.apply(fam.at(tis, k, i));
                        escaped[i] = member.apply(fam.at(tis, k, i));
                    }
                    // F_s(a, e_k) = F_{st}(b, e_k)
                    for (std::size_t r = 0; r < d; ++r) {
                        Vec row(2 * d);
                        for (std::size_t i = 0; i < d; ++i) {
                            row[i] = fam.at(s, i, k)[r];
                            row[d + i] = -fam.at(st, i, k)[r];
                        }
                        rows.push_back(std::move(row));
                    }
                    // F_s(e_k, a) = alpha_t(F_{inv(t)s}(e_k, b))
                    for (std::size_t r = 0; r < d; ++r) {
                        Vec row(2 * d);
                        for (std::size_t i = 0; i < d; ++i) {
                            row[i] = fam.at(s, k, i)[r];
                            row[d + i] = -shifted[i][r];
                        }
                        rows.push_back(std::move(row));
                    }
                    // F_{inv(t)s}(e_k, b) must lie in D[inv(t)]
                    for (std::size_t r = 0; r < d; ++r) {
                        Vec row(2 * d);
                        for (std::size_t i = 0; i < d; ++i) row[d + i] = escaped[i][r];
                        rows.push_back(std::move(row));
                    }
                }
            }
            DenseMatrix ker = kernel_basis(DenseMatrix::from_rows(rows));
            for (std::size_t r = 0; r < ker.rows(); ++r) {
                Vec pair = ker.row(r);
                Vec a(pair.begin(), pair.begin() + static_cast<std::ptrdiff_t>(d));
                if (!pa.domains[t].contains(a)) {
                    rep.add_once("family-VI",
                                 detail::idx_witness({{"t", t}}) + " with a=" + detail::vec_str(a));
                    break;
                }
            }
        }
    }

    return rep;
}

}  // namespace pact
