#pragma once

#include "pact/builders.hpp"
#include "pact/group.hpp"
#include "pact/partial_action.hpp"
#include "pact/star_algebra.hpp"

// Small named objects shared across suites.
namespace testsupport {

using pact::DenseMatrix;
using pact::GaussianRational;
using pact::GlobalAction;
using pact::PartialAction;
using pact::StarAlgebra;
using pact::Subspace;
using pact::Vec;

// C[x]/(x^2) with basis {1, x} and x* = x: the smallest algebra with a
// nonzero nilpotent, and the standard source of counterexamples here.
inline StarAlgebra dual_numbers() {
    std::vector<GaussianRational> sc(8);
    auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> GaussianRational& {
        return sc[(i * 2 + j) * 2 + k];
    };
    at(0, 0, 0) = GaussianRational(1);
    at(0, 1, 1) = GaussianRational(1);
    at(1, 0, 1) = GaussianRational(1);
    return StarAlgebra(2, std::move(sc), DenseMatrix::identity(2));
}

inline DenseMatrix column(const Vec& v) {
    DenseMatrix m(v.size(), 1);
    for (std::size_t r = 0; r < v.size(); ++r) m(r, 0) = v[r];
    return m;
}

inline DenseMatrix columns(const std::vector<Vec>& vs) {
    DenseMatrix m(vs.empty() ? 0 : vs.front().size(), vs.size());
    for (std::size_t c = 0; c < vs.size(); ++c)
        for (std::size_t r = 0; r < m.rows(); ++r) m(r, c) = vs[c][r];
    return m;
}

// Z/2 on C+C with the nontrivial partial domain C+0 and the identity as
// partial map. The smallest action that is not global yet has an envelope.
inline PartialAction half_defined_flip() {
    StarAlgebra alg = pact::diagonal_algebra(2);
    pact::Group g = pact::cyclic_group(2);
    Subspace d1 = Subspace::span(2, {alg.basis(0)});
    std::vector<Subspace> domains = {Subspace::full(2), d1};
    std::vector<DenseMatrix> maps = {DenseMatrix::identity(2), column(alg.basis(0))};
    return PartialAction{std::move(g), std::move(alg), std::move(domains), std::move(maps)};
}

// Z/2 on C[x]/(x^2) with domain span{x} and x -> -x. A valid partial action
// whose domain has no unit, so no envelope exists.
inline PartialAction nilpotent_negation() {
    StarAlgebra alg = dual_numbers();
    pact::Group g = pact::cyclic_group(2);
    Vec x = alg.basis(1);
    std::vector<Subspace> domains = {Subspace::full(2), Subspace::span(2, {x})};
    std::vector<DenseMatrix> maps = {DenseMatrix::identity(2),
                                     column(pact::vec_scale(GaussianRational(-1), x))};
    return PartialAction{std::move(g), std::move(alg), std::move(domains), std::move(maps)};
}

// Z/2 on M2 + C with domain M2 + 0 and conjugation by diag(1,-1): the matrix
// units map to themselves with signs +,-,-,+.
inline PartialAction block_sign_flip() {
    StarAlgebra alg = pact::multi_matrix_algebra({2, 1});
    pact::Group g = pact::cyclic_group(2);
    Subspace d1 = Subspace::span(5, {alg.basis(0), alg.basis(1), alg.basis(2), alg.basis(3)});
    std::vector<Vec> cols = {alg.basis(0), pact::vec_scale(GaussianRational(-1), alg.basis(1)),
                             pact::vec_scale(GaussianRational(-1), alg.basis(2)), alg.basis(3)};
    std::vector<Subspace> domains = {Subspace::full(5), d1};
    std::vector<DenseMatrix> maps = {DenseMatrix::identity(5), columns(cols)};
    return PartialAction{std::move(g), std::move(alg), std::move(domains), std::move(maps)};
}

// Z/2 globally swapping the two coordinates of C+C.
inline GlobalAction coordinate_swap() {
    StarAlgebra alg = pact::diagonal_algebra(2);
    DenseMatrix swap(2, 2);
    swap(0, 1) = GaussianRational(1);
    swap(1, 0) = GaussianRational(1);
    return GlobalAction::from_maps(pact::cyclic_group(2), std::move(alg),
                                   {DenseMatrix::identity(2), std::move(swap)});
}

// Z/2 on C^3 swapping the last two coordinates; restricting it to the ideal
// spanned by the first two recovers half_defined_flip.
inline GlobalAction swap_last_two() {
    StarAlgebra alg = pact::diagonal_algebra(3);
    DenseMatrix m = DenseMatrix::identity(3);
    m(1, 1) = GaussianRational();
    m(2, 2) = GaussianRational();
    m(1, 2) = GaussianRational(1);
    m(2, 1) = GaussianRational(1);
    return GlobalAction::from_maps(pact::cyclic_group(2), std::move(alg),
                                   {DenseMatrix::identity(3), std::move(m)});
}

}  // namespace testsupport
