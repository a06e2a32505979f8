#include <catch2/catch_amalgamated.hpp>

#include "pact/builders.hpp"
#include "pact/partial_action.hpp"
#include "support/fixtures.hpp"

using namespace pact;
using namespace testsupport;

TEST_CASE("the half defined flip is a partial action") {
    PartialAction pa = half_defined_flip();
    CHECK(check_partial_action(pa).pass());
    CHECK(pa.apply(1, pa.algebra.basis(0)) == pa.algebra.basis(0));
    CHECK_FALSE(pa.try_apply(1, pa.algebra.basis(1)));
    CHECK_THROWS_AS(pa.apply(1, pa.algebra.basis(1)), std::invalid_argument);
}

TEST_CASE("the nilpotent negation is a partial action") {
    PartialAction pa = nilpotent_negation();
    CHECK(check_partial_action(pa).pass());
    Vec x = pa.algebra.basis(1);
    CHECK(pa.apply(1, x) == vec_scale(GaussianRational(-1), x));
}

TEST_CASE("the block sign flip is a partial action") {
    PartialAction pa = block_sign_flip();
    CHECK(check_partial_action(pa).pass());
    // Conjugation by diag(1,-1) fixes E11+E22 and negates E12+E21.
    Vec sum = vec_add(pa.algebra.basis(1), pa.algebra.basis(2));
    CHECK(pa.apply(1, sum) == vec_scale(GaussianRational(-1), sum));
}

TEST_CASE("global actions pass the checker") {
    CHECK(check_partial_action(coordinate_swap().action).pass());
    CHECK(check_partial_action(swap_last_two().action).pass());
    CHECK(check_partial_action(
              trivial_global_action(cyclic_group(3), matrix_algebra(2)).action)
              .pass());
}

TEST_CASE("composition failure is caught with its first witness") {
    // A three cycle as the value at the involution of Z/2: an automorphism,
    // so only the composition rule can fail, at s=t=1 on basis index 0.
    StarAlgebra alg = diagonal_algebra(3);
    DenseMatrix cycle(3, 3);
    cycle(1, 0) = GaussianRational(1);
    cycle(2, 1) = GaussianRational(1);
    cycle(0, 2) = GaussianRational(1);
    PartialAction pa{cyclic_group(2),
                     alg,
                     {Subspace::full(3), Subspace::full(3)},
                     {DenseMatrix::identity(3), cycle}};
    Report rep = check_partial_action(pa);
    CHECK_FALSE(rep.pass());
    REQUIRE(rep.violations().size() == 1);
    CHECK(rep.violations()[0].rule == "composition");
    CHECK(rep.violations()[0].witness == "(s=1,t=1,k=0)");
}

TEST_CASE("non ideal domains are reported") {
    StarAlgebra alg = diagonal_algebra(2);
    Subspace diag = Subspace::span(2, {vec_add(alg.basis(0), alg.basis(1))});
    PartialAction pa{cyclic_group(2),
                     alg,
                     {Subspace::full(2), diag},
                     {DenseMatrix::identity(2), column(vec_add(alg.basis(0), alg.basis(1)))}};
    Report rep = check_partial_action(pa);
    CHECK(rep.has("domain-ideal"));
}

TEST_CASE("non star closed domains are reported") {
    // Zero multiplication makes every subspace an ideal; the star swaps the
    // two basis vectors, so span{e0} fails exactly the star closure rule.
    std::vector<GaussianRational> sc(8);
    DenseMatrix swap(2, 2);
    swap(0, 1) = GaussianRational(1);
    swap(1, 0) = GaussianRational(1);
    StarAlgebra alg(2, std::move(sc), std::move(swap));
    REQUIRE(check_star_algebra(alg).pass());
    PartialAction pa{cyclic_group(2),
                     alg,
                     {Subspace::full(2), Subspace::span(2, {alg.basis(0)})},
                     {DenseMatrix::identity(2), column(alg.basis(0))}};
    Report rep = check_partial_action(pa);
    CHECK_FALSE(rep.pass());
    REQUIRE(rep.violations().size() == 1);
    CHECK(rep.violations()[0].rule == "domain-star-closed");
    CHECK(rep.violations()[0].witness == "(t=1,k=0)");
}

TEST_CASE("compatibility failures are reported") {
    // Domain at 1 is C+0 but the map sends it into 0+C, so the image is not
    // D[1] and the s=identity instance of compatibility fails.
    StarAlgebra alg = diagonal_algebra(2);
    PartialAction pa{cyclic_group(2),
                     alg,
                     {Subspace::full(2), Subspace::span(2, {alg.basis(0)})},
                     {DenseMatrix::identity(2), column(alg.basis(1))}};
    Report rep = check_partial_action(pa);
    CHECK(rep.has("map-into-domain"));
    CHECK(rep.has("compatibility"));
}

TEST_CASE("shape errors throw instead of reporting") {
    PartialAction pa = half_defined_flip();
    pa.maps.pop_back();
    CHECK_THROWS_AS(check_partial_action(pa), std::invalid_argument);

    PartialAction pa2 = half_defined_flip();
    pa2.maps[1] = DenseMatrix::identity(2);  // wrong column count for a 1-dim domain
    CHECK_THROWS_AS(check_partial_action(pa2), std::invalid_argument);
}

TEST_CASE("restricting the three point swap recovers the half defined flip") {
    GlobalAction ga = swap_last_two();
    Subspace ideal = Subspace::span(3, {ga.action.algebra.basis(0), ga.action.algebra.basis(1)});
    RestrictedAction ra = restrict_action(ga, ideal);
    CHECK(check_partial_action(ra.action).pass());

    PartialAction expect = half_defined_flip();
    REQUIRE(ra.action.dim() == expect.dim());
    for (std::size_t t = 0; t < 2; ++t) {
        CHECK(ra.action.domains[t] == expect.domains[t]);
        CHECK(ra.action.maps[t] == expect.maps[t]);
    }
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                CHECK(ra.action.algebra.sc(i, j, k) == expect.algebra.sc(i, j, k));
}

TEST_CASE("restriction to a non invariant subspace still yields a partial action") {
    // Restricting to any star-closed ideal of a global action always gives a
    // valid partial action, including one whose domain at 1 is zero.
    StarAlgebra alg = diagonal_algebra(3);
    DenseMatrix cycle(3, 3);
    cycle(1, 0) = GaussianRational(1);
    cycle(2, 1) = GaussianRational(1);
    cycle(0, 2) = GaussianRational(1);
    DenseMatrix cycle2 = cycle * cycle;
    GlobalAction ga = GlobalAction::from_maps(cyclic_group(3), alg,
                                              {DenseMatrix::identity(3), cycle, cycle2});
    REQUIRE(check_partial_action(ga.action).pass());
    RestrictedAction ra = restrict_action(ga, Subspace::span(3, {alg.basis(0)}));
    CHECK(check_partial_action(ra.action).pass());
    CHECK(ra.action.domains[0].dim() == 1);
    CHECK(ra.action.domains[1].dim() == 0);
    CHECK(ra.action.domains[2].dim() == 0);
}

TEST_CASE("the ideal inclusion of a restriction is a morphism") {
    GlobalAction ga = swap_last_two();
    Subspace ideal = Subspace::span(3, {ga.action.algebra.basis(0), ga.action.algebra.basis(1)});
    RestrictedAction ra = restrict_action(ga, ideal);
    DenseMatrix phi = ra.view.space.lift_matrix();
    CHECK(verify_morphism(phi, ra.action, ga.action).pass());
}

TEST_CASE("verify_morphism catches non equivariant maps") {
    PartialAction flip = half_defined_flip();
    GlobalAction swap = coordinate_swap();
    DenseMatrix phi = DenseMatrix::identity(2);
    Report rep = verify_morphism(phi, flip, swap.action);
    CHECK_FALSE(rep.pass());
    CHECK(rep.has("morphism-equivariant"));
    CHECK_FALSE(rep.has("morphism-multiplicative"));
}

TEST_CASE("verify_morphism rejects mismatched groups") {
    PartialAction flip = half_defined_flip();
    GlobalAction tri = trivial_global_action(cyclic_group(3), diagonal_algebra(2));
    Report rep = verify_morphism(DenseMatrix::identity(2), flip, tri.action);
    CHECK(rep.has("morphism-group"));
}
