#include <catch2/catch_amalgamated.hpp>

#include "pact/builders.hpp"
#include "pact/env_family.hpp"
#include "support/fixtures.hpp"

using namespace pact;
using namespace testsupport;

namespace {

EnvelopingFamily family_of(const PartialAction& pa) {
    FamilyOutcome out = canonical_family(pa);
    REQUIRE(std::holds_alternative<EnvelopingFamily>(out));
    return std::get<EnvelopingFamily>(out);
}

}  // namespace

TEST_CASE("the canonical family of the half defined flip") {
    PartialAction pa = half_defined_flip();
    EnvelopingFamily fam = family_of(pa);
    Vec e0 = pa.algebra.basis(0);
    Vec zero(2);
    // F_1 picks out the first coordinate of both arguments.
    CHECK(fam.at(1, 0, 0) == e0);
    CHECK(fam.at(1, 0, 1) == zero);
    CHECK(fam.at(1, 1, 0) == zero);
    CHECK(fam.at(1, 1, 1) == zero);
    CHECK(fam.at(0, 1, 1) == pa.algebra.basis(1));
    CHECK(check_family(pa, fam, FamilyMode::algebraic).pass());
    CHECK(check_family(pa, fam, FamilyMode::star).pass());
}

TEST_CASE("the canonical family of the block sign flip") {
    PartialAction pa = block_sign_flip();
    EnvelopingFamily fam = family_of(pa);
    // F_1(E12, E21) = alpha_1(E12) E21 = -E11.
    CHECK(fam.at(1, 1, 2) == vec_scale(GaussianRational(-1), pa.algebra.basis(0)));
    // The lone C block never meets the domain at 1.
    CHECK(vec_is_zero(fam.at(1, 4, 4)));
    CHECK(check_family(pa, fam, FamilyMode::algebraic).pass());
    CHECK(check_family(pa, fam, FamilyMode::star).pass());
}

TEST_CASE("a global action has the shifted product as family") {
    GlobalAction ga = coordinate_swap();
    const PartialAction& pa = ga.action;
    EnvelopingFamily fam = family_of(pa);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            CHECK(fam.at(1, i, j) ==
                  pa.algebra.mul(pa.apply(1, pa.algebra.basis(i)), pa.algebra.basis(j)));
    CHECK(check_family(pa, fam, FamilyMode::algebraic).pass());
    CHECK(check_family(pa, fam, FamilyMode::star).pass());
}

TEST_CASE("the division system agrees with the unital formula") {
    // Both fixtures have unital partial domains, so the canonical family
    // comes from the unit; solving the defining equations instead has to
    // land on the same values, and uniquely so.
    for (PartialAction pa : {half_defined_flip(), block_sign_flip()}) {
        EnvelopingFamily fam = family_of(pa);
        const std::size_t d = pa.algebra.dim();
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                FamilyWitness w =
                    family_witness(pa, 1, pa.algebra.basis(i), pa.algebra.basis(j));
                REQUIRE(w.value);
                CHECK(w.unique);
                CHECK(*w.value == fam.at(1, i, j));
            }
    }
}

TEST_CASE("the division system at the identity recovers the product") {
    PartialAction pa = half_defined_flip();
    Vec a = {GaussianRational(1), GaussianRational(2)};
    Vec b = {GaussianRational(3), GaussianRational(-1)};
    FamilyWitness w = family_witness(pa, 0, a, b);
    REQUIRE(w.value);
    CHECK(w.unique);
    CHECK(*w.value == pa.algebra.mul(a, b));
}

TEST_CASE("an annihilated domain makes the division ambiguous") {
    // At (x, x) every defining equation degenerates to 0 = 0, so the zero
    // solution exists but nothing pins it down.
    PartialAction pa = nilpotent_negation();
    Vec x = pa.algebra.basis(1);
    FamilyWitness w = family_witness(pa, 1, x, x);
    REQUIRE(w.value);
    CHECK(vec_is_zero(*w.value));
    CHECK_FALSE(w.unique);
}

TEST_CASE("no family exists for the nilpotent negation") {
    PartialAction pa = nilpotent_negation();
    FamilyOutcome out = canonical_family(pa);
    REQUIRE(std::holds_alternative<FamilyObstruction>(out));
    FamilyObstruction obs = std::get<FamilyObstruction>(out);
    CHECK(obs.t == 1);
    CHECK(obs.a_index == 0);
    CHECK(obs.b_index == 0);
    CHECK_FALSE(obs.domain_unital);
    CHECK_FALSE(obs.ambiguous);
    CHECK(obs.describe() ==
          "no family witness at (t=1,a=0,b=0); domain at inv(t) has no unit");
}

TEST_CASE("doubling one slot breaks composition and nothing earlier") {
    PartialAction pa = half_defined_flip();
    EnvelopingFamily fam = family_of(pa);
    for (auto& row : fam.tensors[1])
        for (Vec& v : row) v = vec_scale(GaussianRational(2), v);
    Report rep = check_family(pa, fam, FamilyMode::algebraic);
    CHECK_FALSE(rep.pass());
    CHECK(rep.has("family-III"));
    CHECK_FALSE(rep.has("family-I"));
    CHECK_FALSE(rep.has("family-II"));
    CHECK_FALSE(rep.has("family-IV"));
    CHECK_FALSE(check_family(pa, fam, FamilyMode::star).pass());
}

TEST_CASE("a wrong identity slot is caught by rule I") {
    PartialAction pa = half_defined_flip();
    EnvelopingFamily fam = family_of(pa);
    fam.tensors[0][0][0] = pa.algebra.basis(1);
    Report rep = check_family(pa, fam, FamilyMode::algebraic);
    CHECK_FALSE(rep.pass());
    const Violation* v = rep.find("family-I");
    REQUIRE(v);
    CHECK(v->witness == "identity slot (i=0,j=0)");
}

TEST_CASE("values outside the domain are caught by rule I") {
    PartialAction pa = half_defined_flip();
    EnvelopingFamily fam = family_of(pa);
    fam.tensors[1][1][1] = pa.algebra.basis(1);
    Report rep = check_family(pa, fam, FamilyMode::star);
    const Violation* v = rep.find("family-I'");
    REQUIRE(v);
    CHECK(v->witness == "range (t=1,i=1,j=1)");
}

TEST_CASE("family checks reject a shape mismatch") {
    PartialAction pa = half_defined_flip();
    EnvelopingFamily fam = family_of(pa);
    fam.tensors.pop_back();
    CHECK_THROWS_AS(check_family(pa, fam, FamilyMode::algebraic), std::invalid_argument);
}
