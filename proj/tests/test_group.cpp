#include <catch2/catch_amalgamated.hpp>

#include "pact/group.hpp"

using namespace pact;

TEST_CASE("cyclic groups") {
    Group g = cyclic_group(6);
    CHECK(g.order == 6);
    CHECK(g.identity == 0);
    CHECK(g.op(2, 5) == 1);
    CHECK(g.inv(2) == 4);
    CHECK(check_group(g).pass());
    CHECK(is_abelian(g));
}

TEST_CASE("symmetric group on three letters") {
    Group g = symmetric_group(3);
    CHECK(g.order == 6);
    CHECK(check_group(g).pass());
    CHECK_FALSE(is_abelian(g));
    // Permutations are ordered lexicographically, so 0 is the identity.
    CHECK(g.identity == 0);
}

TEST_CASE("dihedral group of the square") {
    Group g = dihedral_group(4);
    CHECK(g.order == 8);
    CHECK(check_group(g).pass());
    CHECK_FALSE(is_abelian(g));
    // A reflection is its own inverse.
    for (std::size_t k = 4; k < 8; ++k) CHECK(g.op(k, k) == g.identity);
}

TEST_CASE("direct products multiply componentwise") {
    Group g = direct_product(cyclic_group(2), cyclic_group(3));
    CHECK(g.order == 6);
    CHECK(check_group(g).pass());
    CHECK(is_abelian(g));
    // (1,1) has order 6, so the product is cyclic of order 6.
    std::size_t x = 1 * 3 + 1, acc = g.identity, order = 0;
    do {
        acc = g.op(acc, x);
        ++order;
    } while (acc != g.identity);
    CHECK(order == 6);
}

TEST_CASE("build_group parses descriptions") {
    CHECK(build_group("cyclic(4)").order == 4);
    CHECK(build_group("symmetric(3)").order == 6);
    CHECK(build_group("dihedral(4)").order == 8);
    CHECK(build_group("cyclic(2) x cyclic(2)").order == 4);
    CHECK(build_group(" cyclic(2) x symmetric(3) ").order == 12);
    CHECK(check_group(build_group("cyclic(2) x dihedral(4) x cyclic(2)")).pass());
}

TEST_CASE("build_group rejects bad input") {
    CHECK_THROWS_AS(build_group(""), std::invalid_argument);
    CHECK_THROWS_AS(build_group("cyclic"), std::invalid_argument);
    CHECK_THROWS_AS(build_group("cyclic(0)"), std::invalid_argument);
    CHECK_THROWS_AS(build_group("sporadic(1)"), std::invalid_argument);
    CHECK_THROWS_AS(build_group("cyclic(x)"), std::invalid_argument);
    CHECK_THROWS_AS(build_group("cyclic(65)"), std::invalid_argument);
    CHECK_THROWS_AS(build_group("cyclic(8) x cyclic(9)"), std::invalid_argument);
}

TEST_CASE("check_group pinpoints broken tables") {
    // Constant-row "multiplication" has no identity.
    CHECK_THROWS_AS(Group::from_table({{0, 0}, {0, 0}}), std::invalid_argument);

    // Left shift composed wrongly: associative but entries out of range.
    CHECK_THROWS_AS(Group::from_table({{0, 1}, {1, 3}}), std::invalid_argument);

    // A latin square that is not associative: the cyclic table of order six
    // with an intercalate flipped keeps identity and inverses but breaks
    // associativity.
    Group g = Group::from_table({
        {0, 1, 2, 3, 4, 5},
        {1, 5, 3, 4, 2, 0},
        {2, 3, 4, 5, 0, 1},
        {3, 4, 5, 0, 1, 2},
        {4, 2, 0, 1, 5, 3},
        {5, 0, 1, 2, 3, 4},
    });
    Report rep = check_group(g);
    CHECK_FALSE(rep.pass());
    CHECK(rep.has("group-associativity"));
}

TEST_CASE("from_table accepts a hand written klein four table") {
    Group g = Group::from_table({
        {0, 1, 2, 3},
        {1, 0, 3, 2},
        {2, 3, 0, 1},
        {3, 2, 1, 0},
    });
    CHECK(check_group(g).pass());
    for (std::size_t a = 0; a < 4; ++a) CHECK(g.inv(a) == a);
}
