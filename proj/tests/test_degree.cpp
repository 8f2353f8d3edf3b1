#include <catch2/catch_amalgamated.hpp>

#include "qmaya/degree.hpp"

using namespace qmaya;

TEST_CASE("degree vector arithmetic and order") {
    const DegreeVector a({0, 1, 1, 1, 0});
    const DegreeVector b({0, 1, 0, 0, 0});
    CHECK(a + b == DegreeVector({0, 2, 1, 1, 0}));
    CHECK((a + b) + b == a + (b + b));
    CHECK(a + DegreeVector::zero(5) == a);
    CHECK(DegreeVector::zero(3).is_zero());
    CHECK_FALSE(a.is_zero());

    CHECK(componentwise_leq(b, a));
    CHECK_FALSE(componentwise_leq(a, b));
    CHECK(componentwise_leq(a, a));
    // Incomparable pair.
    CHECK_FALSE(componentwise_leq(DegreeVector({1, 0}), DegreeVector({0, 1})));
    CHECK_FALSE(componentwise_leq(DegreeVector({0, 1}), DegreeVector({1, 0})));
}

TEST_CASE("degree vector text forms") {
    CHECK(DegreeVector({0, 2, 1, 1, 0}).to_string() == "0,2,1,1,0");
    CHECK(DegreeVector({0, 2, 1, 1, 0}).exponent_form() == "0^1 2^1 1^2 0^1");
    CHECK(DegreeVector({0, 1, 1, 1, 0}).exponent_form() == "0^1 1^3 0^1");
    CHECK(DegreeVector({1}).exponent_form() == "1^1");
    CHECK(DegreeVector::zero(4).exponent_form() == "0^4");
}

TEST_CASE("step degrees of rim hooks") {
    const FlagShape headline(13, {1, 3, 5, 7, 9});
    CHECK(step_degree(headline, {2, 5}) == DegreeVector({0, 1, 1, 1, 0}));
    CHECK(step_degree(headline, {2, 3}) == DegreeVector({0, 1, 0, 0, 0}));
    CHECK(step_degree(FlagShape(2, {1}), {1, 2}) == DegreeVector({1}));
    CHECK_THROWS_AS(step_degree(headline, {3, 3}), ParseError);
    CHECK_THROWS_AS(step_degree(headline, {1, 7}), ParseError);
}

TEST_CASE("root degrees of reflection steps") {
    const FlagShape headline(13, {1, 3, 5, 7, 9});
    // Block pair (2,5) covers b in 8..9; position 10 already sits in block 6.
    CHECK(root_degree(headline, 2, 9) == DegreeVector({0, 1, 1, 1, 0}));
    CHECK(root_degree(headline, 2, 10) == DegreeVector({0, 1, 1, 1, 1}));
    // Positions inside one block.
    CHECK(root_degree(headline, 10, 13) == DegreeVector::zero(5));
    CHECK(root_degree(FlagShape(4, {1, 2}), 1, 4) == DegreeVector({1, 1}));

    // Matches the step degree of the block pair whenever the blocks differ.
    for (int a = 1; a <= 13; ++a) {
        for (int b = a + 1; b <= 13; ++b) {
            const int q = headline.block_of(a);
            const int t = headline.block_of(b);
            if (q == t) {
                CHECK(root_degree(headline, a, b).is_zero());
            } else {
                CHECK(root_degree(headline, a, b) == step_degree(headline, {q, t}));
            }
        }
    }
}

TEST_CASE("graded degree uses the quantum weights") {
    const FlagShape headline(13, {1, 3, 5, 7, 9});
    CHECK(graded_degree(headline, DegreeVector({0, 2, 1, 1, 0})) == 16);
    CHECK(graded_degree(headline, DegreeVector::zero(5)) == 0);
    CHECK(graded_degree(FlagShape(12, {8}), DegreeVector({1})) == 12);
    CHECK_THROWS_AS(graded_degree(headline, DegreeVector({1})), InternalError);
}
