#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <vector>

#include "qmaya/oracle.hpp"

using namespace qmaya;

TEST_CASE("adjacency multigraph structure") {
    const FlagShape line(2, {1});
    const auto line_edges = oracle::adjacency_graph(line);
    REQUIRE(line_edges.size() == 2);
    for (const auto& edge : line_edges) {
        CHECK_FALSE(edge.source == edge.target);
        CHECK(edge.degree == DegreeVector({1}));
    }
    CHECK(line_edges[0].source.to_string() == "1");
    CHECK(line_edges[0].target.to_string() == "2");
    CHECK(line_edges[1].source.to_string() == "2");
    CHECK(line_edges[1].target.to_string() == "1");

    const FlagShape full3(3, {1, 2});
    const std::set<std::vector<int>> allowed{{1, 0}, {0, 1}, {1, 1}};
    for (const auto& edge : oracle::adjacency_graph(full3)) {
        CHECK(allowed.count(edge.degree.entries()) == 1);
        CHECK_FALSE(edge.degree.is_zero());
    }

    // One edge per coset and cross-block position pair.
    const FlagShape shape(4, {1, 2});
    int cross_pairs = 0;
    for (int a = 1; a <= 4; ++a) {
        for (int b = a + 1; b <= 4; ++b) {
            if (shape.block_of(a) != shape.block_of(b)) ++cross_pairs;
        }
    }
    CHECK(cross_pairs == 5);
    CHECK(oracle::adjacency_graph(shape).size() == 12u * 5u);
}

TEST_CASE("every edge label has a positive component") {
    for (const FlagShape& shape : {FlagShape(5, {2}), FlagShape(4, {1, 2, 3})}) {
        for (const auto& edge : oracle::adjacency_graph(shape)) {
            CHECK_FALSE(edge.degree.is_zero());
            CHECK_FALSE(edge.source == edge.target);
        }
    }
}

TEST_CASE("exhaustive pareto degrees on the full flag of rank three") {
    const FlagShape shape(3, {1, 2});
    const CosetRep identity = CosetRep::parse(shape, "1|2");
    const CosetRep longest = CosetRep::parse(shape, "3|2");
    const DegreeVector cap({2, 2});

    const auto from_identity = oracle::pareto_min_degrees(identity, longest, cap);
    REQUIRE(from_identity.size() == 1);
    CHECK(from_identity.front() == DegreeVector({1, 1}));

    // Dominated target: only the zero degree.
    const auto dominated = oracle::pareto_min_degrees(longest, identity, cap);
    REQUIRE(dominated.size() == 1);
    CHECK(dominated.front().is_zero());

    const auto one_step = oracle::pareto_min_degrees(CosetRep::parse(shape, "2|1"),
                                                     CosetRep::parse(shape, "1|3"), cap);
    REQUIRE(one_step.size() == 1);
    CHECK(one_step.front() == DegreeVector({0, 1}));
}

TEST_CASE("pareto sets are antichains containing zero exactly on domination") {
    const FlagShape shape(4, {1, 2});
    const oracle::Space space(shape);
    const DegreeVector cap({3, 3});
    for (int v = 0; v < space.size(); ++v) {
        for (int w = 0; w < space.size(); ++w) {
            const auto degrees = space.pareto_min_degrees(v, w, cap);
            REQUIRE_FALSE(degrees.empty());
            for (std::size_t a = 0; a < degrees.size(); ++a) {
                for (std::size_t b = 0; b < degrees.size(); ++b) {
                    if (a == b) continue;
                    CHECK_FALSE(componentwise_leq(degrees[a], degrees[b]));
                }
            }
            const bool has_zero =
                std::any_of(degrees.begin(), degrees.end(),
                            [](const DegreeVector& d) { return d.is_zero(); });
            CHECK(has_zero == bruhat_leq(space.cosets()[static_cast<std::size_t>(w)],
                                         space.cosets()[static_cast<std::size_t>(v)]));
        }
    }
}

TEST_CASE("cover closure on the projective line") {
    const oracle::Space space(FlagShape(2, {1}));
    const int one = space.index_of(CosetRep::parse(space.shape(), "1"));
    const int two = space.index_of(CosetRep::parse(space.shape(), "2"));
    CHECK(space.closure_leq(one, two));
    CHECK_FALSE(space.closure_leq(two, one));
    CHECK(space.closure_leq(one, one));
}

TEST_CASE("identity sits below every coset in the closure") {
    const oracle::Space space(FlagShape(4, {1, 3}));
    const int identity = space.index_of(CosetRep::identity(space.shape()));
    for (int u = 0; u < space.size(); ++u) CHECK(space.closure_leq(identity, u));
}

TEST_CASE("closure relation as a standalone table") {
    const FlagShape shape(4, {1, 2});
    const auto relation = oracle::bruhat_closure(shape);
    const oracle::Space space(shape);
    REQUIRE(relation.size() == static_cast<std::size_t>(space.size()));
    for (int u = 0; u < space.size(); ++u) {
        for (int v = 0; v < space.size(); ++v) {
            CHECK(relation[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] ==
                  space.closure_leq(u, v));
        }
    }
}

TEST_CASE("verification sweep finds no mismatches") {
    const oracle::VerifyReport report = oracle::verify_space(FlagShape(4, {1, 2}));
    CHECK(report.pairs_checked == 144);
    CHECK(report.ok());
    CHECK(report.mismatches.empty());
    CHECK(report.bruhat_mismatches == 0);
    CHECK(report.hecke_mismatches == 0);
    CHECK(report.symmetric_pairs <= report.pairs_checked);

    // Worker fan-out must not change anything observable.
    const oracle::VerifyReport threaded = oracle::verify_space(FlagShape(4, {1, 2}), 1, 3);
    CHECK(threaded.pairs_checked == report.pairs_checked);
    CHECK(threaded.symmetric_pairs == report.symmetric_pairs);
    CHECK(threaded.ok());
}

TEST_CASE("oracle refuses oversized spaces") {
    CHECK_THROWS_AS(oracle::Space(FlagShape(9, {1, 2, 3, 4, 5, 6, 7, 8})), ParseError);
    CHECK_THROWS_AS(oracle::adjacency_graph(FlagShape(9, {1, 2, 3, 4, 5, 6, 7, 8})), ParseError);
}
