#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "qmaya/chain.hpp"

using namespace qmaya;

namespace {

/// Checks every structural invariant of a finished trace.
void require_valid_trace(const MinDegreeResult& result, const CosetRep& v, const CosetRep& w) {
    const ChainTrace& trace = result.trace;
    REQUIRE(trace.start == v);
    DegreeVector sum = DegreeVector::zero(v.shape().k());
    const CosetRep* prev = &trace.start;
    const MayaDiagram target = MayaDiagram::of(w);
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const ChainStep& step = trace.steps[i];
        REQUIRE(step.degree == step_degree(v.shape(), step.hook));
        sum += step.degree;
        REQUIRE(bruhat_leq(*prev, step.result));
        REQUIRE_FALSE(bruhat_leq(step.result, *prev));
        const bool dominates = diagram_leq(target, MayaDiagram::of(step.result));
        if (i + 1 < trace.steps.size()) {
            REQUIRE_FALSE(dominates);
        } else {
            REQUIRE(dominates);
        }
        prev = &step.result;
    }
    REQUIRE(sum == trace.total);
    REQUIRE(result.total == trace.total);
    if (trace.steps.empty()) REQUIRE(diagram_leq(target, MayaDiagram::of(v)));
    // Intermediate cosets never dominate; checked above for all but the start.
    if (!trace.steps.empty()) REQUIRE_FALSE(diagram_leq(target, MayaDiagram::of(v)));
}

/// Total degrees reachable when every greatest-length run may be chosen at
/// every step, not just the smallest-q one.
void collect_totals(const CosetRep& v, const MayaDiagram& target, const DegreeVector& acc,
                    std::set<DegreeVector>& out) {
    const MayaDiagram mv = MayaDiagram::of(v);
    const auto candidates = candidate_rim_hooks(mv, target);
    if (candidates.empty()) {
        out.insert(acc);
        return;
    }
    for (const RimHookSpec& hook : candidates) {
        collect_totals(rim_hook(mv, hook).to_coset(), target,
                       acc + step_degree(v.shape(), hook), out);
    }
}

}  // namespace

TEST_CASE("greedy chain on the thirteen-column example") {
    const FlagShape shape(13, {1, 3, 5, 7, 9});
    const CosetRep v = CosetRep::parse(shape, "2|3,8|10,13|9,11|1,5");
    const CosetRep w = CosetRep::parse(shape, "1|9,10|5,11|6,7|2,3");
    const MinDegreeResult result = greedy_min_degree(v, w);
    CHECK(result.total == DegreeVector({0, 2, 1, 1, 0}));
    CHECK(result.total.exponent_form() == "0^1 2^1 1^2 0^1");
    REQUIRE(result.trace.steps.size() == 2);
    CHECK(result.trace.steps[0].hook == RimHookSpec{2, 5});
    CHECK(result.trace.steps[0].degree == DegreeVector({0, 1, 1, 1, 0}));
    CHECK(result.trace.steps[1].hook == RimHookSpec{2, 3});
    CHECK(result.trace.steps[1].degree == DegreeVector({0, 1, 0, 0, 0}));
    require_valid_trace(result, v, w);
}

TEST_CASE("greedy chain trivial cases") {
    const FlagShape shape(4, {1, 2});
    for (const CosetRep& c : enumerate_cosets(shape)) {
        const MinDegreeResult result = greedy_min_degree(c, c);
        CHECK(result.total.is_zero());
        CHECK(result.trace.steps.empty());
    }

    const FlagShape full3(3, {1, 2});
    const CosetRep v = CosetRep::parse(full3, "2|1");
    const CosetRep w = CosetRep::parse(full3, "1|3");
    const MinDegreeResult result = greedy_min_degree(v, w);
    CHECK(result.total == DegreeVector({0, 1}));
    REQUIRE(result.trace.steps.size() == 1);
    CHECK(result.trace.steps[0].hook == RimHookSpec{2, 3});
}

TEST_CASE("greedy total vanishes exactly on dominated targets") {
    const FlagShape shape(4, {1, 2});
    const auto cosets = enumerate_cosets(shape);
    for (const CosetRep& v : cosets) {
        for (const CosetRep& w : cosets) {
            CHECK(greedy_min_degree(v, w).total.is_zero() == bruhat_leq(w, v));
        }
    }
}

TEST_CASE("grassmannian projections") {
    const FlagShape shape(13, {1, 3, 5, 7, 9});
    const CosetRep v = CosetRep::parse(shape, "2|3,8|10,13|9,11|1,5");
    const CosetRep projected = project(v, 2);
    CHECK(projected.shape() == FlagShape(13, {3}));
    CHECK(projected.to_string() == "2,3,8");
    CHECK(project(v, 1).to_string() == "2");

    const CosetRep ident = CosetRep::identity(shape);
    for (int j = 1; j <= shape.k(); ++j) {
        CHECK(project(ident, j) == CosetRep::identity(FlagShape(13, {shape.dim(j)})));
    }
    CHECK_THROWS_AS(project(v, 0), ParseError);
    CHECK_THROWS_AS(project(v, 6), ParseError);
}

TEST_CASE("projection degrees and the lower bound vector") {
    const FlagShape shape(13, {1, 3, 5, 7, 9});
    const CosetRep v = CosetRep::parse(shape, "2|3,8|10,13|9,11|1,5");
    const CosetRep w = CosetRep::parse(shape, "1|9,10|5,11|6,7|2,3");
    CHECK(projection_degree(v, w, 2) == 2);
    CHECK(projection_degree(v, w, 1) == 0);
    CHECK(projection_degree(v, w, 5) == 0);
    CHECK(lower_bound_vector(v, w) == DegreeVector({0, 2, 1, 1, 0}));

    // Dominating pairs project to dominating pairs.
    for (int j = 1; j <= shape.k(); ++j) CHECK(projection_degree(w, w, j) == 0);
    CHECK(lower_bound_vector(w, w).is_zero());
}

TEST_CASE("lower bound equals the greedy total on small spaces") {
    for (const FlagShape& shape : {FlagShape(4, {1, 2}), FlagShape(5, {2})}) {
        const auto cosets = enumerate_cosets(shape);
        for (const CosetRep& v : cosets) {
            for (const CosetRep& w : cosets) {
                const MinDegreeResult result = greedy_min_degree(v, w);
                CHECK(lower_bound_vector(v, w) == result.total);
                require_valid_trace(result, v, w);
            }
        }
    }
}

TEST_CASE("total degree does not depend on the tie break") {
    for (const FlagShape& shape : {FlagShape(4, {1, 2}), FlagShape(4, {1, 2, 3})}) {
        const auto cosets = enumerate_cosets(shape);
        for (const CosetRep& v : cosets) {
            for (const CosetRep& w : cosets) {
                std::set<DegreeVector> totals;
                collect_totals(v, MayaDiagram::of(w), DegreeVector::zero(shape.k()), totals);
                REQUIRE(totals.size() == 1);
                CHECK(*totals.begin() == greedy_min_degree(v, w).total);
            }
        }
    }
}

TEST_CASE("both degree routes agree on the thirteen-column space") {
    // This space has about 1.6e7 cosets, far beyond the exhaustive oracle;
    // the greedy chain and the projection route still have to coincide.
    const FlagShape shape(13, {1, 3, 5, 7, 9});
    std::mt19937 rng(777);
    std::vector<int> image(13);
    for (int i = 0; i < 13; ++i) image[static_cast<std::size_t>(i)] = i + 1;
    for (int trial = 0; trial < 60; ++trial) {
        std::shuffle(image.begin(), image.end(), rng);
        const CosetRep v = CosetRep::minimize(shape, Permutation(image));
        std::shuffle(image.begin(), image.end(), rng);
        const CosetRep w = CosetRep::minimize(shape, Permutation(image));
        const MinDegreeResult result = greedy_min_degree(v, w);
        REQUIRE(lower_bound_vector(v, w) == result.total);
        require_valid_trace(result, v, w);
    }
}

TEST_CASE("both degree routes agree on large random flags") {
    // The greedy chain on the full flag and the k independent Grassmannian
    // projections are different algorithms; their totals must coincide even
    // far beyond what the exhaustive oracle can sweep.
    std::mt19937 rng(8675309);
    for (int trial = 0; trial < 12; ++trial) {
        std::uniform_int_distribution<int> pick_n(20, 60);
        const int n = pick_n(rng);
        std::set<int> boundary;
        std::uniform_int_distribution<int> pick_dim(1, n - 1);
        const int blocks = std::uniform_int_distribution<int>(1, 6)(rng);
        while (static_cast<int>(boundary.size()) < blocks) boundary.insert(pick_dim(rng));
        const FlagShape shape(n, std::vector<int>(boundary.begin(), boundary.end()));

        std::vector<int> image(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) image[static_cast<std::size_t>(i)] = i + 1;
        std::shuffle(image.begin(), image.end(), rng);
        const CosetRep v = CosetRep::minimize(shape, Permutation(image));
        std::shuffle(image.begin(), image.end(), rng);
        const CosetRep w = CosetRep::minimize(shape, Permutation(image));

        const MinDegreeResult result = greedy_min_degree(v, w);
        REQUIRE(lower_bound_vector(v, w) == result.total);
        require_valid_trace(result, v, w);
    }
}

TEST_CASE("greedy traces stay within the safety cap") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<int> pick_n(2, 9);
        const int n = pick_n(rng);
        std::vector<int> dims;
        for (int d = 1; d <= n - 1; ++d) {
            if (std::uniform_int_distribution<int>(0, 1)(rng) == 0) dims.push_back(d);
        }
        if (dims.empty()) dims.push_back(1);
        const FlagShape shape(n, dims);
        std::vector<int> image(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) image[static_cast<std::size_t>(i)] = i + 1;
        std::shuffle(image.begin(), image.end(), rng);
        const CosetRep v = CosetRep::minimize(shape, Permutation(image));
        std::shuffle(image.begin(), image.end(), rng);
        const CosetRep w = CosetRep::minimize(shape, Permutation(image));
        const MinDegreeResult result = greedy_min_degree(v, w);
        CHECK(static_cast<int>(result.trace.steps.size()) <= n * n);
        require_valid_trace(result, v, w);
    }
}
