#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "amoeba/chains.hpp"
#include "amoeba/classify.hpp"
#include "amoeba/constructions.hpp"
#include "amoeba/replacement.hpp"
#include "amoeba/report_json.hpp"
#include "oracles.hpp"

using namespace amoeba;
namespace oracle = amoeba::testing;

TEST_CASE("morph to the identity is the empty chain") {
    MorphResult r = morph(path_graph(4), Permutation::identity(4));
    CHECK(r.chain.steps.empty());
    CHECK(validate_chain(r.chain).ok);
}

TEST_CASE("all 24 targets of the 4-path are reachable and validate") {
    for (const auto& target : oracle::all_permutations(4)) {
        MorphResult r = morph(path_graph(4), target);
        auto v = validate_chain(r.chain);
        CHECK(v.ok);
        CHECK(r.chain.target == target);
    }
}

TEST_CASE("unreachable targets raise a certified error") {
    try {
        morph(cycle_graph(5), Permutation::transposition(5, 1, 2));
        FAIL("expected UnreachableCopyError");
    } catch (const UnreachableCopyError& e) {
        CHECK(e.group_order() == "10");
        CHECK(e.orbits() == std::vector<std::vector<int>>{{1, 2, 3, 4, 5}});
    }
    // independent check: the transposition is outside the naive closure
    auto closure = oracle::brute_force_closure(generator_atlas(cycle_graph(5)).generator_list(), 5);
    CHECK(std::find(closure.begin(), closure.end(), Permutation::transposition(5, 1, 2)) ==
          closure.end());
}

TEST_CASE("slack vertices open up the complete graph next door") {
    // the 4-clique alone reaches only automorphisms; with one spare vertex the
    // spare stays isolated, so moving it remains impossible
    CHECK_THROWS_AS(morph(complete_graph(4), Permutation::transposition(5, 4, 5), 1),
                    UnreachableCopyError);
    // a path does use the slack vertex
    MorphResult r = morph(path_graph(3), Permutation({4, 1, 2, 3}), 1);
    CHECK(validate_chain(r.chain).ok);
    CHECK(r.chain.start.order() == 4);
}

TEST_CASE("wrong-size targets are rejected") {
    CHECK_THROWS_AS(morph(path_graph(4), Permutation::identity(5)), Error);
    CHECK_THROWS_AS(morph(path_graph(4), Permutation::identity(4), 1), Error);
}

TEST_CASE("chain steps are single replacements ending at the target copy") {
    std::mt19937 rng(107);
    Graph h6 = h_graph_direct(6);
    GeneratorAtlas atlas = generator_atlas(h6);
    REQUIRE(atlas.witnesses.size() >= 2);
    Permutation target = compose(atlas.witnesses[0], atlas.witnesses[1]);
    MorphResult r = morph(h6, target);
    auto v = validate_chain(r.chain);
    CHECK(v.ok);
    CHECK(r.chain.steps.size() <= r.trace.size()); // neutral factors only shrink the chain
    // every step differs from its predecessor in exactly one edge
    std::vector<Edge> prev = h6.edges();
    for (const auto& step : r.chain.steps) {
        REQUIRE(step.removed.has_value());
        REQUIRE(step.added.has_value());
        Graph g(6, step.resulting_edges);
        CHECK(are_isomorphic(g, h6));
        prev = step.resulting_edges;
    }
    CHECK(prev == h6.relabeled_copy(target).edges());
}

TEST_CASE("a corrupted chain fails validation at the right step") {
    MorphResult r = morph(path_graph(4), Permutation({2, 3, 4, 1}));
    REQUIRE(r.chain.steps.size() >= 1);
    auto v = validate_chain(r.chain);
    REQUIRE(v.ok);

    MorphChain bad = r.chain;
    Edge original_added = *bad.steps[0].added;
    Edge perturbed = (original_added == Edge{1, 4}) ? Edge{2, 4} : Edge{1, 4};
    if (perturbed == *bad.steps[0].removed) perturbed = Edge{1, 3};
    bad.steps[0].added = perturbed;
    auto bv = validate_chain(bad);
    CHECK_FALSE(bv.ok);
    CHECK(bv.failed_step == 0);

    MorphChain wrong_target = r.chain;
    wrong_target.target = Permutation::identity(4);
    auto tv = validate_chain(wrong_target);
    CHECK_FALSE(tv.ok);
    CHECK(tv.failed_step == static_cast<int>(wrong_target.steps.size()));
}

TEST_CASE("neutral factors are compressed but traced") {
    // an automorphism target of the 3-star: no ambient step should remain
    MorphResult r = morph(star_graph(4), Permutation({1, 3, 4, 2}));
    CHECK(r.chain.steps.empty());
    CHECK_FALSE(r.trace.empty());
    for (const auto& t : r.trace) CHECK(t.neutral);
    CHECK(validate_chain(r.chain).ok);
}

TEST_CASE("morph chains validate for random targets of small local amoebas") {
    std::mt19937 rng(109);
    for (const Graph& g : {path_graph(5), h_graph_direct(5)}) {
        for (int rep = 0; rep < 10; ++rep) {
            Permutation target = oracle::random_permutation(5, rng);
            MorphResult r = morph(g, target);
            CHECK(validate_chain(r.chain).ok);
        }
    }
}

TEST_CASE("copy reachability of the 4-path") {
    ReachabilitySummary s = copy_graph_bfs(path_graph(4));
    CHECK(s.total_copies == 12);
    CHECK(s.reachable_copies == 12);
    CHECK(s.all_reachable);
}

TEST_CASE("copy reachability of the rigid 5-cycle") {
    ReachabilitySummary s = copy_graph_bfs(cycle_graph(5));
    CHECK(s.total_copies == 12); // 5! / 10
    CHECK(s.reachable_copies == 1);
    CHECK_FALSE(s.all_reachable);
}

TEST_CASE("reachability agrees with the group verdict on random graphs") {
    std::mt19937 rng(113);
    for (int rep = 0; rep < 10; ++rep) {
        Graph g = oracle::random_graph(5, rng);
        CHECK(copy_graph_bfs(g).all_reachable == classify(g).is_local);
    }
}

TEST_CASE("state budget enforcement") {
    CHECK_THROWS_AS(copy_graph_bfs(path_graph(6), 10), Error);
    CHECK_THROWS_AS(copy_graph_bfs(path_graph(12)), Error);
}

TEST_CASE("chain JSON round trip") {
    MorphResult r = morph(path_graph(4), Permutation({2, 3, 4, 1}));
    auto j = chain_to_json(r.chain);
    MorphChain back = chain_from_json(j);
    CHECK(back.start == r.chain.start);
    CHECK(back.target == r.chain.target);
    REQUIRE(back.steps.size() == r.chain.steps.size());
    CHECK(validate_chain(back).ok);
    // the schema keeps remove/add pairs as two-element arrays or null
    for (const auto& step : j["steps"]) {
        CHECK(step.contains("remove"));
        CHECK(step.contains("add"));
    }
}
