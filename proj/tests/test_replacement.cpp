#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "amoeba/constructions.hpp"
#include "amoeba/replacement.hpp"
#include "amoeba/stabilizer_chain.hpp"
#include "oracles.hpp"

using namespace amoeba;
namespace oracle = amoeba::testing;

namespace {

// feasibility by definition, using the brute-force isomorphism oracle
std::vector<EdgeReplacement> brute_force_replacements(const Graph& g) {
    std::vector<EdgeReplacement> out;
    out.push_back(EdgeReplacement::neutral());
    const Graph comp = g.complement();
    for (const Edge& e : g.edges())
        for (const Edge& f : comp.edges())
            if (oracle::brute_force_isomorphic(g, g.minus_edge(e).plus_edge(f)))
                out.push_back(EdgeReplacement::swap(e, f));
    return out;
}

} // namespace

TEST_CASE("replacement text form") {
    CHECK(EdgeReplacement::neutral().to_string() == "-");
    CHECK(EdgeReplacement::swap({2, 1}, {1, 3}).to_string() == "1 2 -> 1 3");
    CHECK_THROWS_AS(EdgeReplacement::swap({1, 2}, {2, 1}), Error);
}

TEST_CASE("cycles admit no swaps") {
    for (int n = 4; n <= 7; ++n) {
        auto rs = feasible_replacements(cycle_graph(n));
        REQUIRE(rs.size() == 1);
        CHECK(rs[0].is_neutral());
        if (n <= 6) CHECK(brute_force_replacements(cycle_graph(n)).size() == 1);
    }
}

TEST_CASE("complete graphs admit no swaps") {
    for (int n = 2; n <= 6; ++n) CHECK(feasible_replacements(complete_graph(n)).size() == 1);
}

TEST_CASE("the 3-path admits exactly two swaps") {
    auto rs = feasible_replacements(path_graph(3));
    REQUIRE(rs.size() == 3);
    CHECK(rs[0].is_neutral());
    CHECK(rs[1] == EdgeReplacement::swap({1, 2}, {1, 3}));
    CHECK(rs[2] == EdgeReplacement::swap({2, 3}, {1, 3}));
    CHECK(brute_force_replacements(path_graph(3)) == rs);
}

TEST_CASE("feasible_replacements matches brute force on random graphs") {
    std::mt19937 rng(61);
    for (int rep = 0; rep < 15; ++rep) {
        Graph g = oracle::random_graph(5, rng);
        CHECK(feasible_replacements(g) == brute_force_replacements(g));
    }
}

TEST_CASE("output is deterministic and duplicate-free") {
    Graph g = h_graph_direct(6);
    auto a = feasible_replacements(g);
    auto b = feasible_replacements(g);
    CHECK(a == b);
    for (std::size_t i = 1; i < a.size(); ++i)
        CHECK(std::pair{a[i - 1].removed, a[i - 1].added} < std::pair{a[i].removed, a[i].added});
}

TEST_CASE("replacements of a relabeled copy are the relabeled replacements") {
    // labels travel with the copy: the pair at ambient position p in the copy
    // carries the label rho(p), so pushing the copy's replacement list forward
    // through rho must reproduce the original list
    std::mt19937 rng(67);
    for (int rep = 0; rep < 10; ++rep) {
        Graph g = oracle::random_graph(6, rng);
        Permutation rho = oracle::random_permutation(6, rng);
        auto original = feasible_replacements(g);
        auto copy_list = feasible_replacements(g.relabeled_copy(rho));
        REQUIRE(original.size() == copy_list.size());
        std::vector<EdgeReplacement> translated;
        for (const auto& r : copy_list) {
            if (r.is_neutral())
                translated.push_back(r);
            else
                translated.push_back(EdgeReplacement::swap(
                    make_edge(rho.apply(r.removed.first), rho.apply(r.removed.second)),
                    make_edge(rho.apply(r.added.first), rho.apply(r.added.second))));
        }
        auto key = [](const EdgeReplacement& r) { return std::pair{r.removed, r.added}; };
        std::sort(translated.begin() + 1, translated.end(),
                  [&](const auto& a, const auto& b) { return key(a) < key(b); });
        CHECK(translated == original);
    }
}

TEST_CASE("atlas witnesses carry out their replacements exactly") {
    std::mt19937 rng(71);
    for (int rep = 0; rep < 12; ++rep) {
        Graph g = oracle::random_graph(6, rng);
        GeneratorAtlas atlas = generator_atlas(g);
        REQUIRE(atlas.replacements.size() == atlas.witnesses.size() + 1);
        for (std::size_t i = 1; i < atlas.replacements.size(); ++i) {
            const auto& r = atlas.replacements[i];
            Graph expected = g.minus_edge(r.removed).plus_edge(r.added);
            CHECK(g.relabeled_copy(atlas.witnesses[i - 1]) == expected);
        }
        for (const auto& a : atlas.aut_gens) CHECK(g.relabeled_copy(a) == g);
    }
}

TEST_CASE("atlas generators span the full replacement set") {
    // one witness per swap plus automorphism generators generate the same
    // group as the whole union of replacement cosets
    std::mt19937 rng(73);
    for (int rep = 0; rep < 10; ++rep) {
        Graph g = oracle::random_graph(5, rng);
        auto gens = generator_atlas(g).generator_list();
        auto full = oracle::brute_force_replacement_set(g);
        CHECK(oracle::brute_force_closure(gens, 5).size() ==
              oracle::brute_force_closure(full, 5).size());
    }
}

TEST_CASE("atlas examples") {
    GeneratorAtlas c4 = generator_atlas(cycle_graph(4));
    CHECK(c4.witnesses.empty());
    CHECK(oracle::brute_force_closure(c4.aut_gens, 4).size() == 8);

    CHECK(StabilizerChain(4, generator_atlas(path_graph(4)).generator_list()).order() == 24);

    GeneratorAtlas edgeless = generator_atlas(Graph(4, {}));
    CHECK(edgeless.replacements.size() == 1);
    CHECK(StabilizerChain(4, edgeless.generator_list()).order() == 24);
}

TEST_CASE("full coset of the neutral replacement is the automorphism group") {
    auto coset = full_replacement_coset(path_graph(3), EdgeReplacement::neutral());
    CHECK(coset == std::vector<Permutation>{Permutation::identity(3), Permutation({3, 2, 1})});
}

TEST_CASE("full coset of a swap, against exhaustive enumeration") {
    Graph p3 = path_graph(3);
    EdgeReplacement r = EdgeReplacement::swap({2, 3}, {1, 3});
    auto coset = full_replacement_coset(p3, r);
    // every permutation of S_3 whose copy equals the swapped graph
    Graph swapped = p3.minus_edge(r.removed).plus_edge(r.added);
    std::vector<Permutation> expected;
    for (const auto& s : oracle::all_permutations(3))
        if (p3.relabeled_copy(s) == swapped) expected.push_back(s);
    CHECK(coset == expected);
    CHECK(coset.size() == 2);
}

TEST_CASE("coset size equals the automorphism order for every swap") {
    std::mt19937 rng(79);
    for (int rep = 0; rep < 10; ++rep) {
        Graph g = oracle::random_graph(5, rng);
        auto aut_count = oracle::brute_force_automorphisms(g).size();
        for (const auto& r : feasible_replacements(g)) {
            auto coset = full_replacement_coset(g, r);
            CHECK(coset.size() == aut_count);
            // coset property: any two members differ by an automorphism
            for (const auto& s : coset) {
                Permutation d = compose(s, coset.front().inverse());
                CHECK(g.relabeled_copy(d) == g);
            }
        }
    }
}

TEST_CASE("infeasible replacements are rejected") {
    CHECK_THROWS_AS(full_replacement_coset(cycle_graph(4), EdgeReplacement::swap({1, 2}, {1, 3})),
                    Error);
    CHECK_THROWS_AS(full_replacement_coset(path_graph(20), EdgeReplacement::neutral()), Error);
}

TEST_CASE("replacement-set membership predicate") {
    Graph p3 = path_graph(3);
    CHECK(in_replacement_set(p3, Permutation::identity(3)));
    CHECK(in_replacement_set(p3, Permutation({3, 2, 1})));          // automorphism
    CHECK(in_replacement_set(p3, Permutation::transposition(3, 1, 2))); // one swap
    Graph c6 = cycle_graph(6);
    CHECK_FALSE(in_replacement_set(c6, Permutation::transposition(6, 1, 4)));
    CHECK(replacement_action(p3, Permutation::identity(3)) == std::nullopt);
    auto action = replacement_action(p3, Permutation::transposition(3, 1, 2));
    REQUIRE(action.has_value());
    CHECK(action->first == Edge{2, 3});
    CHECK(action->second == Edge{1, 3});
}
