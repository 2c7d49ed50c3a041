#ifndef AMOEBA_REPLACEMENT_HPP
#define AMOEBA_REPLACEMENT_HPP

#include <optional>
#include <string>
#include <vector>

#include "amoeba/graph.hpp"
#include "amoeba/isomorphism.hpp"
#include "amoeba/permutation.hpp"

namespace amoeba {

// A feasible edge-replacement: either the neutral replacement (nothing moves)
// or a swap removing an edge and adding a non-edge such that the result is
// isomorphic to the original graph.
struct EdgeReplacement {
    enum class Kind { Neutral, Swap } kind = Kind::Neutral;
    Edge removed{0, 0}; // valid for Swap
    Edge added{0, 0};   // valid for Swap

    static EdgeReplacement neutral() { return {}; }
    static EdgeReplacement swap(Edge removed, Edge added);

    bool is_neutral() const { return kind == Kind::Neutral; }
    std::string to_string() const; // "1 2 -> 1 3", neutral prints "-"

    bool operator==(const EdgeReplacement&) const = default;
};

// One witness permutation per feasible swap plus automorphism generators for
// the neutral entry. The group generated by witnesses + aut_gens equals the
// group generated by the full union of replacement cosets, since each coset is
// a left translate of the automorphism group.
struct GeneratorAtlas {
    Graph graph;
    std::vector<EdgeReplacement> replacements; // [0] = neutral, then swaps in lex order
    std::vector<Permutation> witnesses;        // aligned with replacements[1..]
    std::vector<Permutation> aut_gens;

    // Deterministic generator list for group construction: aut_gens first, then
    // swap witnesses in replacement order.
    std::vector<Permutation> generator_list() const;
};

// All feasible edge-replacements, neutral first, swaps lexicographic by
// (removed, added). Deterministic and duplicate-free.
std::vector<EdgeReplacement> feasible_replacements(const Graph& g);

GeneratorAtlas generator_atlas(const Graph& g);

// The complete permutation coset of a feasible replacement: every sigma whose
// relabeled copy of g equals g with the swap applied. Needs the full
// automorphism element list; enumeration bound applies.
std::vector<Permutation> full_replacement_coset(const Graph& g, const EdgeReplacement& r,
                                                int enum_bound = 12);

// Membership in the generating set of replacement permutations: the relabeled
// copy differs from g by no edge at all or by exactly one removed/added pair.
bool in_replacement_set(const Graph& g, const Permutation& sigma);

// The single edge swap carried out by sigma, when in_replacement_set holds;
// nullopt for automorphisms. Throws if sigma moves more than one edge.
std::optional<std::pair<Edge, Edge>> replacement_action(const Graph& g, const Permutation& sigma);

} // namespace amoeba

#endif // AMOEBA_REPLACEMENT_HPP
