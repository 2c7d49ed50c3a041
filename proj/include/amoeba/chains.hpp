#ifndef AMOEBA_CHAINS_HPP
#define AMOEBA_CHAINS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "amoeba/graph.hpp"
#include "amoeba/permutation.hpp"

namespace amoeba {

// One feasible edge-replacement applied to the current embedded copy, ambient
// (actual vertex pair) coordinates. Both absent = neutral step.
struct AmbientStep {
    std::optional<Edge> removed;
    std::optional<Edge> added;
    std::vector<Edge> resulting_edges;
};

struct MorphChain {
    Graph start;
    std::vector<AmbientStep> steps;
    Permutation target; // final edge set must equal the copy given by target
};

struct MorphTraceEntry {
    int generator = 0; // index into the atlas generator list
    int exponent = 1;
    bool neutral = false; // automorphism factor: no ambient step emitted
};

struct MorphResult {
    MorphChain chain;
    std::vector<MorphTraceEntry> trace; // includes neutral factors
};

// Chain of feasible edge-replacements from g (plus `slack` isolated vertices)
// to the target copy. The target is factorized through the stabilizer chain of
// the replacement group; throws UnreachableCopyError with the order/orbit
// certificate when the target is not in the group.
MorphResult morph(const Graph& g, const Permutation& target, int slack = 0);

struct ChainValidation {
    bool ok = true;
    int failed_step = -1; // 0-based; steps.size() marks the final-copy check
    std::string reason;
};

// Re-derives every chain invariant from scratch: single-edge deltas,
// isomorphism of each intermediate with the start graph, and the final edge
// set against the target copy. Independent of how the chain was produced.
ChainValidation validate_chain(const MorphChain& chain);

struct ReachabilitySummary {
    std::uint64_t reachable_copies = 0;
    std::uint64_t total_copies = 0;
    bool all_reachable = false;
};

// Brute-force breadth-first search over the embedded copies of g inside the
// complete graph, moving by single feasible edge-replacements. Oracle-grade:
// uses only edge-set enumeration, no permutation-group machinery.
ReachabilitySummary copy_graph_bfs(const Graph& g, std::uint64_t max_states = 1u << 20);

} // namespace amoeba

#endif // AMOEBA_CHAINS_HPP
