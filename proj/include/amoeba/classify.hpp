#ifndef AMOEBA_CLASSIFY_HPP
#define AMOEBA_CLASSIFY_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "amoeba/graph.hpp"
#include "amoeba/replacement.hpp"
#include "amoeba/stabilizer_chain.hpp"

namespace amoeba {

// Verdicts with enough certificate data to recheck them: generator set,
// orbits, exact group orders.
struct ClassificationReport {
    int n = 0;
    int e = 0;
    std::vector<Edge> edges;
    mpz_class aut_order;
    mpz_class sg_order; // order of the group generated by replacement permutations
    bool is_local = false;
    bool is_global = false;
    // "orbit-pendant": every orbit meets a degree-1 index.
    // "append-isolated-local": the graph plus one isolated vertex is local.
    // "definition-direct": edgeless degenerate case.
    std::string global_method;
    std::vector<std::vector<int>> orbits; // sorted by smallest element
    std::vector<int> degree_one_indices;
    bool degenerate = false;             // edgeless input
    std::size_t replacement_count = 0;   // feasible replacements incl. neutral
    std::vector<Permutation> sg_generators; // aut gens then swap witnesses
};

struct ClassifyOptions {
    // Also evaluate the append-one-isolated-vertex route and require agreement
    // with the orbit-pendant verdict.
    bool cross_check_global = false;
};

ClassificationReport classify(const Graph& g, const ClassifyOptions& options = {});

bool is_local_amoeba(const Graph& g);
bool is_global_amoeba(const Graph& g);

// Both global-amoeba criteria evaluated independently, with the minimum-degree
// corollaries asserted. Throws InconsistencyError if anything disagrees.
struct ConsistencyRecord {
    bool orbit_pendant_verdict = false;
    bool append_isolated_verdict = false;
    bool is_local = false;
    int min_degree = 0;
    bool agree = false;
};
ConsistencyRecord check_equivalences(const Graph& g);

// Vertices in the automorphism orbit of the root, other than the root.
std::vector<int> root_similar_vertices(const RootedGraph& g);

// True iff the stabilizer of the root inside the replacement group acts
// transitively on the remaining indices.
bool is_stem_transitive(const RootedGraph& g);

// Minimum degree 1, stem-transitive, and a root-similar vertex exists;
// with require_local also the local-amoeba property.
bool is_double_rooted(const RootedGraph& g, bool require_local);

} // namespace amoeba

#endif // AMOEBA_CLASSIFY_HPP
