#ifndef AMOEBA_ISOMORPHISM_HPP
#define AMOEBA_ISOMORPHISM_HPP

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "amoeba/graph.hpp"
#include "amoeba/permutation.hpp"

namespace amoeba {

// One isomorphism f with f applied to g's edge labels giving exactly h's edge
// set, or absent. Plain color-refinement plus backtracking; first hit under a
// deterministic search order.
std::optional<Permutation> find_isomorphism(const Graph& g, const Graph& h);

bool are_isomorphic(const Graph& g, const Graph& h);

struct AutomorphismSet {
    bool full = true;                    // false: elements omitted, generators only
    std::vector<Permutation> elements;   // when full; contains the identity
    std::vector<Permutation> generators; // transversal generators, base 1..n
    mpz_class order;
};

// Automorphisms of the labeled graph: all sigma with sigma applied to E(g)
// reproducing E(g). The full element list is materialized when n <= enum_bound
// and the group order is at most list_cap; otherwise only generators, flagged.
AutomorphismSet automorphisms(const Graph& g, int enum_bound = 16,
                              unsigned long list_cap = 500000);

// The generator set alone (cheap; no element enumeration).
std::vector<Permutation> automorphism_generators(const Graph& g);

// Group order for a generator set of the shape automorphism_generators
// returns: one transversal element per orbit point along the base 1..n.
mpz_class transversal_generator_order(int n, const std::vector<Permutation>& gens);

} // namespace amoeba

#endif // AMOEBA_ISOMORPHISM_HPP
