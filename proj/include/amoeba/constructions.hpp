#ifndef AMOEBA_CONSTRUCTIONS_HPP
#define AMOEBA_CONSTRUCTIONS_HPP

#include <vector>

#include "amoeba/graph.hpp"
#include "amoeba/permutation.hpp"

namespace amoeba {

Graph path_graph(int n);     // edges {i, i+1}
Graph cycle_graph(int n);    // n >= 3
Graph complete_graph(int n);
Graph star_graph(int n);     // center 1, leaves 2..n

// The dense amoeba family: independent set A = {1..q}, clique B = {q+1..n}
// with q = floor(n/2), and cross edges {i, q+j} exactly when j <= i.
Graph h_graph_direct(int n);
// Same family by the recursion: H_1 = K_1, H_n = complement(H_{n-1} + K_1).
Graph h_graph_recursive(int n);
// h_graph_direct(n) rooted at vertex n, which has degree floor(n/2) for n >= 2.
RootedGraph h_graph_rooted(int n);

// Fibonacci trees: T_1 = T_2 = K_2; T_{i+1} joins a maximum-degree vertex of a
// fresh copy of T_{i-1} to one of T_i by a new edge. Rooted at the unique
// maximum-degree vertex (lowest index on ties, which occur only for i <= 3).
RootedGraph fibonacci_tree(int i);

// Composition G *_I H: attach one copy of the rooted graph H at each vertex of
// G listed in I, the root identified with the attachment vertex. Blocks of new
// indices are consecutive ranges appended after [n], in the order of I, with
// within-block order inherited from H's index order.
struct CompositionLayout {
    int base_n = 0;
    std::vector<int> attach; // I, in the order given
    int m = 0;               // order of H
    int h_root = 0;
    std::vector<std::vector<int>> blocks; // blocks[l] = J_{attach[l]}, ascending

    int block_index_of(int attach_vertex) const; // position in attach, or -1
    // Translation bijection between two blocks (same within-block position).
    int translate(int from_block, int to_block, int ambient_index) const;
    // Ambient index of H-vertex hv inside copy l (root maps to attach[l]).
    int ambient_of(int block, int hv) const;
};

struct Composition {
    Graph graph; // the composed graph
    Graph base;  // G
    RootedGraph part; // H
    CompositionLayout layout;
};

Composition compose_graphs(const Graph& g, const RootedGraph& h, const std::vector<int>& attach);
Composition compose_all(const Graph& g, const RootedGraph& h); // I = [n]

// Iterated self-composition: first power is H itself, then repeated
// composition over all vertices. The root index carries over unchanged.
RootedGraph power_rooted(const RootedGraph& h, int k);
Graph power_graph(const RootedGraph& h, int k);

// Lift a replacement permutation of the induced subgraph on j1 to the whole
// graph, when the graph splits edge-wise over j1 and j2 and sigma fixes the
// overlap pointwise (sigma must also fix everything outside j1). Preconditions
// and the lifted permutation's membership in the ambient replacement set are
// verified; violations throw.
Permutation lift_subgraph_perm(const Graph& g, const std::vector<int>& j1,
                               const std::vector<int>& j2, const Permutation& sigma);

// Lift a replacement permutation of the base graph that stabilizes the
// attachment set to the composed graph, moving whole blocks by translation.
// Preconditions and ambient membership are verified; violations throw.
Permutation lift_composition_perm(const Composition& comp, const Permutation& sigma);

} // namespace amoeba

#endif // AMOEBA_CONSTRUCTIONS_HPP
