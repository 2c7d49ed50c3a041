#ifndef AMOEBA_GRAPH_HPP
#define AMOEBA_GRAPH_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "amoeba/errors.hpp"
#include "amoeba/permutation.hpp"

namespace amoeba {

using Edge = std::pair<int, int>; // normalized: first < second, 1-indexed

inline Edge make_edge(int a, int b) {
    if (a == b) throw Error("self-loop rejected");
    return a < b ? Edge{a, b} : Edge{b, a};
}

// Simple undirected graph on vertices {1..n}. The edge set is kept sorted and
// duplicate-free, so operator== is set equality of labeled edge sets.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges);

    int order() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_edge(int i, int j) const;
    int degree(int i) const;
    std::vector<int> degrees() const; // degrees()[i-1] = deg(v_i)
    int min_degree() const;          // 0 for edgeless; error on n = 0
    std::vector<int> degree_one_vertices() const;

    Graph complement() const;
    Graph with_isolated(int t) const; // G. union of t isolated vertices appended

    Graph plus_edge(Edge e) const;
    Graph minus_edge(Edge e) const;

    // The labeled copy G_sigma: edge {i,j} contributes {sigma^-1(i), sigma^-1(j)}.
    // Performing a replacement with associated permutation a on the copy given by
    // b yields the copy given by compose(a, b).
    Graph relabeled_copy(const Permutation& sigma) const;

    // Pushforward by a vertex map: edge {i,j} contributes {f(i), f(j)}.
    // relabeled_copy(sigma) == mapped(sigma.inverse()).
    Graph mapped(const Permutation& f) const;

    // Induced subgraph on the given vertices, re-indexed to 1..k in the order
    // given by the ascending sort of verts.
    Graph induced(const std::vector<int>& verts) const;

    // Row bitmasks, index 0-based: bit (j-1) of row (i-1) set iff {i,j} in E.
    // Requires n <= 64.
    std::vector<std::uint64_t> adjacency_masks() const;

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
};

struct RootedGraph {
    Graph graph;
    int root = 1;

    RootedGraph() = default;
    RootedGraph(Graph g, int r);
};

// Exact maximum clique size via branch and bound with a coloring bound.
// Intended scale: n <= 32.
int clique_number(const Graph& g);

} // namespace amoeba

#endif // AMOEBA_GRAPH_HPP
