#include "amoeba/constructions.hpp"

#include <algorithm>

#include "amoeba/replacement.hpp"

namespace amoeba {

Graph path_graph(int n) {
    if (n < 1) throw Error("path needs at least one vertex");
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
    return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
    if (n < 3) throw Error("cycle needs at least three vertices");
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
    edges.push_back({1, n});
    return Graph(n, std::move(edges));
}

Graph complete_graph(int n) {
    if (n < 1) throw Error("complete graph needs at least one vertex");
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) edges.push_back({i, j});
    return Graph(n, std::move(edges));
}

Graph star_graph(int n) {
    if (n < 1) throw Error("star needs at least one vertex");
    std::vector<Edge> edges;
    for (int j = 2; j <= n; ++j) edges.push_back({1, j});
    return Graph(n, std::move(edges));
}

Graph h_graph_direct(int n) {
    if (n < 1) throw Error("H_n needs at least one vertex");
    const int q = n / 2;
    std::vector<Edge> edges;
    // B = {q+1..n} is a clique
    for (int a = q + 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) edges.push_back({a, b});
    // cross edges: {i, q+j} iff j <= i
    for (int i = 1; i <= q; ++i)
        for (int j = 1; j <= i && q + j <= n; ++j) edges.push_back({i, q + j});
    return Graph(n, std::move(edges));
}

Graph h_graph_recursive(int n) {
    if (n < 1) throw Error("H_n needs at least one vertex");
    Graph h(1, {});
    for (int k = 2; k <= n; ++k) h = h.with_isolated(1).complement();
    return h;
}

RootedGraph h_graph_rooted(int n) { return RootedGraph(h_graph_direct(n), n); }

RootedGraph fibonacci_tree(int i) {
    if (i < 1) throw Error("Fibonacci tree index must be positive");
    std::vector<Graph> trees;
    trees.push_back(path_graph(2)); // T_1
    trees.push_back(path_graph(2)); // T_2
    for (int k = 3; k <= i; ++k) {
        const Graph& older = trees[static_cast<std::size_t>(k) - 3]; // T_{k-2}
        const Graph& newer = trees[static_cast<std::size_t>(k) - 2]; // T_{k-1}
        const int shift = older.order();
        std::vector<Edge> edges = older.edges();
        for (const Edge& e : newer.edges()) edges.push_back({e.first + shift, e.second + shift});
        Graph joined(older.order() + newer.order(), std::move(edges));
        auto max_degree_vertex = [](const Graph& t, int offset) {
            auto deg = t.degrees();
            int best = 1;
            for (int v = 2; v <= t.order(); ++v)
                if (deg[static_cast<std::size_t>(v) - 1] > deg[static_cast<std::size_t>(best) - 1]) best = v;
            return best + offset;
        };
        int a = max_degree_vertex(older, 0);
        int b = max_degree_vertex(newer, shift);
        trees.push_back(joined.plus_edge({a, b}));
    }
    const Graph& t = trees[static_cast<std::size_t>(i) - 1];
    auto deg = t.degrees();
    int root = 1;
    for (int v = 2; v <= t.order(); ++v)
        if (deg[static_cast<std::size_t>(v) - 1] > deg[static_cast<std::size_t>(root) - 1]) root = v;
    return RootedGraph(t, root);
}

int CompositionLayout::block_index_of(int attach_vertex) const {
    for (std::size_t l = 0; l < attach.size(); ++l)
        if (attach[l] == attach_vertex) return static_cast<int>(l);
    return -1;
}

int CompositionLayout::translate(int from_block, int to_block, int ambient_index) const {
    const auto& from = blocks[static_cast<std::size_t>(from_block)];
    const auto& to = blocks[static_cast<std::size_t>(to_block)];
    auto it = std::find(from.begin(), from.end(), ambient_index);
    if (it == from.end()) throw Error("index not in source block");
    return to[static_cast<std::size_t>(it - from.begin())];
}

int CompositionLayout::ambient_of(int block, int hv) const {
    if (hv == h_root) return attach[static_cast<std::size_t>(block)];
    // non-root H vertices in ascending index order fill the block in order
    int pos = hv - 1 - (hv > h_root ? 1 : 0);
    return blocks[static_cast<std::size_t>(block)][static_cast<std::size_t>(pos)];
}

Composition compose_graphs(const Graph& g, const RootedGraph& h, const std::vector<int>& attach) {
    if (attach.empty()) throw Error("composition needs a non-empty attachment set");
    {
        std::vector<int> sorted = attach;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw Error("attachment set has duplicates");
        if (sorted.front() < 1 || sorted.back() > g.order())
            throw Error("attachment vertex out of range");
    }
    const int n = g.order();
    const int m = h.graph.order();
    const int k = static_cast<int>(attach.size());
    const int block_size = m - 1;

    Composition comp;
    comp.base = g;
    comp.part = h;
    comp.layout.base_n = n;
    comp.layout.attach = attach;
    comp.layout.m = m;
    comp.layout.h_root = h.root;
    for (int l = 0; l < k; ++l) {
        std::vector<int> block;
        for (int t = 1; t <= block_size; ++t) block.push_back(n + l * block_size + t);
        comp.layout.blocks.push_back(std::move(block));
    }

    std::vector<Edge> edges = g.edges();
    for (int l = 0; l < k; ++l)
        for (const Edge& e : h.graph.edges())
            edges.push_back(make_edge(comp.layout.ambient_of(l, e.first),
                                      comp.layout.ambient_of(l, e.second)));
    comp.graph = Graph(n + k * block_size, std::move(edges));
    return comp;
}

Composition compose_all(const Graph& g, const RootedGraph& h) {
    std::vector<int> all(static_cast<std::size_t>(g.order()));
    for (int i = 1; i <= g.order(); ++i) all[static_cast<std::size_t>(i) - 1] = i;
    return compose_graphs(g, h, all);
}

RootedGraph power_rooted(const RootedGraph& h, int k) {
    if (k < 1) throw Error("power exponent must be positive");
    Graph acc = h.graph;
    for (int t = 2; t <= k; ++t) acc = compose_all(acc, h).graph;
    return RootedGraph(acc, h.root);
}

Graph power_graph(const RootedGraph& h, int k) { return power_rooted(h, k).graph; }

namespace {

// Restriction of sigma to the sorted vertex list, re-indexed to 1..|verts|.
// Requires sigma to map the set onto itself.
Permutation restrict_to(const Permutation& sigma, const std::vector<int>& verts) {
    std::vector<int> sorted = verts;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> img(sorted.size());
    for (std::size_t p = 0; p < sorted.size(); ++p) {
        int image = sigma.apply(sorted[p]);
        auto it = std::lower_bound(sorted.begin(), sorted.end(), image);
        if (it == sorted.end() || *it != image)
            throw Error("permutation does not stabilize the vertex set");
        img[p] = static_cast<int>(it - sorted.begin()) + 1;
    }
    return Permutation(std::move(img));
}

} // namespace

Permutation lift_subgraph_perm(const Graph& g, const std::vector<int>& j1,
                               const std::vector<int>& j2, const Permutation& sigma) {
    const int n = g.order();
    if (sigma.size() != n) throw Error("lift: permutation degree mismatch");

    std::vector<bool> in1(static_cast<std::size_t>(n) + 1, false);
    std::vector<bool> in2(static_cast<std::size_t>(n) + 1, false);
    for (int v : j1) {
        if (v < 1 || v > n) throw Error("lift: vertex out of range in first part");
        in1[static_cast<std::size_t>(v)] = true;
    }
    for (int v : j2) {
        if (v < 1 || v > n) throw Error("lift: vertex out of range in second part");
        in2[static_cast<std::size_t>(v)] = true;
    }
    for (int v = 1; v <= n; ++v)
        if (!in1[static_cast<std::size_t>(v)] && !in2[static_cast<std::size_t>(v)])
            throw Error("lift: parts do not cover the vertex set");
    // every edge must live inside one of the parts
    for (const Edge& e : g.edges()) {
        bool inside1 = in1[static_cast<std::size_t>(e.first)] && in1[static_cast<std::size_t>(e.second)];
        bool inside2 = in2[static_cast<std::size_t>(e.first)] && in2[static_cast<std::size_t>(e.second)];
        if (!inside1 && !inside2)
            throw Error("lift: edge crosses the parts without lying in either");
    }
    for (int v = 1; v <= n; ++v) {
        bool overlap = in1[static_cast<std::size_t>(v)] && in2[static_cast<std::size_t>(v)];
        if (overlap && !sigma.fixes(v))
            throw Error("lift: permutation moves an overlap vertex");
        if (!in1[static_cast<std::size_t>(v)] && !sigma.fixes(v))
            throw Error("lift: permutation moves a vertex outside the first part");
    }
    Permutation restricted = restrict_to(sigma, j1);
    if (!in_replacement_set(g.induced(j1), restricted))
        throw Error("lift: permutation is not a replacement permutation of the first part");

    // sigma already acts as required: identity outside j1, sigma on j1.
    if (!in_replacement_set(g, sigma))
        throw InconsistencyError("lifted permutation fell outside the ambient replacement set");
    return sigma;
}

Permutation lift_composition_perm(const Composition& comp, const Permutation& sigma) {
    const CompositionLayout& lay = comp.layout;
    if (sigma.size() != lay.base_n) throw Error("lift: permutation degree mismatch");
    if (!in_replacement_set(comp.base, sigma))
        throw Error("lift: permutation is not a replacement permutation of the base graph");
    if (!sigma.stabilizes_setwise(lay.attach))
        throw Error("lift: permutation does not stabilize the attachment set");

    const int N = comp.graph.order();
    std::vector<int> img(static_cast<std::size_t>(N));
    for (int i = 1; i <= lay.base_n; ++i) img[static_cast<std::size_t>(i) - 1] = sigma.apply(i);
    for (std::size_t l = 0; l < lay.blocks.size(); ++l) {
        int target_attach = sigma.apply(lay.attach[l]);
        int tl = lay.block_index_of(target_attach);
        if (tl < 0) throw InconsistencyError("attachment image is not an attachment vertex");
        for (int idx : lay.blocks[l])
            img[static_cast<std::size_t>(idx) - 1] = lay.translate(static_cast<int>(l), tl, idx);
    }
    Permutation lifted(std::move(img));
    if (!in_replacement_set(comp.graph, lifted))
        throw InconsistencyError("lifted permutation fell outside the composed replacement set");
    return lifted;
}

} // namespace amoeba
