#include "amoeba/graph.hpp"

#include <algorithm>
#include <bit>

namespace amoeba {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 0) throw Error("vertex count must be nonnegative");
    for (auto& e : edges_) {
        if (e.first == e.second) throw Error("self-loop rejected");
        if (e.first > e.second) std::swap(e.first, e.second);
        if (e.first < 1 || e.second > n_)
            throw Error("edge endpoint out of range [1," + std::to_string(n_) + "]");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw Error("duplicate edge rejected");
}

bool Graph::has_edge(int i, int j) const {
    if (i == j) return false;
    return std::binary_search(edges_.begin(), edges_.end(), make_edge(i, j));
}

int Graph::degree(int i) const {
    if (i < 1 || i > n_) throw Error("vertex index out of range");
    int d = 0;
    for (const auto& e : edges_)
        if (e.first == i || e.second == i) ++d;
    return d;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> deg(static_cast<std::size_t>(n_), 0);
    for (const auto& e : edges_) {
        ++deg[static_cast<std::size_t>(e.first) - 1];
        ++deg[static_cast<std::size_t>(e.second) - 1];
    }
    return deg;
}

int Graph::min_degree() const {
    if (n_ == 0) throw Error("minimum degree of the empty vertex set");
    auto deg = degrees();
    return *std::min_element(deg.begin(), deg.end());
}

std::vector<int> Graph::degree_one_vertices() const {
    auto deg = degrees();
    std::vector<int> out;
    for (int i = 1; i <= n_; ++i)
        if (deg[static_cast<std::size_t>(i) - 1] == 1) out.push_back(i);
    return out;
}

Graph Graph::complement() const {
    std::vector<Edge> comp;
    for (int i = 1; i <= n_; ++i)
        for (int j = i + 1; j <= n_; ++j)
            if (!has_edge(i, j)) comp.push_back({i, j});
    return Graph(n_, std::move(comp));
}

Graph Graph::with_isolated(int t) const {
    if (t < 0) throw Error("cannot append a negative number of vertices");
    return Graph(n_ + t, edges_);
}

Graph Graph::plus_edge(Edge e) const {
    e = make_edge(e.first, e.second);
    if (has_edge(e.first, e.second)) throw Error("edge already present");
    auto es = edges_;
    es.push_back(e);
    return Graph(n_, std::move(es));
}

Graph Graph::minus_edge(Edge e) const {
    e = make_edge(e.first, e.second);
    auto es = edges_;
    auto it = std::find(es.begin(), es.end(), e);
    if (it == es.end()) throw Error("edge not present");
    es.erase(it);
    return Graph(n_, std::move(es));
}

Graph Graph::relabeled_copy(const Permutation& sigma) const {
    if (sigma.size() != n_) throw Error("permutation size does not match graph order");
    return mapped(sigma.inverse());
}

Graph Graph::mapped(const Permutation& f) const {
    if (f.size() != n_) throw Error("permutation size does not match graph order");
    std::vector<Edge> es;
    es.reserve(edges_.size());
    for (const auto& e : edges_) es.push_back(make_edge(f.apply(e.first), f.apply(e.second)));
    return Graph(n_, std::move(es));
}

Graph Graph::induced(const std::vector<int>& verts) const {
    std::vector<int> vs = verts;
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    if (vs.size() != verts.size()) throw Error("induced: duplicate vertices");
    std::vector<int> pos(static_cast<std::size_t>(n_) + 1, 0);
    for (std::size_t k = 0; k < vs.size(); ++k) {
        if (vs[k] < 1 || vs[k] > n_) throw Error("induced: vertex out of range");
        pos[static_cast<std::size_t>(vs[k])] = static_cast<int>(k) + 1;
    }
    std::vector<Edge> es;
    for (const auto& e : edges_) {
        int a = pos[static_cast<std::size_t>(e.first)];
        int b = pos[static_cast<std::size_t>(e.second)];
        if (a && b) es.push_back(make_edge(a, b));
    }
    return Graph(static_cast<int>(vs.size()), std::move(es));
}

std::vector<std::uint64_t> Graph::adjacency_masks() const {
    if (n_ > 64) throw Error("adjacency masks limited to 64 vertices");
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n_), 0);
    for (const auto& e : edges_) {
        rows[static_cast<std::size_t>(e.first) - 1] |= std::uint64_t{1} << (e.second - 1);
        rows[static_cast<std::size_t>(e.second) - 1] |= std::uint64_t{1} << (e.first - 1);
    }
    return rows;
}

RootedGraph::RootedGraph(Graph g, int r) : graph(std::move(g)), root(r) {
    if (root < 1 || root > graph.order()) throw Error("root index out of range");
}

namespace {

// Greedy coloring bound on the candidate set; classic max-clique pruning.
int color_bound(const std::vector<std::uint64_t>& adj, std::uint64_t cand) {
    int colors = 0;
    while (cand) {
        ++colors;
        std::uint64_t cls = cand;
        while (cls) {
            int v = std::countr_zero(cls);
            cls &= ~(std::uint64_t{1} << v);
            cand &= ~(std::uint64_t{1} << v);
            cls &= ~adj[static_cast<std::size_t>(v)];
        }
    }
    return colors;
}

void expand_clique(const std::vector<std::uint64_t>& adj, std::uint64_t cand, int size, int& best) {
    if (size > best) best = size;
    if (!cand || size + color_bound(adj, cand) <= best) return;
    std::uint64_t work = cand;
    while (work) {
        if (size + std::popcount(work) <= best) return;
        int v = std::countr_zero(work);
        work &= ~(std::uint64_t{1} << v);
        expand_clique(adj, work & adj[static_cast<std::size_t>(v)], size + 1, best);
    }
}

} // namespace

int clique_number(const Graph& g) {
    if (g.order() < 1) throw Error("clique number needs at least one vertex");
    if (g.order() > 32) throw Error("clique number limited to 32 vertices");
    auto adj = g.adjacency_masks();
    int best = 0;
    std::uint64_t all = g.order() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.order()) - 1;
    expand_clique(adj, all, 0, best);
    return best;
}

} // namespace amoeba
