#include "amoeba/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace amoeba {

namespace {

struct Adjacency {
    std::vector<std::vector<int>> nbr; // 1-indexed, sorted
    explicit Adjacency(const Graph& g) : nbr(static_cast<std::size_t>(g.order()) + 1) {
        for (const auto& e : g.edges()) {
            nbr[static_cast<std::size_t>(e.first)].push_back(e.second);
            nbr[static_cast<std::size_t>(e.second)].push_back(e.first);
        }
        for (auto& v : nbr) std::sort(v.begin(), v.end());
    }
    bool adjacent(int i, int j) const {
        const auto& v = nbr[static_cast<std::size_t>(i)];
        return std::binary_search(v.begin(), v.end(), j);
    }
};

// Joint color refinement of two graphs: colors are comparable across them.
// Starts from degrees and iterates (color, sorted neighbor colors) until stable.
struct Refinement {
    std::vector<int> color_g, color_h; // 1-indexed (slot 0 unused)
    int num_colors = 0;
    bool compatible = true; // same color class sizes in g and h

    Refinement(const Graph& g, const Graph& h, const Adjacency& ag, const Adjacency& ah) {
        const int ng = g.order(), nh = h.order();
        color_g.assign(static_cast<std::size_t>(ng) + 1, 0);
        color_h.assign(static_cast<std::size_t>(nh) + 1, 0);
        auto dg = g.degrees();
        auto dh = h.degrees();
        for (int i = 1; i <= ng; ++i) color_g[static_cast<std::size_t>(i)] = dg[static_cast<std::size_t>(i) - 1];
        for (int i = 1; i <= nh; ++i) color_h[static_cast<std::size_t>(i)] = dh[static_cast<std::size_t>(i) - 1];

        for (int round = 0; round < ng + 1; ++round) {
            using Key = std::pair<int, std::vector<int>>;
            std::map<Key, int> ids;
            auto key_of = [](int c, const std::vector<int>& nbrs, const std::vector<int>& colors) {
                std::vector<int> ncol;
                ncol.reserve(nbrs.size());
                for (int w : nbrs) ncol.push_back(colors[static_cast<std::size_t>(w)]);
                std::sort(ncol.begin(), ncol.end());
                return Key{c, std::move(ncol)};
            };
            std::vector<Key> kg(static_cast<std::size_t>(ng) + 1), kh(static_cast<std::size_t>(nh) + 1);
            for (int i = 1; i <= ng; ++i)
                kg[static_cast<std::size_t>(i)] = key_of(color_g[static_cast<std::size_t>(i)], ag.nbr[static_cast<std::size_t>(i)], color_g);
            for (int i = 1; i <= nh; ++i)
                kh[static_cast<std::size_t>(i)] = key_of(color_h[static_cast<std::size_t>(i)], ah.nbr[static_cast<std::size_t>(i)], color_h);
            for (int i = 1; i <= ng; ++i) ids.emplace(kg[static_cast<std::size_t>(i)], 0);
            for (int i = 1; i <= nh; ++i) ids.emplace(kh[static_cast<std::size_t>(i)], 0);
            int next = 0;
            for (auto& [k, id] : ids) id = next++;
            bool changed = false;
            for (int i = 1; i <= ng; ++i) {
                int c = ids[kg[static_cast<std::size_t>(i)]];
                if (c != color_g[static_cast<std::size_t>(i)]) changed = true;
                color_g[static_cast<std::size_t>(i)] = c;
            }
            for (int i = 1; i <= nh; ++i) {
                int c = ids[kh[static_cast<std::size_t>(i)]];
                if (c != color_h[static_cast<std::size_t>(i)]) changed = true;
                color_h[static_cast<std::size_t>(i)] = c;
            }
            num_colors = next;
            if (!changed) break;
        }

        std::map<int, int> cnt_g, cnt_h;
        for (int i = 1; i <= ng; ++i) ++cnt_g[color_g[static_cast<std::size_t>(i)]];
        for (int i = 1; i <= nh; ++i) ++cnt_h[color_h[static_cast<std::size_t>(i)]];
        compatible = (cnt_g == cnt_h);
    }
};

// Backtracking completion of a partial vertex map g -> h.
// partial[i] = image of i, or 0 when unassigned. Deterministic: vertices in
// ascending index order, candidates ascending.
class MatchSearch {
public:
    MatchSearch(const Graph& g, const Graph& h)
        : g_(g), h_(h), ag_(g), ah_(h), ref_(g, h, ag_, ah_) {}

    bool feasible() const {
        return g_.order() == h_.order() && g_.edge_count() == h_.edge_count() && ref_.compatible;
    }

    std::optional<Permutation> complete(std::vector<int> partial) {
        if (!feasible()) return std::nullopt;
        const int n = g_.order();
        map_ = std::move(partial);
        used_.assign(static_cast<std::size_t>(n) + 1, false);
        for (int i = 1; i <= n; ++i) {
            int v = map_[static_cast<std::size_t>(i)];
            if (v == 0) continue;
            if (used_[static_cast<std::size_t>(v)]) return std::nullopt;
            used_[static_cast<std::size_t>(v)] = true;
            if (!consistent(i, v, i)) return std::nullopt;
        }
        if (extend(1)) {
            std::vector<int> img(map_.begin() + 1, map_.end());
            return Permutation(std::move(img));
        }
        return std::nullopt;
    }

private:
    bool consistent(int u, int v, int limit) const {
        if (ref_.color_g[static_cast<std::size_t>(u)] != ref_.color_h[static_cast<std::size_t>(v)]) return false;
        for (int w = 1; w <= g_.order(); ++w) {
            if (w == u || w > limit) continue;
            int fw = map_[static_cast<std::size_t>(w)];
            if (fw == 0) continue;
            if (ag_.adjacent(u, w) != ah_.adjacent(v, fw)) return false;
        }
        return true;
    }

    bool extend(int u) {
        const int n = g_.order();
        while (u <= n && map_[static_cast<std::size_t>(u)] != 0) ++u;
        if (u > n) return true;
        for (int v = 1; v <= n; ++v) {
            if (used_[static_cast<std::size_t>(v)]) continue;
            if (!consistent(u, v, n)) continue;
            map_[static_cast<std::size_t>(u)] = v;
            used_[static_cast<std::size_t>(v)] = true;
            if (extend(u + 1)) return true;
            map_[static_cast<std::size_t>(u)] = 0;
            used_[static_cast<std::size_t>(v)] = false;
        }
        return false;
    }

    const Graph& g_;
    const Graph& h_;
    Adjacency ag_, ah_;
    Refinement ref_;
    std::vector<int> map_;
    std::vector<bool> used_;
};

} // namespace

std::optional<Permutation> find_isomorphism(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.edge_count() != h.edge_count()) return std::nullopt;
    MatchSearch search(g, h);
    return search.complete(std::vector<int>(static_cast<std::size_t>(g.order()) + 1, 0));
}

bool are_isomorphic(const Graph& g, const Graph& h) { return find_isomorphism(g, h).has_value(); }

std::vector<Permutation> automorphism_generators(const Graph& g) {
    const int n = g.order();
    std::vector<Permutation> gens;
    // Transversal generators along the base 1, 2, ..., n: for each level i, one
    // automorphism fixing 1..i-1 and sending i to q, for each reachable q > i.
    for (int i = 1; i <= n; ++i) {
        for (int q = i + 1; q <= n; ++q) {
            std::vector<int> partial(static_cast<std::size_t>(n) + 1, 0);
            for (int j = 1; j < i; ++j) partial[static_cast<std::size_t>(j)] = j;
            partial[static_cast<std::size_t>(i)] = q;
            MatchSearch search(g, g);
            if (auto sigma = search.complete(std::move(partial))) gens.push_back(*sigma);
        }
    }
    return gens;
}

mpz_class transversal_generator_order(int n, const std::vector<Permutation>& gens) {
    // At level i the orbit of i under the stabilizer of 1..i-1 consists of i
    // itself plus one point per generator whose first moved point is i.
    std::vector<int> per_level(static_cast<std::size_t>(n) + 1, 1);
    for (const auto& s : gens) {
        int level = 1;
        while (level <= n && s.fixes(level)) ++level;
        if (level <= n) ++per_level[static_cast<std::size_t>(level)];
    }
    mpz_class order = 1;
    for (int i = 1; i <= n; ++i) order *= per_level[static_cast<std::size_t>(i)];
    return order;
}

AutomorphismSet automorphisms(const Graph& g, int enum_bound, unsigned long list_cap) {
    const int n = g.order();
    AutomorphismSet result;
    result.generators = automorphism_generators(g);
    result.order = transversal_generator_order(n, result.generators);

    if (n > enum_bound || result.order > list_cap) {
        result.full = false;
        return result;
    }

    // Closure of the generators; small by the check above.
    std::set<Permutation> closure;
    std::vector<Permutation> frontier;
    closure.insert(Permutation::identity(n));
    frontier.push_back(Permutation::identity(n));
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& p : frontier) {
            for (const auto& s : result.generators) {
                Permutation q = compose(s, p);
                if (closure.insert(q).second) next.push_back(std::move(q));
            }
        }
        frontier = std::move(next);
    }
    result.elements.assign(closure.begin(), closure.end());
    if (mpz_class(static_cast<unsigned long>(result.elements.size())) != result.order)
        throw InconsistencyError("automorphism closure size disagrees with level-orbit order");
    return result;
}

} // namespace amoeba
