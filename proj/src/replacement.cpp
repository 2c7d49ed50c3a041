#include "amoeba/replacement.hpp"

#include <algorithm>
#include <iterator>

namespace amoeba {

EdgeReplacement EdgeReplacement::swap(Edge removed, Edge added) {
    EdgeReplacement r;
    r.kind = Kind::Swap;
    r.removed = make_edge(removed.first, removed.second);
    r.added = make_edge(added.first, added.second);
    if (r.removed == r.added) throw Error("swap must replace an edge by a different pair");
    return r;
}

std::string EdgeReplacement::to_string() const {
    if (is_neutral()) return "-";
    return std::to_string(removed.first) + " " + std::to_string(removed.second) + " -> " +
           std::to_string(added.first) + " " + std::to_string(added.second);
}

namespace {

// Degree multisets of g and g - removed + added must match for feasibility;
// O(n) reject before the full search.
bool degree_prefilter(std::vector<int> degrees, Edge removed, Edge added) {
    std::vector<int> after = degrees;
    --after[static_cast<std::size_t>(removed.first) - 1];
    --after[static_cast<std::size_t>(removed.second) - 1];
    ++after[static_cast<std::size_t>(added.first) - 1];
    ++after[static_cast<std::size_t>(added.second) - 1];
    std::sort(degrees.begin(), degrees.end());
    std::sort(after.begin(), after.end());
    return degrees == after;
}

} // namespace

std::vector<EdgeReplacement> feasible_replacements(const Graph& g) {
    std::vector<EdgeReplacement> out;
    out.push_back(EdgeReplacement::neutral());
    const Graph comp = g.complement();
    const auto deg = g.degrees();
    for (const Edge& e : g.edges()) {
        for (const Edge& f : comp.edges()) {
            if (!degree_prefilter(deg, e, f)) continue;
            Graph swapped = g.minus_edge(e).plus_edge(f);
            if (are_isomorphic(g, swapped)) out.push_back(EdgeReplacement::swap(e, f));
        }
    }
    return out;
}

GeneratorAtlas generator_atlas(const Graph& g) {
    GeneratorAtlas atlas;
    atlas.graph = g;
    atlas.replacements.push_back(EdgeReplacement::neutral());
    atlas.aut_gens = automorphism_generators(g);
    const Graph comp = g.complement();
    const auto deg = g.degrees();
    for (const Edge& e : g.edges()) {
        for (const Edge& f : comp.edges()) {
            if (!degree_prefilter(deg, e, f)) continue;
            Graph swapped = g.minus_edge(e).plus_edge(f);
            auto iso = find_isomorphism(g, swapped);
            if (!iso) continue;
            atlas.replacements.push_back(EdgeReplacement::swap(e, f));
            // iso maps edge labels of g onto the swapped graph; the associated
            // replacement permutation is its inverse, so that the relabeled
            // copy of g equals the swapped graph exactly.
            atlas.witnesses.push_back(iso->inverse());
        }
    }
    return atlas;
}

std::vector<Permutation> GeneratorAtlas::generator_list() const {
    std::vector<Permutation> gens = aut_gens;
    gens.insert(gens.end(), witnesses.begin(), witnesses.end());
    if (gens.empty()) gens.push_back(Permutation::identity(graph.order()));
    return gens;
}

std::vector<Permutation> full_replacement_coset(const Graph& g, const EdgeReplacement& r,
                                                int enum_bound) {
    if (g.order() > enum_bound)
        throw Error("full coset enumeration limited to " + std::to_string(enum_bound) + " vertices");
    AutomorphismSet aut = automorphisms(g, enum_bound);
    if (!aut.full) throw Error("automorphism group too large to enumerate");
    if (r.is_neutral()) return aut.elements;

    if (!g.has_edge(r.removed.first, r.removed.second) ||
        g.has_edge(r.added.first, r.added.second) || r.removed == r.added)
        throw Error("infeasible replacement: " + r.to_string());
    Graph swapped = g.minus_edge(r.removed).plus_edge(r.added);
    auto iso = find_isomorphism(g, swapped);
    if (!iso) throw Error("infeasible replacement: " + r.to_string());
    Permutation witness = iso->inverse();

    // The coset is the set of automorphism left translates of any witness.
    std::vector<Permutation> coset;
    coset.reserve(aut.elements.size());
    for (const auto& a : aut.elements) coset.push_back(compose(a, witness));
    std::sort(coset.begin(), coset.end());
    return coset;
}

namespace {

std::pair<std::vector<Edge>, std::vector<Edge>> edge_delta(const Graph& g, const Permutation& sigma) {
    Graph copy = g.relabeled_copy(sigma);
    std::vector<Edge> removed, added;
    std::set_difference(g.edges().begin(), g.edges().end(), copy.edges().begin(),
                        copy.edges().end(), std::back_inserter(removed));
    std::set_difference(copy.edges().begin(), copy.edges().end(), g.edges().begin(),
                        g.edges().end(), std::back_inserter(added));
    return {std::move(removed), std::move(added)};
}

} // namespace

bool in_replacement_set(const Graph& g, const Permutation& sigma) {
    auto [removed, added] = edge_delta(g, sigma);
    return removed.size() == added.size() && removed.size() <= 1;
}

std::optional<std::pair<Edge, Edge>> replacement_action(const Graph& g, const Permutation& sigma) {
    auto [removed, added] = edge_delta(g, sigma);
    if (removed.empty() && added.empty()) return std::nullopt;
    if (removed.size() == 1 && added.size() == 1) return std::make_pair(removed[0], added[0]);
    throw Error("permutation moves more than one edge");
}

} // namespace amoeba
