#include "amoeba/classify.hpp"

#include <algorithm>

namespace amoeba {

namespace {

mpz_class factorial(int n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

bool every_orbit_meets_degree_one(const std::vector<std::vector<int>>& orbits,
                                  const std::vector<int>& degree_one) {
    for (const auto& orbit : orbits) {
        bool hit = false;
        for (int x : orbit) {
            if (std::binary_search(degree_one.begin(), degree_one.end(), x)) {
                hit = true;
                break;
            }
        }
        if (!hit) return false;
    }
    return true;
}

} // namespace

ClassificationReport classify(const Graph& g, const ClassifyOptions& options) {
    if (g.order() < 1) throw Error("classification needs at least one vertex");
    ClassificationReport report;
    report.n = g.order();
    report.e = g.edge_count();
    report.edges = g.edges();
    report.degenerate = (report.e == 0);

    GeneratorAtlas atlas = generator_atlas(g);
    report.replacement_count = atlas.replacements.size();
    report.sg_generators = atlas.generator_list();
    report.aut_order = transversal_generator_order(report.n, atlas.aut_gens);
    report.degree_one_indices = g.degree_one_vertices();
    report.orbits = orbit_partition(report.sg_generators, report.n);

    StabilizerChain chain(report.n, report.sg_generators);
    report.sg_order = chain.order();
    report.is_local = (report.sg_order == factorial(report.n));

    if (report.degenerate) {
        // The finite criteria assume a non-empty graph. Appending isolated
        // vertices to an edgeless graph keeps it edgeless, and every edgeless
        // graph is local, so it is global outright.
        report.is_global = true;
        report.global_method = "definition-direct";
        return report;
    }

    report.is_global = every_orbit_meets_degree_one(report.orbits, report.degree_one_indices);
    report.global_method = "orbit-pendant";

    if (options.cross_check_global) {
        bool via_union = classify(g.with_isolated(1)).is_local;
        if (via_union != report.is_global)
            throw InconsistencyError("global-amoeba criteria disagree (orbit-pendant vs append-isolated)");
        report.global_method = "orbit-pendant+append-isolated-local";
    }
    return report;
}

bool is_local_amoeba(const Graph& g) { return classify(g).is_local; }

bool is_global_amoeba(const Graph& g) {
    // Orbit route only: no group order needed, so no stabilizer chain.
    if (g.order() < 1) throw Error("classification needs at least one vertex");
    if (g.edge_count() == 0) return true;
    GeneratorAtlas atlas = generator_atlas(g);
    auto orbits = orbit_partition(atlas.generator_list(), g.order());
    std::vector<int> pendants = g.degree_one_vertices();
    return every_orbit_meets_degree_one(orbits, pendants);
}

ConsistencyRecord check_equivalences(const Graph& g) {
    if (g.edge_count() == 0) throw Error("equivalence check defined for non-empty graphs");
    ConsistencyRecord record;

    ClassificationReport base = classify(g);
    record.orbit_pendant_verdict = base.is_global;
    record.is_local = base.is_local;
    record.min_degree = g.min_degree();

    record.append_isolated_verdict = classify(g.with_isolated(1)).is_local;
    record.agree = (record.orbit_pendant_verdict == record.append_isolated_verdict);
    if (!record.agree)
        throw InconsistencyError("global-amoeba criteria disagree on a non-empty graph");

    if (record.min_degree == 1 && record.is_local && !record.orbit_pendant_verdict)
        throw InconsistencyError("minimum degree 1 local amoeba failed the global criterion");
    if (record.min_degree == 0 && record.is_local != record.orbit_pendant_verdict)
        throw InconsistencyError("minimum degree 0: local and global verdicts must coincide");
    return record;
}

std::vector<int> root_similar_vertices(const RootedGraph& g) {
    auto gens = automorphism_generators(g.graph);
    auto orbit = orbit_of(g.root, gens, g.graph.order());
    std::vector<int> out;
    for (int x : orbit)
        if (x != g.root) out.push_back(x);
    return out;
}

bool is_stem_transitive(const RootedGraph& g) {
    const int n = g.graph.order();
    if (n < 2) throw Error("stem-transitivity needs at least two vertices");
    GeneratorAtlas atlas = generator_atlas(g.graph);
    StabilizerChain chain(n, atlas.generator_list(), {g.root});
    auto stab = chain.first_point_stabilizer_generators();
    // One orbit covering all of [n] minus the root.
    int probe = (g.root == 1) ? 2 : 1;
    return static_cast<int>(orbit_of(probe, stab, n).size()) == n - 1;
}

bool is_double_rooted(const RootedGraph& g, bool require_local) {
    if (g.graph.order() < 2) return false;
    if (g.graph.min_degree() != 1) return false;
    if (root_similar_vertices(g).empty()) return false;
    if (!is_stem_transitive(g)) return false;
    if (require_local && !is_local_amoeba(g.graph)) return false;
    return true;
}

} // namespace amoeba
