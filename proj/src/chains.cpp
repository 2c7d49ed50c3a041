#include "amoeba/chains.hpp"

#include <algorithm>
#include <iterator>
#include <queue>
#include <sstream>
#include <unordered_set>

#include "amoeba/isomorphism.hpp"
#include "amoeba/replacement.hpp"
#include "amoeba/stabilizer_chain.hpp"

namespace amoeba {

MorphResult morph(const Graph& g, const Permutation& target, int slack) {
    if (slack < 0) throw Error("slack must be nonnegative");
    const Graph work = g.with_isolated(slack);
    const int n = work.order();
    if (target.size() != n)
        throw Error("target permutation must act on " + std::to_string(n) +
                    " points (graph order plus slack)");

    GeneratorAtlas atlas = generator_atlas(work);
    std::vector<Permutation> gens = atlas.generator_list();
    StabilizerChain chain(n, gens);

    auto sifted = chain.sift(target);
    if (!sifted.member) {
        std::ostringstream msg;
        msg << "unreachable copy: target " << target.to_string()
            << " is not in the replacement group (order " << chain.order().get_str() << ")";
        throw UnreachableCopyError(msg.str(), chain.order().get_str(), chain.point_orbits());
    }

    MorphResult result;
    result.chain.start = work;
    result.chain.target = target;

    auto factors = sifted.word.expand();
    // Evaluation is f1 o f2 o ... o fm with the rightmost factor acting first,
    // so the walk applies factors from the back.
    Permutation current = Permutation::identity(n);
    Graph current_copy = work;
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
        const Permutation& gen = gens[static_cast<std::size_t>(it->gen)];
        Permutation step_perm = it->exp > 0 ? gen : gen.inverse();
        current = compose(step_perm, current);
        Graph next_copy = work.relabeled_copy(current);

        std::vector<Edge> removed, added;
        std::set_difference(current_copy.edges().begin(), current_copy.edges().end(),
                            next_copy.edges().begin(), next_copy.edges().end(),
                            std::back_inserter(removed));
        std::set_difference(next_copy.edges().begin(), next_copy.edges().end(),
                            current_copy.edges().begin(), current_copy.edges().end(),
                            std::back_inserter(added));

        MorphTraceEntry entry{it->gen, it->exp, removed.empty()};
        result.trace.push_back(entry);
        if (removed.empty() && added.empty()) {
            current_copy = std::move(next_copy);
            continue; // neutral factor, compressed out of the step list
        }
        if (removed.size() != 1 || added.size() != 1)
            throw InconsistencyError("generator factor moved more than one edge");
        result.chain.steps.push_back(AmbientStep{removed[0], added[0], next_copy.edges()});
        current_copy = std::move(next_copy);
    }
    if (!(current == target))
        throw InconsistencyError("factor walk did not reproduce the target permutation");
    return result;
}

ChainValidation validate_chain(const MorphChain& chain) {
    ChainValidation v;
    auto fail = [&v](int step, const std::string& reason) {
        v.ok = false;
        v.failed_step = step;
        v.reason = reason;
        return v;
    };

    const Graph& start = chain.start;
    std::vector<Edge> current = start.edges();
    for (std::size_t s = 0; s < chain.steps.size(); ++s) {
        const AmbientStep& step = chain.steps[s];
        const int idx = static_cast<int>(s);
        try {
            if (step.removed.has_value() != step.added.has_value())
                return fail(idx, "step must remove and add together or do neither");
            std::vector<Edge> expected = current;
            if (step.removed) {
                Edge rem = make_edge(step.removed->first, step.removed->second);
                Edge add = make_edge(step.added->first, step.added->second);
                auto it = std::find(expected.begin(), expected.end(), rem);
                if (it == expected.end()) return fail(idx, "removed edge not present");
                expected.erase(it);
                if (std::find(expected.begin(), expected.end(), add) != expected.end())
                    return fail(idx, "added edge already present");
                expected.push_back(add);
                std::sort(expected.begin(), expected.end());
            }
            std::vector<Edge> declared = step.resulting_edges;
            for (auto& e : declared) e = make_edge(e.first, e.second);
            std::sort(declared.begin(), declared.end());
            if (declared != expected)
                return fail(idx, "resulting edge set does not match the declared delta");
            Graph intermediate(start.order(), declared);
            if (!are_isomorphic(intermediate, start))
                return fail(idx, "intermediate copy is not isomorphic to the start graph");
            current = std::move(declared);
        } catch (const Error& e) {
            return fail(idx, e.what()); // malformed edges count as invalid steps
        }
    }
    Graph final_copy = start.relabeled_copy(chain.target);
    if (current != final_copy.edges())
        return fail(static_cast<int>(chain.steps.size()),
                    "final edge set does not equal the target copy");
    return v;
}

namespace {

std::uint64_t edge_bit(int i, int j) {
    if (i > j) std::swap(i, j);
    // column-major upper triangle: {i, j} with i < j, 1-indexed
    return std::uint64_t{1} << ((j - 1) * (j - 2) / 2 + (i - 1));
}

std::uint64_t edge_mask(const std::vector<Edge>& edges) {
    std::uint64_t mask = 0;
    for (const auto& e : edges) mask |= edge_bit(e.first, e.second);
    return mask;
}

} // namespace

ReachabilitySummary copy_graph_bfs(const Graph& g, std::uint64_t max_states) {
    const int n = g.order();
    if (n < 1) throw Error("reachability needs at least one vertex");
    if (n > 11) throw Error("copy enumeration limited to 11 vertices");

    const int pairs_total = n * (n - 1) / 2;
    // Bit permutation tables for the adjacent transpositions; they generate all
    // relabelings, so the copy set is the closure of the start mask under them.
    std::vector<std::vector<int>> swap_tables;
    for (int t = 1; t < n; ++t) {
        std::vector<int> table(static_cast<std::size_t>(pairs_total));
        auto image = [&](int v) { return v == t ? t + 1 : (v == t + 1 ? t : v); };
        int bit = 0;
        for (int j = 2; j <= n; ++j)
            for (int i = 1; i < j; ++i, ++bit) {
                int a = image(i), b = image(j);
                if (a > b) std::swap(a, b);
                table[static_cast<std::size_t>(bit)] = (b - 1) * (b - 2) / 2 + (a - 1);
            }
        swap_tables.push_back(std::move(table));
    }
    auto relabel = [&](std::uint64_t mask, const std::vector<int>& table) {
        std::uint64_t out = 0;
        while (mask) {
            int bit = std::countr_zero(mask);
            mask &= mask - 1;
            out |= std::uint64_t{1} << table[static_cast<std::size_t>(bit)];
        }
        return out;
    };

    std::unordered_set<std::uint64_t> copies;
    {
        std::uint64_t start_mask = edge_mask(g.edges());
        std::queue<std::uint64_t> work;
        copies.insert(start_mask);
        work.push(start_mask);
        while (!work.empty()) {
            std::uint64_t state = work.front();
            work.pop();
            for (const auto& table : swap_tables) {
                std::uint64_t next = relabel(state, table);
                if (copies.count(next)) continue;
                if (copies.size() >= max_states) throw Error("state budget exceeded");
                copies.insert(next);
                work.push(next);
            }
        }
    }

    const int pairs = n * (n - 1) / 2;
    std::uint64_t start = edge_mask(g.edges());
    std::unordered_set<std::uint64_t> seen{start};
    std::queue<std::uint64_t> work;
    work.push(start);
    while (!work.empty()) {
        std::uint64_t state = work.front();
        work.pop();
        for (int eb = 0; eb < pairs; ++eb) {
            if (!((state >> eb) & 1)) continue;
            for (int fb = 0; fb < pairs; ++fb) {
                if ((state >> fb) & 1) continue;
                std::uint64_t next = (state & ~(std::uint64_t{1} << eb)) | (std::uint64_t{1} << fb);
                if (!copies.count(next) || seen.count(next)) continue;
                seen.insert(next);
                work.push(next);
            }
        }
    }

    ReachabilitySummary summary;
    summary.total_copies = copies.size();
    summary.reachable_copies = seen.size();
    summary.all_reachable = (summary.reachable_copies == summary.total_copies);
    return summary;
}

} // namespace amoeba
