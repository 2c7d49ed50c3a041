#include "amoeba/stabilizer_chain.hpp"

#include <algorithm>
#include <set>

#include "amoeba/errors.hpp"

namespace amoeba {

namespace {
std::uint64_t pair_key(std::size_t gen_index, int point) {
    return (static_cast<std::uint64_t>(gen_index) << 20) | static_cast<std::uint64_t>(point);
}
} // namespace

StabilizerChain::StabilizerChain(int n, std::vector<Permutation> gens,
                                 const std::vector<int>& base_hint)
    : n_(n), original_gens_(std::move(gens)) {
    for (const auto& g : original_gens_)
        if (g.size() != n_) throw Error("generator degree mismatch");
    for (int b : base_hint) {
        if (b < 1 || b > n_) throw Error("base point out of range");
        if (std::find(base_.begin(), base_.end(), b) != base_.end()) continue;
        base_.push_back(b);
        levels_.push_back(Level{b, {}, {}});
        checked_.emplace_back();
    }
    for (std::size_t idx = 0; idx < original_gens_.size(); ++idx) {
        const Permutation& g = original_gens_[idx];
        if (g.is_identity()) continue;
        add_strong_generator(g, Word::generator(static_cast<int>(idx)));
    }
    if (levels_.empty()) return; // trivial group
    std::size_t i = levels_.size() - 1;
    while (true) {
        std::size_t j = verify_level(i);
        if (j != npos) {
            i = j;
        } else {
            if (i == 0) break;
            --i;
        }
    }
}

std::vector<const StabilizerChain::StrongGen*> StabilizerChain::gens_for_level(std::size_t level) const {
    std::vector<const StrongGen*> out;
    for (const auto& g : strong_)
        if (g.level >= level) out.push_back(&g);
    return out;
}

void StabilizerChain::ensure_base_point_for(const Permutation& p) {
    for (int b : base_)
        if (!p.fixes(b)) return;
    for (int x = 1; x <= n_; ++x) {
        if (!p.fixes(x)) {
            base_.push_back(x);
            levels_.push_back(Level{x, {}, {}});
            checked_.emplace_back();
            return;
        }
    }
    throw InconsistencyError("identity passed to ensure_base_point_for");
}

void StabilizerChain::add_strong_generator(Permutation p, Word w) {
    ensure_base_point_for(p);
    std::size_t level = 0;
    while (level < base_.size() && p.fixes(base_[level])) ++level;
    strong_.push_back(StrongGen{std::move(p), std::move(w), level});
}

void StabilizerChain::recompute_orbit(std::size_t level) {
    // Stable extension: existing transversal entries and their representatives
    // are never replaced, so memoized Schreier checks stay valid.
    Level& lv = levels_[level];
    if (lv.rep_index.empty()) lv.rep_index.assign(static_cast<std::size_t>(n_) + 1, 0);
    if (lv.transversal.empty()) {
        lv.transversal.push_back({lv.base_point, Permutation::identity(n_), Word()});
        lv.rep_index[static_cast<std::size_t>(lv.base_point)] = 1;
    }
    auto gens = gens_for_level(level);
    for (std::size_t t = 0; t < lv.transversal.size(); ++t) {
        for (const StrongGen* g : gens) {
            int q = g->perm.apply(lv.transversal[t].point);
            if (lv.rep_index[static_cast<std::size_t>(q)] != 0) continue;
            TransversalEntry entry;
            entry.point = q;
            entry.rep = compose(g->perm, lv.transversal[t].rep);
            entry.word = g->word.concat(lv.transversal[t].word);
            lv.transversal.push_back(std::move(entry));
            lv.rep_index[static_cast<std::size_t>(q)] = static_cast<int>(lv.transversal.size());
        }
    }
}

std::pair<Permutation, Word> StabilizerChain::strip(Permutation p, Word w, std::size_t from_level,
                                                    std::size_t* stop_level) const {
    std::size_t j = from_level;
    for (; j < levels_.size(); ++j) {
        const Level& lv = levels_[j];
        int x = p.apply(lv.base_point);
        int idx = lv.rep_index.empty() ? 0 : lv.rep_index[static_cast<std::size_t>(x)];
        if (idx == 0) break;
        const TransversalEntry& u = lv.transversal[static_cast<std::size_t>(idx) - 1];
        p = compose(u.rep.inverse(), p);
        w = u.word.inverse().concat(w);
    }
    *stop_level = j;
    return {std::move(p), std::move(w)};
}

std::size_t StabilizerChain::verify_level(std::size_t level) {
    recompute_orbit(level);
    Level& lv = levels_[level];
    // Indices, not pointers: strong_ may reallocate while this level is live.
    std::vector<std::size_t> gens;
    for (std::size_t gi = 0; gi < strong_.size(); ++gi)
        if (strong_[gi].level >= level) gens.push_back(gi);

    for (std::size_t t = 0; t < lv.transversal.size(); ++t) {
        for (std::size_t gi : gens) {
            std::uint64_t key = pair_key(gi, lv.transversal[t].point);
            if (checked_[level].count(key)) continue;
            const StrongGen& g = strong_[gi];
            const TransversalEntry& u = lv.transversal[t];
            int q = g.perm.apply(u.point);
            const TransversalEntry& uq =
                lv.transversal[static_cast<std::size_t>(lv.rep_index[static_cast<std::size_t>(q)]) - 1];
            Permutation schreier = compose(uq.rep.inverse(), compose(g.perm, u.rep));
            if (schreier.is_identity()) {
                checked_[level].insert(key);
                continue;
            }
            Word word = uq.word.inverse().concat(g.word).concat(u.word);
            std::size_t stop = 0;
            auto [h, hw] = strip(std::move(schreier), std::move(word), level + 1, &stop);
            if (h.is_identity()) {
                checked_[level].insert(key);
                continue;
            }
            add_strong_generator(std::move(h), std::move(hw));
            return strong_.back().level;
        }
    }
    return npos;
}

mpz_class StabilizerChain::order() const {
    mpz_class ord = 1;
    for (const auto& lv : levels_) ord *= static_cast<unsigned long>(std::max<std::size_t>(lv.transversal.size(), 1));
    return ord;
}

StabilizerChain::SiftResult StabilizerChain::sift(const Permutation& p) const {
    if (p.size() != n_) throw Error("sift: degree mismatch");
    SiftResult result;
    Permutation h = p;
    Word acc;
    for (const auto& lv : levels_) {
        int x = h.apply(lv.base_point);
        int idx = lv.rep_index.empty() ? 0 : lv.rep_index[static_cast<std::size_t>(x)];
        if (idx == 0) return result; // not a member
        const TransversalEntry& u = lv.transversal[static_cast<std::size_t>(idx) - 1];
        acc = acc.concat(u.word);
        h = compose(u.rep.inverse(), h);
    }
    if (!h.is_identity()) return result;
    result.member = true;
    result.word = std::move(acc);
    return result;
}

std::vector<Permutation> StabilizerChain::first_point_stabilizer_generators() const {
    if (levels_.empty()) throw Error("chain has no base point");
    std::vector<Permutation> out;
    for (const auto& g : strong_)
        if (g.level >= 1) out.push_back(g.perm);
    return out;
}

std::vector<std::vector<int>> StabilizerChain::point_orbits() const {
    return orbit_partition(original_gens_, n_);
}

StabilizerChain build_chain(int n, std::vector<Permutation> gens, const std::vector<int>& base_hint) {
    return StabilizerChain(n, std::move(gens), base_hint);
}

mpz_class group_order(const StabilizerChain& chain) { return chain.order(); }

std::vector<Permutation> group_elements_naive(const std::vector<Permutation>& gens, int n,
                                              std::uint64_t cap) {
    std::set<Permutation> closure;
    std::vector<Permutation> frontier;
    closure.insert(Permutation::identity(n));
    frontier.push_back(Permutation::identity(n));
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& p : frontier) {
            for (const auto& g : gens) {
                Permutation q = compose(g, p);
                if (closure.insert(q).second) {
                    if (closure.size() > cap) throw Error("naive closure cap exceeded");
                    next.push_back(std::move(q));
                }
            }
        }
        frontier = std::move(next);
    }
    return {closure.begin(), closure.end()};
}

std::vector<Permutation> point_stabilizer_gens(const StabilizerChain& chain, int k) {
    if (!chain.base().empty() && chain.base()[0] == k)
        return chain.first_point_stabilizer_generators();
    StabilizerChain rebuilt(chain.degree(), chain.original_generators(), {k});
    return rebuilt.first_point_stabilizer_generators();
}

} // namespace amoeba
