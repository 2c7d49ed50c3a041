#ifndef AMOEBA_STABILIZER_CHAIN_HPP
#define AMOEBA_STABILIZER_CHAIN_HPP

#include <gmpxx.h>

#include <optional>
#include <unordered_set>
#include <vector>

#include "amoeba/permutation.hpp"
#include "amoeba/word.hpp"

namespace amoeba {

// Base and strong generating set via deterministic (non-randomized)
// Schreier-Sims. Every transversal element and strong generator carries a word
// in the ORIGINAL generator list, so group elements can be factorized exactly.
class StabilizerChain {
public:
    struct TransversalEntry {
        int point = 0;
        Permutation rep; // rep(base point) = point
        Word word;       // evaluates to rep over the original generators
    };

    struct Level {
        int base_point = 0;
        std::vector<TransversalEntry> transversal; // discovery (BFS) order
        std::vector<int> rep_index;                // 1-indexed point -> entry index + 1, 0 = outside orbit
    };

    // Builds the chain for the group generated by gens on [n]. When base_hint
    // is given, the base starts with exactly those points, in order.
    StabilizerChain(int n, std::vector<Permutation> gens,
                    const std::vector<int>& base_hint = {});

    int degree() const { return n_; }
    const std::vector<Permutation>& original_generators() const { return original_gens_; }
    const std::vector<int>& base() const { return base_; }
    const std::vector<Level>& levels() const { return levels_; }

    mpz_class order() const;

    struct SiftResult {
        bool member = false;
        Word word; // set when member: evaluates to the sifted permutation
    };
    SiftResult sift(const Permutation& p) const;
    bool contains(const Permutation& p) const { return sift(p).member; }

    // Strong generators of the pointwise stabilizer of the first base point.
    // Requires base()[0] == the stabilized point; rebuild with a hint otherwise.
    std::vector<Permutation> first_point_stabilizer_generators() const;

    // Orbits of the whole group on [n].
    std::vector<std::vector<int>> point_orbits() const;

private:
    struct StrongGen {
        Permutation perm;
        Word word;
        std::size_t level; // number of leading base points fixed
    };

    std::vector<const StrongGen*> gens_for_level(std::size_t level) const;
    void ensure_base_point_for(const Permutation& p);
    void add_strong_generator(Permutation p, Word w);
    void recompute_orbit(std::size_t level);
    // Returns the level index where a new strong generator was inserted, or
    // npos when the level verified clean.
    std::size_t verify_level(std::size_t level);
    std::pair<Permutation, Word> strip(Permutation p, Word w, std::size_t from_level,
                                       std::size_t* stop_level) const;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    int n_ = 0;
    std::vector<Permutation> original_gens_;
    std::vector<int> base_;
    std::vector<Level> levels_;
    std::vector<StrongGen> strong_;
    std::vector<std::unordered_set<std::uint64_t>> checked_; // per level: Schreier pairs done
};

// Convenience wrappers mirroring the operation names used elsewhere.
StabilizerChain build_chain(int n, std::vector<Permutation> gens,
                            const std::vector<int>& base_hint = {});
mpz_class group_order(const StabilizerChain& chain);

// Strong generators of the stabilizer of k, rebuilding with base hint [k] when
// the chain's base does not already start there.
std::vector<Permutation> point_stabilizer_gens(const StabilizerChain& chain, int k);

// Brute-force closure of the generators, capped. Oracle-grade cross-check for
// the chain machinery; throws when the cap is exceeded.
std::vector<Permutation> group_elements_naive(const std::vector<Permutation>& gens, int n,
                                              std::uint64_t cap = 1u << 20);

} // namespace amoeba

#endif // AMOEBA_STABILIZER_CHAIN_HPP
