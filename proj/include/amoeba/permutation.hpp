#ifndef AMOEBA_PERMUTATION_HPP
#define AMOEBA_PERMUTATION_HPP

#include <compare>
#include <string>
#include <vector>

#include "amoeba/errors.hpp"

namespace amoeba {

// Permutation of [n] = {1..n}, stored in one-line image form.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images); // images[i-1] = sigma(i), validated

    static Permutation identity(int n);
    static Permutation transposition(int n, int a, int b);
    static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

    int size() const { return static_cast<int>(img_.size()); }
    int apply(int i) const { return img_[static_cast<std::size_t>(i) - 1]; }
    int operator()(int i) const { return apply(i); }

    bool is_identity() const;
    bool fixes(int i) const { return apply(i) == i; }
    // true iff sigma maps the set onto itself
    bool stabilizes_setwise(const std::vector<int>& set) const;

    Permutation inverse() const;

    const std::vector<int>& images() const { return img_; }
    std::string to_string() const; // "(2 1 3)"

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> img_;
};

// (a . b)(i) = a(b(i)): b acts first. Matches "replacement a performed on copy
// given by b yields the copy given by a.b".
Permutation compose(const Permutation& a, const Permutation& b);

// Orbit of x under the group generated by gens; ascending.
std::vector<int> orbit_of(int x, const std::vector<Permutation>& gens, int n);

// Orbit partition of [n]; orbits ascending, ordered by smallest element.
std::vector<std::vector<int>> orbit_partition(const std::vector<Permutation>& gens, int n);

// Accepts one-line form "(2 1 3)" (a single group listing 1..n in some order,
// parens optional) or disjoint-cycle form "(1 2)(3 4)". A single group that is
// a valid one-line listing of length n is read as one-line images.
Permutation parse_permutation(const std::string& text, int n);

} // namespace amoeba

#endif // AMOEBA_PERMUTATION_HPP
