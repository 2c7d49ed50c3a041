#include "amoeba/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <queue>
#include <sstream>

namespace amoeba {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    const int n = size();
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : img_) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
            throw Error("permutation images are not a bijection on [" + std::to_string(n) + "]");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    return Permutation(std::move(img));
}

Permutation Permutation::transposition(int n, int a, int b) {
    Permutation p = identity(n);
    if (a < 1 || a > n || b < 1 || b > n) throw Error("transposition point out of range");
    std::swap(p.img_[static_cast<std::size_t>(a) - 1], p.img_[static_cast<std::size_t>(b) - 1]);
    return p;
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    Permutation p = identity(n);
    for (const auto& cyc : cycles) {
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            int from = cyc[i];
            int to = cyc[(i + 1) % cyc.size()];
            if (from < 1 || from > n) throw Error("cycle point out of range");
            if (p.img_[static_cast<std::size_t>(from) - 1] != from)
                throw Error("cycles are not disjoint");
            p.img_[static_cast<std::size_t>(from) - 1] = to;
        }
    }
    return Permutation(std::move(p.img_)); // re-validate
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= size(); ++i)
        if (apply(i) != i) return false;
    return true;
}

bool Permutation::stabilizes_setwise(const std::vector<int>& set) const {
    std::vector<int> image;
    image.reserve(set.size());
    for (int x : set) image.push_back(apply(x));
    std::sort(image.begin(), image.end());
    std::vector<int> sorted = set;
    std::sort(sorted.begin(), sorted.end());
    return image == sorted;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(img_.size());
    for (int i = 1; i <= size(); ++i) inv[static_cast<std::size_t>(apply(i)) - 1] = i;
    return Permutation(std::move(inv));
}

std::string Permutation::to_string() const {
    std::string s = "(";
    for (int i = 1; i <= size(); ++i) {
        if (i > 1) s += ' ';
        s += std::to_string(apply(i));
    }
    s += ')';
    return s;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw Error("compose: size mismatch");
    std::vector<int> img(static_cast<std::size_t>(a.size()));
    for (int i = 1; i <= a.size(); ++i) img[static_cast<std::size_t>(i) - 1] = a.apply(b.apply(i));
    return Permutation(std::move(img));
}

std::vector<int> orbit_of(int x, const std::vector<Permutation>& gens, int n) {
    if (x < 1 || x > n) throw Error("orbit point out of range");
    std::vector<bool> in(static_cast<std::size_t>(n) + 1, false);
    std::queue<int> work;
    in[static_cast<std::size_t>(x)] = true;
    work.push(x);
    while (!work.empty()) {
        int p = work.front();
        work.pop();
        for (const auto& g : gens) {
            int q = g.apply(p);
            if (!in[static_cast<std::size_t>(q)]) {
                in[static_cast<std::size_t>(q)] = true;
                work.push(q);
            }
        }
    }
    std::vector<int> out;
    for (int p = 1; p <= n; ++p)
        if (in[static_cast<std::size_t>(p)]) out.push_back(p);
    return out;
}

std::vector<std::vector<int>> orbit_partition(const std::vector<Permutation>& gens, int n) {
    std::vector<bool> done(static_cast<std::size_t>(n) + 1, false);
    std::vector<std::vector<int>> orbits;
    for (int x = 1; x <= n; ++x) {
        if (done[static_cast<std::size_t>(x)]) continue;
        auto orb = orbit_of(x, gens, n);
        for (int p : orb) done[static_cast<std::size_t>(p)] = true;
        orbits.push_back(std::move(orb));
    }
    return orbits;
}

namespace {

std::vector<std::vector<int>> tokenize_groups(const std::string& text) {
    // Split into parenthesized groups of integers; a bare integer list is one group.
    std::vector<std::vector<int>> groups;
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    if (i < text.size() && text[i] != '(') {
        // bare list
        std::istringstream in(text);
        std::vector<int> vals;
        int v;
        while (in >> v) vals.push_back(v);
        std::string rest;
        if (in.fail() && !in.eof()) throw Error("cannot parse permutation: " + text);
        groups.push_back(std::move(vals));
        return groups;
    }
    while (i < text.size()) {
        skip_ws();
        if (i >= text.size()) break;
        if (text[i] != '(') throw Error("cannot parse permutation: " + text);
        ++i;
        std::vector<int> vals;
        std::string num;
        for (; i < text.size() && text[i] != ')'; ++i) {
            char c = text[i];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                num += c;
            } else if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
                if (!num.empty()) { vals.push_back(std::stoi(num)); num.clear(); }
            } else {
                throw Error("cannot parse permutation: " + text);
            }
        }
        if (i >= text.size()) throw Error("unterminated group in permutation: " + text);
        ++i; // ')'
        if (!num.empty()) vals.push_back(std::stoi(num));
        groups.push_back(std::move(vals));
        skip_ws();
    }
    return groups;
}

bool is_one_line_listing(const std::vector<int>& vals, int n) {
    if (static_cast<int>(vals.size()) != n) return false;
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : vals) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = true;
    }
    return true;
}

} // namespace

Permutation parse_permutation(const std::string& text, int n) {
    auto groups = tokenize_groups(text);
    if (groups.empty() || (groups.size() == 1 && groups[0].empty()))
        return Permutation::identity(n);
    if (groups.size() == 1 && is_one_line_listing(groups[0], n))
        return Permutation(groups[0]);
    return Permutation::from_cycles(n, groups);
}

} // namespace amoeba
