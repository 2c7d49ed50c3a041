#ifndef AMOEBA_WORD_HPP
#define AMOEBA_WORD_HPP

#include <cstddef>
#include <memory>
#include <vector>

#include "amoeba/permutation.hpp"

namespace amoeba {

struct WordFactor {
    int gen = 0; // index into the original generator list
    int exp = 1; // +1 or -1

    bool operator==(const WordFactor&) const = default;
};

// Word over a fixed generator list. Immutable, structurally shared, so
// concatenation and inversion are O(1); expansion to a flat factor list is
// linear in the expanded length. Evaluation order: factors act right to left,
// matching compose().
class Word {
public:
    Word() = default; // empty word = identity

    static Word generator(int index) { return Word(Node::leaf(index, +1)); }

    Word concat(const Word& rhs) const;
    Word inverse() const;

    bool empty() const { return root_ == nullptr; }
    std::size_t length() const { return root_ ? root_->len : 0; }

    // Flat factor list f1 f2 ... fm with evaluation f1 o f2 o ... o fm.
    // Throws when the expansion would exceed max_len factors.
    std::vector<WordFactor> expand(std::size_t max_len = 1u << 24) const;

    // Evaluate over the generator list; memoized over shared nodes.
    Permutation evaluate(const std::vector<Permutation>& gens, int n) const;

private:
    struct Node {
        enum Kind { kLeaf, kConcat, kInverse } kind;
        int gen = 0;
        int exp = 1;
        std::shared_ptr<const Node> a, b;
        std::size_t len = 1;

        static std::shared_ptr<const Node> leaf(int g, int e) {
            auto node = std::make_shared<Node>();
            node->kind = kLeaf;
            node->gen = g;
            node->exp = e;
            node->len = 1;
            return node;
        }
    };

    explicit Word(std::shared_ptr<const Node> root) : root_(std::move(root)) {}

    std::shared_ptr<const Node> root_;
};

} // namespace amoeba

#endif // AMOEBA_WORD_HPP
