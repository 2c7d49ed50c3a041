#include "amoeba/word.hpp"

#include <limits>
#include <unordered_map>

#include "amoeba/errors.hpp"

namespace amoeba {

Word Word::concat(const Word& rhs) const {
    if (!root_) return rhs;
    if (!rhs.root_) return *this;
    auto node = std::make_shared<Node>();
    node->kind = Node::kConcat;
    node->a = root_;
    node->b = rhs.root_;
    std::size_t sum = root_->len + rhs.root_->len;
    node->len = sum < root_->len ? std::numeric_limits<std::size_t>::max() : sum; // saturate
    return Word(std::move(node));
}

Word Word::inverse() const {
    if (!root_) return Word();
    if (root_->kind == Node::kInverse) return Word(root_->a);
    if (root_->kind == Node::kLeaf) return Word(Node::leaf(root_->gen, -root_->exp));
    auto node = std::make_shared<Node>();
    node->kind = Node::kInverse;
    node->a = root_;
    node->len = root_->len;
    return Word(std::move(node));
}

std::vector<WordFactor> Word::expand(std::size_t max_len) const {
    if (length() > max_len)
        throw Error("word expansion exceeds " + std::to_string(max_len) + " factors");
    std::vector<WordFactor> out;
    out.reserve(length());
    if (!root_) return out;
    // (x y)^-1 = y^-1 x^-1: an inverted concat emits children swapped, inverted.
    std::vector<std::pair<const Node*, bool>> stack{{root_.get(), false}};
    while (!stack.empty()) {
        auto [node, inv] = stack.back();
        stack.pop_back();
        switch (node->kind) {
            case Node::kLeaf:
                out.push_back({node->gen, inv ? -node->exp : node->exp});
                break;
            case Node::kInverse:
                stack.push_back({node->a.get(), !inv});
                break;
            case Node::kConcat:
                if (!inv) {
                    stack.push_back({node->b.get(), inv});
                    stack.push_back({node->a.get(), inv});
                } else {
                    stack.push_back({node->a.get(), inv});
                    stack.push_back({node->b.get(), inv});
                }
                break;
        }
    }
    return out;
}

Permutation Word::evaluate(const std::vector<Permutation>& gens, int n) const {
    if (!root_) return Permutation::identity(n);
    std::unordered_map<const Node*, Permutation> memo;
    // Iterative post-order over the DAG.
    std::vector<std::pair<const Node*, bool>> stack{{root_.get(), false}};
    while (!stack.empty()) {
        auto [node, ready] = stack.back();
        stack.pop_back();
        if (memo.count(node)) continue;
        if (node->kind == Node::kLeaf) {
            if (node->gen < 0 || node->gen >= static_cast<int>(gens.size()))
                throw Error("word references generator out of range");
            const Permutation& g = gens[static_cast<std::size_t>(node->gen)];
            memo.emplace(node, node->exp > 0 ? g : g.inverse());
            continue;
        }
        if (!ready) {
            stack.push_back({node, true});
            if (node->a && !memo.count(node->a.get())) stack.push_back({node->a.get(), false});
            if (node->b && !memo.count(node->b.get())) stack.push_back({node->b.get(), false});
            continue;
        }
        if (node->kind == Node::kInverse) {
            memo.emplace(node, memo.at(node->a.get()).inverse());
        } else {
            memo.emplace(node, compose(memo.at(node->a.get()), memo.at(node->b.get())));
        }
    }
    return memo.at(root_.get());
}

} // namespace amoeba
