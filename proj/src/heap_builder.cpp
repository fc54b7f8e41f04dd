#include "nvenc/heap_builder.hpp"

#include <string>

namespace nvenc {

OrdinalTree OrdinalTree::from_parents(std::vector<std::size_t> parents) {
    if (parents.size() < 2) throw empty_array_error();
    OrdinalTree t;
    const std::size_t n = parents.size() - 1;
    parents[0] = 0;
    t.children_.resize(n + 1);
    t.next_sibling_.assign(n + 1, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        const std::size_t p = parents[i];
        if (p >= i)
            throw argument_error("parent of node " + std::to_string(i) + " must be smaller, got " + std::to_string(p));
        auto& siblings = t.children_[p];
        if (!siblings.empty()) t.next_sibling_[siblings.back()] = i;
        siblings.push_back(i);
    }
    t.parent_ = std::move(parents);
    return t;
}

void OrdinalTree::check_node(std::size_t i) const {
    if (i > n()) throw argument_error("node " + std::to_string(i) + " outside 0.." + std::to_string(n()));
}

std::size_t OrdinalTree::parent(std::size_t i) const {
    check_node(i);
    if (i == 0) throw argument_error("the root has no parent");
    return parent_[i];
}

const std::vector<std::size_t>& OrdinalTree::children(std::size_t i) const {
    check_node(i);
    return children_[i];
}

std::optional<std::size_t> OrdinalTree::right_sibling(std::size_t i) const {
    check_node(i);
    if (next_sibling_[i] == 0) return std::nullopt;
    return next_sibling_[i];
}

bool OrdinalTree::is_consistent() const {
    std::size_t edges = 0;
    for (std::size_t p = 0; p <= n(); ++p) {
        const auto& kids = children_[p];
        for (std::size_t c = 0; c < kids.size(); ++c) {
            if (kids[c] == 0 || kids[c] > n() || parent_[kids[c]] != p) return false;
            if (c > 0 && kids[c - 1] >= kids[c]) return false;
            if (next_sibling_[kids[c]] != (c + 1 < kids.size() ? kids[c + 1] : 0)) return false;
        }
        edges += kids.size();
    }
    return edges == n();
}

bool OrdinalTree::is_preorder_labeled() const {
    std::vector<std::size_t> stack{0};
    std::size_t expected = 0;
    while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        if (v != expected++) return false;
        const auto& kids = children_[v];
        for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
    }
    return expected == n() + 1;
}

std::size_t OrdinalTree::subtree_end(std::size_t i) const {
    check_node(i);
    while (!children_[i].empty()) i = children_[i].back();
    return i;
}

namespace {

// Iterative so that path-shaped trees with 10^5 nodes are fine.
template <typename Label>
std::string render(const OrdinalTree& t, Label label) {
    std::string out;
    struct Frame {
        std::size_t node;
        std::size_t next_child;
    };
    std::vector<Frame> stack{{0, 0}};
    out += label(0);
    while (!stack.empty()) {
        Frame& f = stack.back();
        const auto& kids = t.children(f.node);
        if (f.next_child == kids.size()) {
            if (!kids.empty()) out += ')';
            stack.pop_back();
            continue;
        }
        out += f.next_child == 0 ? '(' : ' ';
        const std::size_t c = kids[f.next_child++];
        out += label(c);
        stack.push_back({c, 0});
    }
    return out;
}

} // namespace

std::string OrdinalTree::to_text() const {
    return render(*this, [](std::size_t v) { return std::to_string(v); });
}

ColoredTree::ColoredTree(OrdinalTree tree, std::vector<Color> colors)
    : tree_(std::move(tree)), colors_(std::move(colors)) {
    if (colors_.size() != tree_.n() + 1)
        throw argument_error("color count " + std::to_string(colors_.size()) + " does not match " +
                             std::to_string(tree_.n() + 1) + " nodes");
    for (std::size_t i = 0; i < colors_.size(); ++i)
        if (colors_[i] == Color::red && !tree_.has_right_sibling(i))
            throw argument_error("node " + std::to_string(i) + " is red but has no right sibling");
}

Color ColoredTree::color(std::size_t i) const {
    if (i >= colors_.size()) throw argument_error("node " + std::to_string(i) + " out of range");
    return colors_[i];
}

std::vector<std::size_t> ColoredTree::red_nodes() const {
    std::vector<std::size_t> red;
    for (std::size_t i = 0; i < colors_.size(); ++i)
        if (colors_[i] == Color::red) red.push_back(i);
    return red;
}

std::string ColoredTree::to_text() const {
    return render(tree_, [this](std::size_t v) {
        return std::to_string(v) + (colors_[v] == Color::red ? 'r' : 'b');
    });
}

namespace {

// parents[i] = nearest j < i with A[j] strictly before A[i] in `before`.
template <typename Before>
OrdinalTree build_heap(const ValueArray& a, Before before) {
    const std::size_t n = a.size();
    std::vector<std::size_t> parents(n + 1, 0);
    std::vector<std::size_t> stack;
    stack.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) {
        while (!stack.empty() && !before(a[stack.back()], a[i])) stack.pop_back();
        parents[i] = stack.empty() ? 0 : stack.back();
        stack.push_back(i);
    }
    return OrdinalTree::from_parents(std::move(parents));
}

} // namespace

OrdinalTree build_min_heap(const ValueArray& a) {
    return build_heap(a, [](std::int64_t x, std::int64_t y) { return x < y; });
}

OrdinalTree build_max_heap(const ValueArray& a) {
    return build_heap(a, [](std::int64_t x, std::int64_t y) { return x > y; });
}

ColoredTree colorize(const OrdinalTree& t, const ValueArray& a) {
    if (t.n() != a.size())
        throw argument_error("tree has " + std::to_string(t.n()) + " non-root nodes but array has " +
                             std::to_string(a.size()) + " elements");
    std::vector<Color> colors(t.n() + 1, Color::blue);
    for (std::size_t i = 1; i < t.n(); ++i) {
        if (auto j = t.right_sibling(i); j && a[i] != a[*j]) colors[i] = Color::red;
    }
    return ColoredTree(t, std::move(colors));
}

std::optional<std::size_t> find_duality_violation(const OrdinalTree& min_tree, const OrdinalTree& max_tree) {
    if (min_tree.n() != max_tree.n()) return 0;
    for (std::size_t i = 1; i < min_tree.n(); ++i)
        if (min_tree.is_leaf(i) == max_tree.is_leaf(i)) return i;
    return std::nullopt;
}

bool check_duality(const OrdinalTree& min_tree, const OrdinalTree& max_tree) {
    return !find_duality_violation(min_tree, max_tree);
}

std::optional<std::size_t> find_red_leaf_violation(const ColoredTree& t) {
    for (std::size_t i = 1; i <= t.n(); ++i)
        if (t.tree().is_leaf(i) && t.tree().has_right_sibling(i) && !t.is_red(i)) return i;
    return std::nullopt;
}

bool check_red_leaves(const ColoredTree& t) { return !find_red_leaf_violation(t); }

bool check_sibling_monotonicity(const OrdinalTree& t, const ValueArray& a, HeapOrder order) {
    if (t.n() != a.size()) return false;
    for (std::size_t i = 1; i <= t.n(); ++i) {
        auto j = t.right_sibling(i);
        if (!j) continue;
        if (order == HeapOrder::min ? a[i] < a[*j] : a[i] > a[*j]) return false;
    }
    return true;
}

bool check_coloring(const ColoredTree& t, const ValueArray& a) {
    if (t.n() != a.size() || t.color(0) != Color::blue || t.color(t.n()) != Color::blue) return false;
    for (std::size_t i = 1; i <= t.n(); ++i) {
        auto j = t.tree().right_sibling(i);
        const bool should_be_red = j && a[i] != a[*j];
        if (t.is_red(i) != should_be_red) return false;
    }
    return true;
}

} // namespace nvenc
