#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nvenc/array_model.hpp"

namespace nvenc {

enum class Color : unsigned char { red = 0, blue = 1 };

// Ordinal tree on nodes 0..n labeled in preorder. Parent links and child
// lists are kept side by side; `is_consistent()` checks they agree.
class OrdinalTree {
public:
    // parents[0] is ignored; parents[i] < i is required for i >= 1.
    static OrdinalTree from_parents(std::vector<std::size_t> parents);

    // Largest label; the tree has n+1 nodes.
    std::size_t n() const noexcept { return parent_.size() - 1; }

    std::size_t parent(std::size_t i) const;
    const std::vector<std::size_t>& children(std::size_t i) const;
    std::size_t degree(std::size_t i) const { return children(i).size(); }
    bool is_leaf(std::size_t i) const { return children(i).empty(); }

    // Immediate right sibling, if any. The root has none.
    std::optional<std::size_t> right_sibling(std::size_t i) const;
    bool has_right_sibling(std::size_t i) const { return right_sibling(i).has_value(); }

    // Parent map and child lists describe the same tree, child lists are
    // strictly increasing.
    bool is_consistent() const;

    // A left-to-right DFS from 0 visits 0, 1, ..., n in order.
    bool is_preorder_labeled() const;

    // Last label in the subtree of i; descendants of i are i+1..subtree_end(i).
    std::size_t subtree_end(std::size_t i) const;

    // Parenthesized form, e.g. "0(1(2 3) 4)".
    std::string to_text() const;

    friend bool operator==(const OrdinalTree& a, const OrdinalTree& b) { return a.parent_ == b.parent_; }

private:
    OrdinalTree() = default;
    void check_node(std::size_t i) const;

    std::vector<std::size_t> parent_;
    std::vector<std::vector<std::size_t>> children_;
    std::vector<std::size_t> next_sibling_;  // 0 = none (0 is never a sibling)
};

class ColoredTree {
public:
    ColoredTree(OrdinalTree tree, std::vector<Color> colors);

    const OrdinalTree& tree() const noexcept { return tree_; }
    std::size_t n() const noexcept { return tree_.n(); }
    Color color(std::size_t i) const;
    bool is_red(std::size_t i) const { return color(i) == Color::red; }
    std::vector<std::size_t> red_nodes() const;

    // Same as OrdinalTree::to_text with an 'r' or 'b' suffix per node.
    std::string to_text() const;

    friend bool operator==(const ColoredTree&, const ColoredTree&) = default;

private:
    OrdinalTree tree_;
    std::vector<Color> colors_;
};

// Min(A): parent(i) = PSV(i). Max(A): parent(i) = PLV(i). Both are built
// with the all-nearest-values stack scan in O(n).
OrdinalTree build_min_heap(const ValueArray& a);
OrdinalTree build_max_heap(const ValueArray& a);

// Node i is red iff it has an immediate right sibling j with A[i] != A[j].
// Root and node n are always blue.
ColoredTree colorize(const OrdinalTree& t, const ValueArray& a);

// i is a leaf of Min iff i is internal in Max, for every 0 < i < n.
// Returns the first violating index.
std::optional<std::size_t> find_duality_violation(const OrdinalTree& min_tree, const OrdinalTree& max_tree);
bool check_duality(const OrdinalTree& min_tree, const OrdinalTree& max_tree);

// Every leaf that has a right sibling is red.
std::optional<std::size_t> find_red_leaf_violation(const ColoredTree& t);
bool check_red_leaves(const ColoredTree& t);

enum class HeapOrder { min, max };

// Consecutive siblings i < j satisfy A[i] >= A[j] (min) or A[i] <= A[j] (max).
bool check_sibling_monotonicity(const OrdinalTree& t, const ValueArray& a, HeapOrder order);

// Red nodes have a right sibling with a different value, blue nodes with a
// right sibling share its value, sibling-less nodes are blue.
bool check_coloring(const ColoredTree& t, const ValueArray& a);

} // namespace nvenc
