#pragma once

#include <cstddef>

#include "nvenc/array_model.hpp"
#include "nvenc/heap_builder.hpp"

namespace nvenc {

// Answers computed from colored heaps alone, without the array.
//
// Previous-* answers are parent links. Next-* answers use a sibling walk:
// siblings in cMin(A) carry non-increasing values and a blue node with a
// right sibling shares that sibling's value, so starting from i we skip
// right across blue siblings until a red one (whose right sibling is the
// answer). When the sibling list runs out, the answer is the right sibling
// of the nearest non-root ancestor that has one, or n+1. cMax(A) is the
// mirror image.
std::size_t psv_from_tree(const ColoredTree& cmin, std::size_t i);
std::size_t nsv_from_tree(const ColoredTree& cmin, std::size_t i);
std::size_t plv_from_tree(const ColoredTree& cmax, std::size_t i);
std::size_t nlv_from_tree(const ColoredTree& cmax, std::size_t i);

// Dispatches to the tree that serves `kind`.
std::size_t query_trees(const ColoredTree& cmin, const ColoredTree& cmax, QueryKind kind, std::size_t i);

} // namespace nvenc
