#pragma once

#include <cstddef>
#include <utility>

#include "nvenc/array_model.hpp"
#include "nvenc/bitio.hpp"
#include "nvenc/heap_builder.hpp"

namespace nvenc {

// For 0 < i < n: good = no right sibling in either tree, bad = right
// siblings in both, neutral = exactly one.
enum class IndexClass { good, bad, neutral };

IndexClass classify_index(const OrdinalTree& min_tree, const OrdinalTree& max_tree, std::size_t i);

// Number of good and bad indices. They are equal for trees built from an
// array with no consecutive equal elements.
struct GoodBadCount {
    std::size_t good = 0;
    std::size_t bad = 0;
};
GoodBadCount count_good_bad(const OrdinalTree& min_tree, const OrdinalTree& max_tree);

// cMin(A) and cMax(A) in about (2 + log 3)n bits. Colors are coded red = 0,
// blue = 1. The "relevant tree" of an index is the one where it is internal.
struct ColoredEncoding {
    std::size_t n = 0;
    BitStream t_min;
    BitStream t_max;
    BitStream u_gb;        // U[i] for each good or bad i
    BitStream v_bad;       // color in the relevant tree, for each bad i
    TritString v_neutral;  // 2 if no right sibling in the relevant tree, else its color
    std::size_t g = 0;     // good indices

    std::size_t payload_bits() const noexcept {
        return t_min.size() + t_max.size() + u_gb.size() + v_bad.size() + packed_trit_bits(v_neutral.size());
    }

    friend bool operator==(const ColoredEncoding&, const ColoredEncoding&) = default;
};

// Throws precondition_error when either tree pair breaks the leaf/internal
// duality or a leaf with a right sibling is not red.
ColoredEncoding encode_colored(const ColoredTree& cmin, const ColoredTree& cmax);
// Also rejects arrays with consecutive equal elements (index of the first).
ColoredEncoding encode_colored(const ValueArray& a);

std::pair<ColoredTree, ColoredTree> decode_colored(const ColoredEncoding& e);

// 2n + 3g + packed size of the m = n-1-2g neutral trits.
std::size_t colored_size_bits(std::size_t n, std::size_t g, std::size_t m);
// (2 + log2 3) n, the leading term of the size, which is largest at g = 0.
double colored_bound_bits(std::size_t n);

// All four queries from a decoded (cMin, cMax) pair.
class ColoredQueries {
public:
    ColoredQueries(ColoredTree cmin, ColoredTree cmax);

    std::size_t n() const noexcept { return cmin_.n(); }
    bool supports(QueryKind) const noexcept { return true; }
    std::size_t answer(QueryKind kind, std::size_t i) const;

    const ColoredTree& cmin() const noexcept { return cmin_; }
    const ColoredTree& cmax() const noexcept { return cmax_; }

private:
    ColoredTree cmin_;
    ColoredTree cmax_;
};

} // namespace nvenc
