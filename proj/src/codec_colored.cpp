#include "nvenc/codec_colored.hpp"

#include <cmath>
#include <string>

#include "nvenc/query_engine.hpp"
#include "tree_rebuilder.hpp"

namespace nvenc {

namespace {

IndexClass classify(bool sibling_in_min, bool sibling_in_max) {
    if (sibling_in_min && sibling_in_max) return IndexClass::bad;
    if (!sibling_in_min && !sibling_in_max) return IndexClass::good;
    return IndexClass::neutral;
}

bool color_bit(Color c) { return c == Color::blue; }

} // namespace

IndexClass classify_index(const OrdinalTree& min_tree, const OrdinalTree& max_tree, std::size_t i) {
    if (min_tree.n() != max_tree.n()) throw argument_error("Min and Max trees differ in size");
    if (i < 1 || i >= min_tree.n())
        throw argument_error("index " + std::to_string(i) + " outside 1.." + std::to_string(min_tree.n() - 1));
    return classify(min_tree.has_right_sibling(i), max_tree.has_right_sibling(i));
}

GoodBadCount count_good_bad(const OrdinalTree& min_tree, const OrdinalTree& max_tree) {
    GoodBadCount c;
    for (std::size_t i = 1; i < min_tree.n(); ++i) {
        switch (classify_index(min_tree, max_tree, i)) {
        case IndexClass::good: ++c.good; break;
        case IndexClass::bad: ++c.bad; break;
        case IndexClass::neutral: break;
        }
    }
    return c;
}

ColoredEncoding encode_colored(const ColoredTree& cmin, const ColoredTree& cmax) {
    const OrdinalTree& min_tree = cmin.tree();
    const OrdinalTree& max_tree = cmax.tree();
    if (min_tree.n() != max_tree.n()) throw argument_error("cMin and cMax differ in size");
    if (auto bad = find_duality_violation(min_tree, max_tree))
        throw precondition_error("node must be a leaf in exactly one of cMin(A), cMax(A)", *bad);
    if (auto bad = find_red_leaf_violation(cmin))
        throw precondition_error("leaf of cMin(A) with a right sibling must be red", *bad);
    if (auto bad = find_red_leaf_violation(cmax))
        throw precondition_error("leaf of cMax(A) with a right sibling must be red", *bad);

    ColoredEncoding e;
    e.n = min_tree.n();
    write_degree(e.t_min, min_tree.degree(0));
    write_degree(e.t_max, max_tree.degree(0));
    for (std::size_t i = 1; i < e.n; ++i) {
        const bool leaf_in_min = min_tree.is_leaf(i);
        const ColoredTree& relevant = leaf_in_min ? cmax : cmin;
        write_degree(leaf_in_min ? e.t_max : e.t_min, relevant.tree().degree(i));

        switch (classify(min_tree.has_right_sibling(i), max_tree.has_right_sibling(i))) {
        case IndexClass::good:
            e.u_gb.push_back(leaf_in_min);
            ++e.g;
            break;
        case IndexClass::bad:
            e.u_gb.push_back(leaf_in_min);
            e.v_bad.push_back(color_bit(relevant.color(i)));
            break;
        case IndexClass::neutral:
            if (!relevant.tree().has_right_sibling(i)) {
                e.v_neutral.push_back(2);
            } else {
                e.v_neutral.push_back(color_bit(relevant.color(i)) ? 1 : 0);
            }
            break;
        }
    }
    return e;
}

ColoredEncoding encode_colored(const ValueArray& a) {
    if (auto i = a.first_consecutive_equal())
        throw precondition_error("colored encoding needs an array without consecutive equal elements", *i);
    return encode_colored(colorize(build_min_heap(a), a), colorize(build_max_heap(a), a));
}

std::pair<ColoredTree, ColoredTree> decode_colored(const ColoredEncoding& e) {
    if (e.n == 0) throw empty_array_error();
    detail::TreeRebuilder rebuild[2] = {detail::TreeRebuilder(e.n), detail::TreeRebuilder(e.n)};
    BitReader degrees[2] = {BitReader(e.t_min), BitReader(e.t_max)};
    std::vector<Color> colors[2] = {std::vector<Color>(e.n + 1, Color::blue),
                                    std::vector<Color>(e.n + 1, Color::blue)};
    BitReader relevant_bits(e.u_gb);
    BitReader bad_colors(e.v_bad);
    std::size_t next_trit = 0;

    // Index 0 is cMin, index 1 is cMax.
    for (int t = 0; t < 2; ++t) rebuild[t].set_degree(0, read_degree(degrees[t]));

    for (std::size_t i = 1; i <= e.n; ++i) {
        const bool sibling[2] = {rebuild[0].attach(i).has_right_sibling, rebuild[1].attach(i).has_right_sibling};
        if (i == e.n) {
            if (sibling[0] || sibling[1]) throw corruption_error("node n cannot have right siblings");
            break;
        }
        int relevant = 0;
        switch (classify(sibling[0], sibling[1])) {
        case IndexClass::good:
            relevant = relevant_bits.read_bit() ? 1 : 0;
            break;
        case IndexClass::bad:
            relevant = relevant_bits.read_bit() ? 1 : 0;
            colors[relevant][i] = bad_colors.read_bit() ? Color::blue : Color::red;
            colors[1 - relevant][i] = Color::red;
            break;
        case IndexClass::neutral: {
            if (next_trit >= e.v_neutral.size()) throw truncation_error("neutral trit string exhausted");
            const std::uint8_t c = e.v_neutral[next_trit++];
            const int with_sibling = sibling[0] ? 0 : 1;
            if (c == 2) {
                relevant = 1 - with_sibling;
                colors[with_sibling][i] = Color::red;
            } else {
                relevant = with_sibling;
                colors[with_sibling][i] = c == 0 ? Color::red : Color::blue;
            }
            break;
        }
        }
        rebuild[relevant].set_degree(i, read_degree(degrees[relevant]));
    }

    if (!degrees[0].at_end() || !degrees[1].at_end()) throw corruption_error("unconsumed degree bits");
    if (!relevant_bits.at_end() || !bad_colors.at_end() || next_trit != e.v_neutral.size())
        throw corruption_error("unconsumed class bits");
    return {ColoredTree(rebuild[0].finish(), std::move(colors[0])),
            ColoredTree(rebuild[1].finish(), std::move(colors[1]))};
}

std::size_t colored_size_bits(std::size_t n, std::size_t g, std::size_t m) {
    if (n == 0 || 2 * g + 1 > n || m != n - 1 - 2 * g)
        throw argument_error("inconsistent sizes: need m = n-1-2g >= 0 (n=" + std::to_string(n) +
                             ", g=" + std::to_string(g) + ", m=" + std::to_string(m) + ")");
    return 2 * n + 3 * g + packed_trit_bits(m);
}

double colored_bound_bits(std::size_t n) { return (2.0 + std::log2(3.0)) * static_cast<double>(n); }

ColoredQueries::ColoredQueries(ColoredTree cmin, ColoredTree cmax) : cmin_(std::move(cmin)), cmax_(std::move(cmax)) {
    if (cmin_.n() != cmax_.n()) throw argument_error("cMin and cMax differ in size");
}

std::size_t ColoredQueries::answer(QueryKind kind, std::size_t i) const { return query_trees(cmin_, cmax_, kind, i); }

} // namespace nvenc
