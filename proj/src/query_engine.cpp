#include "nvenc/query_engine.hpp"

#include <string>

namespace nvenc {

namespace {

void check_query_index(const ColoredTree& t, std::size_t i) {
    if (i < 1 || i > t.n())
        throw argument_error("query index " + std::to_string(i) + " outside 1.." + std::to_string(t.n()));
}

std::size_t next_by_color_walk(const ColoredTree& ct, std::size_t i) {
    check_query_index(ct, i);
    const OrdinalTree& t = ct.tree();
    std::size_t j = i;
    while (auto s = t.right_sibling(j)) {
        if (ct.is_red(j)) return *s;
        j = *s;
    }
    for (std::size_t up = t.parent(j); up != 0; up = t.parent(up)) {
        if (auto s = t.right_sibling(up)) return *s;
    }
    return t.n() + 1;
}

} // namespace

std::size_t psv_from_tree(const ColoredTree& cmin, std::size_t i) {
    check_query_index(cmin, i);
    return cmin.tree().parent(i);
}

std::size_t nsv_from_tree(const ColoredTree& cmin, std::size_t i) { return next_by_color_walk(cmin, i); }

std::size_t plv_from_tree(const ColoredTree& cmax, std::size_t i) {
    check_query_index(cmax, i);
    return cmax.tree().parent(i);
}

std::size_t nlv_from_tree(const ColoredTree& cmax, std::size_t i) { return next_by_color_walk(cmax, i); }

std::size_t query_trees(const ColoredTree& cmin, const ColoredTree& cmax, QueryKind kind, std::size_t i) {
    switch (kind) {
    case QueryKind::psv: return psv_from_tree(cmin, i);
    case QueryKind::nsv: return nsv_from_tree(cmin, i);
    case QueryKind::plv: return plv_from_tree(cmax, i);
    case QueryKind::nlv: return nlv_from_tree(cmax, i);
    }
    throw argument_error("unknown query kind");
}

} // namespace nvenc
