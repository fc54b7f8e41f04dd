#include "nvenc/codec_joint.hpp"

#include <string>

#include "tree_rebuilder.hpp"

namespace nvenc {

JointEncoding encode_joint(const OrdinalTree& min_tree, const OrdinalTree& max_tree) {
    if (min_tree.n() != max_tree.n()) throw argument_error("Min and Max trees differ in size");
    if (auto bad = find_duality_violation(min_tree, max_tree))
        throw precondition_error("node must be a leaf in exactly one of Min(A), Max(A)", *bad);

    JointEncoding e;
    e.n = min_tree.n();
    write_degree(e.t_min, min_tree.degree(0));
    write_degree(e.t_max, max_tree.degree(0));
    for (std::size_t i = 1; i < e.n; ++i) {
        const bool leaf_in_min = min_tree.is_leaf(i);
        e.u.push_back(leaf_in_min);
        if (leaf_in_min) {
            write_degree(e.t_max, max_tree.degree(i));
        } else {
            write_degree(e.t_min, min_tree.degree(i));
        }
    }
    return e;
}

JointEncoding encode_joint(const ValueArray& a) {
    if (auto i = a.first_consecutive_equal())
        throw precondition_error("joint encoding needs an array without consecutive equal elements", *i);
    return encode_joint(build_min_heap(a), build_max_heap(a));
}

std::pair<OrdinalTree, OrdinalTree> decode_joint(const JointEncoding& e) {
    if (e.n == 0) throw empty_array_error();
    if (e.u.size() != e.n - 1)
        throw corruption_error("U has " + std::to_string(e.u.size()) + " bits, expected " + std::to_string(e.n - 1));

    detail::TreeRebuilder min_rebuild(e.n);
    detail::TreeRebuilder max_rebuild(e.n);
    BitReader min_degrees(e.t_min);
    BitReader max_degrees(e.t_max);
    min_rebuild.set_degree(0, read_degree(min_degrees));
    max_rebuild.set_degree(0, read_degree(max_degrees));

    for (std::size_t i = 1; i <= e.n; ++i) {
        min_rebuild.attach(i);
        max_rebuild.attach(i);
        if (i == e.n) break;
        if (e.u[i - 1]) {
            max_rebuild.set_degree(i, read_degree(max_degrees));
        } else {
            min_rebuild.set_degree(i, read_degree(min_degrees));
        }
    }
    if (!min_degrees.at_end() || !max_degrees.at_end()) throw corruption_error("unconsumed degree bits");
    return {min_rebuild.finish(), max_rebuild.finish()};
}

JointQueries::JointQueries(OrdinalTree min_tree, OrdinalTree max_tree)
    : min_(std::move(min_tree)), max_(std::move(max_tree)) {
    if (min_.n() != max_.n()) throw argument_error("Min and Max trees differ in size");
}

std::size_t JointQueries::answer(QueryKind kind, std::size_t i) const {
    if (!supports(kind)) throw argument_error("scheme 1 answers psv/plv only");
    if (i < 1 || i > n())
        throw argument_error("query index " + std::to_string(i) + " outside 1.." + std::to_string(n()));
    return kind == QueryKind::psv ? min_.parent(i) : max_.parent(i);
}

} // namespace nvenc
