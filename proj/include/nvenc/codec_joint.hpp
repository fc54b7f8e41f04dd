#pragma once

#include <cstddef>
#include <utility>

#include "nvenc/array_model.hpp"
#include "nvenc/bitio.hpp"
#include "nvenc/heap_builder.hpp"

namespace nvenc {

// Min(A) and Max(A) of an array without consecutive equal elements in
// exactly 3n-1 bits: U[i] = 1 iff i is a leaf of Min(A) (0 < i < n), and
// each tree's degree string holds the unary degrees of node 0 and of the
// nodes internal to that tree.
struct JointEncoding {
    std::size_t n = 0;
    BitStream u;
    BitStream t_min;
    BitStream t_max;

    std::size_t payload_bits() const noexcept { return u.size() + t_min.size() + t_max.size(); }

    friend bool operator==(const JointEncoding&, const JointEncoding&) = default;
};

// Throws precondition_error if the trees break the leaf/internal duality.
JointEncoding encode_joint(const OrdinalTree& min_tree, const OrdinalTree& max_tree);
JointEncoding encode_joint(const ValueArray& a);

// Throws corruption_error on exhausted streams, unattachable nodes or
// unconsumed bits.
std::pair<OrdinalTree, OrdinalTree> decode_joint(const JointEncoding& e);

// PSV/PLV from the decoded pair. Next-* queries are not supported.
class JointQueries {
public:
    JointQueries(OrdinalTree min_tree, OrdinalTree max_tree);

    std::size_t n() const noexcept { return min_.n(); }
    bool supports(QueryKind kind) const noexcept { return kind == QueryKind::psv || kind == QueryKind::plv; }
    std::size_t answer(QueryKind kind, std::size_t i) const;

    const OrdinalTree& min_tree() const noexcept { return min_; }
    const OrdinalTree& max_tree() const noexcept { return max_; }

private:
    OrdinalTree min_;
    OrdinalTree max_;
};

} // namespace nvenc
