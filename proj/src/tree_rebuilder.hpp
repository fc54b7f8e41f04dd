#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nvenc/errors.hpp"
#include "nvenc/heap_builder.hpp"

namespace nvenc::detail {

// Rebuilds a preorder-labeled tree from per-node degrees. Node i becomes the
// rightmost child of the deepest node on the rightmost path that still lacks
// children, i.e. the top of a stack of unfinished nodes.
class TreeRebuilder {
public:
    explicit TreeRebuilder(std::size_t n) : parents_(n + 1, 0) {}

    struct Attachment {
        std::size_t parent;
        bool has_right_sibling;
    };

    void set_degree(std::size_t node, std::size_t degree) {
        if (degree > 0) pending_.push_back({node, degree});
    }

    Attachment attach(std::size_t node) {
        if (pending_.empty())
            throw corruption_error("node " + std::to_string(node) + " has no parent with open child slots");
        Pending& top = pending_.back();
        parents_[node] = top.node;
        const Attachment a{top.node, --top.missing > 0};
        if (top.missing == 0) pending_.pop_back();
        return a;
    }

    OrdinalTree finish() {
        if (!pending_.empty())
            throw corruption_error("node " + std::to_string(pending_.back().node) + " declares more children than exist");
        return OrdinalTree::from_parents(std::move(parents_));
    }

private:
    struct Pending {
        std::size_t node;
        std::size_t missing;
    };
    std::vector<std::size_t> parents_;
    std::vector<Pending> pending_;
};

} // namespace nvenc::detail
