#pragma once

#include <string>
#include <vector>

#include "germlab/polyline.hpp"

namespace germlab {

// Containment forest of the closed components of a link, computed from the
// (x, y) projection. Node i corresponds to comps[node_comp[i]]; parent -1
// means outermost.
struct NestingTree {
    std::vector<int> node_comp;
    std::vector<int> parent;
    std::vector<std::vector<int>> children;
    std::vector<int> roots;

    // Canonical string of the forest shape, invariant under reordering.
    std::string canonical() const;
};

NestingTree nesting_tree(const PolyLink& link);

// Shape-only comparison: true iff the two containment forests are isomorphic
// as unordered rooted forests.
bool compare_nesting(const NestingTree& a, const NestingTree& b);

}  // namespace germlab
