#pragma once

#include <string>
#include <utility>
#include <vector>

#include "germlab/polyline.hpp"
#include "germlab/rng.hpp"
#include "germlab/vec.hpp"

namespace germlab {

// One transversal double point of the projected link. Arc indices are the
// Wirtinger generators: in/out are the under strand arcs, over the strand
// passing above. Sign is the handedness of (over direction, under direction).
struct Crossing {
    int over_comp = 0, under_comp = 0;
    int over_arc = 0, in_arc = 0, out_arc = 0;
    int sign = 0;
    Vec2 where;
};

struct Diagram {
    int arc_count = 0;
    std::vector<int> arc_comp;
    std::vector<Crossing> crossings;
    // Per component, the crossings met along the walk: (crossing index, true
    // when passing over). Basis of the Gauss code.
    std::vector<std::vector<std::pair<int, bool>>> events;
    Vec3 direction{0, 0, 1};  // projection direction in input coordinates

    int writhe() const;
    // Half sum of signs over crossings between the two given components.
    double half_linking(int comp_a, int comp_b) const;
    std::string gauss_code() const;
};

// Projects the link along z after a seeded rotation, rejecting degenerate
// projections (overlapping segments, crossings at vertices or with no depth
// separation, coincident crossings) and retrying with fresh rotations.
// Requires every component closed with at least 3 vertices.
Diagram project_generic(const PolyLink& link, Rng& rng, int max_attempts = 64);

}  // namespace germlab
