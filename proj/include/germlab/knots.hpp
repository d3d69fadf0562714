#pragma once

#include <string>
#include <vector>

#include "germlab/diagram.hpp"
#include "germlab/laurent.hpp"
#include "germlab/polyline.hpp"
#include "germlab/rng.hpp"

namespace germlab {

struct KnotShape {
    std::string name;
    std::vector<Vec3> points;  // closed polygon, first vertex not repeated
    IntPoly alexander;         // expected normal form
};

// Built-in polygon table: unknot, trefoil, figure-eight (64 vertices each).
const std::vector<KnotShape>& knot_table();
const KnotShape& knot_by_name(const std::string& name);

// Linking number of two closed components, computed independently from the
// Gauss solid-angle sum and from the diagram half sum of crossing signs.
// The routes must agree; on disagreement the curves are refined once and
// both routes rerun before failing.
int linking_number_gauss(const PolyLink& link, int comp_a, int comp_b, Rng& rng);

// Alexander polynomial (normal form) from a single-component diagram.
IntPoly alexander_polynomial(const Diagram& dia);

// Convenience: diagram + Alexander for one closed component.
IntPoly alexander_of_component(const PolyComponent& comp, Rng& rng);

// Alexander polynomial of every closed component, in component order.
std::vector<IntPoly> alexander_per_component(const PolyLink& link, Rng& rng);

// Connected sum: translates b clear of a along +x, opens one edge of each at
// the facing sides, and joins them with two straight bridges. Bridge pairs
// that come near either polygon are rejected and the next edge pair tried.
PolyComponent connected_sum(const PolyComponent& a, const PolyComponent& b);

}  // namespace germlab
