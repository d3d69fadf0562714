#pragma once

#include <string>
#include <utility>
#include <vector>

#include "germlab/model.hpp"

namespace germlab {

// Tangent-circle pair: two germs with the same pairwise distance behavior
// whose tangent cones nest differently.  k > 4 is the tangency exponent of
// the central sheet's inner branches (arcs "gamma+"/"gamma-" have contact
// order k/4).
std::pair<GermModel, GermModel> build_example1(const Rational& k);

// The canonical piecewise-affine equivalence between the two germs of
// build_example1: identity on U1, horizontal translations on the circles.
PLMap example1_map();

// Bowtie table with coned knots attached at its corners: the first germ
// carries the two knots on opposite sides, the second carries their
// connected sum on the right and a trivial loop on the left.  Shapes are
// closed polygons in arbitrary position; they are normalized and placed
// automatically.  The no-argument form uses the builtin trefoil and
// figure-eight shapes.
std::pair<GermModel, GermModel> build_example3(const std::vector<Vec3>& right_shape,
                                               const std::vector<Vec3>& left_shape,
                                               const std::string& right_name = "custom",
                                               const std::string& left_name = "custom");
std::pair<GermModel, GermModel> build_example3();

// Sheet-by-sheet map X1 -> X2 for a build_example3 pair: identity on the
// table, arclength-proportional cone reparametrizations on the knot cones.
PLMap example3_map(const GermModel& x1, const GermModel& x2);

// Standalone bridge: triangles T+ and T- of exponent beta whose sections
// run at y = +-t^q, with the designated bridge and its four boundary arcs.
GermModel build_bridge(const Rational& q, const Rational& beta);

// Breaking surgery on a designated bridge: removes the sub-bridge
// |x| <= t^p (beta < p < q) and reroutes through two vertical walls at
// x = +-t^p.  Works on triangle-pair bridges and on bridges designated
// inside an implicit sheet.  restore_bridge undoes the surgery.
GermModel break_bridge(const GermModel& model, std::size_t bridge_index, const Rational& p);
GermModel restore_bridge(const GermModel& model);

// Member of the main family: the pinched double-branch sheet G (carrying a
// (3,2)-bridge at its waist) plus two coned strands that wind around each
// other `twists` times before returning.  Links of distinct members match;
// bridge-breaking separates them by linking number.
GermModel build_family(int twists);
inline GermModel build_family_Xi(int twists) { return build_family(twists); }

// Sheet-by-sheet map between two family members (or their surgered
// descendants): identity on G, cone reparametrization on each strand.
PLMap family_map(const GermModel& a, const GermModel& b);

// The zero- and one-twist family members as a ready-made pair.
std::pair<GermModel, GermModel> build_example4();

// Splices a coned copy of the given closed shape into the right strand at
// its designated return-path edge, changing the knot type of the link by
// connected sum.  The shape is normalized and placed beyond the strand.
GermModel attach_connected_sum(const GermModel& base, const std::vector<Vec3>& shape,
                               const std::string& shape_name = "custom");

// Removes from the right strand a shrinking triangle of width exponent
// beta > 1 around its designated return-path vertex; sections lose an
// arclength interval of radius 0.1 * t^(beta-1).
GermModel remove_holder_triangle(const GermModel& model, const Rational& beta);

}  // namespace germlab
