#pragma once

#include <vector>

#include "germlab/section.hpp"

namespace germlab {

struct ConvergenceReport {
    std::vector<double> ladder;
    std::vector<double> hausdorff;  // between consecutive rescaled sections
    double tolerance = 1e-3;
    bool converged = false;
};

struct TangentConeResult {
    PolyLink link;  // section at the smallest scale, rescaled by 1/t
    ConvergenceReport report;
};

std::vector<double> dyadic_ladder(int hi_exp, int lo_exp);  // 2^-hi ... 2^-lo

// Rescaled-section limit along a decreasing dyadic ladder (length >= 4).
// converged = last consecutive Hausdorff distance < tolerance and the
// distances are non-increasing over the final three rungs; on failure the
// last iterate is still returned.
TangentConeResult tangent_cone_link(const GermModel& model,
                                    const std::vector<double>& ladder,
                                    const SectionOptions& opts = {},
                                    double tolerance = 1e-3);

// Splits components of a (rescaled) link at passages through the origin:
// cuts each component at local minima of |p| below ptol, drops the vertices
// inside the ptol ball, closes arcs whose both ends reached the origin, and
// rejoins single-ended arcs through the origin, pairing them by opposite
// tangent direction and matching curvature.
PolyLink pinch_split(const PolyLink& link, double ptol = 0.1);

}  // namespace germlab
