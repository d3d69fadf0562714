#pragma once

#include <string>
#include <vector>

#include "germlab/fit.hpp"
#include "germlab/model.hpp"
#include "germlab/power_arc.hpp"
#include "germlab/section.hpp"

namespace germlab {

// Exponent of |a(t) - b(t)| as t -> 0 along the given ladder of scales.
// Needs at least 5 rungs; coincident arcs yield the degenerate fit.
ExponentFit tangency_order(const PowerArc& a, const PowerArc& b,
                           const std::vector<double>& ladder);

// Distance from a point at height point.t to the named sheet, measured
// against sections of the sheet taken in a band of nearby scales (point.t
// scaled by 2^(j/4), j = -4..4) with the scale difference in the metric.
double distance_to_sheet(const GermModel& model, const std::string& sheet, const Vec4& point,
                         const SectionOptions& opts = {});

struct RatioInterval {
    double t = 0;
    double lo = 0;
    double hi = 0;
};

// Per-scale range of d(p, target)/t over points p sampled from the source
// sheets' sections. Stable ranges across scales witness that the sources
// stay at distance proportional to the scale from the target.
std::vector<RatioInterval> distance_ratio_intervals(const GermModel& model,
                                                    const std::vector<std::string>& sources,
                                                    const std::string& target,
                                                    const std::vector<double>& ladder,
                                                    int samples_per_component = 128,
                                                    const SectionOptions& opts = {});

struct InnerDistanceReport {
    std::vector<double> scales;
    std::vector<double> distances;
    ExponentFit fit;
};

// Exponent of the inner (on-surface) distance between a(t) and b(t). The
// surface is meshed by a ladder of section rings descending from each query
// scale toward the origin, rings are wired vertically between matched
// components, and the innermost ring is joined at the origin; distances come
// from shortest paths in that mesh.
InnerDistanceReport inner_distance_exponent(const GermModel& model, const PowerArc& a,
                                            const PowerArc& b,
                                            const std::vector<double>& ladder,
                                            const SectionOptions& opts = {});

struct DistortionReport {
    std::vector<double> scales;
    std::vector<double> min_ratio;
    std::vector<double> max_ratio;
    int sample_count = 0;   // total points pushed through the map
    double global_distortion = 0;
    double onto_error = 0;  // max over samples of d(f(p), target section) / t
    double stability = 0;   // worst relative drift of ratios between scales
    bool certified = false;
    std::string reason;
};

// Samples the source germ scale by scale, pushes samples through the map,
// and measures pairwise distance distortion plus how precisely the image
// lands on the target germ. Certifies when distortion, drift and the onto
// error are all within the given bounds. samples is the total point budget
// spread over the ladder.
DistortionReport certify_bilipschitz(const GermModel& source, const GermModel& target,
                                     const PLMap& map, const std::vector<double>& ladder,
                                     int samples = 10000,
                                     double distortion_bound = 100.0,
                                     double onto_tolerance = 1e-6,
                                     double stability_bound = 0.10,
                                     const SectionOptions& opts = {});

}  // namespace germlab
