#pragma once

#include <string>
#include <vector>

#include "germlab/vec.hpp"

namespace germlab {

// One polyline of a section.  Closed components do not repeat the first
// vertex; the closing edge back to pts.front() is implicit.
struct PolyComponent {
    std::vector<Vec3> pts;
    bool closed = false;
    std::string tag;  // source sheet name(s), '+'-joined after gluing

    double length() const;
};

struct PolyLink {
    double t = 1;
    std::vector<PolyComponent> comps;
};

struct LinkSummary {
    int closed_count = 0;
    int open_count = 0;
    std::vector<Vec3> endpoints;
    std::vector<double> lengths;
    double total_length = 0;
};

LinkSummary component_analysis(const PolyLink& link);

// Nearest-distance queries against a set of segments.
class PolylineIndex {
public:
    explicit PolylineIndex(const PolyLink& link);
    explicit PolylineIndex(const PolyComponent& comp);

    double distance(const Vec3& p) const;
    bool empty() const { return segs_.empty(); }

private:
    struct Seg {
        Vec3 a, b;
    };
    std::vector<Seg> segs_;
    void add(const PolyComponent& comp);
};

double hausdorff_distance(const PolyLink& a, const PolyLink& b);

// Resamples to n points spaced evenly by arclength.  Closed components keep
// n distinct points (the closing edge stays implicit); open ones keep both
// endpoints exactly.
PolyComponent resample(const PolyComponent& comp, int n);

PolyComponent subdivide(const PolyComponent& comp);

// Appends the straight closing edge's midpoint-free closure: marks the
// component closed; the implicit edge from back() to front() closes the gap.
PolyComponent close_component(const PolyComponent& comp);

void sort_components(std::vector<PolyComponent>& comps);

double component_min_origin_distance(const PolyComponent& comp);

}  // namespace germlab
