#pragma once

#include "germlab/model.hpp"
#include "germlab/polyline.hpp"

namespace germlab {

struct SectionOptions {
    int resolution = 256;   // grid cells per unit of t
    double window = 3.0;    // contour window half-width, in units of t
    bool glue = true;

    double spacing(double t) const { return t / resolution; }
    double glue_tolerance(double t) const { return 4 * spacing(t); }
};

// Section of the model at scale t: exact polylines for cone and Holder
// sheets, contour extraction for implicit sheets, then endpoint gluing
// across sheets.  An empty link (no sheet reaches the window) is a valid
// result, not an error.
PolyLink section_at(const GermModel& model, double t, const SectionOptions& opts = {});

// Section of a single sheet, no cross-sheet gluing.
PolyLink section_of_sheet(const Sheet& sheet, double t, const SectionOptions& opts = {});

}  // namespace germlab
