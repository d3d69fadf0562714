#pragma once

#include <vector>

namespace germlab {

// Least-squares fit of log(value) against log(scale). Values below the
// coincidence floor are treated as exact zero and reported as +infinity
// (the quantity vanishes faster than any power).
struct ExponentFit {
    double slope = 0;
    double intercept = 0;
    double r2 = 0;
    std::vector<double> scales;
    std::vector<double> values;
    bool degenerate = false;  // all values at the coincidence floor
};

ExponentFit fit_loglog(const std::vector<double>& scales, const std::vector<double>& values);

}  // namespace germlab
