#include "germlab/fit.hpp"

#include <cmath>
#include <limits>

#include "germlab/errors.hpp"

namespace germlab {

ExponentFit fit_loglog(const std::vector<double>& scales, const std::vector<double>& values) {
    if (scales.size() != values.size() || scales.size() < 2)
        throw InvalidInput("fit_loglog needs >= 2 matching samples");
    ExponentFit fit;
    fit.scales = scales;
    fit.values = values;

    constexpr double floor = 1e-30;
    std::vector<double> lx, ly;
    for (std::size_t i = 0; i < scales.size(); ++i) {
        if (!(scales[i] > 0)) throw InvalidInput("fit_loglog scales must be positive");
        if (values[i] < floor) continue;  // coincident sample, no log
        lx.push_back(std::log(scales[i]));
        ly.push_back(std::log(values[i]));
    }
    if (lx.size() < 2) {
        fit.degenerate = true;
        fit.slope = std::numeric_limits<double>::infinity();
        fit.r2 = 1;
        return fit;
    }
    double n = double(lx.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        sx += lx[i];
        sy += ly[i];
        sxx += lx[i] * lx[i];
        sxy += lx[i] * ly[i];
        syy += ly[i] * ly[i];
    }
    double den = n * sxx - sx * sx;
    if (std::fabs(den) < 1e-12) throw ComputationError("fit_loglog: scales are all equal");
    fit.slope = (n * sxy - sx * sy) / den;
    fit.intercept = (sy - fit.slope * sx) / n;
    double ss_tot = syy - sy * sy / n;
    double ss_res = 0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        double e = ly[i] - (fit.slope * lx[i] + fit.intercept);
        ss_res += e * e;
    }
    fit.r2 = ss_tot > 1e-30 ? 1.0 - ss_res / ss_tot : 1.0;
    return fit;
}

}  // namespace germlab
