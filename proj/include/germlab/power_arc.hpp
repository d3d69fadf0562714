#pragma once

#include <cmath>
#include <vector>

#include "germlab/rational.hpp"
#include "germlab/vec.hpp"

namespace germlab {

// One coordinate of an arc: sum of c * t^e terms, exponents exact.
struct PowerTerm {
    double coeff = 0;
    Rational exp = Rational(1);
};

struct PowerSeries1 {
    std::vector<PowerTerm> terms;

    double eval(double t) const {
        double s = 0;
        for (const PowerTerm& m : terms) s += m.coeff * std::pow(t, m.exp.value());
        return s;
    }
};

// Arc t -> (x(t), y(t), z(t)) for t in (0,1], tending to the origin as t -> 0.
// Every exponent must be positive; z stays empty for 3-dimensional models.
struct PowerArc {
    PowerSeries1 x, y, z;

    Vec3 eval(double t) const { return {x.eval(t), y.eval(t), z.eval(t)}; }

    Vec4 eval4(double t) const { return {x.eval(t), y.eval(t), z.eval(t), t}; }

    bool exponents_positive() const {
        for (const PowerSeries1* c : {&x, &y, &z})
            for (const PowerTerm& m : c->terms)
                if (!(Rational(0) < m.exp)) return false;
        return true;
    }
};

}  // namespace germlab
