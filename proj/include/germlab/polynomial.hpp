#pragma once

#include <cmath>
#include <vector>

#include "germlab/rational.hpp"

namespace germlab {

// Term of F(x, y, t): coeff * x^ex * y^ey * t^et.  Spatial exponents are
// integers; the t-exponent may be rational (t^{5/4} and friends appear in
// tangency-order constructions).
struct PolyTerm {
    Rational coeff;
    int ex = 0;
    int ey = 0;
    Rational et = Rational(0);
};

// 2D polynomial with double coefficients, the result of fixing t.
struct Poly2 {
    struct Term {
        double c;
        int ex, ey;
    };
    std::vector<Term> terms;
    int max_ex = 0;
    int max_ey = 0;

    double eval(double x, double y) const;

    // Row evaluation with precomputed x-power tables; ypow has max_ey+1 entries.
    double eval_pow(const double* xpow, const double* ypow) const;
};

struct Poly {
    std::vector<PolyTerm> terms;

    double eval(double x, double y, double t) const;

    // Fixes t > 0, folding t^et into the coefficients.
    Poly2 at_t(double t) const;
};

}  // namespace germlab
