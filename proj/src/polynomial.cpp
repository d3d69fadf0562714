#include "germlab/polynomial.hpp"

#include <algorithm>

namespace germlab {

namespace {

double ipow(double b, int e) {
    double r = 1;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

}  // namespace

double Poly2::eval(double x, double y) const {
    double s = 0;
    for (const Term& m : terms) s += m.c * ipow(x, m.ex) * ipow(y, m.ey);
    return s;
}

double Poly2::eval_pow(const double* xpow, const double* ypow) const {
    double s = 0;
    for (const Term& m : terms) s += m.c * xpow[m.ex] * ypow[m.ey];
    return s;
}

double Poly::eval(double x, double y, double t) const {
    double s = 0;
    for (const PolyTerm& m : terms)
        s += m.coeff.value() * ipow(x, m.ex) * ipow(y, m.ey) * std::pow(t, m.et.value());
    return s;
}

Poly2 Poly::at_t(double t) const {
    Poly2 p;
    p.terms.reserve(terms.size());
    for (const PolyTerm& m : terms) {
        double c = m.coeff.value() * std::pow(t, m.et.value());
        p.terms.push_back({c, m.ex, m.ey});
        p.max_ex = std::max(p.max_ex, m.ex);
        p.max_ey = std::max(p.max_ey, m.ey);
    }
    return p;
}

}  // namespace germlab
