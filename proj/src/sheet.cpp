#include "germlab/sheet.hpp"

#include "germlab/errors.hpp"

namespace germlab {

double HolderCoord::eval(double u, double t) const {
    double s = 0;
    for (const HolderTerm& m : terms) {
        double up = 1;
        for (int i = 0; i < m.uexp; ++i) up *= u;
        s += m.coeff.value() * up * std::pow(t, m.texp.value());
    }
    return s;
}

double polyline_length(const std::vector<Vec3>& pts, bool closed) {
    double L = 0;
    for (std::size_t i = 1; i < pts.size(); ++i) L += dist(pts[i - 1], pts[i]);
    if (closed && pts.size() > 2) L += dist(pts.back(), pts.front());
    return L;
}

Sheet make_cone_sheet(std::string name, std::vector<Vec3> curve, bool closed, bool pinched) {
    if (curve.size() < 2) throw InvalidInput("cone sheet '" + name + "' needs >= 2 vertices");
    if (!pinched)
        for (const Vec3& v : curve)
            if (norm(v) == 0)
                throw InvalidInput("cone sheet '" + name +
                                   "' has a vertex at the origin without the pinched flag");
    ConeSheet c;
    c.curve = std::move(curve);
    c.closed = closed;
    c.pinched = pinched;
    return Sheet{std::move(name), std::move(c)};
}

Sheet make_implicit_sheet(std::string name, Poly surface, std::vector<Poly> constraints) {
    if (surface.terms.empty())
        throw InvalidInput("implicit sheet '" + name + "' has a zero polynomial");
    bool all_zero = true;
    for (const PolyTerm& m : surface.terms)
        if (m.coeff.num != 0) all_zero = false;
    if (all_zero) throw InvalidInput("implicit sheet '" + name + "' has a zero polynomial");
    ImplicitSheet s;
    s.surface = std::move(surface);
    s.constraints = std::move(constraints);
    return Sheet{std::move(name), std::move(s)};
}

Sheet make_holder_triangle(std::string name, Rational beta, Rational q, int sign) {
    if (!(Rational(1) <= beta))
        throw InvalidInput("holder triangle '" + name + "': beta >= 1 required");
    if (!(beta < q)) throw InvalidInput("holder triangle '" + name + "': beta < q required");
    if (sign != 1 && sign != -1)
        throw InvalidInput("holder triangle '" + name + "': sign must be +1 or -1");
    HolderSheet h;
    h.beta = beta;
    h.q = q;
    h.sign = sign;
    h.x.terms = {{Rational(1), 1, beta}};
    h.y.terms = {{Rational(sign), 0, q}};
    return Sheet{std::move(name), std::move(h)};
}

}  // namespace germlab
