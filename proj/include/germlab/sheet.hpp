#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "germlab/polynomial.hpp"
#include "germlab/rational.hpp"
#include "germlab/vec.hpp"

namespace germlab {

// Zero set of F(x,y,t) in the plane z = 0, clipped by constraints g >= 0.
struct ImplicitSheet {
    Poly surface;
    std::vector<Poly> constraints;
};

// Removed arclength interval on a cone sheet's curve: at scale t the interval
// |s - center| < halfwidth * t^(width_exp - 1) is cut out (s is arclength of
// the curve in the {t=1} slice).  width_exp > 1 makes the removed piece a
// Holder triangle with its vertex at the origin.
struct Notch {
    double center = 0;
    double halfwidth = 0;
    Rational width_exp = Rational(2);
};

// Straight cone over a polygonal curve in {t=1}: the section at t is t*curve.
struct ConeSheet {
    std::vector<Vec3> curve;
    bool closed = false;
    bool pinched = false;  // permits a vertex at the spatial origin
    std::optional<Notch> notch;
};

// One coordinate of a parametrized triangle: sum of c * u^j * t^e terms.
struct HolderTerm {
    Rational coeff;
    int uexp = 0;
    Rational texp = Rational(0);
};

struct HolderCoord {
    std::vector<HolderTerm> terms;

    double eval(double u, double t) const;
};

// Parametrized sheet (u,t) in [-1,1] x (0,1].  The plain triangle of exponent
// beta with tip exponent q is x = u*t^beta, y = sign*t^q, z = 0; walls and
// sub-triangles of broken bridges use the same template with other terms.
struct HolderSheet {
    Rational beta = Rational(1);
    Rational q = Rational(2);
    int sign = +1;
    HolderCoord x, y, z;
    // When set, the sub-triangle |u| < t^(gap_exp - beta) is removed and the
    // section splits into two segments.  Used by bridge-breaking surgery;
    // requires beta < gap_exp < q.
    std::optional<Rational> gap_exp;

    Vec3 eval(double u, double t) const { return {x.eval(u, t), y.eval(u, t), z.eval(u, t)}; }
};

struct Sheet {
    std::string name;
    std::variant<ImplicitSheet, ConeSheet, HolderSheet> data;

    bool is_implicit() const { return std::holds_alternative<ImplicitSheet>(data); }
    bool is_cone() const { return std::holds_alternative<ConeSheet>(data); }
    bool is_holder() const { return std::holds_alternative<HolderSheet>(data); }
};

// Sheet factories; these enforce the structural preconditions.
Sheet make_cone_sheet(std::string name, std::vector<Vec3> curve, bool closed,
                      bool pinched = false);
Sheet make_implicit_sheet(std::string name, Poly surface, std::vector<Poly> constraints);
Sheet make_holder_triangle(std::string name, Rational beta, Rational q, int sign);

double polyline_length(const std::vector<Vec3>& pts, bool closed);

}  // namespace germlab
