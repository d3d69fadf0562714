#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "germlab/errors.hpp"
#include "germlab/fit.hpp"
#include "germlab/polynomial.hpp"
#include "germlab/power_arc.hpp"
#include "germlab/rational.hpp"

using namespace germlab;

TEST_CASE("rational arithmetic is exact and normalized") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(3, 4) * Rational(2, 3) == Rational(1, 2));
    CHECK(Rational(5, 2) - Rational(2) == Rational(1, 2));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(7, 2).value() == doctest::Approx(3.5));
    CHECK(Rational(6, 3).is_integer());
    CHECK_FALSE(Rational(5, 4).is_integer());
    CHECK(Rational(-3, 2).str() == "-3/2");
    CHECK(Rational(4, 2).str() == "2");
    CHECK_THROWS_AS(Rational(1, 0), InvalidInput);
}

TEST_CASE("rational parsing") {
    CHECK(parse_rational("5/2") == Rational(5, 2));
    CHECK(parse_rational("3") == Rational(3));
    CHECK(parse_rational("-7/4") == Rational(-7, 4));
    CHECK(parse_rational("0.25") == Rational(1, 4));
    CHECK(parse_rational("2.5") == Rational(5, 2));
    CHECK_THROWS_AS(parse_rational("a/b"), InvalidInput);
    CHECK_THROWS_AS(parse_rational("1/0"), InvalidInput);
    CHECK_THROWS_AS(parse_rational(""), InvalidInput);
}

TEST_CASE("power series and arcs evaluate term by term") {
    PowerArc a;
    a.x.terms = {{1.0, Rational(1)}};
    a.y.terms = {{2.0, Rational(5, 4)}, {-1.0, Rational(2)}};
    double t = 0.25;
    Vec3 p = a.eval(t);
    CHECK(p.x == doctest::Approx(0.25));
    CHECK(p.y == doctest::Approx(2 * std::pow(0.25, 1.25) - 0.0625));
    CHECK(p.z == 0);
    CHECK(a.exponents_positive());
    a.z.terms = {{1.0, Rational(0)}};
    CHECK_FALSE(a.exponents_positive());
}

TEST_CASE("polynomials evaluate with rational t-exponents") {
    // (x^2 + y^2)^2 - 4 x^2 t^2 - t^5 vanishes at (0, t^{5/4}).
    Poly f;
    f.terms = {{Rational(1), 4, 0, Rational(0)}, {Rational(2), 2, 2, Rational(0)},
               {Rational(1), 0, 4, Rational(0)}, {Rational(-4), 2, 0, Rational(2)},
               {Rational(-1), 0, 0, Rational(5)}};
    double t = 0.3;
    double y = std::pow(t, 1.25);
    CHECK(f.eval(0, y, t) == doctest::Approx(0).epsilon(1e-14));
    CHECK(f.eval(0.1, 0.2, t) ==
          doctest::Approx(std::pow(0.01 + 0.04, 2) - 4 * 0.01 * t * t - std::pow(t, 5)));

    Poly2 g = f.at_t(t);
    CHECK(g.eval(0.07, y) == doctest::Approx(f.eval(0.07, y, t)));
}

TEST_CASE("log-log fit recovers exact power laws") {
    std::vector<double> scales, values;
    for (int j = 2; j <= 10; ++j) {
        double t = std::pow(2.0, -j);
        scales.push_back(t);
        values.push_back(3 * std::pow(t, 1.5));
    }
    ExponentFit fit = fit_loglog(scales, values);
    CHECK(fit.slope == doctest::Approx(1.5).epsilon(1e-9));
    CHECK(std::exp(fit.intercept) == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(fit.r2 == doctest::Approx(1.0).epsilon(1e-9));
    CHECK_FALSE(fit.degenerate);
}

TEST_CASE("fit is order independent") {
    std::vector<double> scales = {0.25, 0.125, 0.0625, 0.03125, 0.015625};
    std::vector<double> values;
    for (double s : scales) values.push_back(std::pow(s, 2.5) * (1 + 0.01 * s));
    ExponentFit a = fit_loglog(scales, values);
    std::vector<double> rs(scales.rbegin(), scales.rend());
    std::vector<double> rv(values.rbegin(), values.rend());
    ExponentFit b = fit_loglog(rs, rv);
    CHECK(a.slope == doctest::Approx(b.slope).epsilon(1e-12));
    CHECK(a.slope == doctest::Approx(2.5).epsilon(0.01));
}

TEST_CASE("identically zero data is flagged degenerate") {
    std::vector<double> scales = {0.5, 0.25, 0.125, 0.0625, 0.03125};
    std::vector<double> values(scales.size(), 0.0);
    ExponentFit fit = fit_loglog(scales, values);
    CHECK(fit.degenerate);
    CHECK(std::isinf(fit.slope));
}
