#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "germlab/constructions.hpp"
#include "germlab/errors.hpp"
#include "germlab/metrics.hpp"
#include "germlab/nesting.hpp"
#include "germlab/section.hpp"
#include "germlab/tangent_cone.hpp"

using namespace germlab;

namespace {

std::vector<Vec3> circle(double cx, double cy, double r, int n = 64) {
    std::vector<Vec3> pts;
    for (int k = 0; k < n; ++k) {
        double u = 2 * std::numbers::pi * k / n;
        pts.push_back({cx + r * std::cos(u), cy + r * std::sin(u), 0});
    }
    return pts;
}

}  // namespace

TEST_CASE("cone sections are exact rescalings") {
    GermModel m = sheet_model(3, make_cone_sheet("C", circle(1, 0, 0.5), true));
    PolyLink base = section_at(m, 1.0);
    for (double t : {0.5, 0.125, 0.03125}) {
        PolyLink sec = section_at(m, t);
        REQUIRE(sec.comps.size() == base.comps.size());
        for (std::size_t c = 0; c < sec.comps.size(); ++c) {
            REQUIRE(sec.comps[c].pts.size() == base.comps[c].pts.size());
            for (std::size_t k = 0; k < sec.comps[c].pts.size(); ++k)
                CHECK(dist(sec.comps[c].pts[k], t * base.comps[c].pts[k]) < 1e-12 * t);
        }
    }
}

TEST_CASE("implicit sections are stable under grid refinement") {
    auto [x1, x2] = build_example1(Rational(5));
    double t = 0.125;
    SectionOptions coarse, fine;
    coarse.resolution = 128;
    fine.resolution = 256;
    PolyLink a = section_at(x1, t, coarse);
    PolyLink b = section_at(x1, t, fine);
    LinkSummary sa = component_analysis(a), sb = component_analysis(b);
    CHECK(sa.closed_count == sb.closed_count);
    CHECK(sa.open_count == sb.open_count);
    CHECK(hausdorff_distance(a, b) < 8 * coarse.spacing(t));
    CHECK(compare_nesting(nesting_tree(a), nesting_tree(b)));
}

TEST_CASE("triangle tips never glue across the gap") {
    // Resolvable scales: the 2 t^2 wide figure must exceed the glue
    // tolerance t/64, i.e. t > 1/128.
    GermModel bridge = build_bridge(Rational(3), Rational(2));
    for (double t : {0.25, 0.0625, 1.0 / 64}) {
        LinkSummary s = component_analysis(section_at(bridge, t));
        CHECK(s.closed_count == 0);
        CHECK(s.open_count == 2);
    }
}

TEST_CASE("strand ends glue onto the central sheet") {
    GermModel fam = build_family(1);
    for (double t : {0.125, 0.03125}) {
        LinkSummary s = component_analysis(section_at(fam, t));
        CHECK(s.closed_count == 1);
        CHECK(s.open_count == 0);
    }
}

TEST_CASE("nesting sees containment, not geometry") {
    PolyLink l;
    l.t = 1;
    auto add = [&](std::vector<Vec3> pts) {
        PolyComponent c;
        c.pts = std::move(pts);
        c.closed = true;
        l.comps.push_back(std::move(c));
    };
    add(circle(0, 0, 4));
    add(circle(-1.5, 0, 1));
    add(circle(1.5, 0, 1));
    add(circle(1.5, 0, 0.4));
    NestingTree tree = nesting_tree(l);
    // root(leaf, node(leaf))
    CHECK(tree.roots.size() == 1);
    CHECK(tree.canonical() == "((())())");

    PolyLink shifted = l;
    for (PolyComponent& c : shifted.comps)
        for (Vec3& p : c.pts) {
            double x = 0.6 * p.x - 0.8 * p.y + 7;
            double y = 0.8 * p.x + 0.6 * p.y - 3;
            p = {x, y, p.z};
        }
    CHECK(compare_nesting(tree, nesting_tree(shifted)));

    PolyLink flat;
    flat.t = 1;
    CHECK(nesting_tree(flat).roots.empty());
    CHECK_FALSE(compare_nesting(tree, nesting_tree(flat)));
}

TEST_CASE("tangent cone of a cone is itself") {
    GermModel m = sheet_model(3, make_cone_sheet("C", circle(1, 0, 0.5), true));
    TangentConeResult tc = tangent_cone_link(m, dyadic_ladder(2, 8));
    CHECK(tc.report.converged);
    CHECK(tc.report.hausdorff.back() < 1e-9);
    REQUIRE(tc.link.comps.size() == 1);
    CHECK(tc.link.comps[0].closed);
}

TEST_CASE("tangent-cone ladders need at least four rungs") {
    GermModel m = sheet_model(3, make_cone_sheet("C", circle(1, 0, 0.5), true));
    CHECK_THROWS_AS(tangent_cone_link(m, {0.5, 0.25, 0.125}), InvalidInput);
}

TEST_CASE("pinch splitting cuts the figure through the origin") {
    auto [x1, x2] = build_example1(Rational(5));
    TangentConeResult tc = tangent_cone_link(x1, dyadic_ladder(4, 14));
    PolyLink split = pinch_split(tc.link);
    LinkSummary s = component_analysis(split);
    CHECK(s.closed_count == 4);
    CHECK(s.open_count == 0);
    CHECK(split.comps.size() > tc.link.comps.size());

    // Far from the origin nothing is pinched.
    PolyLink far;
    far.t = 1;
    PolyComponent c;
    c.pts = circle(3, 3, 1);
    c.closed = true;
    far.comps = {c};
    PolyLink same = pinch_split(far);
    CHECK(same.comps.size() == 1);
    CHECK(same.comps[0].pts.size() == far.comps[0].pts.size());
}

TEST_CASE("tangency order of synthetic arcs") {
    PowerArc a, b;
    a.x.terms = {{1.0, Rational(1)}};
    a.y.terms = {{1.0, Rational(2)}};
    b.x.terms = {{1.0, Rational(1)}};
    b.y.terms = {{1.0, Rational(2)}, {1.0, Rational(3)}};
    ExponentFit fit = tangency_order(a, b, dyadic_ladder(2, 8));
    CHECK(fit.slope == doctest::Approx(3.0).epsilon(1e-6));
    CHECK_THROWS_AS(tangency_order(a, b, {0.5, 0.25}), InvalidInput);
    ExponentFit same = tangency_order(a, a, dyadic_ladder(2, 8));
    CHECK(same.degenerate);
}

TEST_CASE("inner distance on a round cone beats the chord") {
    GermModel m = sheet_model(3, make_cone_sheet("C", circle(0, 0, 1), true));
    PowerArc east, west;
    east.x.terms = {{1.0, Rational(1)}};
    west.x.terms = {{-1.0, Rational(1)}};
    InnerDistanceReport rep = inner_distance_exponent(m, east, west, dyadic_ladder(2, 6));
    CHECK(rep.fit.slope == doctest::Approx(1.0).epsilon(0.05));
    // Sandwich: the unrolled-cone geodesic (2 sqrt2 sin(pi/(2 sqrt2)) t)
    // from below, the along-ring walk (pi t) from above; both beat the
    // ambient chord 2t.
    double inner_c = std::exp(rep.fit.intercept);
    CHECK(inner_c > 2.5);
    CHECK(inner_c < std::numbers::pi * 1.02);
    ExponentFit outer = tangency_order(east, west, dyadic_ladder(2, 6));
    CHECK(std::exp(outer.intercept) == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("point to sheet distance at matching scale") {
    GermModel m = sheet_model(3, make_cone_sheet("C", circle(0, 0, 1), true));
    double t = 0.125;
    CHECK(distance_to_sheet(m, "C", {t, 0, 0, t}) < 0.02 * t);
    CHECK(distance_to_sheet(m, "C", {2 * t, 0, 0, t}) == doctest::Approx(t).epsilon(0.15));
    CHECK_THROWS_AS(distance_to_sheet(m, "missing", {0, 0, 0, t}), InvalidInput);
}

TEST_CASE("close and resample keep endpoints honest") {
    PolyComponent open;
    open.pts = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}};
    PolyComponent closed = close_component(open);
    CHECK(closed.closed);
    CHECK(closed.pts.size() >= open.pts.size());
    PolyComponent fine = resample(closed, 32);
    CHECK(fine.pts.size() == 32);
    PolyComponent refined = resample(open, 17);
    CHECK(refined.pts.front() == open.pts.front());
    CHECK(refined.pts.back() == open.pts.back());
}
