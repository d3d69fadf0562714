#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "germlab/constructions.hpp"
#include "germlab/errors.hpp"
#include "germlab/knots.hpp"
#include "germlab/model_io.hpp"
#include "germlab/nesting.hpp"
#include "germlab/rng.hpp"
#include "germlab/section.hpp"

using namespace germlab;

TEST_CASE("tangent-circle members carry their sheets and arcs") {
    auto [x1, x2] = build_example1(Rational(5));
    for (const char* n : {"U1", "U2", "U3"}) CHECK(x1.has_sheet(n));
    for (const char* n : {"U1", "V2", "V3"}) CHECK(x2.has_sheet(n));
    CHECK(validate(x1).violations.empty());
    CHECK(validate(x2).violations.empty());

    const auto& surf = std::get<ImplicitSheet>(x1.find_sheet("U1")->data).surface;
    for (double t : {0.5, 0.125, 0.01}) {
        Vec3 gp = x1.arcs.at("gamma+").eval(t);
        Vec3 gm = x1.arcs.at("gamma-").eval(t);
        CHECK(std::abs(surf.eval(gp.x, gp.y, t)) < 1e-15);
        CHECK(std::abs(surf.eval(gm.x, gm.y, t)) < 1e-15);
        CHECK(gp.y == doctest::Approx(std::pow(t, 1.25)));
    }
    CHECK_THROWS_AS(build_example1(Rational(4)), InvalidInput);
}

TEST_CASE("both tangent-circle members section into three circles") {
    auto [x1, x2] = build_example1(Rational(6));
    for (const GermModel* m : {&x1, &x2}) {
        LinkSummary s = component_analysis(section_at(*m, 0.125));
        CHECK(s.closed_count == 3);
        CHECK(s.open_count == 0);
    }
}

TEST_CASE("bowtie members section into a single curve") {
    auto [x1, x2] = build_example3();
    REQUIRE(x1.sheets.size() == 3);
    REQUIRE(x2.sheets.size() == 3);
    const Sheet* h = x1.find_sheet("H");
    REQUIRE(h != nullptr);
    const auto& surf = std::get<ImplicitSheet>(h->data).surface;
    for (double t : {0.5, 0.125}) {
        CHECK(surf.eval(t, t, t) == 0);
        CHECK(surf.eval(-t, t, t) == 0);
        CHECK(surf.eval(t, -t, t) == 0);
    }
    for (const GermModel* m : {&x1, &x2}) {
        LinkSummary s = component_analysis(section_at(*m, 0.125));
        CHECK(s.closed_count == 1);
        CHECK(s.open_count == 0);
    }
}

TEST_CASE("bowtie rejects degenerate attachment shapes") {
    std::vector<Vec3> segment = {{0, 0, 0}, {1, 0, 0}};
    CHECK_THROWS_AS(build_example3(segment, knot_by_name("unknot").points), InvalidInput);
}

TEST_CASE("triangle bridge tips sit at the exact powers") {
    GermModel bridge = build_bridge(Rational(3), Rational(2));
    REQUIRE(bridge.bridges.size() == 1);
    const auto& tp = std::get<HolderSheet>(bridge.find_sheet("T+")->data);
    const auto& tm = std::get<HolderSheet>(bridge.find_sheet("T-")->data);
    double t = 0.125;
    CHECK(tp.eval(1, t).x == doctest::Approx(t * t).epsilon(1e-15));
    CHECK(tp.eval(1, t).y == doctest::Approx(t * t * t).epsilon(1e-15));
    CHECK(tm.eval(-1, t).x == doctest::Approx(-t * t).epsilon(1e-15));
    CHECK(tm.eval(-1, t).y == doctest::Approx(-t * t * t).epsilon(1e-15));
    CHECK_THROWS_AS(build_bridge(Rational(2), Rational(3)), InvalidInput);
}

TEST_CASE("breaking a bridge validates its inputs") {
    GermModel bridge = build_bridge(Rational(3), Rational(2));
    CHECK_THROWS_AS(break_bridge(bridge, 1, Rational(5, 2)), InvalidInput);
    CHECK_THROWS_AS(break_bridge(bridge, 0, Rational(2)), InvalidInput);
    CHECK_THROWS_AS(break_bridge(bridge, 0, Rational(7, 2)), InvalidInput);
    GermModel once = break_bridge(bridge, 0, Rational(5, 2));
    CHECK_THROWS_AS(break_bridge(once, 0, Rational(5, 2)), InvalidInput);
    CHECK_THROWS_AS(restore_bridge(bridge), InvalidInput);
}

TEST_CASE("breaking reroutes the section through the walls") {
    GermModel bridge = build_bridge(Rational(3), Rational(2));
    GermModel broken = break_bridge(bridge, 0, Rational(5, 2));
    CHECK(broken.has_sheet("W+"));
    CHECK(broken.has_sheet("W-"));
    // Resolvable scales: the broken gap 2 t^{5/2} must exceed the glue
    // tolerance t / 64, so t > (1/128)^{2/3}.
    for (double t : {0.125, 0.0625}) {
        PolyLink sec = section_at(broken, t);
        LinkSummary s = component_analysis(sec);
        CHECK(s.closed_count == 0);
        CHECK(s.open_count == 2);
        // Each rerouted arc U-turns through a wall, so it spans both signs
        // of y; the unbroken arcs each stay in one half-plane.
        for (const PolyComponent& c : sec.comps) {
            double ylo = 0, yhi = 0;
            for (const Vec3& p : c.pts) {
                ylo = std::min(ylo, p.y);
                yhi = std::max(yhi, p.y);
            }
            CHECK(ylo < 0);
            CHECK(yhi > 0);
        }
    }
    GermModel back = restore_bridge(broken);
    CHECK(model_to_json(back).dump() == model_to_json(bridge).dump());
}

TEST_CASE("twist family members section into the plat closure") {
    CHECK_THROWS_AS(build_family(-1), InvalidInput);
    CHECK_THROWS_AS(build_family(33), InvalidInput);
    GermModel fam = build_family(2);
    CHECK(fam.metadata.at("twists") == 2);
    CHECK(validate(fam).violations.empty());
    LinkSummary s = component_analysis(section_at(fam, 0.125));
    CHECK(s.closed_count == 1);
    CHECK(s.open_count == 0);

    GermModel broken = break_bridge(fam, 0, Rational(5, 2));
    PolyLink sec = section_at(broken, 0.125);
    LinkSummary sb = component_analysis(sec);
    CHECK(sb.closed_count == 2);
    CHECK(sb.open_count == 0);
    Rng rng(0);
    CHECK(std::abs(linking_number_gauss(sec, 0, 1, rng)) == 2);
}

TEST_CASE("paired members are the zero and one twist models") {
    auto [x1, x2] = build_example4();
    CHECK(x1.metadata.at("twists") == 0);
    CHECK(x2.metadata.at("twists") == 1);
}

TEST_CASE("knot attachment splices into the right strand") {
    GermModel fam = build_family(1);
    GermModel with = attach_connected_sum(fam, knot_by_name("trefoil").points, "trefoil");
    CHECK(with.metadata.contains("attachment"));
    PolyLink sec = section_at(with, 0.125);
    LinkSummary s = component_analysis(sec);
    CHECK(s.closed_count == 1);
    CHECK(s.open_count == 0);
    Rng rng(0);
    CHECK(alexander_per_component(sec, rng).at(0) == IntPoly{{1, -1, 1}});
    std::vector<Vec3> segment = {{0, 0, 0}, {1, 0, 0}};
    CHECK_THROWS_AS(attach_connected_sum(fam, segment, "bad"), InvalidInput);
}

TEST_CASE("triangle removal opens the strand once") {
    GermModel fam = build_family(1);
    GermModel cut = remove_holder_triangle(fam, Rational(2));
    CHECK(cut.metadata.contains("truncation"));
    LinkSummary s = component_analysis(section_at(cut, 0.125));
    CHECK(s.closed_count == 0);
    CHECK(s.open_count == 1);
    CHECK_THROWS_AS(remove_holder_triangle(cut, Rational(2)), InvalidInput);
    CHECK_THROWS_AS(remove_holder_triangle(fam, Rational(1)), InvalidInput);
    CHECK_THROWS_AS(attach_connected_sum(cut, knot_by_name("trefoil").points, "trefoil"),
                    InvalidInput);
    GermModel both = remove_holder_triangle(
        attach_connected_sum(fam, knot_by_name("trefoil").points, "trefoil"), Rational(2));
    LinkSummary sb = component_analysis(section_at(both, 0.125));
    CHECK(sb.closed_count == 0);
    CHECK(sb.open_count == 1);
}
