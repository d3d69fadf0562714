#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "germlab/diagram.hpp"
#include "germlab/errors.hpp"
#include "germlab/knots.hpp"
#include "germlab/laurent.hpp"
#include "germlab/rng.hpp"

using namespace germlab;

namespace {

PolyComponent closed_comp(std::vector<Vec3> pts) {
    PolyComponent c;
    c.pts = std::move(pts);
    c.closed = true;
    return c;
}

// Unit circle in the xy-plane and a congruent circle through its center,
// lying in the xz-plane: the two link exactly once.
PolyLink two_rings() {
    PolyLink l;
    l.t = 1;
    std::vector<Vec3> a, b;
    for (int k = 0; k < 48; ++k) {
        double u = 2 * std::numbers::pi * k / 48;
        a.push_back({std::cos(u), std::sin(u), 0});
        b.push_back({1 + std::cos(u), 0, std::sin(u)});
    }
    l.comps = {closed_comp(a), closed_comp(b)};
    return l;
}

const IntPoly kOne = IntPoly::constant(1);
const IntPoly kTrefoil{{1, -1, 1}};
const IntPoly kFigureEight{{1, -3, 1}};
const IntPoly kGranny{{1, -4, 5, -4, 1}};

}  // namespace

TEST_CASE("builtin shapes realize the catalogued polynomials") {
    Rng rng(11);
    CHECK(alexander_of_component(closed_comp(knot_by_name("unknot").points), rng) == kOne);
    CHECK(alexander_of_component(closed_comp(knot_by_name("trefoil").points), rng) == kTrefoil);
    CHECK(alexander_of_component(closed_comp(knot_by_name("figure-eight").points), rng) ==
          kFigureEight);
}

TEST_CASE("unknown shape name is an input error") {
    CHECK_THROWS_AS(knot_by_name("granny"), InvalidInput);
}

TEST_CASE("normal form strips units") {
    CHECK(alexander_normal_form(IntPoly{{0, -1, 1, -1}}) == kTrefoil);
    CHECK(alexander_normal_form(IntPoly{{0, 0, 3}}) == IntPoly::constant(3));
    CHECK(alexander_normal_form(IntPoly{}) == IntPoly{});
}

TEST_CASE("exact division recovers a factor") {
    CHECK(kGranny.divexact(kTrefoil) == kFigureEight);
    CHECK_THROWS_AS(kGranny.divexact(IntPoly{{1, 1}}), ComputationError);
}

TEST_CASE("fraction-free determinant") {
    IntPoly t = IntPoly::monomial(1);
    CHECK(bareiss_determinant({{t, kOne}, {kOne, t}}) == IntPoly{{-1, 0, 1}});
    CHECK(bareiss_determinant({{t, IntPoly{}, IntPoly{}},
                               {IntPoly{}, t, IntPoly{}},
                               {IntPoly{}, IntPoly{}, t}}) == IntPoly::monomial(3));
}

TEST_CASE("two orthogonal rings link once") {
    PolyLink rings = two_rings();
    Rng rng(5);
    CHECK(std::abs(linking_number_gauss(rings, 0, 1, rng)) == 1);
}

TEST_CASE("linking is independent of the projection seed") {
    PolyLink rings = two_rings();
    Rng r1(1), r2(2), r3(3);
    int a = linking_number_gauss(rings, 0, 1, r1);
    CHECK(linking_number_gauss(rings, 0, 1, r2) == a);
    CHECK(linking_number_gauss(rings, 0, 1, r3) == a);
}

TEST_CASE("reversing one component negates the linking number") {
    PolyLink rings = two_rings();
    Rng r1(5), r2(5);
    int a = linking_number_gauss(rings, 0, 1, r1);
    std::reverse(rings.comps[1].pts.begin(), rings.comps[1].pts.end());
    CHECK(linking_number_gauss(rings, 0, 1, r2) == -a);
}

TEST_CASE("subdividing edges changes no invariant") {
    PolyLink rings = two_rings();
    Rng r1(5), r2(5);
    int a = linking_number_gauss(rings, 0, 1, r1);
    rings.comps[0] = subdivide(rings.comps[0]);
    rings.comps[1] = subdivide(subdivide(rings.comps[1]));
    CHECK(linking_number_gauss(rings, 0, 1, r2) == a);

    Rng r3(5), r4(5);
    PolyComponent tre = closed_comp(knot_by_name("trefoil").points);
    CHECK(alexander_of_component(subdivide(tre), r3) == alexander_of_component(tre, r4));
}

TEST_CASE("diagram half sum matches the solid-angle count") {
    PolyLink rings = two_rings();
    Rng r1(5), r2(9);
    int a = linking_number_gauss(rings, 0, 1, r1);
    Diagram dia = project_generic(rings, r2);
    CHECK(dia.half_linking(0, 1) == doctest::Approx(a).epsilon(1e-12));
}

TEST_CASE("split rings do not link") {
    PolyLink l;
    l.t = 1;
    std::vector<Vec3> a, b;
    for (int k = 0; k < 32; ++k) {
        double u = 2 * std::numbers::pi * k / 32;
        a.push_back({std::cos(u), std::sin(u), 0});
        b.push_back({5 + std::cos(u), std::sin(u), 0});
    }
    l.comps = {closed_comp(a), closed_comp(b)};
    Rng rng(5);
    CHECK(linking_number_gauss(l, 0, 1, rng) == 0);
}

TEST_CASE("connected sums multiply polynomials") {
    PolyComponent tre = closed_comp(knot_by_name("trefoil").points);
    PolyComponent fig = closed_comp(knot_by_name("figure-eight").points);
    Rng rng(5);
    CHECK(alexander_of_component(connected_sum(tre, fig), rng) == kGranny);
    Rng rng2(5);
    CHECK(alexander_of_component(connected_sum(tre, tre), rng2) ==
          alexander_normal_form(kTrefoil * kTrefoil));
}

TEST_CASE("connected sum with the unknot is neutral") {
    PolyComponent tre = closed_comp(knot_by_name("trefoil").points);
    PolyComponent unk = closed_comp(knot_by_name("unknot").points);
    Rng rng(5);
    CHECK(alexander_of_component(connected_sum(tre, unk), rng) == kTrefoil);
}

TEST_CASE("linking requires closed components") {
    PolyLink rings = two_rings();
    rings.comps[0].closed = false;
    Rng rng(5);
    CHECK_THROWS_AS(linking_number_gauss(rings, 0, 1, rng), InvalidInput);
    Rng rng2(5);
    CHECK_THROWS_AS(linking_number_gauss(two_rings(), 0, 2, rng2), InvalidInput);
}
