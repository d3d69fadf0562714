#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <string>
#include <vector>

#include "germlab/constructions.hpp"
#include "germlab/errors.hpp"
#include "germlab/model.hpp"
#include "germlab/model_io.hpp"

using namespace germlab;

namespace {

std::string dumped(const GermModel& m) { return model_to_json(m).dump(); }

GermModel roundtrip(const GermModel& m) { return model_from_json(model_to_json(m)); }

}  // namespace

TEST_CASE("union concatenates and renames collisions") {
    GermModel a = sheet_model(3, make_cone_sheet("C", {{1, 0, 0}, {0, 1, 0}, {-1, 0, 0}}, true));
    GermModel b = sheet_model(3, make_cone_sheet("C", {{2, 0, 0}, {0, 2, 0}, {-2, 0, 0}}, true));
    GermModel u = union_models({a, b});
    REQUIRE(u.sheets.size() == 2);
    CHECK(u.sheets[0].name == "C");
    CHECK(u.sheets[1].name == "C_2");
    CHECK(validate(u).violations.empty());
}

TEST_CASE("union rejects mixed ambient dimensions") {
    GermModel a = sheet_model(3, make_cone_sheet("A", {{1, 0, 0}, {0, 1, 0}, {-1, 0, 0}}, true));
    GermModel b = sheet_model(4, make_cone_sheet("B", {{1, 0, 0}, {0, 1, 0}, {-1, 0, 0}}, true));
    CHECK_THROWS_AS(union_models({a, b}), InvalidInput);
    CHECK_THROWS_AS(union_models({}), InvalidInput);
}

TEST_CASE("union is associative up to serialization") {
    GermModel a = sheet_model(3, make_cone_sheet("A", {{1, 0, 0}, {0, 1, 0}, {-1, 0, 0}}, true));
    GermModel b = sheet_model(3, make_holder_triangle("B", Rational(2), Rational(3), 1));
    GermModel c = sheet_model(3, make_cone_sheet("A", {{2, 0, 0}, {0, 2, 0}, {-2, 0, 0}}, true));
    CHECK(dumped(union_models({union_models({a, b}), c})) ==
          dumped(union_models({a, union_models({b, c})})));
}

TEST_CASE("validation flags malformed pieces") {
    GermModel m = sheet_model(3, make_cone_sheet("C", {{1, 0, 0}, {0, 1, 0}, {-1, 0, 0}}, true));
    PowerArc bad;
    bad.x.terms = {{1.0, Rational(0)}};
    m.arcs["flat"] = bad;
    Diagnostics d = validate(m);
    CHECK_FALSE(d.violations.empty());

    GermModel h = sheet_model(4, make_holder_triangle("T", Rational(2), Rational(3), 1));
    std::get<HolderSheet>(h.sheets[0].data).gap_exp = Rational(7, 2);
    CHECK_FALSE(validate(h).violations.empty());
    std::get<HolderSheet>(h.sheets[0].data).gap_exp = Rational(5, 2);
    CHECK(validate(h).violations.empty());
}

TEST_CASE("model files round-trip exactly") {
    auto [x1, x2] = build_example1(Rational(5));
    CHECK(dumped(roundtrip(x1)) == dumped(x1));
    CHECK(dumped(roundtrip(x2)) == dumped(x2));

    GermModel fam = build_family(2);
    CHECK(dumped(roundtrip(fam)) == dumped(fam));

    GermModel broken = break_bridge(fam, 0, Rational(5, 2));
    CHECK(dumped(roundtrip(broken)) == dumped(broken));

    GermModel notched = remove_holder_triangle(fam, Rational(2));
    CHECK(dumped(roundtrip(notched)) == dumped(notched));

    GermModel bridge = break_bridge(build_bridge(Rational(3), Rational(2)), 0, Rational(5, 2));
    CHECK(dumped(roundtrip(bridge)) == dumped(bridge));
}

TEST_CASE("loading rejects malformed documents") {
    CHECK_THROWS_AS(model_from_json(nlohmann::ordered_json::object()), InvalidInput);
    nlohmann::ordered_json j = {{"schema", "germ-model/1"}, {"dimension", 5},
                                {"sheets", nlohmann::ordered_json::array()}};
    CHECK_THROWS_AS(model_from_json(j), InvalidInput);
    CHECK_THROWS_AS(load_model("/nonexistent/file.json"), InvalidInput);
}

TEST_CASE("empty models load and carry no sheets") {
    nlohmann::ordered_json j = {{"schema", "germ-model/1"}, {"dimension", 3},
                                {"sheets", nlohmann::ordered_json::array()}};
    GermModel m = model_from_json(j);
    CHECK(m.sheets.empty());
    CHECK(m.arcs.empty());
}

TEST_CASE("piecewise maps preserve t and cover sources") {
    auto [x1, x2] = build_example1(Rational(5));
    PLMap map = example1_map();
    CHECK(map.covers(x1));
    Vec4 p{0.1, 0.2, 0.0, 0.5};
    Vec4 q = map.apply("U2", p);
    CHECK(q.t == doctest::Approx(0.5));
    CHECK(q.x == doctest::Approx(0.1));
    CHECK(q.y == doctest::Approx(0.2 - 0.25));
    CHECK_THROWS_AS(map.apply("nsheet", p), InvalidInput);
}

TEST_CASE("knot table files validate their entries") {
    CHECK_THROWS_AS(load_knot_table("/nonexistent/table.json"), InvalidInput);
    auto scratch = [](const std::string& name, const std::string& body) {
        std::string path =
            (std::filesystem::temp_directory_path() / ("germlab_table_" + name)).string();
        write_text_file(path, body);
        return path;
    };
    std::vector<std::string> paths;
    paths.push_back(scratch("bad1.json", "{ not json"));
    CHECK_THROWS_AS(load_knot_table(paths.back()), InvalidInput);
    paths.push_back(scratch("bad2.json", R"({"knots": []})"));
    CHECK_THROWS_AS(load_knot_table(paths.back()), InvalidInput);
    paths.push_back(scratch(
        "bad3.json",
        R"({"knots": [{"name": "x", "points": [[0,0,0],[1,0,0]], "alexander": [1]}]})"));
    CHECK_THROWS_AS(load_knot_table(paths.back()), InvalidInput);
    paths.push_back(scratch(
        "ok.json",
        R"({"knots": [{"name": "x", "points": [[0,0,0],[1,0,0],[0,1,0]], "alexander": [1]}]})"));
    CHECK(load_knot_table(paths.back()).size() == 1);
    for (const std::string& p : paths) std::filesystem::remove(p);
}
