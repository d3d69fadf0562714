#include "germlab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>

#include "germlab/constructions.hpp"
#include "germlab/errors.hpp"
#include "germlab/knots.hpp"
#include "germlab/metrics.hpp"
#include "germlab/model_io.hpp"
#include "germlab/nesting.hpp"
#include "germlab/rng.hpp"
#include "germlab/tangent_cone.hpp"
#include "germlab/version.hpp"

namespace germlab {

namespace {

using json = nlohmann::ordered_json;

std::string fmt(double v) {
    std::ostringstream os;
    os << std::setprecision(12) << v;
    return os.str();
}

// |observed - expected| <= tol
void add_num(VerificationReport& r, std::string name, std::string anchor, double expected,
             double observed, double tol) {
    CheckResult c;
    c.name = std::move(name);
    c.anchor = std::move(anchor);
    c.expected = fmt(expected);
    c.observed = fmt(observed);
    c.tolerance = fmt(tol);
    c.pass = std::isfinite(observed) && std::abs(observed - expected) <= tol;
    r.checks.push_back(std::move(c));
}

// observed <= bound
void add_bound(VerificationReport& r, std::string name, std::string anchor, double bound,
               double observed) {
    CheckResult c;
    c.name = std::move(name);
    c.anchor = std::move(anchor);
    c.expected = "<= " + fmt(bound);
    c.observed = fmt(observed);
    c.tolerance = fmt(bound);
    c.pass = std::isfinite(observed) && observed <= bound;
    r.checks.push_back(std::move(c));
}

void add_flag(VerificationReport& r, std::string name, std::string anchor, bool expected,
              bool observed) {
    CheckResult c;
    c.name = std::move(name);
    c.anchor = std::move(anchor);
    c.expected = expected ? "true" : "false";
    c.observed = observed ? "true" : "false";
    c.tolerance = "exact";
    c.pass = expected == observed;
    r.checks.push_back(std::move(c));
}

void add_text(VerificationReport& r, std::string name, std::string anchor, std::string expected,
              std::string observed) {
    CheckResult c;
    c.name = std::move(name);
    c.anchor = std::move(anchor);
    c.pass = expected == observed;
    c.expected = std::move(expected);
    c.observed = std::move(observed);
    c.tolerance = "exact";
    r.checks.push_back(std::move(c));
}

int abs_linking(const PolyLink& link, int a, int b, Rng& rng) {
    try {
        return std::abs(linking_number_gauss(link, a, b, rng));
    } catch (const ComputationError&) {
        return -1;
    }
}

// Torsion polynomial of the first closed component, as a string.
std::string poly_of_link(const PolyLink& link, Rng& rng) {
    for (const PolyComponent& c : link.comps)
        if (c.closed) {
            try {
                return alexander_of_component(c, rng).str();
            } catch (const ComputationError&) {
                return "unavailable";
            }
        }
    return "none";
}

std::string join_sorted(std::vector<std::string> items) {
    std::sort(items.begin(), items.end());
    std::string out;
    for (const std::string& s : items) {
        if (!out.empty()) out += " | ";
        out += s;
    }
    return out;
}

// --- suite: tangent-circle pair --------------------------------------------

void suite_example1(VerificationReport& rep, std::uint64_t, const SectionOptions& opts) {
    std::vector<double> arc_ladder = dyadic_ladder(4, 14);
    for (std::int64_t k : {5, 6, 8}) {
        auto pair = build_example1(Rational(k));
        ExponentFit fit = tangency_order(pair.first.arcs.at("gamma+"),
                                         pair.first.arcs.at("gamma-"), arc_ladder);
        add_num(rep, "tangency-k" + std::to_string(k),
                "contact exponent of the central sheet's inner arc pair", double(k) / 4.0,
                fit.slope, 0.05);
    }

    auto [x1, x2] = build_example1(Rational(5));
    double t = 0.125;
    PolyLink l1 = section_at(x1, t, opts);
    PolyLink l2 = section_at(x2, t, opts);
    LinkSummary s1 = component_analysis(l1), s2 = component_analysis(l2);
    add_num(rep, "link-closed-components-X1", "section at t=1/8 consists of three closed curves",
            3, s1.closed_count, 0);
    add_num(rep, "link-open-components-X1", "section at t=1/8 has no open ends", 0, s1.open_count,
            0);
    add_num(rep, "link-closed-components-X2", "section at t=1/8 consists of three closed curves",
            3, s2.closed_count, 0);
    add_num(rep, "link-open-components-X2", "section at t=1/8 has no open ends", 0, s2.open_count,
            0);
    add_flag(rep, "link-nesting-match", "nesting trees of the two sections are isomorphic", true,
             compare_nesting(nesting_tree(l1), nesting_tree(l2)));

    std::vector<double> cone_ladder = dyadic_ladder(4, 14);
    TangentConeResult tc1 = tangent_cone_link(x1, cone_ladder, opts);
    TangentConeResult tc2 = tangent_cone_link(x2, cone_ladder, opts);
    bool cones_match = compare_nesting(nesting_tree(pinch_split(tc1.link)),
                                       nesting_tree(pinch_split(tc2.link)));
    add_flag(rep, "cone-nesting-differs",
             "nesting trees of the split tangent-cone links are not isomorphic", false,
             cones_match);

    DistortionReport d = certify_bilipschitz(x1, x2, example1_map(), dyadic_ladder(0, 10), 10000,
                                             100.0, 1e-6, 0.10, opts);
    add_bound(rep, "map-onto-error",
              "canonical map lands on the second germ, relative to the scale", 1e-6,
              d.onto_error);
    add_bound(rep, "map-distortion", "global distance distortion of the canonical map", 100.0,
              d.global_distortion);
    add_bound(rep, "map-stability", "scale-to-scale drift of the distortion ratios", 0.10,
              d.stability);
    add_flag(rep, "map-certified", "distortion certificate granted", true, d.certified);

    GermModel meas = union_models(
        {x1, sheet_model(3, *x2.find_sheet("V2")), sheet_model(3, *x2.find_sheet("V3"))});
    std::vector<double> band_ladder = {0.0625, 1.0 / 4096.0};
    auto iv =
        distance_ratio_intervals(meas, {"U2", "U3", "V2", "V3"}, "U1", band_ladder, 250, opts);
    bool contained = iv.size() == 2 && iv[1].lo >= iv[0].lo / 2 && iv[1].hi <= iv[0].hi * 2;
    add_flag(rep, "distance-band-containment",
             "normalized circle-to-sheet distances at t=2^-12 stay within twice the band "
             "measured at t=2^-4",
             true, contained);
}

// --- suite: bowtie table with coned knots -----------------------------------

void suite_example3(VerificationReport& rep, std::uint64_t seed, const SectionOptions& opts) {
    auto [x1, x2] = build_example3();
    std::vector<double> cone_ladder = dyadic_ladder(4, 14);
    Rng rng(seed);

    TangentConeResult tc1 = tangent_cone_link(x1, cone_ladder, opts);
    TangentConeResult tc2 = tangent_cone_link(x2, cone_ladder, opts);
    PolyLink split1 = pinch_split(tc1.link);
    PolyLink split2 = pinch_split(tc2.link);

    auto multiset_of = [&](const PolyLink& link) {
        std::vector<std::string> out;
        try {
            for (const IntPoly& p : alexander_per_component(link, rng)) out.push_back(p.str());
        } catch (const ComputationError&) {
            out.push_back("unavailable");
        }
        return join_sorted(std::move(out));
    };

    IntPoly tre = alexander_normal_form(knot_by_name("trefoil").alexander);
    IntPoly fig = alexander_normal_form(knot_by_name("figure-eight").alexander);
    IntPoly prod = alexander_normal_form(tre * fig);
    IntPoly one = IntPoly::constant(1);

    std::string ms1 = multiset_of(split1);
    std::string ms2 = multiset_of(split2);
    add_text(rep, "cone-polynomials-X1",
             "split tangent-cone link carries the two summand polynomials",
             join_sorted({tre.str(), fig.str()}), ms1);
    add_text(rep, "cone-polynomials-X2",
             "split tangent-cone link carries the product polynomial and a trivial loop",
             join_sorted({prod.str(), one.str()}), ms2);
    add_flag(rep, "cone-polynomials-differ", "the two tangent-cone multisets disagree", false,
             ms1 == ms2);

    double t = 0.125;
    PolyLink l1 = section_at(x1, t, opts);
    PolyLink l2 = section_at(x2, t, opts);
    LinkSummary s1 = component_analysis(l1), s2 = component_analysis(l2);
    add_num(rep, "link-single-component-X1", "section at t=1/8 is one closed curve", 1,
            s1.closed_count + 10 * s1.open_count, 0);
    add_num(rep, "link-single-component-X2", "section at t=1/8 is one closed curve", 1,
            s2.closed_count + 10 * s2.open_count, 0);
    std::string a1 = poly_of_link(l1, rng);
    std::string a2 = poly_of_link(l2, rng);
    add_text(rep, "link-polynomial-X1", "full section curve carries the product polynomial",
             prod.str(), a1);
    add_text(rep, "link-polynomial-X2", "full section curve carries the product polynomial",
             prod.str(), a2);
    add_flag(rep, "link-polynomials-equal", "the two section curves share their polynomial", true,
             !a1.empty() && a1 == a2);
}

// --- suite: bridge-separated strands ----------------------------------------

void suite_example4(VerificationReport& rep, std::uint64_t seed, const SectionOptions& opts) {
    auto [x1, x2] = build_example4();

    InnerDistanceReport inner = inner_distance_exponent(x1, x1.arcs.at("mid+"),
                                                        x1.arcs.at("mid-"), dyadic_ladder(4, 8),
                                                        opts);
    add_num(rep, "inner-exponent", "inner distance across the waist grows linearly with t", 1.0,
            inner.fit.slope, 0.1);
    ExponentFit outer =
        tangency_order(x1.arcs.at("mid+"), x1.arcs.at("mid-"), dyadic_ladder(4, 14));
    add_num(rep, "outer-exponent", "outer distance across the waist has exponent three", 3.0,
            outer.slope, 0.05);

    Rng rng(seed);
    int member = 0;
    for (const GermModel* m : {&x1, &x2}) {
        std::string tag = member == 0 ? "X1" : "X2";
        GermModel broken = break_bridge(*m, 0, Rational(5, 2));
        PolyLink l = section_at(broken, 0.125, opts);
        LinkSummary s = component_analysis(l);
        add_num(rep, "separated-components-" + tag,
                "waist surgery splits the section into two closed loops", 2,
                s.closed_count + 10 * s.open_count, 0);
        int lk = s.closed_count == 2 && s.open_count == 0 ? abs_linking(l, 0, 1, rng) : -1;
        add_num(rep, "separated-linking-" + tag, "absolute linking number of the two loops",
                member, lk, 0);
        ++member;
    }
}

// --- suite: the twist family and its surgeries -------------------------------

void suite_main_theorem(VerificationReport& rep, std::uint64_t seed, const SectionOptions& opts) {
    Rng rng(seed);
    const std::vector<Vec3>& trefoil = knot_by_name("trefoil").points;
    IntPoly tre = alexander_normal_form(knot_by_name("trefoil").alexander);
    IntPoly one = IntPoly::constant(1);
    std::vector<double> cone_ladder = dyadic_ladder(4, 14);
    double t = 0.125;
    Rational half_p(5, 2);

    GermModel first, last;
    for (int i = 0; i <= 4; ++i) {
        std::string si = std::to_string(i);
        GermModel xi = build_family(i);
        if (i == 0) first = xi;
        if (i == 4) last = xi;

        PolyLink l = section_at(xi, t, opts);
        LinkSummary s = component_analysis(l);
        add_num(rep, "plat-single-component-i" + si, "unbroken section is one closed curve", 1,
                s.closed_count + 10 * s.open_count, 0);
        add_text(rep, "plat-polynomial-i" + si, "unbroken curve is unknotted", one.str(),
                 poly_of_link(l, rng));

        GermModel bi = break_bridge(xi, 0, half_p);
        PolyLink lb = section_at(bi, t, opts);
        LinkSummary sb = component_analysis(lb);
        int lk = sb.closed_count == 2 && sb.open_count == 0 ? abs_linking(lb, 0, 1, rng) : -1;
        add_num(rep, "separated-linking-i" + si,
                "waist surgery separates the strands with linking number i", i, lk, 0);

        GermModel yi = attach_connected_sum(xi, trefoil, "trefoil");
        PolyLink ly = section_at(yi, t, opts);
        add_text(rep, "sum-polynomial-i" + si,
                 "knot attachment changes the curve by connected sum", tre.str(),
                 poly_of_link(ly, rng));
        GermModel byi = break_bridge(yi, 0, half_p);
        PolyLink lby = section_at(byi, t, opts);
        LinkSummary sby = component_analysis(lby);
        int lky = sby.closed_count == 2 && sby.open_count == 0 ? abs_linking(lby, 0, 1, rng) : -1;
        add_num(rep, "sum-linking-i" + si, "linking number survives the knot attachment", i, lky,
                0);

        GermModel zi = remove_holder_triangle(xi, Rational(2));
        PolyLink lz = section_at(zi, t, opts);
        LinkSummary sz = component_analysis(lz);
        add_num(rep, "truncated-census-i" + si,
                "triangle removal opens the curve into a single arc", 1,
                sz.open_count + 10 * sz.closed_count, 0);

        TangentConeResult tcx = tangent_cone_link(xi, cone_ladder, opts);
        TangentConeResult tcz = tangent_cone_link(zi, cone_ladder, opts);
        add_num(rep, "truncated-cone-i" + si,
                "triangle removal leaves the tangent-cone link unchanged", 0,
                hausdorff_distance(tcx.link, tcz.link), 0.02);

        GermModel bzi = break_bridge(zi, 0, half_p);
        PolyLink lbz = section_at(bzi, t, opts);
        LinkSummary sbz = component_analysis(lbz);
        int lkz = -1;
        if (sbz.closed_count == 1 && sbz.open_count == 1) {
            for (PolyComponent& c : lbz.comps)
                if (!c.closed) c = close_component(c);
            lkz = abs_linking(lbz, 0, 1, rng);
        }
        add_num(rep, "truncated-linking-i" + si,
                "linking number survives the triangle removal once the cut is closed", i, lkz, 0);
    }

    DistortionReport d = certify_bilipschitz(first, last, family_map(first, last),
                                             dyadic_ladder(2, 8), 10000, 100.0, 1e-6, 0.10, opts);
    add_flag(rep, "member-map-certified",
             "canonical strand reparametrization between the extreme members is bilipschitz",
             true, d.certified);
}

// --- suite: cross-cutting properties -----------------------------------------

PolyLink two_ring_link() {
    PolyLink l;
    l.t = 1;
    PolyComponent a, b;
    a.closed = b.closed = true;
    a.tag = "ring0";
    b.tag = "ring1";
    for (int k = 0; k < 48; ++k) {
        double u = 2 * std::numbers::pi * k / 48;
        a.pts.push_back({std::cos(u), std::sin(u), 0});
        b.pts.push_back({1 + std::cos(u), 0, std::sin(u)});
    }
    l.comps = {a, b};
    return l;
}

void suite_properties(VerificationReport& rep, std::uint64_t seed,
                      const std::string& table_path, const SectionOptions& opts) {
    PolyLink rings = two_ring_link();
    Rng r1(seed + 1), r2(seed + 2), r3(seed + 3);
    int lk1 = linking_number_gauss(rings, 0, 1, r1);
    int lk2 = linking_number_gauss(rings, 0, 1, r2);
    int lk3 = linking_number_gauss(rings, 0, 1, r3);
    add_num(rep, "two-ring-linking", "two orthogonal rings link once", 1, std::abs(lk1), 0);
    add_flag(rep, "projection-invariance",
             "linking number is independent of the projection randomness", true,
             lk1 == lk2 && lk2 == lk3);

    PolyLink fine = rings;
    fine.comps[0] = subdivide(fine.comps[0]);
    fine.comps[1] = subdivide(subdivide(fine.comps[1]));
    Rng r4(seed + 4);
    add_num(rep, "refinement-invariance-linking",
            "subdividing segments leaves the linking number unchanged", lk1,
            linking_number_gauss(fine, 0, 1, r4), 0);

    PolyComponent tre_comp;
    tre_comp.pts = knot_by_name("trefoil").points;
    tre_comp.closed = true;
    Rng r5(seed + 5), r6(seed + 6);
    std::string a_base = alexander_of_component(tre_comp, r5).str();
    std::string a_fine = alexander_of_component(subdivide(tre_comp), r6).str();
    add_text(rep, "refinement-invariance-polynomial",
             "subdividing segments leaves the torsion polynomial unchanged", a_base, a_fine);

    PolyLink rev = rings;
    std::reverse(rev.comps[1].pts.begin(), rev.comps[1].pts.end());
    Rng r7(seed + 7);
    add_num(rep, "orientation-antisymmetry", "reversing one ring negates the linking number",
            -lk1, linking_number_gauss(rev, 0, 1, r7), 0);

    Rng r8(seed + 8);
    Diagram dia = project_generic(rings, r8);
    add_num(rep, "dual-route-agreement",
            "diagram crossing count agrees with the degree integral", std::abs(lk1),
            std::abs(dia.half_linking(0, 1)), 1e-9);

    PolyComponent fig_comp;
    fig_comp.pts = knot_by_name("figure-eight").points;
    fig_comp.closed = true;
    Rng r9(seed + 9);
    IntPoly prod = alexander_normal_form(knot_by_name("trefoil").alexander *
                                         knot_by_name("figure-eight").alexander);
    std::string a_sum = alexander_of_component(connected_sum(tre_comp, fig_comp), r9).str();
    add_text(rep, "polynomial-multiplicativity",
             "connected sums multiply torsion polynomials", prod.str(), a_sum);

    GermModel cone_model = sheet_model(4, make_cone_sheet("C", knot_by_name("trefoil").points, true));
    PolyLink base = section_at(cone_model, 1.0, opts);
    double worst = 0;
    for (double tc : {0.25, 0.0625}) {
        PolyLink sec = section_at(cone_model, tc, opts);
        if (sec.comps.size() != base.comps.size()) {
            worst = 1e300;
            break;
        }
        for (std::size_t ci = 0; ci < sec.comps.size(); ++ci) {
            const auto& sp = sec.comps[ci].pts;
            const auto& bp = base.comps[ci].pts;
            if (sp.size() != bp.size()) {
                worst = 1e300;
                break;
            }
            for (std::size_t k = 0; k < sp.size(); ++k)
                worst = std::max(worst, dist(sp[k], tc * bp[k]) / tc);
        }
    }
    add_bound(rep, "cone-scaling", "cone sections are exact rescalings of the base curve", 1e-12,
              worst);
    TangentConeResult tcc = tangent_cone_link(cone_model, dyadic_ladder(4, 10), opts);
    add_flag(rep, "cone-limit-converged", "the cone over a curve is its own tangent cone", true,
             tcc.report.converged &&
                 (tcc.report.hausdorff.empty() ? false : tcc.report.hausdorff.back() < 1e-9));

    GermModel bridge = build_bridge(Rational(3), Rational(2));
    add_flag(rep, "surgery-invertibility-triangles",
             "breaking then restoring a triangle bridge is the identity", true,
             model_to_json(restore_bridge(break_bridge(bridge, 0, Rational(5, 2)))).dump() ==
                 model_to_json(bridge).dump());
    GermModel fam = build_family(1);
    add_flag(rep, "surgery-invertibility-implicit",
             "breaking then restoring an implicit-sheet bridge is the identity", true,
             model_to_json(restore_bridge(break_bridge(fam, 0, Rational(5, 2)))).dump() ==
                 model_to_json(fam).dump());

    std::string rep_a = invariants_report(fam, 0.125, seed, opts).dump();
    std::string rep_b = invariants_report(fam, 0.125, seed, opts).dump();
    add_flag(rep, "report-determinism", "invariant reports are byte-identical across runs", true,
             rep_a == rep_b);

    {
        Rng r10(seed + 10);
        bool all_ok = true;
        for (const KnotShape& k : knot_table()) {
            PolyComponent c;
            c.pts = k.points;
            c.closed = true;
            bool ok;
            try {
                ok = alexander_of_component(c, r10) == alexander_normal_form(k.alexander);
            } catch (const ComputationError&) {
                ok = false;
            }
            all_ok = all_ok && ok;
        }
        add_flag(rep, "builtin-table-polynomials",
                 "builtin shapes realize their catalogued polynomials", true, all_ok);
    }
    if (!table_path.empty()) {
        bool loaded = false, all_ok = false;
        std::string note;
        try {
            std::vector<KnotShape> table = load_knot_table(table_path);
            loaded = true;
            all_ok = true;
            Rng r11(seed + 11);
            for (const KnotShape& k : table) {
                PolyComponent c;
                c.pts = k.points;
                c.closed = true;
                bool ok;
                try {
                    ok = alexander_of_component(c, r11) == alexander_normal_form(k.alexander);
                } catch (const ComputationError&) {
                    ok = false;
                }
                all_ok = all_ok && ok;
            }
        } catch (const InvalidInput& e) {
            note = e.what();
        }
        add_flag(rep, "file-table-valid", "knot table file parses and validates", true, loaded);
        add_flag(rep, "file-table-polynomials",
                 "file shapes realize their catalogued polynomials", true, loaded && all_ok);
    }
}

}  // namespace

bool VerificationReport::verdict() const {
    for (const CheckResult& c : checks)
        if (!c.pass) return false;
    return true;
}

nlohmann::ordered_json VerificationReport::to_json() const {
    json out;
    out["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
    out["suite"] = suite;
    out["seed"] = seed;
    out["parameters"] = parameters;
    json cs = json::array();
    for (const CheckResult& c : checks)
        cs.push_back({{"name", c.name},
                      {"anchor", c.anchor},
                      {"expected", c.expected},
                      {"observed", c.observed},
                      {"tolerance", c.tolerance},
                      {"pass", c.pass}});
    out["checks"] = cs;
    out["verdict"] = verdict() ? "pass" : "fail";
    return out;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"example1",     "example3",   "example4",
                                                   "main-theorem", "properties", "all"};
    return names;
}

VerificationReport run_suite(const std::string& suite, std::uint64_t seed,
                             const std::string& knot_table_path, const SectionOptions& opts) {
    VerificationReport rep;
    rep.suite = suite;
    rep.seed = seed;
    rep.parameters["resolution"] = opts.resolution;
    if (!knot_table_path.empty()) rep.parameters["knot_table"] = knot_table_path;
    auto started = std::chrono::steady_clock::now();

    if (suite == "example1") {
        suite_example1(rep, seed, opts);
    } else if (suite == "example3") {
        suite_example3(rep, seed, opts);
    } else if (suite == "example4") {
        suite_example4(rep, seed, opts);
    } else if (suite == "main-theorem") {
        suite_main_theorem(rep, seed, opts);
    } else if (suite == "properties") {
        suite_properties(rep, seed, knot_table_path, opts);
    } else if (suite == "all") {
        suite_example1(rep, seed, opts);
        suite_example3(rep, seed, opts);
        suite_example4(rep, seed, opts);
        suite_main_theorem(rep, seed, opts);
        suite_properties(rep, seed, knot_table_path, opts);
    } else {
        throw InvalidInput("unknown suite '" + suite +
                           "'; expected example1, example3, example4, main-theorem, properties "
                           "or all");
    }
    rep.runtime_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return rep;
}

nlohmann::ordered_json invariants_report(const GermModel& model, double t, std::uint64_t seed,
                                         const SectionOptions& opts) {
    json r;
    r["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
    r["parameters"] = {{"t", t}, {"resolution", opts.resolution}, {"seed", seed}};
    json sheet_names = json::array();
    for (const Sheet& s : model.sheets) sheet_names.push_back(s.name);
    r["model"] = {{"dimension", model.dimension},
                  {"sheets", sheet_names},
                  {"metadata", model.metadata}};
    if (model.sheets.empty()) {
        r["link"] = {{"components", 0}, {"closed", 0}, {"open", 0}};
        r["alexander"] = json::array();
        r["linking"] = json::array();
        return r;
    }

    PolyLink link = section_at(model, t, opts);
    LinkSummary s = component_analysis(link);
    json lengths = json::array();
    for (double L : s.lengths) lengths.push_back(L);
    r["link"] = {{"components", int(link.comps.size())},
                 {"closed", s.closed_count},
                 {"open", s.open_count},
                 {"total_length", s.total_length},
                 {"lengths", lengths}};
    r["nesting"] = nesting_tree(link).canonical();

    Rng rng(seed);
    try {
        json alex = json::array();
        for (const IntPoly& p : alexander_per_component(link, rng)) alex.push_back(p.str());
        r["alexander"] = alex;
    } catch (const ComputationError& e) {
        r["alexander"] = std::string("unavailable: ") + e.what();
    }

    json linking = json::array();
    std::vector<int> closed_idx;
    for (int i = 0; i < int(link.comps.size()); ++i)
        if (link.comps[i].closed) closed_idx.push_back(i);
    for (std::size_t a = 0; a < closed_idx.size(); ++a)
        for (std::size_t b = a + 1; b < closed_idx.size(); ++b) {
            json entry = {{"a", closed_idx[a]}, {"b", closed_idx[b]}};
            try {
                entry["lk"] = linking_number_gauss(link, closed_idx[a], closed_idx[b], rng);
            } catch (const ComputationError& e) {
                entry["lk"] = nullptr;
                entry["note"] = e.what();
            }
            linking.push_back(entry);
        }
    r["linking"] = linking;

    try {
        TangentConeResult tc = tangent_cone_link(model, dyadic_ladder(4, 12), opts);
        r["tangent_cone"] = {
            {"converged", tc.report.converged},
            {"hausdorff", tc.report.hausdorff.empty() ? 0.0 : tc.report.hausdorff.back()},
            {"components", int(tc.link.comps.size())},
            {"nesting", nesting_tree(pinch_split(tc.link)).canonical()}};
    } catch (const ComputationError& e) {
        r["tangent_cone"] = std::string("unavailable: ") + e.what();
    }
    return r;
}

}  // namespace germlab
