#include "germlab/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <tuple>

#include "germlab/errors.hpp"
#include "germlab/knots.hpp"

namespace germlab {

namespace {

// --- small exact-polynomial algebra for assembling surface equations ------

Poly combined(const Poly& p) {
    std::map<std::tuple<int, int, std::int64_t, std::int64_t>, Rational> acc;
    for (const PolyTerm& m : p.terms) {
        auto key = std::make_tuple(m.ex, m.ey, m.et.num, m.et.den);
        auto it = acc.find(key);
        if (it == acc.end())
            acc.emplace(key, m.coeff);
        else
            it->second = it->second + m.coeff;
    }
    Poly out;
    for (const auto& [key, c] : acc)
        if (c.num != 0)
            out.terms.push_back(
                {c, std::get<0>(key), std::get<1>(key), Rational(std::get<2>(key), std::get<3>(key))});
    return out;
}

Poly mono(std::int64_t c, int ex, int ey, Rational et = Rational(0)) {
    return Poly{{PolyTerm{Rational(c), ex, ey, et}}};
}

Poly psum(std::initializer_list<Poly> parts) {
    Poly out;
    for (const Poly& p : parts) out.terms.insert(out.terms.end(), p.terms.begin(), p.terms.end());
    return combined(out);
}

Poly pmul(const Poly& a, const Poly& b) {
    Poly out;
    for (const PolyTerm& u : a.terms)
        for (const PolyTerm& v : b.terms)
            out.terms.push_back({u.coeff * v.coeff, u.ex + v.ex, u.ey + v.ey, u.et + v.et});
    return combined(out);
}

Poly pneg(Poly p) {
    for (PolyTerm& m : p.terms) m.coeff = -m.coeff;
    return p;
}

std::vector<Poly> t_range_constraints() {
    return {mono(1, 0, 0, Rational(1)), psum({mono(1, 0, 0), mono(-1, 0, 0, Rational(1))})};
}

// t-range plus the band |y| <= t.
std::vector<Poly> band_constraints() {
    std::vector<Poly> cs = t_range_constraints();
    cs.push_back(psum({mono(1, 0, 0, Rational(1)), mono(-1, 0, 1)}));
    cs.push_back(psum({mono(1, 0, 0, Rational(1)), mono(1, 0, 1)}));
    return cs;
}

// --- shape placement helpers ----------------------------------------------

std::vector<Vec3> circle_polygon(double cx, double cy, double r, int n = 64) {
    std::vector<Vec3> pts;
    pts.reserve(n);
    for (int k = 0; k < n; ++k) {
        double a = 2 * std::numbers::pi * k / n;
        pts.push_back({cx + r * std::cos(a), cy + r * std::sin(a), 0});
    }
    return pts;
}

// Recenters the shape on its bounding-box midpoint and scales it to radius 1.
std::vector<Vec3> normalize_shape(std::vector<Vec3> pts) {
    if (pts.size() < 3) throw InvalidInput("knot shape needs at least 3 vertices");
    Vec3 lo = pts[0], hi = pts[0];
    for (const Vec3& p : pts) {
        lo = {std::min(lo.x, p.x), std::min(lo.y, p.y), std::min(lo.z, p.z)};
        hi = {std::max(hi.x, p.x), std::max(hi.y, p.y), std::max(hi.z, p.z)};
    }
    Vec3 c = 0.5 * (lo + hi);
    double r = 0;
    for (const Vec3& p : pts) r = std::max(r, norm(p - c));
    if (r == 0) throw InvalidInput("knot shape is a single point");
    for (Vec3& p : pts) p = (p - c) / r;
    return pts;
}

std::vector<Vec3> place_shape(const std::vector<Vec3>& pts, double scale, Vec3 center) {
    std::vector<Vec3> out = normalize_shape(pts);
    for (Vec3& p : out) p = center + scale * p;
    return out;
}

double segment_distance(Vec3 a0, Vec3 a1, Vec3 b0, Vec3 b1) {
    Vec3 u = a1 - a0, v = b1 - b0, w = a0 - b0;
    double A = dot(u, u), B = dot(u, v), C = dot(v, v), D = dot(u, w), E = dot(v, w);
    double den = A * C - B * B;
    double s, r;
    if (den > 1e-14 * A * C) {
        s = std::clamp((B * E - C * D) / den, 0.0, 1.0);
    } else {
        s = 0;
    }
    r = C > 0 ? std::clamp((B * s + E) / C, 0.0, 1.0) : 0;
    s = A > 0 ? std::clamp((B * r - D) / A, 0.0, 1.0) : 0;
    return dist(a0 + s * u, b0 + r * v);
}

// Minimum distance from segment [s0,s1] to the polyline's edges, with up to
// two edge indices exempt (the edges sharing a vertex with the segment).
double clearance_to(const Vec3& s0, const Vec3& s1, const std::vector<Vec3>& pts, bool closed,
                    int skip1, int skip2) {
    int n = int(pts.size());
    int edges = closed ? n : n - 1;
    double best = 1e300;
    for (int i = 0; i < edges; ++i) {
        if (i == skip1 || i == skip2) continue;
        best = std::min(best, segment_distance(s0, s1, pts[i], pts[(i + 1) % n]));
    }
    return best;
}

double shape_diameter(const std::vector<Vec3>& pts) {
    Vec3 lo = pts[0], hi = pts[0];
    for (const Vec3& p : pts) {
        lo = {std::min(lo.x, p.x), std::min(lo.y, p.y), std::min(lo.z, p.z)};
        hi = {std::max(hi.x, p.x), std::max(hi.y, p.y), std::max(hi.z, p.z)};
    }
    return dist(lo, hi);
}

int wrap(int i, int n) { return ((i % n) + n) % n; }

// Opens the closed polygon at one edge and returns the remaining arc in walk
// order, starting right after the removed edge (orientation 0) or right
// before it, reversed (orientation 1).
std::vector<Vec3> opened_arc(const std::vector<Vec3>& knot, int edge, int orientation) {
    int n = int(knot.size());
    std::vector<Vec3> arc;
    arc.reserve(n);
    for (int k = 1; k <= n; ++k) arc.push_back(knot[wrap(edge + k, n)]);
    if (orientation == 1) std::reverse(arc.begin(), arc.end());
    return arc;
}

// Threads the closed polygon between the two anchors: opens it at an edge
// facing the anchors and joins with straight bridges that keep clear of the
// rest of the polygon.  The result runs from anchor_hi to anchor_lo; its
// implicit closing edge is the anchor-to-anchor splice segment.
std::vector<Vec3> thread_through(const std::vector<Vec3>& knot, Vec3 anchor_hi, Vec3 anchor_lo) {
    int n = int(knot.size());
    if (n < 3) throw InvalidInput("knot shape needs at least 3 vertices");
    Vec3 mid = 0.5 * (anchor_hi + anchor_lo);
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return dist(0.5 * (knot[a] + knot[wrap(a + 1, n)]), mid) <
               dist(0.5 * (knot[b] + knot[wrap(b + 1, n)]), mid);
    });
    double clear_min = 0.02 * shape_diameter(knot);
    for (int e : order) {
        for (int orientation : {0, 1}) {
            std::vector<Vec3> arc = opened_arc(knot, e, orientation);
            // Edges of the polygon adjacent to the arc's free ends.
            int front_v = orientation == 0 ? wrap(e + 1, n) : e;
            int back_v = orientation == 0 ? e : wrap(e + 1, n);
            double c1 = clearance_to(anchor_hi, arc.front(), knot, true, wrap(front_v - 1, n), front_v);
            double c2 = clearance_to(arc.back(), anchor_lo, knot, true, wrap(back_v - 1, n), back_v);
            double c3 = segment_distance(anchor_hi, arc.front(), arc.back(), anchor_lo);
            if (std::min({c1, c2, c3}) < clear_min) continue;
            std::vector<Vec3> out;
            out.reserve(n + 2);
            out.push_back(anchor_hi);
            out.insert(out.end(), arc.begin(), arc.end());
            out.push_back(anchor_lo);
            return out;
        }
    }
    throw ComputationError("could not thread the knot between the anchors without contact");
}

// --- the two-strand family ------------------------------------------------

constexpr double kStrandReturnX = 3.3;

std::vector<Vec3> strand_curve(int twists, int side) {
    std::vector<Vec3> pts = {{1, 1, 0}, {0.7, 1.45, 0}, {0.25, 1.8, 0}};
    int n = 32 * twists;
    for (int j = 1; j <= n; ++j) {
        double phi = std::numbers::pi * j / 16.0;
        pts.push_back({0.25 * std::cos(phi), 1.8 + 1.2 * j / n, 0.25 * std::sin(phi)});
    }
    std::vector<Vec3> back = {{1.0, 3.35, 0},  {2.2, 3.1, 0},   {3.1, 2.2, 0},
                              {kStrandReturnX, 0.8, 0},  {kStrandReturnX, 0, 0},
                              {kStrandReturnX, -0.8, 0}, {3.0, -1.9, 0},
                              {2.0, -1.75, 0}, {1.35, -1.35, 0}, {1, -1, 0}};
    pts.insert(pts.end(), back.begin(), back.end());
    if (side < 0)
        for (Vec3& p : pts) {
            p.x = -p.x;
            p.z = -p.z;
        }
    return pts;
}

const ConeSheet& cone_of(const GermModel& m, const std::string& name) {
    const Sheet* s = m.find_sheet(name);
    if (!s || !s->is_cone()) throw InvalidInput("model has no cone sheet '" + name + "'");
    return std::get<ConeSheet>(s->data);
}

ConeSheet& cone_of(GermModel& m, const std::string& name) {
    for (Sheet& s : m.sheets)
        if (s.name == name) {
            if (!s.is_cone()) throw InvalidInput("sheet '" + name + "' is not a cone");
            return std::get<ConeSheet>(s.data);
        }
    throw InvalidInput("model has no cone sheet '" + name + "'");
}

// Index of the right strand's designated return-path vertex.
std::size_t return_vertex(const std::vector<Vec3>& curve) {
    Vec3 target{kStrandReturnX, 0, 0};
    for (std::size_t i = 0; i < curve.size(); ++i)
        if (dist(curve[i], target) < 1e-9) return i;
    throw InvalidInput("strand has no designated return-path vertex");
}

PowerArc power_arc(std::vector<PowerTerm> x, std::vector<PowerTerm> y,
                   std::vector<PowerTerm> z = {}) {
    PowerArc a;
    a.x.terms = std::move(x);
    a.y.terms = std::move(y);
    a.z.terms = std::move(z);
    return a;
}

}  // namespace

// --- tangent-circle pair ---------------------------------------------------

std::pair<GermModel, GermModel> build_example1(const Rational& k) {
    if (!(Rational(4) < k)) throw InvalidInput("tangency exponent k must exceed 4");
    // ((x-t)^2 + y^2 - t^2) * ((x+t)^2 + y^2 - t^2) = t^k
    Poly S = psum({mono(1, 2, 0), mono(1, 0, 2)});
    Poly F = psum({pmul(S, S), mono(-4, 2, 0, Rational(2)), pneg(Poly{{{Rational(1), 0, 0, k}}})});

    auto assemble = [&](const char* member, double c2x, double c2y, double c3x, double c3y,
                        const char* n2, const char* n3) {
        GermModel m;
        m.dimension = 3;
        m.sheets.push_back(make_implicit_sheet("U1", F, t_range_constraints()));
        m.sheets.push_back(make_cone_sheet(n2, circle_polygon(c2x, c2y, 0.25), true));
        m.sheets.push_back(make_cone_sheet(n3, circle_polygon(c3x, c3y, 0.25), true));
        Rational e = k / Rational(4);
        m.arcs.emplace("gamma+", power_arc({}, {{1.0, e}}));
        m.arcs.emplace("gamma-", power_arc({}, {{-1.0, e}}));
        m.metadata["builder"] = "example1";
        m.metadata["member"] = member;
        m.metadata["k"] = k.str();
        return m;
    };
    return {assemble("X1", 1, 0.5, 1, -0.5, "U2", "U3"),
            assemble("X2", 1, 0, -1, 0, "V2", "V3")};
}

PLMap example1_map() {
    PLMap f;
    f.pieces.push_back(identity_piece("U1"));
    f.pieces.push_back(translation_piece("U2", "V2", {0, -0.5, 0}));
    f.pieces.push_back(translation_piece("U3", "V3", {-2, 0.5, 0}));
    return f;
}

// --- bowtie table with coned knots ----------------------------------------

namespace {

Poly bowtie_surface() {
    // y^2 - x^2 = (x^2 + y^2 - 2t^2)^2
    Poly A = psum({mono(1, 2, 0), mono(1, 0, 2), mono(-2, 0, 0, Rational(2))});
    return psum({mono(1, 0, 2), mono(-1, 2, 0), pneg(pmul(A, A))});
}

GermModel assemble_example3(const char* member, std::vector<Vec3> right_curve,
                            std::vector<Vec3> left_curve, const char* right_sheet,
                            const char* left_sheet, const std::string& right_name,
                            const std::string& left_name) {
    GermModel m;
    m.dimension = 4;
    m.sheets.push_back(make_cone_sheet(right_sheet, std::move(right_curve), false));
    m.sheets.push_back(make_implicit_sheet("H", bowtie_surface(), band_constraints()));
    m.sheets.push_back(make_cone_sheet(left_sheet, std::move(left_curve), false));
    m.metadata["builder"] = "example3";
    m.metadata["member"] = member;
    m.metadata["right_knot"] = right_name;
    m.metadata["left_knot"] = left_name;
    return m;
}

}  // namespace

std::pair<GermModel, GermModel> build_example3(const std::vector<Vec3>& right_shape,
                                               const std::vector<Vec3>& left_shape,
                                               const std::string& right_name,
                                               const std::string& left_name) {
    Vec3 rc{3.2, 0, 0}, lc{-3.2, 0, 0};
    std::vector<Vec3> k1 = thread_through(place_shape(right_shape, 1.2, rc), {1, 1, 0}, {1, -1, 0});
    std::vector<Vec3> k2 =
        thread_through(place_shape(left_shape, 1.2, lc), {-1, 1, 0}, {-1, -1, 0});

    PolyComponent a, b;
    a.pts = right_shape;
    a.closed = true;
    b.pts = left_shape;
    b.closed = true;
    std::vector<Vec3> sum_shape = connected_sum(a, b).pts;
    std::vector<Vec3> k3 = thread_through(place_shape(sum_shape, 1.2, rc), {1, 1, 0}, {1, -1, 0});

    // Trivial loop: half circle from the upper left anchor to the lower one.
    std::vector<Vec3> k4;
    for (int j = 0; j <= 16; ++j) {
        double a4 = std::numbers::pi * (0.5 + j / 16.0);
        k4.push_back({-1 + std::cos(a4), std::sin(a4), 0});
    }

    return {assemble_example3("X1", std::move(k1), std::move(k2), "K1cone", "K2cone", right_name,
                              left_name),
            assemble_example3("X2", std::move(k3), std::move(k4), "K3cone", "K4cone",
                              right_name + "+" + left_name, "unknot")};
}

std::pair<GermModel, GermModel> build_example3() {
    return build_example3(knot_by_name("trefoil").points, knot_by_name("figure-eight").points,
                          "trefoil", "figure-eight");
}

PLMap example3_map(const GermModel& x1, const GermModel& x2) {
    PLMap f;
    ConeReparamPiece right;
    right.source = "K1cone";
    right.target = "K3cone";
    right.src_curve = cone_of(x1, "K1cone").curve;
    right.dst_curve = cone_of(x2, "K3cone").curve;
    f.pieces.push_back(right);
    f.pieces.push_back(identity_piece("H"));
    ConeReparamPiece left;
    left.source = "K2cone";
    left.target = "K4cone";
    left.src_curve = cone_of(x1, "K2cone").curve;
    left.dst_curve = cone_of(x2, "K4cone").curve;
    f.pieces.push_back(left);
    return f;
}

// --- standalone bridge ------------------------------------------------------

GermModel build_bridge(const Rational& q, const Rational& beta) {
    GermModel m;
    m.dimension = 4;
    m.sheets.push_back(make_holder_triangle("T+", beta, q, +1));
    m.sheets.push_back(make_holder_triangle("T-", beta, q, -1));
    m.arcs.emplace("T+L", power_arc({{-1.0, beta}}, {{1.0, q}}));
    m.arcs.emplace("T+R", power_arc({{1.0, beta}}, {{1.0, q}}));
    m.arcs.emplace("T-L", power_arc({{-1.0, beta}}, {{-1.0, q}}));
    m.arcs.emplace("T-R", power_arc({{1.0, beta}}, {{-1.0, q}}));
    BridgeSpec b;
    b.q = q;
    b.beta = beta;
    b.p = (beta + q) / Rational(2);
    b.triangles = {"T+", "T-"};
    b.boundary_arcs = {"T+L", "T+R", "T-L", "T-R"};
    m.bridges.push_back(b);
    m.metadata["builder"] = "bridge";
    m.metadata["q"] = q.str();
    m.metadata["beta"] = beta.str();
    return m;
}

// --- bridge-breaking surgery ------------------------------------------------

GermModel break_bridge(const GermModel& model, std::size_t bridge_index, const Rational& p) {
    if (bridge_index >= model.bridges.size())
        throw InvalidInput("bridge index out of range");
    if (model.metadata.contains("surgery"))
        throw InvalidInput("model already carries a broken bridge");
    GermModel out = model;
    BridgeSpec& b = out.bridges[bridge_index];
    if (!(b.beta < p && p < b.q))
        throw InvalidInput("break exponent must satisfy beta < p < q");
    Rational prev_p = b.p;
    b.p = p;

    std::string route;
    const Sheet* probe = out.find_sheet(b.triangles[0]);
    if (!probe) throw InvalidInput("bridge references a missing sheet '" + b.triangles[0] + "'");
    if (probe->is_holder()) {
        route = "holder";
        for (Sheet& s : out.sheets)
            if (s.name == b.triangles[0] || s.name == b.triangles[1])
                std::get<HolderSheet>(s.data).gap_exp = p;
    } else if (probe->is_implicit()) {
        route = "implicit";
        // Keep only |x| >= t^p: constraint x^4 - t^(4p) >= 0.
        for (Sheet& s : out.sheets)
            if (s.name == b.triangles[0]) {
                Poly cut = psum({mono(1, 4, 0), pneg(Poly{{{Rational(1), 0, 0, p * Rational(4)}}})});
                std::get<ImplicitSheet>(s.data).constraints.push_back(cut);
            }
    } else {
        throw InvalidInput("bridge triangles must be parametrized or implicit sheets");
    }

    // Vertical walls x = +-t^p spanning the cut ends.
    std::array<std::string, 2> wall_names;
    int wi = 0;
    for (int side : {+1, -1}) {
        HolderSheet w;
        w.beta = p;
        w.q = b.q;
        w.sign = side;
        w.x.terms = {{Rational(side), 0, p}};
        w.y.terms = {{b.wall_scale, 1, b.q}};
        std::string name = side > 0 ? "W+" : "W-";
        while (out.has_sheet(name)) name += "'";
        wall_names[wi++] = name;
        out.sheets.push_back(Sheet{name, w});
    }

    out.metadata["surgery"] = {{"op", "break-bridge"},
                               {"bridge", bridge_index},
                               {"p", p.str()},
                               {"prev_p", prev_p.str()},
                               {"route", route},
                               {"walls", {wall_names[0], wall_names[1]}}};
    return out;
}

GermModel restore_bridge(const GermModel& model) {
    if (!model.metadata.contains("surgery"))
        throw InvalidInput("model carries no bridge surgery to undo");
    const auto& rec = model.metadata["surgery"];
    GermModel out = model;
    std::size_t bi = rec["bridge"].get<std::size_t>();
    std::string route = rec["route"].get<std::string>();
    std::vector<std::string> walls = rec["walls"].get<std::vector<std::string>>();

    out.sheets.erase(std::remove_if(out.sheets.begin(), out.sheets.end(),
                                    [&](const Sheet& s) {
                                        return std::find(walls.begin(), walls.end(), s.name) !=
                                               walls.end();
                                    }),
                     out.sheets.end());
    BridgeSpec& b = out.bridges.at(bi);
    if (route == "holder") {
        for (Sheet& s : out.sheets)
            if (s.name == b.triangles[0] || s.name == b.triangles[1])
                std::get<HolderSheet>(s.data).gap_exp.reset();
    } else {
        for (Sheet& s : out.sheets)
            if (s.name == b.triangles[0]) std::get<ImplicitSheet>(s.data).constraints.pop_back();
    }
    b.p = parse_rational(rec["prev_p"].get<std::string>());
    out.metadata.erase("surgery");
    return out;
}

// --- main family -------------------------------------------------------------

GermModel build_family(int twists) {
    if (twists < 0 || twists > 32)
        throw InvalidInput("twist count must lie in [0, 32]");
    // y^2 t^2 = x^4 + (x^2 + y^2 - 2t^2)^4
    Poly A = psum({mono(1, 2, 0), mono(1, 0, 2), mono(-2, 0, 0, Rational(2))});
    Poly A2 = pmul(A, A);
    Poly F = psum({mono(1, 0, 2, Rational(2)), mono(-1, 4, 0), pneg(pmul(A2, A2))});

    GermModel m;
    m.dimension = 4;
    m.sheets.push_back(make_implicit_sheet("G", F, band_constraints()));
    m.sheets.push_back(make_cone_sheet("SR", strand_curve(twists, +1), false));
    m.sheets.push_back(make_cone_sheet("SL", strand_curve(twists, -1), false));

    m.arcs.emplace("mid+", power_arc({}, {{4.0, Rational(3)}}));
    m.arcs.emplace("mid-", power_arc({}, {{-4.0, Rational(3)}}));
    double s17 = std::sqrt(17.0);
    m.arcs.emplace("bR+", power_arc({{1.0, Rational(2)}}, {{s17, Rational(3)}}));
    m.arcs.emplace("bR-", power_arc({{1.0, Rational(2)}}, {{-s17, Rational(3)}}));
    m.arcs.emplace("bL+", power_arc({{-1.0, Rational(2)}}, {{s17, Rational(3)}}));
    m.arcs.emplace("bL-", power_arc({{-1.0, Rational(2)}}, {{-s17, Rational(3)}}));

    BridgeSpec b;
    b.q = Rational(3);
    b.beta = Rational(2);
    b.p = Rational(5, 2);
    b.triangles = {"G", "G"};
    b.boundary_arcs = {"bL+", "bR+", "bL-", "bR-"};
    b.wall_scale = Rational(4);
    m.bridges.push_back(b);

    m.metadata["builder"] = "family";
    m.metadata["twists"] = twists;
    return m;
}

PLMap family_map(const GermModel& a, const GermModel& b) {
    PLMap f;
    f.pieces.push_back(identity_piece("G"));
    for (const char* name : {"SR", "SL"}) {
        ConeReparamPiece piece;
        piece.source = piece.target = name;
        piece.src_curve = cone_of(a, name).curve;
        piece.dst_curve = cone_of(b, name).curve;
        f.pieces.push_back(piece);
    }
    return f;
}

std::pair<GermModel, GermModel> build_example4() {
    GermModel x1 = build_family(0);
    GermModel x2 = build_family(1);
    x1.metadata["builder"] = "example4";
    x1.metadata["member"] = "X1";
    x2.metadata["builder"] = "example4";
    x2.metadata["member"] = "X2";
    return {std::move(x1), std::move(x2)};
}

// --- strand surgeries ---------------------------------------------------------

GermModel attach_connected_sum(const GermModel& base, const std::vector<Vec3>& shape,
                               const std::string& shape_name) {
    GermModel out = base;
    ConeSheet& strand = cone_of(out, "SR");
    if (strand.notch)
        throw InvalidInput("truncated strand cannot take an attachment; attach first");
    std::size_t rv = return_vertex(strand.curve);
    if (rv == 0) throw InvalidInput("return-path vertex has no incoming edge");
    int ep = int(rv) - 1;  // spliced edge: previous vertex -> return vertex

    std::vector<Vec3> knot = place_shape(shape, 0.5, {4.3, 0.4, 0});
    int n = int(knot.size());
    const std::vector<Vec3>& P = strand.curve;
    Vec3 mid = 0.5 * (P[ep] + P[ep + 1]);
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return dist(0.5 * (knot[a] + knot[wrap(a + 1, n)]), mid) <
               dist(0.5 * (knot[b] + knot[wrap(b + 1, n)]), mid);
    });
    double clear_min = 0.02 * shape_diameter(knot);
    for (int e : order) {
        for (int orientation : {0, 1}) {
            std::vector<Vec3> arc = opened_arc(knot, e, orientation);
            int front_v = orientation == 0 ? wrap(e + 1, n) : e;
            int back_v = orientation == 0 ? e : wrap(e + 1, n);
            double c1 = clearance_to(P[ep], arc.front(), knot, true, wrap(front_v - 1, n), front_v);
            double c2 = clearance_to(arc.back(), P[ep + 1], knot, true, wrap(back_v - 1, n), back_v);
            // Against the strand itself, the spliced edge and its neighbors
            // are exempt.
            double c3 = clearance_to(P[ep], arc.front(), P, false, ep - 1, ep);
            double c4 = clearance_to(arc.back(), P[ep + 1], P, false, ep, ep + 1);
            double c5 = segment_distance(P[ep], arc.front(), arc.back(), P[ep + 1]);
            if (std::min({c1, c2, c3, c4, c5}) < clear_min) continue;
            std::vector<Vec3> rebuilt(P.begin(), P.begin() + ep + 1);
            rebuilt.insert(rebuilt.end(), arc.begin(), arc.end());
            rebuilt.insert(rebuilt.end(), P.begin() + ep + 1, P.end());
            strand.curve = std::move(rebuilt);
            out.metadata["attachment"] = {{"sheet", "SR"},
                                          {"knot", shape_name},
                                          {"edge", ep},
                                          {"vertices", int(arc.size())}};
            return out;
        }
    }
    throw ComputationError("could not splice the knot into the strand without contact");
}

GermModel remove_holder_triangle(const GermModel& model, const Rational& beta) {
    if (!(Rational(1) < beta))
        throw InvalidInput("width exponent must exceed 1 so the removed triangle shrinks");
    GermModel out = model;
    ConeSheet& strand = cone_of(out, "SR");
    if (strand.notch) throw InvalidInput("strand already truncated");
    std::size_t rv = return_vertex(strand.curve);
    double s0 = 0;
    for (std::size_t i = 0; i + 1 <= rv && i + 1 < strand.curve.size(); ++i)
        s0 += dist(strand.curve[i], strand.curve[i + 1]);
    double total = polyline_length(strand.curve, false);
    const double halfwidth = 0.1;
    if (!(halfwidth < s0 && s0 + halfwidth < total))
        throw InvalidInput("removed triangle would reach a strand endpoint");
    strand.notch = Notch{s0, halfwidth, beta};
    out.metadata["truncation"] = {{"sheet", "SR"},
                                  {"center", s0},
                                  {"halfwidth", halfwidth},
                                  {"width_exp", beta.str()}};
    return out;
}

}  // namespace germlab
