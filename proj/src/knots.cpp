#include "germlab/knots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "germlab/errors.hpp"

namespace germlab {

namespace {

std::vector<Vec3> sample_closed(int n, Vec3 (*f)(double)) {
    std::vector<Vec3> pts;
    for (int i = 0; i < n; ++i) pts.push_back(f(2 * M_PI * i / n));
    return pts;
}

Vec3 unknot_pt(double u) { return {std::cos(u), std::sin(u), 0}; }

Vec3 trefoil_pt(double u) {
    return {(std::sin(u) + 2 * std::sin(2 * u)) / 3, (std::cos(u) - 2 * std::cos(2 * u)) / 3,
            -std::sin(3 * u) / 3};
}

Vec3 figure_eight_pt(double u) {
    double r = 2 + std::cos(2 * u);
    return {r * std::cos(3 * u) / 3, r * std::sin(3 * u) / 3, std::sin(4 * u) / 3};
}

}  // namespace

const std::vector<KnotShape>& knot_table() {
    static const std::vector<KnotShape> table = [] {
        std::vector<KnotShape> t;
        t.push_back({"unknot", sample_closed(64, unknot_pt), IntPoly::constant(1)});
        t.push_back({"trefoil", sample_closed(64, trefoil_pt), IntPoly({{1}, {-1}, {1}})});
        t.push_back(
            {"figure-eight", sample_closed(64, figure_eight_pt), IntPoly({{1}, {-3}, {1}})});
        return t;
    }();
    return table;
}

const KnotShape& knot_by_name(const std::string& name) {
    for (const KnotShape& k : knot_table())
        if (k.name == name) return k;
    throw InvalidInput("unknown knot: " + name);
}

namespace {

double spherical_triangle(const Vec3& u1, const Vec3& u2, const Vec3& u3) {
    double num = dot(u1, cross(u2, u3));
    double den = 1 + dot(u1, u2) + dot(u2, u3) + dot(u3, u1);
    // Coplanar direction triples span zero solid angle; without this guard
    // atan2(0, den < 0) would report a spurious half-sphere.
    if (std::abs(num) < 1e-13) return 0;
    return 2 * std::atan2(num, den);
}

// Signed area on the sphere swept by (b - a)/|b - a| as a runs over one edge
// of the first curve and b over one edge of the second.
double edge_pair_angle(const Vec3& a0, const Vec3& a1, const Vec3& b0, const Vec3& b1) {
    Vec3 q1 = normalized(b0 - a0);
    Vec3 q2 = normalized(b0 - a1);
    Vec3 q3 = normalized(b1 - a1);
    Vec3 q4 = normalized(b1 - a0);
    return spherical_triangle(q1, q2, q3) + spherical_triangle(q1, q3, q4);
}

double gauss_sum(const std::vector<Vec3>& a, const std::vector<Vec3>& b) {
    double total = 0;
    std::size_t na = a.size(), nb = b.size();
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nb; ++j)
            total += edge_pair_angle(a[i], a[(i + 1) % na], b[j], b[(j + 1) % nb]);
    return total / (4 * M_PI);
}

struct LinkingAttempt {
    double gauss = 0;
    double diagram = 0;
    bool consistent = false;
    int value = 0;
};

LinkingAttempt try_linking(const PolyComponent& a, const PolyComponent& b, Rng& rng) {
    LinkingAttempt r;
    r.gauss = gauss_sum(a.pts, b.pts);
    PolyLink pair;
    pair.comps = {a, b};
    Diagram dia = project_generic(pair, rng);
    r.diagram = dia.half_linking(0, 1);
    double gr = std::round(r.gauss);
    double dr = std::round(r.diagram);
    r.consistent = std::fabs(r.gauss - gr) < 0.05 && std::fabs(r.diagram - dr) < 1e-9 &&
                   gr == dr;
    r.value = int(gr);
    return r;
}

}  // namespace

int linking_number_gauss(const PolyLink& link, int comp_a, int comp_b, Rng& rng) {
    if (comp_a == comp_b) throw InvalidInput("linking number needs two distinct components");
    if (comp_a < 0 || comp_b < 0 || comp_a >= int(link.comps.size()) ||
        comp_b >= int(link.comps.size()))
        throw InvalidInput("linking number: component index out of range");
    const PolyComponent& a = link.comps[comp_a];
    const PolyComponent& b = link.comps[comp_b];
    if (!a.closed || !b.closed) throw InvalidInput("linking number needs closed components");
    LinkingAttempt att = try_linking(a, b, rng);
    if (att.consistent) return att.value;
    att = try_linking(subdivide(a), subdivide(b), rng);
    if (att.consistent) return att.value;
    throw ComputationError("linking number: Gauss sum and diagram sum disagree");
}

IntPoly alexander_polynomial(const Diagram& dia) {
    for (int c : dia.arc_comp)
        if (c != 0) throw InvalidInput("Alexander polynomial needs a one-component diagram");
    std::size_t n = dia.crossings.size();
    if (n == 0) return IntPoly::constant(1);
    if (std::size_t(dia.arc_count) != n)
        throw ComputationError("Alexander matrix: arc and crossing counts differ");
    IntPoly one = IntPoly::constant(1);
    IntPoly t = IntPoly::monomial(1);
    std::vector<std::vector<IntPoly>> m(n, std::vector<IntPoly>(n));
    for (std::size_t k = 0; k < n; ++k) {
        const Crossing& cr = dia.crossings[k];
        if (cr.sign > 0) {
            m[k][cr.out_arc] = m[k][cr.out_arc] + one;
            m[k][cr.in_arc] = m[k][cr.in_arc] - t;
            m[k][cr.over_arc] = m[k][cr.over_arc] + (t - one);
        } else {
            m[k][cr.out_arc] = m[k][cr.out_arc] + t;
            m[k][cr.in_arc] = m[k][cr.in_arc] - one;
            m[k][cr.over_arc] = m[k][cr.over_arc] + (one - t);
        }
    }
    // Any one row and one column are redundant in the Wirtinger presentation.
    std::vector<std::vector<IntPoly>> minor;
    for (std::size_t i = 0; i + 1 < n; ++i)
        minor.emplace_back(m[i].begin(), m[i].end() - 1);
    return alexander_normal_form(bareiss_determinant(std::move(minor)));
}

IntPoly alexander_of_component(const PolyComponent& comp, Rng& rng) {
    if (!comp.closed) throw InvalidInput("Alexander polynomial needs a closed component");
    PolyLink single;
    single.comps = {comp};
    return alexander_polynomial(project_generic(single, rng));
}

std::vector<IntPoly> alexander_per_component(const PolyLink& link, Rng& rng) {
    std::vector<IntPoly> out;
    for (const PolyComponent& c : link.comps)
        if (c.closed) out.push_back(alexander_of_component(c, rng));
    return out;
}

namespace {

Vec3 bbox_min(const std::vector<Vec3>& pts) {
    Vec3 m = pts.front();
    for (const Vec3& p : pts) {
        m.x = std::min(m.x, p.x);
        m.y = std::min(m.y, p.y);
        m.z = std::min(m.z, p.z);
    }
    return m;
}

Vec3 bbox_max(const std::vector<Vec3>& pts) {
    Vec3 m = pts.front();
    for (const Vec3& p : pts) {
        m.x = std::max(m.x, p.x);
        m.y = std::max(m.y, p.y);
        m.z = std::max(m.z, p.z);
    }
    return m;
}

double segment_distance(const Vec3& a0, const Vec3& a1, const Vec3& b0, const Vec3& b1) {
    // Clamped closest approach of two segments.
    Vec3 d1 = a1 - a0, d2 = b1 - b0, r = a0 - b0;
    double A = dot(d1, d1), E = dot(d2, d2), F = dot(d2, r);
    double s = 0, t = 0;
    if (A > 0 || E > 0) {
        double B = dot(d1, d2), C = dot(d1, r);
        double den = A * E - B * B;
        if (den > 1e-30) s = std::clamp((B * F - C * E) / den, 0.0, 1.0);
        if (E > 0) t = std::clamp((B * s + F) / E, 0.0, 1.0);
        if (A > 0) s = std::clamp((B * t - C) / A, 0.0, 1.0);
    }
    return dist(a0 + s * d1, b0 + t * d2);
}

double min_distance_to_polygon(const Vec3& s0, const Vec3& s1, const std::vector<Vec3>& poly,
                               int skip_a, int skip_b) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (int(i) == skip_a || int(i) == skip_b) continue;
        best = std::min(best, segment_distance(s0, s1, poly[i], poly[(i + 1) % n]));
    }
    return best;
}

}  // namespace

PolyComponent connected_sum(const PolyComponent& a, const PolyComponent& b) {
    if (!a.closed || !b.closed) throw InvalidInput("connected sum needs closed polygons");
    if (a.pts.size() < 3 || b.pts.size() < 3)
        throw InvalidInput("connected sum needs >= 3 vertices per polygon");
    Vec3 alo = bbox_min(a.pts), ahi = bbox_max(a.pts);
    Vec3 blo = bbox_min(b.pts), bhi = bbox_max(b.pts);
    double gap = 0.25 * (dist(alo, ahi) + dist(blo, bhi));
    Vec3 shift{ahi.x - blo.x + gap, 0.5 * (alo.y + ahi.y) - 0.5 * (blo.y + bhi.y),
               0.5 * (alo.z + ahi.z) - 0.5 * (blo.z + bhi.z)};
    std::vector<Vec3> bp;
    for (const Vec3& p : b.pts) bp.push_back(p + shift);

    // Facing edges first: rightmost midpoints of a, leftmost of b.
    auto order_by_mid_x = [](const std::vector<Vec3>& pts, bool desc) {
        std::vector<int> idx(pts.size());
        for (std::size_t i = 0; i < pts.size(); ++i) idx[i] = int(i);
        std::sort(idx.begin(), idx.end(), [&](int i, int j) {
            double mi = pts[i].x + pts[(i + 1) % pts.size()].x;
            double mj = pts[j].x + pts[(j + 1) % pts.size()].x;
            return desc ? mi > mj : mi < mj;
        });
        return idx;
    };
    std::vector<int> ea = order_by_mid_x(a.pts, true);
    std::vector<int> eb = order_by_mid_x(bp, false);
    double clearance = 0.05 * gap;

    const int budget = 16;
    for (int ia = 0; ia < budget && ia < int(ea.size()); ++ia) {
        for (int ib = 0; ib < budget && ib < int(eb.size()); ++ib) {
            int i = ea[ia], j = eb[ib];
            int na = int(a.pts.size()), nb = int(bp.size());
            Vec3 b1s = a.pts[i], b1e = bp[(j + 1) % nb];
            Vec3 b2s = bp[j], b2e = a.pts[(i + 1) % na];
            // Bridges replace edge i of a and edge j of b; each must stay
            // clear of both polygons (edges touching a bridge endpoint are
            // exempt) and of the other bridge.
            double c1 = std::min(
                min_distance_to_polygon(b1s, b1e, a.pts, i, (i + na - 1) % na),
                min_distance_to_polygon(b1s, b1e, bp, j, (j + 1) % nb));
            double c2 = std::min(
                min_distance_to_polygon(b2s, b2e, a.pts, i, (i + 1) % na),
                min_distance_to_polygon(b2s, b2e, bp, j, (j + nb - 1) % nb));
            double c3 = segment_distance(b1s, b1e, b2s, b2e);
            if (std::min({c1, c2, c3}) < clearance) continue;
            PolyComponent out;
            out.closed = true;
            out.tag = a.tag.empty() || b.tag.empty() ? a.tag + b.tag : a.tag + "+" + b.tag;
            for (int k = 0; k < na; ++k) out.pts.push_back(a.pts[(i + 1 + k) % na]);
            for (int k = 0; k < nb; ++k) out.pts.push_back(bp[(j + 1 + k) % nb]);
            return out;
        }
    }
    throw ComputationError("connected sum: no clear splice found within the budget");
}

}  // namespace germlab
