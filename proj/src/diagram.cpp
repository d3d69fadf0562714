#include "germlab/diagram.hpp"

#include <algorithm>
#include <cmath>

#include "germlab/errors.hpp"

namespace germlab {

int Diagram::writhe() const {
    int w = 0;
    for (const Crossing& c : crossings) w += c.sign;
    return w;
}

double Diagram::half_linking(int comp_a, int comp_b) const {
    int s = 0;
    for (const Crossing& c : crossings) {
        bool ab = c.over_comp == comp_a && c.under_comp == comp_b;
        bool ba = c.over_comp == comp_b && c.under_comp == comp_a;
        if (ab || ba) s += c.sign;
    }
    return 0.5 * s;
}

std::string Diagram::gauss_code() const {
    std::string s;
    for (std::size_t c = 0; c < events.size(); ++c) {
        if (c > 0) s += " / ";
        bool first = true;
        for (auto [k, over] : events[c]) {
            if (!first) s += " ";
            first = false;
            s += over ? "O" : "U";
            s += std::to_string(k + 1);
            s += crossings[k].sign > 0 ? "+" : "-";
        }
    }
    return s;
}

namespace {

Vec3 rotate(const Vec3& p, const Vec3& axis, double angle) {
    double c = std::cos(angle), s = std::sin(angle);
    return c * p + s * cross(axis, p) + (1 - c) * dot(axis, p) * axis;
}

struct Event {
    double pos = 0;  // segment index + parameter, along the component walk
    int crossing = -1;
};

struct RawCrossing {
    int ca, sa;  // component and segment of the first strand
    int cb, sb;
    double ua, ub;  // parameters along the segments
    Vec2 where;
    double za, zb;
};

bool segment_intersect(Vec2 a0, Vec2 a1, Vec2 b0, Vec2 b1, double& u, double& v) {
    Vec2 r = a1 - a0, s = b1 - b0;
    double den = cross2(r, s);
    if (den == 0) return false;
    Vec2 d = b0 - a0;
    u = cross2(d, s) / den;
    v = cross2(d, r) / den;
    // Endpoint grazes stay in: the caller rejects them as non-generic
    // instead of silently dropping a crossing.
    constexpr double margin = 1e-9;
    return u > -margin && u < 1 + margin && v > -margin && v < 1 + margin;
}

}  // namespace

Diagram project_generic(const PolyLink& link, Rng& rng, int max_attempts) {
    for (const PolyComponent& c : link.comps) {
        if (!c.closed) throw InvalidInput("diagram projection needs closed components");
        if (c.pts.size() < 3) throw InvalidInput("diagram projection needs >= 3 vertices");
    }
    double scale = 0;
    for (const PolyComponent& c : link.comps)
        for (const Vec3& p : c.pts) scale = std::max(scale, norm(p));
    if (scale == 0) throw InvalidInput("diagram projection of a degenerate link");
    const double tol = 1e-6 * scale;

    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        // First attempt is the plain z projection; later ones tilt by a
        // growing random rotation.
        std::vector<std::vector<Vec3>> pts;
        Vec3 direction{0, 0, 1};
        if (attempt == 0) {
            for (const PolyComponent& c : link.comps) pts.push_back(c.pts);
        } else {
            double zc = 2 * rng.uniform01() - 1;
            double ph = 2 * M_PI * rng.uniform01();
            double rr = std::sqrt(std::max(0.0, 1 - zc * zc));
            Vec3 axis{rr * std::cos(ph), rr * std::sin(ph), zc};
            double angle = 0.05 * attempt * rng.uniform01() + 0.01;
            for (const PolyComponent& c : link.comps) {
                std::vector<Vec3> q;
                for (const Vec3& p : c.pts) q.push_back(rotate(p, axis, angle));
                pts.push_back(std::move(q));
            }
            direction = rotate({0, 0, 1}, axis, -angle);
        }

        bool ok = true;
        std::vector<RawCrossing> raw;
        for (std::size_t ca = 0; ca < pts.size() && ok; ++ca) {
            std::size_t na = pts[ca].size();
            for (std::size_t cb = ca; cb < pts.size() && ok; ++cb) {
                std::size_t nb = pts[cb].size();
                for (std::size_t i = 0; i < na && ok; ++i) {
                    std::size_t j0 = ca == cb ? i + 1 : 0;
                    for (std::size_t j = j0; j < nb && ok; ++j) {
                        if (ca == cb) {
                            // Skip shared-vertex pairs, including the wrap.
                            if (j == i + 1 || (i == 0 && j + 1 == na)) continue;
                        }
                        Vec3 A0 = pts[ca][i], A1 = pts[ca][(i + 1) % na];
                        Vec3 B0 = pts[cb][j], B1 = pts[cb][(j + 1) % nb];
                        double u, v;
                        if (!segment_intersect({A0.x, A0.y}, {A1.x, A1.y}, {B0.x, B0.y},
                                               {B1.x, B1.y}, u, v))
                            continue;
                        Vec3 Pa = A0 + u * (A1 - A0);
                        Vec3 Pb = B0 + v * (B1 - B0);
                        if (std::fabs(Pa.z - Pb.z) < tol) {
                            ok = false;
                            break;
                        }
                        // Nearly collinear strands make the sign unstable.
                        Vec2 da{A1.x - A0.x, A1.y - A0.y};
                        Vec2 db{B1.x - B0.x, B1.y - B0.y};
                        if (std::fabs(cross2(da, db)) < 1e-6 * norm(da) * norm(db)) {
                            ok = false;
                            break;
                        }
                        // Crossings at segment ends make arc assignment
                        // ambiguous.
                        double ea = std::min(u, 1 - u) * dist(A0, A1);
                        double eb = std::min(v, 1 - v) * dist(B0, B1);
                        if (ea < tol || eb < tol) {
                            ok = false;
                            break;
                        }
                        RawCrossing rc;
                        rc.ca = int(ca);
                        rc.sa = int(i);
                        rc.cb = int(cb);
                        rc.sb = int(j);
                        rc.ua = u;
                        rc.ub = v;
                        rc.where = {Pa.x, Pa.y};
                        rc.za = Pa.z;
                        rc.zb = Pb.z;
                        raw.push_back(rc);
                    }
                }
            }
        }
        if (ok) {
            for (std::size_t i = 0; i < raw.size() && ok; ++i)
                for (std::size_t j = i + 1; j < raw.size(); ++j) {
                    Vec2 d = raw[i].where - raw[j].where;
                    if (norm(d) < tol) {
                        ok = false;
                        break;
                    }
                }
        }
        if (!ok) continue;

        // Under events along each component define the Wirtinger arcs.
        std::size_t nc = pts.size();
        std::vector<std::vector<Event>> under(nc);
        for (std::size_t k = 0; k < raw.size(); ++k) {
            const RawCrossing& rc = raw[k];
            bool a_over = rc.za > rc.zb;
            int uc = a_over ? rc.cb : rc.ca;
            double upos = a_over ? rc.sb + rc.ub : rc.sa + rc.ua;
            under[uc].push_back({upos, int(k)});
        }
        Diagram dia;
        dia.direction = direction;
        std::vector<std::vector<double>> arc_starts(nc);
        std::vector<std::vector<int>> arc_ids(nc);
        for (std::size_t c = 0; c < nc; ++c) {
            std::sort(under[c].begin(), under[c].end(),
                      [](const Event& a, const Event& b) { return a.pos < b.pos; });
            if (under[c].empty()) {
                arc_starts[c] = {0};
                arc_ids[c] = {dia.arc_count};
                dia.arc_comp.push_back(int(c));
                ++dia.arc_count;
            } else {
                // Arc k starts at under event k and runs to event k+1.
                for (const Event& e : under[c]) {
                    arc_starts[c].push_back(e.pos);
                    arc_ids[c].push_back(dia.arc_count);
                    dia.arc_comp.push_back(int(c));
                    ++dia.arc_count;
                }
            }
        }
        auto arc_at = [&](int c, double pos) {
            const std::vector<double>& st = arc_starts[c];
            // Last arc wraps around the start of the walk.
            auto it = std::upper_bound(st.begin(), st.end(), pos);
            std::size_t idx = it == st.begin() ? st.size() - 1 : std::size_t(it - st.begin()) - 1;
            return arc_ids[c][idx];
        };
        for (std::size_t k = 0; k < raw.size(); ++k) {
            const RawCrossing& rc = raw[k];
            bool a_over = rc.za > rc.zb;
            int oc = a_over ? rc.ca : rc.cb;
            int uc = a_over ? rc.cb : rc.ca;
            int os = a_over ? rc.sa : rc.sb;
            double opos = a_over ? rc.sa + rc.ua : rc.sb + rc.ub;
            double upos = a_over ? rc.sb + rc.ub : rc.sa + rc.ua;
            int us = a_over ? rc.sb : rc.sa;

            Crossing cr;
            cr.over_comp = oc;
            cr.under_comp = uc;
            cr.where = rc.where;
            cr.over_arc = arc_at(oc, opos);
            // The arc ending here is the one containing positions just
            // before the event; the one starting here begins at the event.
            const std::vector<double>& st = arc_starts[uc];
            auto it = std::lower_bound(st.begin(), st.end(), upos);
            std::size_t start_idx = std::size_t(it - st.begin());
            if (start_idx >= st.size() || st[start_idx] != upos)
                throw ComputationError("diagram: under event not aligned with an arc start");
            std::size_t in_idx = (start_idx + st.size() - 1) % st.size();
            cr.out_arc = arc_ids[uc][start_idx];
            cr.in_arc = arc_ids[uc][in_idx];

            std::size_t no = pts[oc].size(), nu = pts[uc].size();
            Vec3 od3 = pts[oc][(os + 1) % no] - pts[oc][os];
            Vec3 ud3 = pts[uc][(us + 1) % nu] - pts[uc][us];
            double cr2 = cross2({od3.x, od3.y}, {ud3.x, ud3.y});
            cr.sign = cr2 > 0 ? 1 : -1;
            dia.crossings.push_back(cr);
        }
        // Walk order of crossings per component, for the Gauss code.
        struct Visit {
            double pos;
            int crossing;
            bool over;
        };
        std::vector<std::vector<Visit>> visits(nc);
        for (std::size_t k = 0; k < raw.size(); ++k) {
            const RawCrossing& rc = raw[k];
            bool a_over = rc.za > rc.zb;
            visits[rc.ca].push_back({rc.sa + rc.ua, int(k), a_over});
            visits[rc.cb].push_back({rc.sb + rc.ub, int(k), !a_over});
        }
        dia.events.resize(nc);
        for (std::size_t c = 0; c < nc; ++c) {
            std::sort(visits[c].begin(), visits[c].end(),
                      [](const Visit& a, const Visit& b) { return a.pos < b.pos; });
            for (const Visit& v : visits[c]) dia.events[c].push_back({v.crossing, v.over});
        }
        return dia;
    }
    throw ComputationError("no generic projection found within the attempt budget");
}

}  // namespace germlab
