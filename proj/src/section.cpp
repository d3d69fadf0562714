#include "germlab/section.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "germlab/errors.hpp"

namespace germlab {

namespace {

// ---------------------------------------------------------------------------
// Implicit sheet: marching squares over [-w*t, w*t]^2, then chaining.

struct Grid {
    int n = 0;  // points per side
    double lo = 0, step = 0;
    std::vector<double> f;

    double coord(int i) const { return lo + step * i; }
    double value(int i, int j) const { return f[std::size_t(j) * n + i]; }
};

Grid evaluate_grid(const Poly& surface, double t, const SectionOptions& opts) {
    Grid g;
    Poly2 p = surface.at_t(t);
    int cells = int(std::lround(2 * opts.window * opts.resolution));
    g.n = cells + 1;
    g.lo = -opts.window * t;
    g.step = opts.spacing(t);
    g.f.resize(std::size_t(g.n) * g.n);
    std::vector<double> xpow(std::size_t(g.n) * (p.max_ex + 1));
    for (int i = 0; i < g.n; ++i) {
        double x = g.coord(i), v = 1;
        for (int e = 0; e <= p.max_ex; ++e) {
            xpow[std::size_t(i) * (p.max_ex + 1) + e] = v;
            v *= x;
        }
    }
    std::vector<double> ypow(p.max_ey + 1);
    for (int j = 0; j < g.n; ++j) {
        double y = g.coord(j), v = 1;
        for (int e = 0; e <= p.max_ey; ++e) {
            ypow[e] = v;
            v *= y;
        }
        double* row = &g.f[std::size_t(j) * g.n];
        for (int i = 0; i < g.n; ++i) row[i] = p.eval_pow(&xpow[std::size_t(i) * (p.max_ex + 1)], ypow.data());
    }
    return g;
}

// Edge key: lower-left grid point index and orientation bit (0 horizontal,
// 1 vertical).  Deterministic vertex placement by linear interpolation.
struct Chainer {
    const Grid& g;
    std::unordered_map<long long, int> edge_vertex;
    std::vector<Vec3> verts;
    std::vector<std::array<int, 2>> segs;

    explicit Chainer(const Grid& grid) : g(grid) {}

    long long key(int i, int j, int orient) const {
        return (static_cast<long long>(j) * g.n + i) * 2 + orient;
    }

    int vertex_on_edge(int i, int j, int orient) {
        long long k = key(i, j, orient);
        auto it = edge_vertex.find(k);
        if (it != edge_vertex.end()) return it->second;
        double va = g.value(i, j);
        double vb = orient == 0 ? g.value(i + 1, j) : g.value(i, j + 1);
        double u = va / (va - vb);
        u = std::clamp(u, 0.0, 1.0);
        Vec3 p;
        if (orient == 0)
            p = {g.coord(i) + u * g.step, g.coord(j), 0};
        else
            p = {g.coord(i), g.coord(j) + u * g.step, 0};
        int idx = int(verts.size());
        verts.push_back(p);
        edge_vertex.emplace(k, idx);
        return idx;
    }
};

// Cell edges: 0 bottom(h i,j) 1 right(v i+1,j) 2 top(h i,j+1) 3 left(v i,j).
void march_cell(Chainer& c, const Poly2& p, int i, int j) {
    const Grid& g = c.g;
    double v0 = g.value(i, j), v1 = g.value(i + 1, j);
    double v2 = g.value(i + 1, j + 1), v3 = g.value(i, j + 1);
    int code = (v0 > 0 ? 1 : 0) | (v1 > 0 ? 2 : 0) | (v2 > 0 ? 4 : 0) | (v3 > 0 ? 8 : 0);
    if (code == 0 || code == 15) return;
    auto emit = [&](int ea, int eb) {
        auto on = [&](int e) {
            switch (e) {
                case 0: return c.vertex_on_edge(i, j, 0);
                case 1: return c.vertex_on_edge(i + 1, j, 1);
                case 2: return c.vertex_on_edge(i, j + 1, 0);
                default: return c.vertex_on_edge(i, j, 1);
            }
        };
        c.segs.push_back({on(ea), on(eb)});
    };
    switch (code) {
        case 1: case 14: emit(3, 0); break;
        case 2: case 13: emit(0, 1); break;
        case 3: case 12: emit(3, 1); break;
        case 4: case 11: emit(1, 2); break;
        case 6: case 9:  emit(0, 2); break;
        case 7: case 8:  emit(2, 3); break;
        case 5: case 10: {
            double center = p.eval(g.coord(i) + 0.5 * g.step, g.coord(j) + 0.5 * g.step);
            bool center_pos = center > 0;
            bool corners_pos = code == 5;  // corners 0 and 2 positive
            if (center_pos == corners_pos) {
                emit(3, 2);
                emit(0, 1);
            } else {
                emit(3, 0);
                emit(1, 2);
            }
            break;
        }
        default: break;
    }
}

std::vector<PolyComponent> chain_segments(Chainer& c, const std::string& tag) {
    std::size_t nv = c.verts.size();
    std::vector<std::array<int, 2>> adj(nv, {-1, -1});
    std::vector<int> degree(nv, 0);
    for (std::size_t s = 0; s < c.segs.size(); ++s) {
        for (int side = 0; side < 2; ++side) {
            int v = c.segs[s][side];
            if (degree[v] < 2) adj[v][degree[v]] = int(s);
            ++degree[v];
        }
    }
    std::vector<char> used(c.segs.size(), 0);
    std::vector<PolyComponent> out;
    auto walk = [&](int start_vertex, int seg) {
        PolyComponent comp;
        comp.tag = tag;
        int v = start_vertex;
        comp.pts.push_back(c.verts[v]);
        int s = seg;
        while (s >= 0 && !used[s]) {
            used[s] = 1;
            int w = c.segs[s][0] == v ? c.segs[s][1] : c.segs[s][0];
            comp.pts.push_back(c.verts[w]);
            v = w;
            s = -1;
            for (int k = 0; k < 2; ++k) {
                int cand = adj[v][k];
                if (cand >= 0 && !used[cand]) s = cand;
            }
        }
        return comp;
    };
    // Open chains first (endpoints have degree 1), in deterministic order.
    for (std::size_t v = 0; v < nv; ++v) {
        if (degree[v] != 1) continue;
        int s = adj[v][0];
        if (s < 0 || used[s]) continue;
        out.push_back(walk(int(v), s));
    }
    // Remaining segments belong to cycles.
    for (std::size_t s = 0; s < c.segs.size(); ++s) {
        if (used[s]) continue;
        PolyComponent comp = walk(c.segs[s][0], int(s));
        if (comp.pts.size() > 2 && dist(comp.pts.front(), comp.pts.back()) < 1e-12) {
            comp.pts.pop_back();
            comp.closed = true;
        }
        out.push_back(std::move(comp));
    }
    return out;
}

double min_constraint(const std::vector<Poly2>& gs, const Vec3& p) {
    double m = 1e300;
    for (const Poly2& g : gs) m = std::min(m, g.eval(p.x, p.y));
    return m;
}

Vec3 bisect_to_boundary(const std::vector<Poly2>& gs, Vec3 inside, Vec3 outside) {
    for (int it = 0; it < 20; ++it) {
        Vec3 mid = 0.5 * (inside + outside);
        if (min_constraint(gs, mid) >= 0)
            inside = mid;
        else
            outside = mid;
    }
    return inside;
}

// Drops vertices violating any constraint; crossing edges are bisected onto
// the boundary.  Chains split into open sub-chains at violations.
std::vector<PolyComponent> clip_constraints(const std::vector<PolyComponent>& comps,
                                            const std::vector<Poly2>& gs) {
    if (gs.empty()) return comps;
    std::vector<PolyComponent> out;
    for (const PolyComponent& comp : comps) {
        std::vector<Vec3> pts = comp.pts;
        if (comp.closed && !pts.empty()) pts.push_back(pts.front());
        std::vector<char> ok(pts.size());
        bool all_ok = true, none_ok = true;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            ok[i] = min_constraint(gs, pts[i]) >= 0;
            all_ok = all_ok && ok[i];
            none_ok = none_ok && !ok[i];
        }
        if (all_ok) {
            out.push_back(comp);
            continue;
        }
        if (none_ok) continue;
        PolyComponent cur;
        cur.tag = comp.tag;
        auto flush = [&]() {
            if (cur.pts.size() >= 2) out.push_back(cur);
            cur.pts.clear();
        };
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (ok[i]) {
                if (cur.pts.empty() && i > 0 && !ok[i - 1])
                    cur.pts.push_back(bisect_to_boundary(gs, pts[i], pts[i - 1]));
                cur.pts.push_back(pts[i]);
            } else if (!cur.pts.empty()) {
                cur.pts.push_back(bisect_to_boundary(gs, pts[i - 1], pts[i]));
                flush();
            }
        }
        flush();
    }
    return out;
}

std::vector<PolyComponent> section_implicit(const ImplicitSheet& sheet, const std::string& tag,
                                            double t, const SectionOptions& opts) {
    // Constraints in t only (0 <= t <= 1 bounds) gate the whole section.
    std::vector<Poly2> gs;
    for (const Poly& g : sheet.constraints) {
        bool spatial = false;
        for (const PolyTerm& m : g.terms)
            if (m.ex || m.ey) spatial = true;
        if (spatial) {
            gs.push_back(g.at_t(t));
        } else if (g.eval(0, 0, t) < 0) {
            return {};
        }
    }
    Grid grid = evaluate_grid(sheet.surface, t, opts);
    Poly2 p2 = sheet.surface.at_t(t);
    Chainer chainer(grid);
    for (int j = 0; j + 1 < grid.n; ++j)
        for (int i = 0; i + 1 < grid.n; ++i) march_cell(chainer, p2, i, j);
    std::vector<PolyComponent> comps = chain_segments(chainer, tag);
    return clip_constraints(comps, gs);
}

// ---------------------------------------------------------------------------
// Cone sheet: exact scaled polyline, minus the notch interval if present.

std::vector<PolyComponent> section_cone(const ConeSheet& cone, const std::string& tag, double t) {
    std::vector<Vec3> pts = cone.curve;
    bool closed = cone.closed;
    std::vector<PolyComponent> pieces;
    if (cone.notch) {
        std::vector<Vec3> path = pts;
        if (closed) path.push_back(pts.front());
        std::vector<double> cum(path.size(), 0);
        for (std::size_t i = 1; i < path.size(); ++i)
            cum[i] = cum[i - 1] + dist(path[i - 1], path[i]);
        double total = cum.back();
        double half = cone.notch->halfwidth * std::pow(t, cone.notch->width_exp.value() - 1.0);
        double s0 = cone.notch->center - half, s1 = cone.notch->center + half;
        if (s1 - s0 >= total) return {};
        auto point_at = [&](double s) {
            s = std::clamp(s, 0.0, total);
            std::size_t i = std::upper_bound(cum.begin(), cum.end(), s) - cum.begin();
            if (i == 0) i = 1;
            if (i >= path.size()) i = path.size() - 1;
            double seg = cum[i] - cum[i - 1];
            double u = seg > 0 ? (s - cum[i - 1]) / seg : 0;
            return path[i - 1] + u * (path[i] - path[i - 1]);
        };
        auto cut_piece = [&](double a, double b) {
            PolyComponent comp;
            comp.tag = tag;
            comp.pts.push_back(point_at(a));
            for (std::size_t i = 0; i < path.size(); ++i)
                if (cum[i] > a && cum[i] < b) comp.pts.push_back(path[i]);
            comp.pts.push_back(point_at(b));
            return comp;
        };
        if (closed) {
            // One open piece walking forward from the notch end around to the
            // notch start, passing original vertices in cyclic order.
            double a = std::fmod(std::fmod(s1, total) + total, total);
            double b = std::fmod(std::fmod(s0, total) + total, total);
            double span = std::fmod(b - a + total, total);
            std::vector<std::pair<double, Vec3>> inner;
            for (std::size_t i = 0; i + 1 < path.size(); ++i) {
                double rel = std::fmod(cum[i] - a + total, total);
                if (rel > 0 && rel < span) inner.emplace_back(rel, path[i]);
            }
            std::sort(inner.begin(), inner.end(),
                      [](const auto& u, const auto& v) { return u.first < v.first; });
            PolyComponent comp;
            comp.tag = tag;
            comp.pts.push_back(point_at(a));
            for (const auto& [rel, p] : inner) comp.pts.push_back(p);
            comp.pts.push_back(point_at(b));
            pieces.push_back(std::move(comp));
        } else {
            if (s0 > 0) pieces.push_back(cut_piece(0, s0));
            if (s1 < total) pieces.push_back(cut_piece(s1, total));
        }
    } else {
        PolyComponent comp;
        comp.tag = tag;
        comp.pts = pts;
        comp.closed = closed;
        pieces.push_back(std::move(comp));
    }
    for (PolyComponent& comp : pieces)
        for (Vec3& p : comp.pts) p = t * p;
    return pieces;
}

// ---------------------------------------------------------------------------
// Holder sheet: sampled parameter line u in [-1, 1].

std::vector<PolyComponent> section_holder(const HolderSheet& h, const std::string& tag, double t) {
    const int samples = 33;
    auto sample_range = [&](double u0, double u1) {
        PolyComponent comp;
        comp.tag = tag;
        for (int k = 0; k < samples; ++k) {
            double u = u0 + (u1 - u0) * k / (samples - 1);
            comp.pts.push_back(h.eval(u, t));
        }
        return comp;
    };
    if (h.gap_exp) {
        // Bridge-breaking gap: the sub-triangle |u| < t^(gap_exp - beta) is
        // removed.  Near t = 1 the gap swallows the whole section.
        double ugap = std::pow(t, (*h.gap_exp - h.beta).value());
        if (ugap >= 1.0 - 1e-12) return {};
        std::vector<PolyComponent> pieces;
        pieces.push_back(sample_range(-1.0, -ugap));
        pieces.push_back(sample_range(ugap, 1.0));
        return pieces;
    }
    return {sample_range(-1.0, 1.0)};
}

// ---------------------------------------------------------------------------
// Gluing: merge open components whose endpoints come within tolerance,
// guarded against reversal (tangency-close branch pairs must stay apart).

struct GlueCandidate {
    double d = 1e300;
    int i = -1, j = -1;
    bool i_back = false, j_front = false;
};

void reverse_component(PolyComponent& c) { std::reverse(c.pts.begin(), c.pts.end()); }

// Coincident consecutive samples (piece boundaries land on shared vertices)
// would give zero-length segments, which no projection can make generic.
void drop_duplicate_points(PolyComponent& c, double eps) {
    std::vector<Vec3> out;
    out.reserve(c.pts.size());
    for (const Vec3& p : c.pts)
        if (out.empty() || dist(out.back(), p) > eps) out.push_back(p);
    if (c.closed && out.size() > 2 && dist(out.front(), out.back()) <= eps) out.pop_back();
    c.pts = std::move(out);
}

void glue_components(std::vector<PolyComponent>& comps, double tol) {
    sort_components(comps);
    bool progressed = true;
    while (progressed) {
        progressed = false;
        GlueCandidate best;
        for (std::size_t i = 0; i < comps.size(); ++i) {
            if (comps[i].closed || comps[i].pts.size() < 2) continue;
            for (std::size_t j = 0; j < comps.size(); ++j) {
                if (i == j || comps[j].closed || comps[j].pts.size() < 2) continue;
                for (bool ib : {true, false}) {
                    for (bool jf : {true, false}) {
                        const Vec3& a = ib ? comps[i].pts.back() : comps[i].pts.front();
                        const Vec3& b = jf ? comps[j].pts.front() : comps[j].pts.back();
                        double d = dist(a, b);
                        if (d >= tol || d >= best.d) continue;
                        // Direction of travel into the joint along i, and out of
                        // it along j; a near-reversal is a tangency gap, not a
                        // junction, and must not be glued.
                        Vec3 din = ib ? normalized(comps[i].pts.back() -
                                                   comps[i].pts[comps[i].pts.size() - 2])
                                      : normalized(comps[i].pts[0] - comps[i].pts[1]);
                        Vec3 dout = jf ? normalized(comps[j].pts[1] - comps[j].pts[0])
                                       : normalized(comps[j].pts[comps[j].pts.size() - 2] -
                                                    comps[j].pts.back());
                        if (dot(din, dout) <= -0.7) continue;
                        best = {d, int(i), int(j), ib, jf};
                    }
                }
            }
        }
        if (best.i >= 0) {
            PolyComponent& a = comps[best.i];
            PolyComponent b = comps[best.j];
            if (!best.i_back) reverse_component(a);
            if (!best.j_front) reverse_component(b);
            if (dist(a.pts.back(), b.pts.front()) < 1e-15)
                a.pts.insert(a.pts.end(), b.pts.begin() + 1, b.pts.end());
            else
                a.pts.insert(a.pts.end(), b.pts.begin(), b.pts.end());
            if (a.tag != b.tag) {
                if (a.tag.find(b.tag) == std::string::npos) a.tag += "+" + b.tag;
            }
            comps.erase(comps.begin() + best.j);
            progressed = true;
            continue;
        }
        // Self-closure pass. The same near-reversal rule applies: a curve
        // whose ends meet head-on is a truncated pair of strands, not a loop.
        for (std::size_t i = 0; i < comps.size(); ++i) {
            PolyComponent& c = comps[i];
            if (c.closed || c.pts.size() < 3) continue;
            if (dist(c.pts.front(), c.pts.back()) < tol) {
                Vec3 din = normalized(c.pts.back() - c.pts[c.pts.size() - 2]);
                Vec3 dout = normalized(c.pts[1] - c.pts[0]);
                if (dot(din, dout) <= -0.7) continue;
                if (dist(c.pts.front(), c.pts.back()) < 1e-15) c.pts.pop_back();
                c.closed = true;
                progressed = true;
            }
        }
        if (progressed) continue;
    }
    comps.erase(std::remove_if(comps.begin(), comps.end(),
                               [](const PolyComponent& c) { return c.pts.size() < 2; }),
                comps.end());
    sort_components(comps);
}

}  // namespace

PolyLink section_of_sheet(const Sheet& sheet, double t, const SectionOptions& opts) {
    if (!(t > 0 && t <= 1)) throw InvalidInput("section scale t must lie in (0, 1]");
    PolyLink link;
    link.t = t;
    std::vector<PolyComponent> comps;
    if (const auto* imp = std::get_if<ImplicitSheet>(&sheet.data))
        comps = section_implicit(*imp, sheet.name, t, opts);
    else if (const auto* cone = std::get_if<ConeSheet>(&sheet.data))
        comps = section_cone(*cone, sheet.name, t);
    else
        comps = section_holder(std::get<HolderSheet>(sheet.data), sheet.name, t);
    for (PolyComponent& c : comps) drop_duplicate_points(c, 1e-9 * t);
    sort_components(comps);
    link.comps = std::move(comps);
    return link;
}

PolyLink section_at(const GermModel& model, double t, const SectionOptions& opts) {
    if (!(t > 0 && t <= 1)) throw InvalidInput("section scale t must lie in (0, 1]");
    PolyLink link;
    link.t = t;
    for (const Sheet& s : model.sheets) {
        PolyLink part = section_of_sheet(s, t, opts);
        for (PolyComponent& c : part.comps) link.comps.push_back(std::move(c));
    }
    if (opts.glue) {
        glue_components(link.comps, opts.glue_tolerance(t));
        for (PolyComponent& c : link.comps) drop_duplicate_points(c, 1e-9 * t);
    } else {
        sort_components(link.comps);
    }
    return link;
}

}  // namespace germlab
