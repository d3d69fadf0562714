#include "germlab/tangent_cone.hpp"

#include <algorithm>
#include <cmath>

#include "germlab/errors.hpp"

namespace germlab {

std::vector<double> dyadic_ladder(int hi_exp, int lo_exp) {
    std::vector<double> out;
    for (int e = hi_exp; e <= lo_exp; ++e) out.push_back(std::ldexp(1.0, -e));
    return out;
}

namespace {

PolyLink rescale(const PolyLink& link) {
    PolyLink out;
    out.t = 1;
    out.comps = link.comps;
    for (PolyComponent& c : out.comps)
        for (Vec3& p : c.pts) p = p / link.t;
    return out;
}

}  // namespace

TangentConeResult tangent_cone_link(const GermModel& model, const std::vector<double>& ladder,
                                    const SectionOptions& opts, double tolerance) {
    if (ladder.size() < 4) throw InvalidInput("tangent cone ladder needs >= 4 rungs");
    for (std::size_t i = 1; i < ladder.size(); ++i)
        if (!(ladder[i] < ladder[i - 1]))
            throw InvalidInput("tangent cone ladder must be strictly decreasing");
    TangentConeResult res;
    res.report.ladder = ladder;
    res.report.tolerance = tolerance;
    PolyLink prev;
    for (std::size_t i = 0; i < ladder.size(); ++i) {
        PolyLink cur = rescale(section_at(model, ladder[i], opts));
        if (i > 0) res.report.hausdorff.push_back(hausdorff_distance(prev, cur));
        prev = std::move(cur);
    }
    res.link = std::move(prev);
    const std::vector<double>& h = res.report.hausdorff;
    bool mono = true;
    for (std::size_t i = h.size() >= 3 ? h.size() - 2 : 1; i < h.size(); ++i)
        if (h[i] > h[i - 1]) mono = false;
    res.report.converged = !h.empty() && h.back() < tolerance && mono;
    return res;
}

namespace {

struct LooseEnd {
    std::vector<Vec3> pts;  // oriented away from the origin end
    std::string tag;
};

// Outgoing tangent and curvature vector near the origin end, estimated from
// points at arclength offsets comparable to the retraction radius.
void end_frame(const std::vector<Vec3>& pts, double ptol, Vec3& tangent, Vec3& curv) {
    auto at_arclength = [&](double s) {
        double acc = 0;
        for (std::size_t i = 1; i < pts.size(); ++i) {
            double seg = dist(pts[i - 1], pts[i]);
            if (acc + seg >= s && seg > 0) {
                double u = (s - acc) / seg;
                return pts[i - 1] + u * (pts[i] - pts[i - 1]);
            }
            acc += seg;
        }
        return pts.back();
    };
    Vec3 p0 = pts.front();
    Vec3 p1 = at_arclength(0.5 * ptol);
    Vec3 p2 = at_arclength(1.0 * ptol);
    tangent = normalized(p1 - p0);
    double h = 0.5 * ptol;
    curv = (1.0 / (h * h)) * ((p2 - p1) - (p1 - p0));
}

double pair_cost(const LooseEnd& a, const LooseEnd& b, double ptol) {
    Vec3 ta, ka, tb, kb;
    end_frame(a.pts, ptol, ta, ka);
    end_frame(b.pts, ptol, tb, kb);
    double tangency = 20.0 * (1.0 + dot(ta, tb));  // opposite tangents pair up
    double bend = norm(ka - kb);
    return tangency + bend;
}

std::vector<Vec3> retract_from_origin(const std::vector<Vec3>& pts, double ptol, bool front) {
    std::vector<Vec3> out = pts;
    if (front) {
        std::size_t i = 0;
        while (i + 2 < out.size() && norm(out[i]) < ptol) ++i;
        out.erase(out.begin(), out.begin() + i);
    } else {
        std::size_t i = out.size();
        while (i > 2 && norm(out[i - 1]) < ptol) --i;
        out.erase(out.begin() + i, out.end());
    }
    return out;
}

// Best perfect matching of loose ends by recursive enumeration (few ends).
void best_matching(const std::vector<std::vector<double>>& cost, std::vector<int>& partner) {
    std::size_t n = cost.size();
    std::vector<int> cur(n, -1), best(n, -1);
    double best_total = 1e300;
    std::vector<char> used(n, 0);
    auto rec = [&](auto&& self, double acc) -> void {
        std::size_t i = 0;
        while (i < n && used[i]) ++i;
        if (i == n) {
            if (acc < best_total) {
                best_total = acc;
                best = cur;
            }
            return;
        }
        used[i] = 1;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (used[j]) continue;
            used[j] = 1;
            cur[i] = int(j);
            cur[j] = int(i);
            self(self, acc + cost[i][j]);
            used[j] = 0;
        }
        cur[i] = -1;
        used[i] = 0;
    };
    rec(rec, 0);
    partner = best;
}

}  // namespace

PolyLink pinch_split(const PolyLink& link, double ptol) {
    PolyLink out;
    out.t = link.t;
    std::vector<LooseEnd> pending;

    auto emit_arc = [&](std::vector<Vec3> pts, const std::string& tag) {
        // Arc cut out of a passage chain; ends near the origin get retracted.
        bool front_origin = !pts.empty() && norm(pts.front()) < ptol;
        bool back_origin = !pts.empty() && norm(pts.back()) < ptol;
        if (front_origin) pts = retract_from_origin(pts, ptol, true);
        if (back_origin) pts = retract_from_origin(pts, ptol, false);
        if (pts.size() < 3) return;
        if (front_origin && back_origin) {
            PolyComponent comp;
            comp.pts = std::move(pts);
            comp.tag = tag;
            comp.closed = true;
            out.comps.push_back(std::move(comp));
        } else if (front_origin || back_origin) {
            LooseEnd le;
            le.pts = std::move(pts);
            if (back_origin) std::reverse(le.pts.begin(), le.pts.end());
            le.tag = tag;
            pending.push_back(std::move(le));
        } else {
            PolyComponent comp;
            comp.pts = std::move(pts);
            comp.tag = tag;
            out.comps.push_back(std::move(comp));
        }
    };

    for (const PolyComponent& c : link.comps) {
        if (c.pts.size() < 3) {
            out.comps.push_back(c);
            continue;
        }
        std::size_t n = c.pts.size();
        // Local minima of |p| below ptol, cyclic for closed components.
        std::vector<std::size_t> passages;
        for (std::size_t i = 0; i < n; ++i) {
            if (!c.closed && (i == 0 || i + 1 == n)) continue;
            double r = norm(c.pts[i]);
            if (r >= ptol) continue;
            double rprev = norm(c.pts[(i + n - 1) % n]);
            double rnext = norm(c.pts[(i + 1) % n]);
            if (r <= rprev && r < rnext) passages.push_back(i);
        }
        // Collapse runs of adjacent minima (flat near-origin stretches).
        std::vector<std::size_t> cuts;
        for (std::size_t idx : passages) {
            if (!cuts.empty()) {
                std::size_t gap = c.closed ? (idx + n - cuts.back()) % n : idx - cuts.back();
                double run = 0;
                for (std::size_t k = 0; k < gap; ++k) {
                    std::size_t a = (cuts.back() + k) % n;
                    run += dist(c.pts[a], c.pts[(a + 1) % n]);
                }
                if (run < 2 * ptol) continue;
            }
            cuts.push_back(idx);
        }
        if (cuts.empty()) {
            out.comps.push_back(c);
            continue;
        }
        if (c.closed) {
            for (std::size_t k = 0; k < cuts.size(); ++k) {
                std::size_t a = cuts[k], b = cuts[(k + 1) % cuts.size()];
                std::vector<Vec3> arc;
                for (std::size_t i = a;; i = (i + 1) % n) {
                    arc.push_back(c.pts[i]);
                    if (i == b) break;
                }
                emit_arc(std::move(arc), c.tag);
            }
        } else {
            std::vector<Vec3> arc;
            std::size_t next_cut = 0;
            for (std::size_t i = 0; i < n; ++i) {
                arc.push_back(c.pts[i]);
                if (next_cut < cuts.size() && i == cuts[next_cut]) {
                    emit_arc(std::move(arc), c.tag);
                    arc = {c.pts[i]};
                    ++next_cut;
                }
            }
            emit_arc(std::move(arc), c.tag);
        }
    }

    if (!pending.empty()) {
        if (pending.size() % 2 != 0)
            throw ComputationError("pinch split: odd number of origin-ended arcs");
        if (pending.size() > 8)
            throw ComputationError("pinch split: too many origin-ended arcs to pair");
        std::vector<std::vector<double>> cost(pending.size(),
                                              std::vector<double>(pending.size(), 0));
        for (std::size_t i = 0; i < pending.size(); ++i)
            for (std::size_t j = i + 1; j < pending.size(); ++j)
                cost[i][j] = cost[j][i] = pair_cost(pending[i], pending[j], ptol);
        std::vector<int> partner;
        best_matching(cost, partner);
        std::vector<char> done(pending.size(), 0);
        for (std::size_t i = 0; i < pending.size(); ++i) {
            if (done[i]) continue;
            std::size_t j = partner[i];
            done[i] = done[j] = 1;
            PolyComponent comp;
            comp.tag = pending[i].tag == pending[j].tag
                           ? pending[i].tag
                           : pending[i].tag + "+" + pending[j].tag;
            comp.pts.assign(pending[i].pts.rbegin(), pending[i].pts.rend());
            comp.pts.push_back({0, 0, 0});
            comp.pts.insert(comp.pts.end(), pending[j].pts.begin(), pending[j].pts.end());
            out.comps.push_back(std::move(comp));
        }
    }
    sort_components(out.comps);
    return out;
}

}  // namespace germlab
