#include "germlab/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <queue>

#include "germlab/errors.hpp"

namespace germlab {

namespace {

constexpr int kBandLo = -4;
constexpr int kBandHi = 4;

GermModel single_sheet_model(const GermModel& model, const std::string& name) {
    const Sheet* s = model.find_sheet(name);
    if (!s) throw InvalidInput("unknown sheet: " + name);
    return sheet_model(model.dimension, *s);
}

// Min 4D distance from a point at height t to a section taken at height s.
double band_distance(const Vec3& p, double t, const PolylineIndex& index, double s) {
    double planar = index.distance(p);
    double dt = t - s;
    return std::sqrt(planar * planar + dt * dt);
}

}  // namespace

ExponentFit tangency_order(const PowerArc& a, const PowerArc& b,
                           const std::vector<double>& ladder) {
    if (ladder.size() < 5) throw InvalidInput("tangency_order needs >= 5 ladder rungs");
    std::vector<double> vals;
    for (double t : ladder) vals.push_back(dist(a.eval(t), b.eval(t)));
    return fit_loglog(ladder, vals);
}

double distance_to_sheet(const GermModel& model, const std::string& sheet, const Vec4& point,
                         const SectionOptions& opts) {
    if (!(point.t > 0 && point.t <= 1))
        throw InvalidInput("distance_to_sheet needs a point at scale t in (0, 1]");
    GermModel sub = single_sheet_model(model, sheet);
    double best = std::numeric_limits<double>::infinity();
    for (int j = kBandLo; j <= kBandHi; ++j) {
        double s = point.t * std::exp2(j / 4.0);
        if (s > 1) continue;
        PolyLink sec = section_at(sub, s, opts);
        if (sec.comps.empty()) continue;
        PolylineIndex index(sec);
        best = std::min(best, band_distance(point.xyz(), point.t, index, s));
    }
    if (!std::isfinite(best))
        throw ComputationError("distance_to_sheet: sheet has empty sections near t");
    return best;
}

std::vector<RatioInterval> distance_ratio_intervals(const GermModel& model,
                                                    const std::vector<std::string>& sources,
                                                    const std::string& target,
                                                    const std::vector<double>& ladder,
                                                    int samples_per_component,
                                                    const SectionOptions& opts) {
    if (sources.empty()) throw InvalidInput("distance_ratio_intervals needs source sheets");
    GermModel dst = single_sheet_model(model, target);
    std::vector<RatioInterval> out;
    for (double t : ladder) {
        std::vector<PolylineIndex> band;
        std::vector<double> band_scale;
        for (int j = kBandLo; j <= kBandHi; ++j) {
            double s = t * std::exp2(j / 4.0);
            if (s > 1) continue;
            PolyLink sec = section_at(dst, s, opts);
            if (sec.comps.empty()) continue;
            band.emplace_back(sec);
            band_scale.push_back(s);
        }
        if (band.empty())
            throw ComputationError("distance_ratio_intervals: empty target sections");
        RatioInterval iv;
        iv.t = t;
        iv.lo = std::numeric_limits<double>::infinity();
        iv.hi = 0;
        for (const std::string& source : sources) {
            const Sheet* ss = model.find_sheet(source);
            if (!ss) throw InvalidInput("unknown sheet: " + source);
            PolyLink ssec = section_of_sheet(*ss, t, opts);
            if (ssec.comps.empty())
                throw ComputationError("distance_ratio_intervals: empty source section");
            for (const PolyComponent& c : ssec.comps) {
                PolyComponent rc = resample(c, samples_per_component);
                for (const Vec3& p : rc.pts) {
                    double d = std::numeric_limits<double>::infinity();
                    for (std::size_t b = 0; b < band.size(); ++b)
                        d = std::min(d, band_distance(p, t, band[b], band_scale[b]));
                    iv.lo = std::min(iv.lo, d / t);
                    iv.hi = std::max(iv.hi, d / t);
                }
            }
        }
        out.push_back(iv);
    }
    return out;
}

namespace {

struct MeshGraph {
    std::vector<Vec4> pos;
    std::vector<std::vector<std::pair<int, double>>> adj;

    int add(const Vec4& p) {
        pos.push_back(p);
        adj.emplace_back();
        return int(pos.size()) - 1;
    }
    void edge(int a, int b, double w) {
        adj[a].push_back({b, w});
        adj[b].push_back({a, w});
    }
    double dijkstra(int s, int e) const {
        std::vector<double> d(pos.size(), std::numeric_limits<double>::infinity());
        std::priority_queue<std::pair<double, int>, std::vector<std::pair<double, int>>,
                            std::greater<>>
            pq;
        d[s] = 0;
        pq.push({0, s});
        while (!pq.empty()) {
            auto [dd, u] = pq.top();
            pq.pop();
            if (dd > d[u]) continue;
            if (u == e) return dd;
            for (auto [v, w] : adj[u])
                if (dd + w < d[v]) {
                    d[v] = dd + w;
                    pq.push({d[v], v});
                }
        }
        return d[e];
    }
};

struct Ring {
    double s = 0;
    std::vector<PolyComponent> comps;   // resampled
    std::vector<std::vector<int>> ids;  // node id per vertex
};

Vec3 centroid(const PolyComponent& c) {
    Vec3 m{0, 0, 0};
    for (const Vec3& p : c.pts) m = m + p;
    return m / double(c.pts.size());
}

// Wire every vertex of comp a to its nearest vertex of comp b.
void wire_comps(MeshGraph& g, const Ring& ra, std::size_t ca, const Ring& rb, std::size_t cb) {
    double dt = ra.s - rb.s;
    const auto& pa = ra.comps[ca].pts;
    const auto& pb = rb.comps[cb].pts;
    for (std::size_t i = 0; i < pa.size(); ++i) {
        std::size_t best = 0;
        double bd = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < pb.size(); ++j) {
            double d = dist(pa[i], pb[j]);
            if (d < bd) {
                bd = d;
                best = j;
            }
        }
        g.edge(ra.ids[ca][i], rb.ids[cb][best], std::sqrt(bd * bd + dt * dt));
    }
}

int nearest_node(const MeshGraph& g, const Ring& ring, const Vec3& p) {
    int best = -1;
    double bd = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < ring.comps.size(); ++c)
        for (std::size_t i = 0; i < ring.comps[c].pts.size(); ++i) {
            double d = dist(ring.comps[c].pts[i], p);
            if (d < bd) {
                bd = d;
                best = ring.ids[c][i];
            }
        }
    (void)g;
    return best;
}

double inner_distance_at(const GermModel& model, const Vec3& pa, const Vec3& pb, double t,
                         const SectionOptions& opts) {
    constexpr int kHalfSteps = 16;  // rings down to t / 256
    constexpr int kRingSamples = 64;
    MeshGraph g;
    std::vector<Ring> rings;
    for (int j = 0; j <= kHalfSteps; ++j) {
        Ring r;
        r.s = t * std::exp2(-j / 2.0);
        PolyLink sec = section_at(model, r.s, opts);
        if (sec.comps.empty())
            throw ComputationError("inner distance: empty section in the ring ladder");
        for (const PolyComponent& c : sec.comps) r.comps.push_back(resample(c, kRingSamples));
        r.ids.resize(r.comps.size());
        for (std::size_t c = 0; c < r.comps.size(); ++c) {
            for (const Vec3& p : r.comps[c].pts) r.ids[c].push_back(g.add({p.x, p.y, p.z, r.s}));
            const auto& ids = r.ids[c];
            for (std::size_t i = 0; i + 1 < ids.size(); ++i)
                g.edge(ids[i], ids[i + 1], dist(r.comps[c].pts[i], r.comps[c].pts[i + 1]));
            if (r.comps[c].closed && ids.size() > 2)
                g.edge(ids.back(), ids.front(),
                       dist(r.comps[c].pts.back(), r.comps[c].pts.front()));
        }
        rings.push_back(std::move(r));
    }
    // Vertical wiring between consecutive rings: components matched by
    // nearest rescaled centroid, so branches stay on their own side.
    for (std::size_t j = 0; j + 1 < rings.size(); ++j) {
        const Ring& big = rings[j];
        const Ring& small = rings[j + 1];
        for (std::size_t cs = 0; cs < small.comps.size(); ++cs) {
            Vec3 m = centroid(small.comps[cs]) / small.s;
            std::size_t best = 0;
            double bd = std::numeric_limits<double>::infinity();
            for (std::size_t cb = 0; cb < big.comps.size(); ++cb) {
                double d = dist(centroid(big.comps[cb]) / big.s, m);
                if (d < bd) {
                    bd = d;
                    best = cb;
                }
            }
            wire_comps(g, small, cs, big, best);
        }
    }
    // The germ's vertex joins everything at the bottom of the ladder.
    int origin = g.add({0, 0, 0, 0});
    const Ring& last = rings.back();
    for (std::size_t c = 0; c < last.comps.size(); ++c)
        for (std::size_t i = 0; i < last.comps[c].pts.size(); ++i) {
            double r = norm(last.comps[c].pts[i]);
            g.edge(last.ids[c][i], origin, std::sqrt(r * r + last.s * last.s));
        }
    int na = nearest_node(g, rings.front(), pa);
    int nb = nearest_node(g, rings.front(), pb);
    int sa = g.add({pa.x, pa.y, pa.z, t});
    int sb = g.add({pb.x, pb.y, pb.z, t});
    g.edge(sa, na, dist(pa, g.pos[na].xyz()));
    g.edge(sb, nb, dist(pb, g.pos[nb].xyz()));
    return g.dijkstra(sa, sb);
}

}  // namespace

InnerDistanceReport inner_distance_exponent(const GermModel& model, const PowerArc& a,
                                            const PowerArc& b,
                                            const std::vector<double>& ladder,
                                            const SectionOptions& opts) {
    if (ladder.size() < 5)
        throw InvalidInput("inner_distance_exponent needs >= 5 ladder rungs");
    InnerDistanceReport rep;
    for (double t : ladder) {
        double d = inner_distance_at(model, a.eval(t), b.eval(t), t, opts);
        if (!std::isfinite(d)) throw ComputationError("inner distance: mesh is disconnected");
        rep.scales.push_back(t);
        rep.distances.push_back(d);
    }
    rep.fit = fit_loglog(rep.scales, rep.distances);
    return rep;
}

DistortionReport certify_bilipschitz(const GermModel& source, const GermModel& target,
                                     const PLMap& map, const std::vector<double>& ladder,
                                     int samples, double distortion_bound,
                                     double onto_tolerance, double stability_bound,
                                     const SectionOptions& opts) {
    DistortionReport rep;
    if (ladder.empty()) throw InvalidInput("certify: empty scale ladder");
    if (samples < 1) throw InvalidInput("certify: sample budget must be positive");
    if (!map.covers(source)) {
        rep.reason = "map does not cover every source sheet";
        return rep;
    }
    const int per_scale = std::max(36, int(samples / ladder.size()));
    double onto_err = 0;
    for (double t : ladder) {
        // Target sections indexed unglued: gluing only merges components and
        // the onto test needs the point set, not the topology.
        PolyLink target_pts;
        target_pts.t = t;
        for (const Sheet& s : target.sheets) {
            PolyLink sec = section_of_sheet(s, t, opts);
            for (PolyComponent& c : sec.comps) target_pts.comps.push_back(std::move(c));
        }
        if (target_pts.comps.empty()) throw ComputationError("certify: empty target section");
        PolylineIndex tindex(target_pts);

        struct Sample {
            Vec4 p, q;
        };
        std::vector<Sample> samples;
        std::vector<std::pair<std::string, PolyComponent>> comps;
        for (const Sheet& s : source.sheets) {
            PolyLink sec = section_of_sheet(s, t, opts);
            for (PolyComponent& c : sec.comps) comps.push_back({s.name, std::move(c)});
        }
        if (comps.empty()) throw ComputationError("certify: empty source section");
        int per = std::max(12, per_scale / int(comps.size()));
        for (auto& [name, c] : comps) {
            PolyComponent rc = resample(c, per);
            for (const Vec3& p : rc.pts) {
                Vec4 p4{p.x, p.y, p.z, t};
                Vec4 q4 = map.apply(name, p4);
                samples.push_back({p4, q4});
                double d = tindex.distance(q4.xyz());
                double off = std::hypot(d, q4.t - t);
                onto_err = std::max(onto_err, off / t);
            }
        }
        double lo = std::numeric_limits<double>::infinity(), hi = 0;
        for (std::size_t i = 0; i < samples.size(); ++i)
            for (std::size_t j = i + 1; j < samples.size(); ++j) {
                double dp = dist(samples[i].p, samples[j].p);
                if (dp < 1e-9 * t) continue;
                double r = dist(samples[i].q, samples[j].q) / dp;
                lo = std::min(lo, r);
                hi = std::max(hi, r);
            }
        rep.scales.push_back(t);
        rep.min_ratio.push_back(lo);
        rep.max_ratio.push_back(hi);
        rep.sample_count += int(samples.size());
    }
    rep.onto_error = onto_err;
    double gmin = *std::min_element(rep.min_ratio.begin(), rep.min_ratio.end());
    double gmax = *std::max_element(rep.max_ratio.begin(), rep.max_ratio.end());
    rep.global_distortion = gmax / gmin;
    double drift = 0;
    for (std::size_t i = 0; i + 1 < rep.scales.size(); ++i) {
        drift = std::max(drift,
                         std::fabs(rep.max_ratio[i + 1] - rep.max_ratio[i]) / rep.max_ratio[i]);
        drift = std::max(drift,
                         std::fabs(rep.min_ratio[i + 1] - rep.min_ratio[i]) / rep.min_ratio[i]);
    }
    rep.stability = drift;
    if (rep.global_distortion > distortion_bound)
        rep.reason = "distortion exceeds bound";
    else if (rep.onto_error > onto_tolerance)
        rep.reason = "image misses the target germ";
    else if (rep.stability >= stability_bound)
        rep.reason = "distortion ratios drift across scales";
    else
        rep.certified = true;
    return rep;
}

}  // namespace germlab
