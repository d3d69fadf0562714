#include "germlab/polyline.hpp"

#include <algorithm>
#include <cmath>

#include "germlab/errors.hpp"

namespace germlab {

double PolyComponent::length() const {
    double L = 0;
    for (std::size_t i = 1; i < pts.size(); ++i) L += dist(pts[i - 1], pts[i]);
    if (closed && pts.size() > 2) L += dist(pts.back(), pts.front());
    return L;
}

LinkSummary component_analysis(const PolyLink& link) {
    LinkSummary s;
    for (const PolyComponent& c : link.comps) {
        if (c.closed) {
            ++s.closed_count;
        } else {
            ++s.open_count;
            if (!c.pts.empty()) {
                s.endpoints.push_back(c.pts.front());
                s.endpoints.push_back(c.pts.back());
            }
        }
        s.lengths.push_back(c.length());
        s.total_length += s.lengths.back();
    }
    return s;
}

void PolylineIndex::add(const PolyComponent& comp) {
    for (std::size_t i = 1; i < comp.pts.size(); ++i) segs_.push_back({comp.pts[i - 1], comp.pts[i]});
    if (comp.closed && comp.pts.size() > 2) segs_.push_back({comp.pts.back(), comp.pts.front()});
}

PolylineIndex::PolylineIndex(const PolyLink& link) {
    for (const PolyComponent& c : link.comps) add(c);
}

PolylineIndex::PolylineIndex(const PolyComponent& comp) { add(comp); }

double PolylineIndex::distance(const Vec3& p) const {
    double best = 1e300;
    for (const Seg& s : segs_) {
        Vec3 ab = s.b - s.a;
        double L2 = dot(ab, ab);
        double u = L2 > 0 ? std::clamp(dot(p - s.a, ab) / L2, 0.0, 1.0) : 0.0;
        best = std::min(best, dist(p, s.a + u * ab));
    }
    return best;
}

namespace {

double directed_hausdorff(const PolyLink& a, const PolylineIndex& idx_b) {
    double worst = 0;
    for (const PolyComponent& c : a.comps)
        for (const Vec3& p : c.pts) worst = std::max(worst, idx_b.distance(p));
    return worst;
}

}  // namespace

double hausdorff_distance(const PolyLink& a, const PolyLink& b) {
    bool a_empty = true, b_empty = true;
    for (const auto& c : a.comps) a_empty = a_empty && c.pts.empty();
    for (const auto& c : b.comps) b_empty = b_empty && c.pts.empty();
    if (a_empty && b_empty) return 0;
    if (a_empty || b_empty) return 1e300;
    PolylineIndex ia(a), ib(b);
    return std::max(directed_hausdorff(a, ib), directed_hausdorff(b, ia));
}

PolyComponent resample(const PolyComponent& comp, int n) {
    if (n < 2) throw InvalidInput("resample needs n >= 2");
    if (comp.pts.size() < 2) return comp;
    std::vector<Vec3> pts = comp.pts;
    if (comp.closed) pts.push_back(comp.pts.front());
    std::vector<double> cum(pts.size(), 0);
    for (std::size_t i = 1; i < pts.size(); ++i) cum[i] = cum[i - 1] + dist(pts[i - 1], pts[i]);
    double total = cum.back();
    PolyComponent out;
    out.closed = comp.closed;
    out.tag = comp.tag;
    int samples = comp.closed ? n : n;  // closed: n distinct; open: n including both ends
    for (int k = 0; k < samples; ++k) {
        double target;
        if (comp.closed)
            target = total * k / samples;
        else
            target = total * k / (samples - 1);
        std::size_t i = std::upper_bound(cum.begin(), cum.end(), target) - cum.begin();
        if (i == 0) i = 1;
        if (i >= pts.size()) i = pts.size() - 1;
        double seg = cum[i] - cum[i - 1];
        double u = seg > 0 ? (target - cum[i - 1]) / seg : 0;
        out.pts.push_back(pts[i - 1] + u * (pts[i] - pts[i - 1]));
    }
    return out;
}

PolyComponent subdivide(const PolyComponent& comp) {
    PolyComponent out;
    out.closed = comp.closed;
    out.tag = comp.tag;
    std::size_t n = comp.pts.size();
    for (std::size_t i = 0; i < n; ++i) {
        out.pts.push_back(comp.pts[i]);
        bool has_next = i + 1 < n || comp.closed;
        if (has_next) {
            const Vec3& nxt = comp.pts[(i + 1) % n];
            out.pts.push_back(0.5 * (comp.pts[i] + nxt));
        }
    }
    return out;
}

PolyComponent close_component(const PolyComponent& comp) {
    PolyComponent out = comp;
    out.closed = true;
    return out;
}

void sort_components(std::vector<PolyComponent>& comps) {
    auto mid_of = [](const PolyComponent& c) {
        Vec3 m{0, 0, 0};
        for (const Vec3& p : c.pts) m += p;
        return c.pts.empty() ? m : m / double(c.pts.size());
    };
    std::stable_sort(comps.begin(), comps.end(),
                     [&](const PolyComponent& a, const PolyComponent& b) {
                         if (a.tag != b.tag) return a.tag < b.tag;
                         Vec3 ma = mid_of(a), mb = mid_of(b);
                         if (ma.y != mb.y) return ma.y < mb.y;
                         if (ma.x != mb.x) return ma.x < mb.x;
                         return ma.z < mb.z;
                     });
}

double component_min_origin_distance(const PolyComponent& comp) {
    double best = 1e300;
    for (const Vec3& p : comp.pts) best = std::min(best, norm(p));
    return best;
}

}  // namespace germlab
