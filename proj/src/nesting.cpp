#include "germlab/nesting.hpp"

#include <algorithm>
#include <cmath>

namespace germlab {

namespace {

// Winding number of the closed (x, y) projection of comp around point p.
int winding_number(const PolyComponent& comp, double px, double py) {
    double total = 0;
    std::size_t n = comp.pts.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec3& a = comp.pts[i];
        const Vec3& b = comp.pts[(i + 1) % n];
        double ax = a.x - px, ay = a.y - py;
        double bx = b.x - px, by = b.y - py;
        total += std::atan2(ax * by - ay * bx, ax * bx + ay * by);
    }
    return int(std::lround(total / (2 * M_PI)));
}

// Representative interior-ish probe: a vertex of the curve nudged inward is
// unreliable, so use the vertex itself of the candidate inner curve.
bool contains(const PolyComponent& outer, const PolyComponent& inner) {
    // Majority vote over a few vertices guards against probes that land near
    // the outer curve.
    int hits = 0, votes = 0;
    std::size_t step = std::max<std::size_t>(1, inner.pts.size() / 5);
    for (std::size_t i = 0; i < inner.pts.size(); i += step) {
        ++votes;
        if (winding_number(outer, inner.pts[i].x, inner.pts[i].y) != 0) ++hits;
    }
    return 2 * hits > votes;
}

std::string canonical_subtree(const NestingTree& t, int node) {
    std::vector<std::string> parts;
    for (int ch : t.children[node]) parts.push_back(canonical_subtree(t, ch));
    std::sort(parts.begin(), parts.end());
    std::string s = "(";
    for (const std::string& p : parts) s += p;
    s += ")";
    return s;
}

}  // namespace

std::string NestingTree::canonical() const {
    std::vector<std::string> parts;
    for (int r : roots) parts.push_back(canonical_subtree(*this, r));
    std::sort(parts.begin(), parts.end());
    std::string s;
    for (const std::string& p : parts) s += p;
    return s;
}

NestingTree nesting_tree(const PolyLink& link) {
    NestingTree t;
    for (std::size_t i = 0; i < link.comps.size(); ++i)
        if (link.comps[i].closed) t.node_comp.push_back(int(i));
    std::size_t n = t.node_comp.size();
    t.parent.assign(n, -1);
    t.children.assign(n, {});

    // ancestors[i] = set of nodes containing node i; parent = the ancestor
    // that is itself contained in every other ancestor.
    std::vector<std::vector<int>> anc(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (contains(link.comps[t.node_comp[j]], link.comps[t.node_comp[i]]))
                anc[i].push_back(int(j));
        }
    for (std::size_t i = 0; i < n; ++i) {
        int best = -1;
        for (int cand : anc[i]) {
            bool innermost = true;
            for (int other : anc[i]) {
                if (other == cand) continue;
                if (std::find(anc[cand].begin(), anc[cand].end(), other) == anc[cand].end())
                    innermost = false;
            }
            if (innermost && anc[cand].size() + 1 == anc[i].size()) {
                best = cand;
                break;
            }
        }
        t.parent[i] = best;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (t.parent[i] >= 0)
            t.children[t.parent[i]].push_back(int(i));
        else
            t.roots.push_back(int(i));
    }
    return t;
}

bool compare_nesting(const NestingTree& a, const NestingTree& b) {
    return a.canonical() == b.canonical();
}

}  // namespace germlab
