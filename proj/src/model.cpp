#include "germlab/model.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "germlab/errors.hpp"

namespace germlab {

GermModel sheet_model(int dimension, Sheet sheet) {
    if (dimension != 3 && dimension != 4)
        throw InvalidInput("ambient dimension must be 3 or 4");
    GermModel m;
    m.dimension = dimension;
    m.sheets.push_back(std::move(sheet));
    return m;
}

GermModel union_models(const std::vector<GermModel>& parts) {
    if (parts.empty()) throw InvalidInput("union of zero models");
    GermModel out;
    out.dimension = parts[0].dimension;
    std::set<std::string> used;
    for (const GermModel& part : parts) {
        if (part.dimension != out.dimension)
            throw InvalidInput("union: ambient dimension mismatch");
        for (const Sheet& s : part.sheets) {
            Sheet copy = s;
            std::string base = copy.name;
            int suffix = 2;
            while (used.count(copy.name)) copy.name = base + "_" + std::to_string(suffix++);
            used.insert(copy.name);
            out.sheets.push_back(std::move(copy));
        }
        for (const auto& [name, arc] : part.arcs) {
            std::string key = name;
            int suffix = 2;
            while (out.arcs.count(key)) key = name + "_" + std::to_string(suffix++);
            out.arcs.emplace(key, arc);
        }
        for (const BridgeSpec& b : part.bridges) out.bridges.push_back(b);
        if (part.metadata.is_object())
            for (auto it = part.metadata.begin(); it != part.metadata.end(); ++it)
                if (!out.metadata.contains(it.key())) out.metadata[it.key()] = it.value();
    }
    return out;
}

namespace {

bool poly_equals_t(const Poly& g) {
    return g.terms.size() == 1 && g.terms[0].coeff == Rational(1) && g.terms[0].ex == 0 &&
           g.terms[0].ey == 0 && g.terms[0].et == Rational(1);
}

bool poly_equals_one_minus_t(const Poly& g) {
    if (g.terms.size() != 2) return false;
    bool has_one = false, has_neg_t = false;
    for (const PolyTerm& m : g.terms) {
        if (m.coeff == Rational(1) && m.ex == 0 && m.ey == 0 && m.et == Rational(0))
            has_one = true;
        if (m.coeff == Rational(-1) && m.ex == 0 && m.ey == 0 && m.et == Rational(1))
            has_neg_t = true;
    }
    return has_one && has_neg_t;
}

}  // namespace

Diagnostics validate(const GermModel& model) {
    Diagnostics d;
    if (model.dimension != 3 && model.dimension != 4)
        d.violations.push_back("ambient dimension must be 3 or 4");
    std::set<std::string> names;
    for (const Sheet& s : model.sheets) {
        if (!names.insert(s.name).second)
            d.violations.push_back("duplicate sheet name '" + s.name + "'");
        if (const auto* imp = std::get_if<ImplicitSheet>(&s.data)) {
            bool nonzero = false;
            for (const PolyTerm& m : imp->surface.terms)
                if (m.coeff.num != 0) nonzero = true;
            if (!nonzero) d.violations.push_back(s.name + ": zero surface polynomial");
            bool has_tlo = false, has_thi = false;
            for (const Poly& g : imp->constraints) {
                if (poly_equals_t(g)) has_tlo = true;
                if (poly_equals_one_minus_t(g)) has_thi = true;
            }
            if (!has_tlo || !has_thi)
                d.warnings.push_back(s.name + ": constraints do not pin 0 <= t <= 1");
        } else if (const auto* cone = std::get_if<ConeSheet>(&s.data)) {
            if (cone->curve.size() < 2) d.violations.push_back(s.name + ": cone needs >= 2 vertices");
            if (!cone->pinched)
                for (const Vec3& v : cone->curve)
                    if (norm(v) == 0)
                        d.violations.push_back(s.name + ": origin vertex without pinched flag");
            if (cone->notch) {
                double total = polyline_length(cone->curve, cone->closed);
                double removed = 2 * cone->notch->halfwidth;  // widest at t = 1
                if (!(Rational(1) < cone->notch->width_exp))
                    d.violations.push_back(s.name + ": notch width exponent must exceed 1");
                if (removed >= total)
                    d.warnings.push_back(s.name +
                                         ": notch consumes the whole curve; the sheet does not "
                                         "reach the model's t-range");
            }
            if (model.dimension == 3)
                for (const Vec3& v : cone->curve)
                    if (v.z != 0) d.violations.push_back(s.name + ": z != 0 in a 3d model");
        } else if (const auto* h = std::get_if<HolderSheet>(&s.data)) {
            if (!(Rational(1) <= h->beta)) d.violations.push_back(s.name + ": beta >= 1 required");
            if (!(h->beta < h->q)) d.violations.push_back(s.name + ": beta < q required");
            if (h->gap_exp && !(h->beta < *h->gap_exp && *h->gap_exp < h->q))
                d.violations.push_back(s.name + ": gap exponent outside (beta, q)");
            for (const HolderTerm& m : h->x.terms)
                if (!(Rational(0) < m.texp) && !(m.coeff == Rational(0)))
                    d.violations.push_back(s.name + ": non-positive t-exponent in x template");
        }
    }
    for (const auto& [name, arc] : model.arcs)
        if (!arc.exponents_positive())
            d.violations.push_back("arc '" + name + "': all exponents must be positive");
    for (const BridgeSpec& b : model.bridges) {
        if (!(b.beta < b.p && b.p < b.q))
            d.violations.push_back("bridge: beta < p < q violated");
        for (const std::string& t : b.triangles)
            if (!model.has_sheet(t))
                d.violations.push_back("bridge: unknown triangle sheet '" + t + "'");
        for (const std::string& a : b.boundary_arcs)
            if (!model.arcs.count(a))
                d.violations.push_back("bridge: unknown boundary arc '" + a + "'");
    }
    return d;
}

const std::string& PLMap::source_of(std::size_t i) const {
    if (const auto* a = std::get_if<AffinePiece>(&pieces[i])) return a->source;
    return std::get<ConeReparamPiece>(pieces[i]).source;
}

bool PLMap::covers(const GermModel& source) const {
    for (const Sheet& s : source.sheets) {
        int hits = 0;
        for (std::size_t i = 0; i < pieces.size(); ++i)
            if (source_of(i) == s.name) ++hits;
        if (hits != 1) return false;
    }
    return true;
}

namespace {

// Arclength-proportional image of point p (expected near t*src) on t*dst.
Vec3 reparam_image(const ConeReparamPiece& c, Vec3 p, double t) {
    const std::vector<Vec3>& src = c.src_curve;
    const std::vector<Vec3>& dst = c.dst_curve;
    std::size_t nseg = c.closed ? src.size() : src.size() - 1;
    // Locate p on the scaled source curve: nearest segment projection.
    double best = 1e300, s_at = 0, acc = 0, total = 0;
    for (std::size_t i = 0; i < nseg; ++i) {
        Vec3 a = t * src[i], b = t * src[(i + 1) % src.size()];
        Vec3 ab = b - a;
        double L2 = dot(ab, ab);
        double u = L2 > 0 ? std::clamp(dot(p - a, ab) / L2, 0.0, 1.0) : 0.0;
        double d = dist(p, a + u * ab);
        double seg = std::sqrt(L2);
        if (d < best) {
            best = d;
            s_at = acc + u * seg;
        }
        acc += seg;
    }
    total = acc;
    double dst_total = 0;
    std::size_t mseg = c.closed ? dst.size() : dst.size() - 1;
    for (std::size_t i = 0; i < mseg; ++i)
        dst_total += dist(dst[i], dst[(i + 1) % dst.size()]);
    double target = total > 0 ? s_at / total * dst_total : 0;
    acc = 0;
    for (std::size_t i = 0; i < mseg; ++i) {
        Vec3 a = dst[i], b = dst[(i + 1) % dst.size()];
        double seg = dist(a, b);
        if (acc + seg >= target || i + 1 == mseg) {
            double u = seg > 0 ? std::clamp((target - acc) / seg, 0.0, 1.0) : 0.0;
            return t * (a + u * (b - a));
        }
        acc += seg;
    }
    return t * dst.back();
}

}  // namespace

Vec4 PLMap::apply(const std::string& source_sheet, const Vec4& p) const {
    for (const auto& piece : pieces) {
        if (const auto* a = std::get_if<AffinePiece>(&piece)) {
            if (a->source != source_sheet) continue;
            Vec3 v{p.x, p.y, p.z};
            Vec3 w{a->A[0][0] * v.x + a->A[0][1] * v.y + a->A[0][2] * v.z,
                   a->A[1][0] * v.x + a->A[1][1] * v.y + a->A[1][2] * v.z,
                   a->A[2][0] * v.x + a->A[2][1] * v.y + a->A[2][2] * v.z};
            w += p.t * a->b;
            return {w.x, w.y, w.z, p.t};
        }
        const auto& c = std::get<ConeReparamPiece>(piece);
        if (c.source != source_sheet) continue;
        Vec3 w = reparam_image(c, Vec3{p.x, p.y, p.z}, p.t);
        return {w.x, w.y, w.z, p.t};
    }
    throw InvalidInput("map has no piece for sheet '" + source_sheet + "'");
}

AffinePiece identity_piece(const std::string& sheet) {
    AffinePiece a;
    a.source = a.target = sheet;
    return a;
}

AffinePiece translation_piece(const std::string& source, const std::string& target, Vec3 b) {
    AffinePiece a;
    a.source = source;
    a.target = target;
    a.b = b;
    return a;
}

}  // namespace germlab
