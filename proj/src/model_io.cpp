#include "germlab/model_io.hpp"

#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include "germlab/errors.hpp"

namespace germlab {

namespace {

using json = nlohmann::ordered_json;

json poly_to_json(const Poly& p) {
    json out = json::object();
    for (const PolyTerm& m : p.terms) {
        std::string key = std::to_string(m.ex) + "," + std::to_string(m.ey) + "," + m.et.str();
        out[key] = m.coeff.str();
    }
    return out;
}

Poly poly_from_json(const json& j) {
    Poly p;
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& key = it.key();
        auto c1 = key.find(',');
        auto c2 = c1 == std::string::npos ? c1 : key.find(',', c1 + 1);
        if (c2 == std::string::npos) throw InvalidInput("bad polynomial key '" + key + "'");
        PolyTerm m;
        m.ex = std::stoi(key.substr(0, c1));
        m.ey = std::stoi(key.substr(c1 + 1, c2 - c1 - 1));
        m.et = parse_rational(key.substr(c2 + 1));
        m.coeff = parse_rational(it.value().get<std::string>());
        p.terms.push_back(m);
    }
    return p;
}

json vec_to_json(const Vec3& v) { return json::array({v.x, v.y, v.z}); }

Vec3 vec_from_json(const json& j) {
    if (!j.is_array() || j.size() != 3) throw InvalidInput("point must be a 3-element array");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

json curve_to_json(const std::vector<Vec3>& pts) {
    json out = json::array();
    for (const Vec3& p : pts) out.push_back(vec_to_json(p));
    return out;
}

std::vector<Vec3> curve_from_json(const json& j) {
    std::vector<Vec3> pts;
    for (const json& e : j) pts.push_back(vec_from_json(e));
    return pts;
}

json holder_coord_to_json(const HolderCoord& c) {
    json out = json::array();
    for (const HolderTerm& m : c.terms)
        out.push_back({{"c", m.coeff.str()}, {"u", m.uexp}, {"t", m.texp.str()}});
    return out;
}

HolderCoord holder_coord_from_json(const json& j) {
    HolderCoord c;
    for (const json& e : j)
        c.terms.push_back({parse_rational(e.at("c").get<std::string>()), e.at("u").get<int>(),
                           parse_rational(e.at("t").get<std::string>())});
    return c;
}

json series_to_json(const PowerSeries1& s) {
    json out = json::array();
    for (const PowerTerm& m : s.terms) out.push_back({{"c", m.coeff}, {"e", m.exp.str()}});
    return out;
}

PowerSeries1 series_from_json(const json& j) {
    PowerSeries1 s;
    for (const json& e : j)
        s.terms.push_back({e.at("c").get<double>(), parse_rational(e.at("e").get<std::string>())});
    return s;
}

json sheet_to_json(const Sheet& s) {
    json out;
    out["name"] = s.name;
    if (const auto* imp = std::get_if<ImplicitSheet>(&s.data)) {
        out["kind"] = "implicit";
        out["surface"] = poly_to_json(imp->surface);
        json cs = json::array();
        for (const Poly& g : imp->constraints) cs.push_back(poly_to_json(g));
        out["constraints"] = cs;
    } else if (const auto* cone = std::get_if<ConeSheet>(&s.data)) {
        out["kind"] = "cone";
        out["curve"] = curve_to_json(cone->curve);
        out["closed"] = cone->closed;
        out["pinched"] = cone->pinched;
        if (cone->notch)
            out["notch"] = {{"center", cone->notch->center},
                            {"halfwidth", cone->notch->halfwidth},
                            {"width_exp", cone->notch->width_exp.str()}};
    } else {
        const auto& h = std::get<HolderSheet>(s.data);
        out["kind"] = "holder";
        out["beta"] = h.beta.str();
        out["q"] = h.q.str();
        out["sign"] = h.sign;
        out["x"] = holder_coord_to_json(h.x);
        out["y"] = holder_coord_to_json(h.y);
        out["z"] = holder_coord_to_json(h.z);
        if (h.gap_exp) out["gap"] = h.gap_exp->str();
    }
    return out;
}

Sheet sheet_from_json(const json& j) {
    std::string name = j.at("name").get<std::string>();
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "implicit") {
        ImplicitSheet s;
        s.surface = poly_from_json(j.at("surface"));
        for (const json& g : j.at("constraints")) s.constraints.push_back(poly_from_json(g));
        return Sheet{std::move(name), std::move(s)};
    }
    if (kind == "cone") {
        ConeSheet c;
        c.curve = curve_from_json(j.at("curve"));
        c.closed = j.at("closed").get<bool>();
        c.pinched = j.at("pinched").get<bool>();
        if (j.contains("notch")) {
            const json& n = j["notch"];
            c.notch = Notch{n.at("center").get<double>(), n.at("halfwidth").get<double>(),
                            parse_rational(n.at("width_exp").get<std::string>())};
        }
        return Sheet{std::move(name), std::move(c)};
    }
    if (kind == "holder") {
        HolderSheet h;
        h.beta = parse_rational(j.at("beta").get<std::string>());
        h.q = parse_rational(j.at("q").get<std::string>());
        h.sign = j.at("sign").get<int>();
        h.x = holder_coord_from_json(j.at("x"));
        h.y = holder_coord_from_json(j.at("y"));
        h.z = holder_coord_from_json(j.at("z"));
        if (j.contains("gap")) h.gap_exp = parse_rational(j["gap"].get<std::string>());
        return Sheet{std::move(name), std::move(h)};
    }
    throw InvalidInput("unknown sheet kind '" + kind + "'");
}

}  // namespace

nlohmann::ordered_json model_to_json(const GermModel& model) {
    json out;
    out["schema"] = "germ-model/1";
    out["dimension"] = model.dimension;
    json sheets = json::array();
    for (const Sheet& s : model.sheets) sheets.push_back(sheet_to_json(s));
    out["sheets"] = sheets;
    json arcs = json::object();
    for (const auto& [name, arc] : model.arcs)
        arcs[name] = {{"x", series_to_json(arc.x)},
                      {"y", series_to_json(arc.y)},
                      {"z", series_to_json(arc.z)}};
    out["arcs"] = arcs;
    json bridges = json::array();
    for (const BridgeSpec& b : model.bridges)
        bridges.push_back({{"q", b.q.str()},
                           {"beta", b.beta.str()},
                           {"p", b.p.str()},
                           {"triangles", {b.triangles[0], b.triangles[1]}},
                           {"boundary_arcs",
                            {b.boundary_arcs[0], b.boundary_arcs[1], b.boundary_arcs[2],
                             b.boundary_arcs[3]}},
                           {"wall_scale", b.wall_scale.str()}});
    out["bridges"] = bridges;
    out["metadata"] = model.metadata;
    return out;
}

GermModel model_from_json(const nlohmann::ordered_json& j) {
    try {
        if (!j.is_object() || j.value("schema", "") != std::string("germ-model/1"))
            throw InvalidInput("not a germ-model/1 document");
        GermModel m;
        m.dimension = j.at("dimension").get<int>();
        if (m.dimension != 3 && m.dimension != 4)
            throw InvalidInput("ambient dimension must be 3 or 4");
        for (const json& s : j.at("sheets")) m.sheets.push_back(sheet_from_json(s));
        if (j.contains("arcs"))
            for (auto it = j["arcs"].begin(); it != j["arcs"].end(); ++it) {
                PowerArc a;
                a.x = series_from_json(it.value().at("x"));
                a.y = series_from_json(it.value().at("y"));
                a.z = series_from_json(it.value().at("z"));
                m.arcs.emplace(it.key(), std::move(a));
            }
        if (j.contains("bridges"))
            for (const json& b : j["bridges"]) {
                BridgeSpec spec;
                spec.q = parse_rational(b.at("q").get<std::string>());
                spec.beta = parse_rational(b.at("beta").get<std::string>());
                spec.p = parse_rational(b.at("p").get<std::string>());
                spec.triangles = {b.at("triangles").at(0).get<std::string>(),
                                  b.at("triangles").at(1).get<std::string>()};
                for (int i = 0; i < 4; ++i)
                    spec.boundary_arcs[i] = b.at("boundary_arcs").at(i).get<std::string>();
                if (b.contains("wall_scale"))
                    spec.wall_scale = parse_rational(b["wall_scale"].get<std::string>());
                m.bridges.push_back(std::move(spec));
            }
        if (j.contains("metadata")) m.metadata = j["metadata"];
        return m;
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("malformed model document: ") + e.what());
    }
}

void save_model(const GermModel& model, const std::string& path) {
    write_text_file(path, model_to_json(model).dump(2) + "\n");
}

GermModel load_model(const std::string& path) {
    json j;
    try {
        j = json::parse(read_text_file(path));
    } catch (const json::exception& e) {
        throw InvalidInput("cannot parse '" + path + "': " + e.what());
    }
    return model_from_json(j);
}

nlohmann::ordered_json link_to_json(const PolyLink& link) {
    json out;
    out["t"] = link.t;
    json comps = json::array();
    for (const PolyComponent& c : link.comps)
        comps.push_back(
            {{"closed", c.closed}, {"tag", c.tag}, {"points", curve_to_json(c.pts)}});
    out["components"] = comps;
    return out;
}

PolyLink link_from_json(const nlohmann::ordered_json& j) {
    try {
        PolyLink link;
        link.t = j.at("t").get<double>();
        for (const json& e : j.at("components")) {
            PolyComponent c;
            c.closed = e.at("closed").get<bool>();
            c.tag = e.value("tag", "");
            c.pts = curve_from_json(e.at("points"));
            link.comps.push_back(std::move(c));
        }
        return link;
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("malformed link document: ") + e.what());
    }
}

std::string link_to_obj(const PolyLink& link) {
    std::ostringstream os;
    os << std::setprecision(17);
    int base = 1;
    for (const PolyComponent& c : link.comps) {
        for (const Vec3& p : c.pts) os << "v " << p.x << " " << p.y << " " << p.z << "\n";
        int n = int(c.pts.size());
        for (int i = 0; i + 1 < n; ++i) os << "l " << base + i << " " << base + i + 1 << "\n";
        if (c.closed && n > 2) os << "l " << base + n - 1 << " " << base << "\n";
        base += n;
    }
    return os.str();
}

std::string link_to_csv(const PolyLink& link) {
    std::ostringstream os;
    os << std::setprecision(17);
    os << "component,closed,x,y,z\n";
    for (std::size_t ci = 0; ci < link.comps.size(); ++ci)
        for (const Vec3& p : link.comps[ci].pts)
            os << ci << "," << (link.comps[ci].closed ? 1 : 0) << "," << p.x << "," << p.y << ","
               << p.z << "\n";
    return os.str();
}

nlohmann::ordered_json diagram_to_json(const Diagram& dia) {
    json out;
    out["direction"] = vec_to_json(dia.direction);
    out["arc_count"] = dia.arc_count;
    out["arc_comp"] = dia.arc_comp;
    json crossings = json::array();
    for (const Crossing& c : dia.crossings)
        crossings.push_back({{"over_comp", c.over_comp},
                             {"under_comp", c.under_comp},
                             {"over_arc", c.over_arc},
                             {"in_arc", c.in_arc},
                             {"out_arc", c.out_arc},
                             {"sign", c.sign},
                             {"where", {c.where.x, c.where.y}}});
    out["crossings"] = crossings;
    out["gauss_code"] = dia.gauss_code();
    return out;
}

std::vector<KnotShape> load_knot_table(const std::string& path) {
    json j;
    try {
        j = json::parse(read_text_file(path));
    } catch (const json::exception& e) {
        throw InvalidInput("cannot parse '" + path + "': " + e.what());
    }
    try {
        std::vector<KnotShape> table;
        std::set<std::string> seen;
        for (const json& e : j.at("knots")) {
            KnotShape shape;
            shape.name = e.at("name").get<std::string>();
            if (shape.name.empty()) throw InvalidInput("knot table: empty name");
            if (!seen.insert(shape.name).second)
                throw InvalidInput("knot table: duplicate name '" + shape.name + "'");
            shape.points = curve_from_json(e.at("points"));
            if (shape.points.size() < 3)
                throw InvalidInput("knot table: shape '" + shape.name + "' needs >= 3 points");
            std::vector<BigInt> coeffs;
            for (const json& c : e.at("alexander")) coeffs.push_back(BigInt(c.get<long long>()));
            if (coeffs.empty())
                throw InvalidInput("knot table: shape '" + shape.name +
                                   "' has an empty polynomial");
            shape.alexander = IntPoly(std::move(coeffs));
            table.push_back(std::move(shape));
        }
        if (table.empty()) throw InvalidInput("knot table lists no shapes");
        return table;
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("malformed knot table: ") + e.what());
    }
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot open '" + path + "' for reading");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidInput("cannot open '" + path + "' for writing");
    out << text;
    if (!out) throw InvalidInput("failed writing '" + path + "'");
}

}  // namespace germlab
