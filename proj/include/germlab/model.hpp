#pragma once

#include <array>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "germlab/power_arc.hpp"
#include "germlab/sheet.hpp"

namespace germlab {

// Designation of a (q,beta)-bridge inside a model: the two triangle sheets,
// the four boundary arcs (names in the arc table), and the break exponent p.
struct BridgeSpec {
    Rational q = Rational(3);
    Rational beta = Rational(2);
    Rational p = Rational(5, 2);
    std::array<std::string, 2> triangles;
    std::array<std::string, 4> boundary_arcs;
    // Amplitude of y = +-wall_scale * t^q at the bridge midline; walls added
    // by break_bridge must span this range to meet the cut branch ends.
    Rational wall_scale = Rational(1);
};

struct GermModel {
    int dimension = 3;
    std::vector<Sheet> sheets;
    std::map<std::string, PowerArc> arcs;
    std::vector<BridgeSpec> bridges;
    nlohmann::ordered_json metadata;

    GermModel() : metadata(nlohmann::ordered_json::object()) {}

    const Sheet* find_sheet(const std::string& name) const {
        for (const Sheet& s : sheets)
            if (s.name == name) return &s;
        return nullptr;
    }

    bool has_sheet(const std::string& name) const { return find_sheet(name) != nullptr; }
};

GermModel union_models(const std::vector<GermModel>& parts);
GermModel sheet_model(int dimension, Sheet sheet);

// Diagnostics from structural validation; empty vectors mean a well-formed model.
struct Diagnostics {
    std::vector<std::string> violations;
    std::vector<std::string> warnings;

    bool clean() const { return violations.empty() && warnings.empty(); }
};

Diagnostics validate(const GermModel& model);

// Piecewise map between germs.  An affine piece sends (x,y,z,t) to
// A*(x,y,z) + b*t at the same t.  A cone-reparam piece maps one coned curve
// onto another by arclength-proportional correspondence of the {t=1} curves,
// scaled linearly in t (the "cone structure" maps between straight cones).
struct AffinePiece {
    std::string source, target;
    std::array<std::array<double, 3>, 3> A{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    Vec3 b;
};

struct ConeReparamPiece {
    std::string source, target;
    std::vector<Vec3> src_curve, dst_curve;
    bool closed = false;
};

struct PLMap {
    std::vector<std::variant<AffinePiece, ConeReparamPiece>> pieces;

    const std::string& source_of(std::size_t i) const;
    // Applies the piece that owns the given source sheet; t is preserved.
    Vec4 apply(const std::string& source_sheet, const Vec4& p) const;
    bool covers(const GermModel& source) const;
};

AffinePiece identity_piece(const std::string& sheet);
AffinePiece translation_piece(const std::string& source, const std::string& target, Vec3 b);

}  // namespace germlab
