#pragma once

#include <string>

#include <json.hpp>

#include "germlab/diagram.hpp"
#include "germlab/knots.hpp"
#include "germlab/model.hpp"
#include "germlab/polyline.hpp"

namespace germlab {

// Model serialization.  Rationals are "num/den" strings; a polynomial is a
// map from "ex,ey,et" exponent keys to coefficient strings.
nlohmann::ordered_json model_to_json(const GermModel& model);
GermModel model_from_json(const nlohmann::ordered_json& j);
void save_model(const GermModel& model, const std::string& path);
GermModel load_model(const std::string& path);

// Link serialization: JSON with per-component point lists, flat OBJ
// (v/l records), and point-per-row CSV.
nlohmann::ordered_json link_to_json(const PolyLink& link);
PolyLink link_from_json(const nlohmann::ordered_json& j);
std::string link_to_obj(const PolyLink& link);
std::string link_to_csv(const PolyLink& link);

nlohmann::ordered_json diagram_to_json(const Diagram& dia);

// Knot-shape table: {"knots": [{name, alexander: [c0, c1, ...], points}]}.
// Shapes are validated (>= 3 vertices, nonempty integer coefficient list,
// unique names); a malformed file raises InvalidInput.
std::vector<KnotShape> load_knot_table(const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace germlab
