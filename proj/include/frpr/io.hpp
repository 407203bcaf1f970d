#pragma once

#include <string>

#include <json.hpp>

#include "frpr/ambiguity.hpp"
#include "frpr/frft.hpp"
#include "frpr/models.hpp"

namespace frpr::io {

using nlohmann::json;

/// Serialises with every floating-point value printed to 17 significant digits.
std::string dump(const json& j, int indent = 1);

json to_json(const Grid& g);
json to_json(const Signal& s);
json to_json(const Model& m);
json to_json(const MagnitudeMeasurement& m);
json to_json(const AmbiguityGrid& a);

Grid grid_from_json(const json& j);
Signal signal_from_json(const json& j);
Model model_from_json(const json& j);
MagnitudeMeasurement measurement_from_json(const json& j);
AmbiguityGrid ambiguity_from_json(const json& j);

json read_file(const std::string& path);
/// temp file + rename.
void write_file_atomic(const std::string& path, const std::string& contents);

/// |A| as CSV: header of y values, then one line per x.
std::string ambiguity_magnitude_csv(const AmbiguityGrid& a);

}  // namespace frpr::io
