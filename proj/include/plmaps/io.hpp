#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "plmaps/commute.hpp"
#include "plmaps/conjugacy.hpp"
#include "plmaps/plmap.hpp"
#include "plmaps/unimodal.hpp"

namespace plm {

// {"breakpoints": [["0","0"],["1/2","1"],["1","0"]]}; unimodal files may add
// "v": "p/q". Readers throw ParseError naming the offending line or field.
nlohmann::json to_json(const PLMap& m);
nlohmann::json to_json(const UnimodalMap& g);
PLMap plmap_from_json(const nlohmann::json& doc);
UnimodalMap unimodal_from_json(const nlohmann::json& doc);

PLMap parse_plmap(std::string_view text);
UnimodalMap parse_unimodal(std::string_view text);

PLMap read_plmap_file(const std::string& path);
UnimodalMap read_unimodal_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

nlohmann::json to_json(const BoundaryReport& r);
nlohmann::json to_json(const LapDecomposition& d);
// Interpolant in map format plus "metadata": {depth, stabilized, alpha,
// omega, max_omega_spread}.
nlohmann::json to_json(const ConjugacyFit& fit, std::optional<double> max_omega_spread);
nlohmann::json to_json(const PowerLawReport& r);

enum class PointFormat { Csv, SvgPoints };

// Breakpoints of m merged with the samples j / (samples - 1). CSV has
// columns x,y as rationals (plus x_float,y_float when with_floats); SVG is one
// polyline in a [0,1]^2 viewBox. Throws PreconditionError for samples < 2.
std::string emit_points(const PLMap& m, unsigned samples, PointFormat format, bool with_floats = false);

}  // namespace plm
