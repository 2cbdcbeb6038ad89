#include "plmaps/io.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "plmaps/errors.hpp"

namespace plm {

using nlohmann::json;

namespace {

Rational rational_field(const json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  throw ParseError(where + ": expected a rational string \"p/q\"");
}

json parse_document(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // nlohmann reports "line L, column C" in its message.
    throw ParseError(std::string("malformed map document: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string float_str(const Rational& r) {
  std::ostringstream os;
  os << std::setprecision(17) << r.to_double();
  return os.str();
}

}  // namespace

json to_json(const PLMap& m) {
  json bps = json::array();
  for (const Point& p : m.points()) bps.push_back({p.x.str(), p.y.str()});
  return json{{"breakpoints", bps}};
}

json to_json(const UnimodalMap& g) {
  json j = to_json(g.map());
  j["v"] = g.turning_point().str();
  return j;
}

PLMap plmap_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("breakpoints"))
    throw ParseError("map document must be an object with key \"breakpoints\"");
  const json& bps = doc.at("breakpoints");
  if (!bps.is_array()) throw ParseError("breakpoints: expected an array of [x, y] pairs");
  std::vector<Point> pts;
  for (std::size_t i = 0; i < bps.size(); ++i) {
    const std::string where = "breakpoints[" + std::to_string(i) + "]";
    if (!bps[i].is_array() || bps[i].size() != 2) throw ParseError(where + ": expected [x, y]");
    pts.push_back({rational_field(bps[i][0], where + "[0]"), rational_field(bps[i][1], where + "[1]")});
  }
  try {
    return PLMap::from_canonical_points(std::move(pts));
  } catch (const ValidationError& e) {
    throw ParseError(std::string("breakpoints: ") + e.what());
  }
}

UnimodalMap unimodal_from_json(const json& doc) {
  PLMap m = plmap_from_json(doc);
  std::optional<Rational> v;
  if (doc.contains("v")) v = rational_field(doc.at("v"), "v");
  try {
    return UnimodalMap::make(std::move(m), v);
  } catch (const ValidationError& e) {
    throw ParseError(std::string("not a unimodal map: ") + e.what());
  }
}

PLMap parse_plmap(std::string_view text) { return plmap_from_json(parse_document(text)); }
UnimodalMap parse_unimodal(std::string_view text) { return unimodal_from_json(parse_document(text)); }

PLMap read_plmap_file(const std::string& path) {
  try {
    return parse_plmap(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

UnimodalMap read_unimodal_file(const std::string& path) {
  try {
    return parse_unimodal(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
  if (!out) throw Error("write to '" + path + "' failed");
}

json to_json(const BoundaryReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json e{{"label", c.label}, {"identity", c.identity}, {"passed", c.passed}};
    if (c.witness) e["witness"] = c.witness->str();
    checks.push_back(e);
  }
  json j{{"lap_count", r.lap_count}, {"checks", checks}, {"all_passed", r.all_passed()}};
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

json to_json(const LapDecomposition& d) {
  json ends = json::array();
  json splits = json::array();
  for (const auto& e : d.endpoints) ends.push_back(e.str());
  for (const auto& s : d.splits) splits.push_back(s.str());
  return json{{"lapcount", d.lapcount}, {"endpoints", ends}, {"splits", splits}};
}

json to_json(const ConjugacyFit& fit, std::optional<double> max_omega_spread) {
  json j = to_json(fit.interpolant);
  j["metadata"] = json{{"depth", fit.depth},
                       {"stabilized", fit.stabilized},
                       {"alpha", fit.alpha},
                       {"omega", fit.omega ? json(*fit.omega) : json(nullptr)},
                       {"max_omega_spread", max_omega_spread ? json(*max_omega_spread) : json(nullptr)}};
  return j;
}

json to_json(const PowerLawReport& r) {
  json j{{"applicable", r.applicable}, {"depth", r.depth},      {"alpha", r.alpha},
         {"tolerance", r.tolerance},   {"precision", "binary64"}};
  if (!r.applicable) {
    j["reason"] = r.reason;
    return j;
  }
  j["window_points"] = r.window_points;
  j["omega"] = r.omega;
  j["omega_min"] = r.omega_min;
  j["omega_max"] = r.omega_max;
  j["max_omega_spread"] = r.max_omega_spread;
  j["within_tolerance"] = r.within_tolerance;
  return j;
}

std::string emit_points(const PLMap& m, unsigned samples, PointFormat format, bool with_floats) {
  if (samples < 2) throw PreconditionError("emit needs at least 2 samples");
  std::vector<Rational> xs;
  for (const Point& p : m.points()) xs.push_back(p.x);
  for (unsigned j = 0; j < samples; ++j) xs.push_back(Rational(j, samples - 1));
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  std::ostringstream os;
  if (format == PointFormat::Csv) {
    os << (with_floats ? "x,y,x_float,y_float\n" : "x,y\n");
    for (const auto& x : xs) {
      const Rational y = m(x);
      os << x << ',' << y;
      if (with_floats) os << ',' << float_str(x) << ',' << float_str(y);
      os << '\n';
    }
    return os.str();
  }
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1 1\">\n"
     << "  <polyline transform=\"matrix(1 0 0 -1 0 1)\" fill=\"none\" stroke=\"black\" "
        "stroke-width=\"0.005\" points=\"";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) os << ' ';
    os << float_str(xs[i]) << ',' << float_str(m(xs[i]));
  }
  os << "\"/>\n</svg>\n";
  return os.str();
}

}  // namespace plm
