#include "bouquet/io.hpp"

#include "json.hpp"

namespace bouquet {

using Json = nlohmann::ordered_json;

namespace {

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

int as_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where + ": expected an integer");
  return j.get<int>();
}

const Json& field(const Json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where + ": missing \"" + key + "\"");
  return *it;
}

std::vector<int> int_list(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected a list");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_int(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

GaussCode gauss_from_json(const Json& root) {
  if (!root.is_object()) throw ParseError("top level: expected an object");
  for (auto it = root.begin(); it != root.end(); ++it) {
    const auto& k = it.key();
    if (k != "curves" && k != "crossings" && k != "punctured_faces" && k != "scaffold")
      throw ParseError("top level: unknown key \"" + k + "\"");
  }
  GaussCode code;
  const Json& curves = field(root, "curves", "top level");
  if (!curves.is_array()) throw ParseError("curves: expected a list");
  for (std::size_t i = 0; i < curves.size(); ++i) {
    const std::string where = "curves[" + std::to_string(i) + "]";
    const Json& c = curves[i];
    if (!c.is_object()) throw ParseError(where + ": expected an object");
    const Json& id = field(c, "id", where);
    if (!id.is_string()) throw ParseError(where + ".id: expected a string");
    GaussCode::Curve curve{id.get<std::string>(), {}};
    const Json& visits = field(c, "visits", where);
    if (!visits.is_array()) throw ParseError(where + ".visits: expected a list");
    for (std::size_t v = 0; v < visits.size(); ++v) {
      const std::string vw = where + ".visits[" + std::to_string(v) + "]";
      if (!visits[v].is_array() || visits[v].size() != 2) throw ParseError(vw + ": expected [crossing, slot]");
      curve.visits.push_back({as_int(visits[v][0], vw), as_int(visits[v][1], vw)});
    }
    code.curves.push_back(std::move(curve));
  }
  const Json& crossings = field(root, "crossings", "top level");
  if (!crossings.is_array()) throw ParseError("crossings: expected a list");
  for (std::size_t i = 0; i < crossings.size(); ++i) {
    const std::string where = "crossings[" + std::to_string(i) + "]";
    const Json& x = crossings[i];
    if (!x.is_object()) throw ParseError(where + ": expected an object");
    code.crossings.push_back({as_int(field(x, "id", where), where + ".id"), as_int(field(x, "sign", where), where + ".sign")});
  }
  if (auto it = root.find("punctured_faces"); it != root.end()) {
    if (!it->is_array()) throw ParseError("punctured_faces: expected a list");
    for (std::size_t i = 0; i < it->size(); ++i) {
      if (!(*it)[i].is_string()) throw ParseError("punctured_faces[" + std::to_string(i) + "]: expected a face key");
      auto key = (*it)[i].get<std::string>();
      if (!DartId::parse(key) && key.rfind('h', 0) != 0)
        throw ParseError("punctured_faces[" + std::to_string(i) + "]: malformed face key \"" + key + "\"");
      code.punctured_faces.push_back(std::move(key));
    }
  }
  return code;
}

Json gauss_to_json(const GaussCode& code) {
  Json root = Json::object();
  Json curves = Json::array();
  for (const auto& c : code.curves) {
    Json visits = Json::array();
    for (const auto& v : c.visits) visits.push_back(Json::array({v.crossing, v.slot}));
    curves.push_back(Json{{"id", c.id}, {"visits", visits}});
  }
  root["curves"] = curves;
  Json crossings = Json::array();
  for (const auto& x : code.crossings) crossings.push_back(Json{{"id", x.id}, {"sign", x.sign}});
  root["crossings"] = crossings;
  if (!code.punctured_faces.empty()) root["punctured_faces"] = code.punctured_faces;
  return root;
}

// Compact layout: one curve or crossing per line.
std::string layout(const Json& root) {
  std::string out = "{\n";
  bool first_key = true;
  for (auto it = root.begin(); it != root.end(); ++it) {
    if (!first_key) out += ",\n";
    first_key = false;
    out += "  " + Json(it.key()).dump() + ": ";
    if (it->is_array() && !it->empty()) {
      out += "[\n";
      for (std::size_t i = 0; i < it->size(); ++i) out += "    " + (*it)[i].dump() + (i + 1 < it->size() ? ",\n" : "\n");
      out += "  ]";
    } else if (it->is_object()) {
      out += "{\n";
      bool first = true;
      for (auto jt = it->begin(); jt != it->end(); ++jt) {
        if (!first) out += ",\n";
        first = false;
        out += "    " + Json(jt.key()).dump() + ": " + jt->dump();
      }
      out += "\n  }";
    } else {
      out += it->dump();
    }
  }
  return out + "\n}\n";
}

}  // namespace

GaussCode parse_gauss(std::string_view text) { return gauss_from_json(parse_json(text)); }

std::string serialize_gauss(const GaussCode& code) { return layout(gauss_to_json(code)); }

CurveSystem parse_system(std::string_view text) {
  const Json root = parse_json(text);
  const GaussCode code = gauss_from_json(root);
  auto sc_it = root.find("scaffold");
  if (sc_it == root.end()) return CurveSystem::from_gauss(code);

  if (auto err = validate(code)) throw InvalidSystem(*err);
  const Json& j = *sc_it;
  if (!j.is_object()) throw ParseError("scaffold: expected an object");
  CurveSystem::Scaffold sc;
  const Json& rot = field(j, "rotations", "scaffold");
  if (!rot.is_array()) throw ParseError("scaffold.rotations: expected a list");
  for (std::size_t v = 0; v < rot.size(); ++v)
    sc.rotations.push_back(int_list(rot[v], "scaffold.rotations[" + std::to_string(v) + "]"));
  sc.twins = int_list(field(j, "twins", "scaffold"), "scaffold.twins");
  sc.labels = int_list(field(j, "labels", "scaffold"), "scaffold.labels");
  sc.starts = int_list(field(j, "starts", "scaffold"), "scaffold.starts");
  sc.slots = int_list(field(j, "slots", "scaffold"), "scaffold.slots");
  sc.markers = int_list(field(j, "markers", "scaffold"), "scaffold.markers");
  const Json& xs = field(j, "crossing_vertices", "scaffold");
  if (!xs.is_array()) throw ParseError("scaffold.crossing_vertices: expected a list");
  for (std::size_t i = 0; i < xs.size(); ++i) {
    auto pair = int_list(xs[i], "scaffold.crossing_vertices[" + std::to_string(i) + "]");
    if (pair.size() != 2) throw ParseError("scaffold.crossing_vertices: expected [vertex, crossing]");
    sc.crossing_ids.emplace_back(pair[0], pair[1]);
  }
  std::vector<std::string> names;
  for (const auto& c : code.curves) names.push_back(c.id);
  CurveSystem s = CurveSystem::from_scaffold(std::move(names), sc);
  const GaussCode derived = s.gauss_code();
  bool same = derived.curves.size() == code.curves.size() && derived.crossings.size() == code.crossings.size() &&
              derived.punctured_faces == code.punctured_faces;
  for (std::size_t i = 0; same && i < code.curves.size(); ++i) same = derived.curves[i].visits == code.curves[i].visits;
  for (std::size_t i = 0; same && i < code.crossings.size(); ++i)
    same = derived.crossings[i].id == code.crossings[i].id && derived.crossings[i].sign == code.crossings[i].sign;
  if (!same) throw InvalidSystem("scaffold does not match the listed curves and crossings");
  return s;
}

std::string serialize_system(const CurveSystem& s) {
  Json root = gauss_to_json(s.gauss_code());
  if (!s.is_plain()) {
    const auto sc = s.scaffold();
    Json j = Json::object();
    j["rotations"] = sc.rotations;
    j["twins"] = sc.twins;
    j["labels"] = sc.labels;
    j["starts"] = sc.starts;
    j["slots"] = sc.slots;
    j["markers"] = sc.markers;
    Json xs = Json::array();
    for (auto [v, id] : sc.crossing_ids) xs.push_back(Json::array({v, id}));
    j["crossing_vertices"] = xs;
    root["scaffold"] = j;
  }
  return layout(root);
}

}  // namespace bouquet
