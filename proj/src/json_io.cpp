#include "nckit/json_io.hpp"

#include <fstream>
#include <sstream>

namespace nckit {

namespace {

using nlohmann::json;

std::vector<std::string> string_list(const json& j, const std::string& what) {
  if (!j.is_array()) throw std::invalid_argument(what + " must be an array");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string())
      throw std::invalid_argument(what + " must contain strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

Frame frame_from_fields(const json& j) {
  if (!j.is_object())
    throw std::invalid_argument("expected a JSON object with worlds/relation");
  if (!j.contains("worlds")) throw std::invalid_argument("missing 'worlds'");
  if (!j.contains("relation"))
    throw std::invalid_argument("missing 'relation'");
  std::vector<std::string> worlds = string_list(j["worlds"], "'worlds'");
  std::vector<std::pair<std::string, std::string>> edges;
  if (!j["relation"].is_array())
    throw std::invalid_argument("'relation' must be an array of pairs");
  for (const auto& e : j["relation"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() ||
        !e[1].is_string())
      throw std::invalid_argument(
          "'relation' entries must be [from, to] string pairs");
    edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return Frame(std::move(worlds), edges);
}

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  json j;
  in >> j;
  return j;
}

}  // namespace

Frame frame_from_json(const nlohmann::json& j) { return frame_from_fields(j); }

Model model_from_json(const nlohmann::json& j) {
  Frame f = frame_from_fields(j);
  std::map<std::string, std::set<std::string>> val;
  if (j.contains("valuation")) {
    if (!j["valuation"].is_object())
      throw std::invalid_argument("'valuation' must be an object");
    for (const auto& [atom, ws] : j["valuation"].items()) {
      std::vector<std::string> list = string_list(ws, "valuation of " + atom);
      val.emplace(atom, std::set<std::string>(list.begin(), list.end()));
    }
  }
  return Model(std::move(f), val);
}

nlohmann::json frame_to_json(const Frame& f) {
  json j;
  j["worlds"] = f.worlds();
  json rel = json::array();
  for (const auto& [s, t] : f.edge_list()) rel.push_back({s, t});
  j["relation"] = std::move(rel);
  return j;
}

nlohmann::json model_to_json(const Model& m) {
  json j = frame_to_json(m.frame());
  json val = json::object();
  for (const auto& [atom, ws] : m.valuation()) val[atom] = ws;
  j["valuation"] = std::move(val);
  return j;
}

Model load_model(const std::string& path) {
  return model_from_json(load_file(path));
}

Frame load_frame(const std::string& path) {
  return frame_from_json(load_file(path));
}

Model parse_model(const std::string& text) {
  return model_from_json(nlohmann::json::parse(text));
}

Frame parse_frame(const std::string& text) {
  return frame_from_json(nlohmann::json::parse(text));
}

}  // namespace nckit
