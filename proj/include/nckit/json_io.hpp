#pragma once

#include <string>

#include "json.hpp"
#include "nckit/kripke.hpp"

namespace nckit {

// Model files look like
//   {"worlds": ["s", "t"], "relation": [["s", "t"]], "valuation": {"p": ["s"]}}
// and frame files are the same without the "valuation" key.

Model model_from_json(const nlohmann::json& j);
Frame frame_from_json(const nlohmann::json& j);
nlohmann::json model_to_json(const Model& m);
nlohmann::json frame_to_json(const Frame& f);

Model load_model(const std::string& path);
Frame load_frame(const std::string& path);
Model parse_model(const std::string& text);
Frame parse_frame(const std::string& text);

}  // namespace nckit
