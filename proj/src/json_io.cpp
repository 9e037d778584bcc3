#include "orbiknot/json_io.hpp"

#include <algorithm>
#include <limits>

namespace orbiknot {

nlohmann::json bigint_json(BigInt const &v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return v.convert_to<std::int64_t>();
  }
  return v.str();
}

PDCode pd_from_json(nlohmann::json const &j) {
  if (!j.is_object() || !j.contains("crossings") || !j["crossings"].is_array()) {
    throw ValidationError("PD JSON needs an object with a \"crossings\" array");
  }
  PDCode code{{}, 0};
  int max_label = 0;
  for (auto const &x : j["crossings"]) {
    if (!x.is_array() || x.size() != 4) throw ValidationError("each crossing must be an array of four labels");
    Crossing c{};
    for (int i = 0; i < 4; ++i) {
      if (!x[i].is_number_integer()) throw ValidationError("crossing labels must be integers");
      c[i] = x[i].get<int>();
      max_label = std::max(max_label, c[i]);
    }
    code.crossings.push_back(c);
  }
  if (j.contains("arcs")) {
    if (!j["arcs"].is_number_integer()) throw ValidationError("\"arcs\" must be an integer");
    code.arc_count = j["arcs"].get<int>();
  } else {
    code.arc_count = std::max(max_label, code.crossings.empty() ? 1 : 0);
  }
  require_valid(code);
  return code;
}

nlohmann::json to_json(PDCode const &code) {
  nlohmann::json crossings = nlohmann::json::array();
  for (auto const &c : code.crossings) crossings.push_back({c[0], c[1], c[2], c[3]});
  return {{"crossings", crossings}, {"arcs", code.arc_count}};
}

GroupPresentation presentation_from_json(nlohmann::json const &j) {
  try {
    GroupPresentation p;
    p.n_generators = j.at("ngens").get<int>();
    p.meridians = j.value("meridians", std::vector<int>{});
    p.relators = j.at("relators").get<std::vector<Word>>();
    require_valid(p);
    return p;
  } catch (nlohmann::json::exception const &e) {
    throw PresentationError(std::string("malformed presentation JSON: ") + e.what());
  }
}

nlohmann::json to_json(GroupPresentation const &p) {
  return {{"ngens", p.n_generators}, {"meridians", p.meridians}, {"relators", p.relators}};
}

}  // namespace orbiknot
