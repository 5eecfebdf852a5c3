#pragma once

#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "pcgroup/presentation.hpp"
#include "pcgroup/word.hpp"

namespace pcgroup {

using Json = nlohmann::ordered_json;

// Graph file format:
//   {"vertices": [{"name": "a", "order": "inf"}, {"name": "t", "order": 2}],
//    "edges": [["a", "b"], ...]}
// The vertex sequence in the file is the ShortLex order.

inline Json graph_to_json(const GraphPresentation& g) {
  Json vertices = Json::array();
  for (const auto& v : g.vertices()) {
    Json jv;
    jv["name"] = v.name;
    if (v.order == VertexOrder::kTwo) {
      jv["order"] = 2;
    } else {
      jv["order"] = "inf";
    }
    vertices.push_back(std::move(jv));
  }
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) {
    edges.push_back(Json::array({g.vertex(u).name, g.vertex(v).name}));
  }
  Json j;
  j["vertices"] = std::move(vertices);
  j["edges"] = std::move(edges);
  return j;
}

inline GraphPresentation graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges")) {
    throw ParseError("graph document needs 'vertices' and 'edges'", 0);
  }
  std::vector<VertexSpec> vertices;
  for (const auto& jv : j.at("vertices")) {
    VertexSpec spec;
    if (!jv.is_object() || !jv.contains("name") ||
        !jv.at("name").is_string()) {
      throw ParseError("vertex entries need a string 'name'", 0);
    }
    spec.name = jv.at("name").get<std::string>();
    if (!jv.contains("order")) {
      throw ParseError("vertex '" + spec.name + "' needs an 'order'", 0);
    }
    const auto& jo = jv.at("order");
    if (jo.is_number_integer() && jo.get<std::int64_t>() == 2) {
      spec.order = VertexOrder::kTwo;
    } else if (jo.is_string() && jo.get<std::string>() == "inf") {
      spec.order = VertexOrder::kInfinite;
    } else {
      throw ParseError("vertex '" + spec.name + "': order must be 2 or \"inf\"",
                       0);
    }
    vertices.push_back(std::move(spec));
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& je : j.at("edges")) {
    if (!je.is_array() || je.size() != 2 || !je.at(0).is_string() ||
        !je.at(1).is_string()) {
      throw ParseError("edges must be pairs of vertex names", 0);
    }
    edges.emplace_back(je.at(0).get<std::string>(),
                       je.at(1).get<std::string>());
  }
  return GraphPresentation::validate(std::move(vertices), edges);
}

inline GraphPtr load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open graph file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("invalid JSON in graph file " + path + ": " + e.what(),
                     0);
  }
  try {
    return std::make_shared<const GraphPresentation>(graph_from_json(j));
  } catch (const Error& e) {
    throw ParseError("bad graph file " + path + ": " + e.what(), 0);
  }
}

inline Json normal_form_to_json(const NormalForm& x) {
  Json j;
  j["word"] = x.str();
  j["lg"] = x.length();
  return j;
}

}  // namespace pcgroup
