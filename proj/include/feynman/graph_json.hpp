#pragma once

// Graph files:
//   {"vertices":[{"id":0,"x":0.0,"y":0.0},...],
//    "edges":[{"id":0,"from":0,"to":1,"waypoints":[[x,y],...]},...]}
// Unknown keys are rejected at every level; "waypoints" may be omitted.

#include <istream>
#include <set>
#include <string>

#include <json.hpp>

#include "feynman/error.hpp"
#include "feynman/graph.hpp"

namespace feynman {

using Json = nlohmann::ordered_json;

namespace detail {

inline void require_keys(const Json& object, std::string_view where, const std::set<std::string>& required,
                         const std::set<std::string>& optional = {}) {
  if (!object.is_object()) throw Error(Errc::ParseError, std::string(where) + " must be an object");
  for (const auto& [key, value] : object.items()) {
    if (!required.contains(key) && !optional.contains(key)) {
      throw Error(Errc::ParseError, "unknown key '" + key + "' in " + std::string(where));
    }
  }
  for (const auto& key : required) {
    if (!object.contains(key)) throw Error(Errc::ParseError, std::string(where) + " lacks '" + key + "'");
  }
}

inline int json_int(const Json& value, std::string_view what) {
  if (!value.is_number_integer()) throw Error(Errc::ParseError, std::string(what) + " must be an integer");
  return value.get<int>();
}

inline double json_real(const Json& value, std::string_view what) {
  if (!value.is_number()) throw Error(Errc::ParseError, std::string(what) + " must be a number");
  return value.get<double>();
}

}  // namespace detail

inline GraphSpec graph_from_json(const Json& doc) {
  detail::require_keys(doc, "graph", {"vertices", "edges"});
  if (!doc["vertices"].is_array() || !doc["edges"].is_array()) {
    throw Error(Errc::ParseError, "'vertices' and 'edges' must be arrays");
  }
  GraphSpec spec;
  for (const auto& v : doc["vertices"]) {
    detail::require_keys(v, "vertex", {"id", "x", "y"});
    spec.vertices.push_back({detail::json_int(v["id"], "vertex id"),
                             {detail::json_real(v["x"], "x"), detail::json_real(v["y"], "y")}});
  }
  for (const auto& e : doc["edges"]) {
    detail::require_keys(e, "edge", {"id", "from", "to"}, {"waypoints"});
    EdgeSpec edge{detail::json_int(e["id"], "edge id"), detail::json_int(e["from"], "from"),
                  detail::json_int(e["to"], "to"), {}};
    if (e.contains("waypoints")) {
      if (!e["waypoints"].is_array()) throw Error(Errc::ParseError, "'waypoints' must be an array");
      for (const auto& p : e["waypoints"]) {
        if (!p.is_array() || p.size() != 2) throw Error(Errc::ParseError, "waypoint must be [x, y]");
        edge.waypoints.push_back({detail::json_real(p[0], "waypoint x"), detail::json_real(p[1], "waypoint y")});
      }
    }
    spec.edges.push_back(std::move(edge));
  }
  return spec;
}

inline GraphSpec parse_graph(std::istream& in) {
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::ParseError, e.what());
  }
  return graph_from_json(doc);
}

inline GraphSpec parse_graph(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::ParseError, e.what());
  }
  return graph_from_json(doc);
}

inline Json graph_to_json(const GraphSpec& spec) {
  Json doc = Json::object();
  doc["vertices"] = Json::array();
  for (const auto& v : spec.vertices) {
    doc["vertices"].push_back({{"id", v.id}, {"x", v.position.x}, {"y", v.position.y}});
  }
  doc["edges"] = Json::array();
  for (const auto& e : spec.edges) {
    Json waypoints = Json::array();
    for (const auto& p : e.waypoints) waypoints.push_back(Json::array({p.x, p.y}));
    doc["edges"].push_back({{"id", e.id}, {"from", e.from}, {"to", e.to}, {"waypoints", std::move(waypoints)}});
  }
  return doc;
}

}  // namespace feynman
