#pragma once

// nlohmann::json conversions for the report and input documents. Vertex
// coordinates are written as arrays ([row, col] or [row, col, layer]) and
// as bare integers for one-dimensional families; both forms are accepted.

#include <json.hpp>
#include <string>

#include "bcast/closed_forms.hpp"
#include "bcast/constructors.hpp"
#include "bcast/exact_solver.hpp"
#include "bcast/reception.hpp"

namespace bcast {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kCoordinateNote =
    "1-indexed (row, col[, layer]); row 1 is the top row; slant diagonals join (r,c) and (r+1,c+1)";

using nlohmann::json;

inline json vertex_to_json(const VertexId& v) {
  if (v.arity == 1) return v[0];
  json out = json::array();
  for (int a = 0; a < v.arity; ++a) out.push_back(v[a]);
  return out;
}

inline VertexId vertex_from_json(const json& j) {
  if (j.is_number_integer()) return VertexId::of(j.get<int>());
  require(j.is_array() && !j.empty() && j.size() <= 3, ErrorCode::ParseError,
          "vertex must be an integer or an array of 1-3 integers, got " + j.dump());
  for (const auto& c : j) require(c.is_number_integer(), ErrorCode::ParseError, "non-integer coordinate " + j.dump());
  switch (j.size()) {
    case 1: return VertexId::of(j[0].get<int>());
    case 2: return VertexId::of(j[0].get<int>(), j[1].get<int>());
    default: return VertexId::of(j[0].get<int>(), j[1].get<int>(), j[2].get<int>());
  }
}

inline json vertices_to_json(const std::vector<VertexId>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(vertex_to_json(v));
  return out;
}

inline json family_to_json(const GraphFamily& f) {
  json j{{"family", family_name(f)}};
  std::visit(
      [&](const auto& fam) {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, family::Path> || std::is_same_v<T, family::Cycle>) {
          j["n"] = fam.n;
        } else if constexpr (std::is_same_v<T, family::Grid3D>) {
          j["m"] = fam.m;
          j["n"] = fam.n;
          j["k"] = fam.k;
        } else if constexpr (std::is_same_v<T, family::Tree>) {
          json edges = json::array();
          for (auto [a, b] : fam.edges) edges.push_back({a, b});
          j["edges"] = edges;
        } else {
          j["m"] = fam.m;
          j["n"] = fam.n;
        }
      },
      f);
  return j;
}

inline GraphFamily family_from_json(const json& j) {
  require(j.is_object() && j.contains("family") && j["family"].is_string(), ErrorCode::ParseError,
          "graph spec needs a \"family\" string");
  const auto name = j["family"].get<std::string>();
  auto dim = [&](const char* key) {
    require(j.contains(key) && j[key].is_number_integer(), ErrorCode::ParseError,
            name + " spec needs integer \"" + key + "\"");
    return j[key].get<int>();
  };
  if (name == "path") return family::Path{dim("n")};
  if (name == "cycle") return family::Cycle{dim("n")};
  if (name == "grid") return family::Grid{dim("m"), dim("n")};
  if (name == "grid3d") return family::Grid3D{dim("m"), dim("n"), dim("k")};
  if (name == "slant") return family::Slant{dim("m"), dim("n")};
  if (name == "king") return family::King{dim("m"), dim("n")};
  if (name == "tree") {
    require(j.contains("edges") && j["edges"].is_array(), ErrorCode::ParseError, "tree spec needs \"edges\"");
    family::Tree tree;
    for (const auto& e : j["edges"]) {
      require(e.is_array() && e.size() == 2 && e[0].is_number_integer() && e[1].is_number_integer(),
              ErrorCode::ParseError, "tree edge must be [a,b], got " + e.dump());
      tree.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return tree;
  }
  throw Error(ErrorCode::ParseError, "unknown family \"" + name + "\"");
}

inline json towers_to_json(const TowerSet& ts) { return {{"t", ts.t}, {"towers", vertices_to_json(ts.towers)}}; }

inline TowerSet towers_from_json(const json& j) {
  require(j.is_object() && j.contains("t") && j["t"].is_number_integer(), ErrorCode::ParseError,
          "tower set needs integer \"t\"");
  require(j.contains("towers") && j["towers"].is_array(), ErrorCode::ParseError, "tower set needs \"towers\" array");
  TowerSet ts{{}, j["t"].get<int>()};
  for (const auto& v : j["towers"]) ts.towers.push_back(vertex_from_json(v));
  return ts;
}

inline json gamma_to_json(const GammaResult& g) {
  json j{{"value", g.value},
         {"kind", std::string(to_string(g.kind))},
         {"theorem_tag", g.theorem_tag},
         {"hypothesis_ok", g.hypothesis_ok}};
  if (!g.note.empty()) j["note"] = g.note;
  return j;
}

inline json plan_to_json(const PlacementPlan& p) {
  json j{{"theorem", p.theorem_tag},
         {"t", p.towers.t},
         {"r", p.r},
         {"towers", vertices_to_json(p.towers.towers)},
         {"count", p.size()},
         {"claims_efficient", p.claims_efficient},
         {"graph", family_to_json(p.graph)},
         {"coordinates", kCoordinateNote},
         {"version", kVersion}};
  if (!p.note.empty()) j["note"] = p.note;
  return j;
}

template <class Vertex, class Conv>
json report_to_json(const BasicVerificationReport<Vertex>& rep, Conv conv) {
  json deficient = json::array(), overlap = json::array();
  for (const auto& v : rep.deficient) deficient.push_back(conv(v));
  for (const auto& v : rep.overlap_vertices) overlap.push_back(conv(v));
  return {{"t", rep.t},
          {"r", rep.r},
          {"tower_count", rep.tower_count},
          {"dominated", rep.dominated},
          {"min_reception", rep.min_reception},
          {"deficient", deficient},
          {"overlap_vertices", overlap},
          {"efficient", rep.efficient},
          {"wasted_signal", rep.wasted_signal},
          {"total_excess", rep.total_excess},
          {"r_exceeds_t", rep.r_exceeds_t}};
}

inline json report_to_json(const VerificationReport& rep) { return report_to_json(rep, vertex_to_json); }

inline json lattice_point_to_json(const LatticePoint& p) { return json::array({p.x, p.y}); }

inline json report_to_json(const LatticeReport& rep) { return report_to_json(rep, lattice_point_to_json); }

inline json oracle_to_json(const OracleResult& o) {
  return {{"gamma", o.gamma},
          {"witness", towers_to_json(o.witness)},
          {"explored_nodes", o.explored_nodes},
          {"proven_minimal", o.proven_minimal},
          {"status", std::string(to_string(o.status))},
          {"lower_bound", o.lower_bound}};
}

}  // namespace bcast
