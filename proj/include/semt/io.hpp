#pragma once

#include <map>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "semt/bounds.hpp"
#include "semt/error.hpp"
#include "semt/graph.hpp"
#include "semt/labeling.hpp"
#include "semt/search.hpp"

namespace semt {

using Json = nlohmann::ordered_json;

// Labeling document:
// {
//   "family": "5;2,2,2,2,5",
//   "vertex_labels": [{"vertex": "a1", "label": 1}, ...],
//   "edge_labels": [{"edge": ["a1", "a2"], "label": 35}, ...],
//   "magic_constant": 40
// }
// Entries are written in graph order. Reading accepts any order but rejects
// unknown vertices, unknown edges and repeated entries; vertices or edges
// left out read as label 0 so the verifier reports them.
inline Json labeling_to_json(const TotalLabeling& total) {
  const auto& g = *total.graph;
  Json doc;
  doc["family"] = g.family().to_string();
  Json vertices = Json::array();
  for (std::size_t v = 0; v < g.vertices().size(); ++v)
    vertices.push_back({{"vertex", g.vertices()[v].name()}, {"label", total.vertex_labels.at(v)}});
  doc["vertex_labels"] = std::move(vertices);
  Json edges = Json::array();
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const auto& edge = g.edges()[e];
    edges.push_back({{"edge", {g.vertices()[edge.u].name(), g.vertices()[edge.v].name()}}, {"label", total.edge_labels.at(e)}});
  }
  doc["edge_labels"] = std::move(edges);
  doc["magic_constant"] = total.magic_constant;
  return doc;
}

inline TotalLabeling labeling_from_json(const Json& doc) {
  try {
    auto graph = build_unicyclic(UnicyclicFamily::parse(doc.at("family").get<std::string>()));
    TotalLabeling total{graph, std::vector<int>(graph->vertices().size(), 0), std::vector<int>(graph->edges().size(), 0),
                        doc.at("magic_constant").get<int>()};
    std::vector<char> seen_vertex(graph->vertices().size(), 0);
    for (const auto& entry : doc.at("vertex_labels")) {
      const auto id = VertexId::parse(entry.at("vertex").get<std::string>());
      if (!graph->contains(id)) throw Error(ErrorKind::Parse, "unknown vertex " + id.name());
      const auto v = graph->index_of(id);
      if (seen_vertex[v]++) throw Error(ErrorKind::Parse, "vertex " + id.name() + " listed twice");
      total.vertex_labels[v] = entry.at("label").get<int>();
    }
    std::vector<char> seen_edge(graph->edges().size(), 0);
    for (const auto& entry : doc.at("edge_labels")) {
      const auto& ends = entry.at("edge");
      if (!ends.is_array() || ends.size() != 2) throw Error(ErrorKind::Parse, "edge must be a pair of vertex names");
      const auto a = VertexId::parse(ends[0].get<std::string>());
      const auto b = VertexId::parse(ends[1].get<std::string>());
      if (!graph->contains(a) || !graph->contains(b)) throw Error(ErrorKind::Parse, "unknown edge endpoint");
      const auto e = graph->edge_between(graph->index_of(a), graph->index_of(b));
      if (e == LabeledGraph::npos) throw Error(ErrorKind::Parse, "no edge " + a.name() + "-" + b.name());
      if (seen_edge[e]++) throw Error(ErrorKind::Parse, "edge " + a.name() + "-" + b.name() + " listed twice");
      total.edge_labels[e] = entry.at("label").get<int>();
    }
    return total;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::Parse, ex.what());
  }
}

inline std::string serialize_labeling(const TotalLabeling& total) { return labeling_to_json(total).dump(2) + "\n"; }

inline TotalLabeling parse_labeling(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::Parse, ex.what());
  }
  return labeling_from_json(doc);
}

inline Json report_to_json(const VerificationReport& report) {
  Json doc;
  doc["valid"] = report.valid;
  doc["magic_constant"] = report.magic_constant ? Json(*report.magic_constant) : Json(nullptr);
  Json violations = Json::array();
  for (const auto& v : report.violations) violations.push_back({{"kind", std::string(to_string(v.kind))}, {"detail", v.detail}});
  doc["violations"] = std::move(violations);
  return doc;
}

inline Json bounds_to_json(const UnicyclicFamily& family, const StrengthBounds& b) {
  Json doc;
  doc["family"] = family.to_string();
  doc["p"] = family.order();
  doc["q"] = family.order();
  doc["trivial_lower"] = b.trivial_lower;
  doc["trivial_upper"] = b.trivial_upper;
  doc["degsum_lower_exact"] = b.degsum_lower_exact.to_string();
  doc["degsum_lower"] = b.degsum_lower;
  doc["theorem4_lower"] = b.theorem4_lower ? Json(*b.theorem4_lower) : Json(nullptr);
  doc["theorem4_upper"] = b.theorem4_upper ? Json(*b.theorem4_upper) : Json(nullptr);
  doc["conjecture_value"] = b.conjecture_value;
  return doc;
}

inline Json probes_to_json(const std::vector<SProbe>& probes) {
  Json out = Json::array();
  for (const auto& probe : probes)
    out.push_back({{"s", probe.s}, {"status", std::string(to_string(probe.status))}, {"nodes", probe.nodes}});
  return out;
}

inline Json search_result_to_json(const UnicyclicFamily& family, const SearchResult& result) {
  Json doc;
  doc["family"] = family.to_string();
  doc["status"] = std::string(to_string(result.status));
  doc["sm"] = result.sm ? Json(*result.sm) : Json(nullptr);
  doc["nodes_explored"] = result.nodes_explored;
  doc["s_range"] = {result.s_lo, result.s_hi};
  doc["per_s"] = probes_to_json(result.per_s_feasibility);
  doc["witness"] = result.witness ? labeling_to_json(*result.witness) : Json(nullptr);
  return doc;
}

/// Undirected DOT rendering: node text is the vertex label, edge `label`
/// attribute the edge label. Throws NotValid for labelings that fail the
/// verifier.
inline std::string to_dot(const TotalLabeling& total) {
  if (!verify_semt(total).valid) throw Error(ErrorKind::NotValid, "labeling fails verification");
  const auto& g = *total.graph;
  std::ostringstream out;
  out << "graph \"" << g.family().to_string() << "\" {\n";
  out << "  // magic constant " << total.magic_constant << "\n";
  for (std::size_t v = 0; v < g.vertices().size(); ++v)
    out << "  \"" << g.vertices()[v].name() << "\" [label=\"" << total.vertex_labels[v] << "\"];\n";
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const auto& edge = g.edges()[e];
    out << "  \"" << g.vertices()[edge.u].name() << "\" -- \"" << g.vertices()[edge.v].name() << "\" [label=\""
        << total.edge_labels[e] << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace semt
