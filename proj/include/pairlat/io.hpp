#ifndef PAIRLAT_IO_HPP_
#define PAIRLAT_IO_HPP_

#include <string>

#include <json.hpp>

#include "pairlat/dilation.hpp"
#include "pairlat/fock.hpp"
#include "pairlat/graph.hpp"
#include "pairlat/ideal.hpp"
#include "pairlat/lattice.hpp"

namespace pairlat {

// ordered_json keeps insertion order, which pins the emitted field order.
using json = nlohmann::ordered_json;

/// Parse the graph document {"vertices":[...],"edges":[{"id","src","rng"}]}.
/// Vertex and edge order is the document order.
inline Graph parse_graph(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(std::string("malformed document: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges"))
    throw Error("malformed document: expected object with vertices and edges");
  if (!doc["vertices"].is_array() || !doc["edges"].is_array())
    throw Error("malformed document: vertices and edges must be arrays");

  std::vector<std::string> vertices;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_string()) throw Error("malformed document: vertex id must be a string");
    vertices.push_back(v.get<std::string>());
  }
  std::vector<Edge> edges;
  for (const auto& e : doc["edges"]) {
    if (!e.is_object() || !e.contains("id") || !e.contains("src") ||
        !e.contains("rng"))
      throw Error("malformed document: edge needs id, src and rng");
    if (!e["id"].is_string() || !e["src"].is_string() || !e["rng"].is_string())
      throw Error("malformed document: edge fields must be strings");
    edges.push_back(Edge{e["id"].get<std::string>(),
                         e["src"].get<std::string>(),
                         e["rng"].get<std::string>()});
  }
  return Graph(std::move(vertices), std::move(edges));
}

inline json graph_to_json(const Graph& g) {
  json doc;
  doc["vertices"] = json::array();
  for (const std::string& v : g.vertices()) doc["vertices"].push_back(v);
  doc["edges"] = json::array();
  for (const Edge& e : g.edges()) {
    json je;
    je["id"] = e.id;
    je["src"] = e.src;
    je["rng"] = e.rng;
    doc["edges"].push_back(je);
  }
  return doc;
}

inline std::string serialize_graph(const Graph& g) {
  return graph_to_json(g).dump();
}

inline json vertex_set_to_json(const VertexSet& s) {
  json arr = json::array();
  for (const std::string& v : s) arr.push_back(v);  // sorted by std::set
  return arr;
}

inline VertexSet vertex_set_from_json(const json& arr) {
  if (!arr.is_array()) throw Error("vertex set must be an array of ids");
  VertexSet s;
  for (const auto& v : arr) {
    if (!v.is_string()) throw Error("vertex id must be a string");
    s.insert(v.get<std::string>());
  }
  return s;
}

inline json pair_to_json(const Pair& p) {
  json doc;
  doc["kernel"] = vertex_set_to_json(p.kernel);
  doc["covariance"] = vertex_set_to_json(p.covariance);
  return doc;
}

inline Pair pair_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("kernel") || !doc.contains("covariance"))
    throw Error("pair needs kernel and covariance arrays");
  return Pair{vertex_set_from_json(doc["kernel"]),
              vertex_set_from_json(doc["covariance"])};
}

inline Pair parse_pair(const std::string& text) {
  try {
    return pair_from_json(json::parse(text));
  } catch (const json::exception& e) {
    throw Error(std::string("malformed pair: ") + e.what());
  }
}

inline json lattice_to_json(const PairLattice& lat) {
  json doc;
  doc["pairs"] = json::array();
  for (const Pair& p : lat.pairs) doc["pairs"].push_back(pair_to_json(p));
  doc["covers"] = json::array();
  for (const auto& [i, j] : lat.covers)
    doc["covers"].push_back(json::array({i, j}));
  return doc;
}

inline std::string pair_label(const Pair& p) {
  return "K=" + format_vertex_set(p.kernel) +
         " I=" + format_vertex_set(p.covariance);
}

/// Deterministic DOT emission: one node per pair, one arrow per cover.
inline std::string lattice_to_dot(const PairLattice& lat) {
  std::string out = "digraph pair_lattice {\n  rankdir=BT;\n";
  for (size_t i = 0; i < lat.pairs.size(); ++i)
    out += "  n" + std::to_string(i) + " [label=\"" + pair_label(lat.pairs[i]) +
           "\"];\n";
  for (const auto& [i, j] : lat.covers)
    out += "  n" + std::to_string(i) + " -> n" + std::to_string(j) + ";\n";
  out += "}\n";
  return out;
}

inline json dilation_to_json(const DilationResult& d) {
  json doc;
  doc["graph"] = graph_to_json(d.graph);
  json vm = json::object();
  for (const auto& [from, to] : d.original_vertex_map) vm[from] = to;
  doc["vertex_map"] = vm;
  json cm = json::object();
  for (const auto& [from, to] : d.copy_vertex_map) cm[from] = to;
  doc["copy_map"] = cm;
  return doc;
}

inline json realize_to_json(const RealizeDims& d) {
  json doc;
  json dims;
  dims["toeplitz"] = d.toeplitz;
  dims["ideal"] = d.ideal;
  dims["quotient"] = d.quotient;
  dims["center"] = d.center;
  doc["dims"] = dims;
  return doc;
}

inline json relations_to_json(const RelationReport& rep) {
  json doc;
  if (rep.truncation)
    doc["truncation"] = *rep.truncation;
  else
    doc["truncation"] = nullptr;
  doc["guarded_max_length"] = rep.guarded_max_length;
  doc["relations"] = json::array();
  for (const auto& line : rep.lines) {
    json jl;
    jl["name"] = line.name;
    jl["max_defect"] = line.max_defect;
    doc["relations"].push_back(jl);
  }
  return doc;
}

inline json embedding_to_json(const EmbeddingReport& rep) {
  json doc;
  doc["level"] = rep.level;
  doc["pairs_checked"] = rep.pairs_checked;
  doc["max_gap"] = rep.max_gap;
  return doc;
}

}  // namespace pairlat

#endif  // PAIRLAT_IO_HPP_
