#ifndef PAIRLAT_DILATION_HPP_
#define PAIRLAT_DILATION_HPP_

#include <map>
#include <string>
#include <vector>

#include "pairlat/fock.hpp"
#include "pairlat/graph.hpp"
#include "pairlat/ideal.hpp"

namespace pairlat {

inline const char* kCopySuffix = "#copy";

/// Katsura dilation graph: the quotient graph enlarged by one fresh copy of
/// each regular vertex outside the covariance set, with the copied edges
/// pointing into the original vertices.
struct DilationResult {
  Graph graph;
  std::map<std::string, std::string> original_vertex_map;  // quotient id -> id
  std::map<std::string, std::string> copy_vertex_map;  // original -> copy id
  std::map<std::string, std::string> original_edge_map;
  std::map<std::string, std::string> copy_edge_map;
};

/// Quotient by the kernel, then add a copy v' for every regular vertex of
/// the quotient outside the covariance, and an edge e' with src(e') =
/// src(e)' and rng(e') = rng(e) for every quotient edge whose source got
/// copied. Realizes O(g, p) as the absolute algebra of the output graph.
inline DilationResult katsura_dilation(const Graph& g, const Pair& p) {
  require_valid_pair(g, p);
  QuotientData q = quotient_graph(g, p.kernel);
  const Graph& base = q.quotient;
  VertexSet r = set_difference(p.covariance, p.kernel);
  VertexSet copied = set_difference(regular_vertices(base), r);

  DilationResult out;
  std::vector<std::string> vs;
  for (const std::string& v : base.vertices()) {
    vs.push_back(v);
    out.original_vertex_map[v] = v;
  }
  for (const std::string& v : base.vertices()) {
    if (!copied.count(v)) continue;
    std::string copy = v + kCopySuffix;
    if (base.has_vertex(copy))
      throw Error("copy vertex id collides with an existing vertex: " + copy);
    vs.push_back(copy);
    out.copy_vertex_map[v] = copy;
  }
  std::vector<Edge> es;
  for (const Edge& e : base.edges()) {
    es.push_back(e);
    out.original_edge_map[e.id] = e.id;
  }
  for (const Edge& e : base.edges()) {
    if (!copied.count(e.src)) continue;
    std::string copy = e.id + kCopySuffix;
    if (base.has_edge(copy))
      throw Error("copy edge id collides with an existing edge: " + copy);
    es.push_back(Edge{copy, e.src + kCopySuffix, e.rng});
    out.copy_edge_map[e.id] = copy;
  }
  out.graph = Graph(std::move(vs), std::move(es));
  return out;
}

/// Exact check (acyclic graphs only) that the dilation realizes O(g, p) as
/// the absolute algebra of the dilated graph: equal dimension and equal
/// center dimension of the two finite-dimensional realizations.
inline bool dilation_is_absolute(const Graph& g, const Pair& p) {
  if (!is_acyclic(g))
    throw UnsupportedError("acyclic required: exact dilation check");
  DilationResult d = katsura_dilation(g, p);
  CpDimensions lhs = relative_cp_dimension(g, p);
  Pair absolute{VertexSet{}, regular_vertices(d.graph)};
  CpDimensions rhs = relative_cp_dimension(d.graph, absolute);
  return lhs.dim == rhs.dim && lhs.center_dim == rhs.center_dim;
}

}  // namespace pairlat

#endif  // PAIRLAT_DILATION_HPP_
