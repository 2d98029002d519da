#ifndef PAIRLAT_IDEAL_HPP_
#define PAIRLAT_IDEAL_HPP_

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "pairlat/graph.hpp"

namespace pairlat {

/// Kernel--covariance pair in PULLBACK form: the covariance set always
/// contains the kernel set. Valid when the kernel is hereditary and
/// kernel <= covariance <= katsura_ideal_of_kernel(g, kernel).
struct Pair {
  VertexSet kernel;
  VertexSet covariance;

  friend bool operator==(const Pair& a, const Pair& b) {
    return a.kernel == b.kernel && a.covariance == b.covariance;
  }
  friend bool operator<(const Pair& a, const Pair& b) {
    if (a.kernel != b.kernel) return a.kernel < b.kernel;
    return a.covariance < b.covariance;
  }
};

inline bool is_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet r = a;
  r.insert(b.begin(), b.end());
  return r;
}

inline VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(r, r.begin()));
  return r;
}

inline VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet r;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::inserter(r, r.begin()));
  return r;
}

inline void require_subset_of_vertices(const Graph& g, const VertexSet& s) {
  for (const std::string& v : s) g.require_vertex(v);
}

/// range(e) in S implies source(e) in S. On graphs this single vertex
/// condition is both the invariant form X*KX <= K and the hereditary form
/// KX <= XK; the tests check the two routes against each other.
inline bool is_hereditary(const Graph& g, const VertexSet& s) {
  require_subset_of_vertices(g, s);
  for (const Edge& e : g.edges())
    if (s.count(e.rng) && !s.count(e.src)) return false;
  return true;
}

/// Least hereditary superset: fixed point of "add src(e) whenever rng(e)
/// is in the set".
inline VertexSet hereditary_closure(const Graph& g, const VertexSet& s) {
  require_subset_of_vertices(g, s);
  VertexSet r = s;
  bool grew = true;
  while (grew) {
    grew = false;
    for (const Edge& e : g.edges())
      if (r.count(e.rng) && !r.count(e.src)) {
        r.insert(e.src);
        grew = true;
      }
  }
  return r;
}

inline bool vertex_set_order(const VertexSet& a, const VertexSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

/// All hereditary subsets, ordered by (cardinality, lexicographic).
/// Subset scan; fine for the intended desk-scale graphs.
inline std::vector<VertexSet> hereditary_sets(const Graph& g) {
  const auto& vs = g.vertices();
  const int n = g.vertex_count();
  if (n > 24) throw Error("hereditary_sets: graph too large for subset scan");
  std::vector<VertexSet> out;
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    VertexSet s;
    for (int i = 0; i < n; ++i)
      if (mask & (1ul << i)) s.insert(vs[i]);
    if (is_hereditary(g, s)) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), vertex_set_order);
  return out;
}

/// Vertices with zero incoming edges (the kernel of the left action).
inline VertexSet sources(const Graph& g) {
  VertexSet recv;
  for (const Edge& e : g.edges()) recv.insert(e.rng);
  return set_difference(g.vertex_set(), recv);
}

/// Vertices receiving at least one edge.
inline VertexSet receivers(const Graph& g) {
  VertexSet recv;
  for (const Edge& e : g.edges()) recv.insert(e.rng);
  return recv;
}

/// Vertices receiving at least one and finitely many edges: the support of
/// the maximal covariance. Coincides with the receivers on finite graphs.
inline VertexSet regular_vertices(const Graph& g) { return receivers(g); }

/// Induced subgraph on the complement of a hereditary set, with the
/// identity maps recording the surviving vertices and edges.
struct QuotientData {
  Graph quotient;
  std::map<std::string, std::string> vertex_map;  // original -> quotient
  std::map<std::string, std::string> edge_map;    // original -> quotient
};

/// Quotient by a hereditary set: keep the vertices outside k and the edges
/// with source outside k (heredity then keeps their ranges too).
inline QuotientData quotient_graph(const Graph& g, const VertexSet& k) {
  if (!is_hereditary(g, k))
    throw Error("quotient_graph: set is not hereditary");
  QuotientData out;
  std::vector<std::string> vs;
  for (const std::string& v : g.vertices())
    if (!k.count(v)) {
      vs.push_back(v);
      out.vertex_map[v] = v;
    }
  std::vector<Edge> es;
  for (const Edge& e : g.edges())
    if (!k.count(e.src)) {
      es.push_back(e);
      out.edge_map[e.id] = e.id;
    }
  out.quotient = Graph(std::move(vs), std::move(es));
  return out;
}

/// Katsura's ideal J(K) in pullback form:
/// k together with the regular vertices of the quotient graph.
inline VertexSet katsura_ideal_of_kernel(const Graph& g, const VertexSet& k) {
  QuotientData q = quotient_graph(g, k);
  return set_union(k, regular_vertices(q.quotient));
}

struct PairDiagnostics {
  bool valid = true;
  std::vector<std::string> violations;
};

inline std::string format_vertex_set(const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  for (const std::string& v : s) {
    if (!first) out += ",";
    out += v;
    first = false;
  }
  return out + "}";
}

/// Check the pullback-form pair conditions, naming each violated clause.
inline PairDiagnostics validate_pair(const Graph& g, const Pair& p) {
  PairDiagnostics d;
  for (const std::string& v : p.kernel)
    if (!g.has_vertex(v)) {
      d.valid = false;
      d.violations.push_back("kernel vertex not in graph: " + v);
    }
  for (const std::string& v : p.covariance)
    if (!g.has_vertex(v)) {
      d.valid = false;
      d.violations.push_back("covariance vertex not in graph: " + v);
    }
  if (!d.valid) return d;
  if (!is_hereditary(g, p.kernel)) {
    d.valid = false;
    d.violations.push_back("kernel is not hereditary: " +
                           format_vertex_set(p.kernel));
  }
  if (!is_subset(p.kernel, p.covariance)) {
    d.valid = false;
    d.violations.push_back("covariance does not contain the kernel");
  }
  if (d.valid) {
    VertexSet j = katsura_ideal_of_kernel(g, p.kernel);
    VertexSet excess = set_difference(p.covariance, j);
    if (!excess.empty()) {
      d.valid = false;
      d.violations.push_back("covariance exceeds the maximal covariance J" +
                             format_vertex_set(p.kernel) + ": " +
                             format_vertex_set(excess) + " not regular in the quotient");
    }
  }
  return d;
}

inline bool pair_is_valid(const Graph& g, const Pair& p) {
  return validate_pair(g, p).valid;
}

inline void require_valid_pair(const Graph& g, const Pair& p) {
  PairDiagnostics d = validate_pair(g, p);
  if (!d.valid) {
    std::string msg = "invalid pair";
    for (const std::string& v : d.violations) msg += "; " + v;
    throw Error(msg);
  }
}

/// Derived intrinsic view of a pair: the covariance as a subset of the
/// quotient graph's regular vertices. Pairs are stored in pullback form;
/// this is the translation back inside the quotient.
inline VertexSet intrinsic_covariance(const Graph& g, const Pair& p) {
  require_valid_pair(g, p);
  return set_difference(p.covariance, p.kernel);
}

/// Kernel plus T-ideal, the transformed presentation of a pair.
struct TPair {
  VertexSet kernel;
  VertexSet t_ideal;
};

/// Identity on the pullback representation, with the certificate
/// kernel <= t_ideal <= J(kernel) re-verified.
inline TPair to_tpair(const Graph& g, const Pair& p) {
  require_valid_pair(g, p);
  VertexSet j = katsura_ideal_of_kernel(g, p.kernel);
  if (!is_subset(p.kernel, p.covariance) || !is_subset(p.covariance, j))
    throw Error("to_tpair: certificate failed");  // unreachable after validation
  return TPair{p.kernel, p.covariance};
}

/// A graph correspondence is a Hilbert bimodule precisely when the graph is
/// a partial bijection on vertices: every vertex has at most one incoming
/// and at most one outgoing edge.
inline bool is_hilbert_bimodule(const Graph& g) {
  std::map<std::string, int> in, out;
  for (const Edge& e : g.edges()) {
    if (++in[e.rng] > 1) return false;
    if (++out[e.src] > 1) return false;
  }
  return true;
}

}  // namespace pairlat

#endif  // PAIRLAT_IDEAL_HPP_
