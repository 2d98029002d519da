#ifndef PAIRLAT_GRAPH_HPP_
#define PAIRLAT_GRAPH_HPP_

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace pairlat {

/// Domain error with a human-readable message naming the offending
/// identifier. The CLI maps this to exit code 1 (invalid input).
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Requested computation is mathematically out of range for the exact
/// engine (e.g. an untruncated Fock space of a cyclic graph). Exit code 2.
struct UnsupportedError : Error {
  explicit UnsupportedError(const std::string& what) : Error(what) {}
};

/// Subset of a graph's vertices, by id.
using VertexSet = std::set<std::string>;

struct Edge {
  std::string id;
  std::string src;  // source vertex (pairing side)
  std::string rng;  // range vertex (left-action side)

  friend bool operator==(const Edge& a, const Edge& b) {
    return a.id == b.id && a.src == b.src && a.rng == b.rng;
  }
};

/// Finite directed graph with named vertices and edges.
///
/// Convention table (this follows the correspondence picture, which is the
/// opposite of much of the graph-algebra literature):
///   - a vertex acts on edges by RANGE: incoming(v) = { e : rng(e) = v }
///   - the inner product pairs by SOURCE
///   - "source vertex"  = receives no edge (zero incoming)
///   - "regular vertex" = receives at least one and finitely many edges
/// Parallel edges are allowed and meaningful. Values are immutable after
/// construction and all operations on them are pure.
class Graph {
 public:
  Graph() = default;

  Graph(std::vector<std::string> vertices, std::vector<Edge> edges)
      : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    for (int i = 0; i < static_cast<int>(vertices_.size()); ++i) {
      if (!vindex_.emplace(vertices_[i], i).second)
        throw Error("duplicate vertex id: " + vertices_[i]);
    }
    for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
      const Edge& e = edges_[i];
      if (!eindex_.emplace(e.id, i).second)
        throw Error("duplicate edge id: " + e.id);
      if (!vindex_.count(e.src))
        throw Error("edge " + e.id + ": dangling endpoint " + e.src);
      if (!vindex_.count(e.rng))
        throw Error("edge " + e.id + ": dangling endpoint " + e.rng);
    }
  }

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  bool has_vertex(const std::string& v) const { return vindex_.count(v) > 0; }
  bool has_edge(const std::string& e) const { return eindex_.count(e) > 0; }

  const Edge& edge(const std::string& id) const {
    auto it = eindex_.find(id);
    if (it == eindex_.end()) throw Error("unknown edge: " + id);
    return edges_[it->second];
  }

  void require_vertex(const std::string& v) const {
    if (!has_vertex(v)) throw Error("unknown vertex: " + v);
  }

  VertexSet vertex_set() const {
    return VertexSet(vertices_.begin(), vertices_.end());
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::string> vertices_;  // document order
  std::vector<Edge> edges_;            // document order
  std::map<std::string, int> vindex_;
  std::map<std::string, int> eindex_;
};

/// Edges a vertex does not annihilate under the left action, i.e. the edges
/// with range v.
inline std::set<std::string> incoming(const Graph& g, const std::string& v) {
  g.require_vertex(v);
  std::set<std::string> out;
  for (const Edge& e : g.edges())
    if (e.rng == v) out.insert(e.id);
  return out;
}

/// Composable edge sequence; edges are listed range side first, so
/// src(edges[i]) = rng(edges[i+1]). A length-0 path is a single vertex.
struct Path {
  std::vector<std::string> edges;
  std::string vertex;  // set only for length 0

  int length() const { return static_cast<int>(edges.size()); }

  friend bool operator==(const Path& a, const Path& b) {
    return a.edges == b.edges && a.vertex == b.vertex;
  }
  friend bool operator<(const Path& a, const Path& b) {
    if (a.edges.size() != b.edges.size())
      return a.edges.size() < b.edges.size();
    if (a.edges != b.edges) return a.edges < b.edges;
    return a.vertex < b.vertex;
  }
};

inline std::string path_range(const Graph& g, const Path& p) {
  if (p.edges.empty()) return p.vertex;
  return g.edge(p.edges.front()).rng;
}

inline std::string path_source(const Graph& g, const Path& p) {
  if (p.edges.empty()) return p.vertex;
  return g.edge(p.edges.back()).src;
}

inline bool path_is_composable(const Graph& g, const Path& p) {
  if (p.edges.empty()) return g.has_vertex(p.vertex);
  for (size_t i = 0; i + 1 < p.edges.size(); ++i)
    if (g.edge(p.edges[i]).src != g.edge(p.edges[i + 1]).rng) return false;
  return true;
}

/// All composable paths of length <= n, ordered by (length, lexicographic
/// edge-id sequence); the length-0 paths are the vertices.
inline std::vector<Path> paths_up_to(const Graph& g, int n) {
  if (n < 0) throw Error("paths_up_to: negative length bound");
  std::vector<Path> out;
  std::vector<Path> level;
  for (const std::string& v : g.vertices()) level.push_back(Path{{}, v});
  std::sort(level.begin(), level.end());
  out.insert(out.end(), level.begin(), level.end());
  for (int len = 1; len <= n && !level.empty(); ++len) {
    std::vector<Path> next;
    for (const Path& p : level) {
      const std::string r = path_range(g, p);
      for (const Edge& e : g.edges()) {
        if (e.src != r) continue;  // prepend e at the range side
        Path q;
        q.edges.reserve(p.edges.size() + 1);
        q.edges.push_back(e.id);
        q.edges.insert(q.edges.end(), p.edges.begin(), p.edges.end());
        next.push_back(std::move(q));
      }
    }
    std::sort(next.begin(), next.end());
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

inline bool is_acyclic(const Graph& g) {
  // DFS over src -> rng with colors
  std::map<std::string, int> color;  // 0 white, 1 gray, 2 black
  std::map<std::string, std::vector<std::string>> succ;
  for (const Edge& e : g.edges()) succ[e.src].push_back(e.rng);
  std::vector<std::pair<std::string, size_t>> stack;
  for (const std::string& start : g.vertices()) {
    if (color[start] != 0) continue;
    stack.push_back({start, 0});
    color[start] = 1;
    while (!stack.empty()) {
      auto& [v, i] = stack.back();
      auto& nexts = succ[v];
      if (i < nexts.size()) {
        const std::string& w = nexts[i++];
        if (color[w] == 1) return false;
        if (color[w] == 0) {
          color[w] = 1;
          stack.push_back({w, 0});
        }
      } else {
        color[v] = 2;
        stack.pop_back();
      }
    }
  }
  return true;
}

/// All composable paths of an acyclic graph (finitely many).
inline std::vector<Path> all_paths(const Graph& g) {
  if (!is_acyclic(g))
    throw UnsupportedError("acyclic required: graph has a cycle");
  // Path length is bounded by the vertex count for acyclic graphs.
  return paths_up_to(g, std::max(0, g.vertex_count() - 1) + 1);
}

}  // namespace pairlat

#endif  // PAIRLAT_GRAPH_HPP_
