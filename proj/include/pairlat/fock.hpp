#ifndef PAIRLAT_FOCK_HPP_
#define PAIRLAT_FOCK_HPP_

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pairlat/graph.hpp"
#include "pairlat/ideal.hpp"
#include "pairlat/linalg.hpp"

namespace pairlat {

/// Matrix form of the Fock representation on the path basis.
///
/// Basis vectors are the composable paths (ordered as in paths_up_to);
/// P_v fixes the paths with range v, S_e prepends e when composable. For an
/// acyclic graph without truncation the matrices are exact and every
/// representation relation holds on the nose. With a truncation at N the
/// shifts kill the top level, so relation checks are only meaningful on the
/// guarded sub-basis of paths of length < N.
struct FockRep {
  Graph graph;
  std::optional<int> truncation;
  std::vector<Path> basis;
  std::map<std::string, SparseMat> vertex_ops;  // v -> P_v
  std::map<std::string, SparseMat> edge_ops;    // e -> S_e
  int guard_cols = 0;  // basis prefix with length < truncation (all if exact)

  int dim() const { return static_cast<int>(basis.size()); }
};

inline FockRep build_fock(const Graph& g,
                          std::optional<int> truncation = std::nullopt) {
  if (!truncation && !is_acyclic(g))
    throw UnsupportedError(
        "acyclic required: cyclic graph needs a truncation level");
  if (truncation && *truncation < 0)
    throw Error("build_fock: negative truncation");

  if (truncation) {
    // path counts by range vertex, level by level, before enumerating
    const long long cap = 100000;
    std::map<std::string, long long> count;
    for (const std::string& v : g.vertices()) count[v] = 1;
    long long total = g.vertex_count();
    for (int level = 1; level <= *truncation && total <= cap; ++level) {
      std::map<std::string, long long> next;
      for (const Edge& e : g.edges()) {
        next[e.rng] += count[e.src];
        next[e.rng] = std::min(next[e.rng], cap + 1);
      }
      for (const auto& [v, c] : next) total = std::min(total + c, cap + 1);
      count = std::move(next);
    }
    if (total > cap)
      throw Error("build_fock: truncated path basis exceeds 100000 vectors");
  }

  FockRep f;
  f.graph = g;
  f.truncation = truncation;
  f.basis = truncation ? paths_up_to(g, *truncation) : all_paths(g);

  const int n = static_cast<int>(f.basis.size());
  std::map<Path, int> index;
  for (int i = 0; i < n; ++i) index[f.basis[i]] = i;

  f.guard_cols = n;
  if (truncation) {
    f.guard_cols = 0;
    for (const Path& p : f.basis)
      if (p.length() < *truncation) ++f.guard_cols;
  }

  for (const std::string& v : g.vertices()) {
    SparseMat pv(n);
    for (int i = 0; i < n; ++i)
      if (path_range(g, f.basis[i]) == v) pv.set(i, i, Rational(1));
    f.vertex_ops.emplace(v, std::move(pv));
  }
  for (const Edge& e : g.edges()) {
    SparseMat se(n);
    for (int i = 0; i < n; ++i) {
      const Path& p = f.basis[i];
      if (path_range(g, p) != e.src) continue;
      if (truncation && p.length() >= *truncation) continue;  // top killed
      Path q;
      q.edges.reserve(p.edges.size() + 1);
      q.edges.push_back(e.id);
      q.edges.insert(q.edges.end(), p.edges.begin(), p.edges.end());
      se.set(index.at(q), i, Rational(1));
    }
    f.edge_ops.emplace(e.id, std::move(se));
  }
  return f;
}

struct RelationReport {
  struct Line {
    std::string name;
    double max_defect;
  };
  std::vector<Line> lines;
  std::optional<int> truncation;
  int guarded_max_length = 0;  // relations checked on paths of this length or less

  double max_defect() const {
    double m = 0;
    for (const auto& l : lines) m = std::max(m, l.max_defect);
    return m;
  }
};

/// Verify the representation relations on the guarded sub-basis and report
/// the max absolute defect per relation family. Exact zero is expected;
/// nonzero defects would flag a broken construction, never a tolerance.
inline RelationReport check_relations(const FockRep& f) {
  const Graph& g = f.graph;
  const int n = f.dim();
  const int guard = f.guard_cols;
  RelationReport rep;
  rep.truncation = f.truncation;
  rep.guarded_max_length = f.truncation ? *f.truncation - 1
                                        : std::max(0, g.vertex_count() - 1);

  double d_isometry = 0, d_range = 0, d_source = 0, d_vertex = 0, d_sum = 0;
  for (const auto& [eid, se] : f.edge_ops) {
    const Edge& e = g.edge(eid);
    for (const auto& [fid, sf] : f.edge_ops) {
      SparseMat lhs = se.adjoint() * sf;
      if (eid == fid) lhs = lhs - f.vertex_ops.at(e.src);
      d_isometry = std::max(d_isometry, lhs.max_abs_guarded(guard));
    }
    for (const auto& [v, pv] : f.vertex_ops) {
      SparseMat range_rel = pv * se;
      if (v == e.rng) range_rel = range_rel - se;
      d_range = std::max(d_range, range_rel.max_abs_guarded(guard));
      SparseMat source_rel = se * pv;
      if (v == e.src) source_rel = source_rel - se;
      d_source = std::max(d_source, source_rel.max_abs_guarded(guard));
    }
  }
  SparseMat sum(n);
  for (const auto& [v, pv] : f.vertex_ops) {
    for (const auto& [w, pw] : f.vertex_ops) {
      SparseMat rel = pv * pw;
      if (v == w) rel = rel - pv;
      d_vertex = std::max(d_vertex, rel.max_abs_guarded(guard));
    }
    sum = sum + pv;
  }
  d_sum = (sum - SparseMat::identity(n)).max_abs_guarded(guard);

  rep.lines.push_back({"edge_isometry", d_isometry});
  rep.lines.push_back({"range_compatibility", d_range});
  rep.lines.push_back({"source_compatibility", d_source});
  rep.lines.push_back({"vertex_orthogonality", d_vertex});
  rep.lines.push_back({"vertex_sum_identity", d_sum});
  return rep;
}

/// Linear basis of an adjoint-closed algebra of matrices (no unit adjoined),
/// kept alongside the echelon form of its vectorization.
struct SpannedAlgebra {
  int ambient = 0;
  std::vector<SparseMat> basis;
  SpanBasis span;

  int dimension() const { return span.dim(); }

  bool try_insert(const SparseMat& m) {
    if (!span.insert(m.vectorize())) return false;
    basis.push_back(m);
    return true;
  }
};

/// Smallest adjoint-closed algebra containing the generators, by alternating
/// products against the generator set and rank-revealing basis extension
/// until the dimension stabilizes. Deterministic for a fixed generator
/// order.
inline SpannedAlgebra span_closure(const std::vector<SparseMat>& generators) {
  SpannedAlgebra alg;
  alg.ambient = generators.empty() ? 0 : generators.front().dim();
  for (const SparseMat& m : generators)
    if (m.dim() != alg.ambient)
      throw Error("span_closure: generators of unequal size");

  std::vector<SparseMat> seeds;
  for (const SparseMat& m : generators) {
    seeds.push_back(m);
    seeds.push_back(m.adjoint());
  }
  for (const SparseMat& m : seeds) alg.try_insert(m);

  size_t processed = 0;
  while (processed < alg.basis.size()) {
    SparseMat b = alg.basis[processed++];
    for (const SparseMat& s : seeds) {
      alg.try_insert(b * s);
      alg.try_insert(s * b);
    }
  }
  return alg;
}

/// Covariance generators D_v = P_v - sum_{rng(e)=v} S_e S_e* for v in iset,
/// sorted by vertex id. On the untruncated Fock space of an acyclic graph
/// each D_v is the rank-one projection onto the length-0 path at v, and the
/// two-sided ideal they generate is exactly the compact block supported on
/// the paths with source in iset.
inline std::vector<SparseMat> covariance_ideal_matrices(const FockRep& f,
                                                        const VertexSet& iset) {
  VertexSet reg = regular_vertices(f.graph);
  for (const std::string& v : iset)
    if (!reg.count(v))
      throw Error("covariance generator at non-regular vertex: " + v);
  std::vector<SparseMat> out;
  for (const std::string& v : iset) {  // VertexSet iterates sorted by id
    SparseMat d = f.vertex_ops.at(v);
    for (const Edge& e : f.graph.edges())
      if (e.rng == v) {
        const SparseMat& se = f.edge_ops.at(e.id);
        d = d - se * se.adjoint();
      }
    out.push_back(std::move(d));
  }
  return out;
}

/// Smallest subspace containing the seeds, closed under adjoints and under
/// left/right multiplication by the algebra's basis.
inline SpannedAlgebra ideal_closure(const SpannedAlgebra& alg,
                                    const std::vector<SparseMat>& seeds) {
  SpannedAlgebra ideal;
  ideal.ambient = alg.ambient;
  for (const SparseMat& m : seeds) {
    if (m.dim() != alg.ambient)
      throw Error("ideal_closure: seed outside the ambient dimension");
    ideal.try_insert(m);
    ideal.try_insert(m.adjoint());
  }
  size_t processed = 0;
  while (processed < ideal.basis.size()) {
    SparseMat j = ideal.basis[processed++];
    for (const SparseMat& a : alg.basis) {
      ideal.try_insert(a * j);
      ideal.try_insert(j * a);
    }
  }
  return ideal;
}

/// Toeplitz generators of a Fock representation, sorted by kind then id so
/// downstream span closures are deterministic.
inline std::vector<SparseMat> toeplitz_generators(const FockRep& f) {
  std::vector<SparseMat> gens;
  std::vector<std::string> vs = f.graph.vertices();
  std::sort(vs.begin(), vs.end());
  for (const std::string& v : vs) gens.push_back(f.vertex_ops.at(v));
  std::vector<std::string> es;
  for (const Edge& e : f.graph.edges()) es.push_back(e.id);
  std::sort(es.begin(), es.end());
  for (const std::string& e : es) gens.push_back(f.edge_ops.at(e));
  return gens;
}

/// Dimension of the center of T/J, solved as the commutant condition
/// modulo the ideal in a basis complementary to J.
inline int quotient_center_dim(const SpannedAlgebra& t,
                               const SpannedAlgebra& j) {
  const int m = t.dimension();
  if (m == 0) return 0;
  const int amb2 = t.ambient * t.ambient;
  // For each algebra basis element t_i, the concatenation over all b of the
  // commutator [t_i, b] reduced mod J. Solutions of sum c_i row_i = 0 are
  // the central elements of the quotient (J itself always solves).
  SpanBasis constraints;
  int rank = 0;
  for (int i = 0; i < m; ++i) {
    SparseVec row;
    for (int bidx = 0; bidx < m; ++bidx) {
      SparseMat comm = t.basis[i] * t.basis[bidx] - t.basis[bidx] * t.basis[i];
      SparseVec red = j.span.reduce(comm.vectorize());
      for (const auto& [pos, val] : red) row[bidx * amb2 + pos] = val;
    }
    if (constraints.insert(row)) ++rank;
  }
  int solutions = m - rank;
  return solutions - j.dimension();
}

struct RealizeDims {
  long long toeplitz = 0;
  long long ideal = 0;
  long long quotient = 0;
  long long center = 0;
};

/// Exact finite-dimensional realization of O(g, p) for acyclic graphs:
/// quotient by the kernel, span-close the Toeplitz generators on the
/// untruncated Fock space, close the covariance ideal, subtract.
inline RealizeDims realize_dims(const Graph& g, const Pair& p) {
  require_valid_pair(g, p);
  if (!is_acyclic(g))
    throw UnsupportedError("acyclic required: exact realization");
  QuotientData q = quotient_graph(g, p.kernel);
  FockRep f = build_fock(q.quotient);
  SpannedAlgebra t = span_closure(toeplitz_generators(f));
  VertexSet iset = set_difference(p.covariance, p.kernel);
  SpannedAlgebra j = ideal_closure(t, covariance_ideal_matrices(f, iset));
  RealizeDims d;
  d.toeplitz = t.dimension();
  d.ideal = j.dimension();
  d.quotient = d.toeplitz - d.ideal;
  d.center = quotient_center_dim(t, j);
  return d;
}

struct CpDimensions {
  long long dim = 0;
  long long center_dim = 0;
};

inline CpDimensions relative_cp_dimension(const Graph& g, const Pair& p) {
  RealizeDims d = realize_dims(g, p);
  return CpDimensions{d.quotient, d.center};
}

struct KernelCovarianceReport {
  int kernel_intersection_dim = 0;      // must be 0
  int covariance_intersection_dim = 0;  // must equal expected_dim
  int expected_dim = 0;
  bool kernel_ok = false;
  bool covariance_ok = false;

  bool ok() const { return kernel_ok && covariance_ok; }
};

/// Recover the pair from its relative Cuntz-Pimsner algebra at matrix
/// level: the coefficient span must miss the covariance ideal entirely, and
/// the covariance generators inside the ideal must be exactly the
/// prescribed ones. Both are exact subspace rank computations.
inline KernelCovarianceReport verify_kernel_covariance(const Graph& g,
                                                       const Pair& p) {
  require_valid_pair(g, p);
  if (!is_acyclic(g))
    throw UnsupportedError("acyclic required: kernel/covariance recovery");
  QuotientData q = quotient_graph(g, p.kernel);
  FockRep f = build_fock(q.quotient);
  SpannedAlgebra t = span_closure(toeplitz_generators(f));
  VertexSet iset = set_difference(p.covariance, p.kernel);
  SpannedAlgebra j = ideal_closure(t, covariance_ideal_matrices(f, iset));

  KernelCovarianceReport rep;

  SpanBasis coeff;
  for (const std::string& v : q.quotient.vertices())
    coeff.insert(f.vertex_ops.at(v).vectorize());
  rep.kernel_intersection_dim = intersection_dim(coeff, j.span);
  rep.kernel_ok = rep.kernel_intersection_dim == 0;

  VertexSet reg = regular_vertices(q.quotient);
  std::vector<SparseMat> all_d = covariance_ideal_matrices(f, reg);
  SpanBasis dspan;
  for (const SparseMat& d : all_d) dspan.insert(d.vectorize());
  rep.covariance_intersection_dim = intersection_dim(dspan, j.span);

  SpanBasis expected;
  for (const SparseMat& d : covariance_ideal_matrices(f, iset))
    expected.insert(d.vectorize());
  rep.expected_dim = expected.dim();

  // The intersection must be exactly the prescribed span: equal dimension
  // and the prescribed generators inside the ideal.
  bool prescribed_inside = true;
  for (const auto& [pos, row] : expected.rows())
    if (!j.span.contains(row)) prescribed_inside = false;
  rep.covariance_ok =
      prescribed_inside && rep.covariance_intersection_dim == rep.expected_dim;
  return rep;
}

struct EmbeddingReport {
  int level = 0;
  int pairs_checked = 0;
  double max_gap = 0.0;  // max |norm at level n - norm at level n+1|
  bool vacuous() const { return pairs_checked == 0; }
};

/// Katsura's embedding at level n: compacts between length-n paths weighted
/// by a regular-vertex projection keep their norm one tensor level up,
/// checked on the spanning matrix units within 1e-9.
inline EmbeddingReport katsura_embedding_check(const Graph& g, int n, int N) {
  if (n < 0) throw Error("katsura_embedding_check: negative level");
  if (n + 1 > N) throw Error("katsura_embedding_check: truncation too small");
  std::vector<Path> paths = paths_up_to(g, N);
  VertexSet reg = regular_vertices(g);

  std::vector<Path> level_n;
  for (const Path& p : paths)
    if (p.length() == n) level_n.push_back(p);
  std::map<Path, int> index;
  int idx = 0;
  for (const Path& p : paths) index[p] = idx++;
  auto append_edge = [](const Path& p, const std::string& eid) {
    Path q = p;
    q.vertex.clear();
    q.edges.push_back(eid);
    return q;
  };

  const int dim = static_cast<int>(paths.size());
  EmbeddingReport rep;
  rep.level = n;
  for (const Path& p : level_n) {
    for (const Path& q : level_n) {
      const std::string v = path_source(g, p);
      if (path_source(g, q) != v || !reg.count(v)) continue;
      // |p><q| weighted by the projection at v, and its image one level up
      SparseMat kn(dim);
      kn.set(index.at(p), index.at(q), Rational(1));
      SparseMat kn1(dim);
      for (const Edge& e : g.edges()) {
        if (e.rng != v) continue;
        kn1.set(index.at(append_edge(p, e.id)), index.at(append_edge(q, e.id)),
                Rational(1));
      }
      double gap = std::abs(spectral_norm(kn) - spectral_norm(kn1));
      rep.max_gap = std::max(rep.max_gap, gap);
      ++rep.pairs_checked;
    }
  }
  return rep;
}

}  // namespace pairlat

#endif  // PAIRLAT_FOCK_HPP_
