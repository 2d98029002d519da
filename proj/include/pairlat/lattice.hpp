#ifndef PAIRLAT_LATTICE_HPP_
#define PAIRLAT_LATTICE_HPP_

#include <algorithm>
#include <optional>
#include <vector>

#include "pairlat/graph.hpp"
#include "pairlat/ideal.hpp"

namespace pairlat {

/// All valid kernel--covariance pairs of a graph with order matrix and
/// Hasse covers. The pair order in `pairs` is a linear extension of `leq`.
struct PairLattice {
  std::vector<Pair> pairs;
  std::vector<std::vector<bool>> leq;
  std::vector<std::pair<int, int>> covers;

  int index_of(const Pair& p) const {
    for (int i = 0; i < static_cast<int>(pairs.size()); ++i)
      if (pairs[i] == p) return i;
    return -1;
  }
};

/// The order isomorphism in pullback form: componentwise set inclusion.
inline bool pair_leq(const Graph& g, const Pair& p, const Pair& q) {
  require_valid_pair(g, p);
  require_valid_pair(g, q);
  return is_subset(p.kernel, q.kernel) &&
         is_subset(p.covariance, q.covariance);
}

inline bool pair_order_cmp(const Pair& a, const Pair& b) {
  if (a.kernel.size() != b.kernel.size())
    return a.kernel.size() < b.kernel.size();
  if (a.kernel != b.kernel) return a.kernel < b.kernel;
  if (a.covariance.size() != b.covariance.size())
    return a.covariance.size() < b.covariance.size();
  return a.covariance < b.covariance;
}

/// Enumerate every valid pair: for each hereditary kernel, the covariance
/// runs over the subsets of the quotient's regular vertices (in pullback
/// form). Deterministic output; covers are the transitive reduction.
inline PairLattice enumerate_pairs(const Graph& g) {
  PairLattice lat;
  for (const VertexSet& k : hereditary_sets(g)) {
    QuotientData q = quotient_graph(g, k);
    std::vector<std::string> reg;
    for (const std::string& v : regular_vertices(q.quotient)) reg.push_back(v);
    const int m = static_cast<int>(reg.size());
    for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
      VertexSet cov = k;
      for (int i = 0; i < m; ++i)
        if (mask & (1ul << i)) cov.insert(reg[i]);
      lat.pairs.push_back(Pair{k, std::move(cov)});
    }
  }
  std::sort(lat.pairs.begin(), lat.pairs.end(), pair_order_cmp);

  // bitmask encoding over the vertex list; inclusion becomes two AND tests
  std::map<std::string, int> vbit;
  for (int i = 0; i < g.vertex_count(); ++i) vbit[g.vertices()[i]] = i;
  auto to_mask = [&](const VertexSet& s) {
    unsigned long m = 0;
    for (const std::string& v : s) m |= 1ul << vbit.at(v);
    return m;
  };
  const int n = static_cast<int>(lat.pairs.size());
  std::vector<unsigned long> kmask(n), cmask(n);
  for (int i = 0; i < n; ++i) {
    kmask[i] = to_mask(lat.pairs[i].kernel);
    cmask[i] = to_mask(lat.pairs[i].covariance);
  }
  lat.leq.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      lat.leq[i][j] =
          (kmask[i] & ~kmask[j]) == 0 && (cmask[i] & ~cmask[j]) == 0;

  // The pair order is a linear extension, so the covers of i are the
  // minimal elements of its strict up-set, found by an ascending scan.
  for (int i = 0; i < n; ++i) {
    std::vector<int> covers_of_i;
    for (int j = i + 1; j < n; ++j) {
      if (!lat.leq[i][j]) continue;
      bool dominated = false;
      for (int c : covers_of_i)
        if (lat.leq[c][j]) {
          dominated = true;
          break;
        }
      if (!dominated) covers_of_i.push_back(j);
    }
    for (int j : covers_of_i) lat.covers.push_back({i, j});
  }
  return lat;
}

/// Greatest lower bound: intersect kernels, then cut the intersected
/// covariances down by the maximal covariance of the new kernel.
inline Pair meet(const Graph& g, const std::vector<Pair>& ps) {
  if (ps.empty()) throw Error("meet: empty list of pairs");
  for (const Pair& p : ps) require_valid_pair(g, p);
  VertexSet k = ps.front().kernel;
  VertexSet c = ps.front().covariance;
  for (size_t i = 1; i < ps.size(); ++i) {
    k = set_intersection(k, ps[i].kernel);
    c = set_intersection(c, ps[i].covariance);
  }
  return Pair{k, set_intersection(c, katsura_ideal_of_kernel(g, k))};
}

/// Least upper bound by the forcing loop: a covariance vertex with no
/// surviving incoming edge in the quotient cannot stay covariant and is
/// forced into the kernel, possibly cascading. Terminates since the kernel
/// grows monotonically inside a finite vertex set.
inline Pair join(const Graph& g, const std::vector<Pair>& ps) {
  if (ps.empty()) throw Error("join: empty list of pairs");
  for (const Pair& p : ps) require_valid_pair(g, p);
  VertexSet k;
  VertexSet c;
  for (const Pair& p : ps) {
    k = set_union(k, p.kernel);
    c = set_union(c, p.covariance);
  }
  k = hereditary_closure(g, k);
  c = set_union(c, k);
  for (;;) {
    QuotientData q = quotient_graph(g, k);
    VertexSet forced;
    for (const std::string& v : set_difference(c, k))
      if (incoming(q.quotient, v).empty()) forced.insert(v);
    if (forced.empty()) break;
    k = hereditary_closure(g, set_union(k, forced));
    c = set_union(c, k);
  }
  return Pair{k, c};
}

/// Greatest pair with kernel k lying below `target`: intersect the target's
/// covariance with the maximal covariance over k.
inline Pair max_covariance_from(const Graph& g, const VertexSet& k,
                                const Pair& target) {
  require_valid_pair(g, target);
  if (!is_hereditary(g, k))
    throw Error("max_covariance_from: kernel is not hereditary");
  if (!is_subset(k, target.kernel))
    throw Error("max_covariance_from: kernel not below target kernel");
  QuotientData q = quotient_graph(g, k);
  VertexSet reg = regular_vertices(q.quotient);
  return Pair{k, set_union(k, set_intersection(reg, target.covariance))};
}

/// Least pair with kernel l above p, when a connecting morphism exists at
/// all: the pushed-forward covariance must stay regular in the quotient by
/// l, otherwise no pair over l lies above p. Absence is a value, not an
/// error.
inline std::optional<Pair> min_covariance_to(const Graph& g, const Pair& p,
                                             const VertexSet& l) {
  require_valid_pair(g, p);
  if (!is_hereditary(g, l))
    throw Error("min_covariance_to: target kernel is not hereditary");
  if (!is_subset(p.kernel, l))
    throw Error("min_covariance_to: pair kernel not below target kernel");
  QuotientData q = quotient_graph(g, l);
  VertexSet reg = regular_vertices(q.quotient);
  VertexSet pushed = set_difference(set_union(p.covariance, l), l);
  if (!is_subset(pushed, reg)) return std::nullopt;
  return Pair{l, set_union(p.covariance, l)};
}

/// The gauge-invariant ideals of O(p): the order filter of pairs above p.
inline std::vector<Pair> gauge_invariant_ideals(const Graph& g,
                                                const Pair& p) {
  require_valid_pair(g, p);
  PairLattice lat = enumerate_pairs(g);
  std::vector<Pair> out;
  for (const Pair& q : lat.pairs)
    if (is_subset(p.kernel, q.kernel) &&
        is_subset(p.covariance, q.covariance))
      out.push_back(q);
  return out;
}

}  // namespace pairlat

#endif  // PAIRLAT_LATTICE_HPP_
