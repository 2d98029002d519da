#ifndef PAIRLAT_LINALG_HPP_
#define PAIRLAT_LINALG_HPP_

#include <cmath>
#include <map>
#include <utility>
#include <vector>

#include "pairlat/rational.hpp"

namespace pairlat {

/// Sparse vector over the rationals: index -> nonzero value.
using SparseVec = std::map<int, Rational>;

inline void vec_add_scaled(SparseVec& v, const SparseVec& w,
                           const Rational& c) {
  if (c.is_zero()) return;
  for (const auto& [i, x] : w) {
    auto it = v.find(i);
    if (it == v.end()) {
      v.emplace(i, c * x);
    } else {
      it->second += c * x;
      if (it->second.is_zero()) v.erase(it);
    }
  }
}

/// Square sparse matrix over the rationals. Entries of the Fock operators
/// are real, so the adjoint is the plain transpose.
class SparseMat {
 public:
  SparseMat() : n_(0) {}
  explicit SparseMat(int n) : n_(n) {}

  int dim() const { return n_; }
  bool empty() const { return a_.empty(); }

  const std::map<std::pair<int, int>, Rational>& entries() const { return a_; }

  Rational at(int r, int c) const {
    auto it = a_.find({r, c});
    return it == a_.end() ? Rational() : it->second;
  }

  void set(int r, int c, const Rational& v) {
    if (v.is_zero())
      a_.erase({r, c});
    else
      a_[{r, c}] = v;
  }

  void add(int r, int c, const Rational& v) {
    auto it = a_.find({r, c});
    if (it == a_.end()) {
      if (!v.is_zero()) a_.emplace(std::make_pair(r, c), v);
    } else {
      it->second += v;
      if (it->second.is_zero()) a_.erase(it);
    }
  }

  SparseMat transpose() const {
    SparseMat t(n_);
    for (const auto& [rc, v] : a_) t.a_[{rc.second, rc.first}] = v;
    return t;
  }
  SparseMat adjoint() const { return transpose(); }

  friend SparseMat operator*(const SparseMat& a, const SparseMat& b) {
    SparseMat c(a.n_);
    if (a.a_.empty() || b.a_.empty()) return c;
    // row index of b for the inner loop
    std::map<int, std::vector<std::pair<int, Rational>>> brows;
    for (const auto& [rc, v] : b.a_) brows[rc.first].push_back({rc.second, v});
    for (const auto& [rc, v] : a.a_) {
      auto it = brows.find(rc.second);
      if (it == brows.end()) continue;
      for (const auto& [col, w] : it->second) c.add(rc.first, col, v * w);
    }
    return c;
  }

  friend SparseMat operator+(const SparseMat& a, const SparseMat& b) {
    SparseMat c = a;
    for (const auto& [rc, v] : b.a_) c.add(rc.first, rc.second, v);
    return c;
  }
  friend SparseMat operator-(const SparseMat& a, const SparseMat& b) {
    SparseMat c = a;
    for (const auto& [rc, v] : b.a_) c.add(rc.first, rc.second, -v);
    return c;
  }

  friend bool operator==(const SparseMat& a, const SparseMat& b) {
    return a.n_ == b.n_ && a.a_ == b.a_;
  }

  static SparseMat identity(int n) {
    SparseMat m(n);
    for (int i = 0; i < n; ++i) m.set(i, i, Rational(1));
    return m;
  }

  static SparseMat unit(int n, int r, int c) {
    SparseMat m(n);
    m.set(r, c, Rational(1));
    return m;
  }

  /// Flatten to a vector over indices row * dim + col.
  SparseVec vectorize() const {
    SparseVec v;
    for (const auto& [rc, x] : a_) v[rc.first * n_ + rc.second] = x;
    return v;
  }

  double max_abs() const {
    double m = 0;
    for (const auto& [rc, v] : a_) m = std::max(m, v.abs_double());
    return m;
  }

  /// Max |entry| over columns restricted to indices < guard_cols.
  double max_abs_guarded(int guard_cols) const {
    double m = 0;
    for (const auto& [rc, v] : a_)
      if (rc.second < guard_cols) m = std::max(m, v.abs_double());
    return m;
  }

 private:
  int n_;
  std::map<std::pair<int, int>, Rational> a_;
};

/// Row-reduced echelon basis of a rational subspace, built incrementally.
/// Pivots are the least nonzero index of each stored row; rows are fully
/// back-substituted so membership tests reduce to exact elimination.
class SpanBasis {
 public:
  int dim() const { return static_cast<int>(rows_.size()); }

  /// Fully reduce v against the stored rows.
  SparseVec reduce(SparseVec v) const {
    for (const auto& [pivot, row] : rows_) {
      auto it = v.find(pivot);
      if (it == v.end()) continue;
      vec_add_scaled(v, row, -it->second);
    }
    return v;
  }

  bool contains(const SparseVec& v) const { return reduce(v).empty(); }

  /// Insert v; returns true when the dimension grew.
  bool insert(const SparseVec& v) {
    SparseVec r = reduce(v);
    if (r.empty()) return false;
    int pivot = r.begin()->first;
    Rational lead = r.begin()->second;
    for (auto& [i, x] : r) x /= lead;
    for (auto& [p, row] : rows_) {
      auto it = row.find(pivot);
      if (it == row.end()) continue;
      vec_add_scaled(row, r, -it->second);
    }
    rows_.emplace(pivot, std::move(r));
    return true;
  }

  const std::map<int, SparseVec>& rows() const { return rows_; }

 private:
  std::map<int, SparseVec> rows_;
};

inline int span_dim(const std::vector<SparseVec>& vecs) {
  SpanBasis b;
  for (const auto& v : vecs) b.insert(v);
  return b.dim();
}

/// dim(U + W) via a joint echelon pass.
inline int sum_dim(const SpanBasis& u, const SpanBasis& w) {
  SpanBasis b;
  for (const auto& [p, row] : u.rows()) b.insert(row);
  for (const auto& [p, row] : w.rows()) b.insert(row);
  return b.dim();
}

/// dim(U ∩ W) = dim U + dim W - dim(U + W). Exact, no thresholds.
inline int intersection_dim(const SpanBasis& u, const SpanBasis& w) {
  return u.dim() + w.dim() - sum_dim(u, w);
}

inline bool subspace_leq(const SpanBasis& u, const SpanBasis& w) {
  for (const auto& [p, row] : u.rows())
    if (!w.contains(row)) return false;
  return true;
}

inline bool subspace_eq(const SpanBasis& u, const SpanBasis& w) {
  return u.dim() == w.dim() && subspace_leq(u, w);
}

/// Spectral norm (largest singular value) by power iteration on A^T A.
/// Only used on the floating-point side of the truncated checks; the exact
/// classification path never calls this.
inline double spectral_norm(const SparseMat& m) {
  int n = m.dim();
  if (n == 0 || m.empty()) return 0.0;
  std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
  for (const auto& [rc, v] : m.entries())
    a[rc.first][rc.second] = v.to_double();
  // B = A^T A, symmetric positive semidefinite
  std::vector<std::vector<double>> b(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double s = 0;
      for (int k = 0; k < n; ++k) s += a[k][i] * a[k][j];
      b[i][j] = s;
    }
  // graded start vector, not exactly orthogonal to typical eigenspaces
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = 1.0 + 1e-3 * i;
  double lambda = 0.0;
  for (int iter = 0; iter < 200 + 50 * n; ++iter) {
    std::vector<double> w(n, 0.0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) w[i] += b[i][j] * v[j];
    double norm = 0;
    for (double x : w) norm += x * x;
    norm = std::sqrt(norm);
    if (norm < 1e-300) return 0.0;
    for (double& x : w) x /= norm;
    lambda = norm;
    v = std::move(w);
  }
  return std::sqrt(lambda);
}

}  // namespace pairlat

#endif  // PAIRLAT_LINALG_HPP_
