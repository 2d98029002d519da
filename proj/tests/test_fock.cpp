#include <catch2/catch_amalgamated.hpp>

#include "corpus.hpp"
#include "oracles.hpp"
#include "pairlat/fock.hpp"
#include "pairlat/lattice.hpp"

using namespace pairlat;

namespace {

int basis_index(const FockRep& f, const Path& p) {
  for (int i = 0; i < f.dim(); ++i)
    if (f.basis[i] == p) return i;
  return -1;
}

SpanBasis span_of(const std::vector<SparseMat>& mats) {
  SpanBasis b;
  for (const SparseMat& m : mats) b.insert(m.vectorize());
  return b;
}

}  // namespace

TEST_CASE("build_fock on the arrow graph") {
  FockRep f = build_fock(corpus::arrow());
  REQUIRE(f.dim() == 3);  // a, b, z
  int ia = basis_index(f, Path{{}, "a"});
  int ib = basis_index(f, Path{{}, "b"});
  int iz = basis_index(f, Path{{"z"}, ""});
  REQUIRE(ia >= 0);
  REQUIRE(ib >= 0);
  REQUIRE(iz >= 0);

  const SparseMat& sz = f.edge_ops.at("z");
  CHECK(sz.at(iz, ia) == Rational(1));  // S_z delta_a = delta_z
  CHECK(sz.entries().size() == 1);

  const SparseMat& pb = f.vertex_ops.at("b");
  CHECK(pb.at(ib, ib) == Rational(1));
  CHECK(pb.at(iz, iz) == Rational(1));  // range of the path z is b
  CHECK(pb.at(ia, ia) == Rational(0));
}

TEST_CASE("build_fock truncates cyclic graphs with the top level killed") {
  FockRep f = build_fock(corpus::loop(), 3);
  REQUIRE(f.dim() == 4);  // a, x, xx, xxx
  CHECK(f.basis[3].edges == std::vector<std::string>{"x", "x", "x"});
  const SparseMat& sx = f.edge_ops.at("x");
  // shifts every level up once, kills the top
  CHECK(sx.at(1, 0) == Rational(1));
  CHECK(sx.at(2, 1) == Rational(1));
  CHECK(sx.at(3, 2) == Rational(1));
  CHECK(sx.entries().size() == 3);

  CHECK_THROWS_AS(build_fock(corpus::loop()), UnsupportedError);
}

TEST_CASE("build_fock on an edgeless graph is diagonal units") {
  FockRep f = build_fock(Graph({"a", "b"}, {}));
  CHECK(f.dim() == 2);
  CHECK(f.edge_ops.empty());
  SparseMat sum = f.vertex_ops.at("a") + f.vertex_ops.at("b");
  CHECK(sum == SparseMat::identity(2));
}

TEST_CASE("check_relations reports exact zeros") {
  for (const auto& [name, g] : corpus::curated()) {
    INFO(name);
    FockRep f = is_acyclic(g) ? build_fock(g) : build_fock(g, 3);
    RelationReport rep = check_relations(f);
    REQUIRE(rep.lines.size() == 5);
    CHECK(rep.max_defect() == 0.0);
  }
  RelationReport rep = check_relations(build_fock(corpus::loop(), 3));
  CHECK(rep.max_defect() == 0.0);
  CHECK(rep.guarded_max_length == 2);
}

TEST_CASE("span_closure of the arrow Toeplitz generators has dimension 5") {
  FockRep f = build_fock(corpus::arrow());
  SpannedAlgebra t = span_closure(toeplitz_generators(f));
  CHECK(t.dimension() == 5);  // M_2 block plus the scalar at delta_b
}

TEST_CASE("span_closure basics") {
  SparseMat proj = SparseMat::unit(3, 1, 1);
  CHECK(span_closure({proj}).dimension() == 1);

  std::vector<SparseMat> units;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) units.push_back(SparseMat::unit(2, i, j));
  CHECK(span_closure(units).dimension() == 4);

  CHECK(span_closure({}).dimension() == 0);
  CHECK_THROWS_AS(span_closure({SparseMat(2), SparseMat(3)}), Error);
}

TEST_CASE("span_closure is closed under products and adjoints") {
  for (const auto& g :
       {corpus::arrow(), Graph({"a", "b", "c"},
                               {Edge{"e1", "a", "b"}, Edge{"e2", "b", "c"}})}) {
    FockRep f = build_fock(g);
    SpannedAlgebra t = span_closure(toeplitz_generators(f));
    for (const SparseMat& x : t.basis) {
      CHECK(t.span.contains(x.adjoint().vectorize()));
      for (const SparseMat& y : t.basis)
        CHECK(t.span.contains((x * y).vectorize()));
    }
  }
}

TEST_CASE("covariance generators are the rank-one vacuum projections") {
  FockRep f = build_fock(corpus::arrow());
  std::vector<SparseMat> ds = covariance_ideal_matrices(f, {"b"});
  REQUIRE(ds.size() == 1);
  int ib = basis_index(f, Path{{}, "b"});
  CHECK(ds[0] == SparseMat::unit(f.dim(), ib, ib));

  CHECK(covariance_ideal_matrices(f, {}).empty());
  CHECK_THROWS_AS(covariance_ideal_matrices(f, {"a"}), Error);

  // truncated variant stays a difference of projections on guarded levels
  FockRep f1 = build_fock(corpus::two_loops(), 2);
  std::vector<SparseMat> d1 = covariance_ideal_matrices(f1, {"a"});
  REQUIRE(d1.size() == 1);
  int ia = basis_index(f1, Path{{}, "a"});
  CHECK(d1[0].at(ia, ia) == Rational(1));
}

TEST_CASE("ideal_closure examples") {
  FockRep f = build_fock(corpus::arrow());
  SpannedAlgebra t = span_closure(toeplitz_generators(f));

  // frozen from the dense oracle: D_b spans a one-dimensional ideal
  SpannedAlgebra j = ideal_closure(t, covariance_ideal_matrices(f, {"b"}));
  CHECK(j.dimension() == 1);

  CHECK(ideal_closure(t, {}).dimension() == 0);

  // the identity of the M_2 block generates that whole block
  int ia = basis_index(f, Path{{}, "a"});
  int iz = basis_index(f, Path{{"z"}, ""});
  SparseMat block_id(f.dim());
  block_id.set(ia, ia, Rational(1));
  block_id.set(iz, iz, Rational(1));
  SpannedAlgebra jb = ideal_closure(t, {block_id});
  CHECK(jb.dimension() == 4);
}

TEST_CASE("the covariance ideal is the compact block on its source paths") {
  // The generated ideal equals the span of the same-source matrix units
  // over sources in the chosen covariance set, for every such set.
  for (const auto& [name, g] : corpus::curated()) {
    if (!is_acyclic(g) || g.vertex_count() > 4) continue;
    INFO(name);
    FockRep f = build_fock(g);
    SpannedAlgebra t = span_closure(toeplitz_generators(f));
    std::vector<std::string> reg;
    for (const std::string& v : regular_vertices(g)) reg.push_back(v);
    for (unsigned long mask = 0; mask < (1ul << reg.size()); ++mask) {
      VertexSet s;
      for (size_t i = 0; i < reg.size(); ++i)
        if (mask & (1ul << i)) s.insert(reg[i]);
      SpannedAlgebra j = ideal_closure(t, covariance_ideal_matrices(f, s));
      std::vector<SparseMat> units;
      for (int i = 0; i < f.dim(); ++i)
        for (int k = 0; k < f.dim(); ++k) {
          std::string si = path_source(g, f.basis[i]);
          if (si != path_source(g, f.basis[k]) || !s.count(si)) continue;
          units.push_back(SparseMat::unit(f.dim(), i, k));
        }
      SpanBasis expected = span_of(units);
      CHECK(subspace_eq(j.span, expected));
    }
  }
}

TEST_CASE("relative_cp_dimension on the worked examples") {
  Graph g2 = corpus::arrow();
  CpDimensions full = relative_cp_dimension(g2, Pair{{}, {"b"}});
  CHECK(full.dim == 4);
  CHECK(full.center_dim == 1);  // the simple algebra of 2x2 matrices

  CpDimensions toeplitz = relative_cp_dimension(g2, Pair{{}, {}});
  CHECK(toeplitz.dim == 5);

  CpDimensions zero = relative_cp_dimension(g2, Pair{{"a", "b"}, {"a", "b"}});
  CHECK(zero.dim == 0);
  CHECK(zero.center_dim == 0);

  CHECK_THROWS_AS(relative_cp_dimension(corpus::loop(), Pair{{}, {}}),
                  UnsupportedError);
}

TEST_CASE("realize_dims agrees with the dense oracle") {
  for (const auto& g : {corpus::arrow(),
                        Graph({"a", "b", "c"}, {Edge{"e1", "a", "b"},
                                                Edge{"e2", "b", "c"}}),
                        Graph({"a", "b"},
                              {Edge{"e1", "a", "b"}, Edge{"e2", "a", "b"}})}) {
    for (const Pair& p : enumerate_pairs(g).pairs) {
      RealizeDims lib = realize_dims(g, p);
      oracles::DenseCpDims ora = oracles::dense_cp_dims(g, p);
      CHECK(lib.toeplitz == ora.toeplitz);
      CHECK(lib.ideal == ora.ideal);
      CHECK(lib.quotient == ora.quotient);
    }
  }
}

TEST_CASE("relative_cp_dimension is strictly antitone along the order") {
  for (const auto& [name, g] : corpus::all()) {
    if (!is_acyclic(g) || g.vertex_count() > 5 || g.edge_count() > 6) continue;
    INFO(name);
    PairLattice lat = enumerate_pairs(g);
    std::vector<CpDimensions> dims;
    for (const Pair& p : lat.pairs) dims.push_back(relative_cp_dimension(g, p));
    const int n = static_cast<int>(lat.pairs.size());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (!lat.leq[i][j]) continue;
        if (i == j) continue;
        CHECK(dims[i].dim > dims[j].dim);
      }
  }
}

TEST_CASE("distinct pairs generate distinct ideals in the same Toeplitz span") {
  for (const auto& [name, g] : corpus::curated()) {
    if (!is_acyclic(g) || g.vertex_count() > 4) continue;
    INFO(name);
    FockRep f = build_fock(g);
    SpannedAlgebra t = span_closure(toeplitz_generators(f));
    std::vector<VertexSet> reg_subsets;
    std::vector<std::string> reg;
    for (const std::string& v : regular_vertices(g)) reg.push_back(v);
    for (unsigned long mask = 0; mask < (1ul << reg.size()); ++mask) {
      VertexSet s;
      for (size_t i = 0; i < reg.size(); ++i)
        if (mask & (1ul << i)) s.insert(reg[i]);
      reg_subsets.push_back(s);
    }
    std::vector<SpannedAlgebra> ideals;
    for (const VertexSet& s : reg_subsets)
      ideals.push_back(ideal_closure(t, covariance_ideal_matrices(f, s)));
    for (size_t i = 0; i < ideals.size(); ++i)
      for (size_t j = i + 1; j < ideals.size(); ++j)
        CHECK_FALSE(subspace_eq(ideals[i].span, ideals[j].span));
  }
}

TEST_CASE("verify_kernel_covariance on the worked examples") {
  Graph g2 = corpus::arrow();
  KernelCovarianceReport r1 = verify_kernel_covariance(g2, Pair{{}, {"b"}});
  CHECK(r1.kernel_intersection_dim == 0);
  CHECK(r1.covariance_intersection_dim == 1);
  CHECK(r1.expected_dim == 1);
  CHECK(r1.ok());

  KernelCovarianceReport r2 = verify_kernel_covariance(g2, Pair{{}, {}});
  CHECK(r2.kernel_intersection_dim == 0);
  CHECK(r2.covariance_intersection_dim == 0);
  CHECK(r2.ok());

  KernelCovarianceReport r3 =
      verify_kernel_covariance(Graph({"a"}, {}), Pair{{}, {}});
  CHECK(r3.ok());  // vacuous

  CHECK_THROWS_AS(verify_kernel_covariance(corpus::loop(), Pair{{}, {}}),
                  UnsupportedError);
}

TEST_CASE("katsura_embedding_check norm pairs") {
  EmbeddingReport loop1 = katsura_embedding_check(corpus::loop(), 1, 3);
  CHECK(loop1.pairs_checked == 1);
  CHECK(loop1.max_gap <= 1e-9);

  EmbeddingReport arrow1 = katsura_embedding_check(corpus::arrow(), 1, 3);
  CHECK(arrow1.vacuous());  // the only length-1 path has a singular source

  EmbeddingReport g1n1 = katsura_embedding_check(corpus::two_loops(), 1, 3);
  CHECK(g1n1.pairs_checked == 5);
  CHECK(g1n1.max_gap <= 1e-9);

  CHECK_THROWS_AS(katsura_embedding_check(corpus::loop(), 3, 3), Error);
}
