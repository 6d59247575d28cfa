#include <doctest.h>

#include "strathom/linalg.hpp"
#include "strathom/qcomplex.hpp"

using namespace strathom;

TEST_CASE("sparse rank and kernel") {
  SparseMatQ m(3, 4);
  // [1 0 1 2]
  // [0 1 1 0]
  // [1 1 2 2]
  m.add(0, 0, 1); m.add(2, 0, 1);
  m.add(1, 1, 1); m.add(2, 1, 1);
  m.add(0, 2, 1); m.add(1, 2, 1); m.add(2, 2, 2);
  m.add(0, 3, 2); m.add(2, 3, 2);
  m.finalize();
  CHECK(m.rank() == 2);
  SparseMatQ k = m.kernel_basis();
  CHECK(k.cols() == 2);
  CHECK((m * k).is_zero());

  DenseMatQ d = DenseMatQ::from_sparse(m);
  CHECK(d.rank() == 2);
  DenseMatQ dk = d.kernel_basis();
  CHECK(dk.cols() == 2);
}

TEST_CASE("dense solve") {
  DenseMatQ a(2, 2);
  a(0, 0) = 2; a(0, 1) = 1; a(1, 0) = 1; a(1, 1) = 1;
  auto x = a.solve(std::vector<Q>{Q(3), Q(2)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == 1);
  CHECK((*x)[1] == 1);
  DenseMatQ b(2, 1);
  b(0, 0) = 1;
  b(1, 0) = 0;
  DenseMatQ sing(2, 2);
  sing(0, 0) = 1; sing(0, 1) = 1; sing(1, 0) = 1; sing(1, 1) = 1;
  CHECK(!sing.solve(b).has_value());
}

TEST_CASE("qcomplex cohomology: interval is acyclic") {
  // 0 -> Q -> Q -> 0 with identity differential
  QComplex c;
  c.lo = 0;
  c.dims = {1, 1};
  SparseMatQ d(1, 1);
  d.add(0, 0, 1);
  d.finalize();
  c.d = {d};
  c.validate();
  auto h = c.cohomology_dims();
  CHECK(h.empty());
}

TEST_CASE("mapping cone detects quasi-isos") {
  // A = Q in degree 0; B = [Q -> Q] acyclic; zero map is qiso iff A acyclic.
  QComplex a = QComplex::concentrated(0, 1);
  QComplex b = QComplex::concentrated(0, 1);
  ChainMap f;
  f.a = &a;
  f.b = &b;
  f.lo = 0;
  SparseMatQ id1(1, 1);
  id1.add(0, 0, 1);
  id1.finalize();
  f.comp = {id1};
  f.validate();
  CHECK(quasi_iso(f));
  auto ind = induced_cohomology_map(f, 0);
  CHECK(ind.iso());

  ChainMap z;
  z.a = &a;
  z.b = &b;
  z.lo = 0;
  z.comp = {SparseMatQ(1, 1)};
  CHECK(!quasi_iso(z));
}
