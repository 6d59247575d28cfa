#include <doctest.h>

#include "strathom/complex.hpp"
#include "strathom/json_io.hpp"

#include <nlohmann/json.hpp>

using namespace strathom;

TEST_CASE("closure and power sets") {
  auto d2 = Complex::standard_simplex(2);
  CHECK(d2->size() == 7);
  SimplexId top = d2->require_id(Simplex::of({0, 1, 2}));
  auto im = simplex_image(d2, top);
  CHECK(im.size() == 7);  // 2^3 - 1
  auto e = closure(d2, std::vector<SimplexId>{});
  CHECK(e.empty());

  // closure of the 1-faces of Delta^2 is its boundary: 3 vertices, 3 edges
  auto [b1, e1] = d2->dim_range(1);
  std::vector<SimplexId> edges;
  for (SimplexId i = b1; i < e1; ++i) edges.push_back(i);
  auto bd = closure(d2, edges);
  auto f = bd.f_vector();
  CHECK(f == std::vector<std::size_t>{3, 3});
}

TEST_CASE("lattice ops and delta subtraction") {
  auto d2 = Complex::standard_simplex(2);
  auto whole = whole_complex(d2);
  SimplexId top = d2->require_id(Simplex::of({0, 1, 2}));
  auto bd = delta_subtract(whole, empty_subcomplex(d2));
  CHECK(bd == whole);

  // paper counterexample: Delta^1 and its two endpoints
  auto d1 = Complex::standard_simplex(1);
  auto x = whole_complex(d1);
  auto y = closure(d1, std::vector<SimplexId>{d1->singleton(0)});
  auto z = closure(d1, std::vector<SimplexId>{d1->singleton(1)});
  auto lhs = delta_subtract(x, sub_inter(y, z));          // X -_D empty = X
  auto rhs = sub_union(delta_subtract(x, y), delta_subtract(x, z));
  CHECK(lhs == x);
  CHECK(sub_leq(rhs, lhs));
  CHECK(!(rhs == lhs));  // Morgan equality fails

  // Delta^2 -_D boundary = empty, double complement overshoots
  auto w2 = whole_complex(d2);
  Bitset bmem(d2->size());
  for (SimplexId i = 0; i < static_cast<SimplexId>(d2->size()); ++i)
    if (d2->at(i).dim() < 2) bmem.set(i);
  auto bd2 = make_subcomplex(d2, bmem);
  auto sub = delta_subtract(w2, bd2);
  CHECK(sub.empty());
  CHECK(delta_subtract(w2, sub) == w2);
  CHECK(!sub_leq(delta_subtract(w2, sub), bd2));
  (void)top;
}

TEST_CASE("hull and fatness") {
  auto d2 = Complex::standard_simplex(2);
  auto g = hull(d2, std::vector<VertexId>{0, 1, 2});
  CHECK(g == whole_complex(d2));  // with all vertices present, G(A)=Delta^2
  CHECK(is_fat(g));
  Bitset bmem(d2->size());
  for (SimplexId i = 0; i < static_cast<SimplexId>(d2->size()); ++i)
    if (d2->at(i).dim() < 2) bmem.set(i);
  auto bd2 = make_subcomplex(d2, bmem);
  CHECK(!is_fat(bd2));  // vertices span the missing triangle
  SimplexId top = d2->require_id(Simplex::of({0, 1, 2}));
  CHECK(is_fat(simplex_image(d2, top)));
}

TEST_CASE("star and link") {
  auto d1 = Complex::standard_simplex(1);
  auto st0 = star(d1, d1->singleton(0));
  CHECK(st0 == whole_complex(d1));
  auto lk0 = link(d1, d1->singleton(0));
  CHECK(lk0.size() == 1);
  CHECK(lk0.contains(d1->singleton(1)));

  // octahedron: vertex links are 4-cycles
  std::vector<std::string> labels = {"n", "s", "a", "b", "c", "d"};
  std::vector<Simplex> tris;
  for (auto [x, y] : std::vector<std::pair<VertexId, VertexId>>{{2, 3}, {3, 4}, {4, 5}, {5, 2}}) {
    tris.push_back(Simplex::of({0, x, y}));
    tris.push_back(Simplex::of({1, x, y}));
  }
  auto oct = Complex::from_maximal(labels, tris);
  auto lk = link(oct, oct->singleton(0));
  auto f = lk.f_vector();
  CHECK(f == std::vector<std::size_t>{4, 4});
  CHECK(component_count(lk) == 1);
  // oracle: link == closure(cofaces) -_D Im(v)
  auto br = delta_subtract(closure(oct, cofaces(oct, oct->singleton(0))),
                           simplex_image(oct, oct->singleton(0)));
  CHECK(br == lk);
}

TEST_CASE("ordered product") {
  auto d0 = Complex::standard_simplex(0);
  auto d1 = Complex::standard_simplex(1);
  auto d2 = Complex::standard_simplex(2);
  auto p0 = product(d0, d1);
  CHECK(p0.complex->f_vector() == d1->f_vector());

  auto p11 = product(d1, d1);
  CHECK(p11.complex->f_vector() == std::vector<std::size_t>{4, 5, 2});

  auto p12 = product(d1, d2);
  auto f = p12.complex->f_vector();
  CHECK(f[0] == 6);
  CHECK(f[3] == 3);  // prism: 3 tetrahedra
  CHECK(p12.complex->dim() == 3);
}

TEST_CASE("simplicial maps") {
  auto d1 = Complex::standard_simplex(1);
  auto d0 = Complex::standard_simplex(0);
  SimplicialMap collapse(d1, d0, {0, 0});
  auto img = map_image(collapse, whole_complex(d1));
  CHECK(img == whole_complex(d0));
  SimplicialMap idm(d1, d1, {0, 1});
  CHECK(map_image(idm, whole_complex(d1)) == whole_complex(d1));
  auto pre = map_preimage(collapse, whole_complex(d0));
  CHECK(pre == whole_complex(d1));
  // identity vertex map into the boundary is not simplicial
  auto d2 = Complex::standard_simplex(2);
  auto db = Complex::boundary_simplex(2);
  CHECK_THROWS(SimplicialMap(d2, db, {0, 1, 2}));
}

TEST_CASE("json round trip") {
  nlohmann::json j;
  j["vertices"] = {"a", "b", "c"};
  j["maximal_simplices"] = nlohmann::json::array({{"a", "b"}, {"b", "c"}});
  auto k = complex_from_json(j);
  CHECK(k->size() == 5);
  auto j2 = complex_to_json(*k);
  auto k2 = complex_from_json(j2);
  CHECK(k->structurally_equal(*k2));
}
