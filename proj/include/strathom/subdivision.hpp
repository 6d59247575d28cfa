#pragma once

#include "strathom/complex.hpp"

namespace strathom {

// Barycentric subdivision of a base complex. Vertex j of sd *is* base
// simplex j (ids agree by construction), and because ids are canonical
// (dimension-major), the sorted vertex list of an sd simplex is exactly the
// chain in face order; its last entry is the chain maximum.
struct SdComplex {
  ComplexPtr base;
  ComplexPtr sd;
  // chain_top[c] / chain_bottom[c]: base ids of the maximal/minimal entry of
  // the chain that is sd simplex c.
  std::vector<SimplexId> chain_top;
  std::vector<SimplexId> chain_bottom;

  // Vertex of sd corresponding to base simplex s.
  VertexId barycenter(SimplexId s) const { return static_cast<VertexId>(s); }
};

SdComplex subdivide(ComplexPtr k);

// Sd as a functor on subcomplexes: chains whose maximum lies in Z.
SubcomplexRef subdivide_sub(const SdComplex& sd, const SubcomplexRef& z);

// Iterated subdivision tower over a base complex. stage(0) = Sd(base),
// stage(i) subdivides stage(i-1). The paper's setting is depth 2.
struct SdTower {
  ComplexPtr base;
  std::vector<SdComplex> stages;

  int depth() const { return static_cast<int>(stages.size()); }
  ComplexPtr top() const { return stages.empty() ? base : stages.back().sd; }
  // Push a base subcomplex through every stage.
  SubcomplexRef lift(const SubcomplexRef& z) const;
};

SdTower subdivide_tower(ComplexPtr base, int depth);

// Depth-2 helpers. x is a simplex of Sd^2(base); vertices of Sd^2 are
// Sd-simplices (chains), entries of chains are base simplices.
struct DoubledComplex {
  SdTower tower;  // depth exactly 2

  ComplexPtr base() const { return tower.base; }
  const SdComplex& first() const { return tower.stages[0]; }
  const SdComplex& second() const { return tower.stages[1]; }
  ComplexPtr x() const { return second().sd; }

  // Sd^2 vertex id of the barycenter b_sigma = {{sigma}}.
  VertexId barycenter_vertex(SimplexId base_s) const;
  // ... and its id as a 0-simplex of Sd^2.
  SimplexId barycenter_simplex(SimplexId base_s) const;

  // Smallest base simplex whose closed realization contains |Im(x)|:
  // the maximum entry of x's maximal vertex chain.
  SimplexId geometric_carrier(SimplexId x_simplex) const;
  // Base simplex whose fst is the minimal open neighborhood of x in the
  // fst-topology: the maximum entry of x's *minimal* vertex chain.
  SimplexId stalk_carrier(SimplexId x_simplex) const;
};

DoubledComplex double_subdivide(ComplexPtr base);

// The op named `carrier` (depth exactly 2): geometric carrier.
SimplexId carrier(const DoubledComplex& dc, SimplexId x_simplex);

}  // namespace strathom
