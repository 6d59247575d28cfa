#pragma once

#include <map>
#include <vector>

#include "strathom/linalg.hpp"

namespace strathom {

// Bounded cochain complex of finite-dimensional Q-vector spaces.
// Degrees run lo .. lo + dims.size() - 1; d[i] maps degree lo+i to lo+i+1.
struct QComplex {
  int lo = 0;
  std::vector<int> dims;
  std::vector<SparseMatQ> d;  // size dims.size()-1 when nonempty (or equal with trailing zero map)

  static QComplex zero();
  // Single space in the given degree with zero differential.
  static QComplex concentrated(int degree, int dim);

  int hi() const { return lo + static_cast<int>(dims.size()) - 1; }
  int dim(int m) const;
  // Differential out of degree m (zero matrix of the right shape if absent).
  SparseMatQ diff(int m) const;
  int total_dim() const;

  // Drop zero-dimensional degrees at both ends.
  void trim();
  // d after d must vanish and shapes must line up.
  void validate() const;

  std::map<int, int> cohomology_dims() const;
};

// Degreewise map of complexes f : A -> B.
struct ChainMap {
  const QComplex* a = nullptr;
  const QComplex* b = nullptr;
  // comp[m - lo_map] : A^m -> B^m; degrees outside either complex are zero.
  int lo = 0;
  std::vector<SparseMatQ> comp;

  SparseMatQ component(int m) const;
  void validate() const;  // commutes with differentials
};

// cone(f)^m = A^{m+1} (+) B^m with the usual differential.
QComplex mapping_cone(const ChainMap& f);

// True iff f induces isomorphisms on all cohomology (cone acyclic).
bool quasi_iso(const ChainMap& f);

struct InducedMap {
  int dim_a = 0;
  int dim_b = 0;
  int rank = 0;
  bool iso() const { return dim_a == dim_b && rank == dim_a; }
  bool injective() const { return rank == dim_a; }
};

// Map induced by f on H^m, computed with explicit dense bases.
InducedMap induced_cohomology_map(const ChainMap& f, int m);

// Graded dimension table, e.g. Betti tables.
using GradedDims = std::map<int, int>;

bool graded_equal(const GradedDims& a, const GradedDims& b);
std::string graded_to_string(const GradedDims& g, int lo, int hi);

}  // namespace strathom
