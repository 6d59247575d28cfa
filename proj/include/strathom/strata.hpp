#pragma once

#include <memory>
#include <string>

#include "strathom/complex.hpp"
#include "strathom/subdivision.hpp"

namespace strathom {

// GM perversity on codimensions 2..n.
struct Perversity {
  int n = 2;
  std::vector<int> vals;  // vals[k-2] = p(k)
  bool gm_strict = true;
  std::string name = "custom";

  int operator()(int k) const;
  void validate() const;  // p(2)=0, p(k+1) in {p(k), p(k)+1} when gm_strict

  static Perversity zero(int n);
  static Perversity top(int n);           // t(k) = k-2
  static Perversity lower_middle(int n);  // m(k) = floor((k-2)/2)
  static std::vector<Perversity> presets(int n);
  // "zero" | "top" | "mid" | "k2=0,k3=1" style custom values
  static Perversity parse(const std::string& spec, int n);
};

class StratifiedComplex;
using StratifiedPtr = std::shared_ptr<const StratifiedComplex>;

// Local combinatorics at a base simplex sigma (all inside the doubled
// complex). S / S_- / S_+ are vertex sets of Sd^2, i.e. sets of Sd-simplex
// ids; the pieces come with their verified structure maps.
struct LocalStructure {
  SimplexId sigma = -1;
  std::vector<VertexId> S, S_minus, S_plus;
  SubcomplexRef lst;       // G(S)
  SubcomplexRef st_sigma;  // lst cap Sd^2(Im sigma) = G(S_-)
  SubcomplexRef g_plus;    // G(S_+) = cone on L
  SubcomplexRef link_L;    // L^sigma = G(S_+ - {b_sigma})
};

// A complex X' triangulating a PL stratified pseudomanifold, with the
// filtration kept both on the base and pushed through the subdivisions.
// depth is the number of barycentric subdivisions applied (2 in the paper's
// setting; 3 only for the subdivision-stability computations, where the
// star/carrier machinery is not used).
class StratifiedComplex {
 public:
  static StratifiedPtr create(ComplexPtr base, std::vector<SubcomplexRef> filtration_base,
                              int n, std::string name = "space", int depth = 2);

  const std::string& name() const { return name_; }
  int n() const { return n_; }
  int depth() const { return depth_; }
  ComplexPtr base() const { return tower_.base; }
  const SdTower& tower() const { return tower_; }
  ComplexPtr x() const { return tower_.top(); }  // Sd^depth(X')
  const DoubledComplex& dc() const;              // depth 2 only

  // k = 0..n on the base / on Sd^depth.
  const SubcomplexRef& filt_base(int k) const;
  const SubcomplexRef& filt_x(int k) const;
  // Sigma = X_{n-2}
  bool has_singular_set() const;

  // Smallest k with sigma in X_k (== n for regular simplices); equivalently
  // the stratum of the barycenter b_sigma.
  int stratum_of(SimplexId base_simplex) const;

  // lst/fst as subcomplexes of x() (depth 2 only). Cached.
  const SubcomplexRef& lst(SimplexId base_simplex) const;
  const SubcomplexRef& fst(SimplexId base_simplex) const;

  // U_k^D = X -_D X_{n-k} for k = 2..n+1 (U_{n+1} = X). Returned in that
  // order, ascending.
  std::vector<SubcomplexRef> open_chain() const;

  LocalStructure local_structure(SimplexId base_simplex) const;

 private:
  std::string name_;
  int n_ = 0;
  int depth_ = 2;
  SdTower tower_;
  std::vector<SubcomplexRef> filt_base_;
  std::vector<SubcomplexRef> filt_x_;
  std::unique_ptr<DoubledComplex> dc_;
  mutable std::vector<SubcomplexRef> lst_cache_;
  mutable std::vector<SubcomplexRef> fst_cache_;
  mutable std::vector<char> lst_done_, fst_done_;

  StratifiedComplex() = default;
  void build_caches_slot(SimplexId s) const;
};

// -- constructions and the builtin catalog -----------------------------------

ComplexPtr cone(ComplexPtr k, const std::string& apex_label = "apex");
ComplexPtr suspension(ComplexPtr k, const std::string& north = "north", const std::string& south = "south");
ComplexPtr torus_7();  // the 7-vertex triangulated torus

// By name: sphere-2, sphere-3, cone-s2, sigma-t2, pinched-torus.
std::vector<std::string> catalog_names();
StratifiedPtr make_space(const std::string& name, int depth = 2);
std::string catalog_description(const std::string& name);

// Perversity presets exercised in acceptance: zero, lower-middle, top.
std::vector<Perversity> acceptance_perversities(int n);

}  // namespace strathom
