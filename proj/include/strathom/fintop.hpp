#pragma once

#include "strathom/strata.hpp"

namespace strathom {

class FiniteTopology;
using TopologyPtr = std::shared_ptr<const FiniteTopology>;

// An open of T, represented by its canonical basis witness: the up-closed
// set D of base simplices with fst(sigma) contained in the open. Distinct
// up-closed witnesses give distinct opens, so D *is* the open.
struct OpenRef {
  TopologyPtr top;
  Bitset basis_witness;  // over base simplex ids, up-closed in the face poset

  bool contains_point(SimplexId x_simplex) const;
  bool leq(const OpenRef& other) const;
  bool operator==(const OpenRef& o) const;
  OpenRef meet(const OpenRef& o) const;
  OpenRef join(const OpenRef& o) const;
  SubcomplexRef subcomplex() const;  // materialized union of basis sets
  std::size_t point_count() const;
};

// The finite topology T on the simplices of X = Sd^2(X') generated by
// { fst(sigma) : sigma in X' }. Points are simplices of X; the minimal open
// of a point is fst of its stalk carrier.
class FiniteTopology : public std::enable_shared_from_this<FiniteTopology> {
 public:
  static TopologyPtr generate(StratifiedPtr space);

  const StratifiedComplex& space() const { return *space_; }
  StratifiedPtr space_ptr() const { return space_; }
  ComplexPtr base() const { return space_->base(); }
  ComplexPtr x() const { return space_->x(); }

  std::size_t basis_size() const { return base()->size(); }
  const SubcomplexRef& basis(SimplexId base_id) const { return space_->fst(base_id); }
  SimplexId stalk_carrier(SimplexId x_simplex) const { return stalk_carrier_[x_simplex]; }

  // fst(a) <= fst(b)  iff  b is a face of a.
  bool basis_leq(SimplexId a, SimplexId b) const;

  // Face-poset covering edges on base ids (sigma, tau) with sigma a facet
  // of tau, tau = sigma plus one vertex.
  const std::vector<std::pair<SimplexId, SimplexId>>& hasse() const { return hasse_; }
  const std::vector<SimplexId>& covers_of(SimplexId sigma) const { return covers_[sigma]; }

  bool is_up_closed(const Bitset& d) const;
  OpenRef open_from_witness(Bitset d) const;
  OpenRef whole_open() const;
  OpenRef empty_open() const;
  OpenRef minimal_open(SimplexId x_simplex) const;
  OpenRef basis_open(SimplexId base_id) const;  // fst(sigma) as an OpenRef
  // U_k^D for k = 2..n+1 as OpenRefs with verified witnesses.
  std::vector<OpenRef> open_chain() const;

  // Elements of D that lie above sigma (including sigma if present),
  // ascending by id.
  std::vector<SimplexId> upset_in(const Bitset& d, SimplexId sigma) const;

  // -- verification (throws on failure, with the offending pair named) ------
  // fst(sigma) cap fst(tau) is a union of basis sets; in fact fst of the
  // vertex join when that is a simplex, empty otherwise.
  void verify_basis_intersection_closure() const;
  // minimal_open(x) equals the intersection of all opens containing x.
  // With materialize = true the intersection is computed on actual
  // subcomplexes (quadratic; meant for small spaces).
  void verify_minimal_opens(bool materialize) const;
  // fst(sigma) equals the union of lst over cofaces (definition) and equals
  // { x : sigma <= stalk_carrier(x) } (the membership formula used
  // internally); also checks fatness of basis sets and the poset law.
  void verify_basis(bool check_fatness) const;

 private:
  StratifiedPtr space_;
  std::vector<SimplexId> stalk_carrier_;
  std::vector<std::pair<SimplexId, SimplexId>> hasse_;
  std::vector<std::vector<SimplexId>> covers_;

  FiniteTopology() = default;
};

}  // namespace strathom
