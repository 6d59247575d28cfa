#include "strathom/fintop.hpp"

#include <algorithm>
#include <stdexcept>

namespace strathom {

bool OpenRef::contains_point(SimplexId x_simplex) const {
  return basis_witness.test(top->stalk_carrier(x_simplex));
}

bool OpenRef::leq(const OpenRef& other) const {
  if (top.get() != other.top.get()) throw std::domain_error("OpenRef::leq: topology mismatch");
  return basis_witness.is_subset_of(other.basis_witness);
}

bool OpenRef::operator==(const OpenRef& o) const {
  return top.get() == o.top.get() && basis_witness == o.basis_witness;
}

OpenRef OpenRef::meet(const OpenRef& o) const {
  if (top.get() != o.top.get()) throw std::domain_error("OpenRef::meet: topology mismatch");
  return {top, basis_witness & o.basis_witness};
}

OpenRef OpenRef::join(const OpenRef& o) const {
  if (top.get() != o.top.get()) throw std::domain_error("OpenRef::join: topology mismatch");
  return {top, basis_witness | o.basis_witness};
}

SubcomplexRef OpenRef::subcomplex() const {
  SubcomplexRef u = empty_subcomplex(top->x());
  for (auto i = basis_witness.find_first(); i != Bitset::npos; i = basis_witness.find_next(i))
    u = sub_union(u, top->basis(static_cast<SimplexId>(i)));
  return u;
}

std::size_t OpenRef::point_count() const {
  std::size_t n = 0;
  for (SimplexId x = 0; x < static_cast<SimplexId>(top->x()->size()); ++x)
    if (contains_point(x)) ++n;
  return n;
}

TopologyPtr FiniteTopology::generate(StratifiedPtr space) {
  if (space->depth() != 2) throw std::invalid_argument("FiniteTopology: requires depth-2 subdivision");
  auto t = std::shared_ptr<FiniteTopology>(new FiniteTopology());
  t->space_ = std::move(space);
  const DoubledComplex& dc = t->space_->dc();
  ComplexPtr X = t->space_->x();
  t->stalk_carrier_.resize(X->size());
  for (SimplexId x = 0; x < static_cast<SimplexId>(X->size()); ++x)
    t->stalk_carrier_[x] = dc.stalk_carrier(x);

  ComplexPtr B = t->space_->base();
  t->covers_.resize(B->size());
  for (SimplexId s = 0; s < static_cast<SimplexId>(B->size()); ++s)
    for (SimplexId f : B->facets(s)) {
      t->hasse_.emplace_back(f, s);
      t->covers_[f].push_back(s);
    }
  std::sort(t->hasse_.begin(), t->hasse_.end());
  for (auto& c : t->covers_) std::sort(c.begin(), c.end());

  // The membership formula x in fst(sigma) <=> sigma <= stalk_carrier(x) is
  // the engine's workhorse; verify it against the definition right away.
  t->verify_basis(false);
  return t;
}

bool FiniteTopology::basis_leq(SimplexId a, SimplexId b) const {
  return base()->at(a).has_face(base()->at(b));
}

bool FiniteTopology::is_up_closed(const Bitset& d) const {
  for (auto i = d.find_first(); i != Bitset::npos; i = d.find_next(i))
    for (SimplexId c : covers_[static_cast<SimplexId>(i)])
      if (!d.test(c)) return false;
  return true;
}

OpenRef FiniteTopology::open_from_witness(Bitset d) const {
  if (d.size() != base()->size()) throw std::invalid_argument("open_from_witness: size");
  if (!is_up_closed(d)) throw std::invalid_argument("open_from_witness: witness not up-closed");
  return {shared_from_this(), std::move(d)};
}

OpenRef FiniteTopology::whole_open() const {
  Bitset d(base()->size());
  d.set();
  return {shared_from_this(), std::move(d)};
}

OpenRef FiniteTopology::empty_open() const {
  return {shared_from_this(), Bitset(base()->size())};
}

OpenRef FiniteTopology::minimal_open(SimplexId x_simplex) const {
  return basis_open(stalk_carrier_[x_simplex]);
}

OpenRef FiniteTopology::basis_open(SimplexId base_id) const {
  Bitset d(base()->size());
  for (SimplexId c : base()->coface_ids(base_id)) d.set(c);
  return {shared_from_this(), std::move(d)};
}

std::vector<OpenRef> FiniteTopology::open_chain() const {
  const StratifiedComplex& s = *space_;
  std::vector<OpenRef> out;
  std::vector<SubcomplexRef> chain = s.open_chain();
  for (int k = 2; k <= s.n() + 1; ++k) {
    int j = s.n() - k;
    Bitset d(base()->size());
    if (j < 0) {
      d.set();
    } else {
      // Prop "U_k in T": witness are the fst(sigma) with b_sigma off X_{n-k}.
      for (SimplexId b = 0; b < static_cast<SimplexId>(base()->size()); ++b)
        if (!s.filt_base(j).members.test(b)) d.set(b);
    }
    OpenRef u = open_from_witness(std::move(d));
    if (!(u.subcomplex() == chain[k - 2]))
      throw std::logic_error("open_chain: U_k witness does not match X -_D X_{n-k}");
    out.push_back(std::move(u));
  }
  return out;
}

std::vector<SimplexId> FiniteTopology::upset_in(const Bitset& d, SimplexId sigma) const {
  std::vector<SimplexId> out;
  for (SimplexId c : base()->coface_ids(sigma))
    if (d.test(c)) out.push_back(c);
  return out;
}

void FiniteTopology::verify_basis_intersection_closure() const {
  ComplexPtr B = base();
  for (SimplexId a = 0; a < static_cast<SimplexId>(B->size()); ++a) {
    for (SimplexId b = a; b < static_cast<SimplexId>(B->size()); ++b) {
      SubcomplexRef inter = sub_inter(space_->fst(a), space_->fst(b));
      // expected: fst of the vertex join when it spans a simplex, else empty
      std::vector<VertexId> u;
      const auto& av = B->at(a).v;
      const auto& bv = B->at(b).v;
      std::set_union(av.begin(), av.end(), bv.begin(), bv.end(), std::back_inserter(u));
      Simplex join_s;
      join_s.v = std::move(u);
      auto join_id = B->id_of(join_s);
      SubcomplexRef expected = join_id ? space_->fst(*join_id) : empty_subcomplex(space_->x());
      if (!(inter == expected))
        throw std::logic_error("basis intersection closure fails at (" + B->at(a).to_string() +
                               ", " + B->at(b).to_string() + ")");
      // and a union-of-basis witness exists: D = { mu : fst(mu) <= inter }
      Bitset d(B->size());
      for (SimplexId mu = 0; mu < static_cast<SimplexId>(B->size()); ++mu)
        if (sub_leq(space_->fst(mu), inter)) d.set(mu);
      SubcomplexRef rebuilt = empty_subcomplex(space_->x());
      for (auto i = d.find_first(); i != Bitset::npos; i = d.find_next(i))
        rebuilt = sub_union(rebuilt, space_->fst(static_cast<SimplexId>(i)));
      if (!(rebuilt == inter))
        throw std::logic_error("basis intersection has no union-of-basis witness at (" +
                               B->at(a).to_string() + ", " + B->at(b).to_string() + ")");
    }
  }
}

void FiniteTopology::verify_minimal_opens(bool materialize) const {
  ComplexPtr X = x();
  ComplexPtr B = base();
  for (SimplexId p = 0; p < static_cast<SimplexId>(X->size()); ++p) {
    SimplexId sc = stalk_carrier_[p];
    // basis opens containing p must be exactly { fst(tau) : tau <= sc },
    // whose smallest member is fst(sc)
    for (SimplexId tau = 0; tau < static_cast<SimplexId>(B->size()); ++tau) {
      bool contains = space_->fst(tau).contains(p);
      bool expected = B->at(sc).has_face(B->at(tau));
      if (contains != expected)
        throw std::logic_error("minimal_open: membership mismatch at point " + X->at(p).to_string());
    }
    if (!space_->fst(sc).contains(p))
      throw std::logic_error("minimal_open: fst(stalk carrier) misses its point");
  }
  if (!materialize) return;
  for (SimplexId p = 0; p < static_cast<SimplexId>(X->size()); ++p) {
    SubcomplexRef inter = whole_complex(X);
    for (SimplexId tau = 0; tau < static_cast<SimplexId>(B->size()); ++tau)
      if (space_->fst(tau).contains(p)) inter = sub_inter(inter, space_->fst(tau));
    if (!(inter == space_->fst(stalk_carrier_[p])))
      throw std::logic_error("minimal_open: intersection of containing opens differs at point " +
                             X->at(p).to_string());
  }
}

void FiniteTopology::verify_basis(bool check_fatness) const {
  ComplexPtr X = x();
  ComplexPtr B = base();
  for (SimplexId s = 0; s < static_cast<SimplexId>(B->size()); ++s) {
    const SubcomplexRef& f = space_->fst(s);
    for (SimplexId p = 0; p < static_cast<SimplexId>(X->size()); ++p) {
      bool formula = B->at(stalk_carrier_[p]).has_face(B->at(s));
      if (f.contains(p) != formula)
        throw std::logic_error("fst membership formula fails at base " + B->at(s).to_string());
    }
    if (check_fatness && !is_fat(f)) throw std::logic_error("fst is not fat at " + B->at(s).to_string());
  }
  // poset law: fst(a) <= fst(b) iff b <= a
  for (SimplexId a = 0; a < static_cast<SimplexId>(B->size()); ++a)
    for (SimplexId b = 0; b < static_cast<SimplexId>(B->size()); ++b) {
      bool incl = sub_leq(space_->fst(a), space_->fst(b));
      if (incl != basis_leq(a, b)) throw std::logic_error("fst poset law fails");
    }
}

}  // namespace strathom
