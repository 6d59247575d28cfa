#pragma once

#include <map>

#include "strathom/fintop.hpp"
#include "strathom/qcomplex.hpp"

namespace strathom {

// Degreewise family of matrices with explicit degree window.
struct GradedMaps {
  int lo = 0;
  std::vector<SparseMatQ> comp;

  SparseMatQ get(int m, int rows, int cols) const {
    int i = m - lo;
    if (i >= 0 && i < static_cast<int>(comp.size())) return comp[i];
    return SparseMatQ(rows, cols);
  }
};

// A bounded complex of sheaves of finite-dimensional Q-spaces on the
// fst-topology, given by its values on basis opens plus restriction maps
// along covering pairs of the basis poset. Because every basis open has a
// focal point, presheaf data on the basis poset already satisfies the
// gluing condition; sections over general opens are the limit over the
// basis witness, computed on demand.
struct SheafComplex {
  TopologyPtr top;
  Bitset domain;               // up-closed base-id set: the open it lives on
  std::vector<QComplex> val;   // per base id; zero complex outside domain
  std::vector<GradedMaps> res; // per hasse-edge index (edges inside domain)

  const QComplex& value(SimplexId s) const { return val[s]; }
  bool in_domain(SimplexId s) const { return domain.test(s); }
  // Restriction F(fst from) -> F(fst to) for from <= to, in one degree.
  SparseMatQ restriction(SimplexId from, SimplexId to, int degree) const;
  int deg_lo() const;
  int deg_hi() const;

  // Structural checks: shapes, d o d, chain-map property of restrictions,
  // functoriality (commuting diamonds), domain up-closedness, degree clamp.
  void validate() const;
};

// Degree window every sheaf complex must respect: [-1, n+2].
int degree_clamp_lo();
int degree_clamp_hi(const FiniteTopology& top);

// Map of sheaf complexes A -> B over the given domain (per-basis components
// commuting with restrictions and differentials).
struct SheafMap {
  Bitset domain;
  std::vector<GradedMaps> comp;  // per base id

  SparseMatQ component(SimplexId s, int m, int rows, int cols) const {
    return comp[s].get(m, rows, cols);
  }
};

void validate_sheaf_map(const SheafComplex& a, const SheafComplex& b, const SheafMap& f);
// Stalkwise quasi-isomorphism over the whole common domain.
bool sheaf_hom_quasi_iso(const SheafComplex& a, const SheafComplex& b, const SheafMap& f,
                         std::string* why = nullptr);

// -- constructors ------------------------------------------------------------

SheafComplex constant_sheaf(const OpenRef& domain, int dim = 1);
// Simplicial cochain sheaf: degree-m sections over fst(sigma) are Q-valued
// functions on its m-simplices.
SheafComplex cochain_sheaf(TopologyPtr top);

// -- core operations ---------------------------------------------------------

SheafComplex restrict_sheaf(const SheafComplex& f, const OpenRef& w);

// Sections over an open given by its basis witness: the equalizer limit.
QComplex sections(const SheafComplex& f, const Bitset& witness);

// Plain pushforward along U -> V: sections over fst(sigma) are
// F(U cap fst(sigma)), computed by the gluing equalizer.
SheafComplex pushforward_plain(const SheafComplex& f, const OpenRef& u, const OpenRef& v);

// Canonical degreewise-flasque model Tot K(F) (skyscraper/cobar resolution
// over the basis poset).
SheafComplex bar_flasque_model(const SheafComplex& f, int max_degree);

// Derived pushforward along U -> V: value at sigma is the cobar complex of
// F over D(U) cap up(sigma), i.e. the sections of the flasque model over
// U cap fst(sigma). unit_out, if given, receives the augmentation
// components G(sigma) -> (Ri_* F)(sigma) for sigma in V's domain (defined
// for any sheaf G on V extending F; components are res-stacks of F itself,
// so the caller composes with its own comparison G -> F when needed).
SheafComplex derived_pushforward(const SheafComplex& f, const OpenRef& u, const OpenRef& v,
                                 int max_degree, SheafMap* unit_out = nullptr);

// tau_{<= p}: identity below p, kernel of d^p in degree p, zero above.
// inclusion_out receives the canonical inclusion tau F -> F.
SheafComplex truncate_leq(const SheafComplex& f, int p, SheafMap* inclusion_out = nullptr);

// Godement machinery (skyscrapers over one representative point per carrier
// class). The resolution is exact and degreewise flasque by construction;
// both facts are what the tests verify.
struct GodementResolution {
  std::vector<SheafComplex> g;    // G^0 .. G^L
  SheafMap eps;                   // F -> G^0
  std::vector<SheafMap> delta;    // G^i -> G^{i+1}
};
SheafComplex godement0(const SheafComplex& f, SheafMap* eps_out = nullptr);
GodementResolution godement_resolution(const SheafComplex& f, int length);
// Hypercohomology computed from an explicit Godement resolution (sections of
// the total complex); used to cross-check the cobar route on small spaces.
GradedDims hypercohomology_via_godement(const SheafComplex& f, int length);

// -- interrogation -----------------------------------------------------------

GradedDims stalk_cohomology(const SheafComplex& f, SimplexId x_simplex);
GradedDims stalk_cohomology_at_base(const SheafComplex& f, SimplexId base_id);
// Cohomology of the derived global sections over the open W.
GradedDims hypercohomology(const SheafComplex& f, const OpenRef& w);
GradedDims hypercohomology(const SheafComplex& f);  // over its own domain

// Flasqueness via the finite criterion: for every basis element q of the
// domain, F(fst q) ->> lim over the strict up-set. On failure, witness
// describes the offending basis element and degree.
bool is_flasque(const SheafComplex& f, std::string* witness = nullptr);

// H^m as a sheaf concentrated in degree 0 (explicit bases + induced maps).
SheafComplex cohomology_sheaf(const SheafComplex& f, int m);

}  // namespace strathom
