#include "strathom/strata.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace strathom {

int Perversity::operator()(int k) const {
  if (k < 2 || k > n) throw std::out_of_range("Perversity: codimension out of range");
  return vals[k - 2];
}

void Perversity::validate() const {
  if (n < 2) throw std::invalid_argument("Perversity: n < 2");
  if (static_cast<int>(vals.size()) != n - 1) throw std::invalid_argument("Perversity: wrong length");
  if (!gm_strict) return;
  if (vals[0] != 0) throw std::invalid_argument("Perversity: p(2) != 0");
  for (std::size_t i = 0; i + 1 < vals.size(); ++i)
    if (vals[i + 1] != vals[i] && vals[i + 1] != vals[i] + 1)
      throw std::invalid_argument("Perversity: GM growth violated at k=" + std::to_string(i + 3));
}

Perversity Perversity::zero(int n) {
  Perversity p;
  p.n = n;
  p.vals.assign(n - 1, 0);
  p.name = "zero";
  p.validate();
  return p;
}

Perversity Perversity::top(int n) {
  Perversity p;
  p.n = n;
  p.name = "top";
  for (int k = 2; k <= n; ++k) p.vals.push_back(k - 2);
  p.validate();
  return p;
}

Perversity Perversity::lower_middle(int n) {
  Perversity p;
  p.n = n;
  p.name = "lower-middle";
  for (int k = 2; k <= n; ++k) p.vals.push_back((k - 2) / 2);
  p.validate();
  return p;
}

std::vector<Perversity> Perversity::presets(int n) {
  return {zero(n), lower_middle(n), top(n)};
}

Perversity Perversity::parse(const std::string& spec, int n) {
  if (spec == "zero") return zero(n);
  if (spec == "top") return top(n);
  if (spec == "mid" || spec == "lower-middle") return lower_middle(n);
  Perversity p;
  p.n = n;
  p.vals.assign(n - 1, 0);
  p.name = "custom";
  std::stringstream ss(spec);
  std::string item;
  bool any = false;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos || item.size() < 4 || item[0] != 'k')
      throw std::invalid_argument("Perversity::parse: bad item '" + item + "'");
    int k = std::stoi(item.substr(1, eq - 1));
    int v = std::stoi(item.substr(eq + 1));
    if (k < 2 || k > n) throw std::invalid_argument("Perversity::parse: codimension out of range");
    p.vals[k - 2] = v;
    any = true;
  }
  if (!any) throw std::invalid_argument("Perversity::parse: unknown spec '" + spec + "'");
  p.validate();
  return p;
}

// -- StratifiedComplex -------------------------------------------------------

StratifiedPtr StratifiedComplex::create(ComplexPtr base, std::vector<SubcomplexRef> filtration_base,
                                        int n, std::string name, int depth) {
  auto s = std::shared_ptr<StratifiedComplex>(new StratifiedComplex());
  s->name_ = std::move(name);
  s->n_ = n;
  s->depth_ = depth;
  if (depth < 2) throw std::invalid_argument("StratifiedComplex: depth must be >= 2");
  if (base->dim() != n) throw std::invalid_argument("StratifiedComplex: dim(base) != n");
  if (static_cast<int>(filtration_base.size()) != n + 1)
    throw std::invalid_argument("StratifiedComplex: filtration must have n+1 entries");
  for (int k = 0; k <= n; ++k) {
    const auto& xk = filtration_base[k];
    if (xk.ambient.get() != base.get())
      throw std::invalid_argument("StratifiedComplex: filtration ambient mismatch");
    xk.validate();
    if (xk.dim() > k) throw std::invalid_argument("StratifiedComplex: dim X_k > k");
    if (k > 0 && !filtration_base[k - 1].members.is_subset_of(xk.members))
      throw std::invalid_argument("StratifiedComplex: filtration not ascending");
  }
  if (!(filtration_base[n] == whole_complex(base)))
    throw std::invalid_argument("StratifiedComplex: X_n must be the whole complex");
  if (n >= 2 && !(filtration_base[n - 1].members == filtration_base[n - 2].members))
    throw std::invalid_argument("StratifiedComplex: pseudomanifold condition X_{n-1} = X_{n-2} fails");
  for (SimplexId i = 0; i < static_cast<SimplexId>(base->size()); ++i) {
    bool dense = false;
    for (SimplexId c : base->coface_ids(i))
      if (base->at(c).dim() == n) {
        dense = true;
        break;
      }
    if (!dense)
      throw std::invalid_argument("StratifiedComplex: simplex " + base->at(i).to_string() +
                                  " has no top-dimensional coface");
  }

  s->tower_ = subdivide_tower(base, depth);
  s->filt_base_ = std::move(filtration_base);
  for (int k = 0; k <= n; ++k) s->filt_x_.push_back(s->tower_.lift(s->filt_base_[k]));
  if (depth == 2) {
    s->dc_ = std::make_unique<DoubledComplex>();
    s->dc_->tower = s->tower_;
  }
  s->lst_cache_.resize(base->size());
  s->fst_cache_.resize(base->size());
  s->lst_done_.assign(base->size(), 0);
  s->fst_done_.assign(base->size(), 0);
  return s;
}

const DoubledComplex& StratifiedComplex::dc() const {
  if (!dc_) throw std::logic_error("StratifiedComplex: star machinery requires depth 2");
  return *dc_;
}

const SubcomplexRef& StratifiedComplex::filt_base(int k) const {
  if (k < 0 || k > n_) throw std::out_of_range("filt_base");
  return filt_base_[k];
}

const SubcomplexRef& StratifiedComplex::filt_x(int k) const {
  if (k < 0 || k > n_) throw std::out_of_range("filt_x");
  return filt_x_[k];
}

bool StratifiedComplex::has_singular_set() const {
  return n_ >= 2 && !filt_base_[n_ - 2].empty();
}

int StratifiedComplex::stratum_of(SimplexId base_simplex) const {
  for (int k = 0; k <= n_; ++k)
    if (filt_base_[k].members.test(base_simplex)) return k;
  throw std::logic_error("stratum_of: simplex missing from X_n");
}

const SubcomplexRef& StratifiedComplex::lst(SimplexId s) const {
  if (!lst_done_[s]) {
    lst_cache_[s] = star(x(), dc().barycenter_simplex(s));
    lst_done_[s] = 1;
  }
  return lst_cache_[s];
}

const SubcomplexRef& StratifiedComplex::fst(SimplexId s) const {
  if (!fst_done_[s]) {
    SubcomplexRef u = empty_subcomplex(x());
    for (SimplexId c : base()->coface_ids(s)) u = sub_union(u, lst(c));
    fst_cache_[s] = std::move(u);
    fst_done_[s] = 1;
  }
  return fst_cache_[s];
}

std::vector<SubcomplexRef> StratifiedComplex::open_chain() const {
  std::vector<SubcomplexRef> out;
  SubcomplexRef wholex = whole_complex(x());
  for (int k = 2; k <= n_ + 1; ++k) {
    int j = n_ - k;
    if (j < 0)
      out.push_back(wholex);
    else
      out.push_back(delta_subtract(wholex, filt_x_[j]));
  }
  return out;
}

namespace {
const std::vector<VertexId>& chain_entries(const SdComplex& sd1, SimplexId a) {
  return sd1.sd->at(a).v;
}
}  // namespace

LocalStructure StratifiedComplex::local_structure(SimplexId sigma) const {
  const DoubledComplex& d = dc();
  const SdComplex& sd1 = d.first();
  ComplexPtr X = x();
  LocalStructure ls;
  ls.sigma = sigma;

  auto contains_entry = [&](SimplexId a, SimplexId s) {
    const auto& e = chain_entries(sd1, a);
    return std::binary_search(e.begin(), e.end(), static_cast<VertexId>(s));
  };

  for (SimplexId a = 0; a < static_cast<SimplexId>(sd1.sd->size()); ++a) {
    if (!contains_entry(a, sigma)) continue;
    ls.S.push_back(static_cast<VertexId>(a));
    if (sd1.chain_top[a] == sigma) ls.S_minus.push_back(static_cast<VertexId>(a));
    if (sd1.chain_bottom[a] == sigma) ls.S_plus.push_back(static_cast<VertexId>(a));
  }

  ls.lst = lst(sigma);
  if (!(ls.lst == hull(X, ls.S)))
    throw std::runtime_error("local_structure: lst(sigma) != G(S(sigma))");

  SubcomplexRef im_sigma_x = tower_.lift(simplex_image(base(), sigma));
  ls.st_sigma = sub_inter(ls.lst, im_sigma_x);
  if (!(ls.st_sigma == hull(X, ls.S_minus)))
    throw std::runtime_error("local_structure: lst cap sigma != G(S_-)");

  ls.g_plus = hull(X, ls.S_plus);
  VertexId apex = d.barycenter_vertex(sigma);
  std::vector<VertexId> s_plus_no_apex;
  for (VertexId a : ls.S_plus)
    if (a != apex) s_plus_no_apex.push_back(a);
  ls.link_L = hull(X, s_plus_no_apex);

  // G(S_+) is the cone with apex b_sigma over L^sigma.
  for (auto i = ls.g_plus.members.find_first(); i != Bitset::npos; i = ls.g_plus.members.find_next(i)) {
    Simplex s = X->at(static_cast<SimplexId>(i));
    auto it = std::find(s.v.begin(), s.v.end(), apex);
    if (it == s.v.end()) {
      if (!ls.link_L.contains(static_cast<SimplexId>(i)))
        throw std::runtime_error("local_structure: cone check failed (off-apex simplex not in L)");
    } else if (s.v.size() > 1) {
      s.v.erase(it);
      if (!ls.link_L.contains(X->require_id(s)))
        throw std::runtime_error("local_structure: cone check failed (apex link not in L)");
    }
  }
  for (auto i = ls.link_L.members.find_first(); i != Bitset::npos; i = ls.link_L.members.find_next(i)) {
    Simplex s = X->at(static_cast<SimplexId>(i));
    s.v.push_back(apex);
    Simplex joined(std::move(s.v));
    auto id = X->id_of(joined);
    if (!id || !ls.g_plus.contains(*id))
      throw std::runtime_error("local_structure: cone check failed (apex join missing)");
  }

  // S(sigma) = { A cup B : A in S_-, B in S_+ }.
  {
    std::vector<char> seen(sd1.sd->size(), 0);
    for (VertexId va : ls.S_minus)
      for (VertexId vb : ls.S_plus) {
        std::vector<VertexId> u;
        const auto& ea = chain_entries(sd1, static_cast<SimplexId>(va));
        const auto& eb = chain_entries(sd1, static_cast<SimplexId>(vb));
        std::set_union(ea.begin(), ea.end(), eb.begin(), eb.end(), std::back_inserter(u));
        Simplex s;
        s.v = std::move(u);
        auto id = sd1.sd->id_of(s);
        if (!id) throw std::runtime_error("local_structure: A cup B is not a chain");
        seen[*id] = 1;
      }
    for (VertexId a : ls.S)
      if (!seen[a]) throw std::runtime_error("local_structure: S element not of the form A cup B");
  }

  // Product decomposition G(S_- x S_+) ~ G(S) via (A,B) -> A cup B.
  {
    ExtractedComplex A = extract(ls.st_sigma);
    ExtractedComplex B = extract(ls.g_plus);
    ExtractedComplex T = extract(ls.lst);
    ProductComplex P = product(A.complex, B.complex);
    std::vector<int> t_index(X->num_vertices(), -1);
    for (std::size_t i = 0; i < T.vertex_to_ambient.size(); ++i)
      t_index[T.vertex_to_ambient[i]] = static_cast<int>(i);

    std::vector<VertexId> fmap(P.complex->num_vertices());
    for (VertexId pv = 0; pv < P.complex->num_vertices(); ++pv) {
      auto [ia, ib] = P.decode(pv);
      SimplexId a = static_cast<SimplexId>(A.vertex_to_ambient[ia]);
      SimplexId b = static_cast<SimplexId>(B.vertex_to_ambient[ib]);
      std::vector<VertexId> u;
      const auto& ea = chain_entries(sd1, a);
      const auto& eb = chain_entries(sd1, b);
      std::set_union(ea.begin(), ea.end(), eb.begin(), eb.end(), std::back_inserter(u));
      Simplex s;
      s.v = std::move(u);
      auto id = sd1.sd->id_of(s);
      if (!id || t_index[*id] < 0) throw std::runtime_error("local_structure: union chain escapes lst");
      fmap[pv] = static_cast<VertexId>(t_index[*id]);
    }
    std::vector<int> a_index(sd1.sd->size(), -1), b_index(sd1.sd->size(), -1);
    for (std::size_t i = 0; i < A.vertex_to_ambient.size(); ++i)
      a_index[A.vertex_to_ambient[i]] = static_cast<int>(i);
    for (std::size_t i = 0; i < B.vertex_to_ambient.size(); ++i)
      b_index[B.vertex_to_ambient[i]] = static_cast<int>(i);
    const Simplex& sigma_sx = base()->at(sigma);
    std::vector<VertexId> gmap(T.complex->num_vertices());
    for (VertexId tv = 0; tv < T.complex->num_vertices(); ++tv) {
      SimplexId c = static_cast<SimplexId>(T.vertex_to_ambient[tv]);
      std::vector<VertexId> lo, hi;
      for (VertexId e : chain_entries(sd1, c)) {
        if (sigma_sx.has_face(base()->at(static_cast<SimplexId>(e)))) lo.push_back(e);
        if (base()->at(static_cast<SimplexId>(e)).has_face(sigma_sx)) hi.push_back(e);
      }
      Simplex lo_s, hi_s;
      lo_s.v = std::move(lo);
      hi_s.v = std::move(hi);
      int ia = a_index[*sd1.sd->id_of(lo_s)];
      int ib = b_index[*sd1.sd->id_of(hi_s)];
      if (ia < 0 || ib < 0) throw std::runtime_error("local_structure: chain split escapes S_-/S_+");
      gmap[tv] = P.pair_id(static_cast<VertexId>(ia), static_cast<VertexId>(ib));
    }
    SimplicialMap f(P.complex, T.complex, fmap);
    SimplicialMap g(T.complex, P.complex, gmap);
    if (!inverse_pair_isomorphism(f, g, whole_complex(P.complex), whole_complex(T.complex)))
      throw std::runtime_error("local_structure: product decomposition is not an isomorphism");
  }

  // L^sigma ~ L^A for every A in S_- via prefix extension.
  {
    ExtractedComplex L = extract(ls.link_L);
    std::vector<int> l_index(sd1.sd->size(), -1);
    for (std::size_t i = 0; i < L.vertex_to_ambient.size(); ++i)
      l_index[L.vertex_to_ambient[i]] = static_cast<int>(i);
    for (VertexId va : ls.S_minus) {
      const auto& ea = chain_entries(sd1, static_cast<SimplexId>(va));
      std::vector<VertexId> sa;  // S_+(A) - {A}
      for (VertexId c : ls.S) {
        const auto& ec = chain_entries(sd1, static_cast<SimplexId>(c));
        if (!std::includes(ec.begin(), ec.end(), ea.begin(), ea.end())) continue;
        bool has_extra = false, extras_above = true;
        for (VertexId e : ec) {
          if (std::binary_search(ea.begin(), ea.end(), e)) continue;
          has_extra = true;
          const Simplex& es = base()->at(static_cast<SimplexId>(e));
          if (static_cast<SimplexId>(e) == sigma || !es.has_face(base()->at(sigma))) extras_above = false;
        }
        if (has_extra && extras_above) sa.push_back(c);
      }
      SubcomplexRef la_sub = hull(x(), sa);
      ExtractedComplex LA = extract(la_sub);
      std::vector<int> la_index(sd1.sd->size(), -1);
      for (std::size_t i = 0; i < LA.vertex_to_ambient.size(); ++i)
        la_index[LA.vertex_to_ambient[i]] = static_cast<int>(i);

      std::vector<VertexId> fmap(L.complex->num_vertices());
      for (VertexId lv = 0; lv < L.complex->num_vertices(); ++lv) {
        const auto& ec = chain_entries(sd1, static_cast<SimplexId>(L.vertex_to_ambient[lv]));
        std::vector<VertexId> u;
        std::set_union(ec.begin(), ec.end(), ea.begin(), ea.end(), std::back_inserter(u));
        Simplex s;
        s.v = std::move(u);
        auto id = sd1.sd->id_of(s);
        if (!id || la_index[*id] < 0)
          throw std::runtime_error("local_structure: prefix extension escapes L^A");
        fmap[lv] = static_cast<VertexId>(la_index[*id]);
      }
      std::vector<VertexId> gmap(LA.complex->num_vertices());
      for (VertexId av = 0; av < LA.complex->num_vertices(); ++av) {
        const auto& ec = chain_entries(sd1, static_cast<SimplexId>(LA.vertex_to_ambient[av]));
        std::vector<VertexId> kept;
        kept.push_back(static_cast<VertexId>(sigma));
        for (VertexId e : ec)
          if (!std::binary_search(ea.begin(), ea.end(), e)) kept.push_back(e);
        std::sort(kept.begin(), kept.end());
        Simplex s;
        s.v = std::move(kept);
        auto id = sd1.sd->id_of(s);
        if (!id || l_index[*id] < 0)
          throw std::runtime_error("local_structure: prefix contraction escapes L^sigma");
        gmap[av] = static_cast<VertexId>(l_index[*id]);
      }
      SimplicialMap f(L.complex, LA.complex, fmap);
      SimplicialMap g(LA.complex, L.complex, gmap);
      if (!inverse_pair_isomorphism(f, g, whole_complex(L.complex), whole_complex(LA.complex)))
        throw std::runtime_error("local_structure: L^sigma -> L^A is not an isomorphism");
    }
  }

  return ls;
}

// -- constructions -----------------------------------------------------------

ComplexPtr cone(ComplexPtr k, const std::string& apex_label) {
  std::vector<std::string> labels = k->labels();
  VertexId apex = static_cast<VertexId>(labels.size());
  labels.push_back(apex_label);
  std::vector<Simplex> simplices;
  simplices.reserve(k->size() * 2 + 1);
  for (SimplexId i = 0; i < static_cast<SimplexId>(k->size()); ++i) {
    Simplex s = k->at(i);
    simplices.push_back(s);
    s.v.push_back(apex);
    simplices.emplace_back(std::move(s.v));
  }
  return Complex::create(std::move(labels), std::move(simplices));
}

ComplexPtr suspension(ComplexPtr k, const std::string& north, const std::string& south) {
  std::vector<std::string> labels = k->labels();
  VertexId vn = static_cast<VertexId>(labels.size());
  labels.push_back(north);
  VertexId vs = static_cast<VertexId>(labels.size());
  labels.push_back(south);
  std::vector<Simplex> simplices;
  for (SimplexId i = 0; i < static_cast<SimplexId>(k->size()); ++i) {
    Simplex s = k->at(i);
    simplices.push_back(s);
    Simplex sn = s;
    sn.v.push_back(vn);
    simplices.emplace_back(std::move(sn.v));
    s.v.push_back(vs);
    simplices.emplace_back(std::move(s.v));
  }
  return Complex::create(std::move(labels), std::move(simplices));
}

ComplexPtr torus_7() {
  std::vector<std::string> labels;
  for (int i = 0; i < 7; ++i) labels.push_back("t" + std::to_string(i));
  std::vector<Simplex> tris;
  for (VertexId i = 0; i < 7; ++i) {
    tris.push_back(Simplex::of({i, static_cast<VertexId>((i + 1) % 7), static_cast<VertexId>((i + 3) % 7)}));
    tris.push_back(Simplex::of({i, static_cast<VertexId>((i + 2) % 7), static_cast<VertexId>((i + 3) % 7)}));
  }
  return Complex::from_maximal(std::move(labels), std::move(tris));
}

std::vector<std::string> catalog_names() {
  return {"sphere-2", "sphere-3", "cone-s2", "sigma-t2", "pinched-torus"};
}

std::string catalog_description(const std::string& name) {
  if (name == "sphere-2") return "boundary of the 3-simplex (S^2), empty singular set, n=2";
  if (name == "sphere-3") return "boundary of the 4-simplex (S^3), empty singular set, n=3";
  if (name == "cone-s2") return "cone on the boundary of the 3-simplex, apex singular, n=3";
  if (name == "sigma-t2") return "suspension of the 7-vertex torus, both apexes singular, n=3";
  if (name == "pinched-torus") return "spindle over a triangle circle, one apex marked singular, n=2";
  throw std::invalid_argument("unknown space: " + name);
}

namespace {
// All catalog filtrations are point-singularity ones: X_k = sing for k < n,
// X_n the whole complex.
std::vector<SubcomplexRef> point_filtration(ComplexPtr base, SubcomplexRef sing, int n) {
  std::vector<SubcomplexRef> filt;
  for (int k = 0; k < n; ++k) filt.push_back(sing);
  filt.push_back(whole_complex(base));
  return filt;
}
}  // namespace

StratifiedPtr make_space(const std::string& name, int depth) {
  if (name == "sphere-2") {
    auto b = Complex::boundary_simplex(3);
    return StratifiedComplex::create(b, point_filtration(b, empty_subcomplex(b), 2), 2, name, depth);
  }
  if (name == "sphere-3") {
    auto b = Complex::boundary_simplex(4);
    return StratifiedComplex::create(b, point_filtration(b, empty_subcomplex(b), 3), 3, name, depth);
  }
  if (name == "cone-s2") {
    auto b = cone(Complex::boundary_simplex(3));
    auto apex = closure(b, std::vector<SimplexId>{b->singleton(static_cast<VertexId>(b->num_vertices() - 1))});
    return StratifiedComplex::create(b, point_filtration(b, apex, 3), 3, name, depth);
  }
  if (name == "sigma-t2") {
    auto b = suspension(torus_7());
    auto poles = closure(b, std::vector<SimplexId>{b->singleton(static_cast<VertexId>(b->num_vertices() - 2)),
                                                   b->singleton(static_cast<VertexId>(b->num_vertices() - 1))});
    return StratifiedComplex::create(b, point_filtration(b, poles, 3), 3, name, depth);
  }
  if (name == "pinched-torus") {
    auto b = suspension(Complex::boundary_simplex(2), "pinch", "south");
    auto pinch = closure(b, std::vector<SimplexId>{b->singleton(3)});
    return StratifiedComplex::create(b, point_filtration(b, pinch, 2), 2, name, depth);
  }
  throw std::invalid_argument("unknown space: " + name);
}

std::vector<Perversity> acceptance_perversities(int n) { return Perversity::presets(n); }

}  // namespace strathom
