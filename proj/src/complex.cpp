#include "strathom/complex.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace strathom {

Simplex::Simplex(std::vector<VertexId> vs) : v(std::move(vs)) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  if (v.empty()) throw std::invalid_argument("Simplex: empty vertex set");
}

Simplex Simplex::of(std::initializer_list<VertexId> vs) { return Simplex(std::vector<VertexId>(vs)); }

bool Simplex::contains(VertexId x) const { return std::binary_search(v.begin(), v.end(), x); }

bool Simplex::has_face(const Simplex& f) const {
  return std::includes(v.begin(), v.end(), f.v.begin(), f.v.end());
}

std::string Simplex::to_string() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << "}";
  return os.str();
}

std::size_t SimplexHash::operator()(const Simplex& s) const {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (VertexId x : s.v) h = (h ^ (x + 0x9e3779b9 + (h << 6) + (h >> 2))) * 0x100000001b3ull;
  return h;
}

namespace {
bool canonical_less(const Simplex& a, const Simplex& b) {
  if (a.v.size() != b.v.size()) return a.v.size() < b.v.size();
  return a.v < b.v;
}
}  // namespace

ComplexPtr Complex::create(std::vector<std::string> labels, std::vector<Simplex> simplices) {
  auto k = std::shared_ptr<Complex>(new Complex());
  k->labels_ = std::move(labels);
  // Every declared vertex spans its singleton.
  for (VertexId v = 0; v < k->labels_.size(); ++v) simplices.push_back(Simplex({v}));
  std::sort(simplices.begin(), simplices.end(), canonical_less);
  simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());
  k->simp_ = std::move(simplices);

  k->index_.reserve(k->simp_.size() * 2);
  for (SimplexId i = 0; i < static_cast<SimplexId>(k->simp_.size()); ++i) {
    const Simplex& s = k->simp_[i];
    for (VertexId x : s.v)
      if (x >= k->labels_.size()) throw std::invalid_argument("Complex: simplex vertex out of range");
    k->index_.emplace(s, i);
  }

  int d = k->simp_.empty() ? -1 : k->simp_.back().dim();
  k->dim_start_.assign(d + 2, static_cast<SimplexId>(k->simp_.size()));
  for (SimplexId i = static_cast<SimplexId>(k->simp_.size()) - 1; i >= 0; --i)
    k->dim_start_[k->simp_[i].dim()] = i;
  for (int j = d; j >= 0; --j)
    if (k->dim_start_[j] > k->dim_start_[j + 1]) k->dim_start_[j] = k->dim_start_[j + 1];

  k->facets_.resize(k->simp_.size());
  k->vert_inc_.assign(k->labels_.size(), {});
  k->singleton_.assign(k->labels_.size(), -1);
  for (SimplexId i = 0; i < static_cast<SimplexId>(k->simp_.size()); ++i) {
    const Simplex& s = k->simp_[i];
    for (VertexId x : s.v) k->vert_inc_[x].push_back(i);
    if (s.dim() == 0) {
      k->singleton_[s.v[0]] = i;
      continue;
    }
    auto& fl = k->facets_[i];
    fl.reserve(s.v.size());
    Simplex f;
    f.v.resize(s.v.size() - 1);
    for (std::size_t drop = 0; drop < s.v.size(); ++drop) {
      std::size_t t = 0;
      for (std::size_t j = 0; j < s.v.size(); ++j)
        if (j != drop) f.v[t++] = s.v[j];
      auto it = k->index_.find(f);
      if (it == k->index_.end()) throw std::invalid_argument("Complex: not face-closed: missing " + f.to_string());
      fl.push_back(it->second);
    }
  }
  for (VertexId v = 0; v < k->labels_.size(); ++v)
    if (k->singleton_[v] < 0) throw std::logic_error("Complex: vertex without singleton");
  return k;
}

ComplexPtr Complex::from_maximal(std::vector<std::string> labels, std::vector<Simplex> maximal) {
  std::set<std::vector<VertexId>> seen;
  std::vector<Simplex> all;
  // Close under faces by subset enumeration (dimensions are small here).
  for (const Simplex& s : maximal) {
    std::size_t n = s.v.size();
    if (n > 24) throw std::invalid_argument("from_maximal: simplex too large");
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      std::vector<VertexId> f;
      for (std::size_t j = 0; j < n; ++j)
        if (mask & (1u << j)) f.push_back(s.v[j]);
      if (seen.insert(f).second) all.emplace_back(std::move(f));
    }
  }
  return create(std::move(labels), std::move(all));
}

ComplexPtr Complex::standard_simplex(int n) {
  std::vector<std::string> labels;
  std::vector<VertexId> top;
  for (int i = 0; i <= n; ++i) {
    labels.push_back(std::to_string(i));
    top.push_back(i);
  }
  return from_maximal(std::move(labels), {Simplex(top)});
}

ComplexPtr Complex::boundary_simplex(int n) {
  std::vector<std::string> labels;
  std::vector<Simplex> faces;
  for (int i = 0; i <= n; ++i) labels.push_back(std::to_string(i));
  for (int drop = 0; drop <= n; ++drop) {
    std::vector<VertexId> f;
    for (int i = 0; i <= n; ++i)
      if (i != drop) f.push_back(i);
    faces.emplace_back(f);
  }
  return from_maximal(std::move(labels), std::move(faces));
}

ComplexPtr Complex::empty_complex() { return create({}, {}); }

int Complex::dim() const { return simp_.empty() ? -1 : simp_.back().dim(); }

std::vector<std::size_t> Complex::f_vector() const {
  std::vector<std::size_t> f(dim() + 1, 0);
  for (const auto& s : simp_) ++f[s.dim()];
  return f;
}

std::optional<SimplexId> Complex::id_of(const Simplex& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SimplexId Complex::require_id(const Simplex& s) const {
  auto id = id_of(s);
  if (!id) throw std::domain_error("Complex: simplex not in complex: " + s.to_string());
  return *id;
}

std::pair<SimplexId, SimplexId> Complex::dim_range(int k) const {
  if (k < 0 || k > dim()) return {0, 0};
  SimplexId b = dim_start_[k];
  SimplexId e = (k + 1 < static_cast<int>(dim_start_.size())) ? dim_start_[k + 1]
                                                              : static_cast<SimplexId>(simp_.size());
  return {b, e};
}

std::vector<SimplexId> Complex::coface_ids(SimplexId s) const {
  const Simplex& sx = simp_[s];
  std::vector<SimplexId> out;
  for (SimplexId c : vert_inc_[sx.v[0]])
    if (simp_[c].has_face(sx)) out.push_back(c);
  return out;
}

bool Complex::structurally_equal(const Complex& other) const {
  return labels_ == other.labels_ && simp_ == other.simp_;
}

// -- SubcomplexRef -----------------------------------------------------------

int SubcomplexRef::dim() const {
  int d = -1;
  for (auto i = members.find_first(); i != Bitset::npos; i = members.find_next(i))
    d = std::max(d, ambient->at(static_cast<SimplexId>(i)).dim());
  return d;
}

std::vector<std::size_t> SubcomplexRef::f_vector() const {
  std::vector<std::size_t> f(std::max(dim() + 1, 0), 0);
  for (auto i = members.find_first(); i != Bitset::npos; i = members.find_next(i))
    ++f[ambient->at(static_cast<SimplexId>(i)).dim()];
  return f;
}

long SubcomplexRef::euler_characteristic() const {
  long chi = 0;
  for (auto i = members.find_first(); i != Bitset::npos; i = members.find_next(i))
    chi += (ambient->at(static_cast<SimplexId>(i)).dim() % 2 == 0) ? 1 : -1;
  return chi;
}

Bitset SubcomplexRef::vertex_set() const {
  Bitset vs(ambient->num_vertices());
  for (auto i = members.find_first(); i != Bitset::npos; i = members.find_next(i))
    for (VertexId x : ambient->at(static_cast<SimplexId>(i)).v) vs.set(x);
  return vs;
}

std::vector<SimplexId> SubcomplexRef::ids() const {
  std::vector<SimplexId> out;
  out.reserve(members.count());
  for (auto i = members.find_first(); i != Bitset::npos; i = members.find_next(i))
    out.push_back(static_cast<SimplexId>(i));
  return out;
}

void SubcomplexRef::validate() const {
  if (members.size() != ambient->size()) throw std::logic_error("SubcomplexRef: bitset size mismatch");
  for (auto i = members.find_first(); i != Bitset::npos; i = members.find_next(i))
    for (SimplexId f : ambient->facets(static_cast<SimplexId>(i)))
      if (!members.test(f)) throw std::logic_error("SubcomplexRef: not face-closed");
}

bool SubcomplexRef::operator==(const SubcomplexRef& o) const {
  return ambient.get() == o.ambient.get() && members == o.members;
}

void require_same_ambient(const SubcomplexRef& a, const SubcomplexRef& b) {
  if (a.ambient.get() != b.ambient.get())
    throw std::domain_error("subcomplex operation: ambient complexes differ");
}

// -- operations --------------------------------------------------------------

SubcomplexRef whole_complex(ComplexPtr k) {
  Bitset m(k->size());
  m.set();
  return {std::move(k), std::move(m)};
}

SubcomplexRef empty_subcomplex(ComplexPtr k) {
  Bitset m(k->size());
  return {std::move(k), std::move(m)};
}

SubcomplexRef make_subcomplex(ComplexPtr k, Bitset members) {
  SubcomplexRef y{std::move(k), std::move(members)};
  y.validate();
  return y;
}

SubcomplexRef closure(ComplexPtr k, const Bitset& gens) {
  Bitset m = gens;
  std::vector<SimplexId> stack;
  for (auto i = gens.find_first(); i != Bitset::npos; i = gens.find_next(i))
    stack.push_back(static_cast<SimplexId>(i));
  while (!stack.empty()) {
    SimplexId s = stack.back();
    stack.pop_back();
    for (SimplexId f : k->facets(s))
      if (!m.test(f)) {
        m.set(f);
        stack.push_back(f);
      }
  }
  return {std::move(k), std::move(m)};
}

SubcomplexRef closure(ComplexPtr k, const std::vector<SimplexId>& gens) {
  Bitset g(k->size());
  for (SimplexId s : gens) {
    if (s < 0 || s >= static_cast<SimplexId>(k->size()))
      throw std::domain_error("closure: generator not in complex");
    g.set(s);
  }
  return closure(std::move(k), g);
}

SubcomplexRef simplex_image(ComplexPtr k, SimplexId s) { return closure(std::move(k), std::vector<SimplexId>{s}); }

SubcomplexRef sub_union(const SubcomplexRef& a, const SubcomplexRef& b) {
  require_same_ambient(a, b);
  return {a.ambient, a.members | b.members};
}

SubcomplexRef sub_inter(const SubcomplexRef& a, const SubcomplexRef& b) {
  require_same_ambient(a, b);
  return {a.ambient, a.members & b.members};
}

SubcomplexRef sub_union(ComplexPtr k, const std::vector<SubcomplexRef>& family) {
  SubcomplexRef out = empty_subcomplex(k);
  for (const auto& y : family) {
    if (y.ambient.get() != k.get()) throw std::domain_error("sub_union: ambient mismatch");
    out.members |= y.members;
  }
  return out;
}

SubcomplexRef sub_inter(ComplexPtr k, const std::vector<SubcomplexRef>& family) {
  SubcomplexRef out = whole_complex(k);
  for (const auto& y : family) {
    if (y.ambient.get() != k.get()) throw std::domain_error("sub_inter: ambient mismatch");
    out.members &= y.members;
  }
  return out;
}

bool sub_leq(const SubcomplexRef& a, const SubcomplexRef& b) {
  require_same_ambient(a, b);
  return a.members.is_subset_of(b.members);
}

SubcomplexRef delta_subtract(const SubcomplexRef& y, const SubcomplexRef& z) {
  require_same_ambient(y, z);
  Bitset vz = z.vertex_set();
  Bitset m(y.ambient->size());
  for (auto i = y.members.find_first(); i != Bitset::npos; i = y.members.find_next(i)) {
    const Simplex& s = y.ambient->at(static_cast<SimplexId>(i));
    bool hit = false;
    for (VertexId x : s.v)
      if (vz.test(x)) {
        hit = true;
        break;
      }
    if (!hit) m.set(i);
  }
  return {y.ambient, std::move(m)};
}

SubcomplexRef hull(ComplexPtr k, const Bitset& vertices) {
  Bitset m(k->size());
  for (SimplexId i = 0; i < static_cast<SimplexId>(k->size()); ++i) {
    const Simplex& s = k->at(i);
    bool inside = true;
    for (VertexId x : s.v)
      if (!vertices.test(x)) {
        inside = false;
        break;
      }
    if (inside) m.set(i);
  }
  return {std::move(k), std::move(m)};
}

SubcomplexRef hull(ComplexPtr k, const std::vector<VertexId>& vertices) {
  Bitset vs(k->num_vertices());
  for (VertexId v : vertices) {
    if (v >= k->num_vertices()) throw std::domain_error("hull: vertex out of range");
    vs.set(v);
  }
  return hull(std::move(k), vs);
}

bool is_fat(const SubcomplexRef& z) {
  return hull(z.ambient, z.vertex_set()).members == z.members;
}

SubcomplexRef star(ComplexPtr k, SimplexId s) {
  if (s < 0 || s >= static_cast<SimplexId>(k->size())) throw std::domain_error("star: simplex not in complex");
  return closure(k, k->coface_ids(s));
}

SubcomplexRef link(ComplexPtr k, SimplexId s) {
  return delta_subtract(star(k, s), simplex_image(k, s));
}

std::vector<SimplexId> cofaces(ComplexPtr k, SimplexId s) {
  if (s < 0 || s >= static_cast<SimplexId>(k->size())) throw std::domain_error("cofaces: simplex not in complex");
  return k->coface_ids(s);
}

namespace {
struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(std::size_t n) : p(n) {
    for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<int>(i);
  }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void unite(int a, int b) { p[find(a)] = find(b); }
};
}  // namespace

int component_count(const SubcomplexRef& y) {
  UnionFind uf(y.ambient->size());
  for (auto i = y.members.find_first(); i != Bitset::npos; i = y.members.find_next(i))
    for (SimplexId f : y.ambient->facets(static_cast<SimplexId>(i)))
      uf.unite(static_cast<int>(i), f);
  std::set<int> roots;
  for (auto i = y.members.find_first(); i != Bitset::npos; i = y.members.find_next(i))
    roots.insert(uf.find(static_cast<int>(i)));
  return static_cast<int>(roots.size());
}

ExtractedComplex extract(const SubcomplexRef& y) {
  Bitset vs = y.vertex_set();
  ExtractedComplex out;
  std::vector<VertexId> new_id(y.ambient->num_vertices(), 0);
  std::vector<std::string> labels;
  for (auto v = vs.find_first(); v != Bitset::npos; v = vs.find_next(v)) {
    new_id[v] = static_cast<VertexId>(out.vertex_to_ambient.size());
    out.vertex_to_ambient.push_back(static_cast<VertexId>(v));
    labels.push_back(y.ambient->label(static_cast<VertexId>(v)));
  }
  std::vector<Simplex> simplices;
  for (auto i = y.members.find_first(); i != Bitset::npos; i = y.members.find_next(i)) {
    Simplex s = y.ambient->at(static_cast<SimplexId>(i));
    for (VertexId& x : s.v) x = new_id[x];
    simplices.push_back(std::move(s));
  }
  out.complex = Complex::create(std::move(labels), std::move(simplices));
  out.simplex_to_ambient.resize(out.complex->size());
  for (SimplexId i = 0; i < static_cast<SimplexId>(out.complex->size()); ++i) {
    Simplex s = out.complex->at(i);
    for (VertexId& x : s.v) x = out.vertex_to_ambient[x];
    out.simplex_to_ambient[i] = y.ambient->require_id(s);
  }
  return out;
}

ProductComplex product(ComplexPtr k, ComplexPtr l) {
  ProductComplex out;
  out.right_vertices = l->num_vertices();
  std::vector<std::string> labels;
  labels.reserve(k->num_vertices() * l->num_vertices());
  for (VertexId a = 0; a < k->num_vertices(); ++a)
    for (VertexId b = 0; b < l->num_vertices(); ++b)
      labels.push_back("(" + k->label(a) + "," + l->label(b) + ")");

  // Staircase enumeration. A staircase is a strictly increasing sequence of
  // pairs, nondecreasing in both coordinates, whose coordinate projections
  // are simplices. Subsets of staircases are staircases, so the set is
  // face-closed by construction.
  std::set<std::vector<VertexId>> acc;
  std::vector<std::pair<VertexId, VertexId>> seq;
  std::vector<VertexId> pl, pr;  // projections, sorted ascending by construction

  auto emit = [&]() {
    std::vector<VertexId> verts;
    verts.reserve(seq.size());
    for (auto& [a, b] : seq) verts.push_back(out.pair_id(a, b));
    acc.insert(std::move(verts));
  };

  std::function<void(VertexId, VertexId)> dfs = [&](VertexId a, VertexId b) {
    emit();
    for (VertexId a2 = a; a2 < k->num_vertices(); ++a2) {
      for (VertexId b2 = (a2 == a ? b + 1 : b); b2 < l->num_vertices(); ++b2) {
        std::vector<VertexId> pl2 = pl, pr2 = pr;
        if (pl2.back() != a2) pl2.push_back(a2);
        if (pr2.back() != b2) pr2.push_back(b2);
        if (!k->id_of(Simplex(pl2)) || !l->id_of(Simplex(pr2))) continue;
        seq.emplace_back(a2, b2);
        std::swap(pl, pl2);
        std::swap(pr, pr2);
        dfs(a2, b2);
        std::swap(pl, pl2);
        std::swap(pr, pr2);
        seq.pop_back();
      }
    }
  };

  for (VertexId a = 0; a < k->num_vertices(); ++a)
    for (VertexId b = 0; b < l->num_vertices(); ++b) {
      seq = {{a, b}};
      pl = {a};
      pr = {b};
      dfs(a, b);
    }

  std::vector<Simplex> simplices;
  simplices.reserve(acc.size());
  for (auto& v : acc) simplices.emplace_back(v);
  out.complex = Complex::create(std::move(labels), std::move(simplices));
  return out;
}

SimplicialMap::SimplicialMap(ComplexPtr d, ComplexPtr c, std::vector<VertexId> m)
    : dom(std::move(d)), cod(std::move(c)), vmap(std::move(m)) {
  if (vmap.size() != dom->num_vertices()) throw std::invalid_argument("SimplicialMap: vertex map size");
  for (VertexId x : vmap)
    if (x >= cod->num_vertices()) throw std::invalid_argument("SimplicialMap: image vertex out of range");
  for (SimplexId i = 0; i < static_cast<SimplexId>(dom->size()); ++i)
    if (!cod->id_of(apply(dom->at(i))))
      throw std::invalid_argument("SimplicialMap: image of " + dom->at(i).to_string() + " is not a simplex");
}

Simplex SimplicialMap::apply(const Simplex& s) const {
  std::vector<VertexId> img;
  img.reserve(s.v.size());
  for (VertexId x : s.v) img.push_back(vmap[x]);
  return Simplex(std::move(img));
}

SimplexId SimplicialMap::apply_id(SimplexId s) const { return cod->require_id(apply(dom->at(s))); }

SubcomplexRef map_image(const SimplicialMap& f, const SubcomplexRef& z) {
  if (z.ambient.get() != f.dom.get()) throw std::domain_error("map_image: wrong ambient");
  Bitset m(f.cod->size());
  for (auto i = z.members.find_first(); i != Bitset::npos; i = z.members.find_next(i))
    m.set(f.apply_id(static_cast<SimplexId>(i)));
  return {f.cod, std::move(m)};
}

SubcomplexRef map_preimage(const SimplicialMap& f, const SubcomplexRef& z) {
  if (z.ambient.get() != f.cod.get()) throw std::domain_error("map_preimage: wrong ambient");
  Bitset m(f.dom->size());
  for (SimplexId i = 0; i < static_cast<SimplexId>(f.dom->size()); ++i)
    if (z.members.test(f.apply_id(i))) m.set(i);
  return {f.dom, std::move(m)};
}

bool inverse_pair_isomorphism(const SimplicialMap& f, const SimplicialMap& g,
                              const SubcomplexRef& a, const SubcomplexRef& b) {
  if (f.dom.get() != g.cod.get() || f.cod.get() != g.dom.get()) return false;
  if (a.ambient.get() != f.dom.get() || b.ambient.get() != f.cod.get()) return false;
  SubcomplexRef fa = map_image(f, a);
  SubcomplexRef gb = map_image(g, b);
  if (!(fa == b) || !(gb == a)) return false;
  for (auto i = a.members.find_first(); i != Bitset::npos; i = a.members.find_next(i))
    if (g.apply_id(f.apply_id(static_cast<SimplexId>(i))) != static_cast<SimplexId>(i)) return false;
  for (auto i = b.members.find_first(); i != Bitset::npos; i = b.members.find_next(i))
    if (f.apply_id(g.apply_id(static_cast<SimplexId>(i))) != static_cast<SimplexId>(i)) return false;
  return true;
}

}  // namespace strathom
