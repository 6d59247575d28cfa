#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace strathom {

using VertexId = std::uint32_t;
using SimplexId = std::int32_t;
using Bitset = boost::dynamic_bitset<>;

// Strictly sorted, nonempty vertex list.
struct Simplex {
  std::vector<VertexId> v;

  Simplex() = default;
  explicit Simplex(std::vector<VertexId> vs);
  static Simplex of(std::initializer_list<VertexId> vs);

  int dim() const { return static_cast<int>(v.size()) - 1; }
  bool contains(VertexId x) const;
  bool has_face(const Simplex& f) const;  // f subset of this
  bool operator==(const Simplex& o) const { return v == o.v; }
  std::string to_string() const;
};

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const;
};

class Complex;
using ComplexPtr = std::shared_ptr<const Complex>;

// Immutable abstract simplicial complex with its full face bookkeeping.
// Simplices are stored in canonical order (dimension, then lexicographic),
// so ids are stable, dimensions are contiguous ranges, and structural
// equality of complexes is equality of simplex lists.
class Complex {
 public:
  static ComplexPtr create(std::vector<std::string> labels, std::vector<Simplex> simplices);
  // Close the given simplices under faces first.
  static ComplexPtr from_maximal(std::vector<std::string> labels, std::vector<Simplex> maximal);
  static ComplexPtr standard_simplex(int n);  // full Delta^n
  static ComplexPtr boundary_simplex(int n);  // boundary of Delta^n
  static ComplexPtr empty_complex();

  std::size_t num_vertices() const { return labels_.size(); }
  std::size_t size() const { return simp_.size(); }
  int dim() const;
  std::vector<std::size_t> f_vector() const;

  const Simplex& at(SimplexId id) const { return simp_[id]; }
  std::optional<SimplexId> id_of(const Simplex& s) const;
  SimplexId require_id(const Simplex& s) const;
  SimplexId singleton(VertexId v) const { return singleton_[v]; }
  const std::string& label(VertexId v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }

  // Ids of codimension-1 faces.
  const std::vector<SimplexId>& facets(SimplexId id) const { return facets_[id]; }
  // All simplices containing vertex v, ascending.
  const std::vector<SimplexId>& incident(VertexId v) const { return vert_inc_[v]; }
  // Ids in dimension k form the contiguous range [begin, end).
  std::pair<SimplexId, SimplexId> dim_range(int k) const;

  // All simplices containing s (including s itself), ascending.
  std::vector<SimplexId> coface_ids(SimplexId s) const;

  bool structurally_equal(const Complex& other) const;

 private:
  std::vector<std::string> labels_;
  std::vector<Simplex> simp_;
  std::unordered_map<Simplex, SimplexId, SimplexHash> index_;
  std::vector<std::vector<SimplexId>> facets_;
  std::vector<std::vector<SimplexId>> vert_inc_;
  std::vector<SimplexId> singleton_;
  std::vector<SimplexId> dim_start_;  // dim_start_[k] = first id of dimension k

  Complex() = default;
};

// A subcomplex of a fixed ambient complex: a face-closed set of simplex ids.
struct SubcomplexRef {
  ComplexPtr ambient;
  Bitset members;  // size == ambient->size()

  bool empty() const { return !members.any(); }
  std::size_t size() const { return members.count(); }
  int dim() const;
  std::vector<std::size_t> f_vector() const;
  long euler_characteristic() const;
  bool contains(SimplexId id) const { return members.test(id); }
  Bitset vertex_set() const;  // V(Y) as a bitset over ambient vertices
  std::vector<SimplexId> ids() const;
  void validate() const;  // face-closure, sizes
  bool operator==(const SubcomplexRef& o) const;
};

void require_same_ambient(const SubcomplexRef& a, const SubcomplexRef& b);

// -- scx_core operations ----------------------------------------------------

SubcomplexRef whole_complex(ComplexPtr k);
SubcomplexRef empty_subcomplex(ComplexPtr k);
SubcomplexRef make_subcomplex(ComplexPtr k, Bitset members);  // validates face closure

// <S>: S plus all faces of members.
SubcomplexRef closure(ComplexPtr k, const std::vector<SimplexId>& gens);
SubcomplexRef closure(ComplexPtr k, const Bitset& gens);
// Im(sigma) = power set of sigma.
SubcomplexRef simplex_image(ComplexPtr k, SimplexId s);

SubcomplexRef sub_union(const SubcomplexRef& a, const SubcomplexRef& b);
SubcomplexRef sub_inter(const SubcomplexRef& a, const SubcomplexRef& b);
SubcomplexRef sub_union(ComplexPtr k, const std::vector<SubcomplexRef>& family);
SubcomplexRef sub_inter(ComplexPtr k, const std::vector<SubcomplexRef>& family);
bool sub_leq(const SubcomplexRef& a, const SubcomplexRef& b);  // a <= b

// Y -_Delta Z = { sigma in Y : sigma cap V(Z) = empty }.
SubcomplexRef delta_subtract(const SubcomplexRef& y, const SubcomplexRef& z);

// G(A): all simplices with vertices inside A. Tracks A itself as the vertex
// set of the construction (members of A always contribute their singletons).
SubcomplexRef hull(ComplexPtr k, const Bitset& vertices);
SubcomplexRef hull(ComplexPtr k, const std::vector<VertexId>& vertices);

bool is_fat(const SubcomplexRef& z);

SubcomplexRef star(ComplexPtr k, SimplexId s);
SubcomplexRef link(ComplexPtr k, SimplexId s);
std::vector<SimplexId> cofaces(ComplexPtr k, SimplexId s);  // beta(sigma), including s

// Number of connected components of |Y|.
int component_count(const SubcomplexRef& y);

// Standalone complex from a subcomplex, with maps back to the ambient.
struct ExtractedComplex {
  ComplexPtr complex;
  std::vector<VertexId> vertex_to_ambient;
  std::vector<SimplexId> simplex_to_ambient;
};
ExtractedComplex extract(const SubcomplexRef& y);

// Ordered product. Vertex (i,j) of K x L gets id i*|V(L)|+j; simplices are
// the monotone staircases with simplex projections.
struct ProductComplex {
  ComplexPtr complex;
  std::size_t right_vertices = 0;
  VertexId pair_id(VertexId a, VertexId b) const { return static_cast<VertexId>(a * right_vertices + b); }
  std::pair<VertexId, VertexId> decode(VertexId p) const {
    return {static_cast<VertexId>(p / right_vertices), static_cast<VertexId>(p % right_vertices)};
  }
};
ProductComplex product(ComplexPtr k, ComplexPtr l);

// Vertex map K -> L whose simplex images are simplices of L.
struct SimplicialMap {
  ComplexPtr dom;
  ComplexPtr cod;
  std::vector<VertexId> vmap;

  SimplicialMap(ComplexPtr d, ComplexPtr c, std::vector<VertexId> m);
  Simplex apply(const Simplex& s) const;
  SimplexId apply_id(SimplexId s) const;
};

SubcomplexRef map_image(const SimplicialMap& f, const SubcomplexRef& z);
SubcomplexRef map_preimage(const SimplicialMap& f, const SubcomplexRef& z);

// Inverse-pair lemma: if f and g are both well defined on the respective
// hulls and are inverse bijections on vertices, they are inverse simplicial
// isomorphisms. Returns true iff both directions define maps and compose to
// the identity on the given subcomplexes.
bool inverse_pair_isomorphism(const SimplicialMap& f, const SimplicialMap& g,
                              const SubcomplexRef& a, const SubcomplexRef& b);

}  // namespace strathom
