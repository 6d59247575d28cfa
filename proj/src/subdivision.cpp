#include "strathom/subdivision.hpp"

#include <algorithm>

namespace strathom {

SdComplex subdivide(ComplexPtr k) {
  SdComplex out;
  out.base = k;
  const SimplexId n = static_cast<SimplexId>(k->size());

  // Enumerate all chains in the face poset, grouped by their maximum.
  // chains_by_max[s] holds chains ending at s, each a sorted id list.
  std::vector<std::vector<std::vector<VertexId>>> chains_by_max(n);
  for (SimplexId s = 0; s < n; ++s) {
    chains_by_max[s].push_back({static_cast<VertexId>(s)});
    const Simplex& sx = k->at(s);
    std::size_t nv = sx.v.size();
    if (nv > 24) throw std::invalid_argument("subdivide: simplex too large");
    for (std::uint32_t mask = 1; mask + 1 < (1u << nv); ++mask) {
      // proper nonempty subsets
      std::vector<VertexId> fv;
      for (std::size_t j = 0; j < nv; ++j)
        if (mask & (1u << j)) fv.push_back(sx.v[j]);
      SimplexId f = k->require_id(Simplex(fv));
      for (const auto& c : chains_by_max[f]) {
        std::vector<VertexId> ext = c;
        ext.push_back(static_cast<VertexId>(s));
        chains_by_max[s].push_back(std::move(ext));
      }
    }
  }

  std::vector<std::string> labels;
  labels.reserve(n);
  for (SimplexId s = 0; s < n; ++s) labels.push_back("b" + k->at(s).to_string());
  std::vector<Simplex> simplices;
  for (SimplexId s = 0; s < n; ++s)
    for (auto& c : chains_by_max[s]) {
      Simplex sx;
      sx.v = std::move(c);  // ascending ids == chain order, already sorted
      simplices.push_back(std::move(sx));
    }
  out.sd = Complex::create(std::move(labels), std::move(simplices));

  out.chain_top.resize(out.sd->size());
  out.chain_bottom.resize(out.sd->size());
  for (SimplexId c = 0; c < static_cast<SimplexId>(out.sd->size()); ++c) {
    const Simplex& cx = out.sd->at(c);
    out.chain_bottom[c] = static_cast<SimplexId>(cx.v.front());
    out.chain_top[c] = static_cast<SimplexId>(cx.v.back());
  }
  return out;
}

SubcomplexRef subdivide_sub(const SdComplex& sd, const SubcomplexRef& z) {
  if (z.ambient.get() != sd.base.get()) throw std::domain_error("subdivide_sub: wrong ambient");
  Bitset m(sd.sd->size());
  for (SimplexId c = 0; c < static_cast<SimplexId>(sd.sd->size()); ++c)
    if (z.members.test(sd.chain_top[c])) m.set(c);
  return {sd.sd, std::move(m)};
}

SubcomplexRef SdTower::lift(const SubcomplexRef& z) const {
  SubcomplexRef cur = z;
  for (const auto& st : stages) cur = subdivide_sub(st, cur);
  return cur;
}

SdTower subdivide_tower(ComplexPtr base, int depth) {
  SdTower t;
  t.base = base;
  ComplexPtr cur = base;
  for (int i = 0; i < depth; ++i) {
    t.stages.push_back(subdivide(cur));
    cur = t.stages.back().sd;
  }
  return t;
}

VertexId DoubledComplex::barycenter_vertex(SimplexId base_s) const {
  // {sigma} as a 0-simplex of Sd(base) is an Sd-simplex id, which is a
  // vertex id of Sd^2.
  SimplexId sd_singleton = first().sd->singleton(static_cast<VertexId>(base_s));
  return static_cast<VertexId>(sd_singleton);
}

SimplexId DoubledComplex::barycenter_simplex(SimplexId base_s) const {
  return x()->singleton(barycenter_vertex(base_s));
}

SimplexId DoubledComplex::geometric_carrier(SimplexId x_simplex) const {
  const Simplex& xs = x()->at(x_simplex);
  SimplexId max_vertex_chain = static_cast<SimplexId>(xs.v.back());
  return first().chain_top[max_vertex_chain];
}

SimplexId DoubledComplex::stalk_carrier(SimplexId x_simplex) const {
  const Simplex& xs = x()->at(x_simplex);
  SimplexId min_vertex_chain = static_cast<SimplexId>(xs.v.front());
  return first().chain_top[min_vertex_chain];
}

DoubledComplex double_subdivide(ComplexPtr base) {
  DoubledComplex dc;
  dc.tower = subdivide_tower(std::move(base), 2);
  return dc;
}

SimplexId carrier(const DoubledComplex& dc, SimplexId x_simplex) {
  return dc.geometric_carrier(x_simplex);
}

}  // namespace strathom
