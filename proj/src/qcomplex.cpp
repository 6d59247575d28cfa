#include "strathom/qcomplex.hpp"

#include <sstream>

namespace strathom {

QComplex QComplex::zero() { return QComplex{}; }

QComplex QComplex::concentrated(int degree, int dim) {
  QComplex c;
  c.lo = degree;
  c.dims = {dim};
  return c;
}

int QComplex::dim(int m) const {
  int i = m - lo;
  if (i < 0 || i >= static_cast<int>(dims.size())) return 0;
  return dims[i];
}

SparseMatQ QComplex::diff(int m) const {
  int i = m - lo;
  if (i >= 0 && i < static_cast<int>(d.size())) return d[i];
  return SparseMatQ(dim(m + 1), dim(m));
}

int QComplex::total_dim() const {
  int t = 0;
  for (int x : dims) t += x;
  return t;
}

void QComplex::trim() {
  while (!dims.empty() && dims.back() == 0) {
    dims.pop_back();
    if (d.size() >= dims.size() && !d.empty()) d.pop_back();
  }
  while (!dims.empty() && dims.front() == 0) {
    dims.erase(dims.begin());
    if (!d.empty()) d.erase(d.begin());
    ++lo;
  }
  if (dims.empty()) {
    lo = 0;
    d.clear();
  }
  while (d.size() + 1 > dims.size() && !d.empty()) d.pop_back();
}

void QComplex::validate() const {
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i + 1 >= dims.size() && !(d[i].rows() == 0))
      throw std::logic_error("QComplex: dangling differential");
    if (d[i].cols() != dims[i]) throw std::logic_error("QComplex: differential domain mismatch");
    if (i + 1 < dims.size() && d[i].rows() != dims[i + 1])
      throw std::logic_error("QComplex: differential codomain mismatch");
  }
  for (std::size_t i = 0; i + 1 < d.size(); ++i) {
    if (!(d[i + 1] * d[i]).is_zero()) throw std::logic_error("QComplex: d o d != 0");
  }
}

std::map<int, int> QComplex::cohomology_dims() const {
  std::map<int, int> h;
  for (int m = lo; m <= hi(); ++m) {
    int n = dim(m);
    if (n == 0) continue;
    int rk_out = diff(m).rank();
    int rk_in = diff(m - 1).rank();
    int b = n - rk_out - rk_in;
    if (b != 0) h[m] = b;
  }
  return h;
}

SparseMatQ ChainMap::component(int m) const {
  int i = m - lo;
  if (i >= 0 && i < static_cast<int>(comp.size())) return comp[i];
  return SparseMatQ(b->dim(m), a->dim(m));
}

void ChainMap::validate() const {
  int m0 = std::min(a->lo, b->lo) - 1;
  int m1 = std::max(a->hi(), b->hi()) + 1;
  for (int m = m0; m <= m1; ++m) {
    SparseMatQ lhs = b->diff(m) * component(m);
    SparseMatQ rhs = component(m + 1) * a->diff(m);
    if (!(lhs - rhs).is_zero()) throw std::logic_error("ChainMap: does not commute with d");
  }
}

QComplex mapping_cone(const ChainMap& f) {
  const QComplex& A = *f.a;
  const QComplex& B = *f.b;
  int lo = std::min(A.lo - 1, B.lo);
  int hi = std::max(A.hi() - 1, B.hi());
  QComplex c;
  c.lo = lo;
  for (int m = lo; m <= hi; ++m) c.dims.push_back(A.dim(m + 1) + B.dim(m));
  // d_cone(a, b) = (-d_A a, f(a) + d_B b)
  for (int m = lo; m < hi; ++m) {
    int ra = A.dim(m + 2), rb = B.dim(m + 1);
    int ca = A.dim(m + 1), cb = B.dim(m);
    SparseMatQ mat(ra + rb, ca + cb);
    SparseMatQ da = A.diff(m + 1);
    for (int c2 = 0; c2 < ca; ++c2)
      for (const auto& e : da.column(c2)) mat.add(e.row, c2, -e.val);
    SparseMatQ fm = f.component(m + 1);
    for (int c2 = 0; c2 < ca; ++c2)
      for (const auto& e : fm.column(c2)) mat.add(ra + e.row, c2, e.val);
    SparseMatQ db = B.diff(m);
    for (int c2 = 0; c2 < cb; ++c2)
      for (const auto& e : db.column(c2)) mat.add(ra + e.row, ca + c2, e.val);
    mat.finalize();
    c.d.push_back(std::move(mat));
  }
  return c;
}

bool quasi_iso(const ChainMap& f) {
  QComplex cone = mapping_cone(f);
  for (auto& [m, b] : cone.cohomology_dims())
    if (b != 0) return false;
  return true;
}

InducedMap induced_cohomology_map(const ChainMap& f, int m) {
  const QComplex& A = *f.a;
  const QComplex& B = *f.b;
  InducedMap out;

  DenseMatQ za = DenseMatQ::from_sparse(A.diff(m)).kernel_basis();       // dim A^m x zA
  DenseMatQ zb = DenseMatQ::from_sparse(B.diff(m)).kernel_basis();       // dim B^m x zB
  DenseMatQ ba = DenseMatQ::from_sparse(A.diff(m - 1));                  // image basis below
  DenseMatQ bb = DenseMatQ::from_sparse(B.diff(m - 1));
  std::vector<int> ba_piv = ba.pivot_columns();
  std::vector<int> bb_piv = bb.pivot_columns();
  DenseMatQ ba_img(A.dim(m), static_cast<int>(ba_piv.size()));
  for (std::size_t j = 0; j < ba_piv.size(); ++j)
    for (int i = 0; i < A.dim(m); ++i) ba_img(i, static_cast<int>(j)) = ba(i, ba_piv[j]);
  DenseMatQ bb_img(B.dim(m), static_cast<int>(bb_piv.size()));
  for (std::size_t j = 0; j < bb_piv.size(); ++j)
    for (int i = 0; i < B.dim(m); ++i) bb_img(i, static_cast<int>(j)) = bb(i, bb_piv[j]);

  // Representatives: columns of Z extending the image basis.
  auto reps = [](const DenseMatQ& img, const DenseMatQ& z) {
    DenseMatQ all = img.hcat(z);
    std::vector<int> piv = all.pivot_columns();
    std::vector<int> rep_cols;
    for (int p : piv)
      if (p >= img.cols()) rep_cols.push_back(p - img.cols());
    DenseMatQ r(z.rows(), static_cast<int>(rep_cols.size()));
    for (std::size_t j = 0; j < rep_cols.size(); ++j)
      for (int i = 0; i < z.rows(); ++i) r(i, static_cast<int>(j)) = z(i, rep_cols[j]);
    return r;
  };
  DenseMatQ ra = reps(ba_img, za);
  DenseMatQ rb = reps(bb_img, zb);
  out.dim_a = ra.cols();
  out.dim_b = rb.cols();

  if (ra.cols() == 0) {
    out.rank = 0;
    return out;
  }
  DenseMatQ fm = DenseMatQ::from_sparse(f.component(m));
  DenseMatQ fra = fm * ra;  // images of the representatives, cocycles in B
  // Express in [image basis | representatives] coordinates; the rep block is the induced map.
  DenseMatQ basis = bb_img.hcat(rb);
  auto coords = basis.solve(fra);
  if (!coords) throw std::logic_error("induced_cohomology_map: image not a cocycle mod boundaries");
  DenseMatQ indu(rb.cols(), ra.cols());
  for (int j = 0; j < ra.cols(); ++j)
    for (int i = 0; i < rb.cols(); ++i) indu(i, j) = (*coords)(bb_img.cols() + i, j);
  out.rank = indu.rank();
  return out;
}

bool graded_equal(const GradedDims& a, const GradedDims& b) {
  auto nonzero = [](const GradedDims& g) {
    GradedDims out;
    for (auto& [k, v] : g)
      if (v != 0) out[k] = v;
    return out;
  };
  return nonzero(a) == nonzero(b);
}

std::string graded_to_string(const GradedDims& g, int lo, int hi) {
  std::ostringstream os;
  os << "(";
  for (int m = lo; m <= hi; ++m) {
    auto it = g.find(m);
    os << (it == g.end() ? 0 : it->second);
    if (m != hi) os << ", ";
  }
  os << ")";
  return os.str();
}

}  // namespace strathom
