#include "omnilie/subspace.hpp"

namespace omnilie {

Subspace Subspace::from_rows(int ambient, const MatQ& rows) {
  if (rows.cols() != ambient && rows.rows() != 0)
    throw Error(ErrorKind::Dimension, "row length differs from ambient dimension");
  Subspace s(ambient);
  if (rows.rows() == 0) return s;
  RrefResult rr = rref(rows);
  s.basis_ = MatQ(rr.rank, ambient);
  for (int i = 0; i < rr.rank; ++i) s.basis_.set_row(i, rr.reduced.row(i));
  return s;
}

Subspace Subspace::from_vectors(int ambient, const std::vector<VecQ>& vecs) {
  MatQ m(static_cast<int>(vecs.size()), ambient);
  for (std::size_t i = 0; i < vecs.size(); ++i) {
    if (static_cast<int>(vecs[i].size()) != ambient)
      throw Error(ErrorKind::Dimension, "vector length differs from ambient dimension");
    m.set_row(static_cast<int>(i), vecs[i]);
  }
  return from_rows(ambient, m);
}

Subspace Subspace::full(int ambient) {
  return from_rows(ambient, MatQ::identity(ambient, Rat(1)));
}

bool Subspace::contains(const VecQ& v) const { return coordinates(v).has_value(); }

std::optional<VecQ> Subspace::coordinates(const VecQ& v) const {
  if (static_cast<int>(v.size()) != ambient_)
    throw Error(ErrorKind::Dimension, "vector length differs from ambient dimension");
  // Reduce v against the RREF basis; coordinates are read off pivot columns.
  VecQ rem = v;
  VecQ coords(dim(), Rat(0));
  for (int i = 0; i < dim(); ++i) {
    int piv = -1;
    for (int j = 0; j < ambient_; ++j)
      if (basis_(i, j) == Rat(1)) {
        piv = j;
        break;
      }
    Rat f = rem[piv];
    if (f.is_zero()) continue;
    coords[i] = f;
    for (int j = 0; j < ambient_; ++j) rem[j] -= f * basis_(i, j);
  }
  if (!vec_is_zero(rem)) return std::nullopt;
  return coords;
}

bool Subspace::contains_subspace(const Subspace& o) const {
  if (ambient_ != o.ambient_) throw Error(ErrorKind::Dimension, "ambient dimensions differ");
  for (int i = 0; i < o.dim(); ++i)
    if (!contains(o.basis_vector(i))) return false;
  return true;
}

MatQ Subspace::membership_constraints() const { return rref(basis_).kernel; }

Subspace operator+(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_) throw Error(ErrorKind::Dimension, "ambient dimensions differ");
  MatQ stacked(a.dim() + b.dim(), a.ambient_);
  for (int i = 0; i < a.dim(); ++i) stacked.set_row(i, a.basis_.row(i));
  for (int i = 0; i < b.dim(); ++i) stacked.set_row(a.dim() + i, b.basis_.row(i));
  return Subspace::from_rows(a.ambient_, stacked);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_) throw Error(ErrorKind::Dimension, "ambient dimensions differ");
  const int n = a.ambient_;
  // Zassenhaus: reduce [A A; B 0]; rows whose left half is zero carry an
  // intersection basis in their right half.
  MatQ block(a.dim() + b.dim(), 2 * n);
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < n; ++j) {
      block(i, j) = a.basis_(i, j);
      block(i, n + j) = a.basis_(i, j);
    }
  for (int i = 0; i < b.dim(); ++i)
    for (int j = 0; j < n; ++j) block(a.dim() + i, j) = b.basis_(i, j);
  RrefResult rr = rref(block);
  std::vector<VecQ> inter;
  for (int i = 0; i < rr.rank; ++i) {
    bool left_zero = true;
    for (int j = 0; j < n && left_zero; ++j)
      if (!rr.reduced(i, j).is_zero()) left_zero = false;
    if (!left_zero) continue;
    VecQ v(n);
    for (int j = 0; j < n; ++j) v[j] = rr.reduced(i, n + j);
    inter.push_back(v);
  }
  return Subspace::from_vectors(n, inter);
}

}  // namespace omnilie
