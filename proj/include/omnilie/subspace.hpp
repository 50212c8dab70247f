#ifndef OMNILIE_SUBSPACE_HPP
#define OMNILIE_SUBSPACE_HPP

#include <vector>

#include "omnilie/matrix.hpp"

namespace omnilie {

/// Linear subspace of Q^N in canonical form: the stored basis is the reduced
/// row echelon form of any spanning set, with zero rows dropped. Two
/// subspaces are equal iff their canonical bases are identical, which makes
/// equality (and every structure test built on it) decidable.
class Subspace {
public:
  Subspace() : ambient_(0) {}
  explicit Subspace(int ambient) : ambient_(ambient), basis_(0, ambient) {}

  /// Canonicalizes the row span of `rows` inside Q^ambient.
  static Subspace from_rows(int ambient, const MatQ& rows);
  static Subspace from_vectors(int ambient, const std::vector<VecQ>& vecs);
  static Subspace full(int ambient);

  int ambient() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const MatQ& basis() const { return basis_; }
  VecQ basis_vector(int i) const { return basis_.row(i); }

  bool contains(const VecQ& v) const;
  /// Coordinates of v over the canonical basis, if v lies in the subspace.
  std::optional<VecQ> coordinates(const VecQ& v) const;
  bool contains_subspace(const Subspace& o) const;

  /// Rows K such that v lies in the subspace iff K v = 0 (null space of the
  /// basis matrix; empty when the subspace is all of Q^N).
  MatQ membership_constraints() const;

  friend Subspace operator+(const Subspace& a, const Subspace& b);
  friend Subspace intersect(const Subspace& a, const Subspace& b);

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
  int ambient_;
  MatQ basis_;
};

}  // namespace omnilie

#endif
