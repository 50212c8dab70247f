#ifndef OMNILIE_LIE_STRUCT_HPP
#define OMNILIE_LIE_STRUCT_HPP

#include <array>
#include <optional>
#include <vector>

#include "omnilie/matrix.hpp"

namespace omnilie {

/// Structure constants (or structure functions) of a skew bracket on an
/// n-dimensional space: [e_i, e_j] = sum_k c[i][j][k] e_k. Skewness in (i,j)
/// is enforced by the only mutator, so the invariant cannot drift.
template <class T>
class LieStructT {
public:
  LieStructT() : n_(0) {}
  explicit LieStructT(int n, T zero = T())
      : n_(n), zero_(zero), c_(static_cast<std::size_t>(n) * n * n, zero) {
    if (n < 0) throw Error(ErrorKind::Dimension, "negative dimension");
  }

  int dim() const { return n_; }
  /// Zero element of the coefficient ring (carries the variable count for Poly).
  const T& zero() const { return zero_; }

  const T& c(int i, int j, int k) const { return c_[index(i, j, k)]; }

  /// Sets c[i][j][k] and c[j][i][k] = -value together; i == j demands zero.
  void set(int i, int j, int k, const T& value) {
    if (i == j && !value.is_zero())
      throw Error(ErrorKind::Semantic, "skewness violated: nonzero c[i][i][k]");
    c_[index(i, j, k)] = value;
    if (i != j) c_[index(j, i, k)] = -value;
  }

  /// Bracket of basis vectors as a coefficient vector.
  std::vector<T> bracket_basis(int i, int j) const {
    std::vector<T> v(n_, zero_);
    for (int k = 0; k < n_; ++k) v[k] = c(i, j, k);
    return v;
  }

  /// Bilinear extension of the bracket to coefficient vectors.
  std::vector<T> bracket(const std::vector<T>& u, const std::vector<T>& v) const {
    if (static_cast<int>(u.size()) != n_ || static_cast<int>(v.size()) != n_)
      throw Error(ErrorKind::Dimension, "bracket operand length mismatch");
    std::vector<T> w(n_, zero_);
    for (int i = 0; i < n_; ++i) {
      if (u[i].is_zero()) continue;
      for (int j = 0; j < n_; ++j) {
        if (v[j].is_zero()) continue;
        for (int k = 0; k < n_; ++k) w[k] = w[k] + u[i] * v[j] * c(i, j, k);
      }
    }
    return w;
  }

  /// Matrix of ad(e_i): column j holds [e_i, e_j].
  Mat<T> ad_basis(int i) const {
    Mat<T> m(n_, n_, zero_);
    for (int j = 0; j < n_; ++j)
      for (int k = 0; k < n_; ++k) m(k, j) = c(i, j, k);
    return m;
  }

  friend bool operator==(const LieStructT& a, const LieStructT& b) {
    return a.n_ == b.n_ && a.c_ == b.c_;
  }
  friend bool operator!=(const LieStructT& a, const LieStructT& b) { return !(a == b); }

private:
  std::size_t index(int i, int j, int k) const {
    if (i < 0 || i >= n_ || j < 0 || j >= n_ || k < 0 || k >= n_)
      throw Error(ErrorKind::Dimension, "structure-constant index out of range");
    return (static_cast<std::size_t>(i) * n_ + j) * n_ + k;
  }

  int n_;
  T zero_;
  std::vector<T> c_;
};

using LieStruct = LieStructT<Rat>;
using LieStructP = LieStructT<Poly>;

/// First triple (i,j,k) violating the Jacobi identity, if any: checks
/// sum_l ( c[j][k][l]c[i][l][m] + c[k][i][l]c[j][l][m] + c[i][j][l]c[k][l][m] )
/// for every i<j<k and output coordinate m. Returns nullopt when Jacobi holds.
template <class T>
std::optional<std::array<int, 3>> check_jacobi(const LieStructT<T>& s) {
  const int n = s.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int m = 0; m < n; ++m) {
          T total = s.zero();
          for (int l = 0; l < n; ++l)
            total = total + s.c(j, k, l) * s.c(i, l, m) + s.c(k, i, l) * s.c(j, l, m) +
                    s.c(i, j, l) * s.c(k, l, m);
          if (!total.is_zero()) return std::array<int, 3>{i, j, k};
        }
  return std::nullopt;
}

/// Representation of an n-dimensional Lie algebra on Q^r by matrices rho[i]
/// for the basis vectors.
struct Rep {
  int n = 0;  ///< algebra dimension
  int r = 0;  ///< target dimension
  std::vector<MatQ> rho;

  static Rep trivial(int n, int r);
  static Rep adjoint(const LieStruct& s);

  /// Action of a coefficient vector.
  MatQ matrix_of(const VecQ& u) const;

  /// First pair (i,j) with rho([e_i,e_j]) != [rho(e_i), rho(e_j)], if any.
  std::optional<std::array<int, 2>> homomorphism_defect(const LieStruct& s) const;
};

}  // namespace omnilie

#endif
