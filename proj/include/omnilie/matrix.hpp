#ifndef OMNILIE_MATRIX_HPP
#define OMNILIE_MATRIX_HPP

#include <initializer_list>
#include <optional>
#include <vector>

#include "omnilie/error.hpp"
#include "omnilie/poly.hpp"
#include "omnilie/rat.hpp"

namespace omnilie {

/// Dense row-major matrix over an exact ring (Rat or Poly).
template <class T>
class Mat {
public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols, T fill = T())
      : rows_(check(rows)), cols_(check(cols)), a_(static_cast<std::size_t>(rows) * cols, fill) {}

  static Mat from_rows(std::initializer_list<std::initializer_list<T>> rows) {
    Mat m(static_cast<int>(rows.size()),
          rows.size() ? static_cast<int>(rows.begin()->size()) : 0);
    int i = 0;
    for (const auto& r : rows) {
      if (static_cast<int>(r.size()) != m.cols_)
        throw Error(ErrorKind::Dimension, "ragged matrix initializer");
      int j = 0;
      for (const auto& v : r) m(i, j++) = v;
      ++i;
    }
    return m;
  }

  static Mat identity(int n, const T& one) {
    Mat m(n, n, one - one);
    for (int i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int i, int j) { return a_[index(i, j)]; }
  const T& operator()(int i, int j) const { return a_[index(i, j)]; }

  std::vector<T> row(int i) const {
    std::vector<T> r(cols_);
    for (int j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
  }
  std::vector<T> col(int j) const {
    std::vector<T> c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }
  void set_row(int i, const std::vector<T>& r) {
    if (static_cast<int>(r.size()) != cols_) throw Error(ErrorKind::Dimension, "row length mismatch");
    for (int j = 0; j < cols_; ++j) (*this)(i, j) = r[j];
  }
  void set_col(int j, const std::vector<T>& c) {
    if (static_cast<int>(c.size()) != rows_) throw Error(ErrorKind::Dimension, "column length mismatch");
    for (int i = 0; i < rows_; ++i) (*this)(i, j) = c[i];
  }

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Mat operator+(const Mat& a, const Mat& b) {
    a.same_shape(b);
    Mat m(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.a_.size(); ++k) m.a_[k] = a.a_[k] + b.a_[k];
    return m;
  }
  friend Mat operator-(const Mat& a, const Mat& b) {
    a.same_shape(b);
    Mat m(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.a_.size(); ++k) m.a_[k] = a.a_[k] - b.a_[k];
    return m;
  }
  Mat operator-() const {
    Mat m(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = -a_[k];
    return m;
  }
  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::Dimension, "matrix product shape mismatch");
    Mat m(a.rows_, b.cols_, a.zero_like());
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        if (is_zero_entry(a(i, k))) continue;
        for (int j = 0; j < b.cols_; ++j) m(i, j) += a(i, k) * b(k, j);
      }
    return m;
  }
  friend Mat operator*(const T& c, const Mat& m) {
    Mat r(m.rows_, m.cols_);
    for (std::size_t k = 0; k < m.a_.size(); ++k) r.a_[k] = c * m.a_[k];
    return r;
  }
  friend std::vector<T> operator*(const Mat& m, const std::vector<T>& v) {
    if (static_cast<int>(v.size()) != m.cols_)
      throw Error(ErrorKind::Dimension, "matrix-vector shape mismatch");
    std::vector<T> r(m.rows_, m.zero_like());
    for (int i = 0; i < m.rows_; ++i)
      for (int j = 0; j < m.cols_; ++j) r[i] = r[i] + m(i, j) * v[j];
    return r;
  }
  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

  /// [a, b] = ab - ba for square matrices.
  friend Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

  bool is_zero() const {
    for (const auto& v : a_)
      if (!is_zero_entry(v)) return false;
    return true;
  }

  /// Zero of the entry ring, carrying ring parameters (e.g. the variable
  /// count of a polynomial entry); falls back to T() for empty matrices.
  T zero_like() const { return a_.empty() ? T() : a_[0] - a_[0]; }

private:
  static bool is_zero_entry(const T& v) { return v.is_zero(); }
  static int check(int n) {
    if (n < 0) throw Error(ErrorKind::Dimension, "negative matrix dimension");
    return n;
  }
  std::size_t index(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
      throw Error(ErrorKind::Dimension, "matrix index out of range");
    return static_cast<std::size_t>(i) * cols_ + j;
  }
  void same_shape(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw Error(ErrorKind::Dimension, "matrix shape mismatch");
  }

  int rows_, cols_;
  std::vector<T> a_;
};

using MatQ = Mat<Rat>;
using MatP = Mat<Poly>;
using VecQ = std::vector<Rat>;
using VecP = std::vector<Poly>;

// --- small exact-vector helpers -------------------------------------------

template <class T>
std::vector<T> vec_add(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::Dimension, "vector length mismatch");
  std::vector<T> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

template <class T>
std::vector<T> vec_sub(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::Dimension, "vector length mismatch");
  std::vector<T> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

template <class T, class S>
std::vector<T> vec_scale(const S& c, const std::vector<T>& a) {
  std::vector<T> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

template <class T>
bool vec_is_zero(const std::vector<T>& a) {
  for (const auto& v : a)
    if (!v.is_zero()) return false;
  return true;
}

// --- exact Gauss-Jordan over Rat -------------------------------------------

/// Output of reduced row echelon elimination.
struct RrefResult {
  int rank = 0;
  MatQ reduced;             ///< RREF of the input (same shape)
  std::vector<int> pivots;  ///< pivot column per nonzero row
  MatQ kernel;              ///< null-space basis, one row per free column
};

/// Reduced row echelon form with null-space basis. The kernel convention is
/// fixed: for each free column j the basis vector has 1 in slot j and the
/// negated pivot-row coefficients in the pivot slots.
RrefResult rref(const MatQ& m);

/// Rank of a matrix (elimination without keeping the kernel).
int rank(const MatQ& m);

/// Particular solution of a x = b, if consistent.
std::optional<VecQ> solve(const MatQ& a, const VecQ& b);

}  // namespace omnilie

#endif
