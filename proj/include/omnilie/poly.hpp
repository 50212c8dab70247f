#ifndef OMNILIE_POLY_HPP
#define OMNILIE_POLY_HPP

#include <map>
#include <string>
#include <vector>

#include "omnilie/rat.hpp"

namespace omnilie {

/// Sparse multivariate polynomial over Rat in a fixed number of variables.
///
/// Terms are a map from exponent vectors (one entry per variable) to nonzero
/// coefficients; the map's lexicographic key order doubles as the canonical
/// serialization order. Models polynomial "smooth functions" on the base.
class Poly {
public:
  using Expo = std::vector<int>;

  Poly() : nvars_(0) {}
  explicit Poly(int nvars) : nvars_(check_nvars(nvars)) {}

  /// Constant polynomial c in `nvars` variables.
  static Poly constant(int nvars, const Rat& c);
  /// The coordinate variable t_i (0-based) in `nvars` variables.
  static Poly variable(int nvars, int i);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (zero if absent).
  Rat constant_term() const;
  /// Total degree; -1 for the zero polynomial.
  int degree() const;

  const std::map<Expo, Rat>& terms() const { return terms_; }

  /// Adds `c` to the coefficient of `e`, dropping the term if it cancels.
  void add_term(const Expo& e, const Rat& c);
  Rat coeff(const Expo& e) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend Poly operator*(const Rat& c, const Poly& p);

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Partial derivative with respect to variable `i`.
  Poly deriv(int i) const;
  /// Exact evaluation at a rational point (size must equal nvars()).
  Rat eval(const std::vector<Rat>& point) const;

  /// Display form like "3*t1^2*t2 - 1/2"; deterministic.
  std::string str() const;

private:
  static int check_nvars(int n);
  void check_same(const Poly& o) const;

  int nvars_;
  std::map<Expo, Rat> terms_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace omnilie

#endif
