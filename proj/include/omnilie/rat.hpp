#ifndef OMNILIE_RAT_HPP
#define OMNILIE_RAT_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "omnilie/error.hpp"

namespace omnilie {

/// Exact rational number, always in lowest terms with positive denominator.
///
/// Thin value wrapper over GMP so the canonical-form invariant can never be
/// bypassed by construction (mpq_class(2,4) would otherwise stay as 2/4).
class Rat {
public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}
  Rat(long n, long d) {
    if (d == 0) throw Error(ErrorKind::Input, "rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
  }
  explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Parses "p/q" or "p"; rejects q == 0 and malformed input.
  static Rat parse(const std::string& s);

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }

  /// Canonical serialization, always with an explicit denominator ("3/1").
  std::string str() const { return v_.get_num().get_str() + "/" + v_.get_den().get_str(); }
  /// Human-friendly form ("3", "-2/5"); used in text reports and debugging.
  std::string pretty() const { return v_.get_str(); }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw Error(ErrorKind::Input, "rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }

  Rat inv() const {
    if (is_zero()) throw Error(ErrorKind::Input, "inverse of zero rational");
    return Rat(mpq_class(1) / v_);
  }

private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace omnilie

#endif
