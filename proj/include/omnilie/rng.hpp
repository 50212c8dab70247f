#ifndef OMNILIE_RNG_HPP
#define OMNILIE_RNG_HPP

#include <cstdint>

#include "omnilie/matrix.hpp"
#include "omnilie/poly.hpp"

namespace omnilie {

/// Deterministic PRNG used for every seeded corpus. The algorithm is
/// splitmix64 (Steele, Lea & Flood's published mixer), fixed here so that a
/// seed fully determines each corpus independent of platform or standard
/// library. All derived samplers below are part of the reproducibility
/// contract and are documented in the README.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform-ish integer in [lo, hi] via modulo reduction (bias is irrelevant
  /// for test corpora; the mapping is what must stay fixed).
  long range(long lo, long hi) {
    if (hi < lo) throw Error(ErrorKind::Input, "empty random range");
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  /// Small rational: numerator in [-3,3], denominator in {1,2}.
  Rat rat() { return Rat(range(-3, 3), range(1, 2)); }

  /// Small nonzero rational.
  Rat rat_nonzero() {
    for (;;) {
      Rat r = rat();
      if (!r.is_zero()) return r;
    }
  }

  /// Rational vector of length n.
  VecQ vecq(int n) {
    VecQ v(n);
    for (auto& x : v) x = rat();
    return v;
  }

  /// Rational matrix.
  MatQ matq(int rows, int cols) {
    MatQ m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m(i, j) = rat();
    return m;
  }

  /// Sparse polynomial in `nvars` variables, total degree <= deg, `terms`
  /// attempted terms. Exponents are drawn coordinatewise within the remaining
  /// degree budget; zero coefficients simply drop their term.
  Poly poly(int nvars, int deg, int terms = 3) {
    Poly p(nvars);
    for (int t = 0; t < terms; ++t) {
      Poly::Expo e(nvars, 0);
      int budget = deg;
      for (int i = 0; i < nvars; ++i) {
        e[i] = static_cast<int>(range(0, budget));
        budget -= e[i];
      }
      p.add_term(e, rat());
    }
    return p;
  }

  VecP vecp(int n, int nvars, int deg) {
    VecP v;
    v.reserve(n);
    for (int i = 0; i < n; ++i) v.push_back(poly(nvars, deg));
    return v;
  }

  MatP matp(int rows, int cols, int nvars, int deg) {
    MatP m(rows, cols, Poly(nvars));
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m(i, j) = poly(nvars, deg);
    return m;
  }

private:
  std::uint64_t state_;
};

}  // namespace omnilie

#endif
