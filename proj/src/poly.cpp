#include "omnilie/poly.hpp"

#include <ostream>
#include <sstream>

#include "omnilie/error.hpp"

namespace omnilie {

int Poly::check_nvars(int n) {
  if (n < 0) throw Error(ErrorKind::Dimension, "negative variable count");
  return n;
}

void Poly::check_same(const Poly& o) const {
  if (nvars_ != o.nvars_)
    throw Error(ErrorKind::Dimension, "polynomial variable counts differ (" +
                                          std::to_string(nvars_) + " vs " +
                                          std::to_string(o.nvars_) + ")");
}

Poly Poly::constant(int nvars, const Rat& c) {
  Poly p(nvars);
  p.add_term(Expo(nvars, 0), c);
  return p;
}

Poly Poly::variable(int nvars, int i) {
  if (i < 0 || i >= nvars) throw Error(ErrorKind::Dimension, "variable index out of range");
  Poly p(nvars);
  Expo e(nvars, 0);
  e[i] = 1;
  p.add_term(e, Rat(1));
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first == Expo(nvars_, 0));
}

Rat Poly::constant_term() const { return coeff(Expo(nvars_, 0)); }

int Poly::degree() const {
  int deg = -1;
  for (const auto& [e, c] : terms_) {
    int tot = 0;
    for (int k : e) tot += k;
    if (tot > deg) deg = tot;
  }
  return deg;
}

void Poly::add_term(const Expo& e, const Rat& c) {
  if (static_cast<int>(e.size()) != nvars_)
    throw Error(ErrorKind::Dimension, "exponent vector length mismatch");
  for (int k : e)
    if (k < 0) throw Error(ErrorKind::Semantic, "negative exponent");
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rat Poly::coeff(const Expo& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

Poly Poly::operator-() const {
  Poly p(nvars_);
  for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
  return p;
}

Poly& Poly::operator+=(const Poly& o) {
  check_same(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_same(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_same(b);
  Poly p(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Poly::Expo e(a.nvars_);
      for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      p.add_term(e, ca * cb);
    }
  return p;
}

Poly operator*(const Rat& c, const Poly& p) {
  Poly q(p.nvars());
  if (c.is_zero()) return q;
  for (const auto& [e, pc] : p.terms()) q.add_term(e, c * pc);
  return q;
}

Poly Poly::deriv(int i) const {
  if (i < 0 || i >= nvars_) throw Error(ErrorKind::Dimension, "derivative variable out of range");
  Poly p(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Expo d = e;
    d[i] -= 1;
    p.add_term(d, Rat(e[i]) * c);
  }
  return p;
}

Rat Poly::eval(const std::vector<Rat>& point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw Error(ErrorKind::Dimension, "evaluation point has wrong length");
  Rat total(0);
  for (const auto& [e, c] : terms_) {
    Rat term = c;
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < e[i]; ++k) term *= point[i];
    total += term;
  }
  return total;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rat coeff = c;
    if (first) {
      if (coeff.sign() < 0) {
        os << "-";
        coeff = -coeff;
      }
      first = false;
    } else {
      os << (coeff.sign() < 0 ? " - " : " + ");
      if (coeff.sign() < 0) coeff = -coeff;
    }
    bool has_var = false;
    for (int k : e)
      if (k > 0) has_var = true;
    if (!has_var || coeff != Rat(1)) os << coeff.pretty();
    bool printed = !has_var || coeff != Rat(1);
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (printed) os << "*";
      os << "t" << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
      printed = true;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

}  // namespace omnilie
