#include "omnilie/section_calculus.hpp"

#include "omnilie/error.hpp"
#include "omnilie/rng.hpp"

namespace omnilie {

namespace {

VecP zero_vecp(int n, int nvars) { return VecP(n, Poly(nvars)); }

void check_der(const DerSec& a) {
  if (a.phi.rows() != a.phi.cols()) throw Error(ErrorKind::Dimension, "gl part is not square");
  for (const auto& p : a.x)
    if (p.nvars() != a.d()) throw Error(ErrorKind::Dimension, "symbol variable count mismatch");
}

void check_pair(int da, int db, int ra, int rb) {
  if (da != db || ra != rb) throw Error(ErrorKind::Dimension, "section shapes differ");
}

}  // namespace

// --- structs --------------------------------------------------------------------

DerSec DerSec::zero(int d, int r) { return DerSec{zero_vecp(d, d), MatP(r, r, Poly(d))}; }
JetSec JetSec::zero(int d, int r) { return JetSec{zero_vecp(r, d), MatP(r, d, Poly(d))}; }
OmniSec OmniSec::zero(int d, int r) { return OmniSec{DerSec::zero(d, r), JetSec::zero(d, r)}; }

DerSec operator+(const DerSec& a, const DerSec& b) {
  return DerSec{vec_add(a.x, b.x), a.phi + b.phi};
}
DerSec operator-(const DerSec& a, const DerSec& b) {
  return DerSec{vec_sub(a.x, b.x), a.phi - b.phi};
}
bool operator==(const DerSec& a, const DerSec& b) { return a.x == b.x && a.phi == b.phi; }
bool DerSec::is_zero() const { return vec_is_zero(x) && phi.is_zero(); }

JetSec operator+(const JetSec& a, const JetSec& b) {
  return JetSec{vec_add(a.u, b.u), a.eta + b.eta};
}
JetSec operator-(const JetSec& a, const JetSec& b) {
  return JetSec{vec_sub(a.u, b.u), a.eta - b.eta};
}
bool operator==(const JetSec& a, const JetSec& b) { return a.u == b.u && a.eta == b.eta; }
bool JetSec::is_zero() const { return vec_is_zero(u) && eta.is_zero(); }

OmniSec operator+(const OmniSec& a, const OmniSec& b) {
  return OmniSec{a.der + b.der, a.jet + b.jet};
}
OmniSec operator-(const OmniSec& a, const OmniSec& b) {
  return OmniSec{a.der - b.der, a.jet - b.jet};
}
bool operator==(const OmniSec& a, const OmniSec& b) { return a.der == b.der && a.jet == b.jet; }
bool OmniSec::is_zero() const { return der.is_zero() && jet.is_zero(); }

TauSec operator+(const TauSec& a, const TauSec& b) {
  return TauSec{vec_add(a.x, b.x), vec_add(a.e, b.e)};
}
TauSec operator-(const TauSec& a, const TauSec& b) {
  return TauSec{vec_sub(a.x, b.x), vec_sub(a.e, b.e)};
}
bool operator==(const TauSec& a, const TauSec& b) { return a.x == b.x && a.e == b.e; }
bool TauSec::is_zero() const { return vec_is_zero(x) && vec_is_zero(e); }

bool operator==(const HomSec& a, const HomSec& b) { return a.phi == b.phi && a.eta == b.eta; }

DerSec scale(const Poly& f, const DerSec& a) { return DerSec{vec_scale(f, a.x), f * a.phi}; }
JetSec scale(const Poly& f, const JetSec& a) { return JetSec{vec_scale(f, a.u), f * a.eta}; }
OmniSec scale(const Poly& f, const OmniSec& a) {
  return OmniSec{scale(f, a.der), scale(f, a.jet)};
}
TauSec scale(const Poly& f, const TauSec& a) {
  return TauSec{vec_scale(f, a.x), vec_scale(f, a.e)};
}

// --- calculus --------------------------------------------------------------------

Poly dir_deriv(const VecP& x, const Poly& f) {
  if (static_cast<int>(x.size()) != f.nvars())
    throw Error(ErrorKind::Dimension, "vector field length differs from the variable count");
  Poly out(f.nvars());
  for (std::size_t a = 0; a < x.size(); ++a) out += x[a] * f.deriv(static_cast<int>(a));
  return out;
}

VecP dir_deriv(const VecP& x, const VecP& v) {
  VecP out;
  out.reserve(v.size());
  for (const auto& c : v) out.push_back(dir_deriv(x, c));
  return out;
}

MatP dir_deriv(const VecP& x, const MatP& m) {
  MatP out(m.rows(), m.cols(), Poly(static_cast<int>(x.size())));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = dir_deriv(x, m(i, j));
  return out;
}

VecP apply_der(const DerSec& a, const VecP& v) {
  check_der(a);
  if (static_cast<int>(v.size()) != a.r())
    throw Error(ErrorKind::Dimension, "section rank mismatch");
  return vec_add(dir_deriv(a.x, v), a.phi * v);
}

DerSec der_bracket(const DerSec& a, const DerSec& b) {
  check_pair(a.d(), b.d(), a.r(), b.r());
  VecP xab(a.d(), Poly(a.d()));
  for (int i = 0; i < a.d(); ++i) xab[i] = dir_deriv(a.x, b.x[i]) - dir_deriv(b.x, a.x[i]);
  MatP phi = dir_deriv(a.x, b.phi) - dir_deriv(b.x, a.phi) + (a.phi * b.phi - b.phi * a.phi);
  return DerSec{std::move(xab), std::move(phi)};
}

VecP jet_pairing(const JetSec& mu, const DerSec& a) {
  check_pair(mu.d(), a.d(), mu.r(), a.r());
  return vec_add(a.phi * mu.u, mu.eta * a.x);
}

JetSec jet_prolong(int d, const VecP& v) {
  const int r = static_cast<int>(v.size());
  MatP jv(r, d, Poly(d));
  for (int k = 0; k < r; ++k) {
    if (v[k].nvars() != d) throw Error(ErrorKind::Dimension, "section variable count mismatch");
    for (int a = 0; a < d; ++a) jv(k, a) = v[k].deriv(a);
  }
  return JetSec{v, std::move(jv)};
}

JetSec df_tensor(const Poly& f, const VecP& p) {
  const int d = f.nvars();
  const int r = static_cast<int>(p.size());
  MatP eta(r, d, Poly(d));
  for (int k = 0; k < r; ++k)
    for (int a = 0; a < d; ++a) eta(k, a) = p[k] * f.deriv(a);
  return JetSec{zero_vecp(r, d), std::move(eta)};
}

JetSec lie_derivative(const DerSec& a, const JetSec& mu) {
  check_pair(a.d(), mu.d(), a.r(), mu.r());
  const int d = a.d(), r = a.r();
  VecP u = vec_add(dir_deriv(a.x, mu.u), a.phi * mu.u);

  // (Dphi) u: column a holds (d_a phi) u
  MatP dphi_u(r, d, Poly(d));
  for (int col = 0; col < d; ++col)
    for (int k = 0; k < r; ++k) {
      Poly acc(d);
      for (int j = 0; j < r; ++j) acc += a.phi(k, j).deriv(col) * mu.u[j];
      dphi_u(k, col) = acc;
    }

  // eta . Jx with (Jx)_{a,b} = d_b x^a
  MatP jx(d, d, Poly(d));
  for (int row = 0; row < d; ++row)
    for (int col = 0; col < d; ++col) jx(row, col) = a.x[row].deriv(col);

  MatP eta = dir_deriv(a.x, mu.eta) + a.phi * mu.eta + dphi_u + mu.eta * jx;
  return JetSec{std::move(u), std::move(eta)};
}

OmniSec dorfman(const OmniSec& x, const OmniSec& y) {
  DerSec der = der_bracket(x.der, y.der);
  JetSec jet = lie_derivative(x.der, y.jet) - lie_derivative(y.der, x.jet) +
               jet_prolong(x.d(), jet_pairing(x.jet, y.der));
  return OmniSec{std::move(der), std::move(jet)};
}

VecP omni_pairing_sec(const OmniSec& x, const OmniSec& y) {
  VecP s = vec_add(jet_pairing(y.jet, x.der), jet_pairing(x.jet, y.der));
  return vec_scale(Rat(1, 2), s);
}

// --- projections, falling -------------------------------------------------------

TauSec b_project(const OmniSec& x) { return TauSec{x.der.x, x.jet.u}; }

OmniSec gamma0(const TauSec& t) {
  const int d = static_cast<int>(t.x.size());
  const int r = static_cast<int>(t.e.size());
  OmniSec out = OmniSec::zero(d, r);
  out.der.x = t.x;
  out.jet.u = t.e;
  return out;
}

TauSec falling(const OmniSec& x, const TauSec& t) {
  const int d = x.d(), r = x.r();
  if (static_cast<int>(t.x.size()) != d || static_cast<int>(t.e.size()) != r)
    throw Error(ErrorKind::Dimension, "argument shapes differ from the operator's");
  VecP xy(d, Poly(d));
  for (int i = 0; i < d; ++i) xy[i] = dir_deriv(x.der.x, t.x[i]) - dir_deriv(t.x, x.der.x[i]);
  VecP e = vec_add(vec_sub(apply_der(x.der, t.e), dir_deriv(t.x, x.jet.u)), x.jet.eta * t.x);
  return TauSec{std::move(xy), std::move(e)};
}

FallingParts falling_parts(const OmniSec& x) {
  JetSec pro = jet_prolong(x.d(), x.jet.u);
  return FallingParts{x.der.x, x.der.phi, x.jet.eta - pro.eta};
}

// --- symbol-free ideal ------------------------------------------------------------

OmniSec amb(int d, const HomSec& h) {
  const int r = h.phi.rows();
  if (h.phi.cols() != r || h.eta.rows() != r || h.eta.cols() != d)
    throw Error(ErrorKind::Dimension, "bundle map shape mismatch");
  OmniSec out = OmniSec::zero(d, r);
  out.der.phi = h.phi;
  out.jet.eta = h.eta;
  return out;
}

VecP hom_apply(const HomSec& h, const TauSec& t) {
  return vec_add(h.phi * t.e, h.eta * t.x);
}

HomSec hom_compose(const HomSec& h, const HomSec& k) {
  return HomSec{h.phi * k.phi, h.phi * k.eta};
}

// --- axiom battery ----------------------------------------------------------------

AxiomReport axiom_suite(std::uint64_t seed, int d, int r, int deg, int count) {
  if (d < 1 || r < 1) throw Error(ErrorKind::Input, "shapes must be positive");
  if (deg < 0 || count < 1) throw Error(ErrorKind::Input, "degree and count must be sensible");
  Rng rng(seed);
  AxiomReport rep;
  rep.trials = count;
  rep.d = d;
  rep.r = r;

  auto rand_omni = [&]() {
    OmniSec s = OmniSec::zero(d, r);
    s.der.x = rng.vecp(d, d, deg);
    s.der.phi = rng.matp(r, r, d, deg);
    s.jet.u = rng.vecp(r, d, deg);
    s.jet.eta = rng.matp(r, d, d, deg);
    return s;
  };
  auto rand_tau = [&]() { return TauSec{rng.vecp(d, d, deg), rng.vecp(r, d, deg)}; };
  auto rand_hom = [&]() { return HomSec{rng.matp(r, r, d, deg), rng.matp(r, d, d, deg)}; };

  for (int trial = 0; trial < count; ++trial) {
    OmniSec X = rand_omni(), Y = rand_omni(), Z = rand_omni();
    Poly f = rng.poly(d, deg);
    VecP v = rng.vecp(r, d, deg);
    TauSec t = rand_tau();
    HomSec h = rand_hom(), k = rand_hom();

    if (!(dorfman(X, dorfman(Y, Z)) == dorfman(dorfman(X, Y), Z) + dorfman(Y, dorfman(X, Z))))
      rep.left_leibniz = false;

    if (!(apply_der(X.der, omni_pairing_sec(Y, Z)) ==
          vec_add(omni_pairing_sec(dorfman(X, Y), Z), omni_pairing_sec(Y, dorfman(X, Z)))))
      rep.pairing_invariance = false;

    {
      OmniSec sym = dorfman(X, Y) + dorfman(Y, X);
      OmniSec expect = OmniSec::zero(d, r);
      expect.jet = jet_prolong(d, vec_scale(Rat(2), omni_pairing_sec(X, Y)));
      if (!(sym == expect)) rep.symmetric_part = false;
    }

    {
      // {fX, Y} = f {X,Y} - y(f) X + (0, df (x) 2<<X,Y>>)
      OmniSec lhs = dorfman(scale(f, X), Y);
      Poly yf = dir_deriv(Y.der.x, f);
      OmniSec rhs = scale(f, dorfman(X, Y)) - scale(yf, X);
      OmniSec tensor = OmniSec::zero(d, r);
      tensor.jet = df_tensor(f, vec_scale(Rat(2), omni_pairing_sec(X, Y)));
      rhs = rhs + tensor;
      if (!(lhs == rhs)) rep.scalar_shift = false;
    }

    if (!(jet_pairing(jet_prolong(d, v), X.der) == apply_der(X.der, v)))
      rep.prolong_pairing = false;

    if (!(apply_der(X.der, jet_pairing(Y.jet, Z.der)) ==
          vec_add(jet_pairing(lie_derivative(X.der, Y.jet), Z.der),
                  jet_pairing(Y.jet, der_bracket(X.der, Z.der)))))
      rep.lie_derivative_rule = false;

    if (!(apply_der(der_bracket(X.der, Y.der), v) ==
          vec_sub(apply_der(X.der, apply_der(Y.der, v)), apply_der(Y.der, apply_der(X.der, v)))))
      rep.bracket_commutator = false;

    if (!(falling(dorfman(X, Y), t) ==
          falling(X, falling(Y, t)) - falling(Y, falling(X, t))))
      rep.falling_morphism = false;

    {
      // {amb h, Y} is symbol-free with value part h(b(Y));
      // {X, amb h} is symbol-free; {amb h, amb k} = amb(h k - k h)
      OmniSec hy = dorfman(amb(d, h), Y);
      TauSec bhy = b_project(hy);
      bool ok = vec_is_zero(bhy.x) && bhy.e == hom_apply(h, b_project(Y));
      OmniSec xh = dorfman(X, amb(d, h));
      ok = ok && b_project(xh).is_zero();
      HomSec comm{hom_compose(h, k).phi - hom_compose(k, h).phi,
                  hom_compose(h, k).eta - hom_compose(k, h).eta};
      ok = ok && dorfman(amb(d, h), amb(d, k)) == amb(d, comm);
      if (!ok) rep.hom_ideal = false;
    }

    {
      // prolong(f v) = f prolong v + df (x) v
      bool ok = jet_prolong(d, vec_scale(f, v)) ==
                scale(f, jet_prolong(d, v)) + df_tensor(f, v);
      // L_{f a} mu = f L_a mu + df (x) <mu, a>
      ok = ok && lie_derivative(scale(f, X.der), Y.jet) ==
                     scale(f, lie_derivative(X.der, Y.jet)) +
                         df_tensor(f, jet_pairing(Y.jet, X.der));
      // L_a (f mu) = x(f) mu + f L_a mu
      ok = ok && lie_derivative(X.der, scale(f, Y.jet)) ==
                     scale(dir_deriv(X.der.x, f), Y.jet) + scale(f, lie_derivative(X.der, Y.jet));
      if (!ok) rep.module_rules = false;
    }

    {
      FallingParts parts = falling_parts(X);
      OmniSec rec = OmniSec::zero(d, r);
      rec.der.x = parts.x;
      rec.der.phi = parts.phi;
      rec.jet.eta = parts.xm;
      OmniSec pro = OmniSec::zero(d, r);
      pro.jet = jet_prolong(d, X.jet.u);
      bool ok = (rec + pro == X);
      // the reconstruction acts identically through the falling operator
      ok = ok && falling(rec, t) == falling(X, t);
      if (!ok) rep.reconstruction = false;
    }
  }
  return rep;
}

}  // namespace omnilie
