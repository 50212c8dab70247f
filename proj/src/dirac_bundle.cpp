#include "omnilie/dirac_bundle.hpp"

#include <sstream>

#include "omnilie/rng.hpp"

namespace omnilie {

namespace {

Poly pzero(int d) { return Poly(d); }
Poly pconst(int d, const Rat& c) { return Poly::constant(d, c); }
Poly pone(int d) { return pconst(d, Rat(1)); }

VecP vzero(int n, int d) { return VecP(n, pzero(d)); }

VecP vunit(int n, int i, int d) {
  VecP v = vzero(n, d);
  v[i] = pone(d);
  return v;
}

VecP promote(const VecQ& v, int d) {
  VecP p;
  p.reserve(v.size());
  for (const Rat& c : v) p.push_back(pconst(d, c));
  return p;
}

MatP ekl(int rows, int cols, int k, int l, int d) {
  MatP m(rows, cols, pzero(d));
  m(k, l) = pone(d);
  return m;
}

/// Commutator of vector fields given by coefficient vectors.
VecP vf_bracket(const VecP& x, const VecP& y) {
  return vec_sub(dir_deriv(x, y), dir_deriv(y, x));
}

VecP vecp_deriv(const VecP& v, int a) {
  VecP r;
  r.reserve(v.size());
  for (const Poly& p : v) r.push_back(p.deriv(a));
  return r;
}

MatP matp_deriv(const MatP& m, int a) {
  MatP r(m.rows(), m.cols(), m.zero_like());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).deriv(a);
  return r;
}

TauSec tau_zero(int d, int r) { return TauSec{vzero(d, d), vzero(r, d)}; }

std::string pair_tag(int i, int j) {
  std::ostringstream os;
  os << "(" << i << "," << j << ")";
  return os.str();
}

std::string triple_tag(int i, int j, int k) {
  std::ostringstream os;
  os << "(" << i << "," << j << "," << k << ")";
  return os.str();
}

/// sum_a x^a gamma[a]
MatP gamma_of(const ProjAlgebroid& alg, const VecP& x) {
  MatP m(alg.r, alg.r, pzero(alg.d));
  for (int a = 0; a < alg.d; ++a) m = m + x[a] * alg.gamma[a];
  return m;
}

/// sum_{a,b} x^a y^b curv[a][b]
VecP curv_of(const ProjAlgebroid& alg, const VecP& x, const VecP& y) {
  VecP v = vzero(alg.r, alg.d);
  for (int a = 0; a < alg.d; ++a)
    for (int b = 0; b < alg.d; ++b)
      v = vec_add(v, vec_scale(x[a] * y[b], alg.curv[a][b]));
  return v;
}

/// Coordinates of the projection of t onto A along the presentation's
/// complement (no membership requirement).
VecP proj_coefficients(const ProjAlgebroid& alg, const TauSec& t) {
  switch (alg.pres) {
    case Presentation::Full: {
      VecP f = t.x;
      f.insert(f.end(), t.e.begin(), t.e.end());
      return f;
    }
    case Presentation::Anchor: {
      VecP f;
      f.reserve(alg.fpivots.size());
      for (int p : alg.fpivots) f.push_back(t.e[p]);
      return f;
    }
    case Presentation::Form:
      return t.x;
    case Presentation::Line: {
      Poly f = alg.line_comp < alg.d ? t.x[alg.line_comp] : t.e[alg.line_comp - alg.d];
      return VecP{f};
    }
  }
  throw Error(ErrorKind::Input, "unknown presentation");
}

/// Coefficient-vector times frame-action matrix: (f g)_l = sum_k f_k g(k,l).
VecP coeff_times(const VecP& f, const MatP& g) {
  VecP r = vzero(g.cols(), f.empty() ? 0 : f[0].nvars());
  for (int k = 0; k < g.rows(); ++k)
    for (int l = 0; l < g.cols(); ++l) r[l] = r[l] + f[k] * g(k, l);
  return r;
}

}  // namespace

// --- ProjAlgebroid -----------------------------------------------------------

ProjAlgebroid ProjAlgebroid::full_pres(std::vector<MatP> gamma,
                                       std::vector<std::vector<VecP>> curv,
                                       LieStructP c0) {
  ProjAlgebroid a;
  a.pres = Presentation::Full;
  a.d = static_cast<int>(gamma.size());
  a.r = c0.dim();
  if (a.d <= 0) throw Error(ErrorKind::Dimension, "full presentation needs d >= 1");
  for (const MatP& g : gamma)
    if (g.rows() != a.r || g.cols() != a.r)
      throw Error(ErrorKind::Dimension, "connection form must be r x r");
  if (static_cast<int>(curv.size()) != a.d)
    throw Error(ErrorKind::Dimension, "curvature table must be d x d");
  for (int x = 0; x < a.d; ++x) {
    if (static_cast<int>(curv[x].size()) != a.d)
      throw Error(ErrorKind::Dimension, "curvature table must be d x d");
    for (int y = 0; y < a.d; ++y)
      if (static_cast<int>(curv[x][y].size()) != a.r)
        throw Error(ErrorKind::Dimension, "curvature value must have r components");
  }
  for (int x = 0; x < a.d; ++x)
    for (int y = 0; y <= x; ++y)
      if (!vec_is_zero(vec_add(curv[x][y], curv[y][x])))
        throw Error(ErrorKind::Semantic, "curvature table is not skew");
  a.gamma = std::move(gamma);
  a.curv = std::move(curv);
  a.c0 = std::move(c0);
  return a;
}

ProjAlgebroid ProjAlgebroid::anchor_pres(int d, MatP rho, LieStructP c) {
  const int r = rho.cols();
  return anchor_subbundle(d, r, std::move(rho), std::move(c), Subspace::full(r));
}

ProjAlgebroid ProjAlgebroid::anchor_subbundle(int d, int r, MatP rho, LieStructP c,
                                              const Subspace& f) {
  ProjAlgebroid a;
  a.pres = Presentation::Anchor;
  a.d = d;
  a.r = r;
  if (f.ambient() != r) throw Error(ErrorKind::Dimension, "subbundle ambient mismatch");
  const int m = f.dim();
  if (m <= 0) throw Error(ErrorKind::Dimension, "anchor presentation needs a nonzero frame");
  if (rho.rows() != d || rho.cols() != m)
    throw Error(ErrorKind::Dimension, "anchor matrix must be d x (frame count)");
  if (c.dim() != m) throw Error(ErrorKind::Dimension, "bracket functions must match the frame");
  a.rho = std::move(rho);
  a.c = std::move(c);
  a.fbasis = f.basis();
  for (int i = 0; i < m; ++i) {
    int p = -1;
    for (int j = 0; j < r; ++j)
      if (!a.fbasis(i, j).is_zero()) {
        p = j;
        break;
      }
    if (p < 0 || !(a.fbasis(i, p) == Rat(1)))
      throw Error(ErrorKind::Semantic, "frame basis is not in reduced form");
    a.fpivots.push_back(p);
  }
  return a;
}

ProjAlgebroid ProjAlgebroid::form_pres(int d, int r, MatP lambda) {
  ProjAlgebroid a;
  a.pres = Presentation::Form;
  a.d = d;
  a.r = r;
  if (lambda.rows() != r || lambda.cols() != d)
    throw Error(ErrorKind::Dimension, "graph map must be r x d");
  a.lambda = std::move(lambda);
  return a;
}

ProjAlgebroid ProjAlgebroid::line_pres(VecP x, VecP e, int comp) {
  ProjAlgebroid a;
  a.pres = Presentation::Line;
  a.d = static_cast<int>(x.size());
  a.r = static_cast<int>(e.size());
  if (comp < 0 || comp >= a.d + a.r)
    throw Error(ErrorKind::Dimension, "designated component out of range");
  const Poly& c = comp < a.d ? x[comp] : e[comp - a.d];
  if (!(c == pone(a.d)))
    throw Error(ErrorKind::Semantic, "designated component must be identically 1");
  a.line_x = std::move(x);
  a.line_e = std::move(e);
  a.line_comp = comp;
  return a;
}

int ProjAlgebroid::frame_count() const {
  switch (pres) {
    case Presentation::Full: return d + r;
    case Presentation::Anchor: return fbasis.rows();
    case Presentation::Form: return d;
    case Presentation::Line: return 1;
  }
  throw Error(ErrorKind::Input, "unknown presentation");
}

TauSec ProjAlgebroid::frame(int i) const {
  switch (pres) {
    case Presentation::Full:
      if (i < d) return TauSec{vunit(d, i, d), vzero(r, d)};
      return TauSec{vzero(d, d), vunit(r, i - d, d)};
    case Presentation::Anchor: {
      VecP x;
      for (int a = 0; a < d; ++a) x.push_back(rho(a, i));
      return TauSec{x, promote(fbasis.row(i), d)};
    }
    case Presentation::Form: {
      VecP e;
      for (int k = 0; k < r; ++k) e.push_back(lambda(k, i));
      return TauSec{vunit(d, i, d), e};
    }
    case Presentation::Line:
      return TauSec{line_x, line_e};
  }
  throw Error(ErrorKind::Input, "unknown presentation");
}

std::optional<VecP> ProjAlgebroid::coefficients(const TauSec& t) const {
  if (static_cast<int>(t.x.size()) != d || static_cast<int>(t.e.size()) != r)
    throw Error(ErrorKind::Dimension, "section shape mismatch");
  VecP f = proj_coefficients(*this, t);
  if (!(from_coefficients(f) == t)) return std::nullopt;
  return f;
}

TauSec ProjAlgebroid::from_coefficients(const VecP& f) const {
  const int m = frame_count();
  if (static_cast<int>(f.size()) != m)
    throw Error(ErrorKind::Dimension, "coefficient count mismatch");
  TauSec t = tau_zero(d, r);
  for (int i = 0; i < m; ++i) t = t + scale(f[i], frame(i));
  return t;
}

VecP ProjAlgebroid::bracket_coeff(const VecP& f, const VecP& g) const {
  const int m = frame_count();
  if (static_cast<int>(f.size()) != m || static_cast<int>(g.size()) != m)
    throw Error(ErrorKind::Dimension, "coefficient count mismatch");
  switch (pres) {
    case Presentation::Full: {
      TauSec a = from_coefficients(f), b = from_coefficients(g);
      VecP x = vf_bracket(a.x, b.x);
      VecP e = vec_add(dir_deriv(a.x, b.e), gamma_of(*this, a.x) * b.e);
      e = vec_sub(e, vec_add(dir_deriv(b.x, a.e), gamma_of(*this, b.x) * a.e));
      e = vec_add(e, curv_of(*this, a.x, b.x));
      e = vec_add(e, c0.bracket(a.e, b.e));
      VecP h = x;
      h.insert(h.end(), e.begin(), e.end());
      return h;
    }
    case Presentation::Anchor: {
      VecP h = c.bracket(f, g);
      // Leibniz terms over the anchors of the frame sections
      for (int k = 0; k < m; ++k) {
        Poly df = pzero(d), dg = pzero(d);
        for (int i = 0; i < m; ++i) {
          VecP rho_i;
          for (int a = 0; a < d; ++a) rho_i.push_back(rho(a, i));
          dg = dg + f[i] * dir_deriv(rho_i, g[k]);
          df = df + g[i] * dir_deriv(rho_i, f[k]);
        }
        h[k] = h[k] + dg - df;
      }
      return h;
    }
    case Presentation::Form:
      return vf_bracket(f, g);
    case Presentation::Line:
      return VecP{f[0] * dir_deriv(line_x, g[0]) - g[0] * dir_deriv(line_x, f[0])};
  }
  throw Error(ErrorKind::Input, "unknown presentation");
}

TauSec ProjAlgebroid::bracket(const TauSec& a, const TauSec& b) const {
  auto f = coefficients(a), g = coefficients(b);
  if (!f || !g) throw Error(ErrorKind::Input, "bracket operand is not a section of the algebroid");
  return from_coefficients(bracket_coeff(*f, *g));
}

std::optional<VecP> ProjAlgebroid::intersection_e_coefficients(const VecP& v) const {
  return coefficients(TauSec{vzero(d, d), v});
}

bool operator==(const ProjAlgebroid& a, const ProjAlgebroid& b) {
  return a.pres == b.pres && a.d == b.d && a.r == b.r && a.gamma == b.gamma &&
         a.curv == b.curv && a.c0 == b.c0 && a.rho == b.rho && a.c == b.c &&
         a.fbasis == b.fbasis && a.fpivots == b.fpivots && a.lambda == b.lambda &&
         a.line_x == b.line_x && a.line_e == b.line_e && a.line_comp == b.line_comp;
}

// --- validity ---------------------------------------------------------------

CheckReport check_projective_algebroid(const ProjAlgebroid& alg) {
  CheckReport rep;
  const int d = alg.d, r = alg.r;
  switch (alg.pres) {
    case Presentation::Full: {
      if (auto bad = check_jacobi(alg.c0))
        rep.fail("fibre bracket violates Jacobi at " +
                 triple_tag((*bad)[0], (*bad)[1], (*bad)[2]));
      // derivation condition for each coordinate connection form
      for (int a = 0; a < d; ++a)
        for (int i = 0; i < r; ++i)
          for (int j = i + 1; j < r; ++j)
            for (int m = 0; m < r; ++m) {
              Poly lhs = alg.c0.c(i, j, m).deriv(a);
              Poly rhs = pzero(d);
              for (int k = 0; k < r; ++k) {
                lhs = lhs + alg.c0.c(i, j, k) * alg.gamma[a](m, k);
                rhs = rhs + alg.gamma[a](k, i) * alg.c0.c(k, j, m) +
                      alg.gamma[a](k, j) * alg.c0.c(i, k, m);
              }
              if (!(lhs == rhs)) {
                rep.fail("connection is not a fibre-bracket derivation at direction " +
                         std::to_string(a) + ", pair " + pair_tag(i, j));
                a = d;  // stop after first witness
                i = j = r;
                break;
              }
            }
      // curvature identity
      for (int a = 0; a < d && rep.pass; ++a)
        for (int b = a + 1; b < d; ++b) {
          MatP lhs = matp_deriv(alg.gamma[b], a) - matp_deriv(alg.gamma[a], b) +
                     commutator(alg.gamma[a], alg.gamma[b]);
          MatP ad(r, r, pzero(d));
          for (int k = 0; k < r; ++k)
            for (int j = 0; j < r; ++j)
              for (int i = 0; i < r; ++i)
                ad(k, j) = ad(k, j) + alg.curv[a][b][i] * alg.c0.c(i, j, k);
          if (!(lhs == ad)) {
            rep.fail("curvature identity fails on direction pair " + pair_tag(a, b));
            break;
          }
        }
      // cyclic curvature-derivative identity
      for (int a = 0; a < d && rep.pass; ++a)
        for (int b = a + 1; b < d && rep.pass; ++b)
          for (int e = b + 1; e < d; ++e) {
            auto gd = [&](int dir, const VecP& v) {
              return vec_add(vecp_deriv(v, dir), alg.gamma[dir] * v);
            };
            VecP total = vec_add(gd(a, alg.curv[b][e]),
                                 vec_add(gd(b, alg.curv[e][a]), gd(e, alg.curv[a][b])));
            if (!vec_is_zero(total)) {
              rep.fail("cyclic curvature identity fails on triple " + triple_tag(a, b, e));
              break;
            }
          }
      break;
    }
    case Presentation::Anchor: {
      const int m = alg.frame_count();
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
          VecP lhs = vzero(d, d);
          for (int k = 0; k < m; ++k) {
            VecP rho_k;
            for (int a = 0; a < d; ++a) rho_k.push_back(alg.rho(a, k));
            lhs = vec_add(lhs, vec_scale(alg.c.c(i, j, k), rho_k));
          }
          if (!(lhs == vf_bracket(alg.frame(i).x, alg.frame(j).x))) {
            rep.fail("anchor fails to intertwine the bracket on pair " + pair_tag(i, j));
          }
        }
      for (int i = 0; i < m && rep.pass; ++i)
        for (int j = i + 1; j < m && rep.pass; ++j)
          for (int k = j + 1; k < m; ++k) {
            VecP ui = vunit(m, i, d), uj = vunit(m, j, d), uk = vunit(m, k, d);
            VecP total = alg.bracket_coeff(alg.bracket_coeff(ui, uj), uk);
            total = vec_add(total, alg.bracket_coeff(alg.bracket_coeff(uj, uk), ui));
            total = vec_add(total, alg.bracket_coeff(alg.bracket_coeff(uk, ui), uj));
            if (!vec_is_zero(total)) {
              rep.fail("frame Jacobi identity fails on triple " + triple_tag(i, j, k));
              break;
            }
          }
      break;
    }
    case Presentation::Form:
      break;  // the bracket is carried over from vector fields
    case Presentation::Line: {
      Rng rng(12021);
      for (int trial = 0; trial < 5; ++trial) {
        VecP fgh = {rng.poly(d, 2), rng.poly(d, 2), rng.poly(d, 2)};
        VecP a{fgh[0]}, b{fgh[1]}, c{fgh[2]};
        VecP total = alg.bracket_coeff(alg.bracket_coeff(a, b), c);
        total = vec_add(total, alg.bracket_coeff(alg.bracket_coeff(b, c), a));
        total = vec_add(total, alg.bracket_coeff(alg.bracket_coeff(c, a), b));
        if (!vec_is_zero(total)) {
          rep.fail("line bracket violates Jacobi on trial " + std::to_string(trial));
          break;
        }
      }
      break;
    }
  }
  return rep;
}

VecP omega_gamma(const ProjAlgebroid& alg, const TauSec& s, const TauSec& t) {
  TauSec br = alg.bracket(s, t);  // validates membership of both operands
  VecP v = vec_sub(br.e, dir_deriv(s.x, t.e));
  return vec_add(v, dir_deriv(t.x, s.e));
}

// --- lift --------------------------------------------------------------------

namespace {

/// Coordinate sections of TM + E.
TauSec chart_section(int d, int r, int j) {
  if (j < d) return TauSec{vunit(d, j, d), vzero(r, d)};
  return TauSec{vzero(d, d), vunit(r, j - d, d)};
}

std::vector<HomSec> annihilator_frame(const ProjAlgebroid& alg) {
  const int d = alg.d, r = alg.r;
  std::vector<HomSec> gens;
  switch (alg.pres) {
    case Presentation::Full:
      break;
    case Presentation::Anchor: {
      const int m = alg.frame_count();
      // projection onto the subbundle along the non-pivot coordinates
      MatQ pi(r, r);
      for (int j = 0; j < m; ++j)
        for (int l = 0; l < r; ++l) pi(l, alg.fpivots[j]) = alg.fbasis(j, l);
      // anchor as a map out of the ambient fibre, through the projection
      MatP rho_pi(d, r, pzero(d));
      for (int j = 0; j < m; ++j)
        for (int a = 0; a < d; ++a) rho_pi(a, alg.fpivots[j]) = alg.rho(a, j);
      for (int k = 0; k < r; ++k)
        for (int b = 0; b < d; ++b) {
          HomSec h{MatP(r, r, pzero(d)), ekl(r, d, k, b, d)};
          for (int l = 0; l < r; ++l) h.phi(k, l) = -rho_pi(b, l);
          gens.push_back(h);
        }
      MatQ comp(r, r);  // identity minus the projection
      for (int l = 0; l < r; ++l) comp(l, l) = Rat(1);
      comp = comp - pi;
      for (int k = 0; k < r; ++k)
        for (int l = 0; l < r; ++l) {
          bool pivot = false;
          for (int p : alg.fpivots) pivot = pivot || p == l;
          if (pivot) continue;
          HomSec h{MatP(r, r, pzero(d)), MatP(r, d, pzero(d))};
          for (int n = 0; n < r; ++n) h.phi(k, n) = pconst(d, comp(l, n));
          gens.push_back(h);
        }
      break;
    }
    case Presentation::Form:
      for (int k = 0; k < r; ++k)
        for (int l = 0; l < r; ++l) {
          HomSec h{ekl(r, r, k, l, d), MatP(r, d, pzero(d))};
          for (int b = 0; b < d; ++b) h.eta(k, b) = -alg.lambda(l, b);
          gens.push_back(h);
        }
      break;
    case Presentation::Line: {
      if (alg.line_comp >= d) {
        const int i0 = alg.line_comp - d;
        for (int k = 0; k < r; ++k)
          for (int b = 0; b < d; ++b) {
            HomSec h{MatP(r, r, pzero(d)), ekl(r, d, k, b, d)};
            h.phi(k, i0) = -alg.line_x[b];
            gens.push_back(h);
          }
        for (int k = 0; k < r; ++k)
          for (int l = 0; l < r; ++l) {
            if (l == i0) continue;
            HomSec h{ekl(r, r, k, l, d), MatP(r, d, pzero(d))};
            h.phi(k, i0) = h.phi(k, i0) - alg.line_e[l];
            gens.push_back(h);
          }
      } else {
        const int b0 = alg.line_comp;
        for (int k = 0; k < r; ++k)
          for (int l = 0; l < r; ++l) {
            HomSec h{ekl(r, r, k, l, d), MatP(r, d, pzero(d))};
            h.eta(k, b0) = -alg.line_e[l];
            gens.push_back(h);
          }
        for (int k = 0; k < r; ++k)
          for (int b = 0; b < d; ++b) {
            if (b == b0) continue;
            HomSec h{MatP(r, r, pzero(d)), ekl(r, d, k, b, d)};
            h.eta(k, b0) = -alg.line_x[b];
            gens.push_back(h);
          }
      }
      break;
    }
  }
  return gens;
}

DiracPres lift_with(const ProjAlgebroid& alg,
                    const std::function<OmniSec(const TauSec&)>& split,
                    const std::function<VecP(const TauSec&, const TauSec&)>& omega) {
  CheckReport chk = check_projective_algebroid(alg);
  if (!chk.pass)
    throw Error(ErrorKind::Semantic, "not a projective Lie algebroid: " + chk.failures[0]);
  const int d = alg.d, r = alg.r;
  DiracPres l;
  l.kind = DiracKind::Lift;
  l.d = d;
  l.r = r;
  l.base = alg;
  for (int i = 0; i < alg.frame_count(); ++i) {
    TauSec a = alg.frame(i);
    HomSec h{MatP(r, r, pzero(d)), MatP(r, d, pzero(d))};
    for (int j = 0; j < d + r; ++j) {
      TauSec target = alg.from_coefficients(proj_coefficients(alg, chart_section(d, r, j)));
      VecP val = omega(a, target);
      if (j < d)
        h.eta.set_col(j, val);
      else
        h.phi.set_col(j - d, val);
    }
    l.frame.push_back(split(a) + amb(d, h));
  }
  l.a0 = annihilator_frame(alg);
  return l;
}

}  // namespace

DiracPres lift_bundle(const ProjAlgebroid& alg) {
  return lift_with(
      alg, [&](const TauSec& t) { return gamma0(t); },
      [&](const TauSec& a, const TauSec& b) { return omega_gamma(alg, a, b); });
}

DiracPres lift_bundle_perturbed(const ProjAlgebroid& alg, const std::vector<MatP>& k) {
  const int d = alg.d, r = alg.r;
  if (static_cast<int>(k.size()) != d)
    throw Error(ErrorKind::Dimension, "one connection form per coordinate direction");
  for (const MatP& m : k)
    if (m.rows() != r || m.cols() != r)
      throw Error(ErrorKind::Dimension, "connection form must be r x r");
  auto kx = [&](const VecP& x) {
    MatP m(r, r, pzero(d));
    for (int a = 0; a < d; ++a) m = m + x[a] * k[a];
    return m;
  };
  auto split = [&](const TauSec& t) {
    MatP eta(r, d, pzero(d));
    for (int b = 0; b < d; ++b) eta.set_col(b, vec_scale(pconst(d, Rat(-1)), k[b] * t.e));
    return OmniSec{DerSec{t.x, kx(t.x)}, JetSec{t.e, eta}};
  };
  auto omega = [&](const TauSec& a, const TauSec& b) {
    TauSec br = alg.bracket(a, b);
    VecP v = vec_sub(br.e, vec_add(dir_deriv(a.x, b.e), kx(a.x) * b.e));
    return vec_add(v, vec_add(dir_deriv(b.x, a.e), kx(b.x) * a.e));
  };
  return lift_with(alg, split, omega);
}

std::vector<OmniSec> DiracPres::sections() const {
  std::vector<OmniSec> all = frame;
  for (const HomSec& h : a0) all.push_back(amb(d, h));
  return all;
}

bool membership_L(const OmniSec& x, const DiracPres& l) {
  const int d = l.d, r = l.r;
  if (x.d() != d || x.r() != r) throw Error(ErrorKind::Dimension, "section shape mismatch");
  switch (l.kind) {
    case DiracKind::Lift: {
      auto f = l.base.coefficients(b_project(x));
      if (!f) return false;
      OmniSec res = x;
      for (int i = 0; i < static_cast<int>(l.frame.size()); ++i)
        res = res - scale((*f)[i], l.frame[i]);
      if (!vec_is_zero(res.der.x) || !vec_is_zero(res.jet.u)) return false;
      HomSec h{res.der.phi, res.jet.eta};
      for (int i = 0; i < l.base.frame_count(); ++i)
        if (!vec_is_zero(hom_apply(h, l.base.frame(i)))) return false;
      return true;
    }
    case DiracKind::GraphLambda: {
      if (!(x.jet.u == l.lambda * x.der.x)) return false;
      MatP eta(r, d, pzero(d));
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
          eta.set_col(b, vec_add(eta.col(b), vec_scale(x.der.x[a], l.zeta[a][b])));
      eta = eta - x.der.phi * l.lambda;
      return x.jet.eta == eta;
    }
    case DiracKind::GraphPi:
      return x.der == pi_map(l.base, x.jet);
  }
  throw Error(ErrorKind::Input, "unknown kind");
}

CheckReport dirac_closure_check(const DiracPres& l) {
  CheckReport rep;
  std::vector<OmniSec> secs = l.sections();
  const int n = static_cast<int>(secs.size());
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      if (!vec_is_zero(omni_pairing_sec(secs[i], secs[j])))
        rep.fail("generator pair " + pair_tag(i, j) + " is not isotropic");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!membership_L(dorfman(secs[i], secs[j]), l))
        rep.fail("bracket of generator pair " + pair_tag(i, j) + " leaves the structure");
  return rep;
}

ProjAlgebroid reduce_bundle(const DiracPres& l) {
  const int d = l.d, r = l.r;
  switch (l.kind) {
    case DiracKind::Lift: {
      const ProjAlgebroid& base = l.base;
      auto bbr = [&](int i, int j) { return b_project(dorfman(l.frame[i], l.frame[j])); };
      switch (base.pres) {
        case Presentation::Full: {
          std::vector<MatP> gamma(d, MatP(r, r, pzero(d)));
          std::vector<std::vector<VecP>> curv(d, std::vector<VecP>(d, vzero(r, d)));
          LieStructP c0(r, pzero(d));
          for (int a = 0; a < d; ++a)
            for (int b = a + 1; b < d; ++b) {
              curv[a][b] = bbr(a, b).e;
              curv[b][a] = vec_scale(pconst(d, Rat(-1)), curv[a][b]);
            }
          for (int a = 0; a < d; ++a)
            for (int i = 0; i < r; ++i) gamma[a].set_col(i, bbr(a, d + i).e);
          for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j) {
              VecP v = bbr(d + i, d + j).e;
              for (int k = 0; k < r; ++k) c0.set(i, j, k, v[k]);
            }
          return ProjAlgebroid::full_pres(gamma, curv, c0);
        }
        case Presentation::Anchor: {
          const int m = base.frame_count();
          MatP rho(d, m, pzero(d));
          MatQ rows(m, r);
          for (int j = 0; j < m; ++j) {
            TauSec a = b_project(l.frame[j]);
            for (int x = 0; x < d; ++x) rho(x, j) = a.x[x];
            for (int k = 0; k < r; ++k) {
              if (!a.e[k].is_constant())
                throw Error(ErrorKind::Semantic, "frame is not constant");
              rows(j, k) = a.e[k].constant_term();
            }
          }
          LieStructP c(m, pzero(d));
          for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
              auto f = base.coefficients(bbr(i, j));
              if (!f) throw Error(ErrorKind::Semantic, "frame bracket leaves the algebroid");
              for (int k = 0; k < m; ++k) c.set(i, j, k, (*f)[k]);
            }
          return ProjAlgebroid::anchor_subbundle(d, r, rho, c, Subspace::from_rows(r, rows));
        }
        case Presentation::Form: {
          MatP lambda(r, d, pzero(d));
          for (int a = 0; a < d; ++a) lambda.set_col(a, b_project(l.frame[a]).e);
          return ProjAlgebroid::form_pres(d, r, lambda);
        }
        case Presentation::Line: {
          TauSec a = b_project(l.frame[0]);
          return ProjAlgebroid::line_pres(a.x, a.e, base.line_comp);
        }
      }
      throw Error(ErrorKind::Input, "unknown presentation");
    }
    case DiracKind::GraphPi: {
      MatP rho(d, r, pzero(d));
      LieStructP c(r, pzero(d));
      for (int i = 0; i < r; ++i)
        for (int a = 0; a < d; ++a) rho(a, i) = l.frame[i].der.x[a];
      for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
          VecP v = b_project(dorfman(l.frame[i], l.frame[j])).e;
          for (int k = 0; k < r; ++k) c.set(i, j, k, v[k]);
        }
      return ProjAlgebroid::anchor_pres(d, rho, c);
    }
    case DiracKind::GraphLambda: {
      MatP lambda(r, d, pzero(d));
      for (int a = 0; a < d; ++a) lambda.set_col(a, b_project(l.frame[a]).e);
      return ProjAlgebroid::form_pres(d, r, lambda);
    }
  }
  throw Error(ErrorKind::Input, "unknown kind");
}

// --- graph of a two-form -----------------------------------------------------

DiracPres graph_lambda(const MatP& lambda, const std::vector<std::vector<VecP>>& zeta) {
  const int r = lambda.rows(), d = lambda.cols();
  if (static_cast<int>(zeta.size()) != d)
    throw Error(ErrorKind::Dimension, "two-form table must be d x d");
  for (int a = 0; a < d; ++a) {
    if (static_cast<int>(zeta[a].size()) != d)
      throw Error(ErrorKind::Dimension, "two-form table must be d x d");
    for (int b = 0; b < d; ++b)
      if (static_cast<int>(zeta[a][b].size()) != r)
        throw Error(ErrorKind::Dimension, "two-form value must have r components");
  }
  for (int a = 0; a < d; ++a)
    for (int b = 0; b <= a; ++b)
      if (!vec_is_zero(vec_add(zeta[a][b], zeta[b][a])))
        throw Error(ErrorKind::Semantic, "two-form table is not skew");
  DiracPres l;
  l.kind = DiracKind::GraphLambda;
  l.d = d;
  l.r = r;
  l.lambda = lambda;
  l.zeta = zeta;
  for (int a = 0; a < d; ++a) {
    MatP eta(r, d, pzero(d));
    for (int b = 0; b < d; ++b) eta.set_col(b, zeta[a][b]);
    l.frame.push_back(
        OmniSec{DerSec{vunit(d, a, d), MatP(r, r, pzero(d))}, JetSec{lambda.col(a), eta}});
  }
  for (int k = 0; k < r; ++k)
    for (int n = 0; n < r; ++n) {
      MatP eta(r, d, pzero(d));
      for (int b = 0; b < d; ++b) eta(k, b) = -lambda(n, b);
      l.frame.push_back(
          OmniSec{DerSec{vzero(d, d), ekl(r, r, k, n, d)}, JetSec{vzero(r, d), eta}});
    }
  return l;
}

std::pair<MatP, std::vector<std::vector<VecP>>> lambda_hat_from_values(
    int d, int r, const std::vector<std::vector<VecP>>& values) {
  const int n = d + r * r;
  if (static_cast<int>(values.size()) != n)
    throw Error(ErrorKind::Dimension, "value table must cover the full frame");
  for (const auto& row : values) {
    if (static_cast<int>(row.size()) != n)
      throw Error(ErrorKind::Dimension, "value table must cover the full frame");
    for (const VecP& v : row)
      if (static_cast<int>(v.size()) != r)
        throw Error(ErrorKind::Dimension, "value must have r components");
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j)
      if (!vec_is_zero(vec_add(values[i][j], values[j][i])))
        throw Error(ErrorKind::Semantic, "two-form table is not skew");
  MatP lambda(r, d, pzero(d));
  for (int l = 0; l < r; ++l)
    for (int a = 0; a < d; ++a) {
      Poly common = pzero(d);
      for (int k = 0; k < r; ++k) {
        const VecP& v = values[a][d + k * r + l];
        for (int m = 0; m < r; ++m)
          if (m != k && !v[m].is_zero())
            throw Error(ErrorKind::Semantic, "gl rows are not of the forced shape");
        if (k == 0)
          common = v[0];
        else if (!(v[k] == common))
          throw Error(ErrorKind::Semantic, "gl rows are not of the forced shape");
      }
      lambda(l, a) = common;
    }
  for (int i = d; i < n; ++i)
    for (int j = d; j < n; ++j)
      if (!vec_is_zero(values[i][j]))
        throw Error(ErrorKind::Semantic, "gl rows are not of the forced shape");
  std::vector<std::vector<VecP>> zeta(d, std::vector<VecP>(d));
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) zeta[a][b] = values[a][b];
  return {lambda, zeta};
}

VecP eval_d1(const OneForm& theta, const DerSec& a, const DerSec& b) {
  VecP v = vec_sub(apply_der(a, theta(b)), apply_der(b, theta(a)));
  return vec_sub(v, theta(der_bracket(a, b)));
}

VecP eval_d2(const TwoForm& omega, const DerSec& a, const DerSec& b, const DerSec& c) {
  VecP v = apply_der(a, omega(b, c));
  v = vec_sub(v, apply_der(b, omega(a, c)));
  v = vec_add(v, apply_der(c, omega(a, b)));
  v = vec_sub(v, omega(der_bracket(a, b), c));
  v = vec_add(v, omega(der_bracket(a, c), b));
  return vec_sub(v, omega(der_bracket(b, c), a));
}

LambdaReport graph_lambda_equivalence(const MatP& lambda,
                                      const std::vector<std::vector<VecP>>& zeta) {
  const int r = lambda.rows(), d = lambda.cols();
  DiracPres l = graph_lambda(lambda, zeta);  // validates skewness
  LambdaReport rep;
  rep.closure = dirac_closure_check(l).pass;

  // the two-form evaluated through the graph's jet assignment
  auto jet_of = [&](const DerSec& a) {
    MatP eta(r, d, pzero(d));
    for (int x = 0; x < d; ++x)
      for (int b = 0; b < d; ++b)
        eta.set_col(b, vec_add(eta.col(b), vec_scale(a.x[x], zeta[x][b])));
    eta = eta - a.phi * lambda;
    return JetSec{lambda * a.x, eta};
  };
  TwoForm lamhat = [&](const DerSec& a, const DerSec& b) { return jet_pairing(jet_of(a), b); };
  std::vector<DerSec> fr;
  for (int a = 0; a < d; ++a) fr.push_back(DerSec{vunit(d, a, d), MatP(r, r, pzero(d))});
  for (int k = 0; k < r; ++k)
    for (int n = 0; n < r; ++n) fr.push_back(DerSec{vzero(d, d), ekl(r, r, k, n, d)});
  rep.cocycle = true;
  const int nf = static_cast<int>(fr.size());
  for (int i = 0; i < nf && rep.cocycle; ++i)
    for (int j = i + 1; j < nf && rep.cocycle; ++j)
      for (int k = j + 1; k < nf && rep.cocycle; ++k)
        rep.cocycle = vec_is_zero(eval_d2(lamhat, fr[i], fr[j], fr[k]));
  if (rep.cocycle && nf >= 3) {
    Poly f = pone(d) + Poly::variable(d, 0);
    rep.cocycle = vec_is_zero(eval_d2(lamhat, scale(f, fr[0]), fr[1], fr[2]));
  }

  rep.coboundary_form = true;
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b) {
      VecP want = vec_sub(vecp_deriv(lambda.col(a), b), vecp_deriv(lambda.col(b), a));
      if (!(zeta[a][b] == want)) rep.coboundary_form = false;
    }

  rep.all_agree = rep.closure == rep.cocycle && rep.cocycle == rep.coboundary_form;
  return rep;
}

// --- graph of the adjoint map ------------------------------------------------

namespace {

void require_full_anchor(const ProjAlgebroid& alg) {
  if (alg.pres != Presentation::Anchor || alg.frame_count() != alg.r)
    throw Error(ErrorKind::Input, "operation requires an anchor presentation on the full fibre");
}

DerSec pi_gen_section(const ProjAlgebroid& alg, int i) {
  const int d = alg.d, r = alg.r;
  MatP phi(r, r, pzero(d));
  for (int k = 0; k < r; ++k)
    for (int j = 0; j < r; ++j) phi(k, j) = alg.c.c(i, j, k);
  VecP x;
  for (int a = 0; a < d; ++a) x.push_back(alg.rho(a, i));
  return DerSec{x, phi};
}

DerSec pi_gen_hom(const ProjAlgebroid& alg, int j, int a) {
  const int d = alg.d, r = alg.r;
  MatP phi(r, r, pzero(d));
  for (int k = 0; k < r; ++k) phi(j, k) = -alg.rho(a, k);
  return DerSec{vzero(d, d), phi};
}

}  // namespace

DerSec pi_map(const ProjAlgebroid& alg, const JetSec& mu) {
  require_full_anchor(alg);
  const int d = alg.d, r = alg.r;
  if (mu.r() != r || mu.d() != d) throw Error(ErrorKind::Dimension, "jet shape mismatch");
  DerSec res = DerSec::zero(d, r);
  for (int i = 0; i < r; ++i) res = res + scale(mu.u[i], pi_gen_section(alg, i));
  for (int j = 0; j < r; ++j)
    for (int a = 0; a < d; ++a) res = res + scale(mu.eta(j, a), pi_gen_hom(alg, j, a));
  return res;
}

JetSec pi_bracket(const JetSec& m, const JetSec& n, const ProjAlgebroid& alg) {
  DerSec pm = pi_map(alg, m), pn = pi_map(alg, n);
  JetSec res = lie_derivative(pm, n) - lie_derivative(pn, m);
  return res - jet_prolong(alg.d, jet_pairing(n, pm));
}

std::optional<std::string> pi_morphism_defect(const ProjAlgebroid& alg) {
  require_full_anchor(alg);
  const int d = alg.d, r = alg.r;
  std::vector<JetSec> gens;
  std::vector<std::string> names;
  for (int i = 0; i < r; ++i) {
    gens.push_back(JetSec{vunit(r, i, d), MatP(r, d, pzero(d))});
    names.push_back("jet generator " + std::to_string(i));
  }
  for (int j = 0; j < r; ++j)
    for (int a = 0; a < d; ++a) {
      gens.push_back(JetSec{vzero(r, d), ekl(r, d, j, a, d)});
      names.push_back("differential generator " + pair_tag(j, a));
    }
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j) {
      DerSec lhs = pi_map(alg, pi_bracket(gens[i], gens[j], alg));
      DerSec rhs = der_bracket(pi_map(alg, gens[i]), pi_map(alg, gens[j]));
      if (!(lhs == rhs)) return names[i] + " against " + names[j];
    }
  return std::nullopt;
}

DiracPres graph_pi(const ProjAlgebroid& alg) {
  require_full_anchor(alg);
  const int d = alg.d, r = alg.r;
  DiracPres l;
  l.kind = DiracKind::GraphPi;
  l.d = d;
  l.r = r;
  l.base = alg;
  for (int i = 0; i < r; ++i)
    l.frame.push_back(OmniSec{pi_gen_section(alg, i), JetSec{vunit(r, i, d), MatP(r, d, pzero(d))}});
  for (int k = 0; k < r; ++k)
    for (int b = 0; b < d; ++b)
      l.frame.push_back(OmniSec{pi_gen_hom(alg, k, b), JetSec{vzero(r, d), ekl(r, d, k, b, d)}});
  return l;
}

// --- normalizer and derivation lifts ------------------------------------------

bool normalizer_membership(const OmniSec& x, const DiracPres& l) {
  for (const OmniSec& s : l.sections())
    if (!membership_L(dorfman(x, s), l)) return false;
  return true;
}

OmniSec reconstruct_falling(const FallingParts& p) {
  const int d = static_cast<int>(p.x.size()), r = p.phi.rows();
  return OmniSec{DerSec{p.x, p.phi}, JetSec{vzero(r, d), p.xm}};
}

OmniSec lift_derivation(const ProjAlgebroid& alg, const DerivationData& delta) {
  const int d = alg.d, r = alg.r, m = alg.frame_count();
  if (static_cast<int>(delta.x.size()) != d)
    throw Error(ErrorKind::Dimension, "derivation symbol must have d components");
  if (delta.g.rows() != m || delta.g.cols() != m)
    throw Error(ErrorKind::Dimension, "frame action must be square of the frame size");

  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      VecP h = alg.bracket_coeff(vunit(m, i, d), vunit(m, j, d));
      VecP lhs = vec_add(dir_deriv(delta.x, h), coeff_times(h, delta.g));
      VecP rhs = vec_add(alg.bracket_coeff(delta.g.row(i), vunit(m, j, d)),
                         alg.bracket_coeff(vunit(m, i, d), delta.g.row(j)));
      if (!(lhs == rhs))
        throw Error(ErrorKind::Semantic,
                    "derivation law fails on frame pair " + pair_tag(i, j));
    }
  for (int i = 0; i < m; ++i) {
    TauSec da = alg.from_coefficients(delta.g.row(i));
    if (!(da.x == vf_bracket(delta.x, alg.frame(i).x)))
      throw Error(ErrorKind::Semantic,
                  "anchor law fails on frame element " + std::to_string(i));
  }

  auto deltatilde = [&](const TauSec& t) {
    VecP f = proj_coefficients(alg, t);
    TauSec pa = alg.from_coefficients(f);
    TauSec q = t - pa;
    TauSec val = alg.from_coefficients(vec_add(dir_deriv(delta.x, f), coeff_times(f, delta.g)));
    return val + TauSec{vf_bracket(delta.x, q.x), dir_deriv(delta.x, q.e)};
  };

  MatP phi(r, r, pzero(d)), xm(r, d, pzero(d));
  for (int j = 0; j < r; ++j) phi.set_col(j, deltatilde(chart_section(d, r, d + j)).e);
  for (int b = 0; b < d; ++b) xm.set_col(b, deltatilde(chart_section(d, r, b)).e);
  OmniSec xd{DerSec{delta.x, phi}, JetSec{vzero(r, d), xm}};

  DiracPres l = lift_bundle(alg);
  if (!normalizer_membership(xd, l))
    throw Error(ErrorKind::Semantic, "lifted section fails to normalize the structure");
  for (int i = 0; i < m; ++i)
    if (!(falling(xd, alg.frame(i)) == alg.from_coefficients(delta.g.row(i))))
      throw Error(ErrorKind::Semantic, "lifted section fails to reproduce the frame action");
  return xd;
}

// --- deformations --------------------------------------------------------------

namespace {

/// Bilinear extension of frame-pair values.
VecP omega_of(const std::vector<std::vector<VecP>>& omega, const VecP& f, const VecP& g,
              int r, int d) {
  VecP v = vzero(r, d);
  const int m = static_cast<int>(omega.size());
  for (int i = 0; i < m; ++i) {
    if (f[i].is_zero()) continue;
    for (int j = 0; j < m; ++j) {
      if (g[j].is_zero()) continue;
      v = vec_add(v, vec_scale(f[i] * g[j], omega[i][j]));
    }
  }
  return v;
}

void validate_omega_shape(const ProjAlgebroid& alg,
                          const std::vector<std::vector<VecP>>& omega) {
  const int m = alg.frame_count();
  if (static_cast<int>(omega.size()) != m)
    throw Error(ErrorKind::Dimension, "deformation table must be square on the frame");
  for (const auto& row : omega) {
    if (static_cast<int>(row.size()) != m)
      throw Error(ErrorKind::Dimension, "deformation table must be square on the frame");
    for (const VecP& v : row)
      if (static_cast<int>(v.size()) != alg.r)
        throw Error(ErrorKind::Dimension, "deformation value must have r components");
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= i; ++j)
      if (!vec_is_zero(vec_add(omega[i][j], omega[j][i])))
        throw Error(ErrorKind::Semantic, "deformation table is not skew");
}

}  // namespace

ProjAlgebroid deform_algebroid(const ProjAlgebroid& alg,
                               const std::vector<std::vector<VecP>>& omega, const Rat& eps) {
  validate_omega_shape(alg, omega);
  const int d = alg.d, r = alg.r;
  ProjAlgebroid out = alg;
  switch (alg.pres) {
    case Presentation::Full: {
      for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b) {
          out.curv[a][b] = vec_add(alg.curv[a][b], vec_scale(eps, omega[a][b]));
          out.curv[b][a] = vec_scale(pconst(d, Rat(-1)), out.curv[a][b]);
        }
      for (int a = 0; a < d; ++a)
        for (int i = 0; i < r; ++i)
          out.gamma[a].set_col(i, vec_add(alg.gamma[a].col(i), vec_scale(eps, omega[a][d + i])));
      for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j)
          for (int k = 0; k < r; ++k)
            out.c0.set(i, j, k, alg.c0.c(i, j, k) + eps * omega[d + i][d + j][k]);
      return out;
    }
    case Presentation::Anchor: {
      const int m = alg.frame_count();
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
          auto q = alg.intersection_e_coefficients(omega[i][j]);
          if (!q)
            throw Error(ErrorKind::Semantic,
                        "deformation value outside the intersection with the fibre");
          for (int k = 0; k < m; ++k) out.c.set(i, j, k, alg.c.c(i, j, k) + eps * (*q)[k]);
        }
      return out;
    }
    case Presentation::Form:
    case Presentation::Line:
      for (const auto& row : omega)
        for (const VecP& v : row)
          if (!vec_is_zero(v))
            throw Error(ErrorKind::Semantic,
                        "deformation value outside the intersection with the fibre");
      return out;
  }
  throw Error(ErrorKind::Input, "unknown presentation");
}

DeformationReport deformation_check(const ProjAlgebroid& alg,
                                    const std::vector<std::vector<VecP>>& omega) {
  validate_omega_shape(alg, omega);
  const int d = alg.d, r = alg.r, m = alg.frame_count();
  DeformationReport rep;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (!alg.intersection_e_coefficients(omega[i][j]))
        throw Error(ErrorKind::Semantic,
                    "deformation value outside the intersection with the fibre: pair " +
                        pair_tag(i, j));

  auto omega_c = [&](const VecP& f, const VecP& g) { return omega_of(omega, f, g, r, d); };
  // bracket of a fibre value with a section of A, in the algebroid
  auto br_e = [&](const VecP& v, const VecP& f) {
    return alg.bracket(TauSec{vzero(d, d), v}, alg.from_coefficients(f)).e;
  };
  auto closed_term = [&](const VecP& f1, const VecP& f2, const VecP& f3) {
    return vec_add(br_e(omega_c(f1, f2), f3), omega_c(alg.bracket_coeff(f1, f2), f3));
  };
  auto closed_expr = [&](const VecP& f1, const VecP& f2, const VecP& f3) {
    return vec_add(closed_term(f1, f2, f3),
                   vec_add(closed_term(f2, f3, f1), closed_term(f3, f1, f2)));
  };
  rep.closed = true;
  for (int i = 0; i < m && rep.closed; ++i)
    for (int j = i + 1; j < m && rep.closed; ++j)
      for (int k = j + 1; k < m && rep.closed; ++k) {
        if (!vec_is_zero(closed_expr(vunit(m, i, d), vunit(m, j, d), vunit(m, k, d)))) {
          rep.closed = false;
          rep.failures.push_back("cyclic bracket condition fails on triple " +
                                 triple_tag(i, j, k));
        }
      }
  if (rep.closed && m >= 3) {
    Poly f = pone(d) + Poly::variable(d, 0);
    VecP fa = vec_scale(f, vunit(m, 0, d));
    VecP lhs = closed_expr(fa, vunit(m, 1, d), vunit(m, 2, d));
    VecP rhs = vec_scale(f, closed_expr(vunit(m, 0, d), vunit(m, 1, d), vunit(m, 2, d)));
    if (!(lhs == rhs)) {
      rep.closed = false;
      rep.failures.push_back("cyclic bracket condition is not function-linear");
    }
  }

  // fibrewise Jacobi of the deformation values
  std::vector<std::vector<VecP>> q(m, std::vector<VecP>(m, vzero(m, d)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j) q[i][j] = *alg.intersection_e_coefficients(omega[i][j]);
  auto q_of = [&](const VecP& f, const VecP& g) {
    VecP v = vzero(m, d);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) v = vec_add(v, vec_scale(f[i] * g[j], q[i][j]));
    return v;
  };
  rep.fibrewise = true;
  for (int i = 0; i < m && rep.fibrewise; ++i)
    for (int j = i + 1; j < m && rep.fibrewise; ++j)
      for (int k = j + 1; k < m && rep.fibrewise; ++k) {
        VecP ui = vunit(m, i, d), uj = vunit(m, j, d), uk = vunit(m, k, d);
        VecP total = omega_c(q_of(ui, uj), uk);
        total = vec_add(total, omega_c(q_of(uj, uk), ui));
        total = vec_add(total, omega_c(q_of(uk, ui), uj));
        if (!vec_is_zero(total)) {
          rep.fibrewise = false;
          rep.failures.push_back("fibrewise Jacobi fails on triple " + triple_tag(i, j, k));
        }
      }

  // independent evaluation: the pulled-back cochain on the lifted frame
  DiracPres l = lift_bundle(alg);
  std::vector<OmniSec> secs = l.sections();
  auto bcoeff = [&](const OmniSec& s) {
    auto f = alg.coefficients(b_project(s));
    if (!f) throw Error(ErrorKind::Semantic, "projected section leaves the algebroid");
    return *f;
  };
  rep.b_star_closed = true;
  const int n = static_cast<int>(secs.size());
  for (int i = 0; i < n && rep.b_star_closed; ++i)
    for (int j = i + 1; j < n && rep.b_star_closed; ++j)
      for (int k = j + 1; k < n && rep.b_star_closed; ++k) {
        VecP bi = bcoeff(secs[i]), bj = bcoeff(secs[j]), bk = bcoeff(secs[k]);
        VecP total = apply_der(secs[i].der, omega_c(bj, bk));
        total = vec_add(total, apply_der(secs[j].der, omega_c(bk, bi)));
        total = vec_add(total, apply_der(secs[k].der, omega_c(bi, bj)));
        total = vec_add(total, omega_c(bcoeff(dorfman(secs[i], secs[j])), bk));
        total = vec_add(total, omega_c(bcoeff(dorfman(secs[j], secs[k])), bi));
        total = vec_add(total, omega_c(bcoeff(dorfman(secs[k], secs[i])), bj));
        if (!vec_is_zero(total)) {
          rep.b_star_closed = false;
          rep.failures.push_back("pulled-back cochain fails to close on triple " +
                                 triple_tag(i, j, k));
        }
      }
  rep.agree = rep.closed == rep.b_star_closed;

  if (rep.closed && rep.fibrewise) {
    rep.deformed_dirac_ok = true;
    for (const Rat& eps : {Rat(1), Rat(-1), Rat(2)}) {
      ProjAlgebroid def = deform_algebroid(alg, omega, eps);
      if (!check_projective_algebroid(def).pass || !dirac_closure_check(lift_bundle(def)).pass) {
        rep.deformed_dirac_ok = false;
        rep.failures.push_back("deformed structure fails at parameter " + eps.str());
      }
    }
  }
  return rep;
}

NormalizerDeformReport deformation_from_normalizer(const ProjAlgebroid& alg, const OmniSec& x) {
  const int d = alg.d, r = alg.r, m = alg.frame_count();
  NormalizerDeformReport rep;
  DiracPres l = lift_bundle(alg);

  // frame of the b-preimage of A: the lifted frame plus every elementary
  // bundle map into E
  std::vector<OmniSec> pre = l.frame;
  for (int k = 0; k < r; ++k)
    for (int n = 0; n < r; ++n)
      pre.push_back(amb(d, HomSec{ekl(r, r, k, n, d), MatP(r, d, pzero(d))}));
  for (int k = 0; k < r; ++k)
    for (int b = 0; b < d; ++b)
      pre.push_back(amb(d, HomSec{MatP(r, r, pzero(d)), ekl(r, d, k, b, d)}));
  rep.in_normalizer = true;
  for (const OmniSec& y : pre)
    if (!alg.coefficients(b_project(dorfman(x, y)))) {
      rep.in_normalizer = false;
      break;
    }
  if (!rep.in_normalizer) return rep;

  auto fall_coeff = [&](const TauSec& t) {
    auto f = alg.coefficients(falling(x, t));
    if (!f) throw Error(ErrorKind::Semantic, "falling image leaves the algebroid");
    return *f;
  };
  std::vector<VecP> fall(m);
  for (int i = 0; i < m; ++i) fall[i] = fall_coeff(alg.frame(i));

  rep.omega.assign(m, std::vector<VecP>(m, vzero(r, d)));
  rep.values_ok = true;
  std::vector<std::vector<VecP>> omega_coeff(m, std::vector<VecP>(m, vzero(m, d)));
  Poly half = pconst(d, Rat(1, 2));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      VecP ui = vunit(m, i, d), uj = vunit(m, j, d);
      VecP t = vec_add(alg.bracket_coeff(fall[i], uj), alg.bracket_coeff(ui, fall[j]));
      t = vec_sub(t, fall_coeff(alg.from_coefficients(alg.bracket_coeff(ui, uj))));
      VecP w = vec_scale(half, t);
      TauSec val = alg.from_coefficients(w);
      if (!vec_is_zero(val.x)) rep.values_ok = false;
      rep.omega[i][j] = val.e;
      rep.omega[j][i] = vec_scale(pconst(d, Rat(-1)), val.e);
      omega_coeff[i][j] = w;
      omega_coeff[j][i] = vec_scale(pconst(d, Rat(-1)), w);
    }

  // cyclic condition on the twist operator
  auto fall_sec = [&](const TauSec& t) { return falling(x, t); };
  auto twist = [&](const TauSec& s, const TauSec& t) {
    TauSec v = alg.bracket(fall_sec(s), t) + alg.bracket(s, fall_sec(t));
    return v - fall_sec(alg.bracket(s, t));
  };
  auto t_op = [&](const TauSec& s, const TauSec& t) {
    return fall_sec(twist(s, t)) - alg.bracket(fall_sec(s), fall_sec(t));
  };
  auto cyc = [&](const TauSec& a, const TauSec& b, const TauSec& c) {
    TauSec v = alg.bracket(t_op(a, b), c) + t_op(alg.bracket(a, b), c);
    v = v + alg.bracket(t_op(b, c), a) + t_op(alg.bracket(b, c), a);
    v = v + alg.bracket(t_op(c, a), b) + t_op(alg.bracket(c, a), b);
    return v;
  };
  rep.t_cyclic = true;
  for (int i = 0; i < m && rep.t_cyclic; ++i)
    for (int j = i + 1; j < m && rep.t_cyclic; ++j)
      for (int k = j + 1; k < m && rep.t_cyclic; ++k)
        rep.t_cyclic = cyc(alg.frame(i), alg.frame(j), alg.frame(k)).is_zero();
  if (rep.t_cyclic && m >= 3) {
    Poly f = pone(d) + Poly::variable(d, 0);
    rep.t_cyclic = cyc(scale(f, alg.frame(0)), alg.frame(1), alg.frame(2)).is_zero();
  }

  // coboundary relation on the lifted frame
  auto omega_x = [&](const OmniSec& s) { return omni_pairing_sec(x, s); };
  rep.coboundary = true;
  std::vector<OmniSec> secs = l.sections();
  auto bcoeff = [&](const OmniSec& s) {
    auto f = alg.coefficients(b_project(s));
    return f ? *f : vzero(m, d);
  };
  for (std::size_t i = 0; i < secs.size() && rep.coboundary; ++i)
    for (std::size_t j = i + 1; j < secs.size() && rep.coboundary; ++j) {
      VecP lhs = vec_sub(apply_der(secs[i].der, omega_x(secs[j])),
                         apply_der(secs[j].der, omega_x(secs[i])));
      lhs = vec_sub(lhs, omega_x(dorfman(secs[i], secs[j])));
      VecP rhs = omega_of(rep.omega, bcoeff(secs[i]), bcoeff(secs[j]), r, d);
      rep.coboundary = lhs == rhs;
    }

  if (rep.values_ok && rep.t_cyclic) rep.deform = deformation_check(alg, rep.omega);
  return rep;
}

// --- bialgebroids ---------------------------------------------------------------

Biv Biv::zero(int d, int r) { return Biv{MatP(r, r, pzero(d))}; }

Biv wedge(const VecP& u, const VecP& v) {
  const int r = static_cast<int>(u.size());
  const int d = r ? u[0].nvars() : 0;
  Biv b = Biv::zero(d, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) b.w(i, j) = u[i] * v[j] - u[j] * v[i];
  return b;
}

VecP algebroid_bracket(const ProjAlgebroid& alg, const VecP& u, const VecP& v) {
  require_full_anchor(alg);
  const int d = alg.d, r = alg.r;
  VecP res = alg.c.bracket(u, v);
  for (int k = 0; k < r; ++k) {
    Poly du = pzero(d), dv = pzero(d);
    for (int i = 0; i < r; ++i) {
      VecP rho_i;
      for (int a = 0; a < d; ++a) rho_i.push_back(alg.rho(a, i));
      dv = dv + u[i] * dir_deriv(rho_i, v[k]);
      du = du + v[i] * dir_deriv(rho_i, u[k]);
    }
    res[k] = res[k] + dv - du;
  }
  return res;
}

Poly algebroid_rho(const ProjAlgebroid& alg, const VecP& u, const Poly& f) {
  require_full_anchor(alg);
  Poly res = pzero(alg.d);
  for (int i = 0; i < alg.r; ++i) {
    VecP rho_i;
    for (int a = 0; a < alg.d; ++a) rho_i.push_back(alg.rho(a, i));
    res = res + u[i] * dir_deriv(rho_i, f);
  }
  return res;
}

Biv schouten(const ProjAlgebroid& alg, const VecP& u, const Biv& p) {
  require_full_anchor(alg);
  const int d = alg.d, r = alg.r;
  Biv res = Biv::zero(d, r);
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      const Poly& c = p.w(i, j);
      if (c.is_zero()) continue;
      res = res + Biv{algebroid_rho(alg, u, c) * wedge(vunit(r, i, d), vunit(r, j, d)).w};
      res = res + Biv{c * wedge(algebroid_bracket(alg, u, vunit(r, i, d)), vunit(r, j, d)).w};
      res = res + Biv{c * wedge(vunit(r, i, d), algebroid_bracket(alg, u, vunit(r, j, d))).w};
    }
  return res;
}

VecP schouten_f(const ProjAlgebroid& alg, const Biv& p, const Poly& f) {
  require_full_anchor(alg);
  const int d = alg.d, r = alg.r;
  VecP res = vzero(r, d);
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      const Poly& c = p.w(i, j);
      if (c.is_zero()) continue;
      res = vec_add(res, vec_scale(c * algebroid_rho(alg, vunit(r, i, d), f), vunit(r, j, d)));
      res = vec_sub(res, vec_scale(c * algebroid_rho(alg, vunit(r, j, d), f), vunit(r, i, d)));
    }
  return res;
}

VecP dual_d_function(const ProjAlgebroid& dual, const Poly& f) {
  require_full_anchor(dual);
  VecP res;
  for (int k = 0; k < dual.r; ++k) {
    VecP rho_k;
    for (int a = 0; a < dual.d; ++a) rho_k.push_back(dual.rho(a, k));
    res.push_back(dir_deriv(rho_k, f));
  }
  return res;
}

Biv dual_d_section(const ProjAlgebroid& dual, const VecP& u) {
  require_full_anchor(dual);
  const int d = dual.d, r = dual.r;
  Biv res = Biv::zero(d, r);
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      VecP rho_i, rho_j;
      for (int a = 0; a < d; ++a) rho_i.push_back(dual.rho(a, i));
      for (int a = 0; a < d; ++a) rho_j.push_back(dual.rho(a, j));
      Poly v = dir_deriv(rho_i, u[j]) - dir_deriv(rho_j, u[i]);
      for (int k = 0; k < r; ++k) v = v - dual.c.c(i, j, k) * u[k];
      res.w(i, j) = v;
      res.w(j, i) = -v;
    }
  return res;
}

BialgebroidReport bialgebroid_check(const ProjAlgebroid& e_alg, const ProjAlgebroid& dual_alg) {
  require_full_anchor(e_alg);
  require_full_anchor(dual_alg);
  if (e_alg.d != dual_alg.d || e_alg.r != dual_alg.r)
    throw Error(ErrorKind::Dimension, "the two algebroids must share base and rank");
  if (!check_projective_algebroid(e_alg).pass)
    throw Error(ErrorKind::Semantic, "first algebroid is invalid");
  if (!check_projective_algebroid(dual_alg).pass)
    throw Error(ErrorKind::Semantic, "second algebroid is invalid");
  const int d = e_alg.d, r = e_alg.r;
  BialgebroidReport rep;

  rep.cond_sections = true;
  for (int i = 0; i < r && rep.cond_sections; ++i)
    for (int j = i + 1; j < r && rep.cond_sections; ++j) {
      Biv lhs = dual_d_section(dual_alg, algebroid_bracket(e_alg, vunit(r, i, d), vunit(r, j, d)));
      Biv rhs = schouten(e_alg, vunit(r, i, d), dual_d_section(dual_alg, vunit(r, j, d))) -
                schouten(e_alg, vunit(r, j, d), dual_d_section(dual_alg, vunit(r, i, d)));
      rep.cond_sections = lhs == rhs;
    }

  rep.cond_mixed = true;
  for (int i = 0; i < r && rep.cond_mixed; ++i)
    for (int a = 0; a < d && rep.cond_mixed; ++a) {
      Poly ta = Poly::variable(d, a);
      VecP defect = dual_d_function(dual_alg, algebroid_rho(e_alg, vunit(r, i, d), ta));
      defect = vec_sub(defect, schouten_f(e_alg, dual_d_section(dual_alg, vunit(r, i, d)), ta));
      defect =
          vec_sub(defect, algebroid_bracket(e_alg, vunit(r, i, d), dual_d_function(dual_alg, ta)));
      for (int j = 0; j < r && rep.cond_mixed; ++j)
        rep.cond_mixed = wedge(defect, vunit(r, j, d)).is_zero();
    }

  rep.cond_functions = true;
  for (int a = 0; a < d && rep.cond_functions; ++a)
    for (int b = a + 1; b < d && rep.cond_functions; ++b) {
      Poly ta = Poly::variable(d, a), tb = Poly::variable(d, b);
      Poly s = algebroid_rho(e_alg, dual_d_function(dual_alg, ta), tb) -
               algebroid_rho(e_alg, dual_d_function(dual_alg, tb), ta);
      for (int i = 0; i < r && rep.cond_functions; ++i)
        for (int j = i + 1; j < r; ++j)
          if (!(s * wedge(vunit(r, i, d), vunit(r, j, d)).w).is_zero()) {
            rep.cond_functions = false;
            break;
          }
    }
  rep.pass = rep.cond_sections && rep.cond_mixed && rep.cond_functions;

  // independent path: cocycle evaluation of the lifted differential through
  // the jet bracket and the tensor action on bivectors
  auto dhat = [&](const JetSec& mu) {
    Biv res = Biv::zero(d, r);
    for (int i = 0; i < r; ++i)
      if (!mu.u[i].is_zero())
        res = res + Biv{mu.u[i] * dual_d_section(dual_alg, vunit(r, i, d)).w};
    for (int j = 0; j < r; ++j)
      for (int a = 0; a < d; ++a)
        if (!mu.eta(j, a).is_zero())
          res = res +
                Biv{mu.eta(j, a) *
                    wedge(dual_d_function(dual_alg, Poly::variable(d, a)), vunit(r, j, d)).w};
    return res;
  };
  auto pitilde = [&](const JetSec& mu, const Biv& w) {
    Biv res = Biv::zero(d, r);
    for (int i = 0; i < r; ++i)
      if (!mu.u[i].is_zero())
        res = res + Biv{mu.u[i] * schouten(e_alg, vunit(r, i, d), w).w};
    for (int j = 0; j < r; ++j)
      for (int a = 0; a < d; ++a)
        if (!mu.eta(j, a).is_zero())
          res = res + Biv{mu.eta(j, a) *
                          wedge(schouten_f(e_alg, w, Poly::variable(d, a)), vunit(r, j, d)).w};
    return res;
  };
  std::vector<JetSec> gens;
  for (int i = 0; i < r; ++i) gens.push_back(JetSec{vunit(r, i, d), MatP(r, d, pzero(d))});
  for (int j = 0; j < r; ++j)
    for (int a = 0; a < d; ++a) gens.push_back(JetSec{vzero(r, d), ekl(r, d, j, a, d)});
  rep.oracle_pass = true;
  for (std::size_t i = 0; i < gens.size() && rep.oracle_pass; ++i)
    for (std::size_t j = i + 1; j < gens.size() && rep.oracle_pass; ++j) {
      Biv v = pitilde(gens[i], dhat(gens[j])) - pitilde(gens[j], dhat(gens[i]));
      v = v - dhat(pi_bracket(gens[i], gens[j], e_alg));
      rep.oracle_pass = v.is_zero();
    }
  rep.agree = rep.pass == rep.oracle_pass;
  return rep;
}

}  // namespace omnilie
