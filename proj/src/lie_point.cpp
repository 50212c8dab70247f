#include "omnilie/lie_point.hpp"

#include <algorithm>
#include <map>

namespace omnilie {

// --- tuples and cochains ------------------------------------------------------

std::vector<std::vector<int>> increasing_tuples(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> t(k);
  for (int i = 0; i < k; ++i) t[i] = i;
  for (;;) {
    out.push_back(t);
    if (k == 0) break;
    int i = k - 1;
    while (i >= 0 && t[i] == n - k + i) --i;
    if (i < 0) break;
    ++t[i];
    for (int j = i + 1; j < k; ++j) t[j] = t[j - 1] + 1;
  }
  return out;
}

namespace {

/// Index of an increasing tuple in the lex enumeration, with a shared cache.
struct TupleIndex {
  std::map<std::vector<int>, int> pos;
  std::vector<std::vector<int>> tuples;
  TupleIndex(int n, int k) : tuples(increasing_tuples(n, k)) {
    for (std::size_t i = 0; i < tuples.size(); ++i) pos[tuples[i]] = static_cast<int>(i);
  }
};

/// Sorts a tuple, returning the permutation sign, or 0 on repeated entries.
int sort_sign(std::vector<int>& t) {
  int sign = 1;
  for (std::size_t i = 1; i < t.size(); ++i)
    for (std::size_t j = i; j > 0 && t[j] < t[j - 1]; --j) {
      std::swap(t[j], t[j - 1]);
      sign = -sign;
    }
  for (std::size_t i = 1; i < t.size(); ++i)
    if (t[i] == t[i - 1]) return 0;
  return sign;
}

}  // namespace

Cochain Cochain::zero(int n, int r, int k) {
  Cochain w;
  w.n = n;
  w.r = r;
  w.k = k;
  w.values.assign(increasing_tuples(n, k).size(), VecQ(r, Rat(0)));
  return w;
}

VecQ& Cochain::value(const std::vector<int>& tuple) {
  TupleIndex ti(n, k);
  auto it = ti.pos.find(tuple);
  if (it == ti.pos.end()) throw Error(ErrorKind::Dimension, "tuple is not an increasing basis tuple");
  return values[it->second];
}

const VecQ& Cochain::value(const std::vector<int>& tuple) const {
  TupleIndex ti(n, k);
  auto it = ti.pos.find(tuple);
  if (it == ti.pos.end()) throw Error(ErrorKind::Dimension, "tuple is not an increasing basis tuple");
  return values[it->second];
}

VecQ Cochain::eval(std::vector<int> tuple) const {
  if (static_cast<int>(tuple.size()) != k) throw Error(ErrorKind::Dimension, "tuple arity mismatch");
  int sign = sort_sign(tuple);
  if (sign == 0) return VecQ(r, Rat(0));
  VecQ v = value(tuple);
  if (sign < 0)
    for (auto& x : v) x = -x;
  return v;
}

VecQ Cochain::flatten() const {
  VecQ flat;
  flat.reserve(values.size() * r);
  for (const auto& v : values) flat.insert(flat.end(), v.begin(), v.end());
  return flat;
}

Cochain Cochain::unflatten(int n, int r, int k, const VecQ& flat) {
  Cochain w = zero(n, r, k);
  if (flat.size() != w.values.size() * static_cast<std::size_t>(r))
    throw Error(ErrorKind::Dimension, "flattened cochain length mismatch");
  for (std::size_t t = 0; t < w.values.size(); ++t)
    for (int s = 0; s < r; ++s) w.values[t][s] = flat[t * r + s];
  return w;
}

Cochain ce_apply(const Rep& rep, const LieStruct& s, const Cochain& w) {
  const int n = w.n, r = w.r, k = w.k;
  Cochain out = Cochain::zero(n, r, k + 1);
  auto tuples = increasing_tuples(n, k + 1);
  for (std::size_t u = 0; u < tuples.size(); ++u) {
    const auto& T = tuples[u];
    VecQ acc(r, Rat(0));
    // sum_i (-1)^i rho(e_{T_i}) w(T \ i)
    for (int i = 0; i <= k; ++i) {
      std::vector<int> rest;
      for (int j = 0; j <= k; ++j)
        if (j != i) rest.push_back(T[j]);
      VecQ val = rep.rho[T[i]] * w.eval(rest);
      if (i % 2 == 1)
        for (auto& x : val) x = -x;
      acc = vec_add(acc, val);
    }
    // sum_{i<j} (-1)^{i+j} w([e_{T_i}, e_{T_j}], T \ {i,j})
    for (int i = 0; i <= k; ++i)
      for (int j = i + 1; j <= k; ++j) {
        std::vector<int> rest;
        for (int m = 0; m <= k; ++m)
          if (m != i && m != j) rest.push_back(T[m]);
        for (int l = 0; l < n; ++l) {
          Rat cl = s.c(T[i], T[j], l);
          if (cl.is_zero()) continue;
          std::vector<int> args;
          args.push_back(l);
          args.insert(args.end(), rest.begin(), rest.end());
          VecQ val = w.eval(args);
          Rat f = ((i + j) % 2 == 0) ? cl : -cl;
          acc = vec_add(acc, vec_scale(f, val));
        }
      }
    out.values[u] = acc;
  }
  return out;
}

MatQ ce_differential(int k, const Rep& rep, const LieStruct& s) {
  if (k < 0 || k > 3) throw Error(ErrorKind::Input, "cochain degree out of the supported range 0..3");
  if (rep.n != s.dim()) throw Error(ErrorKind::Dimension, "representation dimension mismatch");
  const int n = s.dim(), r = rep.r;
  const int cols = static_cast<int>(increasing_tuples(n, k).size()) * r;
  const int rows = static_cast<int>(increasing_tuples(n, k + 1).size()) * r;
  MatQ d(rows, cols);
  auto tuples = increasing_tuples(n, k);
  for (std::size_t t = 0; t < tuples.size(); ++t)
    for (int sidx = 0; sidx < r; ++sidx) {
      Cochain basis = Cochain::zero(n, r, k);
      basis.values[t][sidx] = Rat(1);
      Cochain img = ce_apply(rep, s, basis);
      VecQ flat = img.flatten();
      int colidx = static_cast<int>(t) * r + sidx;
      for (int rowidx = 0; rowidx < rows; ++rowidx) d(rowidx, colidx) = flat[rowidx];
    }
  return d;
}

CohomologyDims cohomology_dims(const Rep& rep, const LieStruct& s) {
  CohomologyDims out;
  MatQ d0 = ce_differential(0, rep, s);
  MatQ d1 = ce_differential(1, rep, s);
  MatQ d2 = ce_differential(2, rep, s);
  MatQ d3 = ce_differential(3, rep, s);
  out.d_squared_zero = (d1 * d0).is_zero() && (d2 * d1).is_zero() && (d3 * d2).is_zero();
  auto nullity = [](const MatQ& m) { return m.cols() - rank(m); };
  out.h0 = nullity(d0);
  out.h1 = nullity(d1) - rank(d0);
  out.h2 = nullity(d2) - rank(d1);
  return out;
}

// --- Rep ----------------------------------------------------------------------

Rep Rep::trivial(int n, int r) {
  Rep rep;
  rep.n = n;
  rep.r = r;
  rep.rho.assign(n, MatQ(r, r));
  return rep;
}

Rep Rep::adjoint(const LieStruct& s) {
  Rep rep;
  rep.n = s.dim();
  rep.r = s.dim();
  for (int i = 0; i < s.dim(); ++i) rep.rho.push_back(s.ad_basis(i));
  return rep;
}

MatQ Rep::matrix_of(const VecQ& u) const {
  if (static_cast<int>(u.size()) != n) throw Error(ErrorKind::Dimension, "coefficient length mismatch");
  MatQ m(r, r);
  for (int i = 0; i < n; ++i)
    if (!u[i].is_zero()) m = m + u[i] * rho[i];
  return m;
}

std::optional<std::array<int, 2>> Rep::homomorphism_defect(const LieStruct& s) const {
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      MatQ lhs = matrix_of(s.bracket_basis(i, j));
      MatQ rhs = commutator(rho[i], rho[j]);
      if (lhs != rhs) return std::array<int, 2>{i, j};
    }
  return std::nullopt;
}

// --- derivations ----------------------------------------------------------------

DerivationResult derivations(const LieStruct& s) {
  const int n = s.dim();
  // Unknowns: D as a flattened n x n matrix (row-major). For each pair i<j and
  // output coordinate m:
  //   sum_k c[i][j][k] D[m][k] - sum_l D[l][i] c[l][j][m] - sum_l D[l][j] c[i][l][m] = 0.
  const int unknowns = n * n;
  std::vector<VecQ> rows;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int m = 0; m < n; ++m) {
        VecQ row(unknowns, Rat(0));
        for (int k = 0; k < n; ++k) row[m * n + k] += s.c(i, j, k);
        for (int l = 0; l < n; ++l) {
          row[l * n + i] -= s.c(l, j, m);
          row[l * n + j] -= s.c(i, l, m);
        }
        rows.push_back(row);
      }
  MatQ sys(static_cast<int>(rows.size()), unknowns);
  for (std::size_t i = 0; i < rows.size(); ++i) sys.set_row(static_cast<int>(i), rows[i]);
  RrefResult rr = rref(sys);

  DerivationResult out;
  out.der = Subspace::from_rows(unknowns, rr.kernel);
  std::vector<VecQ> ads;
  for (int i = 0; i < n; ++i) {
    MatQ ad = s.ad_basis(i);
    VecQ flat(unknowns);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) flat[a * n + b] = ad(a, b);
    ads.push_back(flat);
  }
  out.inn = Subspace::from_vectors(unknowns, ads);
  out.ext_dim = out.der.dim() - out.inn.dim();
  return out;
}

// --- Nijenhuis -------------------------------------------------------------------

namespace {

/// Torsion T(e_i,e_j) = N([Ne_i,e_j] + [e_i,Ne_j] - N[e_i,e_j]) - [Ne_i,Ne_j].
VecQ nijenhuis_torsion(const MatQ& N, const LieStruct& s, const VecQ& a, const VecQ& b) {
  VecQ Na = N * a, Nb = N * b;
  VecQ inner = vec_sub(vec_add(s.bracket(Na, b), s.bracket(a, Nb)), N * s.bracket(a, b));
  return vec_sub(N * inner, s.bracket(Na, Nb));
}

VecQ basis_vec(int n, int i) {
  VecQ v(n, Rat(0));
  v[i] = Rat(1);
  return v;
}

}  // namespace

NijenhuisResult nijenhuis_check(const MatQ& N, const LieStruct& s) {
  const int n = s.dim();
  if (N.rows() != n || N.cols() != n) throw Error(ErrorKind::Dimension, "operator shape mismatch");
  NijenhuisResult out;
  out.deformed = LieStruct(n);

  // deformed bracket structure constants
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      VecQ ei = basis_vec(n, i), ej = basis_vec(n, j);
      VecQ defo = vec_sub(vec_add(s.bracket(N * ei, ej), s.bracket(ei, N * ej)),
                          N * s.bracket(ei, ej));
      for (int k = 0; k < n; ++k) out.deformed.set(i, j, k, defo[k]);
    }

  out.torsion_zero = true;
  for (int i = 0; i < n && out.torsion_zero; ++i)
    for (int j = i + 1; j < n && out.torsion_zero; ++j)
      if (!vec_is_zero(nijenhuis_torsion(N, s, basis_vec(n, i), basis_vec(n, j))))
        out.torsion_zero = false;

  // weak compatibility: [a, T(b,c)] + T(a, [b,c]) + cyclic = 0 on basis triples
  out.weak_condition = true;
  for (int i = 0; i < n && out.weak_condition; ++i)
    for (int j = 0; j < n && out.weak_condition; ++j)
      for (int k = 0; k < n && out.weak_condition; ++k) {
        VecQ a = basis_vec(n, i), b = basis_vec(n, j), c = basis_vec(n, k);
        VecQ total(n, Rat(0));
        auto term = [&](const VecQ& x, const VecQ& y, const VecQ& z) {
          return vec_add(s.bracket(x, nijenhuis_torsion(N, s, y, z)),
                         nijenhuis_torsion(N, s, x, s.bracket(y, z)));
        };
        total = vec_add(total, term(a, b, c));
        total = vec_add(total, term(b, c, a));
        total = vec_add(total, term(c, a, b));
        if (!vec_is_zero(total)) out.weak_condition = false;
      }

  out.jacobi_witness = check_jacobi(out.deformed);
  out.deformed_jacobi = !out.jacobi_witness.has_value();
  if (out.weak_condition && !out.deformed_jacobi)
    throw Error(ErrorKind::Input,
                "internal inconsistency: weak compatibility held but the deformed bracket "
                "violates Jacobi");
  return out;
}

// --- deformations ------------------------------------------------------------------

DeformationResult deformation_2cocycle_check(const LieStruct& s, const LieStruct& W) {
  const int n = s.dim();
  if (W.dim() != n) throw Error(ErrorKind::Dimension, "cochain dimension mismatch");
  if (check_jacobi(s))
    throw Error(ErrorKind::Semantic, "deformation base bracket violates Jacobi");
  DeformationResult out;
  out.closed = true;
  out.fibrewise = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        VecQ a = basis_vec(n, i), b = basis_vec(n, j), c = basis_vec(n, k);
        auto closed_term = [&](const VecQ& x, const VecQ& y, const VecQ& z) {
          return vec_add(W.bracket(s.bracket(x, y), z), s.bracket(W.bracket(x, y), z));
        };
        auto fib_term = [&](const VecQ& x, const VecQ& y, const VecQ& z) {
          return W.bracket(W.bracket(x, y), z);
        };
        VecQ cl = vec_add(vec_add(closed_term(a, b, c), closed_term(b, c, a)),
                          closed_term(c, a, b));
        VecQ fb = vec_add(vec_add(fib_term(a, b, c), fib_term(b, c, a)), fib_term(c, a, b));
        if (!vec_is_zero(cl) && out.closed) {
          out.closed = false;
          if (!out.witness) out.witness = std::array<int, 3>{i, j, k};
        }
        if (!vec_is_zero(fb) && out.fibrewise) {
          out.fibrewise = false;
          if (!out.witness) out.witness = std::array<int, 3>{i, j, k};
        }
      }

  if (out.closed && out.fibrewise) {
    out.deformed_jacobi_all = true;
    for (long eps : {1L, -1L, 2L}) {
      LieStruct defo(n);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          for (int k = 0; k < n; ++k)
            defo.set(i, j, k, s.c(i, j, k) + Rat(eps) * W.c(i, j, k));
      if (check_jacobi(defo).has_value()) out.deformed_jacobi_all = false;
    }
    if (!out.deformed_jacobi_all)
      throw Error(ErrorKind::Input,
                  "internal inconsistency: deformation conditions held but a deformed "
                  "bracket violates Jacobi");
  }
  return out;
}

// --- multivectors / Schouten ----------------------------------------------------

Multivector Multivector::zero(int n, int k) {
  if (k < 0 || k > 3) throw Error(ErrorKind::Input, "multivector degree out of the supported range 0..3");
  Multivector m;
  m.n = n;
  m.k = k;
  return m;
}

Multivector Multivector::basis_vector(int n, int i) {
  Multivector m = zero(n, 1);
  m.add({i}, Rat(1));
  return m;
}

void Multivector::add(std::vector<int> tuple, Rat c) {
  if (static_cast<int>(tuple.size()) != k) throw Error(ErrorKind::Dimension, "tuple arity mismatch");
  for (int idx : tuple)
    if (idx < 0 || idx >= n) throw Error(ErrorKind::Dimension, "tuple index out of range");
  int sign = sort_sign(tuple);
  if (sign == 0 || c.is_zero()) return;
  Rat v = sign < 0 ? -c : c;
  auto it = comps.find(tuple);
  if (it == comps.end()) {
    comps.emplace(std::move(tuple), v);
  } else {
    it->second += v;
    if (it->second.is_zero()) comps.erase(it);
  }
}

bool Multivector::is_zero() const { return comps.empty(); }

Multivector operator+(const Multivector& a, const Multivector& b) {
  if (a.n != b.n || a.k != b.k) throw Error(ErrorKind::Dimension, "multivector shape mismatch");
  Multivector m = a;
  for (const auto& [t, c] : b.comps) m.add(t, c);
  return m;
}

Multivector operator-(const Multivector& a, const Multivector& b) {
  if (a.n != b.n || a.k != b.k) throw Error(ErrorKind::Dimension, "multivector shape mismatch");
  Multivector m = a;
  for (const auto& [t, c] : b.comps) m.add(t, -c);
  return m;
}

Multivector operator*(const Rat& c, const Multivector& a) {
  Multivector m = Multivector::zero(a.n, a.k);
  for (const auto& [t, v] : a.comps) m.add(t, c * v);
  return m;
}

bool operator==(const Multivector& a, const Multivector& b) {
  return a.n == b.n && a.k == b.k && a.comps == b.comps;
}

Multivector wedge(const Multivector& a, const Multivector& b) {
  if (a.n != b.n) throw Error(ErrorKind::Dimension, "multivector shape mismatch");
  Multivector m = Multivector::zero(a.n, a.k + b.k);
  for (const auto& [ta, ca] : a.comps)
    for (const auto& [tb, cb] : b.comps) {
      std::vector<int> t = ta;
      t.insert(t.end(), tb.begin(), tb.end());
      m.add(t, ca * cb);
    }
  return m;
}

Multivector schouten_bracket(const Multivector& P, const Multivector& Q, const LieStruct& s) {
  if (P.n != s.dim() || Q.n != s.dim())
    throw Error(ErrorKind::Dimension, "multivector dimension mismatch");
  if (P.k > 2 || Q.k > 2)
    throw Error(ErrorKind::Input, "schouten bracket inputs limited to degree <= 2");
  const int n = s.dim();
  // degree-0 arguments bracket to zero at a point (no functions to derive)
  if (P.k == 0 || Q.k == 0) return Multivector::zero(n, std::max(P.k + Q.k - 1, 0));
  Multivector out = Multivector::zero(n, P.k + Q.k - 1);
  for (const auto& [tp, cp] : P.comps)
    for (const auto& [tq, cq] : Q.comps) {
      // [x1^..^xp, y1^..^yq] = sum (-1)^{i+j} [xi,yj] ^ rest (1-based signs)
      for (std::size_t i = 0; i < tp.size(); ++i)
        for (std::size_t j = 0; j < tq.size(); ++j) {
          VecQ br = s.bracket_basis(tp[i], tq[j]);
          std::vector<int> rest;
          for (std::size_t m = 0; m < tp.size(); ++m)
            if (m != i) rest.push_back(tp[m]);
          for (std::size_t m = 0; m < tq.size(); ++m)
            if (m != j) rest.push_back(tq[m]);
          int sign = ((i + 1 + j + 1) % 2 == 0) ? 1 : -1;
          for (int l = 0; l < n; ++l) {
            if (br[l].is_zero()) continue;
            std::vector<int> t;
            t.push_back(l);
            t.insert(t.end(), rest.begin(), rest.end());
            out.add(t, Rat(sign) * cp * cq * br[l]);
          }
        }
    }
  return out;
}

// --- Lie bialgebra ----------------------------------------------------------------

Multivector dual_differential(const LieStruct& dual, int k) {
  const int n = dual.dim();
  Multivector m = Multivector::zero(n, 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) m.add({i, j}, -dual.c(i, j, k));
  return m;
}

BialgebraResult check_lie_bialgebra(const LieStruct& s, const LieStruct& dual) {
  if (s.dim() != dual.dim()) throw Error(ErrorKind::Dimension, "bialgebra dimensions differ");
  if (check_jacobi(s)) throw Error(ErrorKind::Semantic, "primary bracket violates Jacobi");
  if (check_jacobi(dual)) throw Error(ErrorKind::Semantic, "dual bracket violates Jacobi");
  const int n = s.dim();
  BialgebraResult out;
  out.compatible = true;
  auto d_star = [&](const VecQ& u) {
    Multivector m = Multivector::zero(n, 2);
    for (int k = 0; k < n; ++k)
      if (!u[k].is_zero()) m = m + u[k] * dual_differential(dual, k);
    return m;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Multivector lhs = d_star(s.bracket_basis(i, j));
      Multivector rhs = schouten_bracket(dual_differential(dual, i),
                                         Multivector::basis_vector(n, j), s) +
                        schouten_bracket(Multivector::basis_vector(n, i),
                                         dual_differential(dual, j), s);
      if (!(lhs == rhs)) {
        out.compatible = false;
        if (!out.witness) out.witness = std::array<int, 2>{i, j};
      }
    }
  return out;
}

}  // namespace omnilie
