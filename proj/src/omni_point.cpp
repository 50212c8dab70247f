#include "omnilie/omni_point.hpp"

#include <utility>

#include "omnilie/error.hpp"

namespace omnilie {

OmniElt::OmniElt(MatQ a, VecQ u) : endo(std::move(a)), vec(std::move(u)) {
  int n = static_cast<int>(vec.size());
  if (endo.rows() != n || endo.cols() != n)
    throw Error(ErrorKind::Dimension, "omni element: endomorphism does not match vector size");
}

VecQ OmniElt::flatten() const {
  int n = r();
  VecQ out;
  out.reserve(static_cast<size_t>(n) * n + n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.push_back(endo(i, j));
  for (int i = 0; i < n; ++i) out.push_back(vec[i]);
  return out;
}

OmniElt OmniElt::unflatten(int r, const VecQ& flat) {
  if (static_cast<int>(flat.size()) != r * r + r)
    throw Error(ErrorKind::Dimension, "omni element: flat vector has wrong length");
  MatQ a(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) a(i, j) = flat[static_cast<size_t>(i) * r + j];
  VecQ u(flat.begin() + static_cast<long>(r) * r, flat.end());
  return OmniElt(std::move(a), std::move(u));
}

OmniElt operator+(const OmniElt& a, const OmniElt& b) {
  return OmniElt(a.endo + b.endo, vec_add(a.vec, b.vec));
}

OmniElt operator-(const OmniElt& a, const OmniElt& b) {
  return OmniElt(a.endo - b.endo, vec_sub(a.vec, b.vec));
}

OmniElt operator*(const Rat& c, const OmniElt& x) { return OmniElt(c * x.endo, vec_scale(c, x.vec)); }

bool operator==(const OmniElt& a, const OmniElt& b) { return a.endo == b.endo && a.vec == b.vec; }

OmniElt omni_bracket(const OmniElt& x, const OmniElt& y) {
  if (x.r() != y.r()) throw Error(ErrorKind::Dimension, "omni bracket: size mismatch");
  return OmniElt(commutator(x.endo, y.endo), x.endo * y.vec);
}

VecQ omni_pairing(const OmniElt& x, const OmniElt& y) {
  if (x.r() != y.r()) throw Error(ErrorKind::Dimension, "omni pairing: size mismatch");
  VecQ s = vec_add(x.endo * y.vec, y.endo * x.vec);
  return vec_scale(Rat(1, 2), s);
}

Subspace orthogonal_complement(int r, const Subspace& s) {
  int nv = r * r + r;
  if (s.ambient() != nv)
    throw Error(ErrorKind::Dimension, "orthogonal complement: ambient dimension mismatch");
  // Unknown (B, v); one equation per basis element (A_j, u_j) and coordinate k:
  //   (A_j v)_k + (B u_j)_k = 0.
  MatQ rows(s.dim() * r, nv);
  for (int j = 0; j < s.dim(); ++j) {
    OmniElt a = OmniElt::unflatten(r, s.basis_vector(j));
    for (int k = 0; k < r; ++k) {
      for (int l = 0; l < r; ++l) rows(j * r + k, k * r + l) = a.vec[l];         // B_{k,l}
      for (int l = 0; l < r; ++l) rows(j * r + k, r * r + l) = a.endo(k, l);  // v_l
    }
  }
  if (s.dim() == 0) return Subspace::full(nv);
  return Subspace::from_rows(nv, rref(rows).kernel);
}

DiracFlags is_dirac(const PointDirac& L) {
  DiracFlags f;
  f.dim = L.space.dim();
  std::vector<OmniElt> basis;
  basis.reserve(f.dim);
  for (int i = 0; i < f.dim; ++i) basis.push_back(L.basis_elt(i));

  f.isotropic = true;
  for (int i = 0; i < f.dim && f.isotropic; ++i)
    for (int j = i; j < f.dim && f.isotropic; ++j)
      if (!vec_is_zero(omni_pairing(basis[i], basis[j]))) f.isotropic = false;

  f.maximal = (orthogonal_complement(L.r, L.space) == L.space);

  f.closed = true;
  for (int i = 0; i < f.dim && f.closed; ++i)
    for (int j = 0; j < f.dim && f.closed; ++j)
      if (!L.contains(omni_bracket(basis[i], basis[j]))) f.closed = false;

  std::vector<VecQ> vecs;
  for (const auto& b : basis) vecs.push_back(b.vec);
  f.w = Subspace::from_vectors(L.r, vecs).dim();
  f.dim_formula = (f.dim == (1 - L.r) * f.w + L.r * L.r);
  return f;
}

PointDirac lift_point(int r, const Subspace& W, const LieStruct& c) {
  if (W.ambient() != r) throw Error(ErrorKind::Dimension, "lift: subspace ambient mismatch");
  int w = W.dim();
  if (c.dim() != w) throw Error(ErrorKind::Dimension, "lift: bracket size does not match subspace");
  if (check_jacobi(c))
    throw Error(ErrorKind::Semantic, "lift: bracket fails the Jacobi identity");

  std::vector<VecQ> gens;
  // One generator per basis vector u_i of W: (D_i, u_i) with D_i u_j = [u_i, u_j].
  for (int i = 0; i < w; ++i) {
    // Linear system in the r^2 entries of D_i.
    MatQ m(w * r, r * r);
    VecQ rhs(static_cast<size_t>(w) * r, Rat(0));
    for (int j = 0; j < w; ++j) {
      const VecQ wj = W.basis_vector(j);
      VecQ target(r, Rat(0));
      for (int k = 0; k < w; ++k)
        target = vec_add(target, vec_scale(c.c(i, j, k), W.basis_vector(k)));
      for (int k = 0; k < r; ++k) {
        for (int l = 0; l < r; ++l) m(j * r + k, k * r + l) = wj[l];
        rhs[static_cast<size_t>(j) * r + k] = target[k];
      }
    }
    auto sol = solve(m, rhs);
    if (!sol) throw Error(ErrorKind::Semantic, "lift: internal inconsistency solving for the endomorphism part");
    MatQ d(r, r);
    for (int k = 0; k < r; ++k)
      for (int l = 0; l < r; ++l) d(k, l) = (*sol)[static_cast<size_t>(k) * r + l];
    gens.push_back(OmniElt(d, W.basis_vector(i)).flatten());
  }
  // Annihilator part: (h, 0) with h W = 0.
  if (w > 0) {
    MatQ m(w * r, r * r);
    for (int j = 0; j < w; ++j) {
      const VecQ wj = W.basis_vector(j);
      for (int k = 0; k < r; ++k)
        for (int l = 0; l < r; ++l) m(j * r + k, k * r + l) = wj[l];
    }
    MatQ ker = rref(m).kernel;
    for (int i = 0; i < ker.rows(); ++i) {
      VecQ flat(static_cast<size_t>(r) * r + r, Rat(0));
      for (int j = 0; j < r * r; ++j) flat[j] = ker(i, j);
      gens.push_back(flat);
    }
  } else {
    for (int k = 0; k < r; ++k)
      for (int l = 0; l < r; ++l) {
        VecQ flat(static_cast<size_t>(r) * r + r, Rat(0));
        flat[static_cast<size_t>(k) * r + l] = Rat(1);
        gens.push_back(flat);
      }
  }
  PointDirac out;
  out.r = r;
  out.space = Subspace::from_vectors(r * r + r, gens);
  return out;
}

ReducedPoint reduce_point(const PointDirac& L) {
  DiracFlags f = is_dirac(L);
  if (!f.is_dirac())
    throw Error(ErrorKind::Semantic, "reduce: input subspace is not a Dirac structure");

  std::vector<VecQ> vecs;
  for (int i = 0; i < L.space.dim(); ++i) vecs.push_back(L.basis_elt(i).vec);
  Subspace W = Subspace::from_vectors(L.r, vecs);
  int w = W.dim();

  // Preimage of each canonical basis vector of W under the projection.
  std::vector<OmniElt> pre;
  MatQ proj(L.r, L.space.dim());
  for (int j = 0; j < L.space.dim(); ++j)
    for (int k = 0; k < L.r; ++k) proj(k, j) = vecs[j][k];
  for (int i = 0; i < w; ++i) {
    auto alpha = solve(proj, W.basis_vector(i));
    if (!alpha) throw Error(ErrorKind::Semantic, "reduce: internal inconsistency finding a preimage");
    MatQ d(L.r, L.r);
    VecQ u(L.r, Rat(0));
    for (int j = 0; j < L.space.dim(); ++j) {
      OmniElt b = L.basis_elt(j);
      d = d + (*alpha)[j] * b.endo;
      u = vec_add(u, vec_scale((*alpha)[j], b.vec));
    }
    pre.push_back(OmniElt(std::move(d), std::move(u)));
  }

  LieStruct c(w);
  for (int i = 0; i < w; ++i)
    for (int j = i + 1; j < w; ++j) {
      VecQ br = pre[i].endo * W.basis_vector(j);
      auto coords = W.coordinates(br);
      if (!coords) throw Error(ErrorKind::Semantic, "reduce: bracket left the projected subspace");
      for (int k = 0; k < w; ++k) c.set(i, j, k, (*coords)[k]);
    }
  if (check_jacobi(c))
    throw Error(ErrorKind::Semantic, "reduce: internal inconsistency, reduced bracket fails Jacobi");
  return ReducedPoint{std::move(W), std::move(c)};
}

Subspace normalizer_point(const PointDirac& L) {
  int r = L.r;
  int nv = r * r + r;
  MatQ K = L.space.membership_constraints();
  if (K.rows() == 0) return Subspace::full(nv);
  // Unknown X = (B, v); for each basis (A_j, u_j) of L and each constraint row
  // kap of K: kap . flatten([B,A_j], B u_j) = 0.
  std::vector<VecQ> rows;
  for (int j = 0; j < L.space.dim(); ++j) {
    OmniElt a = L.basis_elt(j);
    for (int t = 0; t < K.rows(); ++t) {
      VecQ row(static_cast<size_t>(nv), Rat(0));
      for (int k = 0; k < r; ++k)
        for (int l = 0; l < r; ++l) {
          const Rat& kap = K(t, k * r + l);
          if (kap.is_zero()) continue;
          // (B A_j)_{k,l} = sum_m B_{k,m} A_j_{m,l}
          for (int m = 0; m < r; ++m) row[static_cast<size_t>(k) * r + m] += kap * a.endo(m, l);
          // -(A_j B)_{k,l} = -sum_m A_j_{k,m} B_{m,l}
          for (int m = 0; m < r; ++m) row[static_cast<size_t>(m) * r + l] -= kap * a.endo(k, m);
        }
      for (int k = 0; k < r; ++k) {
        const Rat& kap = K(t, r * r + k);
        if (kap.is_zero()) continue;
        // (B u_j)_k = sum_m B_{k,m} u_j_m
        for (int m = 0; m < r; ++m) row[static_cast<size_t>(k) * r + m] += kap * a.vec[m];
      }
      rows.push_back(std::move(row));
    }
  }
  MatQ m(static_cast<int>(rows.size()), nv);
  for (size_t i = 0; i < rows.size(); ++i) m.set_row(static_cast<int>(i), rows[i]);
  return Subspace::from_rows(nv, rref(m).kernel);
}

MatQ falling_point(const OmniElt& x) { return x.endo; }

std::pair<LieStruct, Rep> dirac_algebra(const PointDirac& L) {
  int n = L.space.dim();
  std::vector<OmniElt> basis;
  for (int i = 0; i < n; ++i) basis.push_back(L.basis_elt(i));

  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      if (!vec_is_zero(omni_pairing(basis[i], basis[j])))
        throw Error(ErrorKind::Semantic, "dirac algebra: subspace is not isotropic");

  LieStruct c(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      auto coords = L.space.coordinates(omni_bracket(basis[i], basis[j]).flatten());
      if (!coords) throw Error(ErrorKind::Semantic, "dirac algebra: subspace is not bracket-closed");
      for (int k = 0; k < n; ++k) c.set(i, j, k, (*coords)[k]);
    }
  Rep rep;
  rep.n = n;
  rep.r = L.r;
  for (int i = 0; i < n; ++i) rep.rho.push_back(basis[i].endo);
  if (rep.homomorphism_defect(c))
    throw Error(ErrorKind::Semantic, "dirac algebra: internal inconsistency, endomorphism parts fail to represent");
  return {std::move(c), std::move(rep)};
}

OmegaCochainResult omega_cochain_check(const OmniElt& x, const PointDirac& L) {
  if (x.r() != L.r) throw Error(ErrorKind::Dimension, "omega cochain: size mismatch");
  auto [c, rep] = dirac_algebra(L);
  int n = c.dim();

  Cochain om;
  om.n = n;
  om.r = L.r;
  om.k = 1;
  for (int i = 0; i < n; ++i) om.values.push_back(omni_pairing(x, L.basis_elt(i)));

  OmegaCochainResult out;
  Cochain dom = ce_apply(rep, c, om);
  out.is_cocycle = true;
  for (const auto& v : dom.values)
    if (!vec_is_zero(v)) out.is_cocycle = false;

  // d om_X(l_i, l_j) = -<<{X, l_i}, l_j>> on basis pairs.
  out.identity_exact = true;
  {
    int idx = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j, ++idx) {
        VecQ rhs = vec_scale(Rat(-1), omni_pairing(omni_bracket(x, L.basis_elt(i)), L.basis_elt(j)));
        if (!(dom.values[idx] == rhs)) out.identity_exact = false;
      }
  }

  // Coboundary: u with rho(l_i) u = om(l_i) for all i.
  MatQ m(n * L.r, L.r);
  VecQ rhs(static_cast<size_t>(n) * L.r, Rat(0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < L.r; ++k) {
      for (int l = 0; l < L.r; ++l) m(i * L.r + k, l) = rep.rho[i](k, l);
      rhs[static_cast<size_t>(i) * L.r + k] = om.values[i][k];
    }
  auto sol = solve(m, rhs);
  out.is_coboundary = sol.has_value();
  if (sol) out.witness = *sol;
  return out;
}

}  // namespace omnilie
