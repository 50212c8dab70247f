#ifndef OMNILIE_OMNI_POINT_HPP
#define OMNILIE_OMNI_POINT_HPP

#include <optional>
#include <vector>

#include "omnilie/lie_point.hpp"
#include "omnilie/subspace.hpp"

namespace omnilie {

/// Element (A, u) of gl(V) + V for V = Q^r: an endomorphism with a vector.
struct OmniElt {
  MatQ endo;
  VecQ vec;

  OmniElt() = default;
  OmniElt(MatQ a, VecQ u);
  int r() const { return static_cast<int>(vec.size()); }

  /// Flattening convention: endomorphism row-major, then the vector.
  VecQ flatten() const;
  static OmniElt unflatten(int r, const VecQ& flat);

  friend OmniElt operator+(const OmniElt& a, const OmniElt& b);
  friend OmniElt operator-(const OmniElt& a, const OmniElt& b);
  friend OmniElt operator*(const Rat& c, const OmniElt& x);
  friend bool operator==(const OmniElt& a, const OmniElt& b);
};

/// {(A,u),(B,v)} = ([A,B], Av).
OmniElt omni_bracket(const OmniElt& x, const OmniElt& y);

/// <<(A,u),(B,v)>> = (Av + Bu)/2.
VecQ omni_pairing(const OmniElt& x, const OmniElt& y);

/// Subspace of gl(V)+V (flattened to Q^{r^2+r}).
struct PointDirac {
  int r = 0;
  Subspace space;  ///< ambient r^2 + r

  OmniElt basis_elt(int i) const { return OmniElt::unflatten(r, space.basis_vector(i)); }
  bool contains(const OmniElt& x) const { return space.contains(x.flatten()); }
};

/// All (B,v) pairing to zero against every element of s.
Subspace orthogonal_complement(int r, const Subspace& s);

struct DiracFlags {
  bool isotropic = false;
  bool maximal = false;  ///< equals its own orthogonal complement
  bool closed = false;   ///< bracket-closed on basis pairs
  int dim = 0;
  int w = 0;  ///< dimension of the projection to V
  bool dim_formula = false;  ///< dim == (1-r) w + r^2
  bool is_dirac() const { return isotropic && maximal && closed; }
};

/// Isotropy, maximality, closure and the rank formula for a subspace.
DiracFlags is_dirac(const PointDirac& L);

/// Dirac structure from a subalgebra datum: W with a Lie bracket c on its
/// canonical basis, lifted to { (D,u) : u in W, Dv = [u,v] for v in W } + ann(W).
/// Rejects non-Jacobi c.
PointDirac lift_point(int r, const Subspace& W, const LieStruct& c);

struct ReducedPoint {
  Subspace W;   ///< projection of L to V
  LieStruct c;  ///< reduced bracket on the canonical basis of W
};

/// Inverse of lift_point on Dirac structures: projects and reduces the
/// bracket; the result is independent of the chosen preimages (tested).
/// Rejects inputs that fail is_dirac.
ReducedPoint reduce_point(const PointDirac& L);

/// Normalizer N_L = { X : {X, L} is contained in L } as a subspace of Q^{r^2+r}.
Subspace normalizer_point(const PointDirac& L);

/// The endomorphism component; a bracket morphism onto commutators.
MatQ falling_point(const OmniElt& x);

struct OmegaCochainResult {
  bool is_cocycle = false;
  bool identity_exact = false;  ///< d om_X(l1,l2) = -<<{X,l1},l2>> on basis pairs
  bool is_coboundary = false;
  std::optional<VecQ> witness;  ///< u with om_X = d_L u when a coboundary
};

/// The 1-cochain om_X = <<X, .>> on the Lie algebra L with coefficients in V
/// via the endomorphism-part representation; cocycle iff X normalizes L.
OmegaCochainResult omega_cochain_check(const OmniElt& x, const PointDirac& L);

/// Structure constants of the (Lie) algebra carried by a Dirac structure,
/// with the endomorphism-part representation on V.
std::pair<LieStruct, Rep> dirac_algebra(const PointDirac& L);

}  // namespace omnilie

#endif
