#ifndef OMNILIE_LIE_POINT_HPP
#define OMNILIE_LIE_POINT_HPP

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "omnilie/lie_struct.hpp"
#include "omnilie/subspace.hpp"

namespace omnilie {

// --- Chevalley-Eilenberg complex (degrees 0..3) -----------------------------

/// Increasing k-tuples from {0..n-1} in lexicographic order; the cochain basis
/// order is part of the serialization contract.
std::vector<std::vector<int>> increasing_tuples(int n, int k);

/// A k-cochain on an n-dimensional algebra with values in Q^r, stored as its
/// values on the increasing basis tuples (lex order).
struct Cochain {
  int n = 0, r = 0, k = 0;
  std::vector<VecQ> values;  ///< one Q^r value per increasing k-tuple

  static Cochain zero(int n, int r, int k);
  VecQ& value(const std::vector<int>& tuple);
  const VecQ& value(const std::vector<int>& tuple) const;
  /// Evaluation on an arbitrary index tuple (sorts, tracks the sign, returns
  /// zero on repeated indices).
  VecQ eval(std::vector<int> tuple) const;
  /// Flattened coefficient vector: tuple-major, then target coordinate.
  VecQ flatten() const;
  static Cochain unflatten(int n, int r, int k, const VecQ& flat);
};

/// Matrix of the degree-k Chevalley-Eilenberg differential d_k for the
/// representation `rep` of the algebra `s` (columns: k-cochain basis, rows:
/// (k+1)-cochain basis). Supported for k in 0..3.
MatQ ce_differential(int k, const Rep& rep, const LieStruct& s);

/// Applies d_k to a cochain directly (used to cross-check the matrix).
Cochain ce_apply(const Rep& rep, const LieStruct& s, const Cochain& w);

struct CohomologyDims {
  int h0 = 0, h1 = 0, h2 = 0;
  bool d_squared_zero = true;  ///< d_{k+1} d_k = 0 for k = 0,1,2
};

/// Betti numbers h^0..h^2 of the complex, via exact rank computations.
CohomologyDims cohomology_dims(const Rep& rep, const LieStruct& s);

// --- derivations -------------------------------------------------------------

struct DerivationResult {
  Subspace der;  ///< derivations as flattened n x n matrices (row-major)
  Subspace inn;  ///< span of the ad(e_i)
  int ext_dim = 0;
};

/// Solves D[e_i,e_j] = [De_i, e_j] + [e_i, De_j] exactly.
DerivationResult derivations(const LieStruct& s);

// --- Nijenhuis operators ------------------------------------------------------

struct NijenhuisResult {
  bool torsion_zero = false;
  bool weak_condition = false;   ///< [a,T(b,c)] + T(a,[b,c]) + cyclic = 0
  bool deformed_jacobi = false;  ///< Jacobi of [a,b]_N
  LieStruct deformed;            ///< [a,b]_N = [Na,b] + [a,Nb] - N[a,b]
  std::optional<std::array<int, 3>> jacobi_witness;
};

/// Torsion, weak compatibility and the deformed bracket of an endomorphism N.
/// The weak cyclic condition forces the deformed Jacobi identity; this is
/// asserted on every run.
NijenhuisResult nijenhuis_check(const MatQ& N, const LieStruct& s);

// --- bracket deformations by a 2-cochain -------------------------------------

struct DeformationResult {
  bool closed = false;     ///< W([a,b],c) + [W(a,b),c] + cyclic = 0
  bool fibrewise = false;  ///< W(W(a,b),c) + cyclic = 0
  bool deformed_jacobi_all = false;  ///< Jacobi of [.,.] + eps*W for eps in {1,-1,2}
  std::optional<std::array<int, 3>> witness;
};

/// Checks the quadratic deformation conditions for a skew 2-cochain W with
/// values in the algebra (stored as a LieStruct tensor). When both conditions
/// hold, Jacobi of every deformed bracket [.,.] + eps*W is asserted.
DeformationResult deformation_2cocycle_check(const LieStruct& s, const LieStruct& W);

// --- multivectors and the algebraic Schouten bracket --------------------------

/// Element of Lambda^k of an n-dimensional space, components on increasing
/// tuples. Degrees 0..3 are materialized.
struct Multivector {
  int n = 0, k = 0;
  std::map<std::vector<int>, Rat> comps;  ///< increasing tuple -> coefficient

  static Multivector zero(int n, int k);
  static Multivector basis_vector(int n, int i);
  void add(std::vector<int> tuple, Rat c);  ///< sorts/signs, drops repeats
  bool is_zero() const;
  friend Multivector operator+(const Multivector& a, const Multivector& b);
  friend Multivector operator-(const Multivector& a, const Multivector& b);
  friend Multivector operator*(const Rat& c, const Multivector& a);
  friend bool operator==(const Multivector& a, const Multivector& b);
  friend Multivector wedge(const Multivector& a, const Multivector& b);
};

/// Algebraic Schouten bracket on Lambda(g) induced by the bracket of `s`,
/// via the classical decomposable formula
///   [x1^..^xp, y1^..^yq] = sum_{i,j} (-1)^{i+j} [xi,yj]^(rest).
/// Inputs of degree p,q <= 2 (output degree <= 3); higher degrees error out.
Multivector schouten_bracket(const Multivector& P, const Multivector& Q, const LieStruct& s);

// --- Lie bialgebra ------------------------------------------------------------

/// Differential of the dual structure applied to a basis vector:
/// (d_* e_k)(xi^i, xi^j) = -c*[i][j][k], as a 2-vector.
Multivector dual_differential(const LieStruct& dual, int k);

struct BialgebraResult {
  bool compatible = false;  ///< d_*[u,v] = [d_*u, v] + [u, d_*v] on basis pairs
  std::optional<std::array<int, 2>> witness;
};

/// Cocycle-compatibility check for a pair of Lie algebras in duality; both
/// inputs must individually satisfy Jacobi (checked).
BialgebraResult check_lie_bialgebra(const LieStruct& s, const LieStruct& dual);

}  // namespace omnilie

#endif
