#ifndef OMNILIE_DIRAC_BUNDLE_HPP
#define OMNILIE_DIRAC_BUNDLE_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "omnilie/lie_struct.hpp"
#include "omnilie/section_calculus.hpp"
#include "omnilie/subspace.hpp"

namespace omnilie {

/// The four supported shapes of a subbundle A of TM + E carrying a Lie
/// algebroid bracket whose anchor is the TM-projection. Each presentation
/// makes the complement of A and the annihilator A0 in Hom(TM+E, E) explicit,
/// which is what every algorithm below needs; general polynomial-frame
/// subbundles would require module-theoretic membership and are out of scope.
enum class Presentation { Full, Anchor, Form, Line };

/// A projective Lie algebroid over a d-dimensional chart with fibre rank r.
///
/// Full:   A = TM + E with connection forms gamma[a] (r x r), curvature
///         curv[a][b] in E and a fibrewise bracket c0 on E:
///         [x+u, y+v] = [x,y] + G(x)v - G(y)u + R(x,y) + [u,v]0
///         where G(x)v = x(v) + (sum_a x^a gamma[a]) v.
/// Anchor: A = graph of an anchor over a constant subbundle F of Q^r:
///         frame sections a_j = (rho col j, w_j) for the row basis w_j of F,
///         bracket [a_i, a_j] = sum_k c(i,j,k) a_k. F = Q^r when not proper.
/// Form:   A = graph of lambda: TM -> E (r x d), bracket carried over from
///         vector-field commutators.
/// Line:   A = span of a single section a = (line_x, line_e) whose designated
///         component is identically 1, bracket [fa, ga] = (f x(g) - g x(f)) a.
struct ProjAlgebroid {
  Presentation pres = Presentation::Full;
  int d = 0;
  int r = 0;

  // Full
  std::vector<MatP> gamma;               ///< d entries, r x r
  std::vector<std::vector<VecP>> curv;   ///< d x d entries, r-vectors, skew
  LieStructP c0;

  // Anchor
  MatP rho;                ///< d x m, column j = anchor of the j-th frame
  LieStructP c;            ///< structure functions on the m-element frame
  MatQ fbasis;             ///< m x r constant frame vectors (RREF rows)
  std::vector<int> fpivots;  ///< pivot column of each fbasis row

  // Form
  MatP lambda;  ///< r x d

  // Line
  VecP line_x;       ///< d
  VecP line_e;       ///< r
  int line_comp = 0;  ///< index into (x,e) of the component that is 1

  static ProjAlgebroid full_pres(std::vector<MatP> gamma,
                                 std::vector<std::vector<VecP>> curv, LieStructP c0);
  static ProjAlgebroid anchor_pres(int d, MatP rho, LieStructP c);
  static ProjAlgebroid anchor_subbundle(int d, int r, MatP rho, LieStructP c,
                                        const Subspace& f);
  static ProjAlgebroid form_pres(int d, int r, MatP lambda);
  static ProjAlgebroid line_pres(VecP x, VecP e, int comp);

  /// Number of frame sections spanning Gamma(A) over the functions.
  int frame_count() const;
  /// The i-th frame section.
  TauSec frame(int i) const;

  /// Frame coordinates of a section of A, or nullopt when t is not in
  /// Gamma(A). The frame representation is unique for every presentation.
  std::optional<VecP> coefficients(const TauSec& t) const;
  TauSec from_coefficients(const VecP& f) const;

  /// Bracket in frame coordinates (Leibniz extension of the frame bracket).
  VecP bracket_coeff(const VecP& f, const VecP& g) const;
  /// Bracket of two sections of A (coefficient extraction + bracket_coeff).
  TauSec bracket(const TauSec& a, const TauSec& b) const;

  /// Frame coordinates of (0, v) as a section of A, i.e. membership of v in
  /// the intersection of A with E; nullopt when (0, v) is not in Gamma(A).
  std::optional<VecP> intersection_e_coefficients(const VecP& v) const;

  friend bool operator==(const ProjAlgebroid& a, const ProjAlgebroid& b);
};

struct CheckReport {
  bool pass = true;
  std::vector<std::string> failures;
  void fail(std::string msg) {
    pass = false;
    failures.push_back(std::move(msg));
  }
};

/// Verifies the defining laws of the presentation: Full checks the fibre
/// Jacobi identity plus the three connection/curvature compatibility
/// conditions; Anchor checks the anchor morphism law and the frame Jacobi
/// identity with Leibniz-extended brackets; Line checks the Jacobi identity
/// of the displayed bracket on a fixed polynomial corpus; Form always passes.
CheckReport check_projective_algebroid(const ProjAlgebroid& a);

/// The curvature-like map measuring the failure of the flat splitting to be
/// bracket-preserving: value in E of [a,b]_A - gamma0-transport terms.
/// Both arguments must lie in Gamma(A).
VecP omega_gamma(const ProjAlgebroid& a, const TauSec& s, const TauSec& t);

enum class DiracKind { Lift, GraphLambda, GraphPi };

/// A Dirac structure given by a generating frame: for Lift, the lifted frame
/// s_i over the algebroid frame plus the annihilator generators; for the two
/// graph presentations, the graph sections over the standard frames.
struct DiracPres {
  DiracKind kind = DiracKind::Lift;
  int d = 0;
  int r = 0;
  ProjAlgebroid base;            ///< Lift and GraphPi
  std::vector<OmniSec> frame;    ///< primary generators
  std::vector<HomSec> a0;        ///< Lift only: annihilator generators
  MatP lambda;                   ///< GraphLambda: r x d
  std::vector<std::vector<VecP>> zeta;  ///< GraphLambda: d x d skew, E-valued

  /// All generating omni sections: frame followed by amb(a0).
  std::vector<OmniSec> sections() const;
};

/// Builds the lifted Dirac structure of a valid projective Lie algebroid
/// over the flat chart splitting.
DiracPres lift_bundle(const ProjAlgebroid& a);

/// Same construction through a perturbed flat connection whose forms are
/// k[a] (r x r) along the a-th coordinate field; spans the same structure.
DiracPres lift_bundle_perturbed(const ProjAlgebroid& a, const std::vector<MatP>& k);

/// Exact membership of an omni section in the structure: the projection to
/// TM + E must lie in Gamma(A) and the residual against the lifted frame
/// must be an annihilator element (checked against the A-frame).
bool membership_L(const OmniSec& x, const DiracPres& l);

/// Isotropy of every generator pair and closure of every pairwise bracket.
CheckReport dirac_closure_check(const DiracPres& l);

/// Recovers the projective Lie algebroid from the structure by projecting
/// frame brackets; inverse of lift_bundle on presentation data.
ProjAlgebroid reduce_bundle(const DiracPres& l);

// --- graph of a two-form on derivations -----------------------------------

/// Two-form data for the graph construction: the jet over the a-th coordinate
/// field is (lambda col a, eta with columns zeta[a][b]); the jet over a gl
/// frame element E_kl is (0, -E_kl lambda). zeta must be skew.
DiracPres graph_lambda(const MatP& lambda, const std::vector<std::vector<VecP>>& zeta);

/// Reads (lambda, zeta) off a full table of frame-pair values of the
/// two-form on the (d + r*r)-element derivation frame, validating skewness
/// and the forced shape of the gl rows. values[i][j] is the value on the
/// (i, j) frame pair, TM directions first.
std::pair<MatP, std::vector<std::vector<VecP>>> lambda_hat_from_values(
    int d, int r, const std::vector<std::vector<VecP>>& values);

struct LambdaReport {
  bool closure = false;
  bool cocycle = false;
  bool coboundary_form = false;
  bool all_agree = false;
};

/// Evaluates the three equivalent characterizations — graph closure, the
/// two-form being closed, and the two-form having the canonical primitive —
/// independently, and reports whether they agree.
LambdaReport graph_lambda_equivalence(const MatP& lambda,
                                      const std::vector<std::vector<VecP>>& zeta);

// --- differential complex of derivation-valued forms -----------------------

using OneForm = std::function<VecP(const DerSec&)>;
using TwoForm = std::function<VecP(const DerSec&, const DerSec&)>;

/// Degree-1 differential of E-valued forms on derivations.
VecP eval_d1(const OneForm& theta, const DerSec& a, const DerSec& b);
/// Degree-2 differential of E-valued forms on derivations.
VecP eval_d2(const TwoForm& omega, const DerSec& a, const DerSec& b, const DerSec& c);

// --- graph of the adjoint map ----------------------------------------------

/// The bundle map from jets to derivations induced by an Anchor-presentation
/// Lie algebroid on E (full frame): determined on jet generators by
/// pi(d e_i) = (rho col i, ad-matrix of e_i) and on dt_a (x) e_j by the gl
/// element with (m,k) entry -delta_{mj} rho(a,k), extended function-linearly.
DerSec pi_map(const ProjAlgebroid& alg, const JetSec& mu);

/// The induced bracket on jets.
JetSec pi_bracket(const JetSec& m, const JetSec& n, const ProjAlgebroid& alg);

/// First jet-generator pair where pi fails to intertwine the jet bracket
/// with the derivation bracket; empty exactly when the algebroid satisfies
/// the Jacobi identity.
std::optional<std::string> pi_morphism_defect(const ProjAlgebroid& alg);

/// The graph of pi as a Dirac structure.
DiracPres graph_pi(const ProjAlgebroid& alg);

// --- normalizer, falling, derivation lifts ---------------------------------

/// Frame test: the bracket of x with every generator stays in the structure.
bool normalizer_membership(const OmniSec& x, const DiracPres& l);

/// Rebuilds the canonical omni section from a falling decomposition (value
/// part of the jet set to zero, differential part to the decomposed matrix).
OmniSec reconstruct_falling(const FallingParts& p);

/// A derivation of the algebroid: a base vector field together with the
/// frame action delta(a_i) = sum_j g(i, j) a_j.
struct DerivationData {
  VecP x;  ///< d components
  MatP g;  ///< frame_count x frame_count
};

/// Validates the derivation law on frame pairs and the anchor law on frame
/// elements, extends the derivation across the complement of A, and returns
/// the omni section whose falling operator restricts to the derivation.
/// The result is verified to normalize the lift and to reproduce the frame
/// action; Semantic errors report the violated law with a witness.
OmniSec lift_derivation(const ProjAlgebroid& a, const DerivationData& delta);

// --- deformations -----------------------------------------------------------

struct DeformationReport {
  bool values_ok = true;       ///< all values lie in the intersection of A and E
  bool closed = false;         ///< cyclic bracket condition
  bool fibrewise = false;      ///< the values form a fibrewise Lie bracket
  bool b_star_closed = false;  ///< pullback cochain closed on the lifted frame
  bool agree = false;          ///< closed == b_star_closed
  bool deformed_dirac_ok = false;  ///< deformed structures pass closure
  std::vector<std::string> failures;
};

/// Checks the two compatibility conditions of a deformation map given by its
/// frame-pair values omega[i][j] (skew, values in the intersection of A and
/// E), the agreement with closedness of the pulled-back cochain on the
/// lifted frame, and — when compatible — closure of the deformed structures
/// at parameter values 1, -1 and 2.
DeformationReport deformation_check(const ProjAlgebroid& a,
                                    const std::vector<std::vector<VecP>>& omega);

/// The deformed algebroid at a rational parameter value.
ProjAlgebroid deform_algebroid(const ProjAlgebroid& a,
                               const std::vector<std::vector<VecP>>& omega,
                               const Rat& eps);

struct NormalizerDeformReport {
  bool in_normalizer = false;  ///< x normalizes the preimage of A
  bool values_ok = false;      ///< derived map lands in the intersection of A and E
  bool t_cyclic = false;       ///< cyclic condition on the twist operator
  bool coboundary = false;     ///< pullback equals the cochain differential of omega_x
  DeformationReport deform;    ///< filled when t_cyclic holds
  std::vector<std::vector<VecP>> omega;
};

/// Builds the candidate deformation map of an omni section through the
/// falling operator, checks the cyclic twist condition, and when it holds
/// delegates to deformation_check and verifies the coboundary relation on
/// lifted frame pairs.
NormalizerDeformReport deformation_from_normalizer(const ProjAlgebroid& a,
                                                   const OmniSec& x);

// --- bialgebroids -----------------------------------------------------------

/// Bivector field on the fibre: skew r x r matrix of coefficient functions.
struct Biv {
  MatP w;  ///< skew
  static Biv zero(int d, int r);
  bool is_zero() const { return w.is_zero(); }
  friend Biv operator+(const Biv& a, const Biv& b) { return {a.w + b.w}; }
  friend Biv operator-(const Biv& a, const Biv& b) { return {a.w - b.w}; }
  friend bool operator==(const Biv& a, const Biv& b) { return a.w == b.w; }
};

Biv wedge(const VecP& u, const VecP& v);

/// Leibniz bracket of polynomial-coefficient sections of an Anchor algebroid.
VecP algebroid_bracket(const ProjAlgebroid& alg, const VecP& u, const VecP& v);
/// Anchor of a section applied to a function.
Poly algebroid_rho(const ProjAlgebroid& alg, const VecP& u, const Poly& f);
/// Schouten bracket of a section with a bivector.
Biv schouten(const ProjAlgebroid& alg, const VecP& u, const Biv& p);
/// Schouten bracket of a bivector with a function.
VecP schouten_f(const ProjAlgebroid& alg, const Biv& p, const Poly& f);

/// Differential of the dual structure: on functions into sections, on
/// sections into bivectors.
VecP dual_d_function(const ProjAlgebroid& dual, const Poly& f);
Biv dual_d_section(const ProjAlgebroid& dual, const VecP& u);

struct BialgebroidReport {
  bool cond_sections = false;   ///< compatibility on frame-section pairs
  bool cond_mixed = false;      ///< compatibility on (section, coordinate) pairs
  bool cond_functions = false;  ///< compatibility on coordinate pairs
  bool pass = false;
  bool oracle_pass = false;  ///< cocycle evaluation through the jet bracket
  bool agree = false;        ///< pass == oracle_pass
};

/// Decides the bialgebroid compatibility of two Anchor algebroids (on E and
/// its dual) by the three displayed conditions, and re-decides it through an
/// independent cocycle evaluation of the lifted differential over the jet
/// bracket; the two verdicts are reported with their agreement.
BialgebroidReport bialgebroid_check(const ProjAlgebroid& e_alg,
                                    const ProjAlgebroid& dual_alg);

}  // namespace omnilie

#endif
