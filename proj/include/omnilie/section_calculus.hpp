#ifndef OMNILIE_SECTION_CALCULUS_HPP
#define OMNILIE_SECTION_CALCULUS_HPP

#include <cstdint>

#include "omnilie/matrix.hpp"
#include "omnilie/poly.hpp"

namespace omnilie {

/// Covariant differential operator on sections of a trivialized rank-r
/// bundle over a d-dimensional base: a vector field x (the symbol) plus an
/// r x r matrix of functions, acting as v -> x(v) + phi v.
struct DerSec {
  VecP x;    ///< d components, each a polynomial in the d base variables
  MatP phi;  ///< r x r

  int d() const { return static_cast<int>(x.size()); }
  int r() const { return phi.rows(); }
  static DerSec zero(int d, int r);

  friend DerSec operator+(const DerSec& a, const DerSec& b);
  friend DerSec operator-(const DerSec& a, const DerSec& b);
  friend bool operator==(const DerSec& a, const DerSec& b);
  bool is_zero() const;
};

/// Jet-type section in the flat trivialization: a value part u (r components)
/// and a differential part eta (r x d). The holonomic jets are exactly the
/// images of jet_prolong; general pairs are sections of the full jet bundle.
struct JetSec {
  VecP u;    ///< r components
  MatP eta;  ///< r x d

  int r() const { return static_cast<int>(u.size()); }
  int d() const { return eta.cols(); }
  static JetSec zero(int d, int r);

  friend JetSec operator+(const JetSec& a, const JetSec& b);
  friend JetSec operator-(const JetSec& a, const JetSec& b);
  friend bool operator==(const JetSec& a, const JetSec& b);
  bool is_zero() const;
};

/// Section of the omni bundle: a derivation part and a jet part.
struct OmniSec {
  DerSec der;
  JetSec jet;

  int d() const { return der.d(); }
  int r() const { return der.r(); }
  static OmniSec zero(int d, int r);

  friend OmniSec operator+(const OmniSec& a, const OmniSec& b);
  friend OmniSec operator-(const OmniSec& a, const OmniSec& b);
  friend bool operator==(const OmniSec& a, const OmniSec& b);
  bool is_zero() const;
};

/// Section of TM + E: a vector field together with a bundle section. This is
/// what the falling operator acts on.
struct TauSec {
  VecP x;  ///< d components
  VecP e;  ///< r components

  friend TauSec operator+(const TauSec& a, const TauSec& b);
  friend TauSec operator-(const TauSec& a, const TauSec& b);
  friend bool operator==(const TauSec& a, const TauSec& b);
  bool is_zero() const;
};

/// Bundle map TM + E -> E: a gl part and a Hom(TM, E) part. These are the
/// symbol-free omni sections; amb() places them inside the omni bundle.
struct HomSec {
  MatP phi;  ///< r x r
  MatP eta;  ///< r x d

  friend bool operator==(const HomSec& a, const HomSec& b);
};

// --- scalar module structures --------------------------------------------------

DerSec scale(const Poly& f, const DerSec& a);
JetSec scale(const Poly& f, const JetSec& a);
OmniSec scale(const Poly& f, const OmniSec& a);
TauSec scale(const Poly& f, const TauSec& a);

// --- first-order calculus ------------------------------------------------------

/// Directional derivative x(f) = sum_a x^a df/dt_a.
Poly dir_deriv(const VecP& x, const Poly& f);
/// Componentwise directional derivative of a section.
VecP dir_deriv(const VecP& x, const VecP& v);
/// Entrywise directional derivative of a matrix of functions.
MatP dir_deriv(const VecP& x, const MatP& m);

/// Action of a derivation section on a bundle section: x(v) + phi v.
VecP apply_der(const DerSec& a, const VecP& v);

/// Commutator of derivation sections:
/// ([x1,x2], x1(phi2) - x2(phi1) + [phi1, phi2]).
DerSec der_bracket(const DerSec& a, const DerSec& b);

/// Duality pairing <(u, eta), (x, phi)> = phi u + eta x, an E-section.
VecP jet_pairing(const JetSec& mu, const DerSec& a);

/// Jet prolongation of a section: v -> (v, Jv) with (Jv)_{k,a} = dv^k/dt_a.
JetSec jet_prolong(int d, const VecP& v);

/// The rank-one jet f -> df (x) p, with (df(x)p)_{k,a} = p_k df/dt_a.
JetSec df_tensor(const Poly& f, const VecP& p);

/// Lie derivative of a jet section along a derivation section; defined by
/// a(<mu, b>) = <L_a mu, b> + <mu, [a,b]> and computed in closed form.
JetSec lie_derivative(const DerSec& a, const JetSec& mu);

/// The bracket {X, Y} = ([a,b], L_a nu - L_b mu + prolong <mu, b>)
/// for X = (a, mu), Y = (b, nu).
OmniSec dorfman(const OmniSec& x, const OmniSec& y);

/// Symmetric pairing <<X, Y>> = (<nu, a> + <mu, b>)/2, an E-section.
VecP omni_pairing_sec(const OmniSec& x, const OmniSec& y);

// --- projections and the falling operator --------------------------------------

/// The symbol-and-value projection X -> (x, u).
TauSec b_project(const OmniSec& x);

/// Flat-chart splitting: (x, u) -> ((x, 0), (u, 0)).
OmniSec gamma0(const TauSec& t);

/// Falling operator: X acts on y + v by ([x,y], x(v) + phi v - y(u) + eta y).
TauSec falling(const OmniSec& x, const TauSec& t);

/// The data of the falling operator: the symbol x, the gl part phi, and the
/// Hom(TM, E) part eta - Ju. X is recovered from these up to prolonged jets:
/// X = ((x, phi), (0, eta - Ju)) + (0, prolong u).
struct FallingParts {
  VecP x;
  MatP phi;
  MatP xm;  ///< eta - Ju
};
FallingParts falling_parts(const OmniSec& x);

// --- symbol-free sections as an ideal --------------------------------------------

/// Embeds a bundle map TM + E -> E as an omni section with zero symbol parts.
OmniSec amb(int d, const HomSec& h);
/// h(y + v) = phi v + eta y.
VecP hom_apply(const HomSec& h, const TauSec& t);
/// Composition through E: (h . k)(y + v) = h(0 + k(y + v)).
HomSec hom_compose(const HomSec& h, const HomSec& k);

// --- the identity battery --------------------------------------------------------

/// Outcome of the seeded random-section identity battery. Every flag is the
/// conjunction over all trials; `all()` is the full conjunction.
struct AxiomReport {
  int trials = 0;
  int d = 0, r = 0;
  bool left_leibniz = true;        ///< {X,{Y,Z}} = {{X,Y},Z} + {Y,{X,Z}}
  bool pairing_invariance = true;  ///< a_X<<Y,Z>> = <<{X,Y},Z>> + <<Y,{X,Z}>>
  bool symmetric_part = true;      ///< {X,Y} + {Y,X} = (0, prolong 2<<X,Y>>)
  bool scalar_shift = true;        ///< {fX,Y} = f{X,Y} - y(f) X + (0, df(x)2<<X,Y>>)
  bool prolong_pairing = true;     ///< <prolong v, a> = a(v)
  bool lie_derivative_rule = true; ///< a<mu,b> = <L_a mu, b> + <mu,[a,b]>
  bool bracket_commutator = true;  ///< [a,b](v) = a(b(v)) - b(a(v))
  bool falling_morphism = true;    ///< fall{X,Y} = fall X fall Y - fall Y fall X
  bool hom_ideal = true;           ///< symbol-free sections form a two-sided pocket
  bool module_rules = true;        ///< prolong(fv), L_{fa}mu, L_a(f mu) expansions
  bool reconstruction = true;      ///< X = ((x,phi),(0,eta-Ju)) + (0, prolong u)

  bool all() const {
    return left_leibniz && pairing_invariance && symmetric_part && scalar_shift &&
           prolong_pairing && lie_derivative_rule && bracket_commutator && falling_morphism &&
           hom_ideal && module_rules && reconstruction;
  }
};

/// Runs the identity battery on `count` seeded random section tuples of the
/// given shape; degree bounds the random polynomial coefficients.
AxiomReport axiom_suite(std::uint64_t seed, int d, int r, int deg, int count);

}  // namespace omnilie

#endif
