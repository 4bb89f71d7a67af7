#pragma once

#include <initializer_list>
#include <vector>

#include "klrel/core.hpp"

namespace klrel {

// Shorthand builders for transcribing coefficient formulas. With
// `using namespace klrel::vars`, an expression like `n(1) + b - e` denotes
// the affine form 1+b-e in the seven parameters.
namespace vars {
inline const AffineForm a = af_coord(0);
inline const AffineForm b = af_coord(1);
inline const AffineForm c = af_coord(2);
inline const AffineForm d = af_coord(3);
inline const AffineForm e = af_coord(4);
inline const AffineForm f = af_coord(5);
inline const AffineForm g = af_coord(6);
inline AffineForm n(int k) { return af_const(k); }
} // namespace vars

// Half-width of the guard band around the zeros of sin pi(f-g): inside it
// B3 switches from its displayed form (which divides by sin pi(f-g)) to an
// algebraically equivalent form in which that factor has been cancelled.
inline constexpr double kB3GuardBand = 1e-4;

// --- direct evaluation of the coefficient primitives ---

// S(u1,...,un) = prod sin(pi u_i)
Cx eval_S(std::initializer_list<Cx> args);

// A(u1,u2,u3,u4) = 1 / (Gamma(u1) Gamma(u2) Gamma(u3) Gamma(u4))
Cx eval_A(const Cx& u1, const Cx& u2, const Cx& u3, const Cx& u4);

// B_k at a parameter point, k in 1..5. B_3 is band-aware: when
// |sin pi(f-g)| < kB3GuardBand it is evaluated through the cancelled form.
Cx eval_B(int k, const Vec7& x);

// The two branches of B_3, exposed for cross-checking. The displayed form
// divides by sin pi(f-g); the cancelled form is entire and agrees with it
// everywhere the displayed form is defined.
Cx eval_B3_display(const Vec7& x);
Cx eval_B3_cancelled(const Vec7& x);

// C in its compact form (through B_2 and B_4), and in its fully expanded
// form; the two agree identically.
Cx eval_C(const Vec7& x);
Cx eval_C_expanded(const Vec7& x);

// --- coefficient expressions ---

// A coefficient in a three-term relation is a signed product of atoms: sine
// products S(...), reciprocal-gamma products A(...), and at most one of the
// composite blocks B_1..B_5 or C taken at a transformed argument.
enum class AtomKind { Sine, GammaRecip, B1, B2, B3, B4, B5, C };

struct CoeffAtom {
    AtomKind kind = AtomKind::Sine;
    std::vector<AffineForm> forms; // Sine: the sine arguments; GammaRecip: the four gamma arguments
    PointMap arg;                  // B1..B5, C: evaluated at arg(x); identity by default

    bool operator==(const CoeffAtom&) const = default;
};

struct CoeffExpr {
    int sign = 1;
    std::vector<CoeffAtom> atoms;

    bool operator==(const CoeffExpr&) const = default;
};

CoeffAtom sine_atom(std::vector<AffineForm> forms);
CoeffAtom gamma_recip_atom(const AffineForm& u1, const AffineForm& u2, const AffineForm& u3,
                           const AffineForm& u4);
CoeffAtom block_atom(AtomKind kind, const PointMap& arg = PointMap{});

Cx eval_atom(const CoeffAtom& atom, const Vec7& x);
Cx eval_coeff(const CoeffExpr& expr, const Vec7& x);

// Structural metadata: length counts gamma factors in the denominator of
// each summand (a sine in the numerator counts +2, in the denominator -2);
// width counts summands. Length is additive over products, width
// multiplicative.
int length(const CoeffAtom& atom);
int width(const CoeffAtom& atom);
int length(const CoeffExpr& expr);
int width(const CoeffExpr& expr);

// Substitute x -> rho(x): sine and gamma arguments compose with rho, block
// arguments post-compose.
CoeffAtom transport(const CoeffAtom& atom, const PointMap& rho);
CoeffExpr transport(const CoeffExpr& expr, const PointMap& rho);

// Every affine form that appears as a gamma or sine argument when the atom
// is evaluated (block-internal forms composed with the block argument).
// Used to keep sample points away from degenerate loci.
void append_guard_forms(const CoeffAtom& atom, std::vector<AffineForm>& out);
void append_guard_forms(const CoeffExpr& expr, std::vector<AffineForm>& out);

} // namespace klrel
