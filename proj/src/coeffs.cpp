#include "klrel/coeffs.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "klrel/numerics.hpp"

namespace klrel {

namespace {

constexpr double kPi = std::numbers::pi;
const double kInvPi4 = 1.0 / (kPi * kPi * kPi * kPi);
const double kInvPi8 = kInvPi4 * kInvPi4;

// Named views of the seven coordinates, for legible formula transcription.
struct Coords {
    Cx a, b, c, d, e, f, g;
    explicit Coords(const Vec7& x)
        : a(x[0]), b(x[1]), c(x[2]), d(x[3]), e(x[4]), f(x[5]), g(x[6]) {}
};

Cx b1_value(const Vec7& x) {
    const Coords v(x);
    return kInvPi4 * eval_S({v.b, v.c}) *
           (eval_S({v.b - v.a, v.c - v.a, v.d}) + eval_S({v.e - v.a, v.f - v.a, v.g - v.a}));
}

Cx b2_value(const Vec7& x) {
    const Coords v(x);
    return kInvPi4 * eval_S({v.f - v.a, v.g - v.a}) *
           (eval_S({v.b - v.a, v.c - v.a, v.d - v.a}) +
            eval_S({v.e - 2.0 * v.a, v.f - v.a, v.g - v.a}));
}

Cx b4_value(const Vec7& x) {
    const Coords v(x);
    return kInvPi4 * eval_S({v.f - v.a, v.g - v.a}) *
           (eval_S({v.b, v.c, v.d}) + eval_S({v.e - v.a, v.f, v.g}));
}

Cx b5_value(const Vec7& x) {
    const Coords v(x);
    return kInvPi4 * eval_S({v.b, v.e - v.b}) *
           (eval_S({v.b - v.a, v.c - v.a, v.d - v.a}) +
            eval_S({v.e - 2.0 * v.a, v.f - v.a, v.g - v.a}));
}

} // namespace

Cx eval_S(std::initializer_list<Cx> args) {
    Cx p(1.0, 0.0);
    for (const Cx& u : args) p *= sinpi(u);
    return p;
}

Cx eval_A(const Cx& u1, const Cx& u2, const Cx& u3, const Cx& u4) {
    return recip_gamma(u1) * recip_gamma(u2) * recip_gamma(u3) * recip_gamma(u4);
}

Cx eval_B3_display(const Vec7& x) {
    const Coords v(x);
    const Cx num =
        eval_S({v.f, v.f - v.e, v.g - v.a, v.g - v.b, v.g - v.c, v.g - v.d}) -
        eval_S({v.g, v.g - v.e, v.f - v.a, v.f - v.b, v.f - v.c, v.f - v.d});
    return kInvPi4 * num / sinpi(v.f - v.g);
}

// Equivalent form with the sin pi(f-g) factor cancelled analytically, so the
// removable singularities of the displayed form never enter the arithmetic.
Cx eval_B3_cancelled(const Vec7& x) {
    const Coords v(x);
    return kInvPi4 *
           (eval_S({v.f, v.g - v.a}) *
                (eval_S({v.e - v.b, v.g - v.c, v.g - v.d}) -
                 eval_S({v.g - v.e, v.f - v.b, v.f + v.g - v.c - v.d})) -
            eval_S({v.a, v.g - v.e, v.f - v.b, v.f - v.c, v.f - v.d}));
}

Cx eval_B(int k, const Vec7& x) {
    switch (k) {
    case 1: return b1_value(x);
    case 2: return b2_value(x);
    case 3: {
        const Cx sfg = sinpi(x[5] - x[6]);
        return std::abs(sfg) < kB3GuardBand ? eval_B3_cancelled(x) : eval_B3_display(x);
    }
    case 4: return b4_value(x);
    case 5: return b5_value(x);
    default: throw LabelingMismatch("no coefficient block B" + std::to_string(k));
    }
}

Cx eval_C(const Vec7& x) {
    const Coords v(x);
    return kInvPi4 * sinpi(v.e - v.a) *
           (eval_S({v.b, v.c, v.d}) * b2_value(x) +
            eval_S({v.e, v.f - v.a, v.g - v.a}) * b4_value(x));
}

Cx eval_C_expanded(const Vec7& x) {
    const Coords v(x);
    return kInvPi8 * eval_S({v.e - v.a, v.f - v.a, v.g - v.a}) *
           (eval_S({v.b, v.c, v.d}) *
                (eval_S({v.b - v.a, v.c - v.a, v.d - v.a}) +
                 eval_S({v.e - 2.0 * v.a, v.f - v.a, v.g - v.a})) +
            eval_S({v.e, v.f - v.a, v.g - v.a}) *
                (eval_S({v.b, v.c, v.d}) + eval_S({v.e - v.a, v.f, v.g})));
}

CoeffAtom sine_atom(std::vector<AffineForm> forms) {
    CoeffAtom atom;
    atom.kind = AtomKind::Sine;
    atom.forms = std::move(forms);
    if (atom.forms.empty()) throw LabelingMismatch("sine atom needs at least one argument");
    return atom;
}

CoeffAtom gamma_recip_atom(const AffineForm& u1, const AffineForm& u2, const AffineForm& u3,
                           const AffineForm& u4) {
    CoeffAtom atom;
    atom.kind = AtomKind::GammaRecip;
    atom.forms = {u1, u2, u3, u4};
    return atom;
}

CoeffAtom block_atom(AtomKind kind, const PointMap& arg) {
    if (kind == AtomKind::Sine || kind == AtomKind::GammaRecip)
        throw LabelingMismatch("block_atom is for B1..B5 and C only");
    CoeffAtom atom;
    atom.kind = kind;
    atom.arg = arg;
    return atom;
}

Cx eval_atom(const CoeffAtom& atom, const Vec7& x) {
    switch (atom.kind) {
    case AtomKind::Sine: {
        Cx p(1.0, 0.0);
        for (const AffineForm& f : atom.forms) p *= sinpi(f.eval(x));
        return p;
    }
    case AtomKind::GammaRecip: {
        Cx p(1.0, 0.0);
        for (const AffineForm& f : atom.forms) p *= recip_gamma(f.eval(x));
        return p;
    }
    case AtomKind::B1: return eval_B(1, atom.arg.apply(x));
    case AtomKind::B2: return eval_B(2, atom.arg.apply(x));
    case AtomKind::B3: return eval_B(3, atom.arg.apply(x));
    case AtomKind::B4: return eval_B(4, atom.arg.apply(x));
    case AtomKind::B5: return eval_B(5, atom.arg.apply(x));
    case AtomKind::C: return eval_C(atom.arg.apply(x));
    }
    throw LabelingMismatch("unknown coefficient atom kind");
}

Cx eval_coeff(const CoeffExpr& expr, const Vec7& x) {
    Cx p(static_cast<double>(expr.sign), 0.0);
    for (const CoeffAtom& atom : expr.atoms) p *= eval_atom(atom, x);
    return p;
}

int length(const CoeffAtom& atom) {
    switch (atom.kind) {
    case AtomKind::Sine: return 2 * static_cast<int>(atom.forms.size());
    case AtomKind::GammaRecip: return 4;
    case AtomKind::C: return 18;
    default: return 10; // B1..B5
    }
}

int width(const CoeffAtom& atom) {
    switch (atom.kind) {
    case AtomKind::Sine:
    case AtomKind::GammaRecip: return 1;
    case AtomKind::C: return 4;
    default: return 2; // B1..B5
    }
}

int length(const CoeffExpr& expr) {
    int sum = 0;
    for (const CoeffAtom& atom : expr.atoms) sum += length(atom);
    return sum;
}

int width(const CoeffExpr& expr) {
    int prod = 1;
    for (const CoeffAtom& atom : expr.atoms) prod *= width(atom);
    return prod;
}

CoeffAtom transport(const CoeffAtom& atom, const PointMap& rho) {
    CoeffAtom out = atom;
    if (atom.kind == AtomKind::Sine || atom.kind == AtomKind::GammaRecip) {
        for (AffineForm& f : out.forms) f = compose(f, rho);
    } else {
        out.arg = atom.arg.after(rho);
    }
    return out;
}

CoeffExpr transport(const CoeffExpr& expr, const PointMap& rho) {
    CoeffExpr out = expr;
    for (CoeffAtom& atom : out.atoms) atom = transport(atom, rho);
    return out;
}

namespace {

// All gamma/sine arguments that a block's evaluation touches, in base
// coordinates (both branches for B3, both inner blocks for C).
std::vector<AffineForm> block_base_forms(AtomKind kind) {
    using namespace vars;
    const std::vector<AffineForm> b2_forms = {f - a, g - a, b - a, c - a, d - a, e - a - a};
    const std::vector<AffineForm> b4_forms = {f - a, g - a, b, c, d, e - a, f, g};
    switch (kind) {
    case AtomKind::B1: return {b, c, b - a, c - a, d, e - a, f - a, g - a};
    case AtomKind::B2: return b2_forms;
    case AtomKind::B3:
        return {f,     f - e, g - a, g - b, g - c, g - d, g,     g - e,
                f - a, f - b, f - c, f - d, f - g, e - b, f + g - c - d, a};
    case AtomKind::B4: return b4_forms;
    case AtomKind::B5: return {b, e - b, b - a, c - a, d - a, e - a - a, f - a, g - a};
    case AtomKind::C: {
        std::vector<AffineForm> out = {e - a, b, c, d, e, f - a, g - a};
        out.insert(out.end(), b2_forms.begin(), b2_forms.end());
        out.insert(out.end(), b4_forms.begin(), b4_forms.end());
        return out;
    }
    default: return {};
    }
}

} // namespace

void append_guard_forms(const CoeffAtom& atom, std::vector<AffineForm>& out) {
    if (atom.kind == AtomKind::Sine || atom.kind == AtomKind::GammaRecip) {
        out.insert(out.end(), atom.forms.begin(), atom.forms.end());
        return;
    }
    for (const AffineForm& f : block_base_forms(atom.kind)) out.push_back(compose(f, atom.arg));
}

void append_guard_forms(const CoeffExpr& expr, std::vector<AffineForm>& out) {
    for (const CoeffAtom& atom : expr.atoms) append_guard_forms(atom, out);
}

} // namespace klrel
