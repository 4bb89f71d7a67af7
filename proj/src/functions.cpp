#include "klrel/functions.hpp"

namespace klrel {

KlValue eval_K_full(const Vec7& x, long budget) { return eval_K_impl<double>(x, budget); }
KlValue eval_L_full(const Vec7& x, long budget) { return eval_L_impl<double>(x, budget); }
KlValue eval_L_via_7f6_full(const Vec7& x, long budget) {
    return eval_L_via_7f6_impl<double>(x, budget);
}

Cx eval_K(const Vec7& x, long budget) { return eval_K_full(x, budget).value; }
Cx eval_L(const Vec7& x, long budget) { return eval_L_full(x, budget).value; }
Cx eval_L_via_7f6(const Vec7& x, long budget) { return eval_L_via_7f6_full(x, budget).value; }

KlValue eval_J_full(const GroupTables& tables, const CosetId& id, const Vec7& x,
                    long budget) {
    const Mat7i& rep = tables.rep_matrix(id);
    Vec7 y = Vec7::Zero();
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j)
            if (rep(i, j) != 0) y[i] += static_cast<double>(rep(i, j)) * x[j];
    return id.side == Side::K ? eval_K_full(y, budget) : eval_L_full(y, budget);
}

Cx eval_J(const GroupTables& tables, const CosetId& id, const Vec7& x, long budget) {
    return eval_J_full(tables, id, x, budget).value;
}

Vec7 twiddle_point(const TwiddleParams& t) {
    const Cx x0 = t.x[0], x1 = t.x[1], x2 = t.x[2], x3 = t.x[3], x4 = t.x[4], x5 = t.x[5];
    const Cx half(0.5, 0.0);
    const Cx one(1.0, 0.0);
    const Cx two(2.0, 0.0);
    Vec7 p;
    p[0] = half + x0 + x1 + x2 + x3 + x4 + x5;
    p[1] = half + x0 + x1 + x2 - x3 - x4 + x5;
    p[2] = half + x0 + x1 + x2 + x3 - x4 - x5;
    p[3] = half + x0 + x1 + x2 - x3 + x4 - x5;
    p[4] = one + two * x1 + two * x2;
    p[5] = one + two * x0 + two * x1;
    p[6] = one + two * x0 + two * x2;
    return p;
}

Cx eval_K_tilde(const TwiddleParams& t, long budget) {
    return eval_K(twiddle_point(t), budget);
}

Cx eval_L_tilde(const TwiddleParams& t, long budget) {
    return eval_L(twiddle_point(t), budget);
}

std::vector<AffineForm> k_eval_guard_forms() {
    const AffineForm a = af_coord(0), b = af_coord(1), c = af_coord(2), d = af_coord(3),
                     e = af_coord(4), f = af_coord(5), g = af_coord(6);
    const AffineForm one = af_const(1);
    return {a,           b,           c,           d,           e,          f, g,
            one + a - e, one + a - f, one + a - g, one + a - b, one + a - c,
            one + a - d};
}

std::vector<AffineForm> l_eval_guard_forms() {
    const AffineForm a = af_coord(0), b = af_coord(1), c = af_coord(2), d = af_coord(3),
                     e = af_coord(4), f = af_coord(5), g = af_coord(6);
    const AffineForm one = af_const(1);
    const AffineForm two = af_const(2);
    return {a,           b,           c,           d,           e,          f, g,
            one + a - e, one + b - e, one + c - e, one + d - e, two - e,
            one + f - e, one + g - e};
}

std::array<int, 6> k_stabilizer_generators(const GroupTables& tables) {
    return {tables.defining_gens[1], tables.defining_gens[2], tables.defining_gens[3],
            tables.defining_gens[4], tables.defining_gens[5], tables.coxeter_gens[3]};
}

std::array<int, 6> l_stabilizer_generators(const GroupTables& tables) {
    return {tables.defining_gens[0], tables.defining_gens[1], tables.defining_gens[2],
            tables.defining_gens[4], tables.defining_gens[5], tables.coxeter_gens[3]};
}

} // namespace klrel
