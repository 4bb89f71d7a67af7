#pragma once

#include <algorithm>
#include <array>
#include <vector>

#include "klrel/core.hpp"
#include "klrel/group.hpp"
#include "klrel/series.hpp"

namespace klrel {

// Value of a K/L evaluation together with the propagated truncation bound of
// the underlying series and the largest series length used.
template <class Real>
struct KlValueT {
    std::complex<Real> value;
    Real tail_bound = Real(0);
    long terms_used = 0;
};

using KlValue = KlValueT<double>;

namespace detail {

template <class Real>
void require_on_hyperplane_t(const Vec7T<Real>& x) {
    const std::complex<Real> defect =
        x[4] + x[5] + x[6] - x[0] - x[1] - x[2] - x[3] - Real(1);
    if (std::abs(defect) > static_cast<Real>(kHyperplaneTol))
        throw NotOnHyperplane("point is off the hyperplane e+f+g-a-b-c-d=1");
}

template <class Real>
void require_sine_clear(const std::complex<Real>& u, const char* what) {
    if (integer_distance(u) < static_cast<Real>(kEpsPole))
        throw PrefactorPole(std::string(what) + ": sine argument within pole guard of an integer");
}

template <class Real>
void require_gamma_clear(const std::complex<Real>& u, const char* what) {
    if (nearest_nonpositive_int(u, static_cast<Real>(kEpsPole)))
        throw PrefactorPole(std::string(what) +
                            ": gamma argument within pole guard of a nonpositive integer");
}

} // namespace detail

// K(x): the sum of the two 4F3* series complementary with respect to the
// first parameter, divided by the sin/gamma prefactor. Invariant under the
// order-720 stabilizer of the K family.
template <class Real>
KlValueT<Real> eval_K_impl(const Vec7T<Real>& x, long budget = kDefaultSeriesBudget) {
    using C = std::complex<Real>;
    detail::require_on_hyperplane_t(x);
    const C a = x[0], b = x[1], c = x[2], d = x[3], e = x[4], f = x[5], g = x[6];
    const C one(Real(1), Real(0));

    detail::require_sine_clear(a, "K prefactor");
    for (const C& u : {a, b, c, d, one + a - e, one + a - f, one + a - g})
        detail::require_gamma_clear(u, "K prefactor");

    const auto s1 = eval_4f3_star<Real>({a, b, c, d}, {e, f, g}, budget);
    const auto s2 = eval_4f3_star<Real>({a, one + a - e, one + a - f, one + a - g},
                                        {one + a - b, one + a - c, one + a - d}, budget);

    const C pref = recip_gamma(a) * recip_gamma(a) * recip_gamma(b) * recip_gamma(c) *
                   recip_gamma(d) * recip_gamma(one + a - e) * recip_gamma(one + a - f) *
                   recip_gamma(one + a - g) / sinpi(a);

    KlValueT<Real> out;
    out.value = (s1.value + s2.value) * pref;
    out.tail_bound = (s1.tail_bound + s2.tail_bound) * std::abs(pref);
    out.terms_used = std::max(s1.terms_used, s2.terms_used);
    return out;
}

// L(x): the difference of the two 4F3* series supplementary with respect to
// the fifth parameter, divided by its sin/gamma prefactor. Invariant under
// the order-1920 stabilizer of the L family.
template <class Real>
KlValueT<Real> eval_L_impl(const Vec7T<Real>& x, long budget = kDefaultSeriesBudget) {
    using C = std::complex<Real>;
    detail::require_on_hyperplane_t(x);
    const C a = x[0], b = x[1], c = x[2], d = x[3], e = x[4], f = x[5], g = x[6];
    const C one(Real(1), Real(0));
    const C two(Real(2), Real(0));

    detail::require_sine_clear(e, "L prefactor");
    for (const C& u :
         {a, b, c, d, one + a - e, one + b - e, one + c - e, one + d - e})
        detail::require_gamma_clear(u, "L prefactor");

    const auto s1 = eval_4f3_star<Real>({a, b, c, d}, {e, f, g}, budget);
    const auto s2 =
        eval_4f3_star<Real>({one + a - e, one + b - e, one + c - e, one + d - e},
                            {two - e, one + f - e, one + g - e}, budget);

    const C pref = recip_gamma(a) * recip_gamma(b) * recip_gamma(c) * recip_gamma(d) *
                   recip_gamma(one + a - e) * recip_gamma(one + b - e) *
                   recip_gamma(one + c - e) * recip_gamma(one + d - e) / sinpi(e);

    KlValueT<Real> out;
    out.value = (s1.value - s2.value) * pref;
    out.tail_bound = (s1.tail_bound + s2.tail_bound) * std::abs(pref);
    out.terms_used = std::max(s1.terms_used, s2.terms_used);
    return out;
}

// L(x) through its very-well-poised 7F6 representation; valid for
// Re(f-d) > 0 (the series' convergence exponent).
template <class Real>
KlValueT<Real> eval_L_via_7f6_impl(const Vec7T<Real>& x, long budget = kDefaultSeriesBudget) {
    using C = std::complex<Real>;
    detail::require_on_hyperplane_t(x);
    const C a = x[0], b = x[1], c = x[2], d = x[3], e = x[4], g = x[6];
    const C one(Real(1), Real(0));
    const C two(Real(2), Real(0));

    const C pA = d + g - e;
    const C pB = g - a;
    const C pC = g - b;
    const C pD = g - c;
    const C pE = d;
    const C pF = one + d - e;
    const C balance = two + pA + pA - pB - pC - pD - pE - pF; // equals f-d on V

    detail::require_gamma_clear(one + pA, "7F6 prefactor");
    const auto s = eval_7f6_vwp<Real>(pA, pB, pC, pD, pE, pF, budget);

    const C pref = gamma_fn(one + pA) / detail::pi_v<Real>() * recip_gamma(one + pA - pB) *
                   recip_gamma(one + pA - pC) * recip_gamma(one + pA - pD) *
                   recip_gamma(one + pA - pE) * recip_gamma(one + pA - pF) *
                   recip_gamma(balance);

    KlValueT<Real> out;
    out.value = s.value * pref;
    out.tail_bound = s.tail_bound * std::abs(pref);
    out.terms_used = s.terms_used;
    return out;
}

KlValue eval_K_full(const Vec7& x, long budget = kDefaultSeriesBudget);
KlValue eval_L_full(const Vec7& x, long budget = kDefaultSeriesBudget);
KlValue eval_L_via_7f6_full(const Vec7& x, long budget = kDefaultSeriesBudget);

Cx eval_K(const Vec7& x, long budget = kDefaultSeriesBudget);
Cx eval_L(const Vec7& x, long budget = kDefaultSeriesBudget);
Cx eval_L_via_7f6(const Vec7& x, long budget = kDefaultSeriesBudget);

// The coset-indexed function family: K at the canonical representative of a
// K-label, L at the canonical representative of an L-label. Well defined on
// labels because K and L are invariant under their stabilizers.
KlValue eval_J_full(const GroupTables& tables, const CosetId& id, const Vec7& x,
                    long budget = kDefaultSeriesBudget);
Cx eval_J(const GroupTables& tables, const CosetId& id, const Vec7& x,
          long budget = kDefaultSeriesBudget);

// Six-variable reparameterization on which the stabilizer actions become
// coordinate permutations (for K) and evenly-signed permutations (for L).
struct TwiddleParams {
    std::array<Cx, 6> x{};
};

// The induced parameter point; lands on the hyperplane identically.
Vec7 twiddle_point(const TwiddleParams& t);

Cx eval_K_tilde(const TwiddleParams& t, long budget = kDefaultSeriesBudget);
Cx eval_L_tilde(const TwiddleParams& t, long budget = kDefaultSeriesBudget);

// Every affine form used as a gamma or sine argument when evaluating K or L
// at the identity representative (prefactor and both series), in base
// coordinates. Composed with coset representatives these drive sampling
// guards.
std::vector<AffineForm> k_eval_guard_forms();
std::vector<AffineForm> l_eval_guard_forms();

// The six stabilizer generators of each family, as element ids.
std::array<int, 6> k_stabilizer_generators(const GroupTables& tables);
std::array<int, 6> l_stabilizer_generators(const GroupTables& tables);

} // namespace klrel
