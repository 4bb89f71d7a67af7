#pragma once

#include <array>
#include <complex>
#include <cstdlib>
#include <limits>
#include <string>

#include "klrel/errors.hpp"
#include "klrel/numerics.hpp"

namespace klrel {

inline constexpr long kDefaultSeriesBudget = 100000;

template <class Real>
struct SeriesResultT {
    std::complex<Real> value{};
    Real tail_bound = Real(0);
    long terms_used = 0;
};
using SeriesResult = SeriesResultT<double>;

namespace detail {

// Compensated (Kahan) accumulator; complex arithmetic applies the
// compensation componentwise.
template <class Real>
struct Kahan {
    std::complex<Real> sum{};
    std::complex<Real> comp{};
    void add(const std::complex<Real>& v) {
        const std::complex<Real> y = v - comp;
        const std::complex<Real> t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

template <class Real>
Real abs1(const std::complex<Real>& z) {
    return std::abs(z.real()) + std::abs(z.imag());
}

// Tail of the Hurwitz zeta function: sum_{k>=0} (a+k)^{-s}, for Re(s) > 1 and
// large real a, by Euler-Maclaurin. Error ~ |(s)_9| a^{-Re(s)-9}, negligible
// for the a >= 10^3 used here.
template <class Real>
std::complex<Real> hurwitz_zeta_tail(const std::complex<Real>& s, Real a) {
    // B_{2j} / (2j)! for j = 1..4
    static const Real bfac[4] = {
        Real(1.0L / 12.0L),
        Real(-1.0L / 720.0L),
        Real(1.0L / 30240.0L),
        Real(-1.0L / 1209600.0L),
    };
    const std::complex<Real> one(Real(1), Real(0));
    const Real ln_a = std::log(a);
    const std::complex<Real> a_pow_ms = std::exp(-s * ln_a); // a^{-s}
    std::complex<Real> out = a_pow_ms * (a / (s - one) + Real(0.5));
    std::complex<Real> poch = s;              // (s)_{2j-1}
    std::complex<Real> a_pow = a_pow_ms / a;  // a^{-s-(2j-1)}
    for (int j = 0; j < 4; ++j) {
        out += bfac[j] * poch * a_pow;
        poch *= (s + Real(2 * j + 1)) * (s + Real(2 * j + 2));
        a_pow /= a * a;
    }
    return out;
}

// Shared summation engine. ratio(k) must return t_{k+1}/t_k; terms are
// assumed to decay like k^{-s_exp} with a 1/k expansion:
//   t_k k^{s_exp} = c0 + c1/k + c2/k^2 + ...
// After `budget` explicit terms, c0 and c1 are fitted from two late rows and
// the remaining tail is added as c0 zeta(s,N) + c1 zeta(s+1,N). tail_bound
// charges the full c2-level error of that fit (which dominates the bare
// zeta(s+2) term) plus a rounding floor for the compensated sum and the
// exp(lngamma) conditioning of t_0.
template <class Real, class RatioFn>
SeriesResultT<Real> sum_with_tail(std::complex<Real> t0, RatioFn ratio,
                                  const std::complex<Real>& s_exp, long budget) {
    if (budget < 1024)
        throw NoConvergence("series budget too small to estimate the tail: " +
                            std::to_string(budget));
    const long n_terms = budget;
    const long h = n_terms / 8;
    const long k_fit0 = n_terms - 1 - 2 * h; // c2 residual row
    const long k_fit1 = n_terms - 1 - h;     // linear fit rows
    const long k_fit2 = n_terms - 1;

    Kahan<Real> acc;
    Real abs_sum = Real(0);
    std::complex<Real> t = t0;
    std::complex<Real> sample0{}, sample1{}, sample2{};
    for (long k = 0; k < n_terms; ++k) {
        acc.add(t);
        abs_sum += abs1(t);
        if (k == k_fit0) sample0 = t;
        if (k == k_fit1) sample1 = t;
        if (k == k_fit2) sample2 = t;
        if (k + 1 < n_terms) t *= ratio(k);
    }

    const auto y_of = [&](long k, const std::complex<Real>& tk) {
        return tk * std::exp(s_exp * std::log(static_cast<Real>(k)));
    };
    const Real u0 = Real(1) / static_cast<Real>(k_fit0);
    const Real u1 = Real(1) / static_cast<Real>(k_fit1);
    const Real u2 = Real(1) / static_cast<Real>(k_fit2);
    const std::complex<Real> y0 = y_of(k_fit0, sample0);
    const std::complex<Real> y1 = y_of(k_fit1, sample1);
    const std::complex<Real> y2 = y_of(k_fit2, sample2);

    const std::complex<Real> c1 = (y2 - y1) / (u2 - u1);
    const std::complex<Real> c0 = y2 - c1 * u2;
    const std::complex<Real> resid = y0 - (c0 + c1 * u0);
    const Real c2_mag = std::abs(resid / ((u0 - u1) * (u0 - u2)));

    const Real big_n = static_cast<Real>(n_terms);
    const std::complex<Real> z0 = hurwitz_zeta_tail(s_exp, big_n);
    const std::complex<Real> z1 = hurwitz_zeta_tail(s_exp + Real(1), big_n);
    const std::complex<Real> z2 = hurwitz_zeta_tail(s_exp + Real(2), big_n);
    const std::complex<Real> tail = c0 * z0 + c1 * z1;

    const Real eps = std::numeric_limits<Real>::epsilon();
    const Real fit_err =
        c2_mag * (u1 * u2 * std::abs(z0) + (u1 + u2) * std::abs(z1) + std::abs(z2));
    const Real floor = Real(100) * eps * (abs_sum + std::abs(tail));

    SeriesResultT<Real> out;
    out.value = acc.sum + tail;
    out.tail_bound = Real(4) * fit_err + floor;
    out.terms_used = n_terms;
    return out;
}

} // namespace detail

// Regularized Saalschuetzian series
//   sum_{k>=0} Gamma(k+a)Gamma(k+b)Gamma(k+c)Gamma(k+d) /
//              (k! Gamma(k+e)Gamma(k+f)Gamma(k+g))
// at unit argument. Requires the balance e+f+g-a-b-c-d = 1, which makes the
// terms decay like k^{-2}.
//
// If some numerator parameter lies within kTerminationEps of a nonpositive
// integer -n, the series terminates: such parameters switch to Pochhammer
// semantics ((nu)_k replacing Gamma(k+nu)) and the first n+1 terms are summed
// exactly with tail_bound = 0. Denominator parameters within kEpsPole of a
// nonpositive integer raise DenominatorPole (except in the terminating case,
// where 1/Gamma handles them as exact zeros).
template <class Real>
SeriesResultT<Real> eval_4f3_star(const std::array<std::complex<Real>, 4>& num,
                                  const std::array<std::complex<Real>, 3>& den,
                                  long budget = kDefaultSeriesBudget) {
    using Cplx = std::complex<Real>;
    const Cplx balance =
        den[0] + den[1] + den[2] - num[0] - num[1] - num[2] - num[3] - Real(1);
    if (std::abs(balance) > static_cast<Real>(kTerminationEps))
        throw NotSaalschutzian("balance defect e+f+g-a-b-c-d-1 = " +
                               std::to_string(static_cast<double>(std::abs(balance))));

    // Terminating case.
    long n_stop = -1;
    std::array<bool, 4> poch_mode{false, false, false, false};
    for (int i = 0; i < 4; ++i) {
        if (auto n = nearest_nonpositive_int(num[i], static_cast<Real>(kTerminationEps))) {
            poch_mode[i] = true;
            n_stop = (n_stop < 0) ? *n : std::min(n_stop, *n);
        }
    }
    if (n_stop >= 0) {
        detail::Kahan<Real> acc;
        for (long k = 0; k <= n_stop; ++k) {
            Cplx term(Real(1), Real(0));
            for (int i = 0; i < 4; ++i)
                term *= poch_mode[i] ? pochhammer(num[i], k)
                                     : std::exp(lngamma(num[i] + static_cast<Real>(k)));
            for (int j = 0; j < 3; ++j)
                term *= recip_gamma(den[j] + static_cast<Real>(k));
            term *= recip_gamma(Cplx(static_cast<Real>(k + 1), Real(0)));
            acc.add(term);
        }
        SeriesResultT<Real> out;
        out.value = acc.sum;
        out.tail_bound = Real(0);
        out.terms_used = n_stop + 1;
        return out;
    }

    for (int j = 0; j < 3; ++j)
        if (nearest_nonpositive_int(den[j], static_cast<Real>(kEpsPole)))
            throw DenominatorPole("lower series parameter within pole guard of a "
                                  "nonpositive integer");

    Cplx log_t0{};
    for (int i = 0; i < 4; ++i) log_t0 += lngamma(num[i]);
    for (int j = 0; j < 3; ++j) log_t0 -= lngamma(den[j]);
    const Cplx t0 = std::exp(log_t0);

    const auto ratio = [&](long k) {
        const Real rk = static_cast<Real>(k);
        const Cplx numer =
            (rk + num[0]) * (rk + num[1]) * (rk + num[2]) * (rk + num[3]);
        const Cplx denom =
            (rk + Real(1)) * (rk + den[0]) * (rk + den[1]) * (rk + den[2]);
        return numer / denom;
    };
    return detail::sum_with_tail<Real>(t0, ratio, Cplx(Real(2), Real(0)), budget);
}

// Very-well-poised 7F6 at unit argument with the standard template
//   7F6[ A, 1+A/2, B, C, D, E, F ; A/2, 1+A-B, ..., 1+A-F ; 1 ],
// parameterized by (A,B,C,D,E,F) only. Terms decay like k^{-(1+2W)} with
// W = 2+2A-B-C-D-E-F; requires Re(W) > 0. Termination and pole guards follow
// eval_4f3_star: B..F within kTerminationEps of a nonpositive integer
// terminate the sum, while A or any 1+A-X within kEpsPole of a nonpositive
// integer raises DenominatorPole (the very-well-poised template degenerates).
template <class Real>
SeriesResultT<Real> eval_7f6_vwp(const std::complex<Real>& pA, const std::complex<Real>& pB,
                                 const std::complex<Real>& pC, const std::complex<Real>& pD,
                                 const std::complex<Real>& pE, const std::complex<Real>& pF,
                                 long budget = kDefaultSeriesBudget) {
    using Cplx = std::complex<Real>;
    const std::array<Cplx, 5> upper{pB, pC, pD, pE, pF};

    if (nearest_nonpositive_int(pA, static_cast<Real>(kEpsPole)))
        throw DenominatorPole("very-well-poised A parameter within pole guard of a "
                              "nonpositive integer");
    for (const Cplx& x : upper)
        if (nearest_nonpositive_int(Cplx(Real(1), Real(0)) + pA - x,
                                    static_cast<Real>(kEpsPole)))
            throw DenominatorPole("lower parameter 1+A-X within pole guard of a "
                                  "nonpositive integer");

    const auto ratio = [&](long k) {
        const Real rk = static_cast<Real>(k);
        Cplx numer = (rk + pA) * (pA + Real(2 * k + 2));
        Cplx denom = (rk + Real(1)) * (pA + Real(2 * k));
        for (const Cplx& x : upper) {
            numer *= rk + x;
            denom *= rk + Real(1) + pA - x;
        }
        return numer / denom;
    };

    long n_stop = -1;
    for (const Cplx& x : upper)
        if (auto n = nearest_nonpositive_int(x, static_cast<Real>(kTerminationEps)))
            n_stop = (n_stop < 0) ? *n : std::min(n_stop, *n);
    if (n_stop >= 0) {
        detail::Kahan<Real> acc;
        Cplx t(Real(1), Real(0));
        for (long k = 0; k <= n_stop; ++k) {
            acc.add(t);
            if (k < n_stop) t *= ratio(k);
        }
        SeriesResultT<Real> out;
        out.value = acc.sum;
        out.tail_bound = Real(0);
        out.terms_used = n_stop + 1;
        return out;
    }

    const Cplx w = Real(2) + Real(2) * pA - (pB + pC + pD + pE + pF);
    if (w.real() <= Real(0))
        throw ConvergenceConditionViolated(
            "very-well-poised series requires Re(2+2A-B-C-D-E-F) > 0, got " +
            std::to_string(static_cast<double>(w.real())));

    const Cplx s_exp = Real(1) + Real(2) * w;
    return detail::sum_with_tail<Real>(Cplx(Real(1), Real(0)), ratio, s_exp, budget);
}

} // namespace klrel
