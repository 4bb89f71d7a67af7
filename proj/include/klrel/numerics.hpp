#pragma once

#include <cmath>
#include <complex>
#include <cstdlib>
#include <optional>
#include <string>

#include "klrel/errors.hpp"

namespace klrel {

// Guard radius around poles of Gamma (and zeros of sin(pi z)) inside which
// evaluation refuses to proceed.
inline constexpr double kEpsPole = 1e-6;

// A numerator parameter within this distance of a nonpositive integer makes
// a hypergeometric series terminate exactly.
inline constexpr double kTerminationEps = 1e-10;

namespace detail {

template <class Real>
Real pi_v() {
    return static_cast<Real>(3.14159265358979323846264338327950288L);
}

template <class Real>
Real ln2pi_half() { // 0.5*log(2*pi)
    return static_cast<Real>(0.91893853320467274178032973640561764L);
}

} // namespace detail

// Nearest integer to Re(z), as a long.
template <class Real>
long nearest_integer(const std::complex<Real>& z) {
    return std::lround(static_cast<double>(z.real()));
}

// Distance from z to the nearest integer on the real axis.
template <class Real>
Real integer_distance(const std::complex<Real>& z) {
    long m = nearest_integer(z);
    return std::abs(z - std::complex<Real>(static_cast<Real>(m), Real(0)));
}

// If z lies within eps of a nonpositive integer -m, returns m >= 0.
template <class Real>
std::optional<long> nearest_nonpositive_int(const std::complex<Real>& z, Real eps) {
    long m = nearest_integer(z);
    if (m > 0) return std::nullopt;
    if (std::abs(z - std::complex<Real>(static_cast<Real>(m), Real(0))) < eps)
        return -m;
    return std::nullopt;
}

// sin(pi z) with argument reduction: exact zeros at integers, and no loss of
// relative accuracy for large |Re z|.
template <class Real>
std::complex<Real> sinpi(const std::complex<Real>& z) {
    long n = nearest_integer(z);
    std::complex<Real> w = z - std::complex<Real>(static_cast<Real>(n), Real(0));
    std::complex<Real> s = std::sin(detail::pi_v<Real>() * w);
    return (n % 2 == 0) ? s : -s;
}

namespace detail {

// Lanczos approximation (g = 607/128, 15 coefficients) for the right half
// plane.
inline std::complex<double> lngamma_lanczos(const std::complex<double>& z) {
    constexpr double g_half = 607.0 / 128.0 + 0.5;
    static const double c[15] = {
        0.99999999999999709182,
        57.156235665862923517,
        -59.597960355475491248,
        14.136097974741747174,
        -0.49191381609762019978,
        0.33994649984811888699e-4,
        0.46523628927048575665e-4,
        -0.98374475304879564677e-4,
        0.15808870322491248884e-3,
        -0.21026444172410488319e-3,
        0.21743961811521264320e-3,
        -0.16431810653676389022e-3,
        0.84418223983852743293e-4,
        -0.26190838401581408670e-4,
        0.36899182659531622704e-5,
    };
    const std::complex<double> w = z - 1.0;
    std::complex<double> ag = c[0];
    for (int k = 1; k < 15; ++k) ag += c[k] / (w + static_cast<double>(k));
    const std::complex<double> t = w + g_half;
    return (w + 0.5) * std::log(t) - t + ln2pi_half<double>() + std::log(ag);
}

// Stirling series after shifting Re(z) above 12; coefficients are
// B_{2j} / (2j (2j-1)).
inline std::complex<long double> lngamma_stirling(const std::complex<long double>& z0) {
    static const long double b[9] = {
        1.0L / 12.0L,
        -1.0L / 360.0L,
        1.0L / 1260.0L,
        -1.0L / 1680.0L,
        1.0L / 1188.0L,
        -691.0L / 360360.0L,
        1.0L / 156.0L,
        -3617.0L / 122400.0L,
        43867.0L / 244188.0L,
    };
    std::complex<long double> z = z0;
    std::complex<long double> shift_log(0.0L, 0.0L);
    while (z.real() < 12.0L) {
        shift_log += std::log(z);
        z += 1.0L;
    }
    const std::complex<long double> zi = 1.0L / z;
    const std::complex<long double> zi2 = zi * zi;
    std::complex<long double> series(0.0L, 0.0L);
    std::complex<long double> p = zi;
    for (int j = 0; j < 9; ++j) {
        series += b[j] * p;
        p *= zi2;
    }
    return (z - 0.5L) * std::log(z) - z + ln2pi_half<long double>() + series - shift_log;
}

template <class Real>
std::complex<Real> lngamma_right_half(const std::complex<Real>& z);

template <>
inline std::complex<double> lngamma_right_half(const std::complex<double>& z) {
    return lngamma_lanczos(z);
}

template <>
inline std::complex<long double> lngamma_right_half(const std::complex<long double>& z) {
    return lngamma_stirling(z);
}

} // namespace detail

// log Gamma(z). Uses reflection for Re(z) < 0.5 and refuses arguments within
// kEpsPole of a nonpositive integer. The result may differ from the standard
// continuous branch by a multiple of 2 pi i; exp() of any sum of these values
// is exact, which is all the series code relies on.
template <class Real>
std::complex<Real> lngamma(const std::complex<Real>& z) {
    if (z.real() >= Real(0.5)) return detail::lngamma_right_half<Real>(z);
    if (nearest_nonpositive_int(z, static_cast<Real>(kEpsPole)))
        throw PoleProximity("lngamma argument within pole guard of a nonpositive integer");
    // Gamma(z) Gamma(1-z) = pi / sin(pi z)
    const std::complex<Real> s = sinpi(z);
    return std::log(detail::pi_v<Real>()) - std::log(s) -
           detail::lngamma_right_half<Real>(std::complex<Real>(Real(1), Real(0)) - z);
}

// 1 / Gamma(z), entire: exact zeros at nonpositive integers, no pole guard.
template <class Real>
std::complex<Real> recip_gamma(const std::complex<Real>& z) {
    if (z.real() >= Real(0.5))
        return std::exp(-detail::lngamma_right_half<Real>(z));
    // 1/Gamma(z) = sin(pi z) Gamma(1-z) / pi; sinpi vanishes identically at
    // the nonpositive integers, so this branch needs no guard.
    const std::complex<Real> one(Real(1), Real(0));
    return sinpi(z) *
           std::exp(detail::lngamma_right_half<Real>(one - z)) / detail::pi_v<Real>();
}

// Gamma(z) via exp(lngamma); inherits the pole guard.
template <class Real>
std::complex<Real> gamma_fn(const std::complex<Real>& z) {
    return std::exp(lngamma(z));
}

// Pochhammer symbol (nu)_k as a direct product; exact zeros when nu is a
// nonpositive integer exceeded by k.
template <class Real>
std::complex<Real> pochhammer(const std::complex<Real>& nu, long k) {
    std::complex<Real> p(Real(1), Real(0));
    for (long j = 0; j < k; ++j) p *= nu + static_cast<Real>(j);
    return p;
}

} // namespace klrel
