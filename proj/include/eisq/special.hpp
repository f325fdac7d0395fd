#pragma once

// Special functions for the coefficient formulas: the upper incomplete gamma
// function at non-positive integer order, the Whittaker-type function
// W_s(v) = |v|^{-k/2} W_{sgn(v)k/2,(1-k)/2-s}(|v|) and its s-derivative at 0,
// harmonic numbers and digamma values.

#include <stdexcept>

#include "integers.hpp"
#include "quadrature.hpp"
#include "real.hpp"

namespace eisq {

// E1(x) = Gamma(0, x), x > 0: continued fraction for x >= 1 (modified Lentz),
// power series + log for x < 1.
inline Real exponential_integral_e1(const Real& x, unsigned bits) {
    if (x <= 0) throw std::invalid_argument("exponential_integral_e1: x must be positive");
    PrecisionGuard pg(bits);
    Real eps = pow2(-static_cast<long>(bits) - 8);
    if (x >= 1) {
        // E1(x) = e^{-x} / (x + 1 - 1/(x + 3 - 4/(x + 5 - 9/(...))))
        Real tiny = pow2(-static_cast<long>(8 * bits));
        Real f = tiny, C = f, D = 0;
        for (unsigned n = 1; n <= 100000; ++n) {
            Real a = (n == 1) ? Real(1) : Real(-(long(n) - 1) * (long(n) - 1));
            Real b = x + (2 * long(n) - 1);
            D = b + a * D;
            if (D == 0) D = tiny;
            C = b + a / C;
            if (C == 0) C = tiny;
            D = 1 / D;
            Real delta = C * D;
            f *= delta;
            if (abs(delta - 1) < eps) return exp(-x) * f;
        }
        throw std::runtime_error("exponential_integral_e1: continued fraction did not converge");
    }
    // E1(x) = -gamma - log x + sum_{n>=1} (-1)^{n+1} x^n / (n n!)
    Real sum = 0, term = 1;
    for (unsigned n = 1; n <= 100000; ++n) {
        term *= -x / long(n);
        Real add = -term / long(n);
        sum += add;
        if (abs(add) < eps * (1 + abs(sum))) return -real_euler_gamma() - log(x) + sum;
    }
    throw std::runtime_error("exponential_integral_e1: series did not converge");
}

// Gamma(order, x) for integer order <= 0, x > 0, by downward recurrence
// Gamma(a-1, x) = (Gamma(a, x) - x^{a-1} e^{-x}) / (a - 1) from Gamma(0, x).
inline Real incomplete_gamma_upper(long order, const Real& x, unsigned bits) {
    if (order > 0) throw std::invalid_argument("incomplete_gamma_upper: order must be <= 0");
    PrecisionGuard pg(bits + 16);
    Real g = exponential_integral_e1(x, bits + 16);
    Real emx = exp(-x);
    Real xpow = 1 / x;  // x^{a-1} at a = 0
    for (long a = 0; a > order; --a) {
        g = (g - xpow * emx) / (a - 1);
        xpow /= x;
    }
    return g;
}

// W_0(v): e^{-v/2} for v > 0, e^{-v/2} Gamma(1-k, |v|) for v < 0.
inline Real whittaker_W0(const Real& v, unsigned k, unsigned bits) {
    if (v == 0) throw std::invalid_argument("whittaker_W0: v must be nonzero");
    PrecisionGuard pg(bits);
    if (v > 0) return exp(-v / 2);
    return exp(-v / 2) * incomplete_gamma_upper(1 - long(k), -v, bits);
}

// d/ds W_s(v)|_{s=0} for v > 0 (Lemma 3.2):
//   e^{-v/2} sum_{j=1}^{k-1} binom(k-1, j) (j-1)! / v^j
inline Real whittaker_W0_prime(const Real& v, unsigned k, unsigned bits) {
    if (v <= 0) throw std::invalid_argument("whittaker_W0_prime: v must be positive");
    PrecisionGuard pg(bits);
    Real sum = 0, vpow = 1;
    for (unsigned j = 1; j <= k - 1; ++j) {
        vpow *= v;
        sum += make_real(Rat(binomial(k - 1, j) * factorial(j - 1))) / vpow;
    }
    return exp(-v / 2) * sum;
}

// W_s(v) for v > 0, s > -1, via the regularized integral
//   e^{-v/2} (1 + v^s/Gamma(s) int_0^inf e^{-vt} t^{s-1} ((1+t)^{s+k-1} - 1) dt),
// split at t = 1, with the tail mapped to (0,1) by t = 1/u.
inline Real whittaker_Ws(const Real& v, const Real& s, unsigned k, unsigned bits) {
    if (v <= 0) throw std::invalid_argument("whittaker_Ws: v must be positive");
    if (s <= -1) throw std::invalid_argument("whittaker_Ws: s must exceed -1");
    PrecisionGuard pg(bits);
    if (s == 0) return exp(-v / 2);
    Real ek = Real(long(k)) - 1 + s;  // exponent s+k-1
    auto inner = [&](const Real& t) -> Real {
        return exp(-v * t) * real_pow(t, s - 1) * (real_pow(1 + t, ek) - 1);
    };
    Real head = tanh_sinh_01([&](const Real& t) -> Real { return inner(t); }, bits).value;
    Real tail = tanh_sinh_01(
        [&](const Real& u) -> Real {
            Real t = 1 / u;
            return inner(t) * t * t;  // dt = du / u^2
        },
        bits).value;
    return exp(-v / 2) * (1 + real_pow(v, s) * (head + tail) / real_gamma(s));
}

// W_s(v) for v < 0 (passed as w = |v| > 0), 0 <= s < 1:
//   e^{-w/2} w^{1-k-s} / Gamma(1-s) int_0^inf e^{-wt} t^{-s} (1+t)^{-k-s} dt.
// Needed by the derivative-consistency probe c(m,s,v)/s -> c~(m,v) for m < 0,
// which evaluates at small positive s.
inline Real whittaker_Ws_negative(const Real& w, const Real& s, unsigned k, unsigned bits) {
    if (w <= 0) throw std::invalid_argument("whittaker_Ws_negative: |v| must be positive");
    if (s < 0 || s >= 1) throw std::invalid_argument("whittaker_Ws_negative: need 0 <= s < 1");
    PrecisionGuard pg(bits);
    Real ek = -Real(long(k)) - s;  // exponent -k-s
    auto inner = [&](const Real& t) -> Real {
        return exp(-w * t) * real_pow(t, -s) * real_pow(1 + t, ek);
    };
    Real head = tanh_sinh_01([&](const Real& t) -> Real { return inner(t); }, bits).value;
    Real tail = tanh_sinh_01(
        [&](const Real& u) -> Real {
            Real t = 1 / u;
            return inner(t) * t * t;
        },
        bits).value;
    return exp(-w / 2) * real_pow(w, 1 - long(k) - s) * (head + tail) / real_gamma(1 - s);
}

// H_n = sum_{j<=n} 1/j, exact.
inline Rat harmonic(unsigned n) {
    Rat h(0);
    for (unsigned j = 1; j <= n; ++j) h += Rat(1, j);
    return h;
}

// Gamma'(n)/Gamma(n) = H_{n-1} - gamma (Lemma 3.3).
inline Real digamma_ratio(unsigned n, unsigned bits) {
    if (n < 1) throw std::invalid_argument("digamma_ratio: n must be positive");
    PrecisionGuard pg(bits);
    return make_real(harmonic(n - 1)) - real_euler_gamma();
}

}  // namespace eisq
