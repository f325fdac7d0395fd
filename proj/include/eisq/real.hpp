#pragma once

// Arbitrary precision real layer on top of MPFR. All numeric operations in
// the library take a precision in bits; internally they run with guard bits
// on top of the requested precision (see PrecisionGuard).

#include <boost/multiprecision/mpfr.hpp>
#include <mpfr.h>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "integers.hpp"

namespace eisq {

using Real = boost::multiprecision::mpfr_float;

constexpr unsigned kGuardBits = 32;

inline unsigned bits_to_digits10(unsigned bits) {
    return static_cast<unsigned>(bits * 0.30103) + 4;
}

// Scoped working-precision override (precision is per-thread in MPFR/Boost).
class PrecisionGuard {
  public:
    explicit PrecisionGuard(unsigned bits)
        : saved_(Real::default_precision()) {
        Real::default_precision(bits_to_digits10(bits + kGuardBits));
    }
    ~PrecisionGuard() { Real::default_precision(saved_); }
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

  private:
    unsigned saved_;
};

inline Real make_real(const Rat& r) {
    return Real(rat_num(r)) / Real(rat_den(r));
}

inline Real real_pi() {
    Real r;
    mpfr_const_pi(r.backend().data(), MPFR_RNDN);
    return r;
}

// Euler-Mascheroni constant at working precision.
inline Real real_euler_gamma() {
    Real r;
    mpfr_const_euler(r.backend().data(), MPFR_RNDN);
    return r;
}

inline Real real_gamma(const Real& x) {
    Real r;
    mpfr_gamma(r.backend().data(), x.backend().data(), MPFR_RNDN);
    return r;
}

inline Real real_digamma(const Real& x) {
    Real r;
    mpfr_digamma(r.backend().data(), x.backend().data(), MPFR_RNDN);
    return r;
}

// Riemann zeta at real s != 1.
inline Real real_zeta(const Real& s) {
    Real r;
    mpfr_zeta(r.backend().data(), s.backend().data(), MPFR_RNDN);
    return r;
}

inline Real real_pow(const Real& b, const Real& e) {
    Real r;
    mpfr_pow(r.backend().data(), b.backend().data(), e.backend().data(), MPFR_RNDN);
    return r;
}

// 2^-bits as a Real, handy for tolerance targets
inline Real pow2(long e) {
    Real r = 1;
    mpfr_mul_2si(r.backend().data(), r.backend().data(), e, MPFR_RNDN);
    return r;
}

struct Complex {
    Real re, im;

    Complex() : re(0), im(0) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    explicit Complex(const Real& r) : re(r), im(0) {}

    Complex operator+(const Complex& o) const { return {re + o.re, im + o.im}; }
    Complex operator-(const Complex& o) const { return {re - o.re, im - o.im}; }
    Complex operator*(const Complex& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    Complex operator*(const Real& s) const { return {re * s, im * s}; }
    Complex operator/(const Complex& o) const {
        Real d = o.re * o.re + o.im * o.im;
        return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
    }
    Real abs() const { return sqrt(re * re + im * im); }

    Complex pow_int(unsigned k) const {
        Complex r(Real(1), Real(0)), x = *this;
        for (; k; k >>= 1) {
            if (k & 1) r = r * x;
            x = x * x;
        }
        return r;
    }
};

// e^{2 pi i m tau} for tau = u + iv
inline Complex cis_q(long m, const Real& u, const Real& v) {
    Real two_pi_m = 2 * real_pi() * m;
    Real decay = exp(-two_pi_m * v);
    return {decay * cos(two_pi_m * u), decay * sin(two_pi_m * u)};
}

}  // namespace eisq
