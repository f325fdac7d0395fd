#pragma once

// Dirichlet L-functions of real quadratic (Kronecker) characters: exact
// rational values at non-positive integers through generalized Bernoulli
// numbers, high precision values elsewhere through Hurwitz zeta functions
// with Euler-Maclaurin tails, and L'(1-k) through the completed functional
// equation.

#include <stdexcept>

#include "bernoulli.hpp"
#include "integers.hpp"
#include "real.hpp"

namespace eisq {

// chi(n) = kronecker(disc, n), disc a fundamental discriminant (possibly a
// negative prime discriminant p*).
class QuadraticCharacter {
  public:
    explicit QuadraticCharacter(Int disc) : disc_(std::move(disc)) {
        if (disc_ == 0 || disc_ == 1)
            throw std::invalid_argument("QuadraticCharacter: trivial discriminant");
    }
    const Int& disc() const { return disc_; }
    Int modulus() const { return abs(disc_); }
    bool even() const { return disc_ > 0; }  // chi(-1) = sign of disc
    int operator()(const Int& n) const { return kronecker(disc_, n); }

  private:
    Int disc_;
};

// B_{n,chi} = f^{n-1} sum_{a=1}^{f} chi(a) B_n(a/f)
inline Rat gen_bernoulli(unsigned n, const QuadraticCharacter& chi) {
    if (n < 1) throw std::invalid_argument("gen_bernoulli: n must be >= 1");
    Int f = chi.modulus();
    Rat sum(0);
    for (Int a = 1; a <= f; ++a) {
        int c = chi(a);
        if (c == 0) continue;
        sum += Rat(c) * bernoulli_poly(n, Rat(a, f));
    }
    return rpow_int(Rat(f), long(n) - 1) * sum;
}

// L(point, chi) for integer point <= 0, exact: L(1-n) = -B_{n,chi}/n.
inline Rat L_exact(long point, const QuadraticCharacter& chi) {
    if (point > 0) throw std::invalid_argument("L_exact: point must be <= 0");
    unsigned n = static_cast<unsigned>(1 - point);
    return -gen_bernoulli(n, chi) / Rat(n);
}

// ---- Hurwitz zeta via Euler-Maclaurin -------------------------------------

struct HurwitzPair {
    Real value;
    Real ds;  // d/ds, only populated when requested
};

// zeta(s, x) for real s != 1, 0 < x <= 1, with optional s-derivative.
// Throws if the requested precision is unattainable within the budget.
inline HurwitzPair hurwitz_zeta_pair(const Real& s, const Real& x, unsigned bits,
                                     bool want_ds) {
    if (x <= 0 || x > 1) throw std::invalid_argument("hurwitz_zeta_pair: need 0 < x <= 1");
    Real target = pow2(-static_cast<long>(bits));
    long N = std::max<long>(16, static_cast<long>(bits / 3));
    long abs_s = static_cast<long>(std::abs(static_cast<double>(s)));
    N += abs_s;

    for (int attempt = 0; attempt < 8; ++attempt, N *= 2) {
        Real val = 0, dval = 0;
        for (long j = 0; j < N; ++j) {
            Real base = x + j;
            Real t = real_pow(base, -s);
            val += t;
            if (want_ds) dval -= log(base) * t;
        }
        Real y = x + N;
        Real logy = log(y);
        Real ypow = real_pow(y, 1 - s);  // y^{1-s}
        val += ypow / (s - 1);
        if (want_ds) dval += ypow * (-logy / (s - 1) - 1 / ((s - 1) * (s - 1)));
        Real ys = ypow / y;  // y^{-s}
        val += ys / 2;
        if (want_ds) dval -= logy * ys / 2;

        // tail: sum_r B_{2r}/(2r)! (s)_{2r-1} y^{-s-2r+1}
        Real poch = 1, dpoch = 0;  // (s)_0 with derivative
        Real ypw = ys * y;         // y^{-s-2r+1}, starts at y^{1-s}
        bool converged = false;
        Real prev_mag = -1;
        for (unsigned r = 1; r <= 160; ++r) {
            // extend pochhammer from length 2r-3 to 2r-1 factors
            for (long i = (r == 1 ? 0 : 2 * long(r) - 3); i < 2 * long(r) - 1; ++i) {
                dpoch = dpoch * (s + i) + poch;
                poch = poch * (s + i);
            }
            ypw /= y * y;
            Real c = make_real(bernoulli_number(2 * r) / Rat(factorial(2 * r)));
            Real term = c * poch * ypw;
            Real dterm = want_ds ? c * ypw * (dpoch - poch * logy) : Real(0);
            Real mag = abs(term) + abs(dterm);
            if (prev_mag >= 0 && mag > prev_mag) break;  // divergence onset: restart with larger N
            prev_mag = mag;
            val += term;
            if (want_ds) dval += dterm;
            if (mag <= target / 4) { converged = true; break; }
        }
        if (converged) return {val, dval};
    }
    throw std::runtime_error("hurwitz_zeta_pair: precision unattainable within budget");
}

inline Real hurwitz_zeta(const Real& s, const Real& x, unsigned bits) {
    return hurwitz_zeta_pair(s, x, bits, false).value;
}

// ---- L-values --------------------------------------------------------------

// L(1, chi) for even chi: -(1/sqrt(f)) sum chi(a) log(2 sin(pi a / f)).
inline Real L_at_one(const QuadraticCharacter& chi, unsigned bits) {
    if (!chi.even()) throw std::invalid_argument("L_at_one: odd character unsupported");
    PrecisionGuard pg(bits);
    Int f = chi.modulus();
    Real pi = real_pi(), sum = 0;
    for (Int a = 1; a < f; ++a) {
        int c = chi(a);
        if (c == 0) continue;
        sum += c * log(2 * sin(pi * Real(a) / Real(f)));
    }
    return -sum / sqrt(Real(f));
}

// Direct branch: L(s, chi) = f^{-s} sum_a chi(a) zeta(s, a/f); any real s != 1.
inline Real L_numeric(const Real& s, const QuadraticCharacter& chi, unsigned bits) {
    PrecisionGuard pg(bits);
    if (s == 1) return L_at_one(chi, bits);
    Int f = chi.modulus();
    Real sum = 0;
    for (Int a = 1; a < f; ++a) {
        int c = chi(a);
        if (c == 0) continue;
        sum += c * hurwitz_zeta(s, Real(a) / Real(f), bits + 8);
    }
    return real_pow(Real(f), -s) * sum;
}

// d/ds L(s, chi) at real s != 1 by termwise differentiation.
inline Real L_numeric_ds(const Real& s, const QuadraticCharacter& chi, unsigned bits) {
    PrecisionGuard pg(bits);
    Int f = chi.modulus();
    Real sum = 0, dsum = 0;
    for (Int a = 1; a < f; ++a) {
        int c = chi(a);
        if (c == 0) continue;
        auto hp = hurwitz_zeta_pair(s, Real(a) / Real(f), bits + 8, true);
        sum += c * hp.value;
        dsum += c * hp.ds;
    }
    Real fpow = real_pow(Real(f), -s);
    return fpow * dsum - log(Real(f)) * fpow * sum;
}

// Reflection branch for even chi of conductor D = modulus:
// L(1-w, chi) = (pi/D)^{1/2-w} Gamma(w/2)/Gamma((1-w)/2) L(w, chi).
inline Real L_reflected(const Real& w, const QuadraticCharacter& chi, unsigned bits) {
    if (!chi.even()) throw std::invalid_argument("L_reflected: odd character unsupported");
    PrecisionGuard pg(bits);
    // trivial zeros: Gamma((1-w)/2) poles at odd positive integer w
    if (w == floor(w)) {
        long wi = static_cast<long>(w);
        if (wi >= 1 && wi % 2 == 1) return Real(0);
    }
    Real D(chi.modulus());
    Real pi = real_pi();
    Real ratio = real_gamma(w / 2) / real_gamma((1 - w) / 2);
    return real_pow(pi / D, Real(0.5) - w) * ratio * L_numeric(w, chi, bits + 8);
}

// L'(1-k, chi) for even k >= 2, even chi, by logarithmic differentiation of
// the completed functional equation:
//   L'(1-w) = -L(1-w) [ -log(pi/D) + psi(w/2)/2 + psi((1-w)/2)/2 + L'(w)/L(w) ]
inline Real L_derivative_at_negative(unsigned k, const QuadraticCharacter& chi,
                                     unsigned bits) {
    if (k < 2 || k % 2 != 0)
        throw std::invalid_argument("L_derivative_at_negative: k must be even >= 2");
    if (!chi.even())
        throw std::invalid_argument("L_derivative_at_negative: odd character unsupported");
    PrecisionGuard pg(bits);
    Real D(chi.modulus());
    Real w(k);
    Real Lw = L_numeric(w, chi, bits + 8);
    Real dLw = L_numeric_ds(w, chi, bits + 8);
    Real L1k = make_real(L_exact(1 - long(k), chi));
    Real bracket = -log(real_pi() / D) + real_digamma(w / 2) / 2 +
                   real_digamma((1 - w) / 2) / 2 + dLw / Lw;
    return -L1k * bracket;
}

}  // namespace eisq
