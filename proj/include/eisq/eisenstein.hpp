#pragma once

// Assembly of the final coefficient formulas: c(m,s,v) (Theorem 2.1 of the
// underlying results), the holomorphic q-expansion of E(tau,0), the
// derivative coefficients c~(m,v) of E'(tau,0), and truncated evaluation of
// the series on the upper half-plane.

#include <atomic>
#include <map>
#include <mutex>
#include <thread>
#include <vector>

#include "field.hpp"
#include "lfunctions.hpp"
#include "repnumbers.hpp"
#include "special.hpp"

namespace eisq {

struct EisensteinParams {
    RealQuadraticField field;
    FractionalIdeal ideal;
    unsigned k;          // even weight >= 2
    unsigned precision;  // bits

    EisensteinParams(RealQuadraticField f, FractionalIdeal a, unsigned weight,
                     unsigned bits = 128)
        : field(std::move(f)), ideal(std::move(a)), k(weight), precision(bits) {
        if (k < 2 || k % 2 != 0)
            throw std::invalid_argument("EisensteinParams: weight must be even and >= 2");
        if (field.D != ideal.disc())
            throw std::invalid_argument("EisensteinParams: field/ideal discriminant mismatch");
    }

    int i_pow_k() const { return (k / 2) % 2 == 0 ? 1 : -1; }  // i^k for even k
};

// Exact q-expansion of E(tau, 0) up to q^M.
struct QExpansion {
    unsigned k;
    std::vector<int> genus_chars;
    std::vector<Rat> coeffs;  // index m = 0..M

    long terms() const { return static_cast<long>(coeffs.size()) - 1; }
};

struct DerivativeCoefficient {
    Int m;
    Real value;  // c~(m, v) at the requested v

    // m > 0: value = prefactor * (bracket_const + sum(v_terms));
    // m < 0: value = prefactor * gamma_factor, gamma_factor = Gamma(1-k, 4pi|m|v);
    // m = 0: value = log(vD) + vpow_coeff * v^{1-k}.
    Real prefactor;
    Real bracket_const;
    std::vector<Real> v_terms;
    Real gamma_factor;
    Real vpow_coeff;
};

struct SeriesValue {
    Complex value;
    Real tail_bound;
};

// whether coefficient m vanishes identically by the genus-character criterion
inline bool plus_space_excluded(const RealQuadraticField& field,
                                const std::vector<int>& genus_chars, const Int& m) {
    for (size_t i = 0; i < field.prime_discs.size(); ++i) {
        if (m % abs(field.prime_discs[i]) == 0) continue;  // character value 0
        if (genus_chars[i] * kronecker(field.prime_discs[i], m) == -1) return true;
    }
    return false;
}

class EisensteinSeries {
  public:
    explicit EisensteinSeries(EisensteinParams params) : p_(std::move(params)) {
        genus_chars_ = genus_characters(p_.field, p_.ideal);
    }

    const EisensteinParams& params() const { return p_; }
    const std::vector<int>& genus_chars() const { return genus_chars_; }

    const SigmaPolynomial& sigma(const Int& m) const {
        std::lock_guard<std::mutex> lock(sigma_mutex_);
        auto it = sigma_cache_.find(m);
        if (it == sigma_cache_.end())
            it = sigma_cache_.emplace(m, sigma_polynomial(p_.field, p_.ideal, m)).first;
        return it->second;
    }

    // Theorem 2.1 coefficient c(m, s, v). Domain: any real s for m = 0;
    // s > -1 for m > 0; 0 <= s < 1 for m < 0 (negative-argument W_s branch).
    Real coefficient_s(const Int& m, const Real& s, const Real& v) const {
        if (v <= 0) throw std::invalid_argument("coefficient_s: v must be positive");
        PrecisionGuard pg(p_.precision);
        unsigned bits = p_.precision;
        const Int& D = p_.field.D;
        QuadraticCharacter chi(D);
        unsigned k = p_.k;

        if (m == 0) {
            Real first = real_pow(Real(D), s) * real_pow(v, s);
            if (s == 0) return first;  // 1/Gamma(s) kills the second term
            Real num = p_.i_pow_k() * real_pow(Real(2), 2 - Real(long(k)) - 2 * s) *
                       real_pi() * real_pow(v, 1 - long(k) - s);
            Real den = real_pow(Real(D), s + long(k) - Real(0.5));
            Real gammas = real_gamma(Real(long(k)) + 2 * s - 1) /
                          (real_gamma(Real(long(k)) + s) * real_gamma(s));
            Real ls = L_numeric(Real(long(k)) + 2 * s - 1, chi, bits) /
                      L_numeric(Real(long(k)) + 2 * s, chi, bits);
            return first + num / den * gammas * ls;
        }

        const SigmaPolynomial& sig = sigma(m);
        if (sig.is_zero()) return Real(0);
        Real w = 1 - 2 * s - long(k);  // sigma argument
        Real sig_val = sig.value_numeric(w, bits);
        Real common = 2 * real_pow(Real(D) / (4 * real_pi()), s) * cos(real_pi() * s) *
                      real_gamma(2 * s + long(k)) /
                      L_numeric(1 - 2 * s - long(k), chi, bits) *
                      real_pow(Real(abs(m)), Real(long(k)) / 2 - 1) * sig_val;
        Real vv = 4 * real_pi() * make_real(Rat(m)) * v;
        if (m > 0) return common / real_gamma(s + long(k)) * whittaker_Ws(vv, s, k, bits);
        // m < 0
        if (s == 0) return Real(0);  // pole of Gamma(s)
        return common / real_gamma(s) * whittaker_Ws_negative(-vv, s, k, bits);
    }

    // Theorem 3.1: exact coefficients 2 m^{k/2-1} sigma(a,m,1-k) / L(1-k, chi_D),
    // constant term 1.
    QExpansion holomorphic_expansion(long M) const {
        if (M < 1) throw std::invalid_argument("holomorphic_expansion: M must be >= 1");
        QuadraticCharacter chi(p_.field.D);
        Rat Lval = L_exact(1 - long(p_.k), chi);
        QExpansion exp;
        exp.k = p_.k;
        exp.genus_chars = genus_chars_;
        exp.coeffs.assign(M + 1, Rat(0));
        exp.coeffs[0] = 1;
        long w = 1 - long(p_.k);
        // exact rational path; fan out across m
        unsigned nthreads = std::max(1u, std::thread::hardware_concurrency());
        nthreads = std::min<unsigned>(nthreads, 8);
        std::vector<std::thread> pool;
        std::atomic<long> next{1};
        auto worker = [&]() {
            for (long m = next++; m <= M; m = next++) {
                // compute outside the cache lock, then publish
                SigmaPolynomial sig = sigma_polynomial(p_.field, p_.ideal, Int(m));
                if (!sig.is_zero())
                    exp.coeffs[m] =
                        Rat(2) * rpow_int(Rat(m), long(p_.k) / 2 - 1) * sig.value(w) / Lval;
                std::lock_guard<std::mutex> lock(sigma_mutex_);
                sigma_cache_.emplace(Int(m), std::move(sig));
            }
        };
        for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
        return exp;
    }

    // Theorem 3.4 / Corollaries: coefficients of E'(tau, 0).
    DerivativeCoefficient derivative_coefficient(const Int& m, const Real& v) const {
        if (v <= 0) throw std::invalid_argument("derivative_coefficient: v must be positive");
        PrecisionGuard pg(p_.precision);
        unsigned bits = p_.precision, k = p_.k;
        const Int& D = p_.field.D;
        QuadraticCharacter chi(D);
        DerivativeCoefficient out;
        out.m = m;

        if (m == 0) {
            if (k == 2) {
                // Corollary 4.3: log(vD) + h_K log(eps0) / (sqrt(D) v pi L(-1,chi))
                Real L1 = make_real(L_exact(-1, chi));
                out.vpow_coeff = make_real(Rat(p_.field.h_wide)) * log(p_.field.eps0.to_real()) /
                                 (sqrt(Real(D)) * real_pi() * L1);
            } else {
                out.vpow_coeff = p_.i_pow_k() * pow2(2 - long(k)) * real_pi() /
                                 ((long(k) - 1) * real_pow(Real(D), Real(long(k)) - Real(0.5))) *
                                 L_numeric(Real(long(k) - 1), chi, bits) /
                                 L_numeric(Real(long(k)), chi, bits);
            }
            out.value = log(v * Real(D)) + out.vpow_coeff * real_pow(v, 1 - long(k));
            return out;
        }

        const SigmaPolynomial& sig = sigma(m);
        if (sig.is_zero()) {
            // zero-sigma guard: coefficient is exactly 0, bracket unevaluated
            out.value = 0;
            out.prefactor = 0;
            return out;
        }
        Rat L1k = L_exact(1 - long(k), chi);
        Rat sig_val = sig.value(1 - long(k));
        Real mk = real_pow(Real(abs(m)), Real(long(k)) / 2 - 1);

        if (m < 0) {
            out.prefactor = 2 * make_real(Rat(factorial(k - 1))) / make_real(L1k) * mk *
                            make_real(sig_val);
            out.gamma_factor =
                incomplete_gamma_upper(1 - long(k), 4 * real_pi() * Real(abs(m)) * v, bits);
            out.value = out.prefactor * out.gamma_factor;
            return out;
        }

        // m > 0
        out.prefactor = 2 * mk * make_real(sig_val) / make_real(L1k);
        Real Lprime = L_derivative_at_negative(k, chi, bits);
        Real sig_prime = sig.derivative(1 - long(k), bits);
        out.bracket_const = log(Real(D) / (4 * real_pi())) + make_real(harmonic(k - 1)) -
                            real_euler_gamma() + 2 * Lprime / make_real(L1k) -
                            2 * sig_prime / make_real(sig_val);
        Real bracket = out.bracket_const;
        Real base = 4 * real_pi() * make_real(Rat(m)) * v;
        Real vpow = 1;
        for (unsigned j = 1; j <= k - 1; ++j) {
            vpow *= base;
            Real term = make_real(Rat(binomial(k - 1, j) * factorial(j - 1))) / vpow;
            out.v_terms.push_back(term);
            bracket += term;
        }
        out.value = out.prefactor * bracket;
        return out;
    }

  private:
    EisensteinParams p_;
    std::vector<int> genus_chars_;
    mutable std::map<Int, SigmaPolynomial> sigma_cache_;
    mutable std::mutex sigma_mutex_;
};

// sum_{m <= M} c(m) e^{2 pi i m tau} with a geometric tail bound obtained from
// |c(m)| <= C m^k (C fitted from the computed coefficients).
inline SeriesValue evaluate_series(const QExpansion& expansion, const Real& tau_re,
                                   const Real& tau_im, long M, unsigned bits) {
    if (tau_im <= 0) throw std::invalid_argument("evaluate_series: Im(tau) must be positive");
    if (M > expansion.terms()) throw std::invalid_argument("evaluate_series: M beyond expansion");
    PrecisionGuard pg(bits);
    Complex sum(Real(0), Real(0));
    Real C = 0;
    for (long m = 0; m <= M; ++m) {
        const Rat& c = expansion.coeffs[m];
        if (c == 0) continue;
        Real cr = make_real(c);
        sum = sum + cis_q(m, tau_re, tau_im) * cr;
        if (m >= 1) {
            Real scaled = abs(cr) / real_pow(Real(m), Real(long(expansion.k)));
            if (scaled > C) C = scaled;
        }
    }
    // tail: C sum_{m > M} m^k q^m, ratio r = ((M+2)/(M+1))^k e^{-2 pi Im tau}
    Real q = exp(-2 * real_pi() * tau_im);
    Real r = real_pow(Real(M + 2) / Real(M + 1), Real(long(expansion.k))) * q;
    if (r >= 1) throw std::runtime_error("evaluate_series: tail bound does not converge");
    Real head = C * real_pow(Real(M + 1), Real(long(expansion.k))) * real_pow(q, Real(M + 1));
    return {sum, head / (1 - r)};
}

}  // namespace eisq
