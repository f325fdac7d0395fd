#pragma once

// Representation numbers N_{gamma,n}(b) and G^b(a,m,0), their local Euler
// structure, and the reconstruction of sigma(a,m,s) as a finite Dirichlet
// polynomial certified from truncated local series.
//
// Everything reduces to T(M) := #{(z1,z2) in (Z/M)^2 : Ftilde(z) = m (mod M)}
// for the diagonal-coordinate form Ftilde of the ideal: the quotient
// a d^-1 / b a has coordinates (z1 mod b, z2 mod bD) and the congruence
// depends on z1 only mod b, so G^b = T(bD)/D, and T is multiplicative.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "field.hpp"
#include "lfunctions.hpp"
#include "real.hpp"

namespace eisq {

constexpr long long kDefaultWorkBudget = 40'000'000;

// N_{gamma,n}(b) = #{x in a/ba : N(x-gamma)/N(a) + n = 0 (mod b)}, brute force.
inline Int count_N(const FractionalIdeal& ideal, const QuotientElement& gamma,
                   const Rat& n, const Int& b) {
    // the residue of q(x-gamma) mod 1 is independent of x; screen it once
    Rat probe = gamma.rep.norm() / ideal.norm() + n;
    if (rat_den(probe) != 1) return 0;
    Int count = 0;
    FieldElement e1 = ideal.basis1(), e2 = ideal.basis2();
    for (Int i = 0; i < b; ++i) {
        for (Int j = 0; j < b; ++j) {
            FieldElement x = FieldElement(ideal.disc(), 2 * i, 0, 1) * e1 +
                             FieldElement(ideal.disc(), 2 * j, 0, 1) * e2;
            Rat q = (x - gamma.rep).norm() / ideal.norm() + n;
            if (rat_den(q) == 1 && rat_num(q) % b == 0) ++count;
        }
    }
    return count;
}

// G^b(a,m,0) by direct enumeration of the D b^2 cosets; cost D b^2.
inline Int count_G(const FractionalIdeal& ideal, const Int& m, const Int& b,
                   long long work_budget = kDefaultWorkBudget) {
    const Int& D = ideal.disc();
    if (b < 1) throw std::invalid_argument("count_G: b must be positive");
    if (D * b * b > work_budget)
        throw std::runtime_error("count_G: enumeration exceeds work budget");
    const auto& g = ideal.quotient_geometry();
    long long fa = static_cast<long long>(g.fa), fb = static_cast<long long>(g.fb),
              fc = static_cast<long long>(g.fc);
    long long bl = static_cast<long long>(b), Dl = static_cast<long long>(D);
    long long mod = bl * Dl;
    long long mr = ((static_cast<long long>(m) % mod) + mod) % mod;
    Int count = 0;
    for (long long z1 = 0; z1 < bl; ++z1) {
        for (long long z2 = 0; z2 < mod; ++z2) {
            long long v = (fa % mod) * ((z1 * z1) % mod) % mod +
                          (fb % mod) * ((z1 * z2) % mod) % mod +
                          (fc % mod) * ((z2 * z2) % mod) % mod;
            if (((v - mr) % mod + mod) % mod == 0) ++count;
        }
    }
    return count;
}

namespace detail {

// Solutions of A x^2 + B xy + C y^2 + l1 x + l2 y + e0 = 0 in (Z/p^mu)^2,
// by Hensel lifting with explicit handling of singular points.
inline Int count_quadratic_congruence(Int A, Int B, Int C, Int l1, Int l2, Int e0,
                                      const Int& p, unsigned mu) {
    if (mu == 0) return 1;
    Int pmu = ipow(p, mu);
    auto red = [&](Int t) { return ((t % pmu) + pmu) % pmu; };
    A = red(A); B = red(B); C = red(C); l1 = red(l1); l2 = red(l2); e0 = red(e0);
    Int total = 0;
    Int lift_smooth = ipow(p, mu - 1);
    for (Int x = 0; x < p; ++x) {
        for (Int y = 0; y < p; ++y) {
            Int fv = A * x * x + B * x * y + C * y * y + l1 * x + l2 * y + e0;
            if (fv % p != 0) continue;
            Int gx = 2 * A * x + B * y + l1;
            Int gy = B * x + 2 * C * y + l2;
            if (gx % p != 0 || gy % p != 0) {
                total += lift_smooth;  // smooth point: unique Hensel lift per level
            } else if (mu == 1) {
                total += 1;
            } else if (fv % (p * p) == 0) {
                // x = x0 + p x', y = y0 + p y': divide the equation by p^2
                total += p * p *
                         count_quadratic_congruence(A, B, C, gx / p, gy / p,
                                                    fv / (p * p), p, mu - 2);
            }
        }
    }
    return total;
}

// T(p^e) for an odd prime p not dividing the discriminant of the form:
// closed-form recursion using only chi = (disc/p). Valid for any m (incl. 0).
inline Int count_nondegenerate(const Int& p, unsigned e, const Int& m, int chi) {
    if (e == 0) return 1;
    bool m_div = (m % p == 0);
    Int prim1 = m_div ? Int((p - 1) * (1 + chi)) : Int(p - chi);
    Int total = ipow(p, e - 1) * prim1;
    if (e <= 2) {
        if (m % ipow(p, e) == 0) total += ipow(p, 2 * (e - 1));
    } else if (m % (p * p) == 0) {
        total += p * p * count_nondegenerate(p, e - 2, m / (p * p), chi);
    }
    return total;
}

inline Int count_T_local(const FractionalIdeal& ideal, const Int& m, const Int& p,
                         unsigned e) {
    if (e == 0) return 1;
    const Int& D = ideal.disc();
    const auto& g = ideal.quotient_geometry();
    if (p != 2 && D % p != 0)
        return count_nondegenerate(p, e, m, kronecker(D, p));
    return count_quadratic_congruence(g.fa, g.fb, g.fc, 0, 0, -m, p, e);
}

}  // namespace detail

// G^b(a,m,0) via the multiplicative splitting G^b = T(bD)/D.
inline Int count_G_fast(const FractionalIdeal& ideal, const Int& m, const Int& b) {
    if (b < 1) throw std::invalid_argument("count_G_fast: b must be positive");
    const Int& D = ideal.disc();
    std::vector<Int> primes = prime_factors(b * D);
    Int t = 1;
    for (const Int& p : primes) {
        unsigned e = static_cast<unsigned>(valuation(b * D, p));
        t *= detail::count_T_local(ideal, m, p, e);
    }
    if (t % D != 0) throw std::logic_error("count_G_fast: local product not divisible by D");
    return t / D;
}

// sigma(a,m,w) = |m|^{(1-w)/2} sum_j coeff_j base_j^{w-1}, a finite Dirichlet
// polynomial; the zero polynomial when all counts vanish.
class SigmaPolynomial {
  public:
    struct Term {
        Rat coeff;
        Int base;  // positive integer
    };

    SigmaPolynomial(Int m, std::vector<Term> terms)
        : m_(std::move(m)), terms_(std::move(terms)) {
        if (m_ == 0) throw std::invalid_argument("SigmaPolynomial: m must be nonzero");
        std::sort(terms_.begin(), terms_.end(),
                  [](const Term& a, const Term& b) { return a.base < b.base; });
    }

    const Int& m() const { return m_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // exact value at odd integer w
    Rat value(long w) const {
        if (w % 2 == 0)
            throw std::invalid_argument(
                "SigmaPolynomial::value: even w has no exact value; use value_numeric");
        Rat pre = rpow_int(Rat(abs(m_)), (1 - w) / 2);
        Rat sum(0);
        for (const auto& t : terms_) sum += t.coeff * rpow_int(Rat(t.base), w - 1);
        return pre * sum;
    }

    Real value_numeric(const Real& w, unsigned bits) const {
        PrecisionGuard pg(bits);
        Real sum = 0;
        for (const auto& t : terms_) sum += make_real(t.coeff) * real_pow(Real(t.base), w - 1);
        return real_pow(Real(abs(m_)), (1 - w) / 2) * sum;
    }

    // d/dw sigma(a,m,w) at integer w:
    //   |m|^{(1-w)/2} sum_j coeff_j base_j^{w-1} log(base_j) - (log|m|/2) sigma(w)
    Real derivative(long w, unsigned bits) const {
        PrecisionGuard pg(bits);
        Real pre = real_pow(Real(abs(m_)), Real((1.0 - w) / 2));
        Real sum = 0;
        for (const auto& t : terms_)
            sum += make_real(t.coeff) * real_pow(Real(t.base), Real(w - 1.0)) * log(Real(t.base));
        Real val = (w % 2 != 0) ? make_real(value(w)) : value_numeric(Real(double(w)), bits);
        return pre * sum - log(Real(abs(m_))) / 2 * val;
    }

  private:
    Int m_;
    std::vector<Term> terms_;
};

// sigma(a,m,.) from truncated local series with a termination certificate:
// for each p | 2mD, Lambda_p(X) = sum_nu G^{p^nu} X^nu up to V = v_p(mD)+3;
// P_p = Lambda_p (1-pX)/(1-chi_D(p)X) must truncate to degree <= v_p(mD)+1.
inline SigmaPolynomial sigma_polynomial(const RealQuadraticField& field,
                                        const FractionalIdeal& ideal, const Int& m) {
    if (m == 0) throw std::invalid_argument("sigma_polynomial: m must be nonzero");
    const Int& D = field.D;
    Int G1 = count_G_fast(ideal, m, 1);
    if (G1 == 0) return SigmaPolynomial(m, {});

    QuadraticCharacter chi(D);
    std::vector<Int> primes = prime_factors(2 * m * D);
    std::vector<SigmaPolynomial::Term> terms{{Rat(G1), Int(1)}};
    for (const Int& p : primes) {
        unsigned vpmD = static_cast<unsigned>(valuation(m * D, p));
        unsigned V = vpmD + 3;
        std::vector<Int> lambda(V + 1);
        for (unsigned nu = 0; nu <= V; ++nu)
            lambda[nu] = count_G_fast(ideal, m, ipow(p, nu));
        // multiply by (1 - pX), then divide by (1 - chi(p) X), truncated
        std::vector<Int> c(V + 1), d(V + 1);
        int chip = chi(p);
        for (unsigned nu = 0; nu <= V; ++nu) {
            c[nu] = lambda[nu] - (nu > 0 ? p * lambda[nu - 1] : Int(0));
            d[nu] = c[nu] + (nu > 0 ? chip * d[nu - 1] : Int(0));
        }
        for (unsigned nu = vpmD + 2; nu <= V; ++nu) {
            if (d[nu] != 0)
                throw std::runtime_error("sigma_polynomial: local factor not polynomial (p=" +
                                         p.str() + ", m=" + m.str() + ")");
        }
        if (d[0] != G1) throw std::logic_error("sigma_polynomial: constant term mismatch");
        // fold the normalized local polynomial d(X)/G1 into the running product
        std::vector<SigmaPolynomial::Term> next;
        for (const auto& t : terms) {
            Int ppow = 1;
            for (unsigned nu = 0; nu <= vpmD + 1; ++nu) {
                if (d[nu] != 0)
                    next.push_back({t.coeff * Rat(d[nu], G1), t.base * ppow});
                ppow *= p;
            }
        }
        terms = std::move(next);
    }
    return SigmaPolynomial(m, std::move(terms));
}

// Truncated check of sum_b G^b(a,0,0) b^{-s} = zeta(s-1) L(s-1,chi_D)/L(s,chi_D).
struct SeriesCheck {
    Real lhs, rhs, tail_bound;
};

inline SeriesCheck m_zero_series_check(const RealQuadraticField& field,
                                       const FractionalIdeal& ideal, const Real& s0,
                                       const Int& B, unsigned bits = 96) {
    if (s0 <= 3) throw std::invalid_argument("m_zero_series_check: need s0 > 3");
    PrecisionGuard pg(bits);
    Real lhs = 0;
    for (Int b = 1; b <= B; ++b)
        lhs += make_real(Rat(count_G_fast(ideal, Int(0), b))) * real_pow(Real(b), -s0);
    QuadraticCharacter chi(field.D);
    Real rhs = real_zeta(s0 - 1) * L_numeric(s0 - 1, chi, bits) / L_numeric(s0, chi, bits);
    // G^b <= D b^2, so the tail is below D B^{3-s0}/(s0-3)
    Real tail = Real(field.D) * real_pow(Real(B), 3 - s0) / (s0 - 3);
    return {lhs, rhs, tail};
}

}  // namespace eisq
