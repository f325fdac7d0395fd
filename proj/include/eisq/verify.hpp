#pragma once

// Executable checks of the structural claims: modularity of the specialized
// series, Dirichlet-series identities for the counts G^b, the class number
// formula, and end-to-end consistency of the s-derivative. Every expected
// value is produced by a second independent code path inside the library.

#include <algorithm>
#include <chrono>
#include <sstream>
#include <string>
#include <vector>

#include "eisenstein.hpp"

namespace eisq {

enum class CheckStatus { pass, fail, inconclusive };

inline const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        default: return "inconclusive";
    }
}

struct CheckReport {
    std::string name;
    std::string params;
    CheckStatus status = CheckStatus::inconclusive;
    Real discrepancy;  // relative, against the independently computed side
    Real tolerance;
    double runtime_seconds = 0;
};

namespace detail {

class Stopwatch {
  public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
    }

  private:
    std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

inline CheckStatus verdict(const Real& disc, const Real& tol) {
    return disc <= tol ? CheckStatus::pass : CheckStatus::fail;
}

}  // namespace detail

struct GammaMatrix {
    Int a, b, c, d;
};

// E(gamma tau) = chi_D(d) (c tau + d)^k E(tau) for gamma in Gamma_0(D),
// evaluated through the truncated q-expansion at both points.
inline CheckReport check_modularity(const RealQuadraticField& field,
                                    const FractionalIdeal& ideal, unsigned k, long M,
                                    const Real& tau_re, const Real& tau_im,
                                    const GammaMatrix& g, unsigned bits = 192) {
    if (g.a * g.d - g.b * g.c != 1)
        throw std::invalid_argument("check_modularity: gamma must have determinant 1");
    if (g.c % field.D != 0)
        throw std::invalid_argument("check_modularity: gamma must lie in Gamma_0(D)");
    detail::Stopwatch timer;
    CheckReport rep;
    rep.name = "modularity";
    {
        std::ostringstream os;
        os << "D=" << field.D << " ideal=" << ideal.str() << " k=" << k << " M=" << M
           << " gamma=[[" << g.a << "," << g.b << "],[" << g.c << "," << g.d << "]]";
        rep.params = os.str();
    }
    PrecisionGuard pg(bits);
    rep.tolerance = Real("1e-6");

    EisensteinSeries E(EisensteinParams(field, ideal, k, bits));
    auto qe = E.holomorphic_expansion(M);

    Complex tau(tau_re, tau_im);
    Complex cz(make_real(Rat(g.c)), Real(0)), dz(make_real(Rat(g.d)), Real(0));
    Complex az(make_real(Rat(g.a)), Real(0)), bz(make_real(Rat(g.b)), Real(0));
    Complex denom = cz * tau + dz;
    Complex gtau = (az * tau + bz) / denom;

    auto lhs = evaluate_series(qe, gtau.re, gtau.im, M, bits);
    auto rhs = evaluate_series(qe, tau_re, tau_im, M, bits);
    int chi_d = kronecker(field.D, g.d);
    Complex expect = denom.pow_int(k) * rhs.value * Real(chi_d);

    Real scale = 1 + expect.abs();
    rep.discrepancy = (lhs.value - expect).abs() / scale;
    // both truncation tails must be negligible for a verdict
    Real tail = (lhs.tail_bound + rhs.tail_bound * denom.pow_int(k).abs()) / scale;
    if (tail > rep.tolerance / 4)
        rep.status = CheckStatus::inconclusive;
    else
        rep.status = detail::verdict(rep.discrepancy, rep.tolerance);
    rep.runtime_seconds = timer.seconds();
    return rep;
}

// sum_b G^b b^{-s0} against the closed forms
//   m != 0:  |m|^{-s0/2} zeta(s0-1)/L(s0,chi_D) sigma(a, m, 1-s0)
//   m == 0:  zeta(s0-1) L(s0-1,chi_D)/L(s0,chi_D) (times the finite gamma-sum),
// truncation tail sum_{b>B} D b^{2-s0}.
inline CheckReport check_dirichlet_identity(const RealQuadraticField& field,
                                            const FractionalIdeal& ideal, const Int& m,
                                            long s0, const Int& B, unsigned bits = 128) {
    if (s0 < 4) throw std::invalid_argument("check_dirichlet_identity: s0 must be >= 4");
    if (B < 100) throw std::invalid_argument("check_dirichlet_identity: B must be >= 100");
    detail::Stopwatch timer;
    CheckReport rep;
    rep.name = "dirichlet";
    {
        std::ostringstream os;
        os << "D=" << field.D << " ideal=" << ideal.str() << " m=" << m << " s0=" << s0
           << " B=" << B;
        rep.params = os.str();
    }
    PrecisionGuard pg(bits);

    Real lhs, rhs, tail;
    if (m == 0) {
        auto chk = m_zero_series_check(field, ideal, Real(s0), B);
        lhs = chk.lhs;
        rhs = chk.rhs;
        tail = chk.tail_bound;
    } else {
        QuadraticCharacter chi(field.D);
        lhs = 0;
        for (Int b = 1; b <= B; ++b)
            lhs += make_real(Rat(count_G_fast(ideal, m, b))) * real_pow(Real(b), Real(-s0));
        auto sig = sigma_polynomial(field, ideal, m);
        Real sig_val = sig.is_zero() ? Real(0) : sig.value_numeric(Real(1 - s0), bits);
        rhs = real_pow(make_real(Rat(abs(m))), -Real(s0) / 2) * real_zeta(Real(s0 - 1)) /
              L_numeric(Real(s0), chi, bits) * sig_val;
        // sum_{b>B} D b^{2-s0} <= D B^{3-s0}/(s0-3)
        tail = Real(field.D) * real_pow(Real(B), Real(3 - s0)) / (s0 - 3);
    }
    Real scale = 1 + abs(rhs);
    rep.discrepancy = abs(lhs - rhs) / scale;
    Real rel_tail = tail / scale;
    rep.tolerance = rel_tail > Real("1e-3") ? rel_tail : Real("1e-3");
    rep.status = detail::verdict(rep.discrepancy, rep.tolerance);
    rep.runtime_seconds = timer.seconds();
    return rep;
}

// h_wide (form counting) against sqrt(D) L(1,chi_D) / (2 log eps0)
inline CheckReport check_class_number_formula(const RealQuadraticField& field,
                                              unsigned bits = 128) {
    detail::Stopwatch timer;
    CheckReport rep;
    rep.name = "class_number";
    rep.params = "D=" + field.D.str();
    PrecisionGuard pg(bits);
    QuadraticCharacter chi(field.D);
    Real analytic = sqrt(Real(field.D)) * L_at_one(chi, bits) / (2 * log(field.eps0.to_real()));
    rep.discrepancy = abs(analytic - make_real(Rat(field.h_wide)));
    rep.tolerance = Real("1e-10");
    rep.status = detail::verdict(rep.discrepancy, rep.tolerance);
    rep.runtime_seconds = timer.seconds();
    return rep;
}

// d/ds c(m,s,v)|_{s=0} against the closed forms of E'(tau,0):
//   m >= 1: central finite difference of the generic-s coefficient
//   m <= -1: c(m,s,v)/s -> c~(m,v) e^{2 pi |m| v} as s -> 0+ (c(m,0,v) = 0)
//   m == 0: central finite difference of the closed m=0 formula
inline CheckReport check_derivative_consistency(const RealQuadraticField& field,
                                                const FractionalIdeal& ideal, unsigned k,
                                                const Int& m, const Real& v,
                                                const Real& step, unsigned bits = 200) {
    detail::Stopwatch timer;
    CheckReport rep;
    rep.name = "derivative";
    {
        std::ostringstream os;
        os << "D=" << field.D << " ideal=" << ideal.str() << " k=" << k << " m=" << m
           << " v=" << v.convert_to<double>();
        rep.params = os.str();
    }
    PrecisionGuard pg(bits);
    rep.tolerance = Real("1e-6");
    try {
        EisensteinSeries E(EisensteinParams(field, ideal, k, bits));
        auto dc = E.derivative_coefficient(m, v);
        Real probe, expect;
        if (m == 0) {
            expect = dc.value;
            probe = (E.coefficient_s(m, step, v) - E.coefficient_s(m, -step, v)) / (2 * step);
        } else if (m > 0) {
            expect = dc.value * exp(-2 * real_pi() * make_real(Rat(m)) * v);
            probe = (E.coefficient_s(m, step, v) - E.coefficient_s(m, -step, v)) / (2 * step);
        } else {
            expect = dc.value * exp(2 * real_pi() * make_real(Rat(-m)) * v);
            // one-sided probe on (0, step]; first-order Richardson in s
            Real s1 = step, s2 = step / 2;
            Real p1 = E.coefficient_s(m, s1, v) / s1;
            Real p2 = E.coefficient_s(m, s2, v) / s2;
            probe = 2 * p2 - p1;
        }
        rep.discrepancy = abs(probe - expect) / (1 + abs(expect));
        rep.status = detail::verdict(rep.discrepancy, rep.tolerance);
    } catch (const std::runtime_error&) {
        rep.status = CheckStatus::inconclusive;  // precision/budget failure, not a refutation
        rep.discrepancy = std::numeric_limits<double>::quiet_NaN();
    }
    rep.runtime_seconds = timer.seconds();
    return rep;
}

// Named checks over the default grid D in {5,13,65,105}, k in {2,4}.
// budget bounds the expansion length used by the modularity checks.
inline std::vector<CheckReport> run_suite(const std::vector<std::string>& selection,
                                          long budget = 2000) {
    static const std::vector<std::string> known = {"class_number", "dirichlet", "derivative",
                                                   "modularity"};
    for (const auto& name : selection)
        if (std::find(known.begin(), known.end(), name) == known.end())
            throw std::invalid_argument("run_suite: unknown check '" + name + "'");

    const std::vector<int> discs = {5, 13, 65, 105};
    const std::vector<unsigned> weights = {2, 4};
    std::vector<CheckReport> reports;
    auto selected = [&](const char* name) {
        return std::find(selection.begin(), selection.end(), name) != selection.end();
    };

    for (int Dv : discs) {
        auto field = make_field(Int(Dv));
        auto ok = field.ring_of_integers();
        if (selected("class_number")) reports.push_back(check_class_number_formula(field));
        if (selected("dirichlet")) {
            for (Int m : {Int(1), Int(0)})
                reports.push_back(check_dirichlet_identity(field, ok, m, 5, Int(300)));
        }
        for (unsigned k : weights) {
            if (selected("derivative")) {
                for (Int m : {Int(0), Int(1), Int(-1), Int(4)})
                    reports.push_back(check_derivative_consistency(field, ok, k, m, Real(1),
                                                                   Real("1e-8")));
            }
            if (selected("modularity")) {
                // tau0 = (-1 + i)/D is the symmetric point of gamma = [[1,0],[D,1]]:
                // Im(tau0) = Im(gamma tau0) = 1/D
                GammaMatrix g{Int(1), Int(0), Int(Dv), Int(1)};
                Real re = Real(-1) / Dv, im = Real(1) / Dv;
                long M = std::min<long>(budget, 60L * Dv);
                reports.push_back(check_modularity(field, ok, k, M, re, im, g, 160));
            }
        }
    }
    std::stable_sort(reports.begin(), reports.end(), [](const CheckReport& a,
                                                        const CheckReport& b) {
        return std::tie(a.name, a.params) < std::tie(b.name, b.params);
    });
    return reports;
}

inline int suite_exit_code(const std::vector<CheckReport>& reports) {
    bool inconclusive = false;
    for (const auto& r : reports) {
        if (r.status == CheckStatus::fail) return 1;
        if (r.status == CheckStatus::inconclusive) inconclusive = true;
    }
    return inconclusive ? 2 : 0;
}

}  // namespace eisq
