#pragma once

// Arithmetic of Q(sqrt(D)) for odd fundamental discriminant D > 1:
// field elements, fractional ideals in canonical form, fundamental units,
// class numbers via reduced-form cycles, genus characters, and quotient
// enumeration for representation counting.

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "integers.hpp"
#include "real.hpp"

namespace eisq {

// (a + b sqrt(D)) / (2 den), with a == b (mod 2) and den > 0.
class FieldElement {
  public:
    FieldElement() : D_(0), a_(0), b_(0), den_(1) {}
    FieldElement(Int D, Int a, Int b, Int den = 1)
        : D_(std::move(D)), a_(std::move(a)), b_(std::move(b)), den_(std::move(den)) {
        normalize();
    }

    static FieldElement from_rational(const Int& D, const Rat& r) {
        return FieldElement(D, 2 * rat_num(r), 0, rat_den(r));
    }
    static FieldElement integer_omega(const Int& D) {  // (1 + sqrt(D))/2
        return FieldElement(D, 1, 1, 1);
    }
    static FieldElement one(const Int& D) { return FieldElement(D, 2, 0, 1); }
    static FieldElement zero(const Int& D) { return FieldElement(D, 0, 0, 1); }

    const Int& disc() const { return D_; }
    const Int& num_a() const { return a_; }
    const Int& num_b() const { return b_; }
    const Int& den() const { return den_; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    FieldElement conj() const { return FieldElement(D_, a_, -b_, den_); }
    FieldElement operator-() const { return FieldElement(D_, -a_, -b_, den_); }

    FieldElement operator+(const FieldElement& o) const {
        check_same(o);
        return FieldElement(D_, a_ * o.den_ + o.a_ * den_, b_ * o.den_ + o.b_ * den_,
                            den_ * o.den_);
    }
    FieldElement operator-(const FieldElement& o) const { return *this + (-o); }
    FieldElement operator*(const FieldElement& o) const {
        check_same(o);
        // (a+b r)(a'+b' r)/4 = (aa'+bb'D + (ab'+a'b) r)/4,  r = sqrt(D)
        Int na = a_ * o.a_ + b_ * o.b_ * D_;
        Int nb = a_ * o.b_ + o.a_ * b_;
        // both components of the numerator are even here (parity invariant)
        return FieldElement(D_, na / 2, nb / 2, den_ * o.den_);
    }
    FieldElement inverse() const {
        Rat n = norm();
        if (n == 0) throw std::domain_error("FieldElement: inverse of zero");
        FieldElement c = conj();
        // conj / norm
        Int num = rat_num(n), den = rat_den(n);
        return FieldElement(D_, c.a_ * den, c.b_ * den, c.den_ * num).canonical_sign();
    }

    Rat norm() const { return Rat(a_ * a_ - D_ * b_ * b_, 4 * den_ * den_); }
    Rat trace() const { return Rat(a_, den_); }

    bool operator==(const FieldElement& o) const {
        return D_ == o.D_ && a_ == o.a_ && b_ == o.b_ && den_ == o.den_;
    }

    // coordinates (x, y) with value = x + y*omega, omega = (1+sqrt(D))/2
    std::pair<Rat, Rat> omega_coords() const {
        return {Rat(a_ - b_, 2 * den_), Rat(b_, den_)};
    }

    Real to_real() const {
        return (Real(a_) + Real(b_) * sqrt(Real(D_))) / (2 * Real(den_));
    }

    std::string str() const {
        return "(" + a_.str() + (b_ >= 0 ? "+" : "") + b_.str() + "*sqrt(" + D_.str() +
               "))/" + Int(2 * den_).str();
    }

  private:
    void check_same(const FieldElement& o) const {
        if (D_ != o.D_) throw std::invalid_argument("FieldElement: mixed fields");
    }
    FieldElement canonical_sign() const {
        return den_ < 0 ? FieldElement(D_, -a_, -b_, -den_) : *this;
    }
    void normalize() {
        if (den_ == 0) throw std::domain_error("FieldElement: zero denominator");
        if (den_ < 0) { a_ = -a_; b_ = -b_; den_ = -den_; }
        if ((a_ - b_) % 2 != 0) { a_ *= 2; b_ *= 2; den_ *= 2; }
        Int g = igcd(igcd(abs(a_), abs(b_)), den_);
        if (g > 1) {
            if ((a_ / g - b_ / g) % 2 != 0) {
                while (g % 2 == 0) g /= 2;
                if ((a_ / g - b_ / g) % 2 != 0) g = 1;  // keep parity invariant
            }
            a_ /= g; b_ /= g; den_ /= g;
        }
    }

    Int D_, a_, b_, den_;
};

struct QuotientElement {
    FieldElement rep;
    Int modulus;  // b in a d^-1 / b a
    Rat qvalue;   // N(rep)/N(a), exact
};

namespace detail {

// ---- 2x2 integer linear algebra -------------------------------------------

using Mat2 = std::array<std::array<Int, 2>, 2>;

inline Int det2(const Mat2& m) { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

// Smith normal form U*A*V = diag(d1,d2), d1 | d2; only U is returned.
inline void smith2_left(const Mat2& A, Mat2& U, Int& d1, Int& d2) {
    Mat2 M = A;
    U = {{{1, 0}, {0, 1}}};
    auto row_op = [&](int dst, int src, const Int& f) {
        for (int j = 0; j < 2; ++j) { M[dst][j] -= f * M[src][j]; U[dst][j] -= f * U[src][j]; }
    };
    auto swap_rows = [&]() { std::swap(M[0], M[1]); std::swap(U[0], U[1]); };
    auto swap_cols = [&]() {
        std::swap(M[0][0], M[0][1]);
        std::swap(M[1][0], M[1][1]);
    };
    auto diagonalize = [&]() {
        // alternate Euclidean sweeps until both off-diagonal entries vanish
        while (M[1][0] != 0 || M[0][1] != 0) {
            while (M[1][0] != 0) {
                if (M[0][0] == 0) { swap_rows(); continue; }
                row_op(1, 0, M[1][0] / M[0][0]);
                if (M[1][0] != 0) swap_rows();
            }
            while (M[0][1] != 0) {
                if (M[0][0] == 0) { swap_cols(); continue; }
                Int f = M[0][1] / M[0][0];
                M[0][1] -= f * M[0][0];
                M[1][1] -= f * M[1][0];
                if (M[0][1] != 0) swap_cols();
            }
        }
    };
    diagonalize();
    if (M[0][0] == 0) { swap_rows(); swap_cols(); }
    while (M[0][0] != 0 && M[1][1] % M[0][0] != 0) {
        row_op(0, 1, Int(-1));  // mix rows so the gcd reaches the pivot
        diagonalize();
    }
    d1 = abs(M[0][0]);
    d2 = abs(M[1][1]);
    if (d1 == 0 || d2 % d1 != 0) throw std::logic_error("smith2_left: reduction failed");
}

inline Mat2 inverse_unimodular(const Mat2& U) {
    Int d = det2(U);
    if (d != 1 && d != -1) throw std::logic_error("inverse_unimodular: det not +-1");
    Mat2 inv = {{{U[1][1] / d, -U[0][1] / d}, {-U[1][0] / d, U[0][0] / d}}};
    return inv;
}

// ---- binary quadratic forms ------------------------------------------------

struct Form {
    Int a, b, c;
    bool operator<(const Form& o) const {
        if (a != o.a) return a < o.a;
        if (b != o.b) return b < o.b;
        return c < o.c;
    }
    bool operator==(const Form& o) const { return a == o.a && b == o.b && c == o.c; }
    Int eval(const Int& x, const Int& y) const { return a * x * x + b * x * y + c * y * y; }
};

inline bool is_reduced(const Form& f, const Int& D) {
    if (f.b <= 0 || f.b * f.b >= D) return false;
    Int t = 2 * abs(f.a);
    if ((t + f.b) * (t + f.b) <= D) return false;   // need sqrt(D) < 2|a| + b
    if (t > f.b && (t - f.b) * (t - f.b) >= D) return false;  // need 2|a| - b < sqrt(D)
    return true;
}

// Gauss reduction step on reduced indefinite forms; reduced -> reduced.
inline Form rho(const Form& f, const Int& D, const Int& sqrtD) {
    Int twoc = 2 * abs(f.c);
    // unique r = -b (mod 2|c|) with sqrtD - 2|c| < r <= sqrtD
    Int r = ((-f.b) % twoc + twoc) % twoc;
    Int lo = sqrtD - twoc;  // want r in (lo, sqrtD]
    while (r <= lo) r += twoc;
    while (r > sqrtD) r -= twoc;
    Form g{f.c, r, (r * r - D) / (4 * f.c)};
    return g;
}

inline std::vector<Form> reduced_forms(const Int& D) {
    std::vector<Form> forms;
    Int s = isqrt(D);
    for (Int b = 1; b <= s; b += 2) {
        Int M = (D - b * b) / 4;  // = -a*c > 0
        for (Int a1 = 1; a1 * a1 <= M; ++a1) {
            if (M % a1 != 0) continue;
            for (const Int& aa : {a1, Int(M / a1)}) {
                Int cc = -(M / aa);
                for (int sign = 0; sign < 2; ++sign) {
                    Form f = sign == 0 ? Form{aa, b, cc} : Form{-aa, b, -cc};
                    if (!is_reduced(f, D)) continue;
                    if (igcd(igcd(abs(f.a), f.b), abs(f.c)) != 1) continue;
                    forms.push_back(f);
                }
                if (a1 * a1 == M) break;
            }
        }
    }
    std::sort(forms.begin(), forms.end());
    forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
    return forms;
}

// number of rho-cycles among the reduced primitive forms = narrow class number
inline Int count_form_cycles(const Int& D) {
    auto forms = reduced_forms(D);
    Int s = isqrt(D);
    std::map<Form, bool> seen;
    for (const auto& f : forms) seen[f] = false;
    Int cycles = 0;
    for (const auto& f : forms) {
        if (seen[f]) continue;
        ++cycles;
        Form g = f;
        do {
            seen[g] = true;
            g = rho(g, D, s);
        } while (!(g == f));
    }
    return cycles;
}

}  // namespace detail

class RealQuadraticField;

// a = q * ( a Z + (b + sqrt(D))/2 Z ), q > 0 rational, b^2 = D (mod 4a), 0 <= b < 2a.
class FractionalIdeal {
  public:
    FractionalIdeal(Int D, Rat scale, Int a, Int b)
        : D_(std::move(D)), scale_(std::move(scale)), a_(std::move(a)), b_(std::move(b)) {
        if (scale_ <= 0) throw std::invalid_argument("FractionalIdeal: scale must be positive");
        if (a_ <= 0) throw std::invalid_argument("FractionalIdeal: a must be positive");
        b_ = ((b_ % (2 * a_)) + 2 * a_) % (2 * a_);
        if ((b_ * b_ - D_) % (4 * a_) != 0)
            throw std::invalid_argument("FractionalIdeal: b^2 != D (mod 4a)");
    }

    static FractionalIdeal ring_of_integers(const Int& D) {
        return FractionalIdeal(D, Rat(1), Int(1), Int(1));
    }

    // O_K-module generated by two field elements
    static FractionalIdeal from_basis(const FieldElement& e1, const FieldElement& e2) {
        const Int& D = e1.disc();
        auto [x1, y1] = e1.omega_coords();
        auto [x2, y2] = e2.omega_coords();
        Int den = boost::multiprecision::lcm(
            boost::multiprecision::lcm(rat_den(x1), rat_den(y1)),
            boost::multiprecision::lcm(rat_den(x2), rat_den(y2)));
        // integer columns (X_i, Y_i) = den * (x_i, y_i)
        Int X1 = rat_num(x1) * (den / rat_den(x1)), Y1 = rat_num(y1) * (den / rat_den(y1));
        Int X2 = rat_num(x2) * (den / rat_den(x2)), Y2 = rat_num(y2) * (den / rat_den(y2));
        // column HNF: bring to [[x, y],[0, z]]
        while (Y1 != 0) {
            Int t = Y2 / Y1;
            X2 -= t * X1; Y2 -= t * Y1;
            std::swap(X1, X2); std::swap(Y1, Y2);
        }
        if (X1 == 0 || Y2 == 0)
            throw std::invalid_argument("FractionalIdeal::from_basis: rank-deficient basis");
        if (X1 < 0) X1 = -X1;
        if (Y2 < 0) { X2 = -X2; Y2 = -Y2; }
        X2 = ((X2 % X1) + X1) % X1;
        // module condition: second basis vector (X2 + Y2*omega)/den with Y2 | X1, Y2 | X2
        if (X1 % Y2 != 0 || X2 % Y2 != 0)
            throw std::invalid_argument("FractionalIdeal::from_basis: not an O_K module");
        Int A = X1 / Y2, B0 = X2 / Y2;
        Rat q(Y2, den);
        return FractionalIdeal(D, q, A, 2 * B0 + 1);
    }

    const Int& disc() const { return D_; }
    const Rat& scale() const { return scale_; }
    const Int& form_a() const { return a_; }
    const Int& form_b() const { return b_; }
    Int form_c() const { return (b_ * b_ - D_) / (4 * a_); }

    Rat norm() const { return scale_ * scale_ * a_; }

    bool operator==(const FractionalIdeal& o) const {
        return D_ == o.D_ && scale_ == o.scale_ && a_ == o.a_ && b_ == o.b_;
    }

    // lattice basis q*a, q*(b+sqrt(D))/2
    FieldElement basis1() const {
        return FieldElement(D_, 2 * a_ * rat_num(scale_), 0, rat_den(scale_));
    }
    FieldElement basis2() const {
        return FieldElement(D_, b_ * rat_num(scale_), rat_num(scale_), rat_den(scale_));
    }

    FractionalIdeal scaled_by(const FieldElement& x) const {
        return from_basis(x * basis1(), x * basis2());
    }

    // Geometry of a d^-1 / b a in coordinates where the sublattice is diagonal:
    // reps are (z1, z2) with 0 <= z1 < b, 0 <= z2 < b*D, and
    // D * q(x) = -Ftilde(z1, z2), an integral form of discriminant D.
    struct QuotientGeometry {
        Int fa, fb, fc;           // Ftilde coefficients
        detail::Mat2 coord_map;   // dual coords x = coord_map * z
    };

    const QuotientGeometry& quotient_geometry() const {
        if (!geom_) {
            Int c = form_c();
            // columns: ideal basis written in the basis (q a / sqrt(D), q w / sqrt(D))
            detail::Mat2 A = {{{-b_, -2 * c}, {2 * a_, b_}}};
            detail::Mat2 U;
            Int d1, d2;
            detail::smith2_left(A, U, d1, d2);
            if (d1 != 1 || d2 != D_)
                throw std::logic_error("quotient_geometry: discriminant group not cyclic of order D");
            detail::Mat2 W = detail::inverse_unimodular(U);
            // F(x1,x2) = a x1^2 + b x1 x2 + c x2^2 composed with x = W z
            Int p = W[0][0], q = W[0][1], r = W[1][0], s = W[1][1];
            QuotientGeometry g;
            g.fa = a_ * p * p + b_ * p * r + c * r * r;
            g.fc = a_ * q * q + b_ * q * s + c * s * s;
            g.fb = 2 * a_ * p * q + b_ * (p * s + q * r) + 2 * c * r * s;
            g.coord_map = W;
            geom_ = g;
        }
        return *geom_;
    }

    // element of a d^-1 with diagonal coordinates (z1, z2)
    FieldElement dual_element(const Int& z1, const Int& z2) const {
        const auto& g = quotient_geometry();
        Int x1 = g.coord_map[0][0] * z1 + g.coord_map[0][1] * z2;
        Int x2 = g.coord_map[1][0] * z1 + g.coord_map[1][1] * z2;
        // x1 * (q a / sqrt(D)) + x2 * (q w / sqrt(D)), 1/sqrt(D) = sqrt(D)/D
        FieldElement u1(D_, 0, 2 * a_ * rat_num(scale_), rat_den(scale_) * D_);
        FieldElement w_over(D_, D_ * rat_num(scale_), b_ * rat_num(scale_),
                            rat_den(scale_) * D_);
        // w / sqrt(D) = ((b + sqrt(D))/2) * sqrt(D)/D = (D + b sqrt(D)) / (2D)
        FieldElement c1(D_, x1 * 2, 0, 1);  // plain integer x1
        FieldElement c2(D_, x2 * 2, 0, 1);
        return c1 * u1 + c2 * w_over;
    }

    // stream of the D*b^2 cosets of a d^-1 / b a
    void enumerate_dual_quotient(const Int& b,
                                 const std::function<void(const QuotientElement&)>& fn) const {
        const auto& g = quotient_geometry();
        for (Int z1 = 0; z1 < b; ++z1) {
            for (Int z2 = 0; z2 < b * D_; ++z2) {
                Rat qv(-(g.fa * z1 * z1 + g.fb * z1 * z2 + g.fc * z2 * z2), D_);
                fn(QuotientElement{dual_element(z1, z2), b, qv});
            }
        }
    }

    // stream of the b^2 cosets of a / b a; qvalue = q(x) is an integer here
    void enumerate_self_quotient(const Int& b,
                                 const std::function<void(const QuotientElement&)>& fn) const {
        Int c = form_c();
        for (Int i = 0; i < b; ++i) {
            for (Int j = 0; j < b; ++j) {
                FieldElement x = FieldElement(D_, 2 * i, 0, 1) * basis1() +
                                 FieldElement(D_, 2 * j, 0, 1) * basis2();
                Rat qv(a_ * i * i + b_ * i * j + c * j * j);
                fn(QuotientElement{x, b, qv});
            }
        }
    }

    std::string str() const {
        return rat_string(scale_) + ":" + a_.str() + ":" + b_.str();
    }

  private:
    Int D_;
    Rat scale_;
    Int a_, b_;
    mutable std::optional<QuotientGeometry> geom_;
};

class RealQuadraticField {
  public:
    Int D;
    FieldElement eps0;        // fundamental unit > 1
    int eps0_norm;            // +-1
    Int h_narrow;
    Int h_wide;
    std::vector<Int> prime_discs;  // p* = (-1)^((p-1)/2) p for p | D, ascending p
    bool cf_period_odd;            // parity of the continued-fraction period of sqrt(D)

    FractionalIdeal ring_of_integers() const { return FractionalIdeal::ring_of_integers(D); }
    size_t genus_count() const { return size_t(1) << (prime_discs.size() - 1); }
};

// Fundamental solution of x^2 - D y^2 = +-1 via the continued fraction of sqrt(D).
// Returns (x, y, period length).
namespace detail {
inline std::tuple<Int, Int, long> pell_unit(const Int& D) {
    Int s = isqrt(D);
    Int P = 0, Q = 1, a = s;
    Int p_prev = 1, p = a, q_prev = 0, q = 1;
    for (long i = 1;; ++i) {
        P = a * Q - P;
        Q = (D - P * P) / Q;
        if (Q == 1) return {p, q, i};
        a = (s + P) / Q;
        Int pn = a * p + p_prev, qn = a * q + q_prev;
        p_prev = p; p = pn;
        q_prev = q; q = qn;
        if (i > 4'000'000) throw std::runtime_error("pell_unit: period not found");
    }
}

inline Int icbrt(const Int& n) {
    if (n <= 0) return 0;
    Int x = Int(1) << (unsigned)((msb(n) / 3) + 1);
    // Newton iteration for floor cube root
    while (true) {
        Int x2 = (2 * x + n / (x * x)) / 3;
        if (x2 >= x) break;
        x = x2;
    }
    while (x * x * x > n) --x;
    while ((x + 1) * (x + 1) * (x + 1) <= n) ++x;
    return x;
}
}  // namespace detail

inline RealQuadraticField make_field(const Int& D) {
    if (D <= 1) throw std::invalid_argument("make_field: D must exceed 1");
    if (D % 2 == 0) throw std::invalid_argument("make_field: D must be odd (not odd fundamental)");
    if (D % 4 != 1) throw std::invalid_argument("make_field: D != 1 (mod 4), not a fundamental discriminant");
    if (!is_squarefree(D)) throw std::invalid_argument("make_field: D not squarefree");
    Int r = isqrt(D);
    if (r * r == D) throw std::invalid_argument("make_field: D is a perfect square");

    RealQuadraticField f;
    f.D = D;

    auto [x1, y1, period] = detail::pell_unit(D);
    int n1 = (period % 2 == 1) ? -1 : 1;
    if (x1 * x1 - D * y1 * y1 != n1) throw std::logic_error("make_field: Pell unit check failed");
    f.cf_period_odd = period % 2 == 1;

    // epsilon_1 = x1 + y1 sqrt(D) is eps0 or eps0^3; a cube root (t + u sqrt(D))/2
    // satisfies t^3 - 3 n1 t = 2 x1 with u^2 = (t^2 - 4 n1)/D.
    f.eps0 = FieldElement(D, 2 * x1, 2 * y1, 1);
    Int tc = detail::icbrt(2 * x1);
    for (Int t = tc - 2; t <= tc + 2; ++t) {
        if (t <= 0) continue;
        if (t * t * t - 3 * n1 * t != 2 * x1) continue;
        Int usq_num = t * t - 4 * n1;
        if (usq_num % D != 0) continue;
        Int u;
        if (!is_square(usq_num / D, &u) || u == 0) continue;
        f.eps0 = FieldElement(D, t, u, 1);
        break;
    }
    f.eps0_norm = n1;
    if (f.eps0.norm() != n1) throw std::logic_error("make_field: unit norm check failed");

    f.h_narrow = detail::count_form_cycles(D);
    if (n1 == -1) {
        f.h_wide = f.h_narrow;
    } else {
        if (f.h_narrow % 2 != 0) throw std::logic_error("make_field: narrow class number parity");
        f.h_wide = f.h_narrow / 2;
    }

    for (const Int& p : prime_factors(D)) f.prime_discs.push_back(prime_discriminant(p));
    Int prod = 1;
    for (const Int& pd : f.prime_discs) prod *= pd;
    if (prod != D) throw std::logic_error("make_field: prime discriminant product");
    return f;
}

// A positive integer coprime to D primitively represented by the ideal's norm
// form, together with the representing vector. Bounded search.
namespace detail {
inline std::tuple<Int, Int, Int> represented_coprime(const FractionalIdeal& ideal) {
    const Int& D = ideal.disc();
    Form f{ideal.form_a(), ideal.form_b(), ideal.form_c()};
    Int best = 0, bx = 0, by = 0;
    for (Int R = 1; R <= 64; R *= 2) {
        for (Int x = -R; x <= R; ++x) {
            for (Int y = -R; y <= R; ++y) {
                if (x == 0 && y == 0) continue;
                if (igcd(abs(x), abs(y)) != 1) continue;
                Int n = f.eval(x, y);
                if (n <= 0 || igcd(n, D) != 1) continue;
                if (best == 0 || n < best) { best = n; bx = x; by = y; }
            }
        }
        if (best != 0 && best <= 4 * D) return {best, bx, by};
    }
    if (best != 0) return {best, bx, by};
    throw std::runtime_error("represented_coprime: no norm coprime to D found in search bound");
}
}  // namespace detail

// Per-prime genus characters chi_{p*}(N(a')) for p | D ascending, a' an
// equivalent integral ideal with norm coprime to D.
inline std::vector<int> genus_characters(const RealQuadraticField& field,
                                         const FractionalIdeal& ideal) {
    auto [n, x, y] = detail::represented_coprime(ideal);
    std::vector<int> chars;
    chars.reserve(field.prime_discs.size());
    for (const Int& pd : field.prime_discs) chars.push_back(kronecker(pd, n));
    return chars;
}

// One integral ideal per genus, norm coprime to D.
inline std::vector<FractionalIdeal> genus_representatives(const RealQuadraticField& field) {
    const Int& D = field.D;
    size_t want = field.genus_count();
    std::vector<FractionalIdeal> reps;
    std::vector<std::vector<int>> seen;
    for (Int n = 1; n <= 4 * D * D && reps.size() < want; ++n) {
        if (igcd(n, D) != 1) continue;
        // need b with b^2 = D (mod 4n)
        Int found_b = -1;
        for (Int b = 1; b < 2 * n; b += 2) {
            if ((b * b - D) % (4 * n) == 0) { found_b = b; break; }
        }
        if (found_b < 0) continue;
        std::vector<int> chars;
        for (const Int& pd : field.prime_discs) chars.push_back(kronecker(pd, n));
        if (std::find(seen.begin(), seen.end(), chars) != seen.end()) continue;
        seen.push_back(chars);
        reps.emplace_back(D, Rat(1), n, found_b);
    }
    if (reps.size() != want)
        throw std::runtime_error("genus_representatives: could not realize all genera");
    return reps;
}

inline FractionalIdeal parse_ideal(const Int& D, const std::string& spec) {
    auto p1 = spec.find(':');
    auto p2 = spec.find(':', p1 == std::string::npos ? p1 : p1 + 1);
    if (p1 == std::string::npos || p2 == std::string::npos)
        throw std::invalid_argument("ideal spec must be q:a:b");
    auto parse_rat = [](const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rat(Int(s));
        return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    };
    Rat q = parse_rat(spec.substr(0, p1));
    Int a(spec.substr(p1 + 1, p2 - p1 - 1));
    Int b(spec.substr(p2 + 1));
    return FractionalIdeal(D, q, a, b);
}

}  // namespace eisq
