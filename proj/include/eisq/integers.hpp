#pragma once

// Exact integer/rational layer: arbitrary precision integers, rationals,
// Kronecker symbols and small number-theoretic helpers.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace eisq {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline Int igcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

// floor of sqrt(n), n >= 0
inline Int isqrt(const Int& n) {
    if (n < 0) throw std::domain_error("isqrt: negative argument");
    return boost::multiprecision::sqrt(n);
}

inline bool is_square(const Int& n, Int* root = nullptr) {
    if (n < 0) return false;
    Int r = isqrt(n);
    if (r * r == n) {
        if (root) *root = r;
        return true;
    }
    return false;
}

// integer power, e >= 0
inline Int ipow(const Int& b, unsigned e) {
    Int r = 1, x = b;
    for (; e; e >>= 1) {
        if (e & 1) r *= x;
        x *= x;
    }
    return r;
}

inline Rat rpow_int(const Rat& b, long e) {
    if (e == 0) return Rat(1);
    Rat r(1), x = e > 0 ? b : Rat(1) / b;
    unsigned long n = e > 0 ? (unsigned long)e : (unsigned long)(-e);
    for (; n; n >>= 1) {
        if (n & 1) r *= x;
        x *= x;
    }
    return r;
}

// p-adic valuation of n != 0
inline int valuation(Int n, const Int& p) {
    if (n == 0) throw std::domain_error("valuation of zero");
    n = abs(n);
    int v = 0;
    while (n % p == 0) { n /= p; ++v; }
    return v;
}

inline bool is_squarefree(Int n) {
    n = abs(n);
    if (n == 0) return false;
    for (Int d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            n /= d;
            if (n % d == 0) return false;
        }
    }
    return true;
}

inline std::vector<Int> prime_factors(Int n) {
    n = abs(n);
    std::vector<Int> ps;
    for (Int d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            ps.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

// Kronecker symbol (a/n), standard conventions:
//   (a/0) = 1 iff a = +-1 else 0, (a/-1) = sign of a (1 for a >= 0),
//   (a/2) = 0 for even a, else +1 if a = +-1 mod 8, -1 if a = +-3 mod 8.
inline int kronecker(Int a, Int n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int result = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) result = -result;
    }
    if (n % 2 == 0) {
        if (a % 2 == 0) return 0;
        int v = 0;
        while (n % 2 == 0) { n /= 2; ++v; }
        if (v % 2 == 1) {
            Int r = ((a % 8) + 8) % 8;
            if (r == 3 || r == 5) result = -result;
        }
    }
    // now n odd, n > 0: Jacobi symbol by quadratic reciprocity
    a = ((a % n) + n) % n;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            Int r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

// (-1)^((p-1)/2) * p for an odd prime p: the prime discriminant attached to p.
inline Int prime_discriminant(const Int& p) {
    return (p % 4 == 1) ? p : -p;
}

inline Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    Int r = 1;
    for (unsigned i = 0; i < k; ++i) { r *= n - i; r /= i + 1; }
    return r;
}

inline Int factorial(unsigned n) {
    Int r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

inline std::string rat_string(const Rat& r) {
    return rat_num(r).str() + "/" + rat_den(r).str();
}

}  // namespace eisq
