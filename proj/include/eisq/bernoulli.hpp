#pragma once

// Exact Bernoulli numbers and polynomials over the rationals, with a
// process-wide memoized table guarded by a mutex.

#include <mutex>
#include <vector>

#include "integers.hpp"

namespace eisq {

// B_n with B_1 = -1/2.
inline Rat bernoulli_number(unsigned n) {
    static std::vector<Rat> cache{Rat(1)};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (cache.size() <= n) {
        unsigned m = static_cast<unsigned>(cache.size());
        // sum_{j=0}^{m} C(m+1, j) B_j = 0
        Rat s(0);
        for (unsigned j = 0; j < m; ++j) s += Rat(binomial(m + 1, j)) * cache[j];
        cache.push_back(-s / Rat(binomial(m + 1, m)));
    }
    return cache[n];
}

// B_n(x) = sum_k C(n,k) B_k x^{n-k}, exact.
inline Rat bernoulli_poly(unsigned n, const Rat& x) {
    Rat result(0), xpow(1);
    // accumulate from the constant term upward: term k = n..0 in x^{n-k}
    for (unsigned j = 0; j <= n; ++j) {  // j = n - k
        result += Rat(binomial(n, n - j)) * bernoulli_number(n - j) * xpow;
        xpow *= x;
    }
    return result;
}

}  // namespace eisq
