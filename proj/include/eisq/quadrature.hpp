#pragma once

// Tanh-sinh quadrature on (0,1) with doubling refinement: node counts are
// doubled until two successive refinements agree within the target, which is
// then used as the error estimate. Endpoint distances are computed through
// exponentials so integrable endpoint singularities are resolved at full
// precision.

#include <functional>
#include <stdexcept>

#include "real.hpp"

namespace eisq {

struct QuadratureResult {
    Real value;
    Real error;  // estimated absolute error
};

// Integrate f over (0,1). f(x) may blow up (integrably) at x=0 or x=1.
template <class F>
QuadratureResult tanh_sinh_01(F&& f, unsigned bits, unsigned max_level = 12) {
    Real half_pi = real_pi() / 2;
    Real target = pow2(-static_cast<long>(bits));
    Real t_cap = 7;  // sech^2((pi/2) sinh 7) underflows any practical precision

    auto level_sum = [&](const Real& h) -> Real {
        Real sum = 0;
        for (int side = 0; side < 2; ++side) {
            int consecutive_small = 0;
            for (long k = (side == 0 ? 0 : -1);; side == 0 ? ++k : --k) {
                Real t = h * k;
                if (abs(t) > t_cap) break;
                Real u = half_pi * sinh(t);
                // x = (1+tanh u)/2 ; evaluated via exp to keep endpoint offsets exact
                Real x = 1 / (1 + exp(-2 * u));
                Real sech = 2 / (exp(u) + exp(-u));
                Real w = half_pi * cosh(t) * sech * sech / 2;
                Real term = w * f(x);
                sum += term;
                if (abs(term) <= target * (1 + abs(sum))) {
                    if (++consecutive_small >= 3) break;
                } else {
                    consecutive_small = 0;
                }
            }
        }
        return sum;
    };

    Real h(1);
    Real prev = h * level_sum(h);
    for (unsigned level = 1; level <= max_level; ++level) {
        h /= 2;
        Real cur = h * level_sum(h);
        Real diff = abs(cur - prev);
        if (diff <= target * (1 + abs(cur)) / 4) {
            return {cur, diff};
        }
        prev = cur;
    }
    throw std::runtime_error("tanh_sinh_01: quadrature budget exceeded before reaching tolerance");
}

}  // namespace eisq
