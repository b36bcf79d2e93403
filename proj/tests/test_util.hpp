#ifndef SU2METRIC_TEST_UTIL_HPP
#define SU2METRIC_TEST_UTIL_HPP

#include <random>

#include "su2metric/spin.hpp"

namespace su2metric::testutil {

inline std::mt19937& rng() {
    static std::mt19937 gen(20240811);
    return gen;
}

inline double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline HamiltonianParams random_params(double scale = 1.0) {
    HamiltonianParams p;
    p.beta0 = uniform(-scale, scale);
    p.alpha_p = uniform(-scale, scale);
    p.beta_p = uniform(-scale, scale);
    p.alpha00 = uniform(-scale, scale);
    p.alpha_p0 = uniform(-scale, scale);
    p.beta_p0 = uniform(-scale, scale);
    p.alpha_pp = uniform(-scale, scale);
    p.beta_pp = uniform(-scale, scale);
    p.alpha_pm = uniform(-scale, scale);
    return p;
}

}  // namespace su2metric::testutil

#endif
