/*
   Copyright 2026 The hbspace Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


#ifndef HB_TESTS_SUPPORT_HPP
#define HB_TESTS_SUPPORT_HPP

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "hb/poly.hpp"

namespace hbtest {

using hb::cplx;
using hb::Poly;

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    cplx gaussian() {
        std::normal_distribution<double> n;
        return {n(rng_), n(rng_)};
    }
    /// Uniform in the disk of radius r.
    cplx in_disk(double r) {
        return std::polar(r * std::sqrt(uniform(0.0, 1.0)), uniform(0.0, 2.0 * 3.141592653589793));
    }
    Poly poly(int degree) {
        std::vector<cplx> c(static_cast<std::size_t>(degree) + 1);
        for (auto& x : c) x = gaussian();
        return Poly(std::move(c));
    }

private:
    std::mt19937_64 rng_;
};

/// Sum c_k z^k by explicit powers, independent of Horner.
inline cplx eval_by_powers(const Poly& p, cplx z) {
    cplx s{};
    for (int k = 0; k <= p.degree(); ++k) s += p[k] * std::pow(z, k);
    return s;
}

inline double binom(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace hbtest

#endif
