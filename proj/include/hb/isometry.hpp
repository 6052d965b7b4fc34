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


#ifndef HB_ISOMETRY_HPP
#define HB_ISOMETRY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "hb/space.hpp"

namespace hb {

struct VerifyOptions {
    int max_order = 12;
    int degree = 10;  // monomials z^0 .. z^degree
    /// Point for the annihilation test; defaults to conj of the mate's single
    /// boundary zero, or 1 when there is none or several.
    std::optional<cplx> lambda;
    /// Highest power in the annihilation test; defaults to half the order found.
    std::optional<int> annihilation_power;
};

struct OrderResult {
    std::optional<int> order;
    /// residual[m - 1] = max |<beta_m z^j, z^k>| over monomials, m = 1..max_order
    std::vector<double> residuals;

    double residual(int m) const { return residuals.at(static_cast<std::size_t>(m - 1)); }
};

struct DefectReport {
    std::vector<int> orders_tested;
    std::vector<double> max_form_residual;
    std::optional<int> strict_order;
    /// residual at strict_order - 1 (the form itself at order 0 is the inner product)
    double residual_below = 0.0;
    /// residual_below exceeds the strictness threshold
    bool strict = false;
    cplx lambda{1.0, 0.0};
    /// residual for (T* - lambda)^k w, k = 0 .. annihilation power
    std::vector<double> annihilation_residuals;
    int degree = 0;
};

/// sum_k (-1)^(m-k) C(m,k) <z^k f, z^k g>_b
cplx defect_form(const HbSpace& s, const Poly& f, const Poly& g, int m);

/// Max over random pairs of polynomials (degree <= max_degree, unit H(b) norm) of
/// |<zf, zg> - <f, g> - (1 + ||b||^2) <f, Lb><Lb, g>|.
double rank_one_identity_check(const HbSpace& s, int trials, int max_degree = 8, std::uint64_t seed = 1);

/// Max over random unit-norm pairs of |beta_{m+1}(f,g) - beta_m(zf, zg) + beta_m(f, g)| for m = 1..max_order.
double recursion_check(const HbSpace& s, int max_order, int trials, int max_degree = 8, std::uint64_t seed = 2);

/// residual_k = max_{j <= deg} |<w, (z - conj(lambda))^k z^j>_b| with w = sqrt(1 + ||b||^2) Lb,
/// for k = 0 .. max_power.
std::vector<double> annihilation_check(const HbSpace& s, cplx lambda, int max_power, int deg);

/// Smallest m <= max_order whose form vanishes on monomials up to deg.
OrderResult isometry_order(const HbSpace& s, int max_order, int deg, const Tolerances& tol = {});

DefectReport verify(const HbSpace& s, const VerifyOptions& opt = {});

}  // namespace hb

#endif  // HB_ISOMETRY_HPP
