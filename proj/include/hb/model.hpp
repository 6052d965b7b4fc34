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


#ifndef HB_MODEL_HPP
#define HB_MODEL_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "hb/isometry.hpp"
#include "hb/space.hpp"

namespace hb {

struct ExtensionParams {
    cplx omega{1.0, 0.0};
    double t = 0.0;
};

struct Certificate {
    cplx at_zero;         // b_t(0)
    cplx at_one;          // b_t(1)
    cplx scaled_slope;    // s * b_t'(1)

    /// max deviation from (0, 1, 1)
    double deviation() const;
};

struct ExtensionResult {
    RationalFn b;
    double s = 0.0;
    Certificate certificate;
};

struct ModelSpec {
    std::vector<ExtensionParams> steps;
    std::vector<ExtensionResult> results;  // one per step
    HbSpace space;
    DefectReport report;
};

struct ModelOptions {
    SpaceOptions space;
    VerifyOptions verify;
};

/// (b - alpha) / (1 - conj(alpha) b)
RationalFn mobius_normalize(const RationalFn& b, cplx alpha, const Tolerances& tol = {});

/// b(conj(lambda) z): moves a boundary point 1 to lambda.
RationalFn rotate(const RationalFn& b, cplx lambda);

/// gamma z / (1 - beta z), beta = 1/(1+sigma^2), gamma = sigma^2/(1+sigma^2).
RationalFn brownian_shift_b(double sigma);

/// The phase t0 in [0, 2pi) with e^{-i t0} b0(1) = 1, if |b0(1)| = 1.
std::optional<double> forbidden_phase(const RationalFn& b0, const Tolerances& tol = {});

/// |omega|^2 / (1 + ||b0||^2 + |omega|^2)
double extension_weight(const HbSpace& b0, cplx omega);

/// b_t from the Herglotz combination s(1+z)/(1-z) + (1-s)(1+e^{-it}b0)/(1-e^{-it}b0).
ExtensionResult extend(const HbSpace& b0, const ExtensionParams& params);

/// Iterate extend from b = 0 and verify the resulting order 2n.
ModelSpec build_model(const std::vector<ExtensionParams>& steps, const ModelOptions& opt = {});

/// Max relative deviation of K^{b_t}_w(z) = e(z)conj(e(w)) + f(z)conj(f(w)) K^{b0}_w(z)
/// over random pairs with |z|, |w| <= radius.
double kernel_factorization_check(const RationalFn& b0, const RationalFn& bt, double s, double t, int samples,
                                  std::uint64_t seed = 3, double radius = 0.9);

}  // namespace hb

#endif  // HB_MODEL_HPP
