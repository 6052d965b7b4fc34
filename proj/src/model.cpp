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


#include "hb/model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "hb/error.hpp"

namespace hb {

namespace {

// |b0(0)| above this is not accepted as b0(0) = 0
constexpr double kOriginTol = 1e-10;

}  // namespace

double Certificate::deviation() const {
    return std::max({std::abs(at_zero), std::abs(at_one - 1.0), std::abs(scaled_slope - 1.0)});
}

RationalFn mobius_normalize(const RationalFn& b, cplx alpha, const Tolerances& tol) {
    if (std::abs(alpha) >= 1.0) throw Error(Errc::invalid_argument, "Mobius parameter must lie in the open disk");
    if (alpha == cplx{}) return b;
    return RationalFn(b.num() - b.den() * alpha, b.den() - b.num() * std::conj(alpha)).reduced(tol);
}

RationalFn rotate(const RationalFn& b, cplx lambda) {
    if (std::abs(std::abs(lambda) - 1.0) > 1e-12) throw Error(Errc::invalid_argument, "rotation needs a unimodular point");
    return b.scaled_argument(std::conj(lambda));
}

RationalFn brownian_shift_b(double sigma) {
    if (!(sigma > 0.0)) throw Error(Errc::invalid_argument, "sigma must be positive");
    const double beta = 1.0 / (1.0 + sigma * sigma);
    const double gamma = sigma * sigma / (1.0 + sigma * sigma);
    return {Poly{0.0, gamma}, Poly{1.0, -beta}};
}

std::optional<double> forbidden_phase(const RationalFn& b0, const Tolerances& tol) {
    const cplx v = b0(1.0);
    if (std::abs(std::abs(v) - 1.0) > tol.phase) return std::nullopt;
    double t = std::arg(v);
    if (t < 0.0) t += 2.0 * std::numbers::pi;
    return t;
}

double extension_weight(const HbSpace& b0, cplx omega) {
    const double w2 = std::norm(omega);
    return w2 / (1.0 + b0.norm_b_sq() + w2);
}

ExtensionResult extend(const HbSpace& space0, const ExtensionParams& params) {
    const RationalFn& b0 = space0.b();
    const Tolerances& tol = space0.tolerances();
    if (params.omega == cplx{}) throw Error(Errc::degenerate_omega, "omega = 0 adds an isometric summand");
    if (std::abs(b0(0.0)) > kOriginTol) throw Error(Errc::invalid_argument, "extension needs b0(0) = 0");
    const cplx u = std::polar(1.0, -params.t);
    if (std::abs(u * b0(1.0) - 1.0) < tol.phase)
        throw Error(Errc::forbidden_phase, "e^{-it} b0(1) = 1: this phase does not give a strict extension");

    ExtensionResult out;
    out.s = extension_weight(space0, params.omega);
    const double s = out.s;
    const Poly& p0 = b0.num();
    const Poly& q0 = b0.den();
    const Poly minus = q0 - p0 * u;
    const Poly plus = q0 + p0 * u;
    const Poly nh = Poly{1.0, 1.0} * minus * s + Poly{1.0, -1.0} * plus * (1.0 - s);
    const Poly dh = Poly{1.0, -1.0} * minus;
    out.b = RationalFn(nh - dh, nh + dh).reduced(tol);

    const int expected = b0.is_zero() ? 1 : b0.degree() + 1;
    if (out.b.degree() != expected)
        throw Error(Errc::verification_failure, "extension has degree " + std::to_string(out.b.degree()) +
                                                    ", expected " + std::to_string(expected));
    // quotient rule at 1 directly: b_t may have a pole close to 1 when s is small
    const Poly& num = out.b.num();
    const Poly& den = out.b.den();
    const cplx d1 = den(1.0);
    if (d1 == cplx{}) throw Error(Errc::verification_failure, "extension has a pole at 1");
    const cplx slope = (num.derivative()(1.0) * d1 - num(1.0) * den.derivative()(1.0)) / (d1 * d1);
    out.certificate = {out.b(0.0), num(1.0) / d1, s * slope};
    return out;
}

ModelSpec build_model(const std::vector<ExtensionParams>& steps, const ModelOptions& opt) {
    std::vector<ExtensionResult> results;
    HbSpace space = HbSpace::make(RationalFn{}, opt.space);
    for (const auto& p : steps) {
        ExtensionResult r = extend(space, p);
        space = HbSpace::make(r.b, opt.space);
        results.push_back(std::move(r));
    }
    const int n = static_cast<int>(steps.size());
    VerifyOptions vo = opt.verify;
    vo.max_order = std::max(vo.max_order, std::min(12, 2 * n + 1));
    if (!vo.annihilation_power) vo.annihilation_power = std::max(n, 1);
    if (!vo.lambda) vo.lambda = cplx(1.0, 0.0);
    DefectReport rep = verify(space, vo);
    const int expected = n == 0 ? 1 : 2 * n;
    if (!rep.strict_order || *rep.strict_order != expected || !rep.strict)
        throw Error(Errc::verification_failure,
                    "model of " + std::to_string(n) + " steps is not a strict " + std::to_string(expected) +
                        "-isometry (found " + (rep.strict_order ? std::to_string(*rep.strict_order) : "none") +
                        ", residual below " + std::to_string(rep.residual_below) + ")");
    return {steps, std::move(results), std::move(space), std::move(rep)};
}

double kernel_factorization_check(const RationalFn& b0, const RationalFn& bt, double s, double t, int samples,
                                  std::uint64_t seed, double radius) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    auto draw = [&] { return std::polar(radius * std::sqrt(unif(rng)), 2.0 * std::numbers::pi * unif(rng)); };
    const cplx u = std::polar(1.0, -t);
    auto e = [&](cplx z) { return std::sqrt(s) * (1.0 - bt(z)) / (1.0 - z); };
    auto f = [&](cplx z) { return std::sqrt(1.0 - s) * (1.0 - bt(z)) / (1.0 - u * b0(z)); };
    auto kernel = [](const RationalFn& b, cplx w, cplx z) {
        return (1.0 - std::conj(b(w)) * b(z)) / (1.0 - std::conj(w) * z);
    };
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const cplx z = draw();
        const cplx w = draw();
        const cplx lhs = kernel(bt, w, z);
        const cplx rhs = e(z) * std::conj(e(w)) + f(z) * std::conj(f(w)) * kernel(b0, w, z);
        worst = std::max(worst, std::abs(lhs - rhs) / std::abs(lhs));
    }
    return worst;
}

}  // namespace hb
