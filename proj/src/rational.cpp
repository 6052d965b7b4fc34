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


#include "hb/rational.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "hb/error.hpp"
#include "hb/roots.hpp"

namespace hb {

namespace {

constexpr double kTrimRel = 64.0 * std::numeric_limits<double>::epsilon();

}  // namespace

RationalFn::RationalFn(Poly num) : num_(std::move(num)), den_(Poly::constant(1.0)) {}

RationalFn::RationalFn(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error(Errc::invalid_argument, "zero denominator");
}

int RationalFn::degree() const noexcept { return std::max({num_.degree(), den_.degree(), 0}); }

cplx RationalFn::eval(cplx z, double pole_tol) const {
    const cplx d = den_(z);
    if (std::abs(d) < pole_tol * den_.magnitude_at(z))
        throw Error(Errc::pole_at_point, "denominator vanishes at the evaluation point");
    return num_(z) / d;
}

RationalFn RationalFn::derivative() const {
    if (is_polynomial()) return {num_.derivative() * (1.0 / den_[0]), Poly::constant(1.0)};
    return {num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_};
}

RationalFn RationalFn::reduced(const Tolerances& tol) const {
    if (num_.is_zero()) return {};
    Poly n = num_.trimmed(kTrimRel);
    Poly d = den_.trimmed(kTrimRel);
    if (d.degree() >= 1 && n.degree() >= 1) {
        RootOptions opt;
        opt.residual_tol = tol.root;
        opt.cluster_tol = tol.cluster;
        for (const auto& c : root_clusters(d, opt)) {
            const int m = std::min(c.multiplicity, vanishing_order(n, c.center, tol.gcd));
            if (m == 0) continue;
            const Poly f = Poly::linear_power(c.center, m);
            n = divmod(n, f).first;
            d = divmod(d, f).first;
        }
    }
    const cplx s = std::abs(d[0]) > kTrimRel * d.scale() ? d[0] : d.leading();
    return {n * (1.0 / s), d * (1.0 / s)};
}

Poly RationalFn::taylor(int n) const {
    const cplx d0 = den_[0];
    if (std::abs(d0) <= kTrimRel * den_.scale()) throw Error(Errc::pole_at_point, "taylor expansion: pole at the origin");
    std::vector<cplx> out(static_cast<std::size_t>(std::max(n, -1) + 1));
    for (int k = 0; k <= n; ++k) {
        cplx s = num_[k];
        for (int j = 1; j <= std::min(k, den_.degree()); ++j) s -= den_[j] * out[static_cast<std::size_t>(k - j)];
        out[static_cast<std::size_t>(k)] = s / d0;
    }
    return Poly(std::move(out));
}

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
    if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFn operator-(const RationalFn& a, const RationalFn& b) {
    if (a.den_ == b.den_) return {a.num_ - b.num_, a.den_};
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

RationalFn operator*(const RationalFn& a, const RationalFn& b) { return {a.num_ * b.num_, a.den_ * b.den_}; }

RationalFn operator/(const RationalFn& a, const RationalFn& b) {
    if (b.is_zero()) throw Error(Errc::invalid_argument, "division by the zero function");
    return {a.num_ * b.den_, a.den_ * b.num_};
}

double sup_deviation_on_circle(const RationalFn& f, const RationalFn& g, int n, double r) {
    double m = 0.0;
    for (int k = 0; k < n; ++k) {
        const cplx z = std::polar(r, 2.0 * std::numbers::pi * k / n);
        m = std::max(m, std::abs(f(z) - g(z)));
    }
    return m;
}

}  // namespace hb
