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


#include "hb/space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hb/error.hpp"
#include "hb/roots.hpp"

namespace hb {

namespace {

constexpr int kCachedTaylor = 128;
// target size of the discarded part when truncating a rational member
constexpr double kTruncationTarget = 1e-15;
// distance within which a point is identified with a mate boundary zero
constexpr double kPointMatch = 1e-6;
// the construction-time norm check is skipped when truncation leaves more than this
constexpr double kCrossCheckTail = 1e-10;

double factorial(int k) {
    double r = 1.0;
    for (int i = 2; i <= k; ++i) r *= i;
    return r;
}

double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// sqrt(sum_{k > d} |g_k|^2), estimated from the next 2d + 16 coefficients
double taylor_tail(const RationalFn& g, int d) {
    if (g.is_polynomial() && g.num().degree() <= d) return 0.0;
    const Poly t = g.taylor(2 * d + 16);
    double s = 0.0;
    for (int k = d + 1; k <= t.degree(); ++k) s += std::norm(t[k]);
    return std::sqrt(s);
}

// Remove exactly `count` factors (z - w) from p; throws when they are not there.
Poly divide_out(const Poly& p, cplx w, int count, double tol) {
    auto [q, k] = deflate(p, w, count, tol);
    if (k < count)
        throw Error(Errc::verification_failure,
                    "kernel derivative numerator does not vanish to the expected order at the boundary point");
    return q;
}

}  // namespace

HbSpace HbSpace::make(const RationalFn& b_in, const SpaceOptions& opt) {
    HbSpace s;
    s.opt_ = opt;
    s.b_ = b_in.reduced(opt.tol);
    SpectralOptions so;
    so.tol = opt.tol;
    so.grid = opt.grid;
    so.seed = opt.seed;
    MateResult m = pythagorean_mate(s.b_, so);
    s.a_ = std::move(m.a);
    s.zeros_ = std::move(m.boundary_zeros);
    s.residual_ = m.residual;
    s.n_ = s.b_.is_zero() ? 0 : s.b_.degree();
    s.a0_ = s.a_(0.0).real();
    s.b0_ = s.b_(0.0);
    s.b_cache_ = s.b_.taylor(kCachedTaylor);
    s.a_cache_ = s.a_.taylor(kCachedTaylor);

    if (opt.cross_check) {
        const HbVector v = s.from_rational(s.b_);
        // poles very close to the circle leave a tail no affordable truncation removes
        if (v.tail > kCrossCheckTail) return s;
        const double computed = s.norm_sq(v);
        s.cross_check_gap_ = std::abs(computed - s.norm_b_sq());
        if (*s.cross_check_gap_ > opt.tol.gram * std::max(1.0, s.norm_b_sq()))
            throw Error(Errc::verification_failure, "norm of b from the plus-function disagrees with a(0)^-2 - 1 (" +
                                                        std::to_string(computed) + " vs " +
                                                        std::to_string(s.norm_b_sq()) + ")");
    }
    return s;
}

int HbSpace::max_boundary_multiplicity() const noexcept {
    int m = 0;
    for (const auto& z : zeros_) m = std::max(m, z.multiplicity);
    return m;
}

int HbSpace::multiplicity_at(cplx p) const noexcept {
    for (const auto& z : zeros_)
        if (std::abs(z.point - p) <= kPointMatch) return z.multiplicity;
    return 0;
}

Poly HbSpace::b_taylor(int n) const { return n <= kCachedTaylor ? b_cache_.truncated(n) : b_.taylor(n); }

Poly HbSpace::a_taylor(int n) const { return n <= kCachedTaylor ? a_cache_.truncated(n) : a_.taylor(n); }

cplx HbSpace::kernel(cplx lambda, cplx z) const {
    if (std::abs(lambda) >= 1.0 || std::abs(z) >= 1.0)
        throw Error(Errc::invalid_argument, "kernel: points must lie in the open unit disk");
    return (1.0 - std::conj(b_(lambda)) * b_(z)) / (1.0 - std::conj(lambda) * z);
}

RationalFn HbSpace::kernel_fn(cplx lambda) const {
    if (std::abs(lambda) >= 1.0) throw Error(Errc::invalid_argument, "kernel: point must lie in the open unit disk");
    const cplx bl = std::conj(b_(lambda));
    return {b_.den() - b_.num() * bl, b_.den() * Poly{1.0, -std::conj(lambda)}};
}

namespace {

struct DerivativeSetup {
    cplx zeta;            // conj(w)
    std::vector<cplx> c;  // derivatives of conj-coefficient b at zeta, orders 0..i
    bool boundary = false;
};

DerivativeSetup derivative_setup(const HbSpace& s, cplx w, int i) {
    if (i < 0) throw Error(Errc::invalid_argument, "kernel derivative order must be non-negative");
    DerivativeSetup d;
    d.zeta = std::conj(w);
    const double r = std::abs(w);
    const double edge = s.tolerances().boundary;
    if (r > 1.0 + edge) throw Error(Errc::invalid_argument, "kernel derivative: point outside the closed disk");
    if (r >= 1.0 - edge) {
        d.boundary = true;
        const int mult = s.multiplicity_at(w);
        if (i >= mult)
            throw Error(Errc::order_too_high, "derivative order " + std::to_string(i) +
                                                  " needs a mate zero of multiplicity above it at the boundary point (found " +
                                                  std::to_string(mult) + ")");
    }
    RationalFn bs = s.b().conj_coeffs();
    for (int k = 0; k <= i; ++k) {
        d.c.push_back(bs(d.zeta));
        if (k < i) bs = bs.derivative();
    }
    return d;
}

}  // namespace

RationalFn HbSpace::kernel_derivative(cplx w, int i) const {
    const DerivativeSetup d = derivative_setup(*this, w, i);
    const Poly lin{1.0, -d.zeta};
    Poly num;
    Poly lin_pow = Poly::constant(1.0);
    for (int k = 0; k <= i; ++k) {
        Poly term = (k == 0 ? b_.den() : Poly{}) - b_.num() * d.c[static_cast<std::size_t>(k)];
        term = shift_up(term * lin_pow, i - k) * (binomial(i, k) * factorial(i - k));
        num += term;
        lin_pow = lin_pow * lin;
    }
    if (!d.boundary) {
        Poly den = b_.den();
        for (int k = 0; k <= i; ++k) den = den * lin;
        return {num, den};
    }
    // (1 - zeta z)^(i+1) = (-zeta)^(i+1) (z - w)^(i+1) cancels against the numerator
    const Poly q = divide_out(num, w, i + 1, opt_.tol.gcd);
    return {q * (1.0 / std::pow(-d.zeta, i + 1)), b_.den()};
}

RationalFn HbSpace::kernel_derivative_plus(cplx w, int i) const {
    const DerivativeSetup d = derivative_setup(*this, w, i);
    const Poly lin{1.0, -d.zeta};
    Poly sum;
    Poly lin_pow = Poly::constant(1.0);
    for (int k = 0; k <= i; ++k) {
        sum += shift_up(lin_pow, i - k) * (binomial(i, k) * factorial(i - k) * d.c[static_cast<std::size_t>(k)]);
        lin_pow = lin_pow * lin;
    }
    const Poly num = a_.num() * sum;
    if (!d.boundary) {
        Poly den = a_.den();
        for (int k = 0; k <= i; ++k) den = den * lin;
        return {num, den};
    }
    const Poly q = divide_out(num, w, i + 1, opt_.tol.gcd);
    return {q * (1.0 / std::pow(-d.zeta, i + 1)), a_.den()};
}

Poly HbSpace::plus_function(const Poly& f) const {
    if (f.is_zero()) return {};
    const int d = f.degree();
    const Poly beta = b_taylor(d);
    const Poly alpha = a_taylor(d);
    const cplx a0 = std::conj(alpha[0]);
    if (a0 == cplx{}) throw Error(Errc::singular_system, "mate vanishes at the origin");
    std::vector<cplx> x(static_cast<std::size_t>(d) + 1);
    for (int j = d; j >= 0; --j) {
        cplx s{};
        for (int k = 0; j + k <= d; ++k) s += std::conj(beta[k]) * f[j + k];
        for (int k = 1; j + k <= d; ++k) s -= std::conj(alpha[k]) * x[static_cast<std::size_t>(j + k)];
        x[static_cast<std::size_t>(j)] = s / a0;
    }
    return Poly(std::move(x));
}

double HbSpace::plus_residual(const Poly& f, const Poly& plus) const {
    const int d = std::max(f.degree(), plus.degree());
    if (d < 0) return 0.0;
    const Poly beta = b_taylor(d);
    const Poly alpha = a_taylor(d);
    double worst = 0.0;
    double scale = 0.0;
    for (int j = 0; j <= d; ++j) {
        cplx r{};
        double mag = 0.0;
        for (int k = 0; j + k <= d; ++k) {
            r += std::conj(alpha[k]) * plus[j + k] - std::conj(beta[k]) * f[j + k];
            mag += std::abs(alpha[k] * plus[j + k]) + std::abs(beta[k] * f[j + k]);
        }
        worst = std::max(worst, std::abs(r));
        scale = std::max(scale, mag);
    }
    return scale > 0.0 ? worst / scale : 0.0;
}

HbVector HbSpace::kernel_vector(cplx lambda, int truncation) const {
    const RationalFn k = kernel_fn(lambda);
    const RationalFn kp(a_.num() * std::conj(b_(lambda)), a_.den() * Poly{1.0, -std::conj(lambda)});
    const double tail = std::hypot(taylor_tail(k, truncation), taylor_tail(kp, truncation));
    return {k.taylor(truncation), kp.taylor(truncation), tail};
}

HbVector HbSpace::kernel_derivative_vector(cplx w, int i, int truncation) const {
    const RationalFn u = kernel_derivative(w, i);
    const RationalFn up = kernel_derivative_plus(w, i);
    const double tail = std::hypot(taylor_tail(u, truncation), taylor_tail(up, truncation));
    return {u.taylor(truncation), up.taylor(truncation), tail};
}

HbVector HbSpace::b_vector(int truncation) const {
    const RationalFn plus = RationalFn(Poly::constant(1.0 / a0_)) - a_;
    return {b_.taylor(truncation), plus.taylor(truncation),
            std::hypot(taylor_tail(b_, truncation), taylor_tail(plus, truncation))};
}

HbVector HbSpace::Lb_vector(int truncation) const {
    const RationalFn lb = backward_shift(b_);
    const RationalFn plus = -1.0 * backward_shift(a_);
    return {lb.taylor(truncation), plus.taylor(truncation),
            std::hypot(taylor_tail(lb, truncation), taylor_tail(plus, truncation))};
}

int HbSpace::truncation_for(const RationalFn& f_in, int max_truncation) const {
    const RationalFn f = f_in.reduced(opt_.tol);
    if (f.is_polynomial()) return std::max(f.num().degree(), 0);
    RootOptions ro;
    ro.residual_tol = opt_.tol.root;
    ro.cluster_tol = opt_.tol.cluster;
    double radius = std::numeric_limits<double>::infinity();
    for (const auto& c : root_clusters(f.den(), ro)) radius = std::min(radius, std::abs(c.center));
    if (radius <= 1.0) throw Error(Errc::pole_in_disk, "member has a pole in the closed unit disk");
    const double rho = 1.0 / radius;
    const int m = max_boundary_multiplicity() + 1;
    int d = std::max(f.num().degree(), 8);
    while (d < max_truncation && std::pow(rho, d) * std::pow(d + 1.0, m) > kTruncationTarget) ++d;
    return d;
}

HbVector HbSpace::from_rational(const RationalFn& f_in, int max_truncation) const {
    const RationalFn f = f_in.reduced(opt_.tol);
    if (f.is_zero()) return {};
    require_analytic_on_closed_disk(f, opt_.tol);
    if (f.is_polynomial()) return vector(f.num() * (1.0 / f.den()[0]));
    const int d = truncation_for(f, max_truncation);
    HbVector v = vector(f.taylor(d));
    v.tail = taylor_tail(f, d) * std::pow(d + 1.0, max_boundary_multiplicity());
    return v;
}

HbVector HbSpace::shift(const HbVector& v) const {
    if (v.f.is_zero() && v.plus.is_zero()) return v;
    const Poly zf = shift_up(v.f);
    const Poly zp = shift_up(v.plus);
    const int d = std::max(zf.degree(), zp.degree());
    const cplx c = (h2_pairing(zf, b_taylor(d)) - h2_pairing(zp, a_taylor(d))) / a0_;
    return {zf, zp + Poly::constant(c), v.tail};
}

cplx HbSpace::inner_product(const Poly& f, const Poly& g) const {
    return h2_pairing(f, g) + h2_pairing(plus_function(f), plus_function(g));
}

cplx HbSpace::inner_product(const HbVector& f, const HbVector& g) const {
    return h2_pairing(f.f, g.f) + h2_pairing(f.plus, g.plus);
}

ComplexMatrix HbSpace::gram_matrix(int n) const {
    if (n < 1) throw Error(Errc::invalid_argument, "gram matrix size must be positive");
    std::vector<Poly> plus;
    plus.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) plus.push_back(plus_function(Poly::monomial(k)));
    ComplexMatrix g(n, n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            g(j, k) = (j == k ? 1.0 : 0.0) + h2_pairing(plus[static_cast<std::size_t>(k)], plus[static_cast<std::size_t>(j)]);
    return g;
}

NormReport HbSpace::norm_identities_check() const {
    NormReport r;
    r.norm_b_sq_closed = norm_b_sq();
    r.norm_Lb_sq_closed = norm_Lb_sq();
    const RationalFn lb = backward_shift(b_);
    const HbVector vb = from_rational(b_);
    const HbVector vl = from_rational(lb);
    r.norm_b_sq_computed = norm_sq(vb);
    r.norm_Lb_sq_computed = norm_sq(vl);
    r.truncation = std::max(b_.is_zero() ? 0 : truncation_for(b_), lb.is_zero() ? 0 : truncation_for(lb));
    r.tail = std::max(vb.tail, vl.tail);
    return r;
}

RationalFn backward_shift(const RationalFn& f) {
    if (f.den()[0] == cplx{}) throw Error(Errc::pole_at_point, "backward shift: pole at the origin");
    const cplx f0 = f.num()[0] / f.den()[0];
    return {backward_shift(f.num() - f.den() * f0), f.den()};
}

}  // namespace hb
