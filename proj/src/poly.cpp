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


#include "hb/poly.hpp"

#include <algorithm>
#include <cmath>

#include "hb/error.hpp"

namespace hb {

Poly::Poly(std::vector<cplx> coeffs) : c_(std::move(coeffs)) { trim_exact(); }

Poly::Poly(std::initializer_list<cplx> coeffs) : c_(coeffs) { trim_exact(); }

void Poly::trim_exact() {
    while (!c_.empty() && c_.back() == cplx{}) c_.pop_back();
}

Poly Poly::constant(cplx c) { return Poly(std::vector<cplx>{c}); }

Poly Poly::monomial(int k, cplx c) {
    if (k < 0) throw Error(Errc::invalid_argument, "negative monomial degree");
    std::vector<cplx> v(static_cast<std::size_t>(k) + 1);
    v.back() = c;
    return Poly(std::move(v));
}

Poly Poly::from_roots(std::span<const cplx> roots, cplx lead) {
    std::vector<cplx> v{lead};
    for (cplx r : roots) {
        v.push_back(cplx{});
        for (std::size_t k = v.size() - 1; k > 0; --k) v[k] = v[k - 1] - r * v[k];
        v[0] = -r * v[0];
    }
    return Poly(std::move(v));
}

Poly Poly::linear_power(cplx r, int k) {
    std::vector<cplx> roots(static_cast<std::size_t>(std::max(k, 0)), r);
    return from_roots(roots);
}

cplx Poly::operator()(cplx z) const noexcept {
    cplx acc{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

double Poly::magnitude_at(cplx z) const noexcept {
    const double r = std::abs(z);
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * r + std::abs(*it);
    return acc;
}

double Poly::scale() const noexcept {
    double m = 0.0;
    for (cplx c : c_) m = std::max(m, std::abs(c));
    return m;
}

double Poly::l2_norm() const noexcept {
    double s = 0.0;
    for (cplx c : c_) s += std::norm(c);
    return std::sqrt(s);
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<cplx> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = static_cast<double>(k) * c_[k];
    return Poly(std::move(d));
}

Poly Poly::reflect(int d) const {
    if (d < degree()) throw Error(Errc::invalid_argument, "reflect: d below degree");
    if (d < 0) return {};
    std::vector<cplx> r(static_cast<std::size_t>(d) + 1);
    for (int k = 0; k <= d; ++k) r[static_cast<std::size_t>(k)] = std::conj((*this)[d - k]);
    return Poly(std::move(r));
}

Poly Poly::conj_coeffs() const {
    std::vector<cplx> r(c_.size());
    std::transform(c_.begin(), c_.end(), r.begin(), [](cplx c) { return std::conj(c); });
    return Poly(std::move(r));
}

Poly Poly::scaled_argument(cplx c) const {
    std::vector<cplx> r(c_.size());
    cplx pw = 1.0;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        r[k] = c_[k] * pw;
        pw *= c;
    }
    return Poly(std::move(r));
}

Poly Poly::trimmed(double rel) const {
    const double cut = rel * scale();
    std::vector<cplx> r = c_;
    while (!r.empty() && std::abs(r.back()) <= cut) r.pop_back();
    return Poly(std::move(r));
}

Poly Poly::truncated(int n) const {
    if (n < 0) return {};
    std::vector<cplx> r(c_.begin(), c_.begin() + std::min<std::ptrdiff_t>(n + 1, static_cast<std::ptrdiff_t>(c_.size())));
    return Poly(std::move(r));
}

std::vector<cplx> Poly::taylor_at(cplx z0) const {
    // repeated synthetic division by (z - z0)
    std::vector<cplx> work = c_;
    std::vector<cplx> out;
    out.reserve(work.size());
    for (std::size_t len = work.size(); len > 0; --len) {
        for (std::size_t k = len - 1; k > 0; --k) work[k - 1] += z0 * work[k];
        out.push_back(work[0]);
        work.erase(work.begin());
    }
    return out;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim_exact();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim_exact();
    return *this;
}

Poly& Poly::operator*=(cplx s) {
    for (cplx& c : c_) c *= s;
    trim_exact();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<cplx> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(r));
}

std::pair<Poly, Poly> divmod(const Poly& p, const Poly& divisor) {
    if (divisor.is_zero()) throw Error(Errc::invalid_argument, "division by the zero polynomial");
    const int dp = p.degree();
    const int dd = divisor.degree();
    if (dp < dd) return {Poly{}, p};
    std::vector<cplx> rem(p.coeffs().begin(), p.coeffs().end());
    std::vector<cplx> quo(static_cast<std::size_t>(dp - dd) + 1);
    const cplx lead = divisor.leading();
    for (int k = dp - dd; k >= 0; --k) {
        const cplx q = rem[static_cast<std::size_t>(k + dd)] / lead;
        quo[static_cast<std::size_t>(k)] = q;
        for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= q * divisor[j];
    }
    rem.resize(static_cast<std::size_t>(std::max(dd, 0)));
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly shift_up(const Poly& p, int k) {
    if (p.is_zero() || k <= 0) return p;
    std::vector<cplx> r(static_cast<std::size_t>(k), cplx{});
    r.insert(r.end(), p.coeffs().begin(), p.coeffs().end());
    return Poly(std::move(r));
}

Poly backward_shift(const Poly& p) {
    if (p.degree() < 1) return {};
    return Poly(std::vector<cplx>(p.coeffs().begin() + 1, p.coeffs().end()));
}

double relative_distance(const Poly& p, const Poly& q) {
    const double s = std::max(p.scale(), q.scale());
    if (s == 0.0) return 0.0;
    double m = 0.0;
    const int n = std::max(p.degree(), q.degree());
    for (int k = 0; k <= n; ++k) m = std::max(m, std::abs(p[k] - q[k]));
    return m / s;
}

cplx h2_pairing(const Poly& p, const Poly& q) {
    cplx s{};
    const int n = std::min(p.degree(), q.degree());
    for (int k = 0; k <= n; ++k) s += p[k] * std::conj(q[k]);
    return s;
}

}  // namespace hb
