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


#include "hb/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "hb/error.hpp"

namespace hb {

namespace {

// Laurent coefficients beyond this (relative) are treated as cancellation noise.
constexpr double kLaurentTrim = 1e-13;
// roots within this distance of the circle are paired with their reflection
constexpr double kCirclePairing = 1e-6;

cplx grid_point(int k, int n) { return std::polar(1.0, 2.0 * std::numbers::pi * k / n); }

RootOptions root_options(const SpectralOptions& opt) {
    RootOptions r;
    r.residual_tol = opt.tol.root;
    r.cluster_tol = opt.tol.cluster;
    r.seed = opt.seed;
    return r;
}

// c_k = sum_j q_{j+k} conj(q_j) - sum_j p_{j+k} conj(p_j), k = -d..d, stored at k + d
std::vector<cplx> density_laurent(const Poly& p, const Poly& q, int d) {
    std::vector<cplx> c(static_cast<std::size_t>(2 * d + 1));
    for (int k = -d; k <= d; ++k) {
        cplx s{};
        for (int j = 0; j <= d; ++j) s += q[j + k] * std::conj(q[j]) - p[j + k] * std::conj(p[j]);
        c[static_cast<std::size_t>(k + d)] = s;
    }
    return c;
}

}  // namespace

double sup_on_circle(const RationalFn& f, int n) {
    double m = 0.0;
    for (int k = 0; k < n; ++k) m = std::max(m, std::abs(f(grid_point(k, n))));
    return m;
}

void require_analytic_on_closed_disk(const RationalFn& f, const Tolerances& tol) {
    if (f.den().degree() < 1) return;
    RootOptions ro;
    ro.residual_tol = tol.root;
    ro.cluster_tol = tol.cluster;
    for (const auto& c : root_clusters(f.den(), ro)) {
        // a root cancelled by the numerator is not a pole
        if (vanishing_order(f.num(), c.center, tol.gcd) >= c.multiplicity) continue;
        if (std::abs(c.center) <= 1.0 + tol.boundary)
            throw Error(Errc::pole_in_disk, "denominator vanishes in the closed unit disk");
    }
}

bool is_nonextreme(const RationalFn& b, const SpectralOptions& opt) {
    const RationalFn r = b.reduced(opt.tol);
    require_analytic_on_closed_disk(r, opt.tol);
    if (sup_on_circle(r, opt.grid) > 1.0 + 10.0 * opt.tol.mate)
        throw Error(Errc::not_in_unit_ball, "sup of |b| on the circle exceeds 1");
    const int d = std::max(r.num().degree(), r.den().degree());
    if (r.is_zero()) return true;
    const auto c = density_laurent(r.num(), r.den(), d);
    double q2 = 0.0;
    for (cplx x : r.den().coeffs()) q2 += std::norm(x);
    return std::any_of(c.begin(), c.end(), [&](cplx x) { return std::abs(x) > opt.tol.mate * q2; });
}

MateResult pythagorean_mate(const RationalFn& b_in, const SpectralOptions& opt) {
    const RationalFn b = b_in.reduced(opt.tol);
    if (!is_nonextreme(b, opt)) throw Error(Errc::extreme_point, "b is a unimodular multiple of a finite Blaschke product");

    MateResult out;
    if (b.is_zero()) {
        out.a = RationalFn(Poly::constant(1.0));
        return out;
    }

    const Poly& p = b.num();
    const Poly& q = b.den();
    const int d = std::max(p.degree(), q.degree());
    std::vector<cplx> c = density_laurent(p, q, d);

    double cmax = 0.0;
    for (cplx x : c) cmax = std::max(cmax, std::abs(x));
    for (int k = 0; k <= d; ++k) {
        const cplx lhs = c[static_cast<std::size_t>(d + k)];
        const cplx rhs = std::conj(c[static_cast<std::size_t>(d - k)]);
        if (std::abs(lhs - rhs) > opt.tol.mate * cmax)
            throw Error(Errc::factorization_failure, "Laurent coefficients are not conjugate-symmetric");
    }

    double dmin = std::numeric_limits<double>::infinity();
    double dmean = 0.0;
    std::vector<double> density(static_cast<std::size_t>(opt.grid));
    for (int k = 0; k < opt.grid; ++k) {
        const cplx z = grid_point(k, opt.grid);
        const double v = std::norm(q(z)) - std::norm(p(z));
        density[static_cast<std::size_t>(k)] = v;
        dmin = std::min(dmin, v / std::norm(q(z)));
        dmean += v;
    }
    dmean /= opt.grid;
    if (dmin < -opt.tol.mate) throw Error(Errc::negative_density, "1 - |b|^2 is negative on the circle");

    // effective half-degree after dropping negligible outer coefficients
    int e = d;
    while (e > 0 && std::abs(c[static_cast<std::size_t>(d + e)]) <= kLaurentTrim * cmax &&
           std::abs(c[static_cast<std::size_t>(d - e)]) <= kLaurentTrim * cmax)
        --e;

    Poly r0 = Poly::constant(1.0);
    if (e > 0) {
        const Poly L(std::vector<cplx>(c.begin() + (d - e), c.begin() + (d + e) + 1));
        int degree_found = 0;
        for (const auto& cl : root_clusters(L, root_options(opt))) {
            const double m = std::abs(cl.center);
            if (std::abs(m - 1.0) <= kCirclePairing) {
                if (cl.multiplicity % 2 != 0)
                    throw Error(Errc::factorization_failure, "odd multiplicity root of the density on the circle");
                const cplx point = cl.center / m;
                out.boundary_zeros.push_back({point, cl.multiplicity / 2});
                r0 = r0 * Poly::linear_power(point, cl.multiplicity / 2);
                degree_found += cl.multiplicity / 2;
            } else if (m > 1.0) {
                r0 = r0 * Poly::linear_power(cl.center, cl.multiplicity);
                degree_found += cl.multiplicity;
            }
        }
        if (degree_found != e)
            throw Error(Errc::factorization_failure, "roots of the density do not pair across the circle");
    }

    double r0mean = 0.0;
    for (int k = 0; k < opt.grid; ++k) r0mean += std::norm(r0(grid_point(k, opt.grid)));
    r0mean /= opt.grid;
    Poly r = r0 * std::sqrt(dmean / r0mean);
    const cplx r_at_0 = r[0];
    if (std::abs(r_at_0) <= opt.tol.pole * r.scale())
        throw Error(Errc::factorization_failure, "spectral factor vanishes at the origin");
    r *= std::conj(r_at_0) / std::abs(r_at_0);

    RationalFn a = RationalFn(r, q).reduced(opt.tol);
    const cplx a0 = a.num()[0] / a.den()[0];
    a *= std::conj(a0) / std::abs(a0);
    out.a = a;

    for (int k = 0; k < opt.grid; ++k) {
        const cplx z = grid_point(k, opt.grid);
        out.residual = std::max(out.residual, std::abs(std::norm(a(z)) + std::norm(b(z)) - 1.0));
    }
    if (out.residual > opt.tol.mate)
        throw Error(Errc::factorization_failure,
                    "mate identity residual " + std::to_string(out.residual) + " above tolerance");
    std::sort(out.boundary_zeros.begin(), out.boundary_zeros.end(), [](const BoundaryZero& x, const BoundaryZero& y) {
        return std::arg(x.point) < std::arg(y.point);
    });
    return out;
}

InnerOuter inner_outer(const RationalFn& f_in, const SpectralOptions& opt) {
    const RationalFn f = f_in.reduced(opt.tol);
    if (f.is_zero()) throw Error(Errc::zero_function, "inner-outer split of the zero function");
    require_analytic_on_closed_disk(f, opt.tol);

    InnerOuter out;
    Poly blaschke_num = Poly::constant(1.0);
    Poly blaschke_den = Poly::constant(1.0);
    if (f.num().degree() >= 1) {
        for (const auto& cl : root_clusters(f.num(), root_options(opt))) {
            if (std::abs(cl.center) >= 1.0 - opt.tol.boundary) continue;
            out.inner_zeros.push_back(cl);
            blaschke_num = blaschke_num * Poly::linear_power(cl.center, cl.multiplicity);
            const Poly factor{1.0, -std::conj(cl.center)};
            for (int i = 0; i < cl.multiplicity; ++i) blaschke_den = blaschke_den * factor;
        }
    }
    out.inner = RationalFn(blaschke_num, blaschke_den);
    const Poly rest = divmod(f.num(), blaschke_num).first;
    out.outer = RationalFn(rest * blaschke_den, f.den());
    return out;
}

int boundary_order(const RationalFn& f, cplx point, const Tolerances& tol) {
    if (std::abs(std::abs(point) - 1.0) > tol.mate)
        throw Error(Errc::invalid_argument, "boundary_order: point is not on the unit circle");
    if (std::abs(f.den()(point)) < tol.pole * f.den().magnitude_at(point))
        throw Error(Errc::pole_at_point, "boundary_order: f has a pole at the point");
    if (f.is_zero()) throw Error(Errc::zero_function, "boundary_order of the zero function");
    return vanishing_order(f.num(), point, tol.boundary);
}

}  // namespace hb
