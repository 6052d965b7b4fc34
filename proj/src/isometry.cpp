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


#include "hb/isometry.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "hb/error.hpp"

namespace hb {

namespace {

double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

Poly random_unit(const HbSpace& s, std::mt19937_64& rng, int max_degree) {
    std::normal_distribution<double> n;
    const int d = std::uniform_int_distribution<int>(0, max_degree)(rng);
    std::vector<cplx> c(static_cast<std::size_t>(d) + 1);
    for (auto& x : c) x = {n(rng), n(rng)};
    Poly p(std::move(c));
    return p * (1.0 / std::sqrt(s.inner_product(p, p).real()));
}

// beta_m over the shifts v, z v, ..., z^m v
cplx form_from_shifts(const HbSpace& s, const std::vector<HbVector>& f, const std::vector<HbVector>& g, int m) {
    cplx acc{};
    for (int k = 0; k <= m; ++k) {
        const double sign = ((m - k) % 2 == 0) ? 1.0 : -1.0;
        acc += sign * binomial(m, k) * s.inner_product(f[static_cast<std::size_t>(k)], g[static_cast<std::size_t>(k)]);
    }
    return acc;
}

std::vector<HbVector> shifts(const HbSpace& s, const Poly& f, int m) {
    std::vector<HbVector> out{s.vector(f)};
    for (int k = 1; k <= m; ++k) out.push_back(s.vector(shift_up(f, k)));
    return out;
}

}  // namespace

cplx defect_form(const HbSpace& s, const Poly& f, const Poly& g, int m) {
    if (m < 0) throw Error(Errc::invalid_argument, "defect form order must be non-negative");
    return form_from_shifts(s, shifts(s, f, m), shifts(s, g, m), m);
}

double rank_one_identity_check(const HbSpace& s, int trials, int max_degree, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const HbVector lb = s.Lb_vector(max_degree + 1);
    const double c = 1.0 + s.norm_b_sq();
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        const Poly f = random_unit(s, rng, max_degree);
        const Poly g = random_unit(s, rng, max_degree);
        const HbVector vf = s.vector(f);
        const HbVector vg = s.vector(g);
        const cplx lhs = s.inner_product(shift_up(f), shift_up(g)) - s.inner_product(vf, vg);
        const cplx rhs = c * s.inner_product(vf, lb) * s.inner_product(lb, vg);
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

double recursion_check(const HbSpace& s, int max_order, int trials, int max_degree, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        const Poly f = random_unit(s, rng, max_degree);
        const Poly g = random_unit(s, rng, max_degree);
        const auto fs = shifts(s, f, max_order + 1);
        const auto gs = shifts(s, g, max_order + 1);
        const std::vector<HbVector> fz(fs.begin() + 1, fs.end());
        const std::vector<HbVector> gz(gs.begin() + 1, gs.end());
        for (int m = 1; m <= max_order; ++m) {
            const cplx next = form_from_shifts(s, fs, gs, m + 1);
            const cplx rec = form_from_shifts(s, fz, gz, m) - form_from_shifts(s, fs, gs, m);
            worst = std::max(worst, std::abs(next - rec));
        }
    }
    return worst;
}

std::vector<double> annihilation_check(const HbSpace& s, cplx lambda, int max_power, int deg) {
    if (max_power < 0 || deg < 0) throw Error(Errc::invalid_argument, "annihilation check needs non-negative power and degree");
    const HbVector lb = s.Lb_vector(deg + max_power + 1);
    const double scale = std::sqrt(1.0 + s.norm_b_sq());
    const HbVector w{lb.f * scale, lb.plus * scale, lb.tail * scale};
    std::vector<double> out;
    Poly factor = Poly::constant(1.0);
    const Poly lin{-std::conj(lambda), 1.0};
    for (int k = 0; k <= max_power; ++k) {
        double worst = 0.0;
        for (int j = 0; j <= deg; ++j) {
            const HbVector p = s.vector(shift_up(factor, j));
            worst = std::max(worst, std::abs(s.inner_product(w, p)));
        }
        out.push_back(worst);
        factor = factor * lin;
    }
    return out;
}

OrderResult isometry_order(const HbSpace& s, int max_order, int deg, const Tolerances& tol) {
    if (max_order < 1 || max_order > 12) throw Error(Errc::invalid_argument, "max order must be in 1..12");
    if (deg < 0) throw Error(Errc::invalid_argument, "test degree must be non-negative");
    const ComplexMatrix g = s.gram_matrix(deg + max_order + 1);
    OrderResult r;
    for (int m = 1; m <= max_order; ++m) {
        double worst = 0.0;
        for (int j = 0; j <= deg; ++j)
            for (int l = 0; l <= deg; ++l) {
                cplx acc{};
                for (int k = 0; k <= m; ++k) {
                    const double sign = ((m - k) % 2 == 0) ? 1.0 : -1.0;
                    acc += sign * binomial(m, k) * g(l + k, j + k);
                }
                worst = std::max(worst, std::abs(acc));
            }
        r.residuals.push_back(worst);
        if (!r.order && worst <= tol.iso) r.order = m;
    }
    return r;
}

DefectReport verify(const HbSpace& s, const VerifyOptions& opt) {
    DefectReport rep;
    rep.degree = opt.degree;
    const OrderResult o = isometry_order(s, opt.max_order, opt.degree, s.tolerances());
    for (int m = 1; m <= opt.max_order; ++m) rep.orders_tested.push_back(m);
    rep.max_form_residual = o.residuals;
    rep.strict_order = o.order;
    if (o.order) {
        // beta_0 is the identity, whose form never vanishes
        rep.residual_below = *o.order > 1 ? o.residual(*o.order - 1) : 1.0;
        rep.strict = rep.residual_below > s.tolerances().strict;
    }
    if (opt.lambda) {
        rep.lambda = *opt.lambda;
    } else if (s.boundary_zeros().size() == 1) {
        rep.lambda = std::conj(s.boundary_zeros().front().point);
    }
    const int power = opt.annihilation_power.value_or(o.order ? std::max(1, *o.order / 2) : std::max(1, s.degree()));
    rep.annihilation_residuals = annihilation_check(s, rep.lambda, power, opt.degree);
    return rep;
}

}  // namespace hb
