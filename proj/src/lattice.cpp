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


#include "hb/lattice.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "hb/error.hpp"

namespace hb {

namespace {

constexpr int kProbeDepth = 3;

RationalFn require_member(const HbSpace& s, const RationalFn& f_in) {
    const RationalFn f = f_in.reduced(s.tolerances());
    if (f.is_zero()) throw Error(Errc::zero_function, "the zero function generates the zero subspace");
    require_analytic_on_closed_disk(f, s.tolerances());
    return f;
}

SpectralOptions spectral_options(const HbSpace& s) {
    SpectralOptions o;
    o.tol = s.tolerances();
    o.grid = s.options().grid;
    o.seed = s.options().seed;
    return o;
}

// columns z^k f, k = 0..K, stacked as [coefficients; plus coefficients]
Eigen::MatrixXcd shifted_columns(const HbSpace& s, const HbVector& v, int K, int rows_half) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2 * rows_half, K + 1);
    HbVector cur = v;
    for (int k = 0; k <= K; ++k) {
        for (int i = 0; i <= cur.f.degree(); ++i) m(i, k) = cur.f[i];
        for (int i = 0; i <= cur.plus.degree(); ++i) m(rows_half + i, k) = cur.plus[i];
        if (k < K) cur = s.shift(cur);
    }
    return m;
}

// orthonormal basis of the column span; throws when the Gram block of the
// columns has eigenvalue ratio below rank_tol
Eigen::MatrixXcd orthonormal_span(const Eigen::MatrixXcd& a, double rank_tol) {
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeThinU);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) == 0.0 || sv(sv.size() - 1) < std::sqrt(rank_tol) * sv(0))
        throw Error(Errc::rank_deficiency, "shifted generators are numerically dependent");
    return svd.matrixU();
}

// largest angle between a vector of span(x) and span(q); both orthonormal
double gap_to_span(const Eigen::MatrixXcd& q, const Eigen::MatrixXcd& x) {
    const Eigen::MatrixXcd resid = x - q * (q.adjoint() * x);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(resid);
    const double sin_max = std::clamp(svd.singularValues()(0), 0.0, 1.0);
    return std::asin(sin_max);
}

}  // namespace

SubspaceDescriptor classify(const HbSpace& s, const RationalFn& f_in) {
    const RationalFn f = require_member(s, f_in);
    SubspaceDescriptor d;
    const InnerOuter io = inner_outer(f, spectral_options(s));
    d.theta = io.inner;
    d.theta_zeros = io.inner_zeros;
    bool any = !d.theta_zeros.empty();
    for (const auto& z : s.boundary_zeros()) {
        const int j = std::min(boundary_order(f, z.point, s.tolerances()), z.multiplicity);
        d.boundary_orders.push_back({z.point, j, z.multiplicity});
        any = any || j > 0;
    }
    d.form = any ? SubspaceForm::classified : SubspaceForm::full;
    return d;
}

RationalFn canonical_form(const SubspaceDescriptor& d) {
    if (d.form == SubspaceForm::zero) return {};
    Poly p = Poly::constant(1.0);
    for (const auto& b : d.boundary_orders) p = p * Poly::linear_power(b.point, b.order);
    return RationalFn(p) * d.theta;
}

CyclicWitness cyclic_witness(const HbSpace& s, const RationalFn& f_in) {
    const RationalFn f = require_member(s, f_in);
    CyclicWitness w;
    w.inner_zeros = inner_outer(f, spectral_options(s)).inner_zeros;
    bool vanishes = false;
    for (const auto& z : s.boundary_zeros()) {
        w.boundary_values.emplace_back(z.point, f.num()(z.point) / f.den()(z.point));
        vanishes = vanishes || boundary_order(f, z.point, s.tolerances()) > 0;
    }
    w.cyclic = w.inner_zeros.empty() && !vanishes;
    return w;
}

Membership membership(const HbSpace& s, const RationalFn& f_in) {
    const RationalFn f = f_in.reduced(s.tolerances());
    Membership m;
    if (f.is_zero()) {
        m.member = true;
        return m;
    }
    if (f.den().degree() >= 1) {
        RootOptions ro;
        ro.residual_tol = s.tolerances().root;
        for (const auto& c : root_clusters(f.den(), ro)) {
            const double r = std::abs(c.center);
            if (r < 1.0 - s.tolerances().boundary)
                throw Error(Errc::pole_in_disk, "membership: f has a pole in the open disk");
            if (r <= 1.0 + s.tolerances().boundary) return m;  // not even in H^2
        }
    }
    m.member = true;

    // Hermite interpolation of f at the boundary zeros, then divide out
    int total = 0;
    for (const auto& z : s.boundary_zeros()) total += z.multiplicity;
    Poly prod = Poly::constant(1.0);
    for (const auto& z : s.boundary_zeros()) prod = prod * Poly::linear_power(z.point, z.multiplicity);
    if (total > 0) {
        Eigen::MatrixXcd a(total, total);
        Eigen::VectorXcd rhs(total);
        int row = 0;
        for (const auto& z : s.boundary_zeros()) {
            RationalFn deriv = f;
            for (int k = 0; k < z.multiplicity; ++k, ++row) {
                rhs(row) = deriv(z.point);
                for (int j = 0; j < total; ++j) {
                    double ff = 1.0;
                    for (int i = 0; i < k; ++i) ff *= (j - i);
                    a(row, j) = j < k ? cplx{} : ff * std::pow(z.point, j - k);
                }
                deriv = deriv.derivative();
            }
        }
        const Eigen::VectorXcd c = a.colPivHouseholderQr().solve(rhs);
        m.p = Poly(std::vector<cplx>(c.data(), c.data() + c.size()));
    }
    auto [g, rem] = divmod(f.num() - m.p * f.den(), prod);
    const double scale = std::max(f.num().scale(), (m.p * f.den()).scale());
    m.residual = scale > 0.0 ? rem.scale() / scale : 0.0;
    m.g = RationalFn(g, f.den());
    return m;
}

Distance subspace_distance(const HbSpace& s, const RationalFn& f_in, const RationalFn& h_in, int K, int depth) {
    if (K < 0) throw Error(Errc::invalid_argument, "K must be non-negative");
    const int K0 = std::min(depth < 0 ? kProbeDepth : depth, K);
    const RationalFn f = require_member(s, f_in);
    const RationalFn h = require_member(s, h_in);
    const HbVector vf = s.from_rational(f);
    const HbVector vh = s.from_rational(h);
    Distance d;
    d.truncation = std::max({vf.f.degree(), vh.f.degree(), 0});
    d.tail = std::max(vf.tail, vh.tail);
    const int rows = std::max({vf.f.degree(), vf.plus.degree(), vh.f.degree(), vh.plus.degree(), 0}) + K + 1;
    const double rank = s.tolerances().rank;
    const Eigen::MatrixXcd gf = shifted_columns(s, vf, K, rows);
    const Eigen::MatrixXcd gh = shifted_columns(s, vh, K, rows);
    d.h_to_span_f = gap_to_span(orthonormal_span(gf, rank), orthonormal_span(gh.leftCols(K0 + 1), rank));
    d.f_to_span_h = gap_to_span(orthonormal_span(gh, rank), orthonormal_span(gf.leftCols(K0 + 1), rank));
    d.angle = std::max(d.h_to_span_f, d.f_to_span_h);
    return d;
}

double largest_principal_angle(const HbSpace& s, const RationalFn& f_in, const RationalFn& h_in, int K) {
    const RationalFn f = require_member(s, f_in);
    const RationalFn h = require_member(s, h_in);
    const HbVector vf = s.from_rational(f);
    const HbVector vh = s.from_rational(h);
    const int rows = std::max({vf.f.degree(), vf.plus.degree(), vh.f.degree(), vh.plus.degree(), 0}) + K + 1;
    const double rank = s.tolerances().rank;
    const Eigen::MatrixXcd qf = orthonormal_span(shifted_columns(s, vf, K, rows), rank);
    const Eigen::MatrixXcd qh = orthonormal_span(shifted_columns(s, vh, K, rows), rank);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(qf.adjoint() * qh);
    const double smallest_cos = std::clamp(svd.singularValues().minCoeff(), 0.0, 1.0);
    return std::acos(smallest_cos);
}

std::vector<std::vector<Poly>> ladder_spaces(const HbSpace& s) {
    if (s.boundary_zeros().size() > 1)
        throw Error(Errc::multiple_boundary_zero, "ladder spaces need a single boundary zero of the mate");
    if (s.boundary_zeros().empty())
        throw Error(Errc::invalid_argument, "ladder spaces need a boundary zero of the mate");
    const auto& z = s.boundary_zeros().front();
    std::vector<std::vector<Poly>> out;
    for (int j = 0; j < z.multiplicity; ++j) {
        std::vector<Poly> basis;
        for (int k = j; k < z.multiplicity; ++k) basis.push_back(Poly::linear_power(z.point, k));
        out.push_back(std::move(basis));
    }
    return out;
}

}  // namespace hb
