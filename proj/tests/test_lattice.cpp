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


#include <cmath>

#include "doctest.h"
#include "hb/lattice.hpp"
#include "hb/suite.hpp"
#include "support.hpp"

using namespace hb;
using hbtest::Gen;

namespace {

const RationalFn kHalfPlus(Poly{0.5, 0.5});
const RationalFn kHalfZ(Poly{0.0, 0.5});
const RationalFn kTwoPoint(Poly{0.5, 0.0, 0.5});
const RationalFn kDeg2(Poly{0.0, 0.0, 1.0}, Poly{3.0, -3.0, 1.0});
const RationalFn kDeg3(Poly{0.0, 3.0, -6.0, 5.0}, Poly{12.0, -21.0, 14.0, -3.0});
const RationalFn kOne(Poly{1.0});

RationalFn z_minus_one(int k) { return RationalFn(Poly::linear_power(1.0, k)); }

// f^{(i)}(w) by repeated differentiation of the coefficient list
cplx derivative_at(const Poly& f, int i, cplx w) {
    Poly d = f;
    for (int k = 0; k < i; ++k) d = d.derivative();
    return d(w);
}

}  // namespace

TEST_CASE("classify examples") {
    const HbSpace s = HbSpace::make(kHalfPlus);

    const SubspaceDescriptor full = classify(s, kOne);
    CHECK(full.form == SubspaceForm::full);
    CHECK(full.theta_zeros.empty());
    REQUIRE(full.boundary_orders.size() == 1);
    CHECK(full.boundary_orders[0].order == 0);

    const SubspaceDescriptor ma = classify(s, z_minus_one(1));
    CHECK(ma.form == SubspaceForm::classified);
    CHECK(ma.theta_zeros.empty());
    CHECK(ma.boundary_orders[0].order == 1);
    CHECK(std::abs(ma.boundary_orders[0].point - 1.0) < 1e-9);

    const SubspaceDescriptor inner = classify(s, RationalFn(Poly{0.0, 0.5, 0.5}));
    REQUIRE(inner.theta_zeros.size() == 1);
    CHECK(std::abs(inner.theta_zeros[0].center) < 1e-12);
    CHECK(inner.boundary_orders[0].order == 0);
    CHECK(inner.form == SubspaceForm::classified);

    const RationalFn zero;
    CHECK_THROWS_AS(classify(s, zero), Error);
    try {
        classify(s, zero);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::zero_function);
    }
}

TEST_CASE("boundary orders are capped at the multiplicity") {
    const HbSpace s1 = HbSpace::make(kHalfPlus);
    CHECK(classify(s1, z_minus_one(3)).boundary_orders[0].order == 1);
    const HbSpace s3 = HbSpace::make(kDeg3);
    CHECK(classify(s3, z_minus_one(2)).boundary_orders[0].order == 2);
    CHECK(classify(s3, z_minus_one(5)).boundary_orders[0].order == 3);
}

TEST_CASE("canonical form and unimodular inner factor") {
    const HbSpace s = HbSpace::make(kDeg2);
    const RationalFn f(Poly::linear_power(1.0, 1) * Poly{-0.3, 1.0} * Poly{2.5, 1.0}, Poly{1.0, -0.4});
    const SubspaceDescriptor d = classify(s, f);
    REQUIRE(d.theta_zeros.size() == 1);
    CHECK(std::abs(d.theta_zeros[0].center - 0.3) < 1e-10);
    for (int k = 0; k < 64; ++k) {
        const cplx z = std::polar(1.0, 2.0 * 3.141592653589793 * k / 64.0);
        CHECK(std::abs(std::abs(d.theta(z)) - 1.0) < 1e-9);
    }
    const RationalFn c = canonical_form(d);
    const RationalFn expected = RationalFn(Poly::linear_power(1.0, 1) * Poly{-0.3, 1.0}, Poly{1.0, -0.3});
    CHECK(sup_deviation_on_circle(c, expected, 64, 0.9) < 1e-9);

    SubspaceDescriptor zero;
    zero.form = SubspaceForm::zero;
    CHECK(canonical_form(zero).is_zero());
}

TEST_CASE("cyclicity examples") {
    const HbSpace s = HbSpace::make(kHalfPlus);
    const CyclicWitness wb = cyclic_witness(s, kHalfPlus);
    CHECK(wb.cyclic);
    REQUIRE(wb.boundary_values.size() == 1);
    CHECK(std::abs(wb.boundary_values[0].second - 1.0) < 1e-12);

    const CyclicWitness wz = cyclic_witness(s, RationalFn(Poly{0.0, 1.0}));
    CHECK_FALSE(wz.cyclic);
    CHECK(wz.inner_zeros.size() == 1);

    CHECK_FALSE(is_cyclic(s, z_minus_one(1)));
    CHECK(is_cyclic(HbSpace::make(kHalfZ), z_minus_one(1)));
}

TEST_CASE("membership examples") {
    const HbSpace s = HbSpace::make(kHalfPlus);
    Gen g(61);
    CHECK(membership(s, RationalFn(g.poly(7))).member);
    CHECK_FALSE(membership(s, RationalFn(Poly{1.0}, Poly{1.0, -1.0})).member);

    const RationalFn blaschke(Poly{-0.5, 1.0}, Poly{1.0, -0.5});
    const Membership m = membership(s, blaschke);
    CHECK(m.member);
    CHECK(m.residual < 1e-12);
    CHECK(m.p.degree() <= 0);
    CHECK(std::abs(m.p[0] - blaschke(1.0)) < 1e-12);

    const RationalFn pole_inside(Poly{1.0}, Poly{-0.5, 1.0});
    CHECK_THROWS_AS(membership(s, pole_inside), Error);
}

TEST_CASE("property: Hermite decomposition reproduces f") {
    Gen g(62);
    for (const RationalFn& b : {kDeg3, kTwoPoint, kDeg2}) {
        const HbSpace s = HbSpace::make(b);
        Poly prod = Poly::constant(1.0);
        for (const auto& z : s.boundary_zeros()) prod = prod * Poly::linear_power(z.point, z.multiplicity);
        for (int trial = 0; trial < 10; ++trial) {
            const RationalFn f(g.poly(g.integer(0, 6)), Poly{1.0, -g.in_disk(0.6)});
            const Membership m = membership(s, f);
            REQUIRE(m.member);
            CHECK(m.residual < 1e-10);
            CHECK(m.p.degree() < prod.degree());
            for (int k = 0; k < 8; ++k) {
                const cplx z = g.in_disk(1.0);
                const cplx lhs = f(z);
                const cplx rhs = prod(z) * m.g(z) + m.p(z);
                CHECK(std::abs(lhs - rhs) <= 1e-9 * (1.0 + std::abs(lhs)));
            }
        }
    }
}

TEST_CASE("subspace distance examples") {
    const HbSpace s = HbSpace::make(kHalfPlus);
    CHECK(subspace_distance(s, z_minus_one(2), z_minus_one(2), 12).angle < 1e-8);

    // [z - 1] = M(a) has codimension one, so the gap is pi/2 at every K
    for (int K : {4, 12, 24, 48}) CHECK(subspace_distance(s, z_minus_one(1), kOne, K).angle >= 0.3);
}

TEST_CASE("collapse of the boundary order above the multiplicity") {
    // [(z-1)^2] = [z-1] in the n = 1 space; the oracle converges like K^(-1/2)
    const HbSpace s = HbSpace::make(kHalfPlus);
    double prev = 10.0;
    for (int K : {12, 24, 48, 100}) {
        const Distance d = subspace_distance(s, z_minus_one(2), z_minus_one(1), K);
        CHECK(d.angle < prev);
        CHECK(d.f_to_span_h < 1e-10);  // (z-1)^2 lies in [z-1]
        const double scaled = d.angle * std::sqrt(static_cast<double>(K));
        CHECK(scaled > 1.5);
        CHECK(scaled < 2.5);
        prev = d.angle;
    }
    CHECK(prev <= 0.2);
}

TEST_CASE("repeated boundary point orders on the degree 2 model") {
    const HbSpace s = HbSpace::make(kDeg2);
    CHECK(s.multiplicity_at(1.0) == 2);
    // each order up to the multiplicity gives a distinct subspace
    CHECK(subspace_distance(s, kOne, z_minus_one(1), 12).angle >= 0.3);
    CHECK(subspace_distance(s, z_minus_one(1), z_minus_one(2), 12).angle >= 0.3);
    // an outer factor does not change the subspace
    const RationalFn shifted(Poly::linear_power(1.0, 1) * Poly{2.0, 1.0});
    CHECK(subspace_distance(s, shifted, z_minus_one(1), 12).angle <= 0.15);
    // order 3 collapses onto order 2
    double prev = 10.0;
    for (int K : {12, 24, 48}) {
        const double a = subspace_distance(s, z_minus_one(3), z_minus_one(2), K).angle;
        CHECK(a < prev);
        prev = a;
    }
}

TEST_CASE("two boundary points classify independently") {
    const HbSpace s = HbSpace::make(kTwoPoint);
    REQUIRE(s.boundary_zeros().size() == 2);
    const SubspaceDescriptor d = classify(s, RationalFn(Poly{-1.0, 1.0} * Poly{3.0, 1.0}));
    int total = 0;
    for (const auto& bo : d.boundary_orders) {
        if (std::abs(bo.point - 1.0) < 1e-9) CHECK(bo.order == 1);
        if (std::abs(bo.point + 1.0) < 1e-9) CHECK(bo.order == 0);
        total += bo.order;
    }
    CHECK(total == 1);
    const RationalFn plus_one(Poly{1.0, 1.0});
    CHECK(subspace_distance(s, z_minus_one(1), plus_one, 12).angle >= 0.3);
    CHECK(subspace_distance(s, RationalFn(Poly{-1.0, 0.0, 1.0}), z_minus_one(1), 12).angle >= 0.3);
}

TEST_CASE("literal principal angle of truncated spans does not converge") {
    // the top shifted generators never align, even for equal subspaces
    const HbSpace s = HbSpace::make(kDeg2);
    const RationalFn f(Poly::linear_power(1.0, 1) * Poly{2.0, 1.0});
    const double a12 = largest_principal_angle(s, f, z_minus_one(1), 12);
    const double a24 = largest_principal_angle(s, f, z_minus_one(1), 24);
    CHECK(a12 > 0.3);
    CHECK(a24 > 0.3);
    CHECK(subspace_distance(s, f, z_minus_one(1), 24).angle < 1e-3);
}

TEST_CASE("rank deficiency of the shifted generators") {
    const HbSpace h2 = HbSpace::make(RationalFn{});
    try {
        subspace_distance(h2, z_minus_one(6), kOne, 200);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::rank_deficiency);
    }
    CHECK_NOTHROW(subspace_distance(h2, z_minus_one(6), kOne, 12));
}

TEST_CASE("ladder spaces") {
    const auto l1 = ladder_spaces(HbSpace::make(kHalfPlus));
    REQUIRE(l1.size() == 1);
    REQUIRE(l1[0].size() == 1);
    CHECK(l1[0][0] == Poly{1.0});

    const auto l3 = ladder_spaces(HbSpace::make(kDeg3));
    REQUIRE(l3.size() == 3);
    REQUIRE(l3[1].size() == 2);
    CHECK(relative_distance(l3[1][0], Poly{-1.0, 1.0}) < 1e-9);
    CHECK(relative_distance(l3[1][1], Poly{1.0, -2.0, 1.0}) < 1e-9);

    const HbSpace two = HbSpace::make(kTwoPoint);
    try {
        ladder_spaces(two);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::multiple_boundary_zero);
    }
    const HbSpace no_point = HbSpace::make(kHalfZ);
    CHECK_THROWS_AS(ladder_spaces(no_point), Error);
}

TEST_CASE("ladder orthogonality and shift invariance") {
    for (const RationalFn& b : {kHalfPlus, kDeg2, kDeg3}) {
        const HbSpace s = HbSpace::make(b);
        const auto ladders = ladder_spaces(s);
        const int n = static_cast<int>(ladders.size());
        for (int k = 0; k <= n; ++k)
            for (int i = 0; i < n; ++i) {
                const Poly f = Poly::linear_power(1.0, k);
                const cplx pairing = s.inner_product(s.vector(f), s.kernel_derivative_vector(1.0, i));
                CHECK(std::abs(pairing - derivative_at(f, i, 1.0)) < 1e-8);
                if (i < k) CHECK(std::abs(pairing) < 1e-8);
            }
        for (int j = 0; j < n; ++j)
            for (const Poly& g : ladders[static_cast<std::size_t>(j)])
                for (int i = 0; i < j; ++i) {
                    const HbVector zg = s.shift(s.vector(g));
                    CHECK(std::abs(s.inner_product(zg, s.kernel_derivative_vector(1.0, i))) < 1e-8);
                }
    }
}

TEST_CASE("property: polynomial multipliers keep a finite norm") {
    Gen g(63);
    for (const RationalFn& b : {kHalfPlus, kDeg3, kTwoPoint}) {
        const HbSpace s = HbSpace::make(b);
        for (int trial = 0; trial < 20; ++trial) {
            const Poly phi = g.poly(g.integer(0, 4));
            const Poly f = g.poly(g.integer(0, 8));
            const double n = s.norm_sq(s.vector(phi * f));
            CHECK(std::isfinite(n));
            CHECK(n >= (phi * f).l2_norm() * (phi * f).l2_norm() * (1.0 - 1e-12));
        }
    }
}

TEST_CASE("property: classification agrees with the distance oracle") {
    const RationalFn one(Poly{1.0});
    for (std::uint64_t seed : {11u, 12u}) {
        for (const auto& [name, b] : lattice_spaces()) {
            CAPTURE(name);
            const HbSpace s = HbSpace::make(b);
            for (const RationalFn& f : lattice_corpus(s, 8, seed)) {
                const SubspaceDescriptor d = classify(s, f);
                for (const auto& bo : d.boundary_orders) CHECK(bo.order <= bo.multiplicity);
                CHECK(subspace_distance(s, f, canonical_form(d), 12).angle <= 0.15);
                const auto rivals = competing_forms(d);
                CHECK(!rivals.empty());
                for (const auto& c : rivals) CHECK(subspace_distance(s, f, canonical_form(c), 12).angle >= 0.3);
                CHECK(is_cyclic(s, f) == (subspace_distance(s, f, one, 12).angle <= 0.15));
            }
        }
    }
}

TEST_CASE("lattice corpus is reproducible") {
    const HbSpace s = HbSpace::make(kDeg3);
    const auto a = lattice_corpus(s, 6, 5);
    const auto b = lattice_corpus(s, 6, 5);
    REQUIRE(a.size() == 6);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].num() == b[i].num());
        CHECK(a[i].den() == b[i].den());
    }
    // every fourth function is cyclic by construction
    CHECK(is_cyclic(s, a[0]));
    CHECK(is_cyclic(s, a[4]));
}
