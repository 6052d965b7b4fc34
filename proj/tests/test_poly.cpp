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


#include <algorithm>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "hb/error.hpp"
#include "hb/json_io.hpp"
#include "hb/rational.hpp"
#include "hb/roots.hpp"
#include "support.hpp"

using namespace hb;
using hbtest::Gen;

namespace {

bool contains_root(const std::vector<cplx>& rs, cplx r, double tol) {
    return std::any_of(rs.begin(), rs.end(), [&](cplx x) { return std::abs(x - r) <= tol; });
}

}  // namespace

TEST_CASE("eval examples") {
    CHECK((Poly{1.0, 1.0}(cplx(0, 1)) == cplx(1, 1)));
    const RationalFn f(Poly{0.75, -0.25});
    CHECK(std::abs(f(0.0) - 0.75) < 1e-15);
    CHECK((Poly{}(cplx(0.3, 0.2)) == cplx{}));
    CHECK(Poly{}.degree() == kZeroDegree);
}

TEST_CASE("rational eval rejects poles") {
    const RationalFn f(Poly{1.0}, Poly{-1.0, 1.0});
    CHECK_THROWS_AS(f(1.0), Error);
    try {
        f(1.0);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::pole_at_point);
        CHECK_FALSE(e.numerical());
    }
    CHECK(std::abs(f(0.5) + 2.0) < 1e-15);
}

TEST_CASE("derivative examples") {
    CHECK((Poly{1.0, 0.0, 1.0}.derivative() == Poly{0.0, 2.0}));
    CHECK(Poly::constant(5.0).derivative().is_zero());
    // (z-1)^3 = -1 + 3z - 3z^2 + z^3, derivative by binomial expansion of 3(z-1)^2
    const Poly cube = Poly::linear_power(1.0, 3);
    Poly expected;
    for (int k = 0; k <= 2; ++k) expected += Poly::monomial(k, 3.0 * hbtest::binom(2, k) * std::pow(-1.0, 2 - k));
    CHECK(relative_distance(cube.derivative(), expected) < 1e-15);
}

TEST_CASE("reflect examples") {
    CHECK((Poly{1.0, 2.0}.reflect(1) == Poly{2.0, 1.0}));
    CHECK((Poly{1.0, 3.0, 1.0}.reflect(2) == Poly{1.0, 3.0, 1.0}));
    CHECK((Poly{cplx(0, 1), 1.0}.reflect(1) == Poly{1.0, cplx(0, -1)}));
    const Poly quad{1.0, 1.0, 1.0};
    CHECK_THROWS_AS(quad.reflect(1), Error);
}

TEST_CASE("roots examples") {
    const auto r1 = roots(Poly{-1.0, 0.0, 1.0});
    REQUIRE(r1.size() == 2);
    CHECK(contains_root(r1, 1.0, 1e-12));
    CHECK(contains_root(r1, -1.0, 1e-12));

    const auto c2 = root_clusters(Poly::linear_power(1.0, 2));
    REQUIRE(c2.size() == 1);
    CHECK(c2[0].multiplicity == 2);
    CHECK(std::abs(c2[0].center - 1.0) < 1e-10);

    const auto r3 = roots(Poly{-1.0, 0.0, 0.0, 1.0});
    REQUIRE(r3.size() == 3);
    for (cplx r : r3) {
        CHECK(std::abs(std::abs(r) - 1.0) < 1e-12);
        CHECK(std::abs(std::pow(r, 3) - 1.0) < 1e-12);
    }
    CHECK_THROWS_AS(roots(Poly::constant(2.0)), Error);
}

TEST_CASE("multiple boundary roots are clustered") {
    for (int k = 2; k <= 6; ++k) {
        const Poly p = Poly::linear_power(1.0, k) * Poly{2.0, 1.0};
        const auto cl = root_clusters(p);
        REQUIRE(cl.size() == 2);
        const auto& one = std::abs(cl[0].center - 1.0) < std::abs(cl[1].center - 1.0) ? cl[0] : cl[1];
        CHECK(one.multiplicity == k);
        CHECK(std::abs(one.center - 1.0) < 1e-8);
    }
    // two close but distinct roots stay separate
    const Poly q = Poly::from_roots(std::vector<cplx>{0.5, 0.5 + 1e-3, -0.3});
    CHECK(root_clusters(q).size() == 3);
}

TEST_CASE("property: product evaluates as product of values") {
    Gen g(11);
    for (int trial = 0; trial < 20; ++trial) {
        const Poly p = g.poly(g.integer(0, 16));
        const Poly q = g.poly(g.integer(0, 16));
        const Poly pq = p * q;
        for (int i = 0; i < 100; ++i) {
            const cplx z = g.in_disk(1.0);
            const cplx expect = hbtest::eval_by_powers(p, z) * hbtest::eval_by_powers(q, z);
            const double scale = p.magnitude_at(z) * q.magnitude_at(z);
            CHECK(std::abs(pq(z) - expect) <= 1e-10 * scale);
        }
    }
}

TEST_CASE("property: roots re-expand to the coefficients") {
    Gen g(12);
    for (int trial = 0; trial < 40; ++trial) {
        const int d = g.integer(1, 12);
        const Poly p = g.poly(d);
        RootOptions opt;
        opt.seed = static_cast<std::uint64_t>(trial);
        const auto rs = roots(p, opt);
        REQUIRE(static_cast<int>(rs.size()) == d);
        CHECK(relative_distance(Poly::from_roots(rs, p.leading()), p) < 1e-8);
        for (cplx r : rs) CHECK(std::abs(p(r)) <= 1e-11 * p.magnitude_at(r));
    }
}

TEST_CASE("property: reflect is an involution") {
    Gen g(13);
    for (int trial = 0; trial < 50; ++trial) {
        const Poly p = g.poly(g.integer(0, 10));
        const int d = p.degree() + g.integer(0, 3);
        CHECK(p.reflect(d).reflect(d) == p);
        for (int k = 0; k <= d; ++k) CHECK(p.reflect(d)[k] == std::conj(p[d - k]));
    }
}

TEST_CASE("divmod, shifts and pairing") {
    Gen g(14);
    for (int trial = 0; trial < 20; ++trial) {
        const Poly p = g.poly(g.integer(0, 12));
        const Poly d = g.poly(g.integer(1, 5));
        auto [q, r] = divmod(p, d);
        CHECK(r.degree() < d.degree());
        // backward error relative to the size of the quotient times divisor
        const Poly diff = q * d + r - p;
        CHECK(diff.scale() <= 1e-13 * (q.scale() * d.scale() * (d.degree() + 1) + p.scale()));
        CHECK(backward_shift(shift_up(p)) == p);
    }
    CHECK((backward_shift(Poly{1.0, 2.0}) == Poly{2.0}));
    CHECK(shift_up(Poly::constant(1.0)) == Poly::monomial(1));
    CHECK((h2_pairing(Poly{1.0, cplx(0, 1)}, Poly{2.0, 1.0}) == cplx(2.0, 1.0)));
}

TEST_CASE("taylor coefficients at a point") {
    const Poly p = Poly::linear_power(2.0, 4);
    const auto t = p.taylor_at(2.0);
    REQUIRE(t.size() == 5);
    for (int j = 0; j < 4; ++j) CHECK(std::abs(t[static_cast<std::size_t>(j)]) < 1e-12);
    CHECK(std::abs(t[4] - 1.0) < 1e-12);
    CHECK(vanishing_order(Poly::linear_power(1.0, 2), 1.0, 1e-9) == 2);
    CHECK((vanishing_order(Poly{0.5, 0.5}, 1.0, 1e-9) == 0));
    CHECK((vanishing_order(Poly{0.0, -1.0, 1.0}, 1.0, 1e-9) == 1));
}

TEST_CASE("gcd and deflation") {
    const Poly p = Poly::linear_power(1.0, 2) * Poly{3.0, 1.0};
    const Poly q = Poly::linear_power(1.0, 3) * Poly{0.5, 1.0};
    const Poly g = gcd(p, q);
    CHECK(relative_distance(g, Poly::linear_power(1.0, 2)) < 1e-8);
    CHECK((gcd(Poly{1.0, 1.0}, Poly{2.0, 1.0}) == Poly::constant(1.0)));
    auto [quo, k] = deflate(q, 1.0, 10, 1e-9);
    CHECK(k == 3);
    CHECK((relative_distance(quo, Poly{0.5, 1.0}) < 1e-10));
}

TEST_CASE("rational reduction cancels common roots") {
    // (z-1/2)(z+3) / ((z-1/2)(z-4))
    const Poly common{-0.5, 1.0};
    const RationalFn f(common * Poly{3.0, 1.0}, common * Poly{-4.0, 1.0});
    const RationalFn r = f.reduced();
    CHECK(r.num().degree() == 1);
    CHECK(r.den().degree() == 1);
    CHECK(std::abs(r.den()[0] - 1.0) < 1e-15);
    CHECK(std::abs(r(0.3) - (3.3 / (0.3 - 4.0))) < 1e-12);
    CHECK((RationalFn(Poly{}, Poly{2.0, 1.0}).reduced().is_zero()));
    CHECK_THROWS_AS(RationalFn(Poly{1.0}, Poly{}), Error);
}

TEST_CASE("rational taylor and arithmetic") {
    // 1/(1 - z/2) = sum 2^-k z^k
    const RationalFn f(Poly{1.0}, Poly{1.0, -0.5});
    const Poly t = f.taylor(20);
    for (int k = 0; k <= 20; ++k) CHECK(std::abs(t[k] - std::pow(0.5, k)) < 1e-15);
    CHECK_THROWS_AS(RationalFn(Poly{1.0}, Poly{0.0, 1.0}).taylor(3), Error);

    Gen g(15);
    const RationalFn a(g.poly(3), Poly{2.0, 0.5});
    const RationalFn b(g.poly(2), Poly{3.0, 0.0, 1.0});
    for (int i = 0; i < 10; ++i) {
        const cplx z = g.in_disk(0.9);
        CHECK(std::abs((a + b)(z) - (a(z) + b(z))) < 1e-12);
        CHECK(std::abs((a - b)(z) - (a(z) - b(z))) < 1e-12);
        CHECK(std::abs((a * b)(z) - a(z) * b(z)) < 1e-12);
        CHECK(std::abs((a / b)(z) - a(z) / b(z)) < 1e-10 * std::abs(a(z) / b(z)));
        // derivative against a central difference
        const double h = 1e-5;
        const cplx fd = (a(z + h) - a(z - h)) / (2.0 * h);
        CHECK(std::abs(a.derivative()(z) - fd) < 1e-8);
    }
    CHECK(sup_deviation_on_circle(a, a, 64) == 0.0);
}

TEST_CASE("json round trip") {
    Gen g(16);
    for (int trial = 0; trial < 10; ++trial) {
        const RationalFn f(g.poly(g.integer(0, 8)), g.poly(g.integer(0, 4)));
        const RationalFn back = json::parse(json(f).dump()).get<RationalFn>();
        CHECK(relative_distance(back.num(), f.num()) <= 1e-15);
        CHECK(relative_distance(back.den(), f.den()) <= 1e-15);
    }
    const RationalFn p = parse_rational(R"({"coeffs": [[0.5, 0], 0.5]})");
    CHECK(p.is_polynomial());
    CHECK((p.num() == Poly{0.5, 0.5}));
    CHECK_THROWS_AS(parse_rational("{\"coeffs\": 3}"), Error);
    CHECK_THROWS_AS(parse_rational("/nonexistent/file.json"), Error);
}
