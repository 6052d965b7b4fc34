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


#ifndef HB_RATIONAL_HPP
#define HB_RATIONAL_HPP

#include "hb/poly.hpp"
#include "hb/tolerances.hpp"

namespace hb {

/// Quotient num/den of two polynomials. The denominator is never zero.
/// Arithmetic does not reduce automatically; call reduced() to cancel
/// common roots.
class RationalFn {
public:
    RationalFn() : num_(), den_(Poly::constant(1.0)) {}
    RationalFn(Poly num);  // NOLINT(google-explicit-constructor): polynomials are rational
    RationalFn(Poly num, Poly den);

    const Poly& num() const noexcept { return num_; }
    const Poly& den() const noexcept { return den_; }

    /// max(deg num, deg den); the zero function has degree 0.
    int degree() const noexcept;
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const noexcept { return den_.degree() == 0; }

    /// Throws pole_at_point when |den(z)| < tol * sum |den_k| |z|^k.
    cplx eval(cplx z, double pole_tol = Tolerances{}.pole) const;
    cplx operator()(cplx z) const { return eval(z); }

    RationalFn derivative() const;
    /// Cancel common roots of num and den (roots matched within gcd_tol),
    /// drop negligible leading terms and scale so den(0) = 1 when possible.
    RationalFn reduced(const Tolerances& tol = {}) const;
    /// Taylor coefficients at 0 up to degree n. Requires den(0) != 0.
    Poly taylor(int n) const;
    /// Conjugated coefficients: z -> conj(f(conj(z))).
    RationalFn conj_coeffs() const { return {num_.conj_coeffs(), den_.conj_coeffs()}; }
    /// f(c z)
    RationalFn scaled_argument(cplx c) const {
        return {num_.scaled_argument(c), den_.scaled_argument(c)};
    }

    RationalFn& operator*=(cplx s) {
        num_ *= s;
        return *this;
    }

    friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator-(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator/(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator*(cplx s, RationalFn a) { return a *= s; }

private:
    Poly num_;
    Poly den_;
};

/// Largest pointwise deviation |f(z) - g(z)| over n equally spaced points
/// on the circle of radius r.
double sup_deviation_on_circle(const RationalFn& f, const RationalFn& g, int n, double r = 1.0);

}  // namespace hb

#endif  // HB_RATIONAL_HPP
