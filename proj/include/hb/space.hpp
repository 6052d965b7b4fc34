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


#ifndef HB_SPACE_HPP
#define HB_SPACE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "hb/matrix.hpp"
#include "hb/rational.hpp"
#include "hb/spectral.hpp"
#include "hb/tolerances.hpp"

namespace hb {

/// A member of H(b) stored as the pair (f, f+) with T_conj(a) f+ = T_conj(b) f.
/// For rational members both parts are Taylor truncations and `tail`
/// bounds the discarded part of the norm.
struct HbVector {
    Poly f;
    Poly plus;
    double tail = 0.0;
};

struct SpaceOptions {
    Tolerances tol;
    int grid = kDefaultGrid;
    std::uint64_t seed = 0x5eed;
    /// Compare a(0)^-2 - 1 against the computed norm of b at construction.
    bool cross_check = true;
};

struct NormReport {
    double norm_b_sq_closed = 0.0;
    double norm_b_sq_computed = 0.0;
    double norm_Lb_sq_closed = 0.0;
    double norm_Lb_sq_computed = 0.0;
    int truncation = 0;
    double tail = 0.0;

    double b_gap() const { return std::abs(norm_b_sq_closed - norm_b_sq_computed); }
    double Lb_gap() const { return std::abs(norm_Lb_sq_closed - norm_Lb_sq_computed); }
};

/// H(b) for a rational nonextreme b. Immutable once built.
class HbSpace {
public:
    static HbSpace make(const RationalFn& b, const SpaceOptions& opt = {});

    const RationalFn& b() const noexcept { return b_; }
    const RationalFn& mate() const noexcept { return a_; }
    int degree() const noexcept { return n_; }
    const std::vector<BoundaryZero>& boundary_zeros() const noexcept { return zeros_; }
    int max_boundary_multiplicity() const noexcept;
    /// Multiplicity of the mate's zero at p, 0 if p is not a boundary zero.
    int multiplicity_at(cplx p) const noexcept;
    double mate_residual() const noexcept { return residual_; }
    double a0() const noexcept { return a0_; }
    /// a(0)^-2 - 1
    double norm_b_sq() const noexcept { return 1.0 / (a0_ * a0_) - 1.0; }
    /// 1 - |b(0)|^2 - a(0)^2
    double norm_Lb_sq() const noexcept { return 1.0 - std::norm(b0_) - a0_ * a0_; }
    const Tolerances& tolerances() const noexcept { return opt_.tol; }
    const SpaceOptions& options() const noexcept { return opt_; }
    /// |a(0)^-2 - 1 - computed norm of b| from construction; empty when the
    /// check was disabled or b has poles too close to the circle to truncate.
    std::optional<double> cross_check_gap() const noexcept { return cross_check_gap_; }

    /// Taylor coefficients of b and a up to degree n.
    Poly b_taylor(int n) const;
    Poly a_taylor(int n) const;

    /// (1 - conj(b(lambda)) b(z)) / (1 - conj(lambda) z)
    cplx kernel(cplx lambda, cplx z) const;
    RationalFn kernel_fn(cplx lambda) const;
    /// i-th derivative in conj(w) of the kernel at w, as a function of z.
    /// w may be a boundary zero of the mate when i is below its multiplicity.
    RationalFn kernel_derivative(cplx w, int i) const;
    /// Plus-function of kernel_derivative(w, i) in closed form.
    RationalFn kernel_derivative_plus(cplx w, int i) const;

    /// Back-substitution for the plus-function of a polynomial.
    Poly plus_function(const Poly& f) const;
    /// max coefficient of |T_conj(a) f+ - T_conj(b) f| relative to the data scale
    double plus_residual(const Poly& f, const Poly& plus) const;

    HbVector vector(const Poly& f) const { return {f, plus_function(f), 0.0}; }
    HbVector kernel_vector(cplx lambda, int truncation = kDefaultTruncation) const;
    HbVector kernel_derivative_vector(cplx w, int i, int truncation = kDefaultTruncation) const;
    /// b and Lb with closed-form plus-functions 1/a(0) - a and -La.
    HbVector b_vector(int truncation) const;
    HbVector Lb_vector(int truncation) const;
    /// Generic rational member: Taylor truncation at an adaptive degree
    /// chosen from the pole radius and the boundary multiplicities.
    HbVector from_rational(const RationalFn& f, int max_truncation = 4096) const;
    /// Truncation degree from_rational would use for f.
    int truncation_for(const RationalFn& f, int max_truncation = 4096) const;

    /// z f, with the plus-function updated in O(deg).
    HbVector shift(const HbVector& v) const;

    cplx inner_product(const Poly& f, const Poly& g) const;
    cplx inner_product(const HbVector& f, const HbVector& g) const;
    double norm_sq(const HbVector& f) const { return inner_product(f, f).real(); }

    /// Entry (j, k) = <z^k, z^j>_b for j, k < n.
    ComplexMatrix gram_matrix(int n) const;

    NormReport norm_identities_check() const;

private:
    HbSpace() = default;

    RationalFn b_;
    RationalFn a_;
    int n_ = 0;
    std::vector<BoundaryZero> zeros_;
    double residual_ = 0.0;
    double a0_ = 1.0;
    cplx b0_{};
    Poly b_cache_;
    Poly a_cache_;
    SpaceOptions opt_;
    std::optional<double> cross_check_gap_;
};

/// (f(z) - f(0)) / z for a rational function analytic at 0.
RationalFn backward_shift(const RationalFn& f);

}  // namespace hb

#endif  // HB_SPACE_HPP
