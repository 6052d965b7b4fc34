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


#ifndef HB_SPECTRAL_HPP
#define HB_SPECTRAL_HPP

#include <cstdint>
#include <vector>

#include "hb/rational.hpp"
#include "hb/roots.hpp"
#include "hb/tolerances.hpp"

namespace hb {

struct BoundaryZero {
    cplx point;  // on the unit circle
    int multiplicity = 1;
};

struct MateResult {
    RationalFn a;
    std::vector<BoundaryZero> boundary_zeros;
    double residual = 0.0;  // max over the grid of ||a|^2 + |b|^2 - 1|
};

struct SpectralOptions {
    Tolerances tol;
    int grid = kDefaultGrid;
    std::uint64_t seed = 0x5eed;
};

/// max |f| over n equally spaced points of the unit circle
double sup_on_circle(const RationalFn& f, int n);

/// Throws pole_in_disk unless the denominator has no root in |z| <= 1.
void require_analytic_on_closed_disk(const RationalFn& f, const Tolerances& tol = {});

/// True unless 1 - |b|^2 vanishes identically on the circle.
/// Throws not_in_unit_ball when the grid supremum of |b| exceeds 1 + 10 * mate tolerance.
bool is_nonextreme(const RationalFn& b, const SpectralOptions& opt = {});

/// Outer a with a(0) > 0 and |a|^2 + |b|^2 = 1 on the circle, by spectral
/// factorization of |q|^2 - |p|^2 for b = p/q.
MateResult pythagorean_mate(const RationalFn& b, const SpectralOptions& opt = {});

struct InnerOuter {
    RationalFn inner;  // finite Blaschke product, no constant factor
    RationalFn outer;
    std::vector<RootCluster> inner_zeros;
};

/// f = inner * outer where inner collects the zeros of f in the open disk.
InnerOuter inner_outer(const RationalFn& f, const SpectralOptions& opt = {});

/// Number of leading derivatives of f vanishing at the unit-modulus point.
int boundary_order(const RationalFn& f, cplx point, const Tolerances& tol = {});

}  // namespace hb

#endif  // HB_SPECTRAL_HPP
