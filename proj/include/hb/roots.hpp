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


#ifndef HB_ROOTS_HPP
#define HB_ROOTS_HPP

#include <cstdint>
#include <vector>

#include "hb/error.hpp"
#include "hb/poly.hpp"
#include "hb/tolerances.hpp"

namespace hb {

struct RootOptions {
    double residual_tol = Tolerances{}.root;
    double cluster_tol = Tolerances{}.cluster;
    int max_iterations = 500;
    std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
};

struct RootCluster {
    cplx center;
    int multiplicity = 1;
};

/// Raised when neither Aberth iteration nor the companion-matrix fallback
/// meets the residual bound. Carries the best approximations found.
class RootError : public Error {
public:
    RootError(const std::string& what, std::vector<cplx> partial)
        : Error(Errc::non_convergence, what), partial_(std::move(partial)) {}
    const std::vector<cplx>& partial() const noexcept { return partial_; }

private:
    std::vector<cplx> partial_;
};

/// Roots with multiplicity grouped into clusters. A group of approximations
/// is merged into one cluster only when the Taylor coefficients of p at the
/// refined center vanish up to the group size.
std::vector<RootCluster> root_clusters(const Poly& p, const RootOptions& opt = {});

/// All deg(p) roots; multiple roots are returned as repeated cluster centers.
std::vector<cplx> roots(const Poly& p, const RootOptions& opt = {});

/// Raw simultaneous-iteration approximations, no clustering.
std::vector<cplx> aberth_roots(const Poly& p, const RootOptions& opt = {});

/// Order of vanishing of p at z0: number of leading Taylor coefficients
/// t_j with |t_j| <= tol * sum_i |p_i| C(i,j) |z0|^(i-j).
int vanishing_order(const Poly& p, cplx z0, double tol);

/// Monic greatest common divisor found by matching root clusters of p
/// against the vanishing order of q.
Poly gcd(const Poly& p, const Poly& q, double tol = Tolerances{}.gcd, const RootOptions& opt = {});

/// Divide p by (z - r)^k as long as the remainder stays below tol relative
/// to p; returns the quotient and the number of factors removed.
std::pair<Poly, int> deflate(const Poly& p, cplx r, int max_k, double tol);

}  // namespace hb

#endif  // HB_ROOTS_HPP
