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


#include "hb/roots.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>

namespace hb {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Taylor coefficients at z0 must be this small (relative) for a group of
// approximations to be accepted as one multiple root.
constexpr double kClusterCheck = 1e-10;

// Single-linkage radii tried after the initial greedy union.
constexpr double kClusterRadii[] = {1e-6, 1e-5, 1e-4, 1e-3, 3e-3, 1e-2, 3e-2, 1e-1};

// sum_i |p_i| C(i,j) |z0|^(i-j) for every j
std::vector<double> taylor_magnitudes(const Poly& p, cplx z0) {
    std::vector<cplx> mags(p.coeffs().size());
    std::transform(p.coeffs().begin(), p.coeffs().end(), mags.begin(),
                   [](cplx c) { return cplx(std::abs(c)); });
    const auto t = Poly(std::move(mags)).taylor_at(std::abs(z0));
    std::vector<double> out(t.size());
    std::transform(t.begin(), t.end(), out.begin(), [](cplx c) { return c.real(); });
    return out;
}

bool backward_stable(const Poly& p, cplx z, double tol) {
    return std::abs(p(z)) <= tol * p.magnitude_at(z);
}

cplx newton_polish(const Poly& p, const Poly& dp, cplx z, int steps) {
    double best = std::abs(p(z));
    for (int it = 0; it < steps && best > 0.0; ++it) {
        const cplx d = dp(z);
        if (d == cplx{}) break;
        const cplx next = z - p(z) / d;
        const double r = std::abs(p(next));
        if (!(r < best)) break;
        z = next;
        best = r;
    }
    return z;
}

std::vector<cplx> companion_roots(const Poly& p) {
    const int n = p.degree();
    Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 1; i < n; ++i) c(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) c(i, n - 1) = -p[i] / p.leading();
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(c, false);
    std::vector<cplx> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = es.eigenvalues()(i);
    return out;
}

std::vector<cplx> aberth_core(const Poly& p, const RootOptions& opt, bool& converged) {
    const int n = p.degree();
    std::mt19937_64 rng(opt.seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const double radius = std::pow(std::abs(p[0]) / std::abs(p.leading()), 1.0 / n);
    const double phase0 = 2.0 * std::numbers::pi * unif(rng);

    std::vector<cplx> z(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double r = radius * (1.0 + 0.05 * (unif(rng) - 0.5));
        z[static_cast<std::size_t>(k)] = std::polar(r, phase0 + 2.0 * std::numbers::pi * k / n + 0.25);
    }

    const Poly dp = p.derivative();
    std::vector<bool> done(static_cast<std::size_t>(n), false);
    const double stop_tol = 4.0 * n * kEps;
    for (int it = 0; it < opt.max_iterations; ++it) {
        bool all = true;
        for (std::size_t k = 0; k < z.size(); ++k) {
            if (done[k]) continue;
            const cplx pz = p(z[k]);
            if (std::abs(pz) <= stop_tol * p.magnitude_at(z[k])) {
                done[k] = true;
                continue;
            }
            all = false;
            const cplx ratio = pz / dp(z[k]);
            cplx sum{};
            for (std::size_t j = 0; j < z.size(); ++j)
                if (j != k) sum += 1.0 / (z[k] - z[j]);
            const cplx w = ratio / (1.0 - ratio * sum);
            if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) continue;
            z[k] -= w;
            if (std::abs(w) <= kEps * std::abs(z[k])) done[k] = true;
        }
        if (all) break;
    }
    converged = std::all_of(done.begin(), done.end(), [](bool b) { return b; });
    return z;
}

struct Group {
    std::vector<std::size_t> members;
    cplx center;
};

// Newton iteration on p^{(k-1)} starting from the group mean.
cplx refine_center(const Poly& p, cplx c, int k) {
    Poly d = p;
    for (int j = 0; j < k - 1; ++j) d = d.derivative();
    const Poly dd = d.derivative();
    double prev_step = std::numeric_limits<double>::infinity();
    for (int it = 0; it < 8; ++it) {
        const cplx den = dd(c);
        if (den == cplx{}) break;
        const cplx step = d(c) / den;
        if (!(std::abs(step) < prev_step)) break;
        c -= step;
        prev_step = std::abs(step);
        if (prev_step <= kEps * std::max(1.0, std::abs(c))) break;
    }
    return c;
}

bool is_multiple_root(const Poly& p, cplx c, int k) {
    const auto t = p.taylor_at(c);
    const auto s = taylor_magnitudes(p, c);
    for (int j = 0; j < k && j < static_cast<int>(t.size()); ++j)
        if (std::abs(t[static_cast<std::size_t>(j)]) > kClusterCheck * s[static_cast<std::size_t>(j)]) return false;
    return true;
}

cplx mean_of(const std::vector<cplx>& z, const std::vector<std::size_t>& idx) {
    cplx s{};
    for (std::size_t i : idx) s += z[i];
    return s / static_cast<double>(idx.size());
}

// Connected components of the "distance <= radius" graph, with the members
// of each existing group forced together.
std::vector<std::vector<std::size_t>> link_groups(const std::vector<cplx>& z, const std::vector<Group>& groups,
                                                  double radius) {
    const std::size_t n = groups.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            bool close = false;
            for (std::size_t i : groups[a].members) {
                for (std::size_t j : groups[b].members)
                    if (std::abs(z[i] - z[j]) <= radius) {
                        close = true;
                        break;
                    }
                if (close) break;
            }
            if (close) parent[find(a)] = find(b);
        }
    std::vector<std::vector<std::size_t>> comps;
    std::vector<std::ptrdiff_t> slot(n, -1);
    for (std::size_t g = 0; g < n; ++g) {
        const std::size_t r = find(g);
        if (slot[r] < 0) {
            slot[r] = static_cast<std::ptrdiff_t>(comps.size());
            comps.emplace_back();
        }
        comps[static_cast<std::size_t>(slot[r])].push_back(g);
    }
    return comps;
}

}  // namespace

std::vector<cplx> aberth_roots(const Poly& p, const RootOptions& opt) {
    if (p.degree() < 1) throw Error(Errc::invalid_argument, "roots: degree must be at least 1");

    // exact zeros at the origin
    int zeros = 0;
    while (p[zeros] == cplx{}) ++zeros;
    std::vector<cplx> out(static_cast<std::size_t>(zeros), cplx{});
    const Poly q(std::vector<cplx>(p.coeffs().begin() + zeros, p.coeffs().end()));
    if (q.degree() == 0) return out;
    if (q.degree() == 1) {
        out.push_back(-q[0] / q[1]);
        return out;
    }

    bool converged = false;
    std::vector<cplx> z = aberth_core(q, opt, converged);
    const Poly dq = q.derivative();
    auto acceptable = [&](const std::vector<cplx>& v) {
        return std::all_of(v.begin(), v.end(), [&](cplx r) { return backward_stable(q, r, opt.residual_tol); });
    };
    if (!converged || !acceptable(z)) {
        std::vector<cplx> alt = companion_roots(q);
        for (cplx& r : alt) r = newton_polish(q, dq, r, 5);
        if (!acceptable(alt)) {
            out.insert(out.end(), z.begin(), z.end());
            throw RootError("residual above tolerance after Aberth iteration and companion fallback", out);
        }
        z = std::move(alt);
    }
    out.insert(out.end(), z.begin(), z.end());
    return out;
}

std::vector<RootCluster> root_clusters(const Poly& p, const RootOptions& opt) {
    const std::vector<cplx> z = aberth_roots(p, opt);
    const Poly dp = p.derivative();

    std::vector<Group> groups;
    groups.reserve(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) groups.push_back({{i}, z[i]});

    auto merge_level = [&](double radius, bool check) {
        const auto comps = link_groups(z, groups, radius);
        std::vector<Group> next;
        for (const auto& comp : comps) {
            if (comp.size() == 1) {
                next.push_back(groups[comp.front()]);
                continue;
            }
            Group merged;
            for (std::size_t g : comp)
                merged.members.insert(merged.members.end(), groups[g].members.begin(), groups[g].members.end());
            const int k = static_cast<int>(merged.members.size());
            merged.center = refine_center(p, mean_of(z, merged.members), k);
            if (!check || is_multiple_root(p, merged.center, k)) {
                next.push_back(std::move(merged));
            } else {
                for (std::size_t g : comp) next.push_back(groups[g]);
            }
        }
        groups = std::move(next);
    };

    merge_level(opt.cluster_tol, false);
    for (double r : kClusterRadii)
        if (r > opt.cluster_tol) merge_level(r, true);

    std::vector<RootCluster> out;
    out.reserve(groups.size());
    for (const auto& g : groups) {
        const int k = static_cast<int>(g.members.size());
        const cplx c = (k == 1) ? newton_polish(p, dp, g.center, 3) : g.center;
        out.push_back({c, k});
    }
    std::sort(out.begin(), out.end(), [](const RootCluster& a, const RootCluster& b) {
        if (a.center.real() != b.center.real()) return a.center.real() < b.center.real();
        return a.center.imag() < b.center.imag();
    });
    return out;
}

std::vector<cplx> roots(const Poly& p, const RootOptions& opt) {
    std::vector<cplx> out;
    for (const auto& c : root_clusters(p, opt)) out.insert(out.end(), static_cast<std::size_t>(c.multiplicity), c.center);
    return out;
}

int vanishing_order(const Poly& p, cplx z0, double tol) {
    if (p.is_zero()) return 0;
    const auto t = p.taylor_at(z0);
    const auto s = taylor_magnitudes(p, z0);
    int k = 0;
    while (k < p.degree() && std::abs(t[static_cast<std::size_t>(k)]) <= tol * s[static_cast<std::size_t>(k)]) ++k;
    return k;
}

Poly gcd(const Poly& p, const Poly& q, double tol, const RootOptions& opt) {
    if (p.is_zero() && q.is_zero()) return {};
    if (p.is_zero()) return q * (1.0 / q.leading());
    if (q.is_zero()) return p * (1.0 / p.leading());
    const Poly& small = p.degree() <= q.degree() ? p : q;
    const Poly& other = p.degree() <= q.degree() ? q : p;
    Poly g = Poly::constant(1.0);
    if (small.degree() < 1) return g;
    for (const auto& c : root_clusters(small, opt)) {
        const int m = std::min(c.multiplicity, vanishing_order(other, c.center, tol));
        if (m > 0) g = g * Poly::linear_power(c.center, m);
    }
    return g;
}

std::pair<Poly, int> deflate(const Poly& p, cplx r, int max_k, double tol) {
    Poly cur = p;
    int k = 0;
    const Poly factor{-r, 1.0};
    while (k < max_k && cur.degree() >= 1) {
        auto [quo, rem] = divmod(cur, factor);
        if (std::abs(rem[0]) > tol * cur.magnitude_at(r)) break;
        cur = std::move(quo);
        ++k;
    }
    return {cur, k};
}

}  // namespace hb
