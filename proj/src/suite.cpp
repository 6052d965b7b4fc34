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


#include "hb/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>

#include "hb/isometry.hpp"
#include "hb/model.hpp"

namespace hb {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* pattern, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, pattern, v);
    return buf;
}

// worst value of a quantity that must stay below (or above) a threshold
class Bound {
public:
    Bound(std::string label, double threshold, bool upper)
        : label_(std::move(label)), threshold_(threshold), upper_(upper), worst_(upper ? 0.0 : HUGE_VAL) {}

    bool add(double v, const std::string& where, std::vector<std::string>& failures) {
        const bool ok = upper_ ? v <= threshold_ : v >= threshold_;
        worst_ = upper_ ? std::max(worst_, v) : std::min(worst_, v);
        if (!ok || std::isnan(v)) {
            failures.push_back(where + ": " + label_ + " = " + fmt("%.3g", v));
            return false;
        }
        return true;
    }
    std::string text() const {
        return label_ + " " + fmt("%.3g", worst_) + (upper_ ? " <= " : " >= ") + fmt("%.3g", threshold_);
    }

private:
    std::string label_;
    double threshold_;
    bool upper_;
    double worst_;
};

class Runtime {
public:
    Runtime(std::string label, double limit) : bound_(std::move(label), limit, true) {}
    void start() { t0_ = Clock::now(); }
    void stop(const std::string& where, std::vector<std::string>& failures) {
        bound_.add(seconds_since(t0_), where, failures);
    }
    std::string text() const { return bound_.text() + " s"; }

private:
    Bound bound_;
    Clock::time_point t0_;
};

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) out += (out.empty() ? "" : "; ") + p;
    return out;
}

RationalFn blaschke(const std::vector<RootCluster>& zeros) {
    Poly num = Poly::constant(1.0);
    Poly den = Poly::constant(1.0);
    for (const auto& z : zeros)
        for (int k = 0; k < z.multiplicity; ++k) {
            num = num * Poly{-z.center, 1.0};
            den = den * Poly{1.0, -std::conj(z.center)};
        }
    return {num, den};
}

std::vector<std::vector<ExtensionParams>> pipelines(std::uint64_t seed) {
    std::vector<std::vector<ExtensionParams>> out;
    for (int n = 1; n <= 3; ++n) out.emplace_back(static_cast<std::size_t>(n), ExtensionParams{1.0, std::numbers::pi});
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int n = 1; n <= 3; ++n) {
        std::vector<ExtensionParams> steps;
        for (int k = 0; k < n; ++k) {
            const double mod = 0.5 + 1.5 * unif(rng);
            const double t = std::numbers::pi * (0.5 + unif(rng));
            steps.push_back({std::polar(mod, 2.0 * std::numbers::pi * unif(rng)), t});
        }
        out.push_back(std::move(steps));
    }
    return out;
}

std::string pipeline_name(std::size_t index) { return "pipeline " + std::to_string(index + 1); }

// criterion bodies: each fills measured and failures

void mate_identity(CriterionResult& r, const SuiteOptions&) {
    Bound res("max ||a|^2+|b|^2-1|", 1e-10, true);
    Runtime time("case time", 1.0);
    for (const auto& [name, b] : acceptance_corpus()) {
        time.start();
        const HbSpace s = HbSpace::make(b);
        double worst = 0.0;
        for (int k = 0; k < 1024; ++k) {
            const cplx z = std::polar(1.0, 2.0 * std::numbers::pi * k / 1024.0);
            worst = std::max(worst, std::abs(std::norm(s.mate()(z)) + std::norm(s.b()(z)) - 1.0));
        }
        time.stop(name, r.failures);
        res.add(worst, name, r.failures);
    }
    r.measured = res.text() + ", " + time.text();
}

void rank_one_defect(CriterionResult& r, const SuiteOptions& opt) {
    Bound res("weak residual", 1e-10, true);
    for (const auto& [name, b] : acceptance_corpus())
        res.add(rank_one_identity_check(HbSpace::make(b), 50, 8, opt.seed), name, r.failures);

    const HbSpace s = HbSpace::make(RationalFn(Poly{0.5, 0.5}));
    const Poly one{1.0};
    const double lhs = defect_form(s, one, one, 1).real();
    const cplx pairing = s.inner_product(s.vector(one), s.Lb_vector(4));
    const double rhs = (1.0 + s.norm_b_sq()) * std::norm(pairing);
    Bound anchor("anchor |side - 4|", 1e-10, true);
    anchor.add(std::abs(lhs - 4.0), "(z+1)/2 left side", r.failures);
    anchor.add(std::abs(rhs - 4.0), "(z+1)/2 right side", r.failures);
    anchor.add(std::abs(s.inner_product(one, one) - 2.0), "<1,1>_b", r.failures);
    anchor.add(std::abs(s.inner_product(Poly{0.0, 1.0}, Poly{0.0, 1.0}) - 6.0), "<z,z>_b", r.failures);
    anchor.add(std::abs(s.norm_b_sq() - 3.0), "||b||^2", r.failures);
    anchor.add(std::abs(pairing - 1.0), "<1,Lb>_b", r.failures);
    r.measured = res.text() + ", " + anchor.text();
}

void strict_order(CriterionResult& r, const SuiteOptions&) {
    Bound top("beta_2n residual", 1e-8, true);
    Bound below("beta_2n-1 residual", 1e-3, false);
    Bound ann_top("annihilation residual_n", 1e-8, true);
    Bound ann_below("annihilation residual_n-1", 1e-3, false);
    Runtime time("space time", 10.0);
    for (int n = 1; n <= 3; ++n) {
        const std::string name = "model n=" + std::to_string(n);
        time.start();
        const HbSpace s = HbSpace::make(standard_model(n));
        const OrderResult ord = isometry_order(s, 2 * n, 10);
        top.add(ord.residual(2 * n), name, r.failures);
        below.add(ord.residual(2 * n - 1), name, r.failures);
        const auto ann = annihilation_check(s, 1.0, n, 10);
        ann_top.add(ann[static_cast<std::size_t>(n)], name, r.failures);
        ann_below.add(ann[static_cast<std::size_t>(n - 1)], name, r.failures);
        time.stop(name, r.failures);
    }
    r.measured = top.text() + ", " + below.text() + ", " + ann_top.text() + ", " + ann_below.text() + ", " + time.text();
}

void recursion(CriterionResult& r, const SuiteOptions& opt) {
    Bound res("weak residual", 1e-10, true);
    for (const auto& [name, b] : acceptance_corpus())
        res.add(recursion_check(HbSpace::make(b), 6, 20, 8, opt.seed), name, r.failures);
    r.measured = res.text() + " for m <= 6";
}

void extension_certificates(CriterionResult& r, const SuiteOptions& opt) {
    Bound cert("certificate deviation", 1e-10, true);
    const auto all = pipelines(opt.seed);
    for (std::size_t p = 0; p < all.size(); ++p) {
        const ModelSpec m = build_model(all[p]);
        for (std::size_t k = 0; k < m.results.size(); ++k)
            cert.add(m.results[k].certificate.deviation(), pipeline_name(p) + " step " + std::to_string(k + 1),
                     r.failures);
    }
    Bound base("base case coefficient gap", 1e-12, true);
    const HbSpace h2 = HbSpace::make(RationalFn{});
    for (double sigma : {0.5, 1.0, 2.0}) {
        const std::string name = "sigma=" + fmt("%g", sigma);
        const ExtensionResult e = extend(h2, {sigma, std::numbers::pi});
        const double s = sigma * sigma / (1.0 + sigma * sigma);
        base.add(std::abs(e.s - s), name + " s", r.failures);
        const Poly expected_num{0.0, s};
        const Poly expected_den{1.0, -(1.0 - s)};
        const cplx d0 = e.b.den()[0];
        base.add(relative_distance(e.b.num() * (1.0 / d0), expected_num), name + " numerator", r.failures);
        base.add(relative_distance(e.b.den() * (1.0 / d0), expected_den), name + " denominator", r.failures);
        const RationalFn brownian = brownian_shift_b(sigma);
        const cplx bd0 = brownian.den()[0];
        base.add(relative_distance(brownian.num() * (1.0 / bd0), expected_num), name + " Brownian numerator",
                 r.failures);
        base.add(relative_distance(brownian.den() * (1.0 / bd0), expected_den), name + " Brownian denominator",
                 r.failures);
    }
    r.measured = cert.text() + ", " + base.text();
}

void kernel_factorization(CriterionResult& r, const SuiteOptions& opt) {
    Bound res("max relative residual", 1e-10, true);
    const auto all = pipelines(opt.seed);
    for (std::size_t p = 0; p < all.size(); ++p) {
        const ModelSpec m = build_model(all[p]);
        RationalFn prev;
        for (std::size_t k = 0; k < m.results.size(); ++k) {
            const auto& step = m.results[k];
            res.add(kernel_factorization_check(prev, step.b, step.s, all[p][k].t, 100, opt.seed + k),
                    pipeline_name(p) + " step " + std::to_string(k + 1), r.failures);
            prev = step.b;
        }
    }
    r.measured = res.text();
}

void norm_identities(CriterionResult& r, const SuiteOptions&) {
    Bound gap("|closed - Gram|", 1e-8, true);
    for (const auto& [name, b] : acceptance_corpus()) {
        const NormReport n = HbSpace::make(b).norm_identities_check();
        gap.add(n.b_gap(), name + " ||b||^2", r.failures);
        gap.add(n.Lb_gap(), name + " ||Lb||^2", r.failures);
    }
    Bound anchor("anchor gap", 1e-10, true);
    const NormReport n = HbSpace::make(RationalFn(Poly{0.5, 0.5})).norm_identities_check();
    anchor.add(std::abs(n.norm_b_sq_closed - 3.0), "(z+1)/2 ||b||^2 closed", r.failures);
    anchor.add(std::abs(n.norm_b_sq_computed - 3.0), "(z+1)/2 ||b||^2 Gram", r.failures);
    anchor.add(std::abs(n.norm_Lb_sq_closed - 0.5), "(z+1)/2 ||Lb||^2 closed", r.failures);
    anchor.add(std::abs(n.norm_Lb_sq_computed - 0.5), "(z+1)/2 ||Lb||^2 Gram", r.failures);
    r.measured = gap.text() + ", " + anchor.text();
}

void reproducing(CriterionResult& r, const SuiteOptions& opt) {
    Bound res("|<f,K_lambda> - f(lambda)|", 1e-8, true);
    std::mt19937_64 rng(opt.seed);
    std::normal_distribution<double> gauss;
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (const auto& [name, b] : acceptance_corpus()) {
        const HbSpace s = HbSpace::make(b);
        double worst = 0.0;
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<cplx> c(static_cast<std::size_t>(1 + rng() % 9));
            for (auto& x : c) x = {gauss(rng), gauss(rng)};
            const Poly f(std::move(c));
            const cplx lambda = std::polar(0.8 * std::sqrt(unif(rng)), 2.0 * std::numbers::pi * unif(rng));
            worst = std::max(worst, std::abs(s.inner_product(s.vector(f), s.kernel_vector(lambda, 64)) - f(lambda)));
        }
        res.add(worst, name, r.failures);
    }
    r.measured = res.text();
}

void lattice_classification(CriterionResult& r, const SuiteOptions& opt) {
    constexpr int K = 12;
    Bound canon("canonical distance", 0.15, true);
    Bound rival("competitor distance", 0.3, false);
    Runtime time("space time", 30.0);
    int disagreements = 0;
    const RationalFn one(Poly{1.0});
    for (const auto& [name, b] : lattice_spaces()) {
        time.start();
        const HbSpace s = HbSpace::make(b);
        const auto corpus = lattice_corpus(s, 20, opt.seed);
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            const std::string where = name + " f" + std::to_string(i);
            const RationalFn& f = corpus[i];
            const SubspaceDescriptor d = classify(s, f);
            canon.add(subspace_distance(s, f, canonical_form(d), K).angle, where, r.failures);
            for (const auto& c : competing_forms(d))
                rival.add(subspace_distance(s, f, canonical_form(c), K).angle, where, r.failures);
            const bool by_oracle = subspace_distance(s, f, one, K).angle <= 0.15;
            if (by_oracle != is_cyclic(s, f)) {
                ++disagreements;
                r.failures.push_back(where + ": is_cyclic disagrees with the oracle");
            }
        }
        time.stop(name, r.failures);
    }
    r.measured = canon.text() + ", " + rival.text() + ", cyclicity disagreements " + std::to_string(disagreements) +
                 ", " + time.text();
}

void mobius_invariance(CriterionResult& r, const SuiteOptions& opt) {
    std::mt19937_64 rng(opt.seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    int changed = 0;
    int checked = 0;
    for (const auto& [name, b] : acceptance_corpus()) {
        const auto base = isometry_order(HbSpace::make(b), 12, 10).order;
        for (int k = 0; k < 5; ++k) {
            const cplx alpha = std::polar(0.7 * std::sqrt(unif(rng)), 2.0 * std::numbers::pi * unif(rng));
            const auto moved = isometry_order(HbSpace::make(mobius_normalize(b, alpha)), 12, 10).order;
            ++checked;
            if (moved != base) {
                ++changed;
                r.failures.push_back(name + ": order changed under alpha = " + fmt("%.3g", alpha.real()) + fmt("%+.3gi", alpha.imag()));
            }
        }
    }
    r.measured = "order changed in " + std::to_string(changed) + " of " + std::to_string(checked) + " cases";
}

struct CriterionEntry {
    const char* name;
    void (*body)(CriterionResult&, const SuiteOptions&);
};

constexpr CriterionEntry kCriteria[kCriterionCount] = {
    {"mate identity", mate_identity},
    {"rank-one defect", rank_one_defect},
    {"strict order", strict_order},
    {"recursion identity", recursion},
    {"extension certificates", extension_certificates},
    {"kernel factorization", kernel_factorization},
    {"norm identities", norm_identities},
    {"reproducing property", reproducing},
    {"lattice classification", lattice_classification},
    {"Mobius invariance", mobius_invariance},
};

}  // namespace

RationalFn standard_model(int n) {
    return build_model(std::vector<ExtensionParams>(static_cast<std::size_t>(n), {1.0, std::numbers::pi}))
        .results.back()
        .b;
}

std::vector<NamedSpace> acceptance_corpus() {
    return {
        {"0", RationalFn{}},
        {"z/2", RationalFn(Poly{0.0, 0.5})},
        {"(z+1)/2", RationalFn(Poly{0.5, 0.5})},
        {"Brownian sigma=1/2", brownian_shift_b(0.5)},
        {"Brownian sigma=1", brownian_shift_b(1.0)},
        {"Brownian sigma=2", brownian_shift_b(2.0)},
        {"model n=2", standard_model(2)},
        {"model n=3", standard_model(3)},
    };
}

std::vector<NamedSpace> lattice_spaces() {
    auto out = acceptance_corpus();
    out.push_back({"(1+z^2)/2", RationalFn(Poly{0.5, 0.0, 0.5})});
    return out;
}

std::vector<RationalFn> lattice_corpus(const HbSpace& s, int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    auto phase = [&] { return 2.0 * std::numbers::pi * unif(rng); };
    auto outside = [&] { return std::polar(1.5 + 1.5 * unif(rng), phase()); };
    std::vector<RationalFn> out;
    for (int c = 0; c < count; ++c) {
        Poly num = Poly::constant(std::polar(0.5 + unif(rng), phase()));
        if (c % 4 != 0) {
            for (const auto& z : s.boundary_zeros())
                num = num * Poly::linear_power(z.point, static_cast<int>(unif(rng) * (z.multiplicity + 1)));
            const int inner = static_cast<int>(unif(rng) * 3);
            for (int k = 0; k < inner; ++k) num = num * Poly{-std::polar(0.5 * std::sqrt(unif(rng)), phase()), 1.0};
        }
        const int outer = static_cast<int>(unif(rng) * 3);
        for (int k = 0; k < outer; ++k) num = num * Poly{-outside(), 1.0};
        Poly den = Poly::constant(1.0);
        if (unif(rng) < 0.5) den = Poly{-outside(), 1.0};
        out.emplace_back(num, den);
    }
    return out;
}

std::vector<SubspaceDescriptor> competing_forms(const SubspaceDescriptor& d) {
    std::vector<SubspaceDescriptor> out;
    auto finish = [&](SubspaceDescriptor c) {
        c.theta = blaschke(c.theta_zeros);
        const bool any = !c.theta_zeros.empty() ||
                         std::any_of(c.boundary_orders.begin(), c.boundary_orders.end(),
                                     [](const BoundaryOrder& b) { return b.order > 0; });
        c.form = any ? SubspaceForm::classified : SubspaceForm::full;
        out.push_back(std::move(c));
    };
    for (std::size_t i = 0; i < d.boundary_orders.size(); ++i)
        for (int j = 0; j <= d.boundary_orders[i].multiplicity; ++j) {
            if (j == d.boundary_orders[i].order) continue;
            SubspaceDescriptor c = d;
            c.boundary_orders[i].order = j;
            finish(std::move(c));
        }
    // one more inner zero, away from the existing ones
    cplx extra = 0.3;
    for (cplx candidate : {cplx(0.3), cplx(-0.3), cplx(0.0, 0.3), cplx(0.0, -0.3)}) {
        extra = candidate;
        if (std::none_of(d.theta_zeros.begin(), d.theta_zeros.end(),
                         [&](const RootCluster& z) { return std::abs(z.center - candidate) < 0.1; }))
            break;
    }
    SubspaceDescriptor added = d;
    added.theta_zeros.push_back({extra, 1});
    finish(std::move(added));
    if (!d.theta_zeros.empty()) {
        SubspaceDescriptor removed = d;
        if (--removed.theta_zeros.back().multiplicity == 0) removed.theta_zeros.pop_back();
        finish(std::move(removed));
    }
    return out;
}

CriterionResult run_criterion(int id, const SuiteOptions& opt) {
    if (id < 1 || id > kCriterionCount) throw Error(Errc::invalid_argument, "criterion id out of range");
    const CriterionEntry& entry = kCriteria[id - 1];
    CriterionResult r;
    r.id = id;
    r.name = entry.name;
    const auto t0 = Clock::now();
    try {
        entry.body(r, opt);
    } catch (const Error& e) {
        r.failures.push_back(std::string("error: ") + e.what());
    }
    r.seconds = seconds_since(t0);
    r.pass = r.failures.empty();
    return r;
}

std::vector<CriterionResult> run_suite(const SuiteOptions& opt) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, opt));
    return out;
}

std::string summary_line(const CriterionResult& r) {
    std::string line = (r.pass ? "PASS " : "FAIL ") + std::to_string(r.id) + ". " + r.name + ": " + r.measured +
                       fmt(" (%.2f s)", r.seconds);
    if (!r.pass) line += " | " + join(r.failures);
    return line;
}

}  // namespace hb
