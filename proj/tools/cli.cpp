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


#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <ostream>

#include "hb/isometry.hpp"
#include "hb/json_io.hpp"
#include "hb/lattice.hpp"
#include "hb/matrix.hpp"
#include "hb/model.hpp"
#include "hb/suite.hpp"

namespace hb::cli {

namespace {

constexpr std::uint64_t kDefaultSeed = 0x5eed;

json tolerances_json(const Tolerances& t) {
    return {{"root", t.root},     {"gcd", t.gcd},   {"pole", t.pole}, {"cluster", t.cluster},
            {"mate", t.mate},     {"boundary", t.boundary},           {"phase", t.phase},
            {"iso", t.iso},       {"strict", t.strict},               {"gram", t.gram},
            {"rank", t.rank}};
}

json checked(double value, double tolerance, const char* relation = "<=") {
    return {{"value", value}, {"tolerance", tolerance}, {"relation", relation},
            {"ok", std::string(relation) == "<=" ? value <= tolerance : value >= tolerance}};
}

json clusters_json(const std::vector<RootCluster>& zs) {
    json out = json::array();
    for (const auto& z : zs) out.push_back({{"point", to_json_value(z.center)}, {"multiplicity", z.multiplicity}});
    return out;
}

json boundary_json(const std::vector<BoundaryZero>& zs) {
    json out = json::array();
    for (const auto& z : zs) out.push_back({{"point", to_json_value(z.point)}, {"multiplicity", z.multiplicity}});
    return out;
}

json optional_int(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

cplx parse_complex(const std::string& text) {
    try {
        return complex_from_json(json::parse(text));
    } catch (const json::exception& e) {
        throw Error(Errc::malformed_input, "not a complex number: " + text);
    }
}

// Everything a subcommand fills in besides results.
struct Report {
    json input = json::object();
    json config = json::object();
    json results = json::object();
    json residuals = json::object();
};

struct Common {
    std::uint64_t seed = kDefaultSeed;
    int grid = kDefaultGrid;
};

SpaceOptions space_options(const Common& c) {
    SpaceOptions o;
    o.seed = c.seed;
    o.grid = c.grid;
    return o;
}

HbSpace make_space(const std::string& text, const Common& c, Report& r, const char* key = "b") {
    const RationalFn b = parse_rational(text);
    r.input[key] = b;
    return HbSpace::make(b, space_options(c));
}

json descriptor_json(const SubspaceDescriptor& d) {
    static const std::map<SubspaceForm, const char*> names{
        {SubspaceForm::zero, "zero"}, {SubspaceForm::full, "full"}, {SubspaceForm::classified, "classified"}};
    json orders = json::array();
    for (const auto& b : d.boundary_orders)
        orders.push_back({{"point", to_json_value(b.point)}, {"order", b.order}, {"multiplicity", b.multiplicity}});
    return {{"form", names.at(d.form)},
            {"theta", d.theta},
            {"theta_zeros", clusters_json(d.theta_zeros)},
            {"boundary_orders", orders},
            {"canonical_form", canonical_form(d)}};
}

json report_json(const DefectReport& d) {
    json lam = to_json_value(d.lambda);
    return {{"orders_tested", d.orders_tested},
            {"max_form_residual", d.max_form_residual},
            {"strict_order", optional_int(d.strict_order)},
            {"residual_below", d.residual_below},
            {"strict", d.strict},
            {"lambda", lam},
            {"annihilation_residuals", d.annihilation_residuals},
            {"degree", d.degree}};
}

json certificate_json(const Certificate& c) {
    return {{"b_at_zero", to_json_value(c.at_zero)},
            {"b_at_one", to_json_value(c.at_one)},
            {"s_times_slope_at_one", to_json_value(c.scaled_slope)},
            {"deviation", c.deviation()}};
}

std::vector<ExtensionParams> parse_steps(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception&) {
        throw Error(Errc::malformed_input, "steps must be a count or a JSON array");
    }
    if (j.is_number_integer()) {
        const int n = j.get<int>();
        if (n < 1) throw Error(Errc::invalid_argument, "steps must be positive");
        return std::vector<ExtensionParams>(static_cast<std::size_t>(n), {1.0, std::numbers::pi});
    }
    if (!j.is_array() || j.empty()) throw Error(Errc::malformed_input, "steps must be a count or a non-empty array");
    std::vector<ExtensionParams> out;
    try {
        for (const auto& e : j) out.push_back({complex_from_json(e.value("omega", json(1.0))), e.at("t").get<double>()});
    } catch (const json::exception& e) {
        throw Error(Errc::malformed_input, std::string("step entry: ") + e.what());
    }
    return out;
}

json steps_json(const std::vector<ExtensionParams>& steps) {
    json out = json::array();
    for (const auto& s : steps) out.push_back({{"omega", to_json_value(s.omega)}, {"t", s.t}});
    return out;
}

std::optional<std::uint64_t> env_seed() {
    const char* v = std::getenv("HB_SEED");
    if (v == nullptr || *v == '\0') return std::nullopt;
    try {
        std::size_t used = 0;
        const unsigned long long s = std::stoull(v, &used, 0);
        if (used != std::string(v).size()) throw std::invalid_argument(v);
        return s;
    } catch (const std::exception&) {
        throw Error(Errc::invalid_argument, std::string("HB_SEED is not an integer: ") + v);
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Computations in de Branges-Rovnyak spaces H(b) for rational b", "hb"};
    app.require_subcommand(1);
    Common common;
    std::string b_text = R"({"num":{"coeffs":[[0,0]]}})";
    std::string f_text;
    std::string b0_text = R"({"num":{"coeffs":[[0,0]]}})";
    std::string lambda_text = "0";
    std::string z_text;
    std::string omega_text = "1";
    std::string steps_text = "1";
    std::string out_path;
    double t = 0.0;
    int trunc = kDefaultTruncation;
    int n = 8;
    int mmax = 12;
    int deg = 10;
    int oracle = 0;
    int criterion = 0;
    bool run_verify = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--seed", common.seed, "random seed (HB_SEED overrides)");
        sub->add_option("--grid", common.grid, "circle grid size")->check(CLI::PositiveNumber);
    };
    auto add_b = [&](CLI::App* sub) {
        sub->add_option("--b", b_text, "b as RationalFn JSON or a file path")->required();
    };

    std::map<std::string, std::function<void(Report&)>> handlers;

    CLI::App* mate = app.add_subcommand("mate", "Pythagorean mate of b");
    add_b(mate);
    add_common(mate);
    handlers["mate"] = [&](Report& r) {
        const HbSpace s = make_space(b_text, common, r);
        double worst = 0.0;
        for (int k = 0; k < common.grid; ++k) {
            const cplx z = std::polar(1.0, 2.0 * std::numbers::pi * k / common.grid);
            worst = std::max(worst, std::abs(std::norm(s.mate()(z)) + std::norm(s.b()(z)) - 1.0));
        }
        r.results = {{"a", s.mate()},
                     {"a_at_zero", s.a0()},
                     {"degree", s.degree()},
                     {"boundary_zeros", boundary_json(s.boundary_zeros())}};
        r.residuals = {{"mate_identity_on_grid", checked(worst, s.tolerances().mate)},
                       {"factorization", checked(s.mate_residual(), s.tolerances().mate)}};
    };

    CLI::App* kernel = app.add_subcommand("kernel", "reproducing kernel K_lambda");
    add_b(kernel);
    kernel->add_option("--lambda", lambda_text, "point in the open disk, number or [re, im]");
    kernel->add_option("--z", z_text, "optional evaluation point");
    kernel->add_option("--trunc", trunc, "truncation degree")->check(CLI::NonNegativeNumber);
    add_common(kernel);
    handlers["kernel"] = [&](Report& r) {
        const HbSpace s = make_space(b_text, common, r);
        const cplx lambda = parse_complex(lambda_text);
        r.input["lambda"] = to_json_value(lambda);
        r.config["truncation"] = trunc;
        const HbVector v = s.kernel_vector(lambda, trunc);
        const double diag = s.kernel(lambda, lambda).real();
        const double computed = s.norm_sq(v);
        r.results = {{"kernel", s.kernel_fn(lambda)},
                     {"truncated", v.f},
                     {"truncated_plus", v.plus},
                     {"tail", v.tail},
                     {"norm_sq", diag}};
        if (!z_text.empty()) {
            const cplx z = parse_complex(z_text);
            r.input["z"] = to_json_value(z);
            r.results["value_at_z"] = to_json_value(s.kernel(lambda, z));
        }
        r.residuals = {{"norm_sq_vs_truncated", checked(std::abs(diag - computed), s.tolerances().gram * std::max(1.0, diag))}};
    };

    CLI::App* gram = app.add_subcommand("gram", "Gram matrix of the monomials 1 .. z^(n-1)");
    add_b(gram);
    gram->add_option("--n", n, "matrix size")->check(CLI::PositiveNumber);
    gram->add_option("--out", out_path, "write the matrix to this file instead");
    add_common(gram);
    handlers["gram"] = [&](Report& r) {
        const HbSpace s = make_space(b_text, common, r);
        r.config["n"] = n;
        const ComplexMatrix g = s.gram_matrix(n);
        json rows = json::array();
        double asym = 0.0;
        for (int i = 0; i < n; ++i) {
            json row = json::array();
            for (int j = 0; j < n; ++j) {
                row.push_back(to_json_value(g(i, j)));
                asym = std::max(asym, std::abs(g(i, j) - std::conj(g(j, i))));
            }
            rows.push_back(std::move(row));
        }
        const auto eig = hermitian_eigenvalues(g);
        if (out_path.empty()) {
            r.results["gram"] = rows;
        } else {
            std::ofstream file(out_path);
            if (!file) throw Error(Errc::invalid_argument, "cannot write " + out_path);
            file << json{{"gram", rows}}.dump(2) << '\n';
            r.results["written_to"] = out_path;
        }
        r.results["min_eigenvalue"] = eig.front();
        r.results["max_eigenvalue"] = eig.back();
        r.residuals = {{"hermitian_asymmetry", checked(asym, s.tolerances().gram)},
                       {"min_eigenvalue", checked(eig.front(), 0.0, ">=")}};
    };

    CLI::App* verify_cmd = app.add_subcommand("verify", "isometry order, strictness and annihilation");
    add_b(verify_cmd);
    verify_cmd->add_option("--mmax", mmax, "largest order tested")->check(CLI::Range(1, 12));
    verify_cmd->add_option("--deg", deg, "monomial degree bound")->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--lambda", lambda_text, "annihilation point (default from the mate)");
    add_common(verify_cmd);
    handlers["verify"] = [&](Report& r) {
        const HbSpace s = make_space(b_text, common, r);
        VerifyOptions vo;
        vo.max_order = mmax;
        vo.degree = deg;
        if (verify_cmd->count("--lambda") > 0) {
            vo.lambda = parse_complex(lambda_text);
            r.input["lambda"] = to_json_value(*vo.lambda);
        }
        r.config["mmax"] = mmax;
        r.config["deg"] = deg;
        const DefectReport d = verify(s, vo);
        r.results = report_json(d);
        if (d.strict_order) {
            const auto m = static_cast<std::size_t>(*d.strict_order);
            r.residuals["form_at_order"] = checked(d.max_form_residual.at(m - 1), s.tolerances().iso);
            if (m > 1) r.residuals["form_below_order"] = checked(d.residual_below, s.tolerances().strict, ">=");
        }
    };

    CLI::App* extend_cmd = app.add_subcommand("extend", "rank-one extension b0 -> b_t");
    extend_cmd->add_option("--b0", b0_text, "b0 as RationalFn JSON or a file path (default 0)");
    extend_cmd->add_option("--omega", omega_text, "coupling, number or [re, im]");
    extend_cmd->add_option("--t", t, "phase")->required();
    add_common(extend_cmd);
    handlers["extend"] = [&](Report& r) {
        const HbSpace s0 = make_space(b0_text, common, r, "b0");
        const ExtensionParams p{parse_complex(omega_text), t};
        r.input["omega"] = to_json_value(p.omega);
        r.input["t"] = t;
        const ExtensionResult e = extend(s0, p);
        const double kf = kernel_factorization_check(s0.b(), e.b, e.s, t, 100, common.seed);
        r.results = {{"b", e.b}, {"s", e.s}, {"certificate", certificate_json(e.certificate)}};
        r.residuals = {{"certificate", checked(e.certificate.deviation(), 1e-10)},
                       {"kernel_factorization", checked(kf, 1e-10)}};
    };

    CLI::App* model = app.add_subcommand("model", "iterate extensions from b = 0");
    model->add_option("--steps", steps_text, "step count, or JSON array of {omega, t}");
    model->add_flag("--verify", run_verify, "verify the strict order 2n of the result");
    add_common(model);
    handlers["model"] = [&](Report& r) {
        const std::vector<ExtensionParams> steps = parse_steps(steps_text);
        r.input["steps"] = steps_json(steps);
        r.config["verify"] = run_verify;
        json out = json::array();
        double worst = 0.0;
        auto record = [&](const ExtensionResult& e) {
            out.push_back({{"b", e.b}, {"s", e.s}, {"certificate", certificate_json(e.certificate)}});
            worst = std::max(worst, e.certificate.deviation());
        };
        if (run_verify) {
            ModelOptions mo;
            mo.space = space_options(common);
            const ModelSpec m = build_model(steps, mo);
            for (const auto& e : m.results) record(e);
            r.results["report"] = report_json(m.report);
        } else {
            HbSpace cur = HbSpace::make(RationalFn{}, space_options(common));
            for (const auto& p : steps) {
                const ExtensionResult e = extend(cur, p);
                record(e);
                cur = HbSpace::make(e.b, space_options(common));
            }
        }
        r.results["steps"] = out;
        r.results["b"] = out.back()["b"];
        r.residuals["certificate"] = checked(worst, 1e-10);
    };

    CLI::App* classify_cmd = app.add_subcommand("classify", "invariant subspace generated by f");
    add_b(classify_cmd);
    classify_cmd->add_option("--f", f_text, "f as RationalFn JSON or a file path")->required();
    classify_cmd->add_option("--oracle", oracle, "also run the distance oracle with this K")
        ->check(CLI::NonNegativeNumber);
    add_common(classify_cmd);
    handlers["classify"] = [&](Report& r) {
        const HbSpace s = make_space(b_text, common, r);
        const RationalFn f = parse_rational(f_text);
        r.input["f"] = f;
        const SubspaceDescriptor d = classify(s, f);
        r.results = descriptor_json(d);
        r.results["cyclic"] = is_cyclic(s, f);
        if (classify_cmd->count("--oracle") > 0) {
            r.config["oracle_K"] = oracle;
            const Distance canon = subspace_distance(s, f, canonical_form(d), oracle);
            const Distance one = subspace_distance(s, f, RationalFn(Poly{1.0}), oracle);
            r.results["oracle"] = {{"K", oracle},
                                   {"distance_to_canonical", canon.angle},
                                   {"distance_to_one", one.angle},
                                   {"truncation", std::max(canon.truncation, one.truncation)},
                                   {"tail", std::max(canon.tail, one.tail)}};
            r.residuals["distance_to_canonical"] = checked(canon.angle, 0.15);
        }
    };

    CLI::App* cyclic_cmd = app.add_subcommand("cyclic", "whether f is a cyclic vector");
    add_b(cyclic_cmd);
    cyclic_cmd->add_option("--f", f_text, "f as RationalFn JSON or a file path")->required();
    add_common(cyclic_cmd);
    handlers["cyclic"] = [&](Report& r) {
        const HbSpace s = make_space(b_text, common, r);
        const RationalFn f = parse_rational(f_text);
        r.input["f"] = f;
        const CyclicWitness w = cyclic_witness(s, f);
        json values = json::array();
        for (const auto& [p, v] : w.boundary_values)
            values.push_back({{"point", to_json_value(p)}, {"value", to_json_value(v)}});
        r.results = {{"cyclic", w.cyclic},
                     {"witness", {{"inner_zeros", clusters_json(w.inner_zeros)}, {"boundary_values", values}}}};
    };

    CLI::App* suite = app.add_subcommand("suite", "run the acceptance criteria");
    suite->add_option("--criterion", criterion, "run a single criterion")->check(CLI::Range(1, kCriterionCount));
    add_common(suite);
    bool suite_failed = false;
    json suite_timing = json::object();
    handlers["suite"] = [&](Report& r) {
        SuiteOptions so;
        so.seed = common.seed;
        std::vector<CriterionResult> results;
        if (criterion > 0) {
            results.push_back(run_criterion(criterion, so));
        } else {
            results = run_suite(so);
        }
        json list = json::array();
        for (const auto& c : results) {
            list.push_back({{"id", c.id}, {"name", c.name}, {"pass", c.pass}, {"measured", c.measured},
                            {"failures", c.failures}});
            suite_timing[std::to_string(c.id)] = c.seconds;
            suite_failed = suite_failed || !c.pass;
            err << summary_line(c) << '\n';
        }
        r.results = {{"criteria", list}, {"all_pass", !suite_failed}};
    };

    std::vector<const char*> argv{"hb"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::string command = "";
    Report report;
    const auto t0 = std::chrono::steady_clock::now();
    int code = kExitOk;
    json error = nullptr;
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        command = app.get_subcommands().front()->get_name();
        if (const auto s = env_seed()) common.seed = *s;
        report.config["seed"] = common.seed;
        report.config["grid"] = common.grid;
        report.config["tolerances"] = tolerances_json(Tolerances{});
        handlers.at(command)(report);
        if (suite_failed) code = kExitNumerical;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        error = {{"code", "invalid_argument"}, {"message", e.what()}};
        code = kExitValidation;
    } catch (const Error& e) {
        err << e.what() << '\n';
        error = {{"code", std::string(errc_name(e.code()))}, {"message", e.what()}};
        code = e.numerical() ? kExitNumerical : kExitValidation;
    } catch (const json::exception& e) {
        err << e.what() << '\n';
        error = {{"code", "malformed_input"}, {"message", e.what()}};
        code = kExitValidation;
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    json doc = {{"command", command}, {"input", report.input}, {"config", report.config}};
    if (error.is_null()) {
        doc["results"] = report.results;
        doc["residuals"] = report.residuals;
    } else {
        doc["error"] = error;
    }
    doc["timing"] = {{"seconds", seconds}};
    if (!suite_timing.empty()) doc["timing"]["criteria"] = suite_timing;
    out << doc.dump(2) << '\n';
    return code;
}

}  // namespace hb::cli
