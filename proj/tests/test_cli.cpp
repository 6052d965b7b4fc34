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


#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "hb/json_io.hpp"

using hb::json;

namespace {

const std::string kHalfPlus = R"({"num":{"coeffs":[[0.5,0],[0.5,0]]},"den":{"coeffs":[[1,0]]}})";

struct Outcome {
    int code;
    json doc;
    std::string text;
};

Outcome run_hb(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = hb::cli::run(args, out, err);
    Outcome o{code, json(), out.str()};
    if (!o.text.empty() && o.text.front() == '{') o.doc = json::parse(o.text);
    return o;
}

}  // namespace

TEST_CASE("mate example") {
    const Outcome o = run_hb({"mate", "--b", kHalfPlus});
    REQUIRE(o.code == 0);
    const hb::RationalFn a = o.doc["results"]["a"].get<hb::RationalFn>();
    CHECK(hb::sup_deviation_on_circle(a, hb::RationalFn(hb::Poly{0.5, -0.5}), 64) < 1e-10);
    CHECK(o.doc["residuals"]["mate_identity_on_grid"]["value"].get<double>() <= 1e-10);
    CHECK(o.doc["residuals"]["mate_identity_on_grid"].contains("tolerance"));
    for (const char* key : {"command", "input", "config", "results", "residuals", "timing"}) CHECK(o.doc.contains(key));
    CHECK(o.doc["config"].contains("seed"));
    CHECK(o.doc["config"]["tolerances"]["mate"].get<double>() > 0.0);
}

TEST_CASE("verify example") {
    const Outcome o = run_hb({"verify", "--b", kHalfPlus});
    REQUIRE(o.code == 0);
    CHECK(o.doc["results"]["strict_order"] == 2);
    CHECK(o.doc["results"]["strict"] == true);
}

TEST_CASE("exit codes") {
    CHECK(run_hb({"mate", "--b", kHalfPlus, "--bogus"}).code == 2);
    CHECK(run_hb({"mate", "--b", "{\"num\":"}).code == 2);
    CHECK(run_hb({"frobnicate"}).code == 2);
    const Outcome outside = run_hb({"mate", "--b", R"({"num":{"coeffs":[0,2]}})"});
    CHECK(outside.code == 2);
    CHECK(outside.doc["error"]["code"] == "not_in_unit_ball");
    // dependent shifted generators are a numerical failure
    const Outcome rank =
        run_hb({"classify", "--b", R"({"num":{"coeffs":[0]}})", "--f", R"({"coeffs":[1,-6,15,-20,15,-6,1]})",
                "--oracle", "200"});
    CHECK(rank.code == 3);
    CHECK(rank.doc["error"]["code"] == "rank_deficiency");
    CHECK(run_hb({"--help"}).code == 0);
}

TEST_CASE("output is deterministic apart from timing") {
    auto strip = [](json d) {
        d.erase("timing");
        return d.dump();
    };
    const std::vector<std::string> args{"verify", "--b", kHalfPlus, "--mmax", "4"};
    CHECK(strip(run_hb(args).doc) == strip(run_hb(args).doc));
    const std::vector<std::string> extend{"extend", "--omega", "[0.5,0.5]", "--t", "2.5"};
    CHECK(strip(run_hb(extend).doc) == strip(run_hb(extend).doc));
}

TEST_CASE("HB_SEED overrides the seed flag") {
    ::setenv("HB_SEED", "77", 1);
    const Outcome o = run_hb({"mate", "--b", kHalfPlus, "--seed", "5"});
    ::unsetenv("HB_SEED");
    CHECK(o.doc["config"]["seed"] == 77);
    CHECK(run_hb({"mate", "--b", kHalfPlus, "--seed", "5"}).doc["config"]["seed"] == 5);
}

TEST_CASE("extend and model") {
    const Outcome e = run_hb({"extend", "--omega", "1", "--t", "3.141592653589793"});
    REQUIRE(e.code == 0);
    CHECK(std::abs(e.doc["results"]["s"].get<double>() - 0.5) < 1e-14);
    CHECK(e.doc["residuals"]["kernel_factorization"]["ok"] == true);

    const Outcome m = run_hb({"model", "--steps", "2", "--verify"});
    REQUIRE(m.code == 0);
    CHECK(m.doc["results"]["report"]["strict_order"] == 4);
    CHECK(m.doc["results"]["steps"].size() == 2);

    const Outcome custom = run_hb({"model", "--steps", R"([{"omega":[0.5,0.5],"t":2.0},{"t":4}])"});
    REQUIRE(custom.code == 0);
    CHECK(custom.doc["results"]["steps"].size() == 2);

    CHECK(run_hb({"extend", "--b0", R"({"num":{"coeffs":[0,0.5]}})", "--omega", "0", "--t", "1"}).code == 2);
}

TEST_CASE("kernel and gram") {
    const Outcome k = run_hb({"kernel", "--b", kHalfPlus, "--lambda", "[0.3,0.2]"});
    REQUIRE(k.code == 0);
    CHECK(k.doc["residuals"]["norm_sq_vs_truncated"]["ok"] == true);

    const Outcome g = run_hb({"gram", "--b", kHalfPlus, "--n", "3"});
    REQUIRE(g.code == 0);
    CHECK(hb::complex_from_json(g.doc["results"]["gram"][0][0]) == hb::cplx(2.0));
    CHECK(std::abs(hb::complex_from_json(g.doc["results"]["gram"][1][1]) - 6.0) < 1e-12);

    const std::string path = "test_cli_gram.json";
    const Outcome file = run_hb({"gram", "--b", kHalfPlus, "--n", "2", "--out", path});
    REQUIRE(file.code == 0);
    std::ifstream in(path);
    const json saved = json::parse(in);
    CHECK(saved["gram"].size() == 2);
    std::remove(path.c_str());
}

TEST_CASE("classify and cyclic") {
    const Outcome c = run_hb({"classify", "--b", kHalfPlus, "--f", R"({"coeffs":[-1,1]})", "--oracle", "12"});
    REQUIRE(c.code == 0);
    CHECK(c.doc["results"]["form"] == "classified");
    CHECK(c.doc["results"]["boundary_orders"][0]["order"] == 1);
    CHECK(c.doc["results"]["oracle"]["distance_to_canonical"].get<double>() <= 0.15);
    CHECK(c.doc["results"]["oracle"]["distance_to_one"].get<double>() >= 0.3);

    const Outcome y = run_hb({"cyclic", "--b", kHalfPlus, "--f", kHalfPlus});
    REQUIRE(y.code == 0);
    CHECK(y.doc["results"]["cyclic"] == true);
    const Outcome n = run_hb({"cyclic", "--b", kHalfPlus, "--f", R"({"coeffs":[0,1]})"});
    CHECK(n.doc["results"]["cyclic"] == false);
    CHECK(n.doc["results"]["witness"]["inner_zeros"].size() == 1);
    CHECK(run_hb({"cyclic", "--b", kHalfPlus, "--f", R"({"coeffs":[0]})"}).code == 2);
}

TEST_CASE("suite runs a single criterion") {
    const Outcome o = run_hb({"suite", "--criterion", "7"});
    REQUIRE(o.code == 0);
    CHECK(o.doc["results"]["all_pass"] == true);
    REQUIRE(o.doc["results"]["criteria"].size() == 1);
    CHECK(o.doc["results"]["criteria"][0]["id"] == 7);
    CHECK(o.doc["timing"]["criteria"].contains("7"));
}
