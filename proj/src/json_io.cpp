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


#include "hb/json_io.hpp"

#include <fstream>
#include <sstream>

#include "hb/error.hpp"

namespace hb {

json to_json_value(cplx z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return {j[0].get<double>(), j[1].get<double>()};
    throw Error(Errc::malformed_input, "expected a number or [re, im], got " + j.dump());
}

void to_json(json& j, const Poly& p) {
    json arr = json::array();
    for (cplx c : p.coeffs()) arr.push_back(to_json_value(c));
    j = json{{"coeffs", std::move(arr)}};
}

void from_json(const json& j, Poly& p) {
    if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
        throw Error(Errc::malformed_input, "polynomial must be an object with a \"coeffs\" array");
    std::vector<cplx> c;
    c.reserve(j["coeffs"].size());
    for (const auto& e : j["coeffs"]) c.push_back(complex_from_json(e));
    p = Poly(std::move(c));
}

void to_json(json& j, const RationalFn& f) { j = json{{"num", f.num()}, {"den", f.den()}}; }

void from_json(const json& j, RationalFn& f) {
    if (j.is_object() && j.contains("coeffs")) {
        f = RationalFn(j.get<Poly>());
        return;
    }
    if (!j.is_object() || !j.contains("num"))
        throw Error(Errc::malformed_input, "rational function must have \"num\" (and optionally \"den\")");
    Poly num = j["num"].get<Poly>();
    Poly den = j.contains("den") ? j["den"].get<Poly>() : Poly::constant(1.0);
    if (den.is_zero()) throw Error(Errc::malformed_input, "zero denominator");
    f = RationalFn(std::move(num), std::move(den));
}

RationalFn parse_rational(const std::string& text_or_path) {
    json j = json::parse(text_or_path, nullptr, false);
    if (j.is_discarded()) {
        std::ifstream in(text_or_path);
        if (!in) throw Error(Errc::malformed_input, "neither valid JSON nor a readable file: " + text_or_path);
        std::stringstream ss;
        ss << in.rdbuf();
        j = json::parse(ss.str(), nullptr, false);
        if (j.is_discarded()) throw Error(Errc::malformed_input, "invalid JSON in " + text_or_path);
    }
    return j.get<RationalFn>();
}

}  // namespace hb
