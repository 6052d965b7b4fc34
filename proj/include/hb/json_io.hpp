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


#ifndef HB_JSON_IO_HPP
#define HB_JSON_IO_HPP

#include <string>

#include "json.hpp"

#include "hb/rational.hpp"

namespace hb {

using json = nlohmann::json;

/// Complex numbers are written as [re, im]; a bare number is read as real.
json to_json_value(cplx z);
cplx complex_from_json(const json& j);

/// {"coeffs": [[re, im], ...]} lowest degree first.
void to_json(json& j, const Poly& p);
void from_json(const json& j, Poly& p);

/// {"num": Poly, "den": Poly}. A bare Poly object is accepted on input.
void to_json(json& j, const RationalFn& f);
void from_json(const json& j, RationalFn& f);

/// Parse a RationalFn from inline JSON text or, failing that, from a file
/// with that path. Throws malformed_input.
RationalFn parse_rational(const std::string& text_or_path);

}  // namespace hb

#endif  // HB_JSON_IO_HPP
