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


#include "hb/error.hpp"

namespace hb {

std::string_view errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::invalid_argument: return "invalid_argument";
        case Errc::pole_at_point: return "pole_at_point";
        case Errc::pole_in_disk: return "pole_in_disk";
        case Errc::not_in_unit_ball: return "not_in_unit_ball";
        case Errc::extreme_point: return "extreme_point";
        case Errc::order_too_high: return "order_too_high";
        case Errc::forbidden_phase: return "forbidden_phase";
        case Errc::degenerate_omega: return "degenerate_omega";
        case Errc::zero_function: return "zero_function";
        case Errc::multiple_boundary_zero: return "multiple_boundary_zero";
        case Errc::malformed_input: return "malformed_input";
        case Errc::non_convergence: return "non_convergence";
        case Errc::factorization_failure: return "factorization_failure";
        case Errc::negative_density: return "negative_density";
        case Errc::singular_system: return "singular_system";
        case Errc::rank_deficiency: return "rank_deficiency";
        case Errc::verification_failure: return "verification_failure";
    }
    return "unknown";
}

bool is_numerical(Errc code) noexcept { return code >= Errc::non_convergence; }

}  // namespace hb
