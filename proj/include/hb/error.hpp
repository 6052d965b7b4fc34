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


#ifndef HB_ERROR_HPP
#define HB_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace hb {

/// Failure categories raised by the library. Validation codes mean the
/// input violated a precondition; numerical codes mean the computation
/// itself broke down.
enum class Errc {
    // validation
    invalid_argument,
    pole_at_point,
    pole_in_disk,
    not_in_unit_ball,
    extreme_point,
    order_too_high,
    forbidden_phase,
    degenerate_omega,
    zero_function,
    multiple_boundary_zero,
    malformed_input,
    // numerical
    non_convergence,
    factorization_failure,
    negative_density,
    singular_system,
    rank_deficiency,
    verification_failure,
};

std::string_view errc_name(Errc code) noexcept;
bool is_numerical(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }
    bool numerical() const noexcept { return is_numerical(code_); }

private:
    Errc code_;
};

}  // namespace hb

#endif  // HB_ERROR_HPP
