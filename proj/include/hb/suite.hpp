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


#ifndef HB_SUITE_HPP
#define HB_SUITE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hb/lattice.hpp"

namespace hb {

struct NamedSpace {
    std::string name;
    RationalFn b;
};

/// 0, z/2, (z+1)/2, the Brownian shifts for sigma = 1/2, 1, 2 and the
/// degree 2 and 3 models.
std::vector<NamedSpace> acceptance_corpus();
/// The acceptance corpus plus the two-point space (1 + z^2)/2.
std::vector<NamedSpace> lattice_spaces();
/// b of the model with n steps at omega = 1, t = pi.
RationalFn standard_model(int n);

/// Rational functions with interior zeros of modulus <= 1/2, zeros at the mate's
/// boundary points and an outer part with zeros and poles of modulus >= 3/2.
/// Every fourth function is cyclic by construction.
std::vector<RationalFn> lattice_corpus(const HbSpace& s, int count, std::uint64_t seed);

/// Descriptors that differ from d in one boundary order, or by one inner zero
/// added or removed.
std::vector<SubspaceDescriptor> competing_forms(const SubspaceDescriptor& d);

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string measured;  // worst value over the cases, with its threshold
    std::vector<std::string> failures;
    double seconds = 0.0;
};

struct SuiteOptions {
    std::uint64_t seed = 0x5eed;
};

inline constexpr int kCriterionCount = 10;

CriterionResult run_criterion(int id, const SuiteOptions& opt = {});
std::vector<CriterionResult> run_suite(const SuiteOptions& opt = {});
/// One human-readable line per criterion.
std::string summary_line(const CriterionResult& r);

}  // namespace hb

#endif  // HB_SUITE_HPP
