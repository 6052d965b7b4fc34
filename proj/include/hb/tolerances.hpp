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


#ifndef HB_TOLERANCES_HPP
#define HB_TOLERANCES_HPP

namespace hb {

/// Numerical thresholds shared across the library. The identities being
/// checked are exact; these only absorb floating-point noise.
struct Tolerances {
    double root = 1e-11;      // root residual, relative to sum |c_k| |r|^k
    double gcd = 1e-9;        // common-root detection
    double pole = 1e-13;      // |den(z)| below this (relative) is a pole
    double cluster = 1e-7;    // initial greedy union radius for multiple roots
    double mate = 1e-9;       // Pythagorean identity and unit-ball slack
    double boundary = 1e-7;   // vanishing of derivatives at a boundary point
    double phase = 1e-8;      // forbidden-phase proximity
    double iso = 1e-8;        // defect form counted as zero
    double strict = 1e-3;     // defect form counted as nonzero
    double gram = 1e-8;       // closed form vs inner product cross-checks
    double rank = 1e-10;      // Gram block singularity (relative eigenvalue)
};

inline constexpr int kDefaultTruncation = 64;
inline constexpr int kDefaultGrid = 1024;

}  // namespace hb

#endif  // HB_TOLERANCES_HPP
