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


#ifndef HB_MATRIX_HPP
#define HB_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "hb/poly.hpp"

namespace hb {

/// Dense row-major complex matrix used at the library boundary.
struct ComplexMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<cplx> data;

    ComplexMatrix() = default;
    ComplexMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * static_cast<std::size_t>(c)) {}

    cplx& operator()(int i, int j) { return data[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(j)]; }
    cplx operator()(int i, int j) const {
        return data[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(j)];
    }
};

/// Eigenvalues of a Hermitian matrix in increasing order.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

}  // namespace hb

#endif  // HB_MATRIX_HPP
