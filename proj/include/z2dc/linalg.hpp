/*
   Copyright 2026 The z2dc Authors

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

#ifndef Z2DC_LINALG_HPP
#define Z2DC_LINALG_HPP

#include <vector>

#include "z2dc/bitvector.hpp"

namespace z2dc {

/// Reduced row-echelon form over GF(2). Pivots are chosen scanning columns 0, 1, ...,
/// so the nonzero rows form the canonical basis of the row space.
struct EchelonForm {
    std::vector<BitVector> rows;  // nonzero rows only, pivots strictly increasing
    std::vector<int> pivots;      // pivot column of each row
};

/// `width` is the common length of all rows (needed when `rows` is empty).
EchelonForm rref(std::vector<BitVector> rows, int width);
int rank(const std::vector<BitVector>& rows, int width);
/// Basis of {v : v . row = 0 for every row}.
std::vector<BitVector> nullspace_basis(const std::vector<BitVector>& rows, int width);

}  // namespace z2dc

#endif
