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

#include "z2dc/linalg.hpp"

#include <utility>

#include "z2dc/errors.hpp"

namespace z2dc {

EchelonForm rref(std::vector<BitVector> rows, int width) {
    for (const auto& row : rows)
        if (row.size() != width) throw DomainError("rref: row width mismatch");
    EchelonForm out;
    std::size_t next = 0;
    for (int col = 0; col < width && next < rows.size(); ++col) {
        std::size_t found = next;
        while (found < rows.size() && !rows[found].get(col)) ++found;
        if (found == rows.size()) continue;
        std::swap(rows[next], rows[found]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != next && rows[i].get(col)) rows[i] ^= rows[next];
        out.pivots.push_back(col);
        ++next;
    }
    rows.resize(next);
    out.rows = std::move(rows);
    return out;
}

int rank(const std::vector<BitVector>& rows, int width) {
    return static_cast<int>(rref(rows, width).rows.size());
}

std::vector<BitVector> nullspace_basis(const std::vector<BitVector>& rows, int width) {
    const EchelonForm ef = rref(rows, width);
    std::vector<bool> is_pivot(static_cast<std::size_t>(width), false);
    for (int p : ef.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<BitVector> basis;
    for (int free = 0; free < width; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        BitVector v(width);
        v.flip(free);
        // Row i reads x_{pivot_i} + sum_{free f} row_i[f] x_f = 0.
        for (std::size_t i = 0; i < ef.rows.size(); ++i)
            if (ef.rows[i].get(free)) v.flip(ef.pivots[i]);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace z2dc
