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

#ifndef Z2DC_KERNELS_HPP
#define Z2DC_KERNELS_HPP

// Exhaustive loops over packed codewords. Every OpenMP kernel has a plain serial twin in
// `kernels::serial`; the tests compare the two and bench/ times them.
//
// Packed layout: bit j (j < r) is left coordinate j, bit r + j is right coordinate j.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace z2dc::kernels {

using PackedWord = std::uint64_t;

/// x * w: left block rotated right by one within bits [0, r), right block within [r, r + s).
inline PackedWord shift_packed(PackedWord w, int r, int s) noexcept {
    const PackedWord left_mask = (PackedWord{1} << r) - 1;
    const PackedWord right_mask = (PackedWord{1} << s) - 1;
    const PackedWord left = w & left_mask;
    const PackedWord right = (w >> r) & right_mask;
    const PackedWord left_rot = ((left << 1) | (left >> (r - 1))) & left_mask;
    const PackedWord right_rot = ((right << 1) | (right >> (s - 1))) & right_mask;
    return left_rot | (right_rot << r);
}

/// All 2^k XOR-combinations of `rows` (k = rows.size()), in unspecified order. out.size() must be 2^k.
void span_words(std::span<const PackedWord> rows, std::span<PackedWord> out);

/// Minimum popcount over the nonzero words; nullopt if there are none.
std::optional<int> min_weight(std::span<const PackedWord> words);

/// True iff shift_packed(w) is in `sorted_words` for every w in it.
bool shift_closed(std::span<const PackedWord> sorted_words, int r, int s);

/// Number of words orthogonal (even overlap parity) to every row.
std::uint64_t count_orthogonal(std::span<const PackedWord> words, std::span<const PackedWord> rows);

namespace serial {

void span_words(std::span<const PackedWord> rows, std::span<PackedWord> out);
std::optional<int> min_weight(std::span<const PackedWord> words);
bool shift_closed(std::span<const PackedWord> sorted_words, int r, int s);
std::uint64_t count_orthogonal(std::span<const PackedWord> words, std::span<const PackedWord> rows);

}  // namespace serial

}  // namespace z2dc::kernels

#endif
