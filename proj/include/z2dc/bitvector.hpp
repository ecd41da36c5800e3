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

#ifndef Z2DC_BITVECTOR_HPP
#define Z2DC_BITVECTOR_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "z2dc/gf2poly.hpp"

namespace z2dc {

/// Fixed-length vector over GF(2).
class BitVector {
   public:
    using Word = std::uint64_t;

    BitVector() = default;
    explicit BitVector(int size);

    /// Parses a string of `0`/`1`; index 0 is the first character.
    static BitVector from_string(std::string_view bits);
    /// Coefficients of p folded modulo x^size - 1 (bit i lands on i mod size).
    static BitVector from_poly(const Gf2Poly& p, int size);

    int size() const noexcept { return size_; }
    bool get(int i) const noexcept { return (words_[static_cast<std::size_t>(i) / 64] >> (i % 64)) & 1U; }
    void set(int i, bool value) noexcept;
    void flip(int i) noexcept { words_[static_cast<std::size_t>(i) / 64] ^= Word{1} << (i % 64); }

    bool is_zero() const noexcept;
    int weight() const noexcept;
    /// Standard inner product over GF(2). Sizes must match.
    bool dot(const BitVector& other) const;
    /// Cyclic right rotation by k (k may be negative): result[j] = this[(j - k) mod size].
    BitVector rotated(long long k) const;
    /// Sub-vector [offset, offset + length).
    BitVector slice(int offset, int length) const;
    /// Concatenation `this || tail`.
    BitVector concat(const BitVector& tail) const;

    Gf2Poly to_poly() const;
    std::string to_string() const;

    BitVector& operator^=(const BitVector& rhs);
    friend BitVector operator^(BitVector lhs, const BitVector& rhs) { return lhs ^= rhs; }
    friend bool operator==(const BitVector&, const BitVector&) = default;
    /// Lexicographic on coordinates, coordinate 0 most significant.
    friend std::strong_ordering operator<=>(const BitVector& lhs, const BitVector& rhs);

   private:
    int size_ = 0;
    std::vector<Word> words_;
};

}  // namespace z2dc

#endif
