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

#include "z2dc/bitvector.hpp"

#include <bit>

#include "z2dc/errors.hpp"

namespace z2dc {

BitVector::BitVector(int size) : size_(size), words_(static_cast<std::size_t>((size + 63) / 64), 0) {
    if (size < 0) throw DomainError("BitVector: negative size");
}

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(static_cast<int>(bits.size()));
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            v.flip(static_cast<int>(i));
        else if (bits[i] != '0')
            throw ParseError("expected '0' or '1'", i);
    }
    return v;
}

BitVector BitVector::from_poly(const Gf2Poly& p, int size) {
    BitVector v(size);
    if (p.is_zero() || size == 0) return v;
    const int d = p.deg();
    for (int i = 0; i <= d; ++i)
        if (p.coeff(i)) v.flip(i % size);
    return v;
}

void BitVector::set(int i, bool value) noexcept {
    if (get(i) != value) flip(i);
}

bool BitVector::is_zero() const noexcept {
    for (Word w : words_)
        if (w != 0) return false;
    return true;
}

int BitVector::weight() const noexcept {
    int total = 0;
    for (Word w : words_) total += std::popcount(w);
    return total;
}

bool BitVector::dot(const BitVector& other) const {
    if (other.size_ != size_) throw DomainError("dot: size mismatch");
    int parity = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) parity ^= std::popcount(words_[i] & other.words_[i]) & 1;
    return parity != 0;
}

BitVector BitVector::rotated(long long k) const {
    BitVector out(size_);
    if (size_ == 0) return out;
    const long long shift = ((k % size_) + size_) % size_;
    for (int j = 0; j < size_; ++j)
        if (get(j)) out.flip(static_cast<int>((j + shift) % size_));
    return out;
}

BitVector BitVector::slice(int offset, int length) const {
    if (offset < 0 || length < 0 || offset + length > size_) throw DomainError("slice out of range");
    BitVector out(length);
    for (int j = 0; j < length; ++j)
        if (get(offset + j)) out.flip(j);
    return out;
}

BitVector BitVector::concat(const BitVector& tail) const {
    BitVector out(size_ + tail.size_);
    for (int j = 0; j < size_; ++j)
        if (get(j)) out.flip(j);
    for (int j = 0; j < tail.size_; ++j)
        if (tail.get(j)) out.flip(size_ + j);
    return out;
}

Gf2Poly BitVector::to_poly() const {
    Gf2Poly p;
    for (int j = 0; j < size_; ++j)
        if (get(j)) p.flip_coeff(j);
    return p;
}

std::string BitVector::to_string() const {
    std::string out(static_cast<std::size_t>(size_), '0');
    for (int j = 0; j < size_; ++j)
        if (get(j)) out[static_cast<std::size_t>(j)] = '1';
    return out;
}

BitVector& BitVector::operator^=(const BitVector& rhs) {
    if (rhs.size_ != size_) throw DomainError("xor: size mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= rhs.words_[i];
    return *this;
}

std::strong_ordering operator<=>(const BitVector& lhs, const BitVector& rhs) {
    if (auto c = lhs.size_ <=> rhs.size_; c != 0) return c;
    for (int j = 0; j < lhs.size_; ++j)
        if (lhs.get(j) != rhs.get(j)) return lhs.get(j) ? std::strong_ordering::greater : std::strong_ordering::less;
    return std::strong_ordering::equal;
}

}  // namespace z2dc
