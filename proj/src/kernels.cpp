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

#include "z2dc/kernels.hpp"

#include <algorithm>
#include <bit>
#include <climits>

#include "z2dc/errors.hpp"

namespace z2dc::kernels {

namespace {

constexpr std::size_t kChunkBits = 10;

void check_span_size(std::size_t rows, std::size_t out) {
    if (rows >= 63 || out != (std::size_t{1} << rows)) throw DomainError("span_words: output must hold 2^k words");
}

}  // namespace

void span_words(std::span<const PackedWord> rows, std::span<PackedWord> out) {
    check_span_size(rows.size(), out.size());
    const std::size_t k = rows.size();
    const std::size_t low = std::min(k, kChunkBits);
    const auto chunks = static_cast<long long>(std::size_t{1} << (k - low));
    const std::size_t chunk_size = std::size_t{1} << low;

    // Chunk c fixes the high rows by the bits of c; a Gray-code walk covers the low rows.
#pragma omp parallel for schedule(static)
    for (long long c = 0; c < chunks; ++c) {
        PackedWord w = 0;
        for (std::size_t j = 0; low + j < k; ++j)
            if ((static_cast<std::size_t>(c) >> j) & 1U) w ^= rows[low + j];
        PackedWord* dst = out.data() + static_cast<std::size_t>(c) * chunk_size;
        dst[0] = w;
        for (std::size_t i = 1; i < chunk_size; ++i) {
            w ^= rows[static_cast<std::size_t>(std::countr_zero(i))];
            dst[i] = w;
        }
    }
}

std::optional<int> min_weight(std::span<const PackedWord> words) {
    int best = INT_MAX;
    const auto count = static_cast<long long>(words.size());
#pragma omp parallel for reduction(min : best) schedule(static)
    for (long long i = 0; i < count; ++i) {
        const PackedWord w = words[static_cast<std::size_t>(i)];
        if (w != 0) best = std::min(best, std::popcount(w));
    }
    if (best == INT_MAX) return std::nullopt;
    return best;
}

bool shift_closed(std::span<const PackedWord> sorted_words, int r, int s) {
    int closed = 1;
    const auto count = static_cast<long long>(sorted_words.size());
#pragma omp parallel for reduction(&& : closed) schedule(static)
    for (long long i = 0; i < count; ++i) {
        const PackedWord shifted = shift_packed(sorted_words[static_cast<std::size_t>(i)], r, s);
        closed = closed && std::binary_search(sorted_words.begin(), sorted_words.end(), shifted);
    }
    return closed != 0;
}

std::uint64_t count_orthogonal(std::span<const PackedWord> words, std::span<const PackedWord> rows) {
    std::uint64_t total = 0;
    const auto count = static_cast<long long>(words.size());
#pragma omp parallel for reduction(+ : total) schedule(static)
    for (long long i = 0; i < count; ++i) {
        bool ok = true;
        for (PackedWord row : rows) ok = ok && (std::popcount(words[static_cast<std::size_t>(i)] & row) % 2 == 0);
        total += ok ? 1 : 0;
    }
    return total;
}

namespace serial {

void span_words(std::span<const PackedWord> rows, std::span<PackedWord> out) {
    check_span_size(rows.size(), out.size());
    for (std::size_t mask = 0; mask < out.size(); ++mask) {
        PackedWord w = 0;
        for (std::size_t j = 0; j < rows.size(); ++j)
            if ((mask >> j) & 1U) w ^= rows[j];
        out[mask] = w;
    }
}

std::optional<int> min_weight(std::span<const PackedWord> words) {
    std::optional<int> best;
    for (PackedWord w : words)
        if (w != 0 && (!best || std::popcount(w) < *best)) best = std::popcount(w);
    return best;
}

bool shift_closed(std::span<const PackedWord> sorted_words, int r, int s) {
    for (PackedWord w : sorted_words)
        if (!std::binary_search(sorted_words.begin(), sorted_words.end(), shift_packed(w, r, s))) return false;
    return true;
}

std::uint64_t count_orthogonal(std::span<const PackedWord> words, std::span<const PackedWord> rows) {
    std::uint64_t total = 0;
    for (PackedWord w : words) {
        bool ok = true;
        for (PackedWord row : rows) ok = ok && (std::popcount(w & row) % 2 == 0);
        if (ok) ++total;
    }
    return total;
}

}  // namespace serial

}  // namespace z2dc::kernels
