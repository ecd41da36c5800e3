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

#include "z2dc/oracle.hpp"

#include <algorithm>
#include <bit>

#include "z2dc/errors.hpp"
#include "z2dc/linalg.hpp"

namespace z2dc::oracle {

namespace {

constexpr int kPackedLimit = 63;
constexpr int kSubspaceScanCap = 8;

void require_packable(const CodeParams& params) {
    if (params.n > kPackedLimit)
        throw CapExceededError("length n = " + std::to_string(params.n) + " exceeds the packed limit of " +
                               std::to_string(kPackedLimit));
}

void sort_unique(std::vector<PackedWord>& words) {
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
}

PackedWord mask(int len) { return len >= 64 ? ~PackedWord{0} : (PackedWord{1} << len) - 1; }

// Adds w to a reduced basis (pivot = lowest set bit), keeping it fully reduced.
void insert_reduced(std::vector<PackedWord>& basis, PackedWord w) {
    for (PackedWord row : basis)
        if ((w >> std::countr_zero(row)) & 1U) w ^= row;
    if (w == 0) return;
    const int pivot = std::countr_zero(w);
    for (PackedWord& row : basis)
        if ((row >> pivot) & 1U) row ^= w;
    basis.push_back(w);
}

std::vector<PackedWord> sorted_by_pivot(std::vector<PackedWord> basis) {
    std::sort(basis.begin(), basis.end(),
              [](PackedWord x, PackedWord y) { return std::countr_zero(x) < std::countr_zero(y); });
    return basis;
}

bool in_span(const std::vector<PackedWord>& reduced_basis, PackedWord w) {
    for (PackedWord row : reduced_basis)
        if ((w >> std::countr_zero(row)) & 1U) w ^= row;
    return w == 0;
}

CodewordSet span_packed(const CodeParams& params, const std::vector<PackedWord>& rows, bool use_serial) {
    std::vector<PackedWord> basis;
    for (PackedWord w : rows) insert_reduced(basis, w);
    if (static_cast<int>(basis.size()) > kEnumerationCap)
        throw CapExceededError("span dimension " + std::to_string(basis.size()) + " exceeds the enumeration cap " +
                               std::to_string(kEnumerationCap));
    std::vector<PackedWord> words(std::size_t{1} << basis.size());
    if (use_serial)
        kernels::serial::span_words(basis, words);
    else
        kernels::span_words(basis, words);
    return CodewordSet(params, std::move(words));
}

std::vector<PackedWord> packed_rows(const std::vector<Codeword>& rows) {
    std::vector<PackedWord> out;
    out.reserve(rows.size());
    for (const auto& w : rows) out.push_back(pack(w));
    return out;
}

CodewordSet enumerate_impl(const DoubleCyclicCode& code, bool use_serial) {
    require_packable(code.params());
    if (code.dimension() > kEnumerationCap)
        throw CapExceededError("dimension " + std::to_string(code.dimension()) + " exceeds the enumeration cap " +
                               std::to_string(kEnumerationCap));
    return span_packed(code.params(), packed_rows(spanning_set(code)), use_serial);
}

}  // namespace

PackedWord pack(const Codeword& w) {
    const int r = w.left.size();
    if (r + w.right.size() > kPackedLimit) throw CapExceededError("codeword too long to pack");
    PackedWord out = 0;
    for (int j = 0; j < r; ++j)
        if (w.left.get(j)) out |= PackedWord{1} << j;
    for (int j = 0; j < w.right.size(); ++j)
        if (w.right.get(j)) out |= PackedWord{1} << (r + j);
    return out;
}

Codeword unpack(const CodeParams& params, PackedWord w) {
    Codeword out = Codeword::zero(params);
    for (int j = 0; j < params.r; ++j)
        if ((w >> j) & 1U) out.left.flip(j);
    for (int j = 0; j < params.s; ++j)
        if ((w >> (params.r + j)) & 1U) out.right.flip(j);
    return out;
}

CodewordSet::CodewordSet(CodeParams params, std::vector<PackedWord> words)
    : params_(params), words_(std::move(words)) {
    require_packable(params_);
    sort_unique(words_);
}

bool CodewordSet::contains(const Codeword& w) const { return contains_packed(pack(w)); }

bool CodewordSet::contains_packed(PackedWord w) const { return std::binary_search(words_.begin(), words_.end(), w); }

std::vector<Codeword> CodewordSet::codewords() const {
    std::vector<Codeword> out;
    out.reserve(words_.size());
    for (PackedWord w : words_) out.push_back(unpack(params_, w));
    return out;
}

CodewordSet span(const CodeParams& params, const std::vector<Codeword>& rows) {
    require_packable(params);
    return span_packed(params, packed_rows(rows), false);
}

CodewordSet enumerate(const DoubleCyclicCode& code) { return enumerate_impl(code, false); }

CodewordSet enumerate_serial(const DoubleCyclicCode& code) { return enumerate_impl(code, true); }

namespace {

CodewordSet nullspace_of_rows(const CodeParams& params, const std::vector<PackedWord>& rows) {
    if (params.n > kNullspaceCap)
        throw CapExceededError("length n = " + std::to_string(params.n) + " exceeds the nullspace cap " +
                               std::to_string(kNullspaceCap));
    std::vector<BitVector> matrix;
    for (PackedWord w : rows) matrix.push_back(unpack(params, w).concatenated());
    std::vector<PackedWord> basis;
    for (const auto& v : nullspace_basis(matrix, params.n)) basis.push_back(pack(Codeword::split(params, v)));
    return span_packed(params, basis, false);
}

}  // namespace

CodewordSet nullspace_dual(const DoubleCyclicCode& code) {
    return nullspace_of_rows(code.params(), packed_rows(spanning_set(code)));
}

CodewordSet nullspace_dual(const CodewordSet& set) {
    return nullspace_of_rows(set.params(), canonical_basis(set.params(), set.words()));
}

CodewordSet nullspace_dual_bruteforce(const CodewordSet& set) {
    const CodeParams& p = set.params();
    if (p.n > 22) throw CapExceededError("brute-force dual limited to n <= 22");
    const std::vector<PackedWord> basis = canonical_basis(p, set.words());
    std::vector<PackedWord> out;
    for (PackedWord v = 0; v < (PackedWord{1} << p.n); ++v) {
        bool orthogonal = true;
        for (PackedWord row : basis) orthogonal = orthogonal && std::popcount(v & row) % 2 == 0;
        if (orthogonal) out.push_back(v);
    }
    return CodewordSet(p, std::move(out));
}

bool verify_double_cyclic(const CodewordSet& set) {
    return kernels::shift_closed(set.words(), set.params().r, set.params().s);
}

std::optional<int> min_distance(const CodewordSet& set) { return kernels::min_weight(set.words()); }

std::optional<int> min_distance(const DoubleCyclicCode& code) { return min_distance(enumerate(code)); }

std::vector<PackedWord> canonical_basis(const CodeParams& params, const std::vector<PackedWord>& rows) {
    require_packable(params);
    std::vector<PackedWord> basis;
    for (PackedWord w : rows) insert_reduced(basis, w & mask(params.n));
    return sorted_by_pivot(std::move(basis));
}

namespace {

void require_same_params(const CodeParams& x, const CodeParams& y) {
    if (x.r != y.r || x.s != y.s)
        throw ValidationError(ValidationKind::ParameterMismatch, "codes_equal: codes have different (r, s)");
}

}  // namespace

bool codes_equal(const CodewordSet& x, const CodewordSet& y) {
    require_same_params(x.params(), y.params());
    return canonical_basis(x.params(), x.words()) == canonical_basis(y.params(), y.words());
}

bool codes_equal(const DoubleCyclicCode& x, const DoubleCyclicCode& y) {
    require_same_params(x.params(), y.params());
    const int n = x.params().n;
    std::vector<BitVector> rx, ry;
    for (const auto& w : spanning_set(x)) rx.push_back(w.concatenated());
    for (const auto& w : spanning_set(y)) ry.push_back(w.concatenated());
    return rref(std::move(rx), n).rows == rref(std::move(ry), n).rows;
}

bool codes_equal(const DoubleCyclicCode& x, const CodewordSet& y) {
    require_same_params(x.params(), y.params());
    return canonical_basis(x.params(), packed_rows(spanning_set(x))) == canonical_basis(y.params(), y.words());
}

std::vector<PackedWord> module_closure_basis(const CodeParams& params, const std::vector<Codeword>& generators) {
    require_packable(params);
    std::vector<PackedWord> basis;
    for (const auto& g : generators) {
        PackedWord w = pack(g);
        for (int i = 0; i < params.m; ++i) {
            insert_reduced(basis, w);
            w = kernels::shift_packed(w, params.r, params.s);
        }
    }
    return sorted_by_pivot(std::move(basis));
}

std::vector<PackedWord> cyclic_code(int len, const Gf2Poly& g) {
    if (len < 1 || len > kEnumerationCap) throw CapExceededError("cyclic_code: length out of range");
    const BitVector gen = BitVector::from_poly(g, len);
    std::vector<PackedWord> basis;
    for (int i = 0; i < len; ++i) {
        const BitVector row = gen.rotated(i);
        PackedWord w = 0;
        for (int j = 0; j < len; ++j)
            if (row.get(j)) w |= PackedWord{1} << j;
        insert_reduced(basis, w);
    }
    std::vector<PackedWord> words(std::size_t{1} << basis.size());
    kernels::span_words(basis, words);
    sort_unique(words);
    return words;
}

std::vector<PackedWord> project_left(const CodewordSet& set) {
    std::vector<PackedWord> out;
    for (PackedWord w : set.words()) out.push_back(w & mask(set.params().r));
    sort_unique(out);
    return out;
}

std::vector<PackedWord> project_right(const CodewordSet& set) {
    std::vector<PackedWord> out;
    for (PackedWord w : set.words()) out.push_back(w >> set.params().r);
    sort_unique(out);
    return out;
}

std::vector<PackedWord> zero_left_rights(const CodewordSet& set) {
    std::vector<PackedWord> out;
    for (PackedWord w : set.words())
        if ((w & mask(set.params().r)) == 0) out.push_back(w >> set.params().r);
    sort_unique(out);
    return out;
}

std::vector<PackedWord> zero_right_lefts(const CodewordSet& set) {
    std::vector<PackedWord> out;
    for (PackedWord w : set.words())
        if ((w >> set.params().r) == 0) out.push_back(w);
    sort_unique(out);
    return out;
}

std::uint64_t orthogonal_complement_size(int len, const std::vector<PackedWord>& words) {
    if (len < 0 || len > 22) throw CapExceededError("orthogonal_complement_size limited to len <= 22");
    std::vector<PackedWord> basis;
    for (PackedWord w : words) insert_reduced(basis, w);
    std::vector<PackedWord> all(std::size_t{1} << len);
    for (std::size_t v = 0; v < all.size(); ++v) all[v] = v;
    return kernels::count_orthogonal(all, basis);
}

bool orthogonal_to_all_shifts_direct(const Codeword& u, const Codeword& v, const CodeParams& params) {
    for (int i = 0; i < params.m; ++i)
        if (u.dot(shift(v, i))) return false;
    return true;
}

std::vector<std::vector<PackedWord>> shift_closed_subspaces(const CodeParams& params) {
    const int n = params.n;
    if (n > kSubspaceScanCap)
        throw CapExceededError("subspace scan limited to n <= " + std::to_string(kSubspaceScanCap));
    std::vector<std::vector<PackedWord>> found;
    for (PackedWord pivot_set = 0; pivot_set < (PackedWord{1} << n); ++pivot_set) {
        // Free positions of row i: columns after its pivot that are not pivots themselves.
        std::vector<int> pivots;
        for (int c = 0; c < n; ++c)
            if ((pivot_set >> c) & 1U) pivots.push_back(c);
        std::vector<std::pair<std::size_t, int>> free_slots;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            for (int c = pivots[i] + 1; c < n; ++c)
                if (!((pivot_set >> c) & 1U)) free_slots.emplace_back(i, c);
        const std::size_t assignments = std::size_t{1} << free_slots.size();
        for (std::size_t fill = 0; fill < assignments; ++fill) {
            std::vector<PackedWord> rows;
            for (int p : pivots) rows.push_back(PackedWord{1} << p);
            for (std::size_t f = 0; f < free_slots.size(); ++f)
                if ((fill >> f) & 1U) rows[free_slots[f].first] |= PackedWord{1} << free_slots[f].second;
            const bool closed = std::all_of(rows.begin(), rows.end(), [&](PackedWord row) {
                return in_span(rows, kernels::shift_packed(row, params.r, params.s));
            });
            if (closed) found.push_back(rows);
        }
    }
    std::sort(found.begin(), found.end());
    return found;
}

}  // namespace z2dc::oracle
