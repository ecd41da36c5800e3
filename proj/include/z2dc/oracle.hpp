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

#ifndef Z2DC_ORACLE_HPP
#define Z2DC_ORACLE_HPP

// Brute-force ground truth. Nothing here depends on the closed-form dual generators:
// duals are computed as linear-algebra nullspaces and codes are compared by canonical RREF.

#include <optional>
#include <vector>

#include "z2dc/code.hpp"
#include "z2dc/kernels.hpp"

namespace z2dc::oracle {

using kernels::PackedWord;

/// Largest dimension `enumerate` will materialize (2^24 words).
inline constexpr int kEnumerationCap = 24;
/// Largest length n for which nullspace duals and subspace scans are computed.
inline constexpr int kNullspaceCap = 24;

PackedWord pack(const Codeword& w);
Codeword unpack(const CodeParams& params, PackedWord w);

/// A set of codewords of R_{r,s}, held packed, sorted ascending by packed value, without repeats.
class CodewordSet {
   public:
    CodewordSet(CodeParams params, std::vector<PackedWord> words);

    const CodeParams& params() const noexcept { return params_; }
    const std::vector<PackedWord>& words() const noexcept { return words_; }
    std::size_t size() const noexcept { return words_.size(); }
    bool contains(const Codeword& w) const;
    bool contains_packed(PackedWord w) const;
    std::vector<Codeword> codewords() const;

    friend bool operator==(const CodewordSet&, const CodewordSet&) = default;

   private:
    CodeParams params_;
    std::vector<PackedWord> words_;
};

/// Z2-span of arbitrary rows. Throws CapExceededError if the span's dimension exceeds the cap.
CodewordSet span(const CodeParams& params, const std::vector<Codeword>& rows);

/// All 2^dimension codewords of the code, from its spanning set.
CodewordSet enumerate(const DoubleCyclicCode& code);
/// Same, through the serial reference kernel.
CodewordSet enumerate_serial(const DoubleCyclicCode& code);

/// {v : u . v = 0 for all u in C}, via a nullspace basis.
CodewordSet nullspace_dual(const DoubleCyclicCode& code);
CodewordSet nullspace_dual(const CodewordSet& set);
/// Same set by filtering all 2^n vectors; n <= 22.
CodewordSet nullspace_dual_bruteforce(const CodewordSet& set);

/// Every simultaneous shift of a member is a member.
bool verify_double_cyclic(const CodewordSet& set);

/// Minimum weight of a nonzero codeword; nullopt for the zero code.
std::optional<int> min_distance(const CodewordSet& set);
std::optional<int> min_distance(const DoubleCyclicCode& code);

/// Canonical RREF basis (pivot columns scanned in coordinate order) of the row space.
std::vector<PackedWord> canonical_basis(const CodeParams& params, const std::vector<PackedWord>& rows);

/// Row-space equality through canonical RREF. Throws ValidationError(ParameterMismatch) if (r, s) differ.
bool codes_equal(const CodewordSet& x, const CodewordSet& y);
bool codes_equal(const DoubleCyclicCode& x, const DoubleCyclicCode& y);
bool codes_equal(const DoubleCyclicCode& x, const CodewordSet& y);

/// RREF basis of the Z2[x]-submodule generated by `generators`: the span of all of their shifts.
std::vector<PackedWord> module_closure_basis(const CodeParams& params, const std::vector<Codeword>& generators);

/// Multiples of g modulo x^len - 1, as packed length-len words (sorted).
std::vector<PackedWord> cyclic_code(int len, const Gf2Poly& g);

/// Distinct left / right parts of the members (sorted, packed at bit 0).
std::vector<PackedWord> project_left(const CodewordSet& set);
std::vector<PackedWord> project_right(const CodewordSet& set);
/// Right parts of the members whose left part is zero.
std::vector<PackedWord> zero_left_rights(const CodewordSet& set);
/// Left parts of the members whose right part is zero.
std::vector<PackedWord> zero_right_lefts(const CodewordSet& set);

/// Number of length-len vectors orthogonal to all of `words` (each packed at bit 0).
std::uint64_t orthogonal_complement_size(int len, const std::vector<PackedWord>& words);

/// Direct check: u . v^{(i)} = 0 for every 0 <= i < m.
bool orthogonal_to_all_shifts_direct(const Codeword& u, const Codeword& v, const CodeParams& params);

/// Canonical bases of every shift-closed linear subspace of Z2^r x Z2^s, by scanning all
/// RREF matrices. n <= 8.
std::vector<std::vector<PackedWord>> shift_closed_subspaces(const CodeParams& params);

}  // namespace z2dc::oracle

#endif
