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

#ifndef Z2DC_CODE_HPP
#define Z2DC_CODE_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "z2dc/bitvector.hpp"
#include "z2dc/gf2poly.hpp"

namespace z2dc {

/// Block lengths of R_{r,s} = Z2[x]/(x^r - 1) x Z2[x]/(x^s - 1), with n = r + s and m = lcm(r, s).
struct CodeParams {
    int r = 0;
    int s = 0;
    int n = 0;
    int m = 0;

    /// Throws ValidationError(UnsupportedDegenerateLength) unless r >= 1 and s >= 1.
    static CodeParams make(int r, int s);
    friend bool operator==(const CodeParams&, const CodeParams&) = default;
};

/// Element (u | u') of Z2^r x Z2^s.
struct Codeword {
    BitVector left;
    BitVector right;

    static Codeword zero(const CodeParams& params);
    /// Image of (p(x) | q(x)), each part reduced modulo x^r - 1 resp. x^s - 1.
    static Codeword from_polys(const CodeParams& params, const Gf2Poly& p, const Gf2Poly& q);
    /// Parses `110|000`. Throws ValidationError(ParameterMismatch) on wrong lengths.
    static Codeword parse(const CodeParams& params, std::string_view text);
    /// Inverse of `concatenated()`.
    static Codeword split(const CodeParams& params, const BitVector& full);

    Gf2Poly left_poly() const { return left.to_poly(); }
    Gf2Poly right_poly() const { return right.to_poly(); }
    BitVector concatenated() const { return left.concat(right); }
    bool is_zero() const noexcept { return left.is_zero() && right.is_zero(); }
    int weight() const noexcept { return left.weight() + right.weight(); }
    bool dot(const Codeword& other) const { return left.dot(other.left) != right.dot(other.right); }
    std::string to_string() const { return left.to_string() + "|" + right.to_string(); }

    Codeword& operator^=(const Codeword& rhs);
    friend Codeword operator^(Codeword lhs, const Codeword& rhs) { return lhs ^= rhs; }
    friend bool operator==(const Codeword&, const Codeword&) = default;
};

/// The generators (b | 0) and (ell | a) of a submodule of R_{r,s}. An absent generator is
/// written in divisor form: b = x^r - 1 or a = x^s - 1.
struct GeneratorTriple {
    CodeParams params;
    Gf2Poly b;
    Gf2Poly ell;
    Gf2Poly a;

    friend bool operator==(const GeneratorTriple&, const GeneratorTriple&) = default;
};

/// A validated Z2-double cyclic code. Always holds the normalized triple (deg ell < deg b or ell = 0).
class DoubleCyclicCode {
   public:
    const GeneratorTriple& triple() const noexcept { return triple_; }
    const CodeParams& params() const noexcept { return triple_.params; }
    const Gf2Poly& b() const noexcept { return triple_.b; }
    const Gf2Poly& ell() const noexcept { return triple_.ell; }
    const Gf2Poly& a() const noexcept { return triple_.a; }
    /// deg b - deg gcd(b, ell).
    int kappa() const noexcept { return kappa_; }
    /// r + s - deg b - deg a.
    int dimension() const noexcept { return dimension_; }

   private:
    friend DoubleCyclicCode validate(const GeneratorTriple& triple);
    DoubleCyclicCode(GeneratorTriple triple, int kappa, int dimension)
        : triple_(std::move(triple)), kappa_(kappa), dimension_(dimension) {}

    GeneratorTriple triple_;
    int kappa_;
    int dimension_;
};

/**
 * Checks b | x^r - 1, a | x^s - 1 and b | ((x^s - 1)/a) ell, then normalizes ell and derives
 * kappa and the dimension. Invalid triples are rejected, never repaired.
 * Throws ValidationError with kind NotADivisorLeft, NotADivisorRight or CompatibilityViolation
 * (detail() holds the remainder).
 */
DoubleCyclicCode validate(const GeneratorTriple& triple);

/// Replaces ell by ell mod b. Requires b | x^r - 1 (b nonzero).
GeneratorTriple normalize(const GeneratorTriple& triple);

/// Simultaneous cyclic shift x^i * w (negative i shifts backwards).
Codeword shift(const Codeword& w, long long i);

/// Shifts x^i (b|0), i < r - deg b, followed by x^i (ell|a), i < s - deg a.
std::vector<Codeword> spanning_set(const DoubleCyclicCode& code);

/// Binary matrix over n = r + s columns. The first r columns are the left block.
struct BinaryMatrix {
    int r = 0;
    int s = 0;
    std::vector<BitVector> rows;
    /// Column j of this matrix is column column_permutation[j] of the original coordinates.
    std::vector<int> column_permutation;

    int width() const noexcept { return r + s; }
    int rank() const;
    /// One line per row, `|` between the blocks.
    std::string to_string() const;
};

BinaryMatrix generator_matrix(const DoubleCyclicCode& code);

/**
 * Row-equivalent generator matrix, up to column permutation within each block, of the shape
 *
 *     I_{r-deg b}  A1   A2 |  0    0     0
 *     0            Bk   B  |  C1   I_k   0
 *     0            0    0  |  C2   R     I_{s-deg a-k}
 *
 * with Bk a full-rank kappa x kappa block.
 */
struct StandardForm {
    BinaryMatrix matrix;
    int left_identity = 0;   // r - deg b
    int kappa = 0;
    int right_identity = 0;  // s - deg a - kappa
};

/// Throws InternalInconsistency if the row reduction disagrees with the dimension formula.
StandardForm standard_form(const DoubleCyclicCode& code);

/// Generator of the cyclic projection C_r: gcd(b, ell).
Gf2Poly project_left(const DoubleCyclicCode& code);
/// Generator of the cyclic projection C_s: a.
Gf2Poly project_right(const DoubleCyclicCode& code);

/// C = C_r x C_s, i.e. the normalized ell is zero.
bool is_separable(const DoubleCyclicCode& code);

/// XOR of the spanning-set rows selected by `message` (length = dimension).
Codeword encode(const DoubleCyclicCode& code, const BitVector& message);

/// log2 of |C_r|, |C_s|, |(C_r)^perp|, |(C_s)^perp|, |(C^perp)_r|, |(C^perp)_s|.
struct SubcodeCardinalities {
    int left = 0;
    int right = 0;
    int left_dual = 0;
    int right_dual = 0;
    int dual_left = 0;
    int dual_right = 0;

    /// 2^exponent; throws CapExceededError for exponents >= 64.
    static std::uint64_t count(int exponent);
    friend bool operator==(const SubcodeCardinalities&, const SubcodeCardinalities&) = default;
};

SubcodeCardinalities subcode_cardinalities(const DoubleCyclicCode& code);

}  // namespace z2dc

#endif
