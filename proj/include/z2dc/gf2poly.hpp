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

#ifndef Z2DC_GF2POLY_HPP
#define Z2DC_GF2POLY_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace z2dc {

/**
 * Polynomial over GF(2), stored densely as little-endian 64-bit words: bit i of the
 * sequence is the coefficient of x^i. The word vector never has a trailing zero word,
 * so the zero polynomial is the empty vector and equality is word equality.
 */
class Gf2Poly {
   public:
    using Word = std::uint64_t;
    static constexpr int kWordBits = 64;

    Gf2Poly() = default;

    /// Polynomial whose coefficients are the bits of `bits` (bit i -> x^i).
    static Gf2Poly from_word(Word bits);
    /// x^k.
    static Gf2Poly monomial(int k);
    /// Sum of x^e over the listed exponents; repeated exponents cancel.
    static Gf2Poly from_exponents(std::initializer_list<int> exponents);
    /// x^n + 1, i.e. x^n - 1 over GF(2).
    static Gf2Poly x_pow_minus_one(int n);
    static Gf2Poly one() { return from_word(1); }

    bool is_zero() const noexcept { return words_.empty(); }
    bool is_one() const noexcept { return words_.size() == 1 && words_[0] == 1; }

    /// Degree, or std::nullopt for the zero polynomial (which has no numeric degree).
    std::optional<int> degree() const noexcept;
    /// Degree of a nonzero polynomial; throws DomainError on zero.
    int deg() const;

    bool coeff(int i) const noexcept;
    void set_coeff(int i, bool value);
    void flip_coeff(int i);
    /// Number of nonzero coefficients.
    int weight() const noexcept;

    std::span<const Word> words() const noexcept { return words_; }

    /// p * x^k.
    Gf2Poly shifted(int k) const;
    /// p(x^n).
    Gf2Poly compose_power(int n) const;

    Gf2Poly& operator+=(const Gf2Poly& rhs);
    Gf2Poly& operator*=(const Gf2Poly& rhs);
    friend Gf2Poly operator+(Gf2Poly lhs, const Gf2Poly& rhs) { return lhs += rhs; }
    friend Gf2Poly operator-(Gf2Poly lhs, const Gf2Poly& rhs) { return lhs += rhs; }
    friend Gf2Poly operator*(const Gf2Poly& lhs, const Gf2Poly& rhs);

    friend bool operator==(const Gf2Poly&, const Gf2Poly&) = default;
    /// Orders by degree first (zero smallest), then by coefficients from the top down.
    friend std::strong_ordering operator<=>(const Gf2Poly& lhs, const Gf2Poly& rhs) noexcept;

   private:
    explicit Gf2Poly(std::vector<Word> words) : words_(std::move(words)) { trim(); }
    void trim() noexcept;

    std::vector<Word> words_;
};

struct DivRem {
    Gf2Poly quotient;
    Gf2Poly remainder;
};

/// Euclidean division. Throws DomainError when `d` is zero.
DivRem divrem(const Gf2Poly& p, const Gf2Poly& d);
inline Gf2Poly operator/(const Gf2Poly& p, const Gf2Poly& d) { return divrem(p, d).quotient; }
inline Gf2Poly operator%(const Gf2Poly& p, const Gf2Poly& d) { return divrem(p, d).remainder; }
/// True iff d | p. d must be nonzero.
bool divides(const Gf2Poly& d, const Gf2Poly& p);
/// p / d when the division is exact; throws InternalInconsistency otherwise.
Gf2Poly exact_div(const Gf2Poly& p, const Gf2Poly& d);

/// Greatest common divisor. gcd(p, 0) = p; gcd(0, 0) throws DomainError.
Gf2Poly gcd(const Gf2Poly& p, const Gf2Poly& q);

struct Egcd {
    Gf2Poly g;
    Gf2Poly u;
    Gf2Poly v;
};

/// Extended Euclid: g = gcd(p, q) and u*p + v*q = g.
Egcd egcd(const Gf2Poly& p, const Gf2Poly& q);

/// w with w*p = 1 (mod modulus) and deg w < deg modulus.
/// Throws DomainError if deg modulus < 1, NotInvertibleError if gcd(p, modulus) != 1.
Gf2Poly modinv(const Gf2Poly& p, const Gf2Poly& modulus);

/// x^e mod `modulus` by iterated reduction.
Gf2Poly x_pow_mod(long long e, const Gf2Poly& modulus);

/// x^{deg p} p(1/x): the coefficient sequence reversed over 0..deg p. reciprocal(0) = 0.
Gf2Poly reciprocal(const Gf2Poly& p);

/// 1 + x + ... + x^{m-1}. Throws DomainError for m < 1.
Gf2Poly theta(int m);

/**
 * Parses either grammar:
 *  - algebraic: terms `1`, `x`, `x^k` joined by `+` (or `-`), any order, whitespace allowed,
 *    repeated terms XOR-fold; `0` alone is the zero polynomial;
 *  - bitstring: only `0`/`1` characters, position i is the coefficient of x^i.
 * Throws ParseError carrying the offending position.
 */
Gf2Poly parse_poly(std::string_view text);

/// Canonical algebraic text, descending exponents: `x^3+x+1`, `x`, `1`, `0`.
std::string to_string(const Gf2Poly& p);
/// Little-endian bitstring of exactly `length` characters (high coefficients must be zero).
std::string to_bitstring(const Gf2Poly& p, int length);

std::ostream& operator<<(std::ostream& os, const Gf2Poly& p);

}  // namespace z2dc

#endif
