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

#include "z2dc/gf2poly.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <utility>

#include "z2dc/errors.hpp"

namespace z2dc {

namespace {

constexpr int kBits = Gf2Poly::kWordBits;

// dst ^= src << shift, growing dst as needed.
void xor_shifted(std::vector<Gf2Poly::Word>& dst, std::span<const Gf2Poly::Word> src, int shift) {
    if (src.empty()) return;
    const int word_shift = shift / kBits;
    const int bit_shift = shift % kBits;
    const std::size_t need = src.size() + static_cast<std::size_t>(word_shift) + 1;
    if (dst.size() < need) dst.resize(need, 0);
    for (std::size_t i = 0; i < src.size(); ++i) {
        dst[i + word_shift] ^= src[i] << bit_shift;
        if (bit_shift != 0) dst[i + word_shift + 1] ^= src[i] >> (kBits - bit_shift);
    }
}

int top_bit(const std::vector<Gf2Poly::Word>& w) {
    for (std::size_t i = w.size(); i-- > 0;)
        if (w[i] != 0) return static_cast<int>(i) * kBits + (kBits - 1 - std::countl_zero(w[i]));
    return -1;
}

}  // namespace

Gf2Poly Gf2Poly::from_word(Word bits) { return Gf2Poly(std::vector<Word>{bits}); }

Gf2Poly Gf2Poly::monomial(int k) {
    if (k < 0) throw DomainError("monomial: negative exponent");
    std::vector<Word> w(static_cast<std::size_t>(k / kBits) + 1, 0);
    w.back() = Word{1} << (k % kBits);
    return Gf2Poly(std::move(w));
}

Gf2Poly Gf2Poly::from_exponents(std::initializer_list<int> exponents) {
    Gf2Poly p;
    for (int e : exponents) p.flip_coeff(e);
    return p;
}

Gf2Poly Gf2Poly::x_pow_minus_one(int n) {
    Gf2Poly p = monomial(n);
    p.flip_coeff(0);
    return p;
}

void Gf2Poly::trim() noexcept {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

std::optional<int> Gf2Poly::degree() const noexcept {
    if (words_.empty()) return std::nullopt;
    return static_cast<int>(words_.size() - 1) * kBits + (kBits - 1 - std::countl_zero(words_.back()));
}

int Gf2Poly::deg() const {
    auto d = degree();
    if (!d) throw DomainError("degree of the zero polynomial is undefined");
    return *d;
}

bool Gf2Poly::coeff(int i) const noexcept {
    if (i < 0) return false;
    const auto w = static_cast<std::size_t>(i / kBits);
    return w < words_.size() && ((words_[w] >> (i % kBits)) & 1U);
}

void Gf2Poly::set_coeff(int i, bool value) {
    if (coeff(i) != value) flip_coeff(i);
}

void Gf2Poly::flip_coeff(int i) {
    if (i < 0) throw DomainError("negative coefficient index");
    const auto w = static_cast<std::size_t>(i / kBits);
    if (w >= words_.size()) words_.resize(w + 1, 0);
    words_[w] ^= Word{1} << (i % kBits);
    trim();
}

int Gf2Poly::weight() const noexcept {
    int total = 0;
    for (Word w : words_) total += std::popcount(w);
    return total;
}

Gf2Poly Gf2Poly::shifted(int k) const {
    if (k < 0) throw DomainError("shifted: negative shift");
    std::vector<Word> out;
    xor_shifted(out, words_, k);
    return Gf2Poly(std::move(out));
}

Gf2Poly Gf2Poly::compose_power(int n) const {
    if (n < 1) throw DomainError("compose_power: exponent must be positive");
    Gf2Poly out;
    if (is_zero()) return out;
    const int d = deg();
    for (int i = 0; i <= d; ++i)
        if (coeff(i)) out.flip_coeff(i * n);
    return out;
}

Gf2Poly& Gf2Poly::operator+=(const Gf2Poly& rhs) {
    if (words_.size() < rhs.words_.size()) words_.resize(rhs.words_.size(), 0);
    for (std::size_t i = 0; i < rhs.words_.size(); ++i) words_[i] ^= rhs.words_[i];
    trim();
    return *this;
}

Gf2Poly operator*(const Gf2Poly& lhs, const Gf2Poly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    const Gf2Poly& sparse = lhs.weight() <= rhs.weight() ? lhs : rhs;
    const Gf2Poly& dense = &sparse == &lhs ? rhs : lhs;
    std::vector<Gf2Poly::Word> out(sparse.words_.size() + dense.words_.size() + 1, 0);
    for (std::size_t wi = 0; wi < sparse.words_.size(); ++wi) {
        Gf2Poly::Word w = sparse.words_[wi];
        while (w != 0) {
            const int bit = std::countr_zero(w);
            w &= w - 1;
            xor_shifted(out, dense.words_, static_cast<int>(wi) * kBits + bit);
        }
    }
    return Gf2Poly(std::move(out));
}

Gf2Poly& Gf2Poly::operator*=(const Gf2Poly& rhs) { return *this = *this * rhs; }

std::strong_ordering operator<=>(const Gf2Poly& lhs, const Gf2Poly& rhs) noexcept {
    if (auto c = lhs.words_.size() <=> rhs.words_.size(); c != 0) return c;
    for (std::size_t i = lhs.words_.size(); i-- > 0;)
        if (auto c = lhs.words_[i] <=> rhs.words_[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

DivRem divrem(const Gf2Poly& p, const Gf2Poly& d) {
    if (d.is_zero()) throw DomainError("division by the zero polynomial");
    const int dd = d.deg();
    std::vector<Gf2Poly::Word> rem(p.words().begin(), p.words().end());
    Gf2Poly quotient;
    for (int top = top_bit(rem); top >= dd; top = top_bit(rem)) {
        xor_shifted(rem, d.words(), top - dd);
        quotient.flip_coeff(top - dd);
    }
    Gf2Poly remainder;
    for (int i = 0, t = top_bit(rem); i <= t; ++i)
        if ((rem[static_cast<std::size_t>(i / kBits)] >> (i % kBits)) & 1U) remainder.flip_coeff(i);
    return {std::move(quotient), std::move(remainder)};
}

bool divides(const Gf2Poly& d, const Gf2Poly& p) { return (p % d).is_zero(); }

Gf2Poly exact_div(const Gf2Poly& p, const Gf2Poly& d) {
    auto [q, rem] = divrem(p, d);
    if (!rem.is_zero())
        throw InternalInconsistency("inexact division: (" + to_string(p) + ") / (" + to_string(d) +
                                    ") leaves remainder " + to_string(rem));
    return q;
}

Gf2Poly gcd(const Gf2Poly& p, const Gf2Poly& q) {
    if (p.is_zero() && q.is_zero()) throw DomainError("gcd(0, 0) is undefined");
    Gf2Poly a = p, b = q;
    while (!b.is_zero()) {
        Gf2Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Egcd egcd(const Gf2Poly& p, const Gf2Poly& q) {
    if (p.is_zero() && q.is_zero()) throw DomainError("egcd(0, 0) is undefined");
    // Invariant: old_r = old_u*p + old_v*q and r = u*p + v*q.
    Gf2Poly old_r = p, r = q;
    Gf2Poly old_u = Gf2Poly::one(), u;
    Gf2Poly old_v, v = Gf2Poly::one();
    while (!r.is_zero()) {
        auto [quot, rem] = divrem(old_r, r);
        old_r = std::exchange(r, std::move(rem));
        old_u = std::exchange(u, old_u + quot * u);
        old_v = std::exchange(v, old_v + quot * v);
    }
    return {std::move(old_r), std::move(old_u), std::move(old_v)};
}

Gf2Poly modinv(const Gf2Poly& p, const Gf2Poly& modulus) {
    if (modulus.is_zero() || modulus.deg() < 1) throw DomainError("modinv: modulus must have degree >= 1");
    const Gf2Poly reduced = p % modulus;
    if (reduced.is_zero()) throw NotInvertibleError("modinv: zero is not invertible", to_string(modulus));
    auto [g, u, v] = egcd(reduced, modulus);
    if (!g.is_one())
        throw NotInvertibleError("modinv: " + to_string(p) + " is not invertible modulo " + to_string(modulus),
                                 to_string(g));
    return u % modulus;
}

Gf2Poly x_pow_mod(long long e, const Gf2Poly& modulus) {
    if (e < 0) throw DomainError("x_pow_mod: negative exponent");
    if (modulus.is_zero()) throw DomainError("x_pow_mod: zero modulus");
    const Gf2Poly x = Gf2Poly::monomial(1);
    Gf2Poly acc = Gf2Poly::one() % modulus;
    for (long long i = 0; i < e; ++i) acc = (acc * x) % modulus;
    return acc;
}

Gf2Poly reciprocal(const Gf2Poly& p) {
    Gf2Poly out;
    if (p.is_zero()) return out;
    const int d = p.deg();
    for (int i = 0; i <= d; ++i)
        if (p.coeff(i)) out.flip_coeff(d - i);
    return out;
}

Gf2Poly theta(int m) {
    if (m < 1) throw DomainError("theta: m must be >= 1");
    Gf2Poly out;
    for (int i = 0; i < m; ++i) out.flip_coeff(i);
    return out;
}

namespace {

void skip_spaces(std::string_view text, std::size_t& pos) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
}

Gf2Poly parse_algebraic(std::string_view text) {
    Gf2Poly out;
    std::size_t pos = 0;
    skip_spaces(text, pos);
    if (pos == text.size()) throw ParseError("empty polynomial", pos);
    bool expect_term = true;
    while (pos < text.size()) {
        skip_spaces(text, pos);
        if (pos == text.size()) break;
        const char c = text[pos];
        if (!expect_term) {
            if (c != '+' && c != '-') throw ParseError(std::string("expected '+' but found '") + c + "'", pos);
            ++pos;
            expect_term = true;
            continue;
        }
        if (c == '1' || c == '0') {
            const std::size_t start = pos++;
            if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                throw ParseError("constant term must be 0 or 1", start);
            if (c == '1') out.flip_coeff(0);
        } else if (c == 'x' || c == 'X') {
            ++pos;
            int exponent = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                const std::size_t start = pos;
                long long value = 0;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                    value = value * 10 + (text[pos] - '0');
                    if (value > 1'000'000) throw ParseError("exponent too large", start);
                    ++pos;
                }
                if (pos == start) throw ParseError("expected exponent after '^'", start);
                exponent = static_cast<int>(value);
            }
            out.flip_coeff(exponent);
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", pos);
        }
        expect_term = false;
    }
    if (expect_term) throw ParseError("dangling operator", text.size());
    return out;
}

}  // namespace

Gf2Poly parse_poly(std::string_view text) {
    const bool bitstring =
        !text.empty() && std::all_of(text.begin(), text.end(), [](char c) { return c == '0' || c == '1'; });
    if (!bitstring) return parse_algebraic(text);
    Gf2Poly out;
    for (std::size_t i = 0; i < text.size(); ++i)
        if (text[i] == '1') out.flip_coeff(static_cast<int>(i));
    return out;
}

std::string to_string(const Gf2Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.deg(); i >= 0; --i) {
        if (!p.coeff(i)) continue;
        if (!out.empty()) out += '+';
        if (i == 0)
            out += '1';
        else if (i == 1)
            out += 'x';
        else
            out += "x^" + std::to_string(i);
    }
    return out;
}

std::string to_bitstring(const Gf2Poly& p, int length) {
    if (auto d = p.degree(); d && *d >= length) throw DomainError("to_bitstring: polynomial does not fit");
    std::string out(static_cast<std::size_t>(std::max(length, 0)), '0');
    for (int i = 0; i < length; ++i)
        if (p.coeff(i)) out[static_cast<std::size_t>(i)] = '1';
    return out;
}

std::ostream& operator<<(std::ostream& os, const Gf2Poly& p) { return os << to_string(p); }

}  // namespace z2dc
