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

#include <gtest/gtest.h>

#include <algorithm>

#include "z2dc/catalog.hpp"
#include "z2dc/errors.hpp"
#include "z2dc/oracle.hpp"

namespace z2dc::catalog {
namespace {

Gf2Poly P(const char* text) { return parse_poly(text); }

std::vector<std::vector<oracle::PackedWord>> catalog_bases(int r, int s) {
    const CodeParams p = CodeParams::make(r, s);
    std::vector<std::vector<oracle::PackedWord>> out;
    for (const auto& e : enumerate_codes(r, s)) {
        std::vector<oracle::PackedWord> rows;
        for (const auto& w : spanning_set(validate(e.triple))) rows.push_back(oracle::pack(w));
        out.push_back(oracle::canonical_basis(p, rows));
    }
    std::sort(out.begin(), out.end());
    return out;
}

TEST(FactorTest, Examples) {
    EXPECT_EQ(factor_xn_minus_1(3), (std::vector<Gf2Poly>{P("x+1"), P("x^2+x+1")}));
    EXPECT_EQ(factor_xn_minus_1(2), (std::vector<Gf2Poly>{P("x+1"), P("x+1")}));
    EXPECT_EQ(factor_xn_minus_1(7), (std::vector<Gf2Poly>{P("x+1"), P("x^3+x+1"), P("x^3+x^2+1")}));
    EXPECT_THROW(factor_xn_minus_1(0), ValidationError);
    EXPECT_THROW(factor_xn_minus_1(25), CapExceededError);
}

TEST(FactorTest, ProductAndIrreducibility) {
    for (int n = 1; n <= kMaxFactorLength; ++n) {
        Gf2Poly product = Gf2Poly::one();
        for (const auto& f : factor_xn_minus_1(n)) {
            product *= f;
            // No factor of degree d has a divisor of degree between 1 and d/2.
            for (std::uint64_t bits = 2; bits < (std::uint64_t{1} << (f.deg() / 2 + 1)); ++bits) {
                const Gf2Poly g = Gf2Poly::from_word(bits);
                if (g.deg() >= 1 && g.deg() <= f.deg() / 2) EXPECT_FALSE(divides(g, f)) << g << " | " << f;
            }
        }
        EXPECT_EQ(product, Gf2Poly::x_pow_minus_one(n)) << "n=" << n;
    }
}

TEST(DivisorsTest, Examples) {
    EXPECT_EQ(divisors(3), (std::vector<Gf2Poly>{P("1"), P("x+1"), P("x^2+x+1"), P("x^3+1")}));
    EXPECT_EQ(divisors(2), (std::vector<Gf2Poly>{P("1"), P("x+1"), P("x^2+1")}));
    EXPECT_EQ(divisors(7).size(), 8U);
}

TEST(DivisorsTest, MatchesTrialDivision) {
    for (int n = 1; n <= 12; ++n) {
        std::vector<Gf2Poly> expected;
        const Gf2Poly xn = Gf2Poly::x_pow_minus_one(n);
        for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << (n + 1)); ++bits) {
            const Gf2Poly d = Gf2Poly::from_word(bits);
            if (divides(d, xn)) expected.push_back(d);
        }
        std::sort(expected.begin(), expected.end());
        EXPECT_EQ(divisors(n), expected) << "n=" << n;
    }
}

TEST(AdmissibleEllsTest, AllValidAndComplete) {
    for (int r = 1; r <= 6; ++r)
        for (int s = 1; s <= 6; ++s) {
            const CodeParams p = CodeParams::make(r, s);
            for (const auto& b : divisors(r))
                for (const auto& a : divisors(s)) {
                    const auto ells = admissible_ells(p, b, a);
                    std::size_t valid = 0;
                    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << b.deg()); ++bits) {
                        try {
                            validate({p, b, Gf2Poly::from_word(bits), a});
                            ++valid;
                            EXPECT_NE(std::find(ells.begin(), ells.end(), Gf2Poly::from_word(bits)), ells.end());
                        } catch (const ValidationError&) {
                        }
                    }
                    EXPECT_EQ(ells.size(), valid);
                }
        }
}

TEST(CatalogTest, SmallestLengths) {
    const auto entries = enumerate_codes(1, 1);
    EXPECT_EQ(entries.size(), oracle::shift_closed_subspaces(CodeParams::make(1, 1)).size());
    EXPECT_EQ(entries.size(), 5U);
    const bool has_zero = std::any_of(entries.begin(), entries.end(), [](const auto& e) { return e.k == 0; });
    const bool has_full = std::any_of(entries.begin(), entries.end(), [](const auto& e) { return e.k == 2; });
    EXPECT_TRUE(has_zero && has_full);
}

TEST(CatalogTest, CompleteAgainstSubspaceScan) {
    for (int r = 1; r <= 5; ++r)
        for (int s = 1; r + s <= 6; ++s)
            EXPECT_EQ(catalog_bases(r, s), oracle::shift_closed_subspaces(CodeParams::make(r, s)))
                << "r=" << r << " s=" << s;
}

TEST(CatalogTest, EntriesAgreeWithOracle) {
    for (auto [r, s] : {std::pair{2, 3}, std::pair{3, 3}, std::pair{4, 2}, std::pair{5, 3}}) {
        const auto entries = enumerate_codes(r, s);
        std::vector<std::vector<oracle::PackedWord>> bases;
        for (const auto& e : entries) {
            const DoubleCyclicCode c = validate(e.triple);
            EXPECT_EQ(c.triple(), e.triple);
            EXPECT_EQ(e.k, c.dimension());
            EXPECT_EQ(e.d, oracle::min_distance(c));
            EXPECT_EQ(e.separable, e.triple.ell.is_zero());
            if (e.selfdual) {
                EXPECT_EQ(c.params().n % 2, 0);
                EXPECT_EQ(oracle::enumerate(c), oracle::nullspace_dual(c));
            } else if (c.params().n == 2 * c.dimension()) {
                EXPECT_NE(oracle::enumerate(c), oracle::nullspace_dual(c));
            }
            bases.push_back(oracle::canonical_basis(c.params(), oracle::enumerate(c).words()));
        }
        std::sort(bases.begin(), bases.end());
        EXPECT_EQ(std::adjacent_find(bases.begin(), bases.end()), bases.end()) << "duplicate code";
    }
}

TEST(CatalogTest, TriplesAreUniquePerCode) {
    // Every valid normalized triple gives a distinct code, so the dedupe never fires.
    for (int r = 1; r <= 6; ++r)
        for (int s = 1; s <= 6; ++s) {
            const CodeParams p = CodeParams::make(r, s);
            std::size_t triples = 0;
            for (const auto& b : divisors(r))
                for (const auto& a : divisors(s)) triples += admissible_ells(p, b, a).size();
            EXPECT_EQ(enumerate_codes(r, s).size(), triples) << "r=" << r << " s=" << s;
        }
}

TEST(CatalogTest, SerialAndParallelAgree) {
    CatalogOptions serial;
    serial.parallel = false;
    const auto a = enumerate_codes(4, 6, serial);
    const auto b = enumerate_codes(4, 6);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].triple, b[i].triple);
        EXPECT_EQ(a[i].d, b[i].d);
    }
}

TEST(CatalogTest, DistanceDimensionLimit) {
    CatalogOptions options;
    options.max_distance_dim = 2;
    for (const auto& e : enumerate_codes(3, 3, options))
        if (e.k > 2) EXPECT_EQ(e.d, std::nullopt);
}

TEST(CatalogTest, Caps) {
    EXPECT_THROW(enumerate_codes(9, 1), CapExceededError);
    CatalogOptions options;
    options.max_length = 20;
    EXPECT_THROW(enumerate_codes(20, 5, options), CapExceededError);
    EXPECT_THROW(enumerate_codes(0, 2), ValidationError);
}

}  // namespace
}  // namespace z2dc::catalog
