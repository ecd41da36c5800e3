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

#include <random>

#include "random_codes.hpp"
#include "z2dc/duality.hpp"
#include "z2dc/errors.hpp"
#include "z2dc/oracle.hpp"

namespace z2dc {
namespace {

using testing::random_code;
using testing::random_word;
using testing::Shape;

Gf2Poly P(const char* text) { return parse_poly(text); }

const CodeParams k33 = CodeParams::make(3, 3);

DoubleCyclicCode instance_w() { return validate({k33, P("x+1"), P("1"), P("x^2+x+1")}); }
DoubleCyclicCode separable_33() { return validate({k33, P("x+1"), {}, P("x+1")}); }
DoubleCyclicCode full_33() { return validate({k33, Gf2Poly::one(), {}, Gf2Poly::one()}); }
DoubleCyclicCode zero_33() { return validate({k33, P("x^3+1"), {}, P("x^3+1")}); }

int rand_len(std::mt19937_64& rng, int max) { return 1 + static_cast<int>(rng() % static_cast<unsigned>(max)); }

TEST(CircleProductTest, Examples) {
    EXPECT_TRUE(circle_product(Codeword::parse(k33, "100|111"), Codeword::parse(k33, "111|100"), k33).is_zero());
    EXPECT_TRUE(circle_product(Codeword::parse(k33, "101|011"), Codeword::zero(k33), k33).is_zero());
    EXPECT_EQ(circle_product(Codeword::parse(k33, "100|000"), Codeword::parse(k33, "100|000"), k33), P("x^2"));
}

TEST(CircleProductTest, MixedLengths) {
    // r = 2, s = 3, m = 6: theta_3(x^2) and theta_2(x^3) both appear.
    const CodeParams p = CodeParams::make(2, 3);
    const Codeword u = Codeword::parse(p, "10|000");
    const Codeword v = Codeword::parse(p, "10|000");
    // 1 * (1 + x^2 + x^4) * x^5 * 1 mod x^6 - 1 = x^5 + x + x^3.
    EXPECT_EQ(circle_product(u, v, p), P("x^5+x^3+x"));
}

TEST(CircleProductTest, RejectsWrongLengths) {
    const Codeword u = Codeword::parse(CodeParams::make(2, 3), "10|000");
    EXPECT_THROW(circle_product(u, u, k33), ValidationError);
}

TEST(CircleProductTest, CoefficientsAreShiftedDots) {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 500; ++i) {
        const CodeParams p = CodeParams::make(rand_len(rng, 8), rand_len(rng, 8));
        const Codeword u = random_word(rng, p), v = random_word(rng, p);
        const Gf2Poly c = circle_product(u, v, p);
        for (int k = 0; k < p.m; ++k) EXPECT_EQ(c.coeff((p.m - 1 + k) % p.m), u.dot(shift(v, k)));
    }
}

TEST(CircleProductTest, Bilinear) {
    std::mt19937_64 rng(32);
    for (int i = 0; i < 500; ++i) {
        const CodeParams p = CodeParams::make(rand_len(rng, 8), rand_len(rng, 8));
        const Codeword u1 = random_word(rng, p), u2 = random_word(rng, p), v = random_word(rng, p);
        EXPECT_EQ(circle_product(u1 ^ u2, v, p), circle_product(u1, v, p) + circle_product(u2, v, p));
        EXPECT_EQ(circle_product(v, u1 ^ u2, p), circle_product(v, u1, p) + circle_product(v, u2, p));
    }
}

TEST(CircleProductTest, SingleBlockOrthogonality) {
    // With u' = 0 or v' = 0, u o v = 0 forces u v* = 0 mod x^r - 1 (mirrored for the right block).
    std::mt19937_64 rng(33);
    int hits = 0;
    for (int i = 0; i < 20000 && hits < 200; ++i) {
        const CodeParams p = CodeParams::make(rand_len(rng, 5), rand_len(rng, 5));
        Codeword u = random_word(rng, p), v = random_word(rng, p);
        const bool left_side = rng() & 1U;
        if (left_side) {
            v.right = BitVector(p.s);
        } else {
            v.left = BitVector(p.r);
        }
        if (!circle_product(u, v, p).is_zero()) continue;
        ++hits;
        if (left_side) {
            EXPECT_TRUE((u.left_poly() * reciprocal(v.left_poly()) % Gf2Poly::x_pow_minus_one(p.r)).is_zero());
        } else {
            EXPECT_TRUE((u.right_poly() * reciprocal(v.right_poly()) % Gf2Poly::x_pow_minus_one(p.s)).is_zero());
        }
    }
    EXPECT_GE(hits, 50);
}

TEST(OrthogonalityTest, Examples) {
    EXPECT_TRUE(orthogonal_to_all_shifts(Codeword::parse(k33, "100|111"), Codeword::parse(k33, "111|100"), k33));
    EXPECT_FALSE(orthogonal_to_all_shifts(Codeword::parse(k33, "100|000"), Codeword::parse(k33, "100|000"), k33));
    EXPECT_TRUE(orthogonal_to_all_shifts(Codeword::zero(k33), Codeword::parse(k33, "110|101"), k33));
}

TEST(OrthogonalityTest, AgreesWithDirectCheck) {
    std::mt19937_64 rng(34);
    for (int i = 0; i < 1000; ++i) {
        const CodeParams p = CodeParams::make(rand_len(rng, 8), rand_len(rng, 8));
        const Codeword u = random_word(rng, p), v = random_word(rng, p);
        EXPECT_EQ(orthogonal_to_all_shifts(u, v, p), oracle::orthogonal_to_all_shifts_direct(u, v, p));
    }
}

TEST(DualComponentsTest, InstanceW) {
    const DoubleCyclicCode w = instance_w();
    EXPECT_EQ(dual_bbar(w), P("x^3+1"));
    EXPECT_TRUE(dual_abar(w).is_one());
    EXPECT_TRUE(dual_rho(w).is_one());
    EXPECT_EQ(lambda_modulus(w), P("x+1"));
    EXPECT_TRUE(dual_lambda(w).is_one());
    EXPECT_EQ(right_annihilator_generator(w), P("x+1"));
    EXPECT_TRUE(oracle::nullspace_dual(w).contains(Codeword::parse(k33, "000|110")));
}

TEST(DualComponentsTest, SeparableAndFull) {
    EXPECT_EQ(dual_bbar(separable_33()), P("x^2+x+1"));
    EXPECT_EQ(dual_abar(separable_33()), P("x^2+x+1"));
    EXPECT_EQ(dual_bbar(full_33()), P("x^3+1"));
    EXPECT_EQ(dual_abar(full_33()), P("x^3+1"));
    EXPECT_EQ(right_annihilator_generator(full_33()), P("x^3+1"));
    const DoubleCyclicCode right_absent = validate({k33, P("x+1"), {}, P("x^3+1")});
    EXPECT_TRUE(right_annihilator_generator(right_absent).is_one());
}

TEST(DualLambdaTest, RejectsSeparable) {
    try {
        dual_lambda(separable_33());
        FAIL();
    } catch (const ValidationError& e) {
        EXPECT_EQ(e.kind(), ValidationKind::InvalidArgument);
    }
}

TEST(DualLambdaTest, KappaOneForcesLambdaOne) {
    std::mt19937_64 rng(35);
    int seen = 0;
    for (int i = 0; i < 2000; ++i) {
        const DoubleCyclicCode c = random_code(rng, rand_len(rng, 10), rand_len(rng, 10), Shape::kNonSeparable);
        if (c.ell().is_zero() || c.kappa() != 1) continue;
        EXPECT_TRUE(dual_lambda(c).is_one());
        ++seen;
    }
    EXPECT_GT(seen, 20);
}

TEST(DualTripleTest, InstanceW) {
    const DualTriple d = dual_triple(instance_w());
    EXPECT_EQ(d.bbar, P("x^3+1"));
    EXPECT_EQ(d.ellbar, P("x^2+x+1"));
    EXPECT_TRUE(d.abar.is_one());
    const DoubleCyclicCode dc = dual_code(instance_w());
    EXPECT_EQ(dc.dimension(), 3);
    EXPECT_EQ(oracle::enumerate(dc), oracle::nullspace_dual(instance_w()));
}

TEST(DualTripleTest, SeparableDualIsSeparable) {
    const DualTriple d = dual_triple(separable_33());
    EXPECT_EQ(d.bbar, P("x^2+x+1"));
    EXPECT_TRUE(d.ellbar.is_zero());
    EXPECT_EQ(d.abar, P("x^2+x+1"));
    EXPECT_EQ(oracle::enumerate(dual_code(separable_33())), oracle::nullspace_dual(separable_33()));
}

TEST(DualTripleTest, ZeroAndFull) {
    const DoubleCyclicCode dz = dual_code(zero_33());
    EXPECT_EQ(dz.dimension(), 6);
    const DoubleCyclicCode df = dual_code(full_33());
    EXPECT_EQ(df.dimension(), 0);
}

class DualPropertyTest : public ::testing::TestWithParam<Shape> {};

TEST_P(DualPropertyTest, ClosedFormEqualsNullspace) {
    std::mt19937_64 rng(36 + static_cast<int>(GetParam()));
    for (int i = 0; i < 200; ++i) {
        const int r = rand_len(rng, 10), s = rand_len(rng, 10);
        if (GetParam() == Shape::kNonSeparable && !testing::admits_non_separable(r, s)) continue;
        const DoubleCyclicCode c = random_code(rng, r, s, GetParam());
        const DualTriple d = dual_triple(c);
        const DoubleCyclicCode dc = validate(d.as_triple(c.params()));
        EXPECT_EQ(dc.triple(), d.as_triple(c.params())) << "dual triple should already be normalized";
        EXPECT_EQ(oracle::enumerate(dc), oracle::nullspace_dual(c)) << c.b() << " | " << c.ell() << " | " << c.a();
        EXPECT_EQ(dc.dimension(), c.params().n - c.dimension());
        const Gf2Poly g = gcd(c.b(), c.ell());
        EXPECT_EQ(d.bbar.deg(), c.params().r - g.deg());
        EXPECT_EQ(d.abar.deg(), c.params().s - c.a().deg() - c.b().deg() + g.deg());
        if (!is_separable(c)) {
            EXPECT_TRUE(lambda_condition_holds(c, d.lambda));
            EXPECT_LT(d.lambda.degree().value_or(-1), c.kappa());
        }
        EXPECT_TRUE(oracle::codes_equal(dual_code(dc), c));
    }
}

INSTANTIATE_TEST_SUITE_P(Shapes, DualPropertyTest,
                         ::testing::Values(Shape::kSeparable, Shape::kNonSeparable, Shape::kAny));

}  // namespace
}  // namespace z2dc
