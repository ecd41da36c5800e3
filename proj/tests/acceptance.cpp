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

// Acceptance runner: one PASS/FAIL line per criterion, exit status 0 iff all pass.
// Every check compares the library's closed forms against the brute-force oracle.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "random_codes.hpp"
#include "z2dc/catalog.hpp"
#include "z2dc/duality.hpp"
#include "z2dc/errors.hpp"
#include "z2dc/oracle.hpp"

namespace {

using namespace z2dc;
using testing::Shape;

constexpr std::uint64_t kSeed = 20260415;
constexpr int kPerShape = 200;
constexpr int kPairs = 2400;

struct Outcome {
    bool passed = true;
    std::string detail;
};

// Collects the first failure message; later ones only bump the count.
class Checker {
   public:
    void expect(bool ok, const std::function<std::string()>& message) {
        ++checks_;
        if (ok) return;
        if (failures_++ == 0) first_ = message();
    }
    int checks() const { return checks_; }
    Outcome outcome(const std::string& summary) const {
        if (failures_ == 0) return {true, summary};
        return {false, std::to_string(failures_) + " of " + std::to_string(checks_) + " checks failed; first: " + first_};
    }

   private:
    int checks_ = 0;
    int failures_ = 0;
    std::string first_;
};

std::string describe(const DoubleCyclicCode& c) {
    std::ostringstream os;
    os << "(r=" << c.params().r << ", s=" << c.params().s << ", b=" << c.b() << ", ell=" << c.ell() << ", a=" << c.a()
       << ")";
    return os.str();
}

std::vector<DoubleCyclicCode> build_pool() {
    std::mt19937_64 rng(kSeed);
    std::vector<DoubleCyclicCode> pool;
    auto draw = [&rng] { return 1 + static_cast<int>(rng() % 10); };
    for (int i = 0; i < kPerShape; ++i) pool.push_back(testing::random_code(rng, draw(), draw(), Shape::kSeparable));
    for (int i = 0; i < kPerShape;) {
        const int r = draw(), s = draw();
        if (!testing::admits_non_separable(r, s)) continue;
        pool.push_back(testing::random_code(rng, r, s, Shape::kNonSeparable));
        ++i;
    }
    for (int i = 0; i < kPerShape; ++i) pool.push_back(testing::random_code(rng, draw(), draw()));
    return pool;
}

Outcome ac1_catalog_completeness() {
    Checker check;
    int codes = 0;
    for (int r = 1; r <= 5; ++r)
        for (int s = 1; r + s <= 6; ++s) {
            const CodeParams p = CodeParams::make(r, s);
            std::vector<std::vector<oracle::PackedWord>> bases;
            for (const auto& e : catalog::enumerate_codes(r, s)) {
                std::vector<oracle::PackedWord> rows;
                for (const auto& w : spanning_set(validate(e.triple))) rows.push_back(oracle::pack(w));
                bases.push_back(oracle::canonical_basis(p, rows));
            }
            std::sort(bases.begin(), bases.end());
            const auto scan = oracle::shift_closed_subspaces(p);
            codes += static_cast<int>(scan.size());
            check.expect(bases == scan, [&] {
                return "(r,s)=(" + std::to_string(r) + "," + std::to_string(s) + "): catalog " +
                       std::to_string(bases.size()) + " codes vs scan " + std::to_string(scan.size());
            });
        }
    return check.outcome(std::to_string(check.checks()) + " length pairs, " + std::to_string(codes) +
                         " shift-closed subspaces matched");
}

Outcome ac2_dimension(const std::vector<DoubleCyclicCode>& pool) {
    Checker check;
    for (const auto& c : pool) {
        const std::uint64_t expected = std::uint64_t{1} << (c.params().n - c.b().deg() - c.a().deg());
        const auto words = oracle::enumerate(c);
        // Independent of the spanning set: close the two generators under shifts.
        const auto closure = oracle::module_closure_basis(
            c.params(), {Codeword::from_polys(c.params(), c.b(), {}), Codeword::from_polys(c.params(), c.ell(), c.a())});
        check.expect(words.size() == expected && (std::uint64_t{1} << closure.size()) == expected,
                     [&] { return describe(c) + ": |C| = " + std::to_string(words.size()); });
    }
    return check.outcome(std::to_string(pool.size()) + " instances");
}

Outcome ac3_dual_formula(const std::vector<DoubleCyclicCode>& pool) {
    Checker check;
    int separable = 0, non_separable = 0;
    for (const auto& c : pool) {
        (is_separable(c) ? separable : non_separable)++;
        try {
            const DoubleCyclicCode d = validate(dual_triple(c).as_triple(c.params()));
            check.expect(oracle::enumerate(d) == oracle::nullspace_dual(c),
                         [&] { return describe(c) + ": closed-form dual differs from nullspace"; });
        } catch (const Error& e) {
            check.expect(false, [&] { return describe(c) + ": " + e.what(); });
        }
    }
    check.expect(separable >= 100 && non_separable >= 100, [&] {
        return "coverage: " + std::to_string(separable) + " separable, " + std::to_string(non_separable) +
               " non-separable";
    });
    return check.outcome(std::to_string(pool.size()) + " instances (" + std::to_string(separable) + " separable, " +
                         std::to_string(non_separable) + " non-separable)");
}

Outcome ac4_degrees(const std::vector<DoubleCyclicCode>& pool) {
    Checker check;
    for (const auto& c : pool) {
        const DualTriple d = dual_triple(c);
        const int g = gcd(c.b(), c.ell()).deg();
        check.expect(d.bbar.deg() == c.params().r - g && d.abar.deg() == c.params().s - c.a().deg() - c.b().deg() + g,
                     [&] { return describe(c); });
    }
    return check.outcome(std::to_string(pool.size()) + " instances");
}

Outcome ac5_cardinalities(const std::vector<DoubleCyclicCode>& pool) {
    Checker check;
    int used = 0;
    for (const auto& c : pool) {
        const CodeParams& p = c.params();
        if (p.r > 8 || p.s > 8) continue;
        ++used;
        const SubcodeCardinalities e = subcode_cardinalities(c);
        const auto words = oracle::enumerate(c);
        const auto dual = oracle::nullspace_dual(c);
        const auto left = oracle::project_left(words);
        const auto right = oracle::project_right(words);
        const std::uint64_t got[6] = {left.size(),
                                      right.size(),
                                      oracle::orthogonal_complement_size(p.r, left),
                                      oracle::orthogonal_complement_size(p.s, right),
                                      oracle::project_left(dual).size(),
                                      oracle::project_right(dual).size()};
        const int want[6] = {e.left, e.right, e.left_dual, e.right_dual, e.dual_left, e.dual_right};
        bool ok = true;
        for (int i = 0; i < 6; ++i) ok = ok && got[i] == (std::uint64_t{1} << want[i]);
        check.expect(ok, [&] { return describe(c); });
    }
    return check.outcome(std::to_string(used) + " instances with r,s <= 8");
}

Outcome ac6_circle_orthogonality() {
    Checker check;
    std::mt19937_64 rng(kSeed + 6);
    int orthogonal = 0;
    for (int i = 0; i < kPairs; ++i) {
        const CodeParams p = CodeParams::make(1 + static_cast<int>(rng() % 8), 1 + static_cast<int>(rng() % 8));
        const Codeword v = testing::random_word(rng, p);
        Codeword u = testing::random_word(rng, p);
        if (i % 2 == 1) {
            // Draw u from the dual of the module generated by v, so that u is orthogonal to every shift.
            const auto basis = oracle::module_closure_basis(p, {v});
            std::vector<Codeword> rows;
            for (auto w : basis) rows.push_back(oracle::unpack(p, w));
            const auto dual = oracle::nullspace_dual(oracle::span(p, rows));
            u = oracle::unpack(p, dual.words()[rng() % dual.size()]);
        }
        const bool direct = oracle::orthogonal_to_all_shifts_direct(u, v, p);
        orthogonal += direct ? 1 : 0;
        check.expect(circle_product(u, v, p).is_zero() == direct,
                     [&] { return "u=" + u.to_string() + " v=" + v.to_string(); });
    }
    return check.outcome(std::to_string(kPairs) + " pairs, " + std::to_string(orthogonal) + " orthogonal");
}

Outcome ac7_lambda(const std::vector<DoubleCyclicCode>& pool) {
    Checker check;
    int used = 0;
    for (const auto& c : pool) {
        if (is_separable(c)) continue;
        ++used;
        try {
            const Gf2Poly lambda = dual_lambda(c);
            check.expect(lambda_condition_holds(c, lambda) && lambda.degree().value_or(-1) < c.kappa(),
                         [&] { return describe(c) + ": lambda = " + to_string(lambda); });
        } catch (const std::exception& e) {
            check.expect(false, [&] { return describe(c) + ": " + e.what(); });
        }
    }
    return check.outcome(std::to_string(used) + " non-separable instances");
}

Outcome ac8_shift_closure(const std::vector<DoubleCyclicCode>& pool) {
    Checker check;
    for (const auto& c : pool)
        check.expect(oracle::verify_double_cyclic(oracle::enumerate(c)) &&
                         oracle::verify_double_cyclic(oracle::nullspace_dual(c)),
                     [&] { return describe(c); });
    return check.outcome(std::to_string(pool.size()) + " codes and their duals");
}

Outcome ac9_theta() {
    Checker check;
    for (int n = 1; n <= 16; ++n)
        for (int m = 1; m <= 16; ++m)
            check.expect(Gf2Poly::x_pow_minus_one(n) * theta(m).compose_power(n) == Gf2Poly::x_pow_minus_one(n * m),
                         [&] { return "n=" + std::to_string(n) + " m=" + std::to_string(m); });
    return check.outcome("256 (n, m) pairs");
}

Outcome ac10_instance_w() {
    Checker check;
    const CodeParams p = CodeParams::make(3, 3);
    const DoubleCyclicCode w = validate({p, parse_poly("x+1"), parse_poly("1"), parse_poly("x^2+x+1")});
    const auto words = oracle::enumerate(w);
    // Oracle values: k from |C|, kappa from |C_r| = 2^{r - deg b + kappa}, d by exhaustive scan.
    int k = 0;
    while ((std::uint64_t{1} << k) < words.size()) ++k;
    int left_log = 0;
    while ((std::uint64_t{1} << left_log) < oracle::project_left(words).size()) ++left_log;
    const int kappa = left_log - p.r + w.b().deg();
    check.expect(k == 3 && w.dimension() == 3, [&] { return "k = " + std::to_string(k); });
    check.expect(kappa == 1 && w.kappa() == 1, [&] { return "kappa = " + std::to_string(kappa); });
    check.expect(oracle::min_distance(words) == 2, [] { return std::string("d != 2"); });
    const GeneratorTriple expected{p, parse_poly("x^3+1"), parse_poly("x^2+x+1"), parse_poly("1")};
    check.expect(oracle::enumerate(validate(expected)) == oracle::nullspace_dual(w),
                 [] { return std::string("(x^3+1, x^2+x+1, 1) does not generate the nullspace dual"); });
    check.expect(dual_triple(w).as_triple(p) == expected, [] { return std::string("dual_triple differs"); });
    return check.outcome("k=3, kappa=1, d=2, dual=(x^3+1, x^2+x+1, 1)");
}

Outcome ac11_projections(const std::vector<DoubleCyclicCode>& pool) {
    Checker check;
    for (const auto& c : pool) {
        const auto words = oracle::enumerate(c);
        check.expect(oracle::project_left(words) == oracle::cyclic_code(c.params().r, project_left(c)) &&
                         oracle::project_right(words) == oracle::cyclic_code(c.params().s, project_right(c)),
                     [&] { return describe(c); });
    }
    return check.outcome(std::to_string(pool.size()) + " instances");
}

Outcome ac12_right_annihilator(const std::vector<DoubleCyclicCode>& pool) {
    Checker check;
    for (const auto& c : pool)
        check.expect(oracle::zero_left_rights(oracle::nullspace_dual(c)) ==
                         oracle::cyclic_code(c.params().s, right_annihilator_generator(c)),
                     [&] { return describe(c); });
    return check.outcome(std::to_string(pool.size()) + " instances");
}

}  // namespace

int main() {
    using Clock = std::chrono::steady_clock;
    const auto pool = build_pool();
    struct Criterion {
        const char* id;
        const char* title;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {"AC1", "catalog equals shift-closed subspace scan, r+s <= 6", ac1_catalog_completeness},
        {"AC2", "dimension formula", [&] { return ac2_dimension(pool); }},
        {"AC3", "closed-form dual equals nullspace dual", [&] { return ac3_dual_formula(pool); }},
        {"AC4", "degree corollaries", [&] { return ac4_degrees(pool); }},
        {"AC5", "subcode cardinalities", [&] { return ac5_cardinalities(pool); }},
        {"AC6", "circle product zero iff orthogonal to all shifts", ac6_circle_orthogonality},
        {"AC7", "lambda congruence and degree bound", [&] { return ac7_lambda(pool); }},
        {"AC8", "shift closure of C and its dual", [&] { return ac8_shift_closure(pool); }},
        {"AC9", "theta identity, n, m <= 16", ac9_theta},
        {"AC10", "worked instance r=s=3, b=x+1, ell=1, a=x^2+x+1", ac10_instance_w},
        {"AC11", "projection generators", [&] { return ac11_projections(pool); }},
        {"AC12", "right annihilator generator", [&] { return ac12_right_annihilator(pool); }},
    };

    bool all = true;
    for (const auto& c : criteria) {
        const auto start = Clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(Clock::now() - start).count();
        all = all && o.passed;
        std::cout << (o.passed ? "[PASS] " : "[FAIL] ") << c.id << " " << c.title << ": " << o.detail << " ("
                  << std::fixed << std::setprecision(2) << secs << " s)" << std::endl;
    }
    return all ? 0 : 1;
}
