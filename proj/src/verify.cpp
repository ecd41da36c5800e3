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

#include "z2dc/verify.hpp"

#include <algorithm>
#include <functional>

#include "z2dc/duality.hpp"
#include "z2dc/errors.hpp"
#include "z2dc/linalg.hpp"
#include "z2dc/oracle.hpp"

namespace z2dc {

namespace {

constexpr int kVerifyCap = 22;

// Entry of the permuted matrix at (row, col).
bool at(const BinaryMatrix& m, int row, int col) { return m.rows[static_cast<std::size_t>(row)].get(col); }

bool is_identity(const BinaryMatrix& m, int row0, int col0, int size) {
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j)
            if (at(m, row0 + i, col0 + j) != (i == j)) return false;
    return true;
}

bool is_zero_block(const BinaryMatrix& m, int row0, int rows, int col0, int cols) {
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (at(m, row0 + i, col0 + j)) return false;
    return true;
}

std::string yes_no(bool ok, const std::string& detail_if_bad) { return ok ? std::string() : detail_if_bad; }

}  // namespace

bool standard_form_matches_template(const StandardForm& form) {
    const BinaryMatrix& m = form.matrix;
    const int k1 = form.left_identity, kappa = form.kappa, k3 = form.right_identity;
    const int r = m.r, s = m.s;
    if (static_cast<int>(m.rows.size()) != k1 + kappa + k3) return false;
    if (k1 + kappa > r || kappa + k3 > s) return false;
    std::vector<int> sorted = m.column_permutation;
    std::sort(sorted.begin(), sorted.end());
    for (int j = 0; j < r + s; ++j)
        if (sorted[static_cast<std::size_t>(j)] != j) return false;
    for (int j = 0; j < r; ++j)
        if (m.column_permutation[static_cast<std::size_t>(j)] >= r) return false;

    const int right0 = r;
    const int c1 = s - kappa - k3;  // width of C1/C2
    // Row block 1: I | A1 A2 | 0.
    if (!is_identity(m, 0, 0, k1) || !is_zero_block(m, 0, k1, right0, s)) return false;
    // Row block 2: 0 | Bk B | C1 I 0.
    if (!is_zero_block(m, k1, kappa, 0, k1) || !is_identity(m, k1, right0 + c1, kappa) ||
        !is_zero_block(m, k1, kappa, right0 + c1 + kappa, k3))
        return false;
    std::vector<BitVector> bk;
    for (int i = 0; i < kappa; ++i) bk.push_back(m.rows[static_cast<std::size_t>(k1 + i)].slice(k1, kappa));
    if (rank(bk, kappa) != kappa) return false;
    // Row block 3: 0 | C2 R I.
    return is_zero_block(m, k1 + kappa, k3, 0, r) && is_identity(m, k1 + kappa, right0 + c1 + kappa, k3);
}

std::vector<PropertyResult> verify_instance(const DoubleCyclicCode& code, const VerifyOptions& options) {
    const CodeParams& p = code.params();
    if (p.n > kVerifyCap)
        throw CapExceededError("verify limited to n <= " + std::to_string(kVerifyCap) + " (got " +
                               std::to_string(p.n) + ")");

    std::vector<PropertyResult> out;
    auto check = [&out](const std::string& name, const std::function<std::string()>& body) {
        try {
            const std::string problem = body();
            out.push_back({name, problem.empty(), problem});
        } catch (const std::exception& e) {
            out.push_back({name, false, e.what()});
        }
    };

    const oracle::CodewordSet words = oracle::enumerate(code);
    const oracle::CodewordSet dual_words = oracle::nullspace_dual(code);
    const Gf2Poly g = gcd(code.b(), code.ell());

    DualTriple dual = dual_triple(code);
    if (options.corrupt_dual) {
        dual.ellbar += Gf2Poly::one();
        const Gf2Poly xs = Gf2Poly::x_pow_minus_one(p.s);
        dual.abar = dual.abar == xs ? Gf2Poly::one() : xs;
    }

    check("shift-closure", [&] { return yes_no(oracle::verify_double_cyclic(words), "C is not shift-closed"); });
    check("dimension", [&] {
        return yes_no(words.size() == SubcodeCardinalities::count(code.dimension()),
                      "|C| = " + std::to_string(words.size()));
    });
    check("spanning-set", [&] {
        const std::vector<Codeword> gens{Codeword::from_polys(p, code.b(), {}),
                                         Codeword::from_polys(p, code.ell(), code.a())};
        const auto closure = oracle::module_closure_basis(p, gens);
        std::vector<oracle::PackedWord> rows;
        for (const auto& w : spanning_set(code)) rows.push_back(oracle::pack(w));
        return yes_no(oracle::canonical_basis(p, rows) == closure &&
                          static_cast<int>(rows.size()) == code.dimension(),
                      "span of S1 u S2 differs from the generated module");
    });
    check("standard-form", [&] {
        const StandardForm form = standard_form(code);
        std::vector<oracle::PackedWord> rows;
        for (const auto& row : form.matrix.rows) {
            BitVector original(p.n);
            for (int j = 0; j < p.n; ++j)
                if (row.get(j)) original.flip(form.matrix.column_permutation[static_cast<std::size_t>(j)]);
            rows.push_back(oracle::pack(Codeword::split(p, original)));
        }
        return yes_no(standard_form_matches_template(form) &&
                          oracle::canonical_basis(p, rows) == oracle::canonical_basis(p, words.words()),
                      "block template or row space mismatch");
    });
    check("projections", [&] {
        return yes_no(oracle::project_left(words) == oracle::cyclic_code(p.r, project_left(code)) &&
                          oracle::project_right(words) == oracle::cyclic_code(p.s, project_right(code)),
                      "projections differ from <gcd(b,ell)> / <a>");
    });
    check("cardinalities", [&] {
        const SubcodeCardinalities c = subcode_cardinalities(code);
        const auto left = oracle::project_left(words);
        const auto right = oracle::project_right(words);
        const bool ok = left.size() == SubcodeCardinalities::count(c.left) &&
                        right.size() == SubcodeCardinalities::count(c.right) &&
                        oracle::orthogonal_complement_size(p.r, left) == SubcodeCardinalities::count(c.left_dual) &&
                        oracle::orthogonal_complement_size(p.s, right) == SubcodeCardinalities::count(c.right_dual) &&
                        oracle::project_left(dual_words).size() == SubcodeCardinalities::count(c.dual_left) &&
                        oracle::project_right(dual_words).size() == SubcodeCardinalities::count(c.dual_right);
        return yes_no(ok, "a subcode cardinality disagrees with the oracle");
    });
    check("dual-shift-closure",
          [&] { return yes_no(oracle::verify_double_cyclic(dual_words), "nullspace dual is not shift-closed"); });
    check("size-product", [&] {
        return yes_no(words.size() * dual_words.size() == SubcodeCardinalities::count(p.n), "|C||C^perp| != 2^n");
    });
    check("dual-formula", [&] {
        const DoubleCyclicCode d = validate(dual.as_triple(p));
        return yes_no(oracle::enumerate(d) == dual_words, "closed-form dual differs from the nullspace dual");
    });
    check("degree-corollaries", [&] {
        const bool ok = dual.bbar.deg() == p.r - g.deg() &&
                        dual.abar.deg() == p.s - code.a().deg() - code.b().deg() + g.deg();
        return yes_no(ok, "deg bbar = " + std::to_string(dual.bbar.deg()) +
                              ", deg abar = " + std::to_string(dual.abar.deg()));
    });
    check("lambda-condition", [&] {
        if (is_separable(code)) return std::string();
        const Gf2Poly lambda = dual_lambda(code);
        return yes_no(lambda_condition_holds(code, lambda) && lambda.deg() < code.kappa(),
                      "lambda = " + to_string(lambda));
    });
    check("right-annihilator", [&] {
        return yes_no(oracle::zero_left_rights(dual_words) ==
                          oracle::cyclic_code(p.s, right_annihilator_generator(code)),
                      "{(0|p) in C^perp} differs from <(x^s-1)/a*>");
    });
    check("biduality", [&] {
        const DoubleCyclicCode d = validate(dual.as_triple(p));
        return yes_no(oracle::codes_equal(dual_code(d), code), "dual of the dual differs from C");
    });
    return out;
}

}  // namespace z2dc
