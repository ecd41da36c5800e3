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

#include "z2dc/code.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "z2dc/errors.hpp"
#include "z2dc/linalg.hpp"

namespace z2dc {

CodeParams CodeParams::make(int r, int s) {
    if (r < 1 || s < 1)
        throw ValidationError(ValidationKind::UnsupportedDegenerateLength,
                              "block lengths must satisfy r >= 1 and s >= 1 (got r=" + std::to_string(r) +
                                  ", s=" + std::to_string(s) + "); r = 0 or s = 0 is a plain cyclic code");
    return {r, s, r + s, std::lcm(r, s)};
}

Codeword Codeword::zero(const CodeParams& params) { return {BitVector(params.r), BitVector(params.s)}; }

Codeword Codeword::from_polys(const CodeParams& params, const Gf2Poly& p, const Gf2Poly& q) {
    return {BitVector::from_poly(p, params.r), BitVector::from_poly(q, params.s)};
}

Codeword Codeword::parse(const CodeParams& params, std::string_view text) {
    const auto bar = text.find('|');
    if (bar == std::string_view::npos)
        throw ValidationError(ValidationKind::ParameterMismatch, "codeword must look like `left|right`");
    Codeword w{BitVector::from_string(text.substr(0, bar)), BitVector::from_string(text.substr(bar + 1))};
    if (w.left.size() != params.r || w.right.size() != params.s)
        throw ValidationError(ValidationKind::ParameterMismatch,
                              "codeword `" + std::string(text) + "` does not have lengths r=" +
                                  std::to_string(params.r) + ", s=" + std::to_string(params.s));
    return w;
}

Codeword Codeword::split(const CodeParams& params, const BitVector& full) {
    if (full.size() != params.n) throw ValidationError(ValidationKind::ParameterMismatch, "vector length != n");
    return {full.slice(0, params.r), full.slice(params.r, params.s)};
}

Codeword& Codeword::operator^=(const Codeword& rhs) {
    left ^= rhs.left;
    right ^= rhs.right;
    return *this;
}

GeneratorTriple normalize(const GeneratorTriple& triple) {
    if (triple.b.is_zero())
        throw ValidationError(ValidationKind::NotADivisorLeft, "b is zero; write an absent generator as x^r-1");
    GeneratorTriple out = triple;
    out.ell = triple.ell % triple.b;
    return out;
}

DoubleCyclicCode validate(const GeneratorTriple& triple) {
    const CodeParams params = CodeParams::make(triple.params.r, triple.params.s);
    const Gf2Poly xr = Gf2Poly::x_pow_minus_one(params.r);
    const Gf2Poly xs = Gf2Poly::x_pow_minus_one(params.s);

    if (triple.b.is_zero() || !divides(triple.b, xr))
        throw ValidationError(ValidationKind::NotADivisorLeft,
                              "b = " + to_string(triple.b) + " does not divide " + to_string(xr));
    if (triple.a.is_zero() || !divides(triple.a, xs))
        throw ValidationError(ValidationKind::NotADivisorRight,
                              "a = " + to_string(triple.a) + " does not divide " + to_string(xs));

    GeneratorTriple normalized = normalize(triple);
    normalized.params = params;
    // ell and ell mod b give the same remainder below since b | x^r - 1 is already known.
    const Gf2Poly remainder = ((xs / normalized.a) * normalized.ell) % normalized.b;
    if (!remainder.is_zero())
        throw ValidationError(ValidationKind::CompatibilityViolation,
                              "b = " + to_string(normalized.b) + " does not divide ((x^s-1)/a)*ell; remainder " +
                                  to_string(remainder),
                              to_string(remainder));

    const int deg_b = normalized.b.deg();
    const int kappa = deg_b - gcd(normalized.b, normalized.ell).deg();
    const int dimension = params.r + params.s - deg_b - normalized.a.deg();
    return DoubleCyclicCode(std::move(normalized), kappa, dimension);
}

Codeword shift(const Codeword& w, long long i) { return {w.left.rotated(i), w.right.rotated(i)}; }

std::vector<Codeword> spanning_set(const DoubleCyclicCode& code) {
    const CodeParams& p = code.params();
    std::vector<Codeword> rows;
    const int left_count = p.r - code.b().deg();
    const int right_count = p.s - code.a().deg();
    rows.reserve(static_cast<std::size_t>(left_count + right_count));
    const Codeword left_gen = Codeword::from_polys(p, code.b(), {});
    for (int i = 0; i < left_count; ++i) rows.push_back(shift(left_gen, i));
    const Codeword right_gen = Codeword::from_polys(p, code.ell(), code.a());
    for (int i = 0; i < right_count; ++i) rows.push_back(shift(right_gen, i));
    std::erase_if(rows, [](const Codeword& w) { return w.is_zero(); });
    return rows;
}

int BinaryMatrix::rank() const { return z2dc::rank(rows, width()); }

std::string BinaryMatrix::to_string() const {
    std::string out;
    for (const auto& row : rows) {
        const std::string bits = row.to_string();
        out += bits.substr(0, static_cast<std::size_t>(r)) + "|" + bits.substr(static_cast<std::size_t>(r)) + "\n";
    }
    return out;
}

BinaryMatrix generator_matrix(const DoubleCyclicCode& code) {
    BinaryMatrix g{code.params().r, code.params().s, {}, {}};
    g.column_permutation.resize(static_cast<std::size_t>(g.width()));
    std::iota(g.column_permutation.begin(), g.column_permutation.end(), 0);
    for (const auto& w : spanning_set(code)) g.rows.push_back(w.concatenated());
    return g;
}

namespace {

// Gauss-Jordan on rows[first, last) using only the candidate columns, scanned in order.
// Pivot rows end up at first, first+1, ... with pivot columns returned in the same order;
// the remaining rows of the range are zero on every candidate column.
std::vector<int> reduce_block(std::vector<BitVector>& rows, std::size_t first, std::size_t last,
                              const std::vector<int>& columns) {
    std::vector<int> pivots;
    std::size_t next = first;
    for (int col : columns) {
        if (next == last) break;
        std::size_t found = next;
        while (found < last && !rows[found].get(col)) ++found;
        if (found == last) continue;
        std::swap(rows[next], rows[found]);
        for (std::size_t i = first; i < last; ++i)
            if (i != next && rows[i].get(col)) rows[i] ^= rows[next];
        pivots.push_back(col);
        ++next;
    }
    return pivots;
}

// Clears the pivot columns of rows[first, last) using the pivot rows starting at `pivot_row`.
void clear_columns(std::vector<BitVector>& rows, std::size_t first, std::size_t last, std::size_t pivot_row,
                   const std::vector<int>& pivots) {
    for (std::size_t i = first; i < last; ++i)
        for (std::size_t k = 0; k < pivots.size(); ++k)
            if (rows[i].get(pivots[k])) rows[i] ^= rows[pivot_row + k];
}

std::vector<int> complement(int begin, int end, const std::vector<int>& taken) {
    std::vector<int> out;
    for (int c = begin; c < end; ++c)
        if (std::find(taken.begin(), taken.end(), c) == taken.end()) out.push_back(c);
    return out;
}

}  // namespace

StandardForm standard_form(const DoubleCyclicCode& code) {
    const CodeParams& p = code.params();
    const int k1 = p.r - code.b().deg();
    const int k2 = p.s - code.a().deg();
    const int kappa = code.kappa();

    std::vector<BitVector> rows;
    for (const auto& w : spanning_set(code)) rows.push_back(w.concatenated());
    if (static_cast<int>(rows.size()) != k1 + k2)
        throw InternalInconsistency("standard_form: spanning set has the wrong size");
    const auto top = static_cast<std::size_t>(k1);
    const auto mid = static_cast<std::size_t>(k1 + kappa);
    const auto end = static_cast<std::size_t>(k1 + k2);

    std::vector<int> left_cols(static_cast<std::size_t>(p.r));
    std::iota(left_cols.begin(), left_cols.end(), 0);
    std::vector<int> right_cols(static_cast<std::size_t>(p.s));
    std::iota(right_cols.begin(), right_cols.end(), p.r);

    // Shifts of (b|0): identity on the left block.
    const std::vector<int> p1 = reduce_block(rows, 0, top, left_cols);
    if (static_cast<int>(p1.size()) != k1) throw InternalInconsistency("standard_form: shifts of b are dependent");
    clear_columns(rows, top, end, 0, p1);

    // Shifts of (ell|a): kappa of them keep a left part, the rest become (0 | *).
    const std::vector<int> p2 = reduce_block(rows, top, end, complement(0, p.r, p1));
    if (static_cast<int>(p2.size()) != kappa)
        throw InternalInconsistency("standard_form: left rank of the (ell|a) rows is not kappa");

    const std::vector<int> p3 = reduce_block(rows, mid, end, right_cols);
    if (static_cast<int>(p3.size()) != k2 - kappa)
        throw InternalInconsistency("standard_form: pure-right rows are dependent");
    clear_columns(rows, top, mid, mid, p3);

    const std::vector<int> p4 = reduce_block(rows, top, mid, complement(p.r, p.n, p3));
    if (static_cast<int>(p4.size()) != kappa)
        throw InternalInconsistency("standard_form: right rank of the middle rows is not kappa");

    std::vector<int> perm = p1;
    perm.insert(perm.end(), p2.begin(), p2.end());
    std::vector<int> taken = perm;
    for (int c : complement(0, p.r, taken)) perm.push_back(c);
    std::vector<int> right_taken = p4;
    right_taken.insert(right_taken.end(), p3.begin(), p3.end());
    for (int c : complement(p.r, p.n, right_taken)) perm.push_back(c);
    perm.insert(perm.end(), p4.begin(), p4.end());
    perm.insert(perm.end(), p3.begin(), p3.end());

    StandardForm out;
    out.left_identity = k1;
    out.kappa = kappa;
    out.right_identity = k2 - kappa;
    out.matrix = BinaryMatrix{p.r, p.s, {}, perm};
    for (const auto& row : rows) {
        BitVector permuted(p.n);
        for (int j = 0; j < p.n; ++j)
            if (row.get(perm[static_cast<std::size_t>(j)])) permuted.flip(j);
        out.matrix.rows.push_back(std::move(permuted));
    }
    if (out.matrix.rank() != code.dimension())
        throw InternalInconsistency("standard_form: rank differs from the dimension formula");
    return out;
}

Gf2Poly project_left(const DoubleCyclicCode& code) { return gcd(code.b(), code.ell()); }

Gf2Poly project_right(const DoubleCyclicCode& code) { return code.a(); }

bool is_separable(const DoubleCyclicCode& code) { return code.ell().is_zero(); }

Codeword encode(const DoubleCyclicCode& code, const BitVector& message) {
    if (message.size() != code.dimension())
        throw ValidationError(ValidationKind::InvalidArgument,
                              "message has length " + std::to_string(message.size()) + ", expected dimension " +
                                  std::to_string(code.dimension()));
    const auto rows = spanning_set(code);
    Codeword out = Codeword::zero(code.params());
    for (int i = 0; i < message.size(); ++i)
        if (message.get(i)) out ^= rows[static_cast<std::size_t>(i)];
    return out;
}

std::uint64_t SubcodeCardinalities::count(int exponent) {
    if (exponent < 0 || exponent >= 64) throw CapExceededError("2^" + std::to_string(exponent) + " overflows 64 bits");
    return std::uint64_t{1} << exponent;
}

SubcodeCardinalities subcode_cardinalities(const DoubleCyclicCode& code) {
    const CodeParams& p = code.params();
    const int deg_b = code.b().deg();
    const int deg_a = code.a().deg();
    const int kappa = code.kappa();
    return {p.r - deg_b + kappa, p.s - deg_a, deg_b - kappa, deg_a, deg_b, deg_a + kappa};
}

}  // namespace z2dc
