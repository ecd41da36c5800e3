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

#include "z2dc/catalog.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <set>
#include <tuple>

#include "z2dc/errors.hpp"
#include "z2dc/oracle.hpp"

namespace z2dc::catalog {

namespace {

void check_length(int n) {
    if (n < 1)
        throw ValidationError(ValidationKind::UnsupportedDegenerateLength,
                              "x^n - 1 needs n >= 1 (got " + std::to_string(n) + ")");
    if (n > kMaxFactorLength)
        throw CapExceededError("x^n - 1 factorization supports 1 <= n <= " + std::to_string(kMaxFactorLength) +
                               " (got " + std::to_string(n) + ")");
}

}  // namespace

std::vector<Gf2Poly> factor_xn_minus_1(int n) {
    check_length(n);
    std::vector<Gf2Poly> factors;
    Gf2Poly rest = Gf2Poly::x_pow_minus_one(n);
    // Candidates in increasing degree: any composite candidate has already lost its factors.
    for (int degree = 1; 2 * degree <= rest.deg(); ++degree) {
        for (Gf2Poly::Word low = 0; low < (Gf2Poly::Word{1} << degree); ++low) {
            const Gf2Poly candidate = Gf2Poly::from_word(low | (Gf2Poly::Word{1} << degree));
            while (rest.deg() >= degree && divides(candidate, rest)) {
                factors.push_back(candidate);
                rest = rest / candidate;
            }
        }
    }
    if (!rest.is_one()) factors.push_back(rest);
    std::sort(factors.begin(), factors.end());
    return factors;
}

std::vector<Gf2Poly> divisors(int n) {
    std::map<Gf2Poly, int> multiplicity;
    for (const auto& f : factor_xn_minus_1(n)) ++multiplicity[f];
    std::vector<Gf2Poly> out{Gf2Poly::one()};
    for (const auto& [prime, count] : multiplicity) {
        std::vector<Gf2Poly> next;
        for (const auto& d : out) {
            Gf2Poly power = Gf2Poly::one();
            for (int e = 0; e <= count; ++e) {
                next.push_back(d * power);
                power *= prime;
            }
        }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Gf2Poly> admissible_ells(const CodeParams& params, const Gf2Poly& b, const Gf2Poly& a) {
    const Gf2Poly cofactor = Gf2Poly::x_pow_minus_one(params.s) / a;
    const Gf2Poly step = b / gcd(b, cofactor);
    std::vector<Gf2Poly> out{Gf2Poly{}};
    const int room = b.deg() - step.deg();  // multipliers q with deg q < room
    for (Gf2Poly::Word q = 1; room > 0 && q < (Gf2Poly::Word{1} << room); ++q)
        out.push_back(Gf2Poly::from_word(q) * step);
    return out;
}

namespace {

CatalogEntry make_entry(const CodeParams& params, const GeneratorTriple& triple, const CatalogOptions& options,
                        std::vector<oracle::PackedWord>& canonical) {
    const DoubleCyclicCode code = validate(triple);
    const auto rows = spanning_set(code);
    std::vector<oracle::PackedWord> packed;
    for (const auto& w : rows) packed.push_back(oracle::pack(w));
    canonical = oracle::canonical_basis(params, packed);

    CatalogEntry e;
    e.triple = code.triple();
    e.k = code.dimension();
    e.separable = is_separable(code);
    // Runs inside the parallel loop over triples, hence the serial kernel.
    if (e.k <= options.max_distance_dim) e.d = kernels::serial::min_weight(oracle::span(params, rows).words());
    // C is self-dual iff k = n/2 and C is self-orthogonal.
    if (2 * e.k == params.n) {
        bool orthogonal = true;
        for (const auto& u : rows)
            for (const auto& v : rows) orthogonal = orthogonal && !u.dot(v);
        e.selfdual = orthogonal;
    }
    return e;
}

}  // namespace

std::vector<CatalogEntry> enumerate_codes(int r, int s, const CatalogOptions& options) {
    const CodeParams params = CodeParams::make(r, s);
    if (r > options.max_length || s > options.max_length)
        throw CapExceededError("catalog limited to r, s <= " + std::to_string(options.max_length));
    if (params.n > oracle::kNullspaceCap)
        throw CapExceededError("catalog limited to n <= " + std::to_string(oracle::kNullspaceCap));

    const std::vector<Gf2Poly> left = divisors(r);
    const std::vector<Gf2Poly> right = divisors(s);
    std::vector<GeneratorTriple> triples;
    for (const auto& b : left)
        for (const auto& a : right)
            for (const auto& ell : admissible_ells(params, b, a)) triples.push_back({params, b, ell, a});

    std::vector<CatalogEntry> entries(triples.size());
    std::vector<std::vector<oracle::PackedWord>> canonical(triples.size());
    std::vector<std::exception_ptr> failures(triples.size());
    const auto count = static_cast<long long>(triples.size());
#pragma omp parallel for schedule(dynamic) if (options.parallel)
    for (long long i = 0; i < count; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        try {
            entries[idx] = make_entry(params, triples[idx], options, canonical[idx]);
        } catch (...) {
            failures[idx] = std::current_exception();
        }
    }
    for (const auto& f : failures)
        if (f) std::rethrow_exception(f);

    std::set<std::vector<oracle::PackedWord>> seen;
    std::vector<CatalogEntry> out;
    for (std::size_t i = 0; i < entries.size(); ++i)
        if (seen.insert(canonical[i]).second) out.push_back(std::move(entries[i]));
    std::sort(out.begin(), out.end(), [](const CatalogEntry& x, const CatalogEntry& y) {
        return std::tie(x.triple.b, x.triple.a, x.triple.ell) < std::tie(y.triple.b, y.triple.a, y.triple.ell);
    });
    return out;
}

}  // namespace z2dc::catalog
