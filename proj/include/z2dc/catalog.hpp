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

#ifndef Z2DC_CATALOG_HPP
#define Z2DC_CATALOG_HPP

#include <optional>
#include <vector>

#include "z2dc/code.hpp"
#include "z2dc/gf2poly.hpp"

namespace z2dc::catalog {

inline constexpr int kMaxFactorLength = 24;
inline constexpr int kDefaultMaxLength = 8;

/// Irreducible factors of x^n - 1 over GF(2), with multiplicity, in ascending order.
/// Trial division by polynomials of increasing degree. 1 <= n <= 24.
std::vector<Gf2Poly> factor_xn_minus_1(int n);

/// Every divisor of x^n - 1, including 1 and x^n - 1, in ascending order.
std::vector<Gf2Poly> divisors(int n);

/// Admissible ell for given b, a: zero and every multiple of b/gcd(b, (x^s-1)/a) below deg b.
std::vector<Gf2Poly> admissible_ells(const CodeParams& params, const Gf2Poly& b, const Gf2Poly& a);

struct CatalogEntry {
    GeneratorTriple triple;  // normalized
    int k = 0;
    std::optional<int> d;  // nullopt for the zero code or when k exceeds max_distance_dim
    bool separable = false;
    bool selfdual = false;
};

struct CatalogOptions {
    /// r and s above this are rejected with CapExceededError (n must also stay <= 24).
    int max_length = kDefaultMaxLength;
    /// Minimum distance is computed only for k <= this.
    int max_distance_dim = 24;
    bool parallel = true;
};

/// All Z2-double cyclic codes of R_{r,s}, one entry per code, sorted by (b, a, ell).
std::vector<CatalogEntry> enumerate_codes(int r, int s, const CatalogOptions& options = {});

}  // namespace z2dc::catalog

#endif
