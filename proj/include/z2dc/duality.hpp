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

#ifndef Z2DC_DUALITY_HPP
#define Z2DC_DUALITY_HPP

#include <optional>

#include "z2dc/code.hpp"
#include "z2dc/gf2poly.hpp"

namespace z2dc {

/**
 * The bilinear map R_{r,s} x R_{r,s} -> Z2[x]/(x^m - 1), m = lcm(r, s):
 *
 *   u(x) theta_{m/r}(x^r) x^{m-1-deg v} v*(x) + u'(x) theta_{m/s}(x^s) x^{m-1-deg v'} v'*(x)
 *
 * reduced modulo x^m - 1. A block whose u- or v-part is zero contributes nothing.
 * The coefficient of x^{(m-1+i) mod m} is u . v^{(i)}.
 */
Gf2Poly circle_product(const Codeword& u, const Codeword& v, const CodeParams& params);

/// True iff u is orthogonal to v and to every shift of v.
bool orthogonal_to_all_shifts(const Codeword& u, const Codeword& v, const CodeParams& params);

/// (x^r - 1) / gcd(b, ell)*.
Gf2Poly dual_bbar(const DoubleCyclicCode& code);

/// (x^s - 1) gcd(b, ell)* / (a* b*). Throws InternalInconsistency if the division is inexact.
Gf2Poly dual_abar(const DoubleCyclicCode& code);

/// ell / gcd(b, ell).
Gf2Poly dual_rho(const DoubleCyclicCode& code);

/// b* / gcd(b, ell)*: the modulus of the lambda congruence; has degree kappa.
Gf2Poly lambda_modulus(const DoubleCyclicCode& code);

/**
 * lambda = x^{m - deg a + deg ell} (rho*)^{-1} mod (b* / gcd(b, ell)*), with deg lambda < kappa.
 * Throws ValidationError(InvalidArgument) for separable codes, and InternalInconsistency if rho*
 * is not invertible or the resulting lambda violates the congruence.
 */
Gf2Poly dual_lambda(const DoubleCyclicCode& code);

/// lambda x^{m-deg ell-1} rho* + x^{m-deg a-1} = 0 mod (b*/gcd(b,ell)*), evaluated after
/// multiplying through by x^{deg ell + 1} so no negative exponent appears (x is a unit mod the modulus).
bool lambda_condition_holds(const DoubleCyclicCode& code, const Gf2Poly& lambda);

/// Generators (bbar, ellbar, abar) of the dual code plus the auxiliary rho and lambda.
/// For separable codes rho and lambda are zero.
struct DualTriple {
    Gf2Poly bbar;
    Gf2Poly ellbar;
    Gf2Poly abar;
    Gf2Poly rho;
    Gf2Poly lambda;

    GeneratorTriple as_triple(const CodeParams& params) const { return {params, bbar, ellbar, abar}; }
};

/// Closed-form dual generators. ellbar is reduced modulo x^r - 1 and then modulo bbar.
DualTriple dual_triple(const DoubleCyclicCode& code);

/// validate(dual_triple(code)).
DoubleCyclicCode dual_code(const DoubleCyclicCode& code);

/// (x^s - 1) / a*: generator of {(0 | p) in C^perp}.
Gf2Poly right_annihilator_generator(const DoubleCyclicCode& code);

}  // namespace z2dc

#endif
