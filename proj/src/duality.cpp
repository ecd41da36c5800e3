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

#include "z2dc/duality.hpp"

#include "z2dc/errors.hpp"

namespace z2dc {

namespace {

// u(x) theta_{m/len}(x^len) x^{m-1-deg v} v*(x), or 0 if either part is zero.
Gf2Poly circle_term(const Gf2Poly& u, const Gf2Poly& v, int len, int m) {
    if (u.is_zero() || v.is_zero()) return {};
    const Gf2Poly lifted = theta(m / len).compose_power(len);
    return u * lifted * reciprocal(v).shifted(m - 1 - v.deg());
}

void require_non_separable(const DoubleCyclicCode& code, const char* what) {
    if (is_separable(code))
        throw ValidationError(ValidationKind::InvalidArgument,
                              std::string(what) + " is only defined for non-separable codes");
}

}  // namespace

Gf2Poly circle_product(const Codeword& u, const Codeword& v, const CodeParams& params) {
    if (u.left.size() != params.r || u.right.size() != params.s || v.left.size() != params.r ||
        v.right.size() != params.s)
        throw ValidationError(ValidationKind::ParameterMismatch, "circle_product: codeword lengths differ from (r, s)");
    const Gf2Poly sum = circle_term(u.left_poly(), v.left_poly(), params.r, params.m) +
                        circle_term(u.right_poly(), v.right_poly(), params.s, params.m);
    return sum % Gf2Poly::x_pow_minus_one(params.m);
}

bool orthogonal_to_all_shifts(const Codeword& u, const Codeword& v, const CodeParams& params) {
    return circle_product(u, v, params).is_zero();
}

Gf2Poly dual_bbar(const DoubleCyclicCode& code) {
    return exact_div(Gf2Poly::x_pow_minus_one(code.params().r), reciprocal(gcd(code.b(), code.ell())));
}

Gf2Poly dual_abar(const DoubleCyclicCode& code) {
    const Gf2Poly numerator = Gf2Poly::x_pow_minus_one(code.params().s) * reciprocal(gcd(code.b(), code.ell()));
    return exact_div(numerator, reciprocal(code.a()) * reciprocal(code.b()));
}

Gf2Poly dual_rho(const DoubleCyclicCode& code) {
    if (code.ell().is_zero()) return {};
    return exact_div(code.ell(), gcd(code.b(), code.ell()));
}

Gf2Poly lambda_modulus(const DoubleCyclicCode& code) {
    return exact_div(reciprocal(code.b()), reciprocal(gcd(code.b(), code.ell())));
}

Gf2Poly dual_lambda(const DoubleCyclicCode& code) {
    require_non_separable(code, "lambda");
    const Gf2Poly modulus = lambda_modulus(code);
    if (modulus.deg() != code.kappa())
        throw InternalInconsistency("lambda modulus has degree " + std::to_string(modulus.deg()) + ", expected kappa");
    const Gf2Poly rho_star = reciprocal(dual_rho(code));
    Gf2Poly inverse;
    try {
        inverse = modinv(rho_star, modulus);
    } catch (const NotInvertibleError& e) {
        throw InternalInconsistency(std::string("rho* is not a unit modulo b*/gcd*: ") + e.what());
    }
    const long long exponent =
        static_cast<long long>(code.params().m) - code.a().deg() + code.ell().deg();
    Gf2Poly lambda = (x_pow_mod(exponent, modulus) * inverse) % modulus;
    if (!lambda_condition_holds(code, lambda))
        throw InternalInconsistency("lambda violates its defining congruence");
    return lambda;
}

bool lambda_condition_holds(const DoubleCyclicCode& code, const Gf2Poly& lambda) {
    require_non_separable(code, "the lambda condition");
    const Gf2Poly modulus = lambda_modulus(code);
    const int m = code.params().m;
    const int deg_ell = code.ell().deg();
    const int deg_a = code.a().deg();
    const Gf2Poly rho_star = reciprocal(dual_rho(code));
    Gf2Poly expr;
    if (m - deg_ell - 1 >= 0 && m - deg_a - 1 >= 0)
        expr = lambda * rho_star * x_pow_mod(m - deg_ell - 1, modulus) + x_pow_mod(m - deg_a - 1, modulus);
    else
        expr = lambda * rho_star * x_pow_mod(m, modulus) + x_pow_mod(m - deg_a + deg_ell, modulus);
    return (expr % modulus).is_zero();
}

DualTriple dual_triple(const DoubleCyclicCode& code) {
    const CodeParams& p = code.params();
    const Gf2Poly xr = Gf2Poly::x_pow_minus_one(p.r);
    const Gf2Poly xs = Gf2Poly::x_pow_minus_one(p.s);
    DualTriple out;
    if (is_separable(code)) {
        out.bbar = exact_div(xr, reciprocal(code.b()));
        out.abar = exact_div(xs, reciprocal(code.a()));
        return out;
    }
    out.bbar = dual_bbar(code);
    out.abar = dual_abar(code);
    out.rho = dual_rho(code);
    out.lambda = dual_lambda(code);
    out.ellbar = ((exact_div(xr, reciprocal(code.b())) * out.lambda) % xr) % out.bbar;
    return out;
}

DoubleCyclicCode dual_code(const DoubleCyclicCode& code) { return validate(dual_triple(code).as_triple(code.params())); }

Gf2Poly right_annihilator_generator(const DoubleCyclicCode& code) {
    return exact_div(Gf2Poly::x_pow_minus_one(code.params().s), reciprocal(code.a()));
}

}  // namespace z2dc
