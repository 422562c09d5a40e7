// Copyright 2026 The Frobenia Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include "frobenia/sympower.hpp"
#include "support.hpp"

using namespace frobenia;
using namespace frobenia::test;

namespace {

LinMap functional(const SymPower& sp, const std::vector<Rational>& row)
{
    Matrix m(1, sp.algebra->dim());
    for (std::size_t j = 0; j < row.size(); ++j)
        m(0, j) = row[j];
    return {sp.algebra, function_algebra(1), std::move(m)};
}

CertifiedNHom certify(const LinMap& phi, std::size_t n)
{
    auto c = classify_n(phi, n);
    REQUIRE(c.certified);
    REQUIRE(c.n == n);
    return *c.certified;
}

std::size_t choose(std::size_t n, std::size_t k)
{
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

} // namespace

TEST_SUITE("construction")
{
    TEST_CASE("S^2 of functions on two points")
    {
        const auto f2 = function_algebra(2);
        const auto sp = sym_power(f2, 2);
        REQUIRE(sp.algebra->dim() == 3);
        CHECK(sp.basis_multisets == std::vector<Multiset>{{0, 0}, {0, 1}, {1, 1}});
        const auto e = [&](std::size_t i) { return Element::basis(sp.algebra, i); };
        CHECK(e(1) * e(1) == e(1));
        CHECK((e(0) * e(1)).is_zero());
        CHECK(Element::one(sp.algebra) == e(0) + e(1) + e(2));
        CHECK(validate_algebra(*sp.algebra).empty());
    }

    TEST_CASE("dimensions and axioms")
    {
        CHECK(sym_power(function_algebra(1), 4).algebra->same_structure(*function_algebra(1)));
        CHECK(sym_power(function_algebra(3), 2).algebra->dim() == 6);
        const std::vector<AlgebraPtr> bases{function_algebra(2), function_algebra(3),
                                            quotient_algebra(monomial_modulus(2)), quotient_algebra({-1, 0, 1})};
        for (const auto& a : bases)
            for (std::size_t n = 1; n <= 3; ++n) {
                const auto sp = sym_power(a, n);
                CHECK(sp.algebra->dim() == choose(a->dim() + n - 1, n));
                CHECK(sp.inclusion.dim() == sp.algebra->dim());
                CHECK(validate_algebra(*sp.algebra).empty());
            }
        CHECK_THROWS_AS(sym_power(function_algebra(2), 0), std::invalid_argument);
    }

    TEST_CASE("multisets")
    {
        CHECK(multisets(3, 0) == std::vector<Multiset>{{}});
        CHECK(multisets(2, 3).size() == 4);
        CHECK(to_string(Multiset{0, 0, 1}) == "{0,0,1}");
    }
}

TEST_SUITE("diagonal")
{
    TEST_CASE("delta on S^2 of two points")
    {
        const auto f2 = function_algebra(2);
        const auto sp = sym_power(f2, 2);
        SymbolScope scope;
        const auto a = scope.generic(f2, "a");
        const Poly u = a[0], v = a[1];
        const auto d = delta(sp, a);
        CHECK(d.coords() == std::vector<Poly>{Rational(2) * u, u + v, Rational(2) * v});
        const auto c = elem_sym_coeffs(sp, a);
        REQUIRE(c.size() == 3);
        CHECK(c[0] == PolyElement::one(sp.algebra));
        CHECK(c[1] == d);
        CHECK(c[2].coords() == std::vector<Poly>{u * u, u * v, v * v});
    }

    TEST_CASE("delta is linear with delta(1) = n")
    {
        const std::vector<AlgebraPtr> bases{function_algebra(3), quotient_algebra(monomial_modulus(2))};
        for (const auto& base : bases)
            for (std::size_t n = 1; n <= 3; ++n) {
                const auto sp = sym_power(base, n);
                CHECK(delta(sp, Element::one(base)) == Rational(static_cast<long>(n)) * Element::one(sp.algebra));
                SymbolScope scope;
                const auto a = scope.generic(base, "a"), b = scope.generic(base, "b");
                CHECK(delta(sp, a + b) == delta(sp, a) + delta(sp, b));
                const auto c = elem_sym_coeffs(sp, a);
                CHECK(c[1] == delta(sp, a));
            }
    }

    TEST_CASE("top coefficient is the tensor power")
    {
        // a^{⊗n} = sum_M x^M e_M: the coefficient of e_M is the monomial of M.
        const auto f3 = function_algebra(3);
        const auto sp = sym_power(f3, 3);
        SymbolScope scope;
        const auto a = scope.generic(f3, "a");
        const auto top = elem_sym_coeffs(sp, a)[3];
        for (std::size_t j = 0; j < sp.basis_multisets.size(); ++j) {
            Poly mono = 1;
            for (const auto i : sp.basis_multisets[j])
                mono *= a[i];
            CHECK(top[j] == mono);
        }
    }
}

TEST_SUITE("correspondence")
{
    TEST_CASE("restriction of coordinate functionals")
    {
        const auto f2 = function_algebra(2);
        const auto sp = sym_power(f2, 2);
        SymbolScope scope;
        const auto a = scope.generic(f2, "a");
        const auto mid = alpha(sp, functional(sp, {0, 1, 0}));
        CHECK(mid.n() == 2);
        CHECK(mid.map()(a)[0] == a[0] + a[1]);
        const auto left = alpha(sp, functional(sp, {1, 0, 0}));
        CHECK(left.map()(a)[0] == Rational(2) * a[0]);
    }

    TEST_CASE("non-homomorphisms are rejected with the offending pair")
    {
        const auto sp = sym_power(function_algebra(2), 2);
        try {
            (void)alpha(sp, functional(sp, {1, 1, 1}));
            FAIL("expected NotAHomomorphism");
        } catch (const NotAHomomorphism& e) {
            CHECK_FALSE(e.check().passed);
            CHECK_FALSE(e.check().unit_failed);
            CHECK(e.check().i == 0);
            CHECK(e.check().j == 1);
            CHECK_FALSE(e.check().lhs == e.check().rhs);
        }

        CHECK(is_algebra_hom(LinMap::identity(sp.algebra)));
        const auto zero = is_algebra_hom(LinMap::zero(sp.algebra, function_algebra(1)));
        CHECK_FALSE(zero.passed);
        CHECK(zero.unit_failed);

        // S^2 of the dual numbers: e_{01} squares to 2 e_{11}.
        const auto sd = sym_power(quotient_algebra(monomial_modulus(2)), 2);
        const auto bad = is_algebra_hom(functional(sd, {1, 1, 0}));
        CHECK_FALSE(bad.passed);
        CHECK_FALSE(bad.unit_failed);
        CHECK(bad.i == 1);
        CHECK(bad.j == 1);
    }

    TEST_CASE("lift of ev_1 + ev_2")
    {
        const auto f2 = function_algebra(2);
        const auto sp = sym_power(f2, 2);
        const LinMap f = beta(sp, certify(signed_ev(2, {1, 1}), 2));
        CHECK(f.matrix() == functional(sp, {0, 1, 0}).matrix());
        CHECK(verify_det_identity(sp, f, signed_ev(2, {1, 1})));
    }

    TEST_CASE("n = 1 is the identity correspondence")
    {
        const auto q = function_algebra(1);
        const auto sp = sym_power(q, 1);
        const LinMap id = LinMap::identity(q);
        const LinMap f = beta(sp, certify(id, 1));
        CHECK(f.matrix() == id.matrix());
        CHECK(verify_det_identity(sp, f, id));
    }

    TEST_CASE("the lift solves F(a^{⊗n}) = psi_n(a) coefficientwise")
    {
        // Independent oracle: F(e_M) is the coefficient of x^M in psi_n(a).
        const auto f3 = function_algebra(3);
        SymbolScope scope;
        const auto a = scope.generic(f3, "a");
        for (const auto& w : std::vector<std::vector<long>>{{1, 1, 0}, {2, 0, 1}, {0, 3, 0}, {1, 1, 1}}) {
            const LinMap phi = signed_ev(3, w);
            const std::size_t n = static_cast<std::size_t>(w[0] + w[1] + w[2]);
            const auto sp = sym_power(f3, n);
            const LinMap f = beta(sp, certify(phi, n));
            const Poly p = psi(phi, n, a)[0];
            for (std::size_t j = 0; j < sp.basis_multisets.size(); ++j) {
                Poly mono = 1;
                for (const auto i : sp.basis_multisets[j])
                    mono *= a[i];
                CHECK(f.matrix()(0, j) == p.coefficient(mono.terms().front().monomial));
            }
            CHECK(f(elem_sym_coeffs(sp, a)[n]) == psi(phi, n, a));
        }
    }

    TEST_CASE("round trips")
    {
        const auto f3 = function_algebra(3);
        const LinMap phi = signed_ev(3, {1, 0, 1});
        const auto sp = sym_power(f3, 2);
        const LinMap f = beta(sp, certify(phi, 2));
        CHECK(alpha(sp, f).map() == phi);

        for (const auto& g : coordinate_homomorphisms(sp)) {
            const auto back = beta(sp, alpha(sp, g));
            CHECK(back == g);
        }
        CHECK(coordinate_homomorphisms(sp).size() == 6);
        CHECK(coordinate_homomorphisms(sym_power(function_algebra(2), 2)).size() == 3);
    }

    TEST_CASE("determinant identity detects a wrong lift")
    {
        const auto f2 = function_algebra(2);
        const auto sp = sym_power(f2, 2);
        const auto check = verify_det_identity(sp, functional(sp, {1, 0, 0}), signed_ev(2, {1, 1}));
        CHECK_FALSE(check.passed);
        REQUIRE(check.witness);
        CHECK_FALSE(check.witness->is_zero());
        CHECK_FALSE(check.where.empty());
    }

    TEST_CASE("maps of the wrong degree or shape")
    {
        const auto sp = sym_power(function_algebra(2), 2);
        CHECK_THROWS_AS(beta(sp, certify(signed_ev(2, {1, 0}), 1)), std::invalid_argument);
        CHECK_THROWS_AS(beta(sp, certify(signed_ev(3, {1, 1, 0}), 2)), std::invalid_argument);
        CHECK_THROWS_AS(alpha(sp, signed_ev(2, {1, 0})), std::invalid_argument);
    }

    TEST_CASE("lift into the dual numbers")
    {
        const auto dual = quotient_algebra(monomial_modulus(2));
        Matrix m(2, 2);
        m(0, 0) = 2;
        m(1, 1) = 1;
        const LinMap phi(dual, dual, m);
        const auto sp = sym_power(dual, 2);
        const LinMap f = beta(sp, certify(phi, 2));
        CHECK(is_algebra_hom(f));
        CHECK(alpha(sp, f).map() == phi);
        CHECK(verify_det_identity(sp, f, phi));
    }
}
