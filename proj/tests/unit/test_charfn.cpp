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

#include "frobenia/charfn.hpp"
#include "support.hpp"

using namespace frobenia;
using namespace frobenia::test;

namespace {

LinMap scalar_map(const Rational& c)
{
    Matrix m(1, 1);
    m(0, 0) = c;
    const auto q = function_algebra(1);
    return {q, q, std::move(m)};
}

template <Scalar S>
std::vector<S> first_coords(const TruncSeries<S>& s)
{
    std::vector<S> out;
    for (const auto& c : s.coeffs())
        out.push_back(c[0]);
    return out;
}

} // namespace

TEST_CASE("ring homomorphism: R = 1 + a z")
{
    SymbolScope scope;
    const auto q = function_algebra(1);
    const auto a = scope.generic(q, "a");
    const auto r = char_series_direct(LinMap::identity(q), a, 4);
    CHECK(first_coords(r) == std::vector<Poly>{1, a[0], 0, 0, 0});
    CHECK(char_series_newton(LinMap::identity(q), a, 4) == r);
}

TEST_CASE("ev-sum of two points against the product oracle")
{
    SymbolScope scope;
    const auto a = scope.generic(function_algebra(2), "a");
    const LinMap phi = signed_ev(2, {1, 1});
    const auto expected = rational_char_series({a[0], a[1]}, {}, 3);
    CHECK(first_coords(char_series_direct(phi, a, 3)) == expected);
    CHECK(first_coords(char_series_newton(phi, a, 3)) == expected);
    CHECK(expected[2] == a[0] * a[1]);
    CHECK(expected[3].is_zero());
    CHECK(psi(phi, 2, a)[0] == a[0] * a[1]);
}

TEST_CASE("scalar multiple of the identity gives the binomial series")
{
    const auto q = function_algebra(1);
    const Element one = Element::one(q);
    const auto half = char_series_direct(scalar_map(Rational(1, 2)), one, 3);
    CHECK(first_coords(half) == std::vector<Rational>{1, Rational(1, 2), Rational(-1, 8), Rational(1, 16)});

    Rng rng(41);
    SymbolScope scope;
    const auto a = scope.generic(q, "a");
    for (int t = 0; t < 10; ++t) {
        const Rational c = random_rational(rng, 7, 4);
        const auto r = char_series_newton(scalar_map(c), a, 6);
        for (std::size_t k = 0; k <= 6; ++k)
            CHECK(r[k][0] == binomial(c, k) * pow(a[0], static_cast<unsigned>(k)));
    }
}

TEST_CASE("first Newton coefficients")
{
    Rng rng(2);
    const std::vector<AlgebraPtr> algebras{function_algebra(3), quotient_algebra(monomial_modulus(3))};
    for (const auto& a : algebras)
        for (int t = 0; t < 10; ++t) {
            const auto b = t % 2 ? function_algebra(2) : quotient_algebra(monomial_modulus(2));
            const LinMap phi = random_map(rng, a, b);
            const Element x = random_element(rng, a);
            const auto r = char_series_direct(phi, x, 2);
            CHECK(r[1] == phi(x));
            CHECK(r[2] == Rational(1, 2) * (phi(x) * phi(x) - phi(x * x)));
        }

    SymbolScope scope;
    const auto q = function_algebra(1);
    const auto a = scope.generic(q, "a");
    CHECK(psi(scalar_map(2), 2, a)[0] == a[0] * a[0]);
}

TEST_CASE("route equality on random inputs")
{
    Rng rng(100);
    const auto a = function_algebra(3);
    for (int t = 0; t < 100; ++t) {
        const auto b = t % 3 == 0 ? function_algebra(1) : function_algebra(2);
        const LinMap phi = random_map(rng, a, b);
        const auto x = random_element(rng, a);
        CHECK(compare_routes(phi, x, 8));
    }
    SymbolScope scope;
    const auto g = scope.generic(a, "a");
    for (int t = 0; t < 5; ++t)
        CHECK(compare_routes(random_map(rng, a, quotient_algebra(monomial_modulus(2))), g, 6));
}

TEST_CASE("psi: unit, homogeneity, zero argument")
{
    Rng rng(8);
    const auto a = function_algebra(2);
    const auto b = quotient_algebra(monomial_modulus(2));
    SymbolScope scope;
    const auto g = scope.generic(a, "a");
    for (int t = 0; t < 5; ++t) {
        const LinMap phi = random_map(rng, a, b);
        CHECK(psi(phi, 0, g) == PolyElement::one(b));
        CHECK(psi(phi, 3, g.scaled(Poly(2))) == Rational(8) * psi(phi, 3, g));
        const Rational lambda = random_rational(rng);
        for (std::size_t k = 1; k <= 5; ++k) {
            Rational lk = 1;
            for (std::size_t i = 0; i < k; ++i)
                lk *= lambda;
            CHECK(psi(phi, k, g.scaled(Poly(lambda))) == lk * psi(phi, k, g));
        }
        const auto r0 = char_series_direct(phi, Element::zero(a), 6);
        CHECK(r0 == TruncSeries<Rational>::one(b, 6));
    }
}

TEST_CASE("multiplicative identity in two variables")
{
    const auto f2 = function_algebra(2);
    const LinMap ev = signed_ev(2, {1, 1});
    CHECK(verify_ident1(ev, Element::zero(f2), Element::zero(f2), 4));
    SymbolScope scope;
    const auto a = scope.generic(f2, "a");
    const auto b = scope.generic(f2, "b");
    CHECK(verify_ident1(LinMap::identity(f2), a, b, 4));
    CHECK(verify_ident1(ev, a, b, 5));
    Rng rng(4);
    CHECK(verify_ident1(random_map(rng, f2, function_algebra(1)), a, b, 4));
}

TEST_CASE("exponential property")
{
    Rng rng(12);
    const auto q = function_algebra(1);
    SymbolScope scope;
    const auto x = scope.generic(q, "x");
    CHECK(verify_exp_property(LinMap::identity(q), LinMap::zero(q, q), x, 6));
    CHECK(verify_exp_property(LinMap::identity(q), LinMap::identity(q), x, 6));
    const auto r2 = char_series_direct(LinMap::identity(q) + LinMap::identity(q), x, 4);
    CHECK(first_coords(r2) == std::vector<Poly>{1, Rational(2) * x[0], x[0] * x[0], 0, 0});

    const auto a = function_algebra(3);
    const auto g = scope.generic(a, "a");
    for (int t = 0; t < 3; ++t)
        CHECK(verify_exp_property(random_map(rng, a, q), random_map(rng, a, q), g, 8));
}

TEST_CASE("shape errors")
{
    const LinMap ev = signed_ev(2, {1, 1});
    CHECK_THROWS_AS(char_series_direct(ev, Element::one(function_algebra(3)), 3), std::invalid_argument);
    CHECK_THROWS_AS(verify_exp_property(ev, signed_ev(3, {1, 1, 1}), Element::one(function_algebra(2)), 3),
                    std::invalid_argument);
}
