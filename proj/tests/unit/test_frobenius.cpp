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

#include <algorithm>
#include <type_traits>

#include <doctest.h>

#include "frobenia/frobenius.hpp"
#include "support.hpp"

using namespace frobenia;
using namespace frobenia::test;

using Kind = Classification::Kind;

namespace {

LinMap scalar_map(const Rational& c)
{
    Matrix m(1, 1);
    m(0, 0) = c;
    const auto q = function_algebra(1);
    return {q, q, std::move(m)};
}

} // namespace

static_assert(!std::is_constructible_v<CertifiedNHom, LinMap, std::size_t>,
              "only classify_n issues certificates");

TEST_SUITE("frobenius form")
{
    TEST_CASE("second form unrolled")
    {
        Rng rng(1);
        const auto a = function_algebra(3);
        const auto b = quotient_algebra(monomial_modulus(2));
        for (int t = 0; t < 10; ++t) {
            const LinMap phi = random_map(rng, a, b);
            const auto x = random_element(rng, a), y = random_element(rng, a);
            CHECK(frobenius_form(phi, std::vector{x, y}) == phi(x) * phi(y) - phi(x * y));
        }
        const auto f2 = function_algebra(2);
        const auto v = frobenius_form(signed_ev(2, {1, 1}), std::vector{Element::basis(f2, 0), Element::basis(f2, 1)});
        CHECK(v == Element::one(function_algebra(1)));
    }

    TEST_CASE("diagonal law and symmetry")
    {
        Rng rng(2);
        const auto a = function_algebra(3);
        SymbolScope scope;
        const auto g = scope.generic(a, "a");
        for (int t = 0; t < 3; ++t) {
            const LinMap phi = random_map(rng, a, function_algebra(1));
            for (std::size_t k = 1; k <= 4; ++k)
                CHECK(frobenius_form(phi, std::vector<PolyElement>(k, g)) == factorial(k) * psi(phi, k, g));
        }
        for (std::size_t k = 2; k <= 4; ++k) {
            const LinMap phi = random_map(rng, a, quotient_algebra(monomial_modulus(2)));
            std::vector<Element> args;
            for (std::size_t i = 0; i < k; ++i)
                args.push_back(random_element(rng, a));
            std::vector<std::size_t> perm(k);
            for (std::size_t i = 0; i < k; ++i)
                perm[i] = i;
            const auto reference = frobenius_form(phi, args);
            do {
                std::vector<Element> permuted;
                for (const auto i : perm)
                    permuted.push_back(args[i]);
                CHECK(frobenius_form(phi, permuted) == reference);
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    }

    TEST_CASE("polarization formulas for k = 2 and 3")
    {
        Rng rng(3);
        const auto a = function_algebra(2);
        SymbolScope scope;
        const auto x = scope.generic(a, "x"), y = scope.generic(a, "y"), z = scope.generic(a, "z");
        const LinMap phi = random_map(rng, a, function_algebra(1));
        const auto p2 = [&](const PolyElement& u) { return psi(phi, 2, u); };
        const auto p3 = [&](const PolyElement& u) { return psi(phi, 3, u); };
        const auto two = p2(x + y) - p2(x) - p2(y);
        CHECK(polarize(phi, 2, std::vector{x, y}) == two);
        CHECK(frobenius_form(phi, std::vector{x, y}) == two);
        const auto three = p3(x + y + z) - p3(x + y) - p3(x + z) - p3(y + z) + p3(x) + p3(y) + p3(z);
        CHECK(polarize(phi, 3, std::vector{x, y, z}) == three);
        CHECK(frobenius_form(phi, std::vector{x, y, z}) == three);
    }

    TEST_CASE("polarization agrees with the recursion on random triples")
    {
        Rng rng(4);
        const auto a = function_algebra(2);
        for (int t = 0; t < 20; ++t) {
            const LinMap phi = random_map(rng, a, t % 2 ? function_algebra(2) : function_algebra(1));
            std::vector<Element> args{random_element(rng, a), random_element(rng, a), random_element(rng, a)};
            CHECK(polarize(phi, 3, args) == frobenius_form(phi, args));
        }
    }

    TEST_CASE("argument count")
    {
        const LinMap phi = signed_ev(2, {1, 1});
        CHECK_THROWS_AS(frobenius_form(phi, std::vector<Element>{}), std::invalid_argument);
        CHECK_THROWS_AS(polarize(phi, 2, std::vector{Element::one(function_algebra(2))}), std::invalid_argument);
    }
}

TEST_SUITE("classification")
{
    TEST_CASE("examples")
    {
        const auto c3 = classify_n(signed_ev(4, {1, 1, 1, 0}), 5);
        CHECK(c3.kind == Kind::n_hom);
        CHECK(c3.n == 3);
        REQUIRE(c3.certified);
        CHECK(c3.certified->n() == 3);

        const auto half = classify_n(scalar_map(Rational(1, 2)), 5);
        CHECK(half.kind == Kind::indeterminate_chi);
        REQUIRE(half.chi_scalar);
        CHECK(*half.chi_scalar == Rational(1, 2));
        CHECK_FALSE(half.certified);

        const auto id = classify_n(LinMap::identity(function_algebra(1)), 5);
        CHECK(id.kind == Kind::n_hom);
        CHECK(id.n == 1);

        const auto zero = classify_n(LinMap::zero(function_algebra(2), function_algebra(1)), 3);
        CHECK(zero.kind == Kind::n_hom);
        CHECK(zero.n == 0);
    }

    TEST_CASE("integer unit value that is not an n-homomorphism")
    {
        // phi(a) = 2 a(x_0) - a(x_1) + a(x_2) has phi(1) = 2, psi_3 != 0
        const LinMap phi = signed_ev(3, {2, -1, 1});
        const auto c = classify_n(phi, 4);
        CHECK(c.kind == Kind::not_n_hom);
        REQUIRE(c.witness);
        CHECK_FALSE(c.witness->is_zero());
        SymbolScope scope;
        const auto a = scope.generic(phi.domain(), "a");
        CHECK(*c.witness == psi(phi, 3, a));
        CHECK(c.witness->coords()[0].degree() == 3);
    }

    TEST_CASE("integer unit value beyond the bound")
    {
        const auto c = classify_n(signed_ev(2, {3, 4}), 3);
        CHECK(c.kind == Kind::not_n_hom);
        CHECK(c.bound == 3);
        REQUIRE(c.witness);
        CHECK_FALSE(c.witness->is_zero());
        const auto neg = classify_n(scalar_map(-2), 3);
        CHECK(neg.kind == Kind::not_n_hom);
    }

    TEST_CASE("unit value not a multiple of the unit")
    {
        Matrix m(2, 2);
        m(0, 0) = 1;
        m(1, 1) = 2;
        const auto f2 = function_algebra(2);
        const auto c = classify_n(LinMap(f2, f2, m), 4);
        CHECK(c.kind == Kind::indeterminate_chi);
        CHECK_FALSE(c.chi_scalar);
    }

    TEST_CASE("invalid algebras are rejected")
    {
        const auto f2 = function_algebra(2);
        auto c = f2->constants();
        c[0] = 2;
        const auto broken = Algebra::create("broken", f2->unit(), c);
        CHECK_THROWS_AS(classify_n(LinMap(broken, function_algebra(1), Matrix(1, 2)), 2), std::invalid_argument);
    }

    TEST_CASE("vanishing propagates one step further")
    {
        SymbolScope scope;
        const auto g = scope.generic(function_algebra(3), "a");
        for (const auto& w : std::vector<std::vector<long>>{{1, 0, 0}, {1, 1, 0}, {2, 1, 0}, {1, 1, 1}, {0, 3, 1}}) {
            const LinMap phi = signed_ev(3, w);
            const auto c = classify_n(phi, 5);
            REQUIRE(c.kind == Kind::n_hom);
            CHECK(psi(phi, c.n + 1, g).is_zero());
            CHECK(psi(phi, c.n + 2, g).is_zero());
        }
    }

    TEST_CASE("sum of an n- and an m-homomorphism")
    {
        Rng rng(9);
        std::uniform_int_distribution<long> pick(0, 2);
        for (int t = 0; t < 10; ++t) {
            std::vector<long> w1(3, 0), w2(3, 0);
            const long n = pick(rng), m = pick(rng);
            for (long i = 0; i < n; ++i)
                ++w1[pick(rng)];
            for (long i = 0; i < m; ++i)
                ++w2[pick(rng)];
            const LinMap phi = signed_ev(3, w1), gamma = signed_ev(3, w2);
            const auto c = classify_n(phi + gamma, 6);
            CHECK(c.kind == Kind::n_hom);
            CHECK(static_cast<long>(c.n) == n + m);
        }
    }

    TEST_CASE("falling factorial")
    {
        const auto q = function_algebra(1);
        const Element three = Rational(3) * Element::one(q);
        CHECK(falling_factorial(three, 0) == Element::one(q));
        CHECK(falling_factorial(three, 3) == Rational(6) * Element::one(q));
        CHECK(falling_factorial(three, 4).is_zero());
        const auto dual = quotient_algebra(monomial_modulus(2));
        const Element nil = Element::basis(dual, 1);
        CHECK(falling_factorial(nil, 2) == nil * (nil - Element::one(dual)));
    }
}

TEST_SUITE("berezinian")
{
    TEST_CASE("examples")
    {
        const auto q = function_algebra(1);
        SymbolScope scope;
        const auto a = scope.generic(q, "a");
        const auto id = classify_n(LinMap::identity(q), 3);
        REQUIRE(id.certified);
        CHECK(berezinian(*id.certified, a) == a);

        const auto two = classify_n(scalar_map(2), 3);
        REQUIRE(two.certified);
        CHECK(berezinian(*two.certified, a) == a * a);

        const auto f2 = function_algebra(2);
        const auto u = scope.generic(f2, "u");
        const auto ev = classify_n(signed_ev(2, {1, 1}), 3);
        REQUIRE(ev.certified);
        CHECK(berezinian(*ev.certified, u)[0] == u[0] * u[1]);
        CHECK(berezinian(*ev.certified, Element(f2, {2, 5})) == Element(q, {10}));
    }

    TEST_CASE("ber = psi_n, multiplicativity and the product rule")
    {
        const std::vector<LinMap> maps{LinMap::identity(function_algebra(1)), scalar_map(2), signed_ev(2, {1, 1}),
                                       signed_ev(3, {1, 1, 1}), signed_ev(3, {0, 2, 1})};
        for (const auto& phi : maps) {
            const auto c = classify_n(phi, 4);
            REQUIRE(c.certified);
            CHECK(verify_ber_psi_n(*c.certified));
            CHECK(verify_ber_mult(*c.certified));
            CHECK(verify_ident2(*c.certified));
        }
        // A map into the dual numbers: identity plus evaluation at 0.
        const auto dual = quotient_algebra(monomial_modulus(2));
        Matrix m(2, 2);
        m(0, 0) = 2;
        m(1, 1) = 1;
        const auto c = classify_n(LinMap(dual, dual, m), 4);
        REQUIRE(c.certified);
        CHECK(c.n == 2);
        CHECK(verify_ber_psi_n(*c.certified));
        CHECK(verify_ber_mult(*c.certified));
        CHECK(verify_ident2(*c.certified));
    }
}
