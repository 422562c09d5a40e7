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

#include "frobenia/frobenius.hpp"

namespace frobenia {

Element falling_factorial(const Element& chi, std::size_t k)
{
    const Element one = Element::one(chi.algebra());
    Element r = one;
    for (std::size_t i = 0; i < k; ++i)
        r = r * (chi - Rational(static_cast<long>(i)) * one);
    return r;
}

const char* to_string(Classification::Kind k)
{
    switch (k) {
    case Classification::Kind::n_hom:
        return "n_hom";
    case Classification::Kind::not_n_hom:
        return "not_n_hom";
    case Classification::Kind::indeterminate_chi:
        return "indeterminate_chi";
    }
    return "?";
}

namespace {

/// c with x = c·unit, if any.
std::optional<Rational> unit_multiple(const Element& x)
{
    const auto& unit = x.algebra()->unit();
    std::optional<Rational> c;
    for (std::size_t i = 0; i < unit.size(); ++i)
        if (sgn(unit[i]) != 0) {
            c = x[i] / unit[i];
            break;
        }
    if (!c)
        return std::nullopt;
    for (std::size_t i = 0; i < unit.size(); ++i)
        if (x[i] != *c * unit[i])
            return std::nullopt;
    return c;
}

Rational binomial(const Rational& x, std::size_t k)
{
    Rational r = 1;
    for (std::size_t i = 0; i < k; ++i)
        r *= (x - static_cast<long>(i)) / Rational(static_cast<long>(i + 1));
    return r;
}

} // namespace

Classification classify_n(const LinMap& phi, std::size_t n_max)
{
    for (const auto* alg : {phi.domain().get(), phi.codomain().get()})
        if (!validate_algebra(*alg).empty())
            throw std::invalid_argument("classification needs valid algebras; '" + alg->label() + "' fails the axioms");
    Classification c;
    c.bound = n_max;
    c.chi = value_at_unit(phi);
    c.chi_scalar = unit_multiple(c.chi);
    if (!c.chi_scalar) {
        c.reason = "phi(1) is not a scalar multiple of the unit";
        return c;
    }
    const Rational& chi = *c.chi_scalar;
    if (!is_integer(chi)) {
        c.reason = "phi(1) = " + to_string(chi) + " is not an integer";
        return c;
    }
    if (sgn(chi) < 0 || chi > Rational(static_cast<unsigned long>(n_max))) {
        c.kind = Classification::Kind::not_n_hom;
        const Element one = Element::one(phi.codomain());
        c.witness = lift(binomial(chi, n_max + 1) * one);
        c.reason = "phi(1) = " + to_string(chi) + " lies outside [0, " + std::to_string(n_max) +
                   "]; psi_" + std::to_string(n_max + 1) + "(1) is nonzero";
        return c;
    }
    const auto n = static_cast<std::size_t>(*as_int64(chi));
    SymbolScope scope;
    const PolyElement a = scope.generic(phi.domain(), "a");
    PolyElement next = psi(phi, n + 1, a);
    if (next.is_zero()) {
        c.kind = Classification::Kind::n_hom;
        c.n = n;
        c.certified = CertifiedNHom(phi, n);
        c.reason = "psi_" + std::to_string(n + 1) + " vanishes identically";
    } else {
        c.kind = Classification::Kind::not_n_hom;
        c.witness = std::move(next);
        c.reason = "psi_" + std::to_string(n + 1) + " of a generic element is nonzero";
    }
    return c;
}

IdentityCheck verify_ber_psi_n(const CertifiedNHom& phi)
{
    SymbolScope scope;
    const PolyElement a = scope.generic(phi.map().domain(), "a");
    const PolyElement diff = berezinian(phi, a) - psi(phi.map(), phi.n(), a);
    if (!diff.is_zero())
        return IdentityCheck::fail("ber(a) - psi_" + std::to_string(phi.n()) + "(a)", diff);
    return IdentityCheck::pass();
}

IdentityCheck verify_ber_mult(const CertifiedNHom& phi)
{
    SymbolScope scope;
    const PolyElement a = scope.generic(phi.map().domain(), "a");
    const PolyElement b = scope.generic(phi.map().domain(), "b");
    const PolyElement diff = berezinian(phi, a * b) - berezinian(phi, a) * berezinian(phi, b);
    if (!diff.is_zero())
        return IdentityCheck::fail("ber(ab) - ber(a) ber(b)", diff);
    return IdentityCheck::pass();
}

IdentityCheck verify_ident2(const CertifiedNHom& phi)
{
    SymbolScope scope;
    const PolyElement a = scope.generic(phi.map().domain(), "a");
    const PolyElement b = scope.generic(phi.map().domain(), "b");
    const auto at_one = [&](const PolyElement& x) {
        auto total = PolyElement::zero(phi.map().codomain());
        for (const auto& c : psi_sequence(phi.map(), x, phi.n()))
            total += c;
        return total;
    };
    const PolyElement diff = at_one(a) * at_one(b) - at_one(a + b + a * b);
    if (!diff.is_zero())
        return IdentityCheck::fail("R(a,1) R(b,1) - R(a+b+ab,1)", diff);
    return IdentityCheck::pass();
}

} // namespace frobenia
