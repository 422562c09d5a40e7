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

#ifndef FROBENIA_CHARFN_HPP
#define FROBENIA_CHARFN_HPP

// The characteristic function R_φ(a, z) = exp φ(log(1 + a z)) of a linear map
// φ: A → B, with coefficients ψ_k(a) in B. Two independent routes compute it:
// the direct composition of truncated series, and the Newton-type recurrence
// obtained by differentiating in z.

#include <cstddef>
#include <string>
#include <vector>

#include "frobenia/check.hpp"
#include "frobenia/linmap.hpp"
#include "frobenia/series.hpp"

namespace frobenia {

/// exp(φ(log(1 + a z))) by composing truncated series.
template <Scalar S>
TruncSeries<S> char_series_direct(const LinMap& phi, const BasicElement<S>& a, std::size_t order)
{
    TruncSeries<S> az(a.algebra(), order);
    if (order >= 1)
        az[1] = a;
    return series_exp(map_coefficients(phi, series_log1p(az)));
}

/// ψ_0 = 1, (k+1) ψ_{k+1} = sum_{j=0}^{k} (-1)^j φ(a^{j+1}) ψ_{k-j}.
template <Scalar S>
TruncSeries<S> char_series_newton(const LinMap& phi, const BasicElement<S>& a, std::size_t order)
{
    std::vector<BasicElement<S>> power_values; // φ(a^{j+1})
    power_values.reserve(order);
    auto p = a;
    for (std::size_t j = 0; j < order; ++j) {
        if (j > 0)
            p = p * a;
        power_values.push_back(phi(p));
    }
    auto psi = TruncSeries<S>::one(phi.codomain(), order);
    for (std::size_t k = 0; k < order; ++k) {
        auto acc = BasicElement<S>::zero(phi.codomain());
        for (std::size_t j = 0; j <= k; ++j) {
            if (psi[k - j].is_zero() || power_values[j].is_zero())
                continue;
            if (j % 2 == 0)
                acc += power_values[j] * psi[k - j];
            else
                acc -= power_values[j] * psi[k - j];
        }
        acc *= Rational(1, static_cast<unsigned long>(k + 1));
        psi[k + 1] = std::move(acc);
    }
    return psi;
}

/// ψ_k(a), the z^k coefficient of the characteristic function.
template <Scalar S>
BasicElement<S> psi(const LinMap& phi, std::size_t k, const BasicElement<S>& a)
{
    return char_series_newton(phi, a, k)[k];
}

/// ψ_0 .. ψ_order (Newton route), as a plain vector.
template <Scalar S>
std::vector<BasicElement<S>> psi_sequence(const LinMap& phi, const BasicElement<S>& a, std::size_t order)
{
    return char_series_newton(phi, a, order).coeffs();
}

/// R(a, z) R(a', w) = R(a z + a' w + a a' z w, 1), both sides expanded in
/// (z, w) up to total degree `order`.
template <Scalar S>
IdentityCheck verify_ident1(const LinMap& phi, const BasicElement<S>& a, const BasicElement<S>& a2, std::size_t order)
{
    const auto r1 = char_series_direct(phi, a, order);
    const auto r2 = char_series_direct(phi, a2, order);
    BiTruncSeries<S> lhs(phi.codomain(), order);
    for (std::size_t k = 0; k <= order; ++k)
        for (std::size_t l = 0; k + l <= order; ++l)
            lhs.at(k, l) = r1[k] * r2[l];

    BiTruncSeries<S> arg(phi.domain(), order);
    if (order >= 1) {
        arg.at(1, 0) = a;
        arg.at(0, 1) = a2;
    }
    if (order >= 2)
        arg.at(1, 1) = a * a2;
    const auto rhs = series_exp(map_coefficients(phi, series_log1p(arg)));

    for (std::size_t d = 0; d <= order; ++d)
        for (std::size_t k = 0; k <= d; ++k) {
            const std::size_t l = d - k;
            if (!(lhs.at(k, l) == rhs.at(k, l)))
                return IdentityCheck::fail("z^" + std::to_string(k) + " w^" + std::to_string(l),
                                           as_poly(lhs.at(k, l) - rhs.at(k, l)));
        }
    return IdentityCheck::pass();
}

/// R_{φ+γ}(a, z) = R_φ(a, z) R_γ(a, z) up to z^order.
template <Scalar S>
IdentityCheck verify_exp_property(const LinMap& phi, const LinMap& gamma, const BasicElement<S>& a, std::size_t order)
{
    const auto sum = char_series_direct(phi + gamma, a, order);
    const auto prod = char_series_direct(phi, a, order) * char_series_direct(gamma, a, order);
    for (std::size_t k = 0; k <= order; ++k)
        if (!(sum[k] == prod[k]))
            return IdentityCheck::fail("z^" + std::to_string(k), as_poly(sum[k] - prod[k]));
    return IdentityCheck::pass();
}

/// Coefficientwise comparison of the two routes.
template <Scalar S>
IdentityCheck compare_routes(const LinMap& phi, const BasicElement<S>& a, std::size_t order)
{
    const auto direct = char_series_direct(phi, a, order);
    const auto newton = char_series_newton(phi, a, order);
    for (std::size_t k = 0; k <= order; ++k)
        if (!(direct[k] == newton[k]))
            return IdentityCheck::fail("z^" + std::to_string(k), as_poly(direct[k] - newton[k]));
    return IdentityCheck::pass();
}

} // namespace frobenia

#endif
