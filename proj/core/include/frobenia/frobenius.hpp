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

#ifndef FROBENIA_FROBENIUS_HPP
#define FROBENIA_FROBENIUS_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "frobenia/charfn.hpp"
#include "frobenia/check.hpp"
#include "frobenia/linmap.hpp"

namespace frobenia {

namespace detail {

/// Evaluates Φ_k on products of subsets of the original arguments. A call is
/// keyed by its ordered tuple of subset masks.
template <Scalar S>
class FrobeniusEvaluator {
public:
    FrobeniusEvaluator(const LinMap& phi, const std::vector<BasicElement<S>>& args) : phi_(phi), args_(args) {}

    BasicElement<S> operator()(const std::vector<std::uint32_t>& blocks)
    {
        if (auto it = memo_.find(blocks); it != memo_.end())
            return it->second;
        BasicElement<S> value = phi_(product(blocks.front()));
        if (blocks.size() > 1) {
            std::vector<std::uint32_t> rest(blocks.begin() + 1, blocks.end());
            value = value * (*this)(rest);
            for (std::size_t j = 0; j < rest.size(); ++j) {
                auto merged = rest;
                merged[j] |= blocks.front();
                value -= (*this)(merged);
            }
        }
        memo_.emplace(blocks, value);
        return value;
    }

private:
    const BasicElement<S>& product(std::uint32_t mask)
    {
        if (auto it = products_.find(mask); it != products_.end())
            return it->second;
        std::optional<BasicElement<S>> p;
        for (std::size_t i = 0; i < args_.size(); ++i)
            if (mask & (1u << i))
                p = p ? *p * args_[i] : args_[i];
        return products_.emplace(mask, std::move(*p)).first->second;
    }

    const LinMap& phi_;
    const std::vector<BasicElement<S>>& args_;
    std::map<std::vector<std::uint32_t>, BasicElement<S>> memo_;
    std::map<std::uint32_t, BasicElement<S>> products_;
};

inline void check_args(std::size_t count)
{
    if (count == 0)
        throw std::invalid_argument("Frobenius form needs at least one argument");
    if (count > 20)
        throw std::invalid_argument("Frobenius form supports at most 20 arguments");
}

} // namespace detail

/// Φ_k(a_1, ..., a_k) by the recursion
/// Φ_{k+1}(a_1, ...) = φ(a_1) Φ_k(a_2, ...) - sum_j Φ_k(a_2, ..., a_1 a_j, ...).
template <Scalar S>
BasicElement<S> frobenius_form(const LinMap& phi, const std::vector<BasicElement<S>>& args)
{
    detail::check_args(args.size());
    for (const auto& a : args)
        if (!same_algebra(a.algebra(), phi.domain()))
            throw std::invalid_argument("Frobenius form argument outside the domain");
    std::vector<std::uint32_t> blocks(args.size());
    for (std::size_t i = 0; i < args.size(); ++i)
        blocks[i] = 1u << i;
    detail::FrobeniusEvaluator<S> eval(phi, args);
    return eval(blocks);
}

/// Φ_k through ψ_k: sum over nonempty I of (-1)^{k+|I|} ψ_k(sum_{i in I} a_i).
template <Scalar S>
BasicElement<S> polarize(const LinMap& phi, std::size_t k, const std::vector<BasicElement<S>>& args)
{
    detail::check_args(args.size());
    if (args.size() != k)
        throw std::invalid_argument("polarization needs exactly k arguments");
    auto total = BasicElement<S>::zero(phi.codomain());
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
        auto s = BasicElement<S>::zero(phi.domain());
        unsigned r = 0;
        for (std::size_t i = 0; i < k; ++i)
            if (mask & (1u << i)) {
                s += args[i];
                ++r;
            }
        const auto value = psi(phi, k, s);
        if ((k + r) % 2 == 0)
            total += value;
        else
            total -= value;
    }
    return total;
}

/// χ(χ - 1)...(χ - k + 1) in the codomain, with χ = φ(1).
Element falling_factorial(const Element& chi, std::size_t k);

struct Classification;
Classification classify_n(const LinMap& phi, std::size_t n_max);

/// A linear map whose n-homomorphism property has been verified symbolically.
/// Only `classify_n` creates one.
class CertifiedNHom {
public:
    const LinMap& map() const noexcept { return map_; }
    std::size_t n() const noexcept { return n_; }

private:
    friend Classification classify_n(const LinMap& phi, std::size_t n_max);
    CertifiedNHom(LinMap map, std::size_t n) : map_(std::move(map)), n_(n) {}

    LinMap map_;
    std::size_t n_;
};

struct Classification {
    enum class Kind { n_hom, not_n_hom, indeterminate_chi };

    Kind kind = Kind::indeterminate_chi;
    std::size_t n = 0;          // meaningful for n_hom
    Element chi;                // φ(1)
    std::optional<Rational> chi_scalar; // χ = c·1 when this is set
    std::optional<PolyElement> witness; // nonzero ψ_{n+1}, when refuted
    std::size_t bound = 0;
    std::optional<CertifiedNHom> certified;
    std::string reason;
};

const char* to_string(Classification::Kind k);

/// Decides whether φ is an n-homomorphism for some 0 <= n <= n_max.
///
/// χ = φ(1) must be an integer multiple n of the unit; then φ is an
/// n-homomorphism iff ψ_{n+1} vanishes on a generic element. An integer χ
/// outside [0, n_max] is refuted by ψ_{n_max+1}(1) = binom(χ, n_max+1) ≠ 0.
Classification classify_n(const LinMap& phi, std::size_t n_max);

/// ber_φ(a) = 1 + ψ_1(a - 1) + ... + ψ_n(a - 1).
template <Scalar S>
BasicElement<S> berezinian(const CertifiedNHom& phi, const BasicElement<S>& a)
{
    const auto shifted = a - BasicElement<S>::one(a.algebra());
    const auto coeffs = psi_sequence(phi.map(), shifted, phi.n());
    auto total = BasicElement<S>::zero(phi.map().codomain());
    for (const auto& c : coeffs)
        total += c;
    return total;
}

/// ber_φ(a) = ψ_n(a) for a generic element a.
IdentityCheck verify_ber_psi_n(const CertifiedNHom& phi);

/// ber_φ(ab) = ber_φ(a) ber_φ(b) for independent generic a, b.
IdentityCheck verify_ber_mult(const CertifiedNHom& phi);

/// R_φ(a, 1) R_φ(b, 1) = R_φ(a + b + ab, 1) for independent generic a, b.
IdentityCheck verify_ident2(const CertifiedNHom& phi);

} // namespace frobenia

#endif
