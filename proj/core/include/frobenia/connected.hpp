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

#ifndef FROBENIA_CONNECTED_HPP
#define FROBENIA_CONNECTED_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frobenia/algebra.hpp"
#include "frobenia/element.hpp"

namespace frobenia {

/// Univariate polynomial over Q, coefficients from the constant term up.
using UPoly = std::vector<Rational>;

/// Monic minimal polynomial of `a` over Q (Krylov sequence of powers).
UPoly minimal_polynomial(const Element& a);

/// Distinct rational roots. Empty when none exist or the integer coefficients
/// are too large to enumerate divisors (see `complete`).
std::vector<Rational> rational_roots(const UPoly& f, bool* complete = nullptr);

/// f(a) evaluated in the algebra of `a` by Horner's rule.
Element evaluate(const UPoly& f, const Element& a);

/// Basis of the nilradical, computed as the radical of the trace form
/// (a, b) ↦ tr(L_{ab}); the two coincide in characteristic zero.
Matrix nilradical(const AlgebraPtr& a);

/// Outcome of the idempotent search used as the connectedness test.
struct Connectivity {
    enum class Kind { connected_certified, split, inconclusive };

    Kind kind = Kind::inconclusive;
    std::optional<Element> idempotent; // set iff kind == split; e*e == e, e ∉ {0, 1}
    std::size_t radical_dim = 0;
    std::string reason;
};

const char* to_string(Connectivity::Kind k);

/// Searches for a nontrivial idempotent, or certifies that none exists.
///
/// The basis vectors are tried first; then `trials` random elements r (seeded
/// by `seed`). A coprime factorization of the minimal polynomial of r lifts to
/// an idempotent by the Chinese remainder theorem. The algebra is certified
/// local (hence connected) when A/rad(A) is Q, or when the square-free part of
/// the minimal polynomial has degree dim A/rad(A) and is provably irreducible
/// (degree <= 3 without rational roots); anything else is inconclusive.
Connectivity find_idempotent_split(const AlgebraPtr& b, unsigned trials, std::uint64_t seed);

} // namespace frobenia

#endif
