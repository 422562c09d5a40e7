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

#ifndef FROBENIA_PQ_HPP
#define FROBENIA_PQ_HPP

// Maps whose characteristic function is a ratio of polynomials of degrees p
// and q, and the algebra S^{p|q}A together with a point-set model of it.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "frobenia/linmap.hpp"
#include "frobenia/sympower.hpp"
#include "frobenia/tensor.hpp"

namespace frobenia {

struct PqCandidate {
    enum class Status { certified_up_to_k_max, refuted };

    std::size_t p = 0, q = 0;
    Element chi;
    std::int64_t k_min = 0; // p - q + 1
    std::int64_t k_max = 0;
    Status status = Status::refuted;
    std::optional<std::int64_t> refuted_at; // unset for a refutation at the χ stage
    std::optional<PolyElement> witness;     // nonzero Hankel determinant, or χ - (p-q)
    std::string reason;

    bool certified() const noexcept { return status == Status::certified_up_to_k_max; }
};

const char* to_string(PqCandidate::Status s);

/// Checks φ(1) = (p - q)·1 and that det[ψ_{k+i+j}(a)]_{0<=i,j<=q} vanishes
/// for a generic a and every k in [p - q + 1, k_max]; ψ_j = 0 for j < 0.
PqCandidate hankel_check(const LinMap& phi, std::size_t p, std::size_t q, std::int64_t k_max);

/// Certified (p, q) with p - q = χ, p <= p_max, q <= q_max, ordered by p + q.
/// Empty when χ is not an integer multiple of the unit.
std::vector<PqCandidate> classify_pq(const LinMap& phi, std::size_t p_max, std::size_t q_max, std::int64_t k_max);

/// a ↦ sum_{i in plus} a(x_i) - sum_{j in minus} a(x_j) on functions on m
/// points; indices are 0-based.
LinMap ev_pq(std::size_t m, const std::vector<std::size_t>& plus, const std::vector<std::size_t>& minus);

/// S^pA ⊗ S^qA → S^{p-1}A ⊗ S^{q-1}A ⊗ A multiplying the last tensor factor of
/// each block (p, q >= 1). Bases are products of the e_M bases, left block
/// most significant.
LinMap mu_map(const AlgebraPtr& a, std::size_t p, std::size_t q);

struct PqSymPower {
    AlgebraPtr base;
    std::size_t p = 0, q = 0;
    AlgebraPtr ambient; // S^pA ⊗ S^qA
    Matrix basis;       // columns in ambient coordinates
    TensorShape tensor; // A^{⊗(p+q)}
    ColumnBasis embedding; // the basis columns pushed into A^{⊗(p+q)}
    AlgebraPtr algebra;
};

/// The preimage under μ of S^{p-1}A ⊗ S^{q-1}A ⊗ 1. Requires p >= 1; q = 0
/// gives S^pA. Closure and the unit are verified; a failure throws
/// std::logic_error.
PqSymPower sym_pq_power(const AlgebraPtr& a, std::size_t p, std::size_t q);

/// Functions on the identification space of X^p × X^q (|X| = m) under
/// S_p × S_q and the gluing of the last coordinates of the two blocks.
struct PqOracle {
    std::size_t m = 0, p = 0, q = 0;
    std::vector<std::vector<std::size_t>> classes; // tuples by flat index
    std::vector<std::size_t> class_of;             // flat tuple index -> class
    AlgebraPtr algebra;                            // basis: class indicators

    /// Coordinates in the indicator basis of a function on [m]^{p+q}, or
    /// nullopt if it is not constant on classes.
    std::optional<std::vector<Rational>> coordinates(std::span<const Rational> v) const;
};

/// Default limit on m^{p+q}, overridable by FROBENIA_MAX_TUPLES.
std::size_t max_oracle_tuples();

/// Throws std::length_error when m^{p+q} exceeds `max_tuples`.
PqOracle sym_pq_oracle(std::size_t m, std::size_t p, std::size_t q, std::size_t max_tuples = max_oracle_tuples());

struct PqComparison {
    bool same_dimension = false;
    bool same_subspace = false;
    bool isomorphic = false;
    std::optional<LinMap> isomorphism; // S^{p|q} → oracle, when same_subspace
    std::string detail;

    explicit operator bool() const noexcept { return same_dimension && same_subspace && isomorphic; }
};

/// Compares both constructions inside the common space Q^{m^{p+q}}; requires
/// the base of `s` to be functions on m points.
PqComparison compare_with_oracle(const PqSymPower& s, const PqOracle& o);

} // namespace frobenia

#endif
