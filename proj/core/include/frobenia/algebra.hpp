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

#ifndef FROBENIA_ALGEBRA_HPP
#define FROBENIA_ALGEBRA_HPP

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "frobenia/rational.hpp"

namespace frobenia {

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Finite-dimensional commutative unital algebra over the rationals, given by
/// structure constants e_i * e_j = sum_k c[i][j][k] e_k.
///
/// Algebras are immutable once created and always handled through AlgebraPtr.
/// Creation does not enforce the axioms; see validate_algebra.
class Algebra {
public:
    using ProductTerm = std::pair<std::size_t, Rational>;

    /// `constants` is the flattened c[i][j][k] at index (i*dim + j)*dim + k.
    static AlgebraPtr create(std::string label, std::vector<Rational> unit, std::vector<Rational> constants);

    std::size_t dim() const noexcept { return dim_; }
    const std::string& label() const noexcept { return label_; }
    const std::vector<Rational>& unit() const noexcept { return unit_; }
    const Rational& constant(std::size_t i, std::size_t j, std::size_t k) const
    {
        return constants_[(i * dim_ + j) * dim_ + k];
    }
    const std::vector<Rational>& constants() const noexcept { return constants_; }
    /// Nonzero entries of e_i * e_j.
    std::span<const ProductTerm> product(std::size_t i, std::size_t j) const noexcept
    {
        return table_[i * dim_ + j];
    }

    /// Same dimension, unit and structure constants (labels are ignored).
    bool same_structure(const Algebra& other) const;

private:
    Algebra() = default;

    std::string label_;
    std::size_t dim_ = 0;
    std::vector<Rational> unit_;
    std::vector<Rational> constants_;
    std::vector<std::vector<ProductTerm>> table_;
};

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

struct AxiomViolation {
    std::string axiom; // "commutativity", "associativity" or "unit"
    std::vector<std::size_t> indices;
    Rational lhs;
    Rational rhs;
};

/// Empty iff the algebra is commutative, associative and `unit` is a unit.
std::vector<AxiomViolation> validate_algebra(const Algebra& a);

/// Functions on m points with the pointwise product; e_i are the point indicators.
AlgebraPtr function_algebra(std::size_t m);

/// Q[x]/(f) in the basis 1, x, ..., x^{d-1}. Coefficients are listed from the
/// constant term up, so a monic f of degree d has f.back() == 1.
AlgebraPtr quotient_algebra(const std::vector<Rational>& f);

/// A ⊗ B with flat index i * right_dim + j for e_i ⊗ f_j.
struct TensorProduct {
    AlgebraPtr algebra;
    std::size_t left_dim = 0;
    std::size_t right_dim = 0;

    std::size_t index(std::size_t i, std::size_t j) const noexcept { return i * right_dim + j; }
};

TensorProduct tensor_product(const AlgebraPtr& a, const AlgebraPtr& b);

/// A^{⊗n} (Q for n = 0), with flat index of (i_1,...,i_n) in mixed radix (i_1 most significant).
AlgebraPtr tensor_power(const AlgebraPtr& a, std::size_t n);

} // namespace frobenia

#endif
