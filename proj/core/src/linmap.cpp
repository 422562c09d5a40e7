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

#include "frobenia/linmap.hpp"

namespace frobenia {

LinMap::LinMap(AlgebraPtr domain, AlgebraPtr codomain, Matrix matrix)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix))
{
    if (!domain_ || !codomain_)
        throw std::invalid_argument("linear map needs a domain and a codomain");
    if (matrix_.rows() != codomain_->dim() || matrix_.cols() != domain_->dim())
        throw std::invalid_argument("map matrix must be " + std::to_string(codomain_->dim()) + "x" +
                                    std::to_string(domain_->dim()) + ", got " + std::to_string(matrix_.rows()) +
                                    "x" + std::to_string(matrix_.cols()));
}

LinMap LinMap::zero(const AlgebraPtr& domain, const AlgebraPtr& codomain)
{
    return {domain, codomain, Matrix(codomain->dim(), domain->dim())};
}

LinMap LinMap::identity(const AlgebraPtr& a) { return {a, a, Matrix::identity(a->dim())}; }

namespace {

void check_parallel(const LinMap& a, const LinMap& b)
{
    if (!same_algebra(a.domain(), b.domain()) || !same_algebra(a.codomain(), b.codomain()))
        throw std::invalid_argument("maps have different domains or codomains");
}

} // namespace

LinMap operator+(const LinMap& a, const LinMap& b)
{
    check_parallel(a, b);
    return {a.domain_, a.codomain_, a.matrix_ + b.matrix_};
}

LinMap operator-(const LinMap& a, const LinMap& b)
{
    check_parallel(a, b);
    return {a.domain_, a.codomain_, a.matrix_ - b.matrix_};
}

LinMap operator*(const Rational& c, const LinMap& a) { return {a.domain_, a.codomain_, c * a.matrix_}; }

bool operator==(const LinMap& a, const LinMap& b)
{
    return same_algebra(a.domain_, b.domain_) && same_algebra(a.codomain_, b.codomain_) && a.matrix_ == b.matrix_;
}

LinMap compose(const LinMap& phi, const LinMap& gamma)
{
    if (!same_algebra(gamma.codomain(), phi.domain()))
        throw std::invalid_argument("cannot compose: codomain of the inner map is not the domain of the outer map");
    return {gamma.domain(), phi.codomain(), phi.matrix() * gamma.matrix()};
}

Element value_at_unit(const LinMap& phi) { return phi(Element::one(phi.domain())); }

} // namespace frobenia
