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

#ifndef FROBENIA_LINMAP_HPP
#define FROBENIA_LINMAP_HPP

#include <stdexcept>
#include <utility>
#include <vector>

#include "frobenia/algebra.hpp"
#include "frobenia/element.hpp"
#include "frobenia/linalg.hpp"

namespace frobenia {

/// Linear map between algebras, stored as a codomain.dim x domain.dim matrix.
/// Nothing about multiplicativity is assumed.
class LinMap {
public:
    LinMap(AlgebraPtr domain, AlgebraPtr codomain, Matrix matrix);

    static LinMap zero(const AlgebraPtr& domain, const AlgebraPtr& codomain);
    static LinMap identity(const AlgebraPtr& a);

    const AlgebraPtr& domain() const noexcept { return domain_; }
    const AlgebraPtr& codomain() const noexcept { return codomain_; }
    const Matrix& matrix() const noexcept { return matrix_; }

    template <Scalar S>
    BasicElement<S> operator()(const BasicElement<S>& a) const
    {
        if (!same_algebra(a.algebra(), domain_))
            throw std::invalid_argument("element is not in the domain of the map");
        std::vector<S> out(codomain_->dim());
        for (std::size_t j = 0; j < domain_->dim(); ++j) {
            if (is_zero(a[j]))
                continue;
            for (std::size_t i = 0; i < codomain_->dim(); ++i) {
                const Rational& m = matrix_(i, j);
                if (sgn(m) != 0)
                    out[i] += a[j] * m;
            }
        }
        return {codomain_, std::move(out)};
    }

    friend LinMap operator+(const LinMap& a, const LinMap& b);
    friend LinMap operator-(const LinMap& a, const LinMap& b);
    friend LinMap operator*(const Rational& c, const LinMap& a);
    friend bool operator==(const LinMap& a, const LinMap& b);

private:
    AlgebraPtr domain_;
    AlgebraPtr codomain_;
    Matrix matrix_;
};

/// phi ∘ gamma for gamma: A → B and phi: B → C.
LinMap compose(const LinMap& phi, const LinMap& gamma);

/// φ(1), the value χ of the map on the unit.
Element value_at_unit(const LinMap& phi);

} // namespace frobenia

#endif
