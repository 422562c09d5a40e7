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

#include "frobenia/tensor.hpp"

#include <limits>

namespace frobenia {

TensorShape::TensorShape(AlgebraPtr base, std::size_t slots) : base_(std::move(base)), slots_(slots)
{
    if (!base_)
        throw std::invalid_argument("tensor shape without base algebra");
    const std::size_t d = base_->dim();
    for (std::size_t s = 0; s < slots_; ++s) {
        if (d != 0 && dim_ > std::numeric_limits<std::size_t>::max() / d)
            throw std::length_error("tensor power dimension overflows");
        dim_ *= d;
    }
}

std::size_t TensorShape::flat(std::span<const std::size_t> digits) const
{
    if (digits.size() != slots_)
        throw std::invalid_argument("tensor index has wrong number of slots");
    std::size_t f = 0;
    for (const auto i : digits) {
        if (i >= base_->dim())
            throw std::out_of_range("tensor index digit out of range");
        f = f * base_->dim() + i;
    }
    return f;
}

std::vector<std::size_t> TensorShape::digits(std::size_t flat) const
{
    std::vector<std::size_t> d(slots_);
    for (std::size_t s = slots_; s-- > 0;) {
        d[s] = flat % base_->dim();
        flat /= base_->dim();
    }
    return d;
}

std::vector<Rational> TensorShape::unit() const
{
    const auto& u = base_->unit();
    std::vector<Rational> out(dim_);
    for (std::size_t f = 0; f < dim_; ++f) {
        Rational c = 1;
        for (const auto i : digits(f))
            c *= u[i];
        out[f] = c;
    }
    return out;
}

void TensorShape::check_base(const AlgebraPtr& a) const
{
    if (!same_algebra(a, base_))
        throw std::invalid_argument("element is not in the base algebra of the tensor power");
}

} // namespace frobenia
