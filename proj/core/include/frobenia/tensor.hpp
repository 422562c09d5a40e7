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

#ifndef FROBENIA_TENSOR_HPP
#define FROBENIA_TENSOR_HPP

// Coordinates on A^{⊗n} without materializing its structure constants:
// products are computed slot by slot from those of A. Flat indices are
// mixed-radix with slot 0 as the most significant digit, matching
// tensor_power().

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "frobenia/algebra.hpp"
#include "frobenia/element.hpp"

namespace frobenia {

class TensorShape {
public:
    TensorShape() = default;
    TensorShape(AlgebraPtr base, std::size_t slots);

    const AlgebraPtr& base() const noexcept { return base_; }
    std::size_t slots() const noexcept { return slots_; }
    /// dim(A)^slots.
    std::size_t dim() const noexcept { return dim_; }

    std::size_t flat(std::span<const std::size_t> digits) const;
    std::vector<std::size_t> digits(std::size_t flat) const;

    /// Coordinates of 1 ⊗ ... ⊗ 1.
    std::vector<Rational> unit() const;

    /// Coordinates of 1 ⊗ ... ⊗ a ⊗ ... ⊗ 1 with a in `slot`.
    template <Scalar S>
    std::vector<S> slot_element(std::size_t slot, const BasicElement<S>& a) const;

    /// Product in A^{⊗n}.
    template <Scalar S>
    std::vector<S> multiply(std::span<const S> x, std::span<const S> y) const;

private:
    void check_base(const AlgebraPtr& a) const;

    AlgebraPtr base_;
    std::size_t slots_ = 0;
    std::size_t dim_ = 1;
};

template <Scalar S>
std::vector<S> TensorShape::slot_element(std::size_t slot, const BasicElement<S>& a) const
{
    check_base(a.algebra());
    if (slot >= slots_)
        throw std::out_of_range("tensor slot out of range");
    const auto& unit = base_->unit();
    std::vector<S> out(dim_);
    for (std::size_t f = 0; f < dim_; ++f) {
        const auto d = digits(f);
        Rational u = 1;
        for (std::size_t s = 0; s < slots_ && sgn(u) != 0; ++s)
            if (s != slot)
                u *= unit[d[s]];
        if (sgn(u) != 0 && !is_zero(a[d[slot]]))
            out[f] = a[d[slot]] * u;
    }
    return out;
}

template <Scalar S>
std::vector<S> TensorShape::multiply(std::span<const S> x, std::span<const S> y) const
{
    if (x.size() != dim_ || y.size() != dim_)
        throw std::invalid_argument("tensor coordinate vector has wrong length");
    const std::size_t d = base_->dim();
    std::vector<S> out(dim_);
    std::vector<std::pair<std::size_t, Rational>> cur, next;
    for (std::size_t fi = 0; fi < dim_; ++fi) {
        if (is_zero(x[fi]))
            continue;
        const auto di = digits(fi);
        for (std::size_t fj = 0; fj < dim_; ++fj) {
            if (is_zero(y[fj]))
                continue;
            const auto dj = digits(fj);
            cur.assign(1, {0, Rational(1)});
            for (std::size_t s = 0; s < slots_ && !cur.empty(); ++s) {
                next.clear();
                for (const auto& [flat, c] : cur)
                    for (const auto& [k, ck] : base_->product(di[s], dj[s]))
                        next.emplace_back(flat * d + k, c * ck);
                std::swap(cur, next);
            }
            if (cur.empty())
                continue;
            const S xy = x[fi] * y[fj];
            for (const auto& [flat, c] : cur)
                out[flat] += xy * c;
        }
    }
    return out;
}

} // namespace frobenia

#endif
