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

#ifndef FROBENIA_SERIES_HPP
#define FROBENIA_SERIES_HPP

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "frobenia/element.hpp"
#include "frobenia/linmap.hpp"

namespace frobenia {

/// Power series in z with algebra-valued coefficients, truncated at z^order.
template <Scalar S>
class TruncSeries {
public:
    using Coeff = BasicElement<S>;

    TruncSeries(AlgebraPtr algebra, std::size_t order)
        : algebra_(std::move(algebra)), coeffs_(order + 1, Coeff::zero(algebra_))
    {
    }
    explicit TruncSeries(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs))
    {
        if (coeffs_.empty())
            throw std::invalid_argument("series needs at least one coefficient");
        algebra_ = coeffs_.front().algebra();
        for (const auto& c : coeffs_)
            if (!same_algebra(c.algebra(), algebra_))
                throw std::invalid_argument("series coefficients from different algebras");
    }

    static TruncSeries one(const AlgebraPtr& a, std::size_t order)
    {
        TruncSeries s(a, order);
        s.coeffs_[0] = Coeff::one(a);
        return s;
    }

    const AlgebraPtr& algebra() const noexcept { return algebra_; }
    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const Coeff& operator[](std::size_t k) const { return coeffs_.at(k); }
    Coeff& operator[](std::size_t k) { return coeffs_.at(k); }
    const std::vector<Coeff>& coeffs() const noexcept { return coeffs_; }
    bool constant_is_zero() const { return coeffs_[0].is_zero(); }

    TruncSeries& operator+=(const TruncSeries& o)
    {
        check(o);
        for (std::size_t k = 0; k < coeffs_.size(); ++k)
            coeffs_[k] += o.coeffs_[k];
        return *this;
    }
    TruncSeries& operator*=(const Rational& c)
    {
        for (auto& x : coeffs_)
            x *= c;
        return *this;
    }
    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator*(const Rational& c, TruncSeries a) { return a *= c; }

    /// Cauchy product truncated at the common order.
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b)
    {
        a.check(b);
        TruncSeries r(a.algebra_, a.order());
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero())
                continue;
            for (std::size_t j = 0; i + j < a.coeffs_.size(); ++j)
                if (!b.coeffs_[j].is_zero())
                    r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return r;
    }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.coeffs_ == b.coeffs_; }

private:
    void check(const TruncSeries& o) const
    {
        if (o.coeffs_.size() != coeffs_.size())
            throw std::invalid_argument("series truncated at different orders");
        if (!same_algebra(o.algebra_, algebra_))
            throw std::invalid_argument("series over different algebras");
    }

    AlgebraPtr algebra_;
    std::vector<Coeff> coeffs_;
};

/// Power series in (z, w) truncated at total degree `order`; coefficient (k, l)
/// multiplies z^k w^l.
template <Scalar S>
class BiTruncSeries {
public:
    using Coeff = BasicElement<S>;

    BiTruncSeries(AlgebraPtr algebra, std::size_t order)
        : algebra_(std::move(algebra)), order_(order), coeffs_((order + 1) * (order + 2) / 2, Coeff::zero(algebra_))
    {
    }

    static BiTruncSeries one(const AlgebraPtr& a, std::size_t order)
    {
        BiTruncSeries s(a, order);
        s.at(0, 0) = Coeff::one(a);
        return s;
    }

    const AlgebraPtr& algebra() const noexcept { return algebra_; }
    std::size_t order() const noexcept { return order_; }
    Coeff& at(std::size_t k, std::size_t l) { return coeffs_.at(index(k, l)); }
    const Coeff& at(std::size_t k, std::size_t l) const { return coeffs_.at(index(k, l)); }
    bool constant_is_zero() const { return coeffs_[0].is_zero(); }

    BiTruncSeries& operator+=(const BiTruncSeries& o)
    {
        check(o);
        for (std::size_t k = 0; k < coeffs_.size(); ++k)
            coeffs_[k] += o.coeffs_[k];
        return *this;
    }
    BiTruncSeries& operator*=(const Rational& c)
    {
        for (auto& x : coeffs_)
            x *= c;
        return *this;
    }
    friend BiTruncSeries operator+(BiTruncSeries a, const BiTruncSeries& b) { return a += b; }
    friend BiTruncSeries operator*(const Rational& c, BiTruncSeries a) { return a *= c; }

    friend BiTruncSeries operator*(const BiTruncSeries& a, const BiTruncSeries& b)
    {
        a.check(b);
        const std::size_t d = a.order_;
        BiTruncSeries r(a.algebra_, d);
        for (std::size_t k1 = 0; k1 <= d; ++k1)
            for (std::size_t l1 = 0; k1 + l1 <= d; ++l1) {
                const auto& x = a.at(k1, l1);
                if (x.is_zero())
                    continue;
                for (std::size_t k2 = 0; k1 + l1 + k2 <= d; ++k2)
                    for (std::size_t l2 = 0; k1 + l1 + k2 + l2 <= d; ++l2) {
                        const auto& y = b.at(k2, l2);
                        if (!y.is_zero())
                            r.at(k1 + k2, l1 + l2) += x * y;
                    }
            }
        return r;
    }

    friend bool operator==(const BiTruncSeries& a, const BiTruncSeries& b) { return a.coeffs_ == b.coeffs_; }

private:
    // Row-major over the triangle k + l <= order.
    std::size_t index(std::size_t k, std::size_t l) const
    {
        if (k + l > order_)
            throw std::out_of_range("bivariate coefficient beyond truncation order");
        return k * (order_ + 1) - k * (k - 1) / 2 + l;
    }

    void check(const BiTruncSeries& o) const
    {
        if (o.order_ != order_)
            throw std::invalid_argument("series truncated at different orders");
        if (!same_algebra(o.algebra_, algebra_))
            throw std::invalid_argument("series over different algebras");
    }

    AlgebraPtr algebra_;
    std::size_t order_;
    std::vector<Coeff> coeffs_;
};

namespace detail {

template <class Series>
Series unit_like(const Series& s)
{
    return Series::one(s.algebra(), s.order());
}

} // namespace detail

/// exp(s) = sum_m s^m / m!; requires a zero constant term.
template <class Series>
Series series_exp(const Series& s)
{
    if (!s.constant_is_zero())
        throw std::invalid_argument("exp of a series with nonzero constant term");
    Series result = detail::unit_like(s);
    Series term = result;
    for (std::size_t m = 1; m <= s.order(); ++m) {
        term = term * s;
        term *= Rational(1, static_cast<unsigned long>(m));
        result += term;
    }
    return result;
}

/// log(1 + s) = sum_m (-1)^{m+1} s^m / m; requires a zero constant term.
template <class Series>
Series series_log1p(const Series& s)
{
    if (!s.constant_is_zero())
        throw std::invalid_argument("log1p of a series with nonzero constant term");
    Series result(s.algebra(), s.order());
    Series power = detail::unit_like(s);
    for (std::size_t m = 1; m <= s.order(); ++m) {
        power = power * s;
        Rational c(m % 2 == 1 ? 1 : -1, static_cast<unsigned long>(m));
        result += c * power;
    }
    return result;
}

/// Applies a linear map coefficientwise.
template <Scalar S>
TruncSeries<S> map_coefficients(const LinMap& phi, const TruncSeries<S>& s)
{
    std::vector<BasicElement<S>> c;
    c.reserve(s.order() + 1);
    for (const auto& x : s.coeffs())
        c.push_back(phi(x));
    return TruncSeries<S>(std::move(c));
}

template <Scalar S>
BiTruncSeries<S> map_coefficients(const LinMap& phi, const BiTruncSeries<S>& s)
{
    BiTruncSeries<S> r(phi.codomain(), s.order());
    for (std::size_t k = 0; k <= s.order(); ++k)
        for (std::size_t l = 0; k + l <= s.order(); ++l)
            r.at(k, l) = phi(s.at(k, l));
    return r;
}

} // namespace frobenia

#endif
