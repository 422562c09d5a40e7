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

#ifndef FROBENIA_ELEMENT_HPP
#define FROBENIA_ELEMENT_HPP

#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "frobenia/algebra.hpp"
#include "frobenia/linalg.hpp"
#include "frobenia/poly.hpp"

namespace frobenia {

/// Element of an Algebra in the e_i basis. With S = Poly the coordinates are
/// polynomials in formal indeterminates, which is how "for all a" identities
/// become data equalities.
template <Scalar S>
class BasicElement {
public:
    BasicElement() = default;
    BasicElement(AlgebraPtr algebra, std::vector<S> coords) : algebra_(std::move(algebra)), coords_(std::move(coords))
    {
        if (!algebra_)
            throw std::invalid_argument("element without algebra");
        if (coords_.size() != algebra_->dim())
            throw std::invalid_argument("coordinate vector length differs from algebra dimension");
    }

    static BasicElement zero(const AlgebraPtr& a) { return {a, std::vector<S>(a->dim())}; }
    static BasicElement one(const AlgebraPtr& a)
    {
        std::vector<S> c(a->dim());
        for (std::size_t i = 0; i < c.size(); ++i)
            c[i] = S(a->unit()[i]);
        return {a, std::move(c)};
    }
    static BasicElement basis(const AlgebraPtr& a, std::size_t i)
    {
        auto e = zero(a);
        e.coords_.at(i) = S(1);
        return e;
    }

    const AlgebraPtr& algebra() const noexcept { return algebra_; }
    std::size_t dim() const noexcept { return coords_.size(); }
    const std::vector<S>& coords() const noexcept { return coords_; }
    const S& operator[](std::size_t i) const { return coords_[i]; }

    bool is_zero() const
    {
        for (const auto& c : coords_)
            if (!frobenia::is_zero(c))
                return false;
        return true;
    }

    BasicElement& operator+=(const BasicElement& o)
    {
        check_same(o);
        for (std::size_t i = 0; i < coords_.size(); ++i)
            coords_[i] += o.coords_[i];
        return *this;
    }
    BasicElement& operator-=(const BasicElement& o)
    {
        check_same(o);
        for (std::size_t i = 0; i < coords_.size(); ++i)
            coords_[i] -= o.coords_[i];
        return *this;
    }
    BasicElement& operator*=(const Rational& c)
    {
        for (auto& x : coords_)
            x *= c;
        return *this;
    }

    friend BasicElement operator+(BasicElement a, const BasicElement& b) { return a += b; }
    friend BasicElement operator-(BasicElement a, const BasicElement& b) { return a -= b; }
    friend BasicElement operator-(BasicElement a)
    {
        for (auto& x : a.coords_)
            x = -x;
        return a;
    }
    friend BasicElement operator*(const Rational& c, BasicElement a) { return a *= c; }
    friend BasicElement operator*(BasicElement a, const Rational& c) { return a *= c; }

    /// Multiplies every coordinate by a scalar of the coordinate type.
    BasicElement scaled(const S& s) const
    {
        BasicElement r = *this;
        for (auto& x : r.coords_)
            x = x * s;
        return r;
    }

    /// Algebra product via the structure constants.
    friend BasicElement operator*(const BasicElement& a, const BasicElement& b)
    {
        a.check_same(b);
        const Algebra& alg = *a.algebra_;
        std::vector<S> out(alg.dim());
        const std::size_t n = alg.dim();
        for (std::size_t i = 0; i < n; ++i) {
            if (frobenia::is_zero(a.coords_[i]))
                continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (frobenia::is_zero(b.coords_[j]))
                    continue;
                const auto terms = alg.product(i, j);
                if (terms.empty())
                    continue;
                const S prod = a.coords_[i] * b.coords_[j];
                for (const auto& [k, c] : terms) {
                    if (c == 1)
                        out[k] += prod;
                    else
                        out[k] += prod * c;
                }
            }
        }
        return {a.algebra_, std::move(out)};
    }

    friend bool operator==(const BasicElement& a, const BasicElement& b)
    {
        return same_algebra(a.algebra_, b.algebra_) && a.coords_ == b.coords_;
    }

    void check_same(const BasicElement& o) const
    {
        if (!same_algebra(algebra_, o.algebra_))
            throw std::invalid_argument("elements belong to different algebras");
    }

private:
    AlgebraPtr algebra_;
    std::vector<S> coords_;
};

using Element = BasicElement<Rational>;
using PolyElement = BasicElement<Poly>;

inline bool is_zero(const Element& e) { return e.is_zero(); }
inline bool is_zero(const PolyElement& e) { return e.is_zero(); }

/// a^k by repeated multiplication; a^0 is the unit.
template <Scalar S>
BasicElement<S> pow(const BasicElement<S>& a, unsigned k)
{
    auto r = BasicElement<S>::one(a.algebra());
    for (unsigned i = 0; i < k; ++i)
        r = r * a;
    return r;
}

PolyElement lift(const Element& e);

/// Replaces assigned indeterminates; the result must be fully numeric.
Element evaluate(const PolyElement& e, const std::unordered_map<VarId, Rational>& values);
PolyElement substitute(const PolyElement& e, const std::unordered_map<VarId, Rational>& values);

/// Matrix of b ↦ a*b in the e_i basis.
Matrix multiplication_matrix(const Element& a);

/// a^{-1}, or nullopt when multiplication by a is singular (a is a zero divisor).
std::optional<Element> invert(const Element& a);

/// Issues generic elements with disjoint indeterminates.
///
/// generic(A, "a") has coordinates a_1, ..., a_dim. A scope refuses to reuse a
/// tag, so two generic elements from one scope never share an indeterminate.
class SymbolScope {
public:
    PolyElement generic(const AlgebraPtr& a, std::string_view tag);
    bool contains(std::string_view tag) const { return tags_.count(std::string(tag)) != 0; }

private:
    std::set<std::string, std::less<>> tags_;
};

std::string to_string(const Element& e);
std::string to_string(const PolyElement& e);

} // namespace frobenia

#endif
