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

#include "frobenia/element.hpp"

#include <cctype>

namespace frobenia {

PolyElement lift(const Element& e)
{
    std::vector<Poly> c;
    c.reserve(e.dim());
    for (const auto& x : e.coords())
        c.emplace_back(x);
    return {e.algebra(), std::move(c)};
}

Element evaluate(const PolyElement& e, const std::unordered_map<VarId, Rational>& values)
{
    std::vector<Rational> c;
    c.reserve(e.dim());
    for (const auto& p : e.coords()) {
        Poly q = p.substitute(values);
        if (!q.is_constant())
            throw std::invalid_argument("evaluation left free indeterminates: " + q.to_string());
        c.push_back(q.constant_term());
    }
    return {e.algebra(), std::move(c)};
}

PolyElement substitute(const PolyElement& e, const std::unordered_map<VarId, Rational>& values)
{
    std::vector<Poly> c;
    c.reserve(e.dim());
    for (const auto& p : e.coords())
        c.push_back(p.substitute(values));
    return {e.algebra(), std::move(c)};
}

Matrix multiplication_matrix(const Element& a)
{
    const Algebra& alg = *a.algebra();
    const std::size_t n = alg.dim();
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(a[i]) == 0)
            continue;
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& [k, c] : alg.product(i, j))
                m(k, j) += a[i] * c;
    }
    return m;
}

std::optional<Element> invert(const Element& a)
{
    auto x = solve(multiplication_matrix(a), a.algebra()->unit());
    if (!x)
        return std::nullopt;
    Element inv(a.algebra(), std::move(*x));
    if (!(inv * a == Element::one(a.algebra())))
        return std::nullopt;
    return inv;
}

PolyElement SymbolScope::generic(const AlgebraPtr& a, std::string_view tag)
{
    if (tag.empty() || !std::isalpha(static_cast<unsigned char>(tag.front())))
        throw std::invalid_argument("indeterminate tag must start with a letter");
    for (char ch : tag)
        if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_')
            throw std::invalid_argument("indeterminate tag may only contain letters, digits and '_'");
    if (!tags_.emplace(tag).second)
        throw std::invalid_argument("indeterminate tag '" + std::string(tag) + "' already in use");
    std::vector<Poly> c;
    c.reserve(a->dim());
    for (std::size_t i = 0; i < a->dim(); ++i)
        c.push_back(Poly::variable(std::string(tag) + "_" + std::to_string(i + 1)));
    return {a, std::move(c)};
}

std::string to_string(const Element& e)
{
    std::string s = "(";
    for (std::size_t i = 0; i < e.dim(); ++i)
        s += (i ? ", " : "") + to_string(e[i]);
    return s + ")";
}

std::string to_string(const PolyElement& e)
{
    std::string s = "(";
    for (std::size_t i = 0; i < e.dim(); ++i)
        s += (i ? ", " : "") + e[i].to_string();
    return s + ")";
}

} // namespace frobenia
