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

#include "frobenia/sympower.hpp"

#include <algorithm>

namespace frobenia {

std::vector<Multiset> multisets(std::size_t d, std::size_t n)
{
    std::vector<Multiset> out;
    if (d == 0)
        return out;
    Multiset cur(n, 0);
    while (true) {
        out.push_back(cur);
        // Advance the rightmost digit that can grow; reset the tail to it.
        std::size_t pos = n;
        while (pos > 0 && cur[pos - 1] == d - 1)
            --pos;
        if (pos == 0)
            break;
        const std::size_t v = cur[pos - 1] + 1;
        std::fill(cur.begin() + static_cast<std::ptrdiff_t>(pos - 1), cur.end(), v);
    }
    return out;
}

std::string to_string(const Multiset& m)
{
    std::string s = "{";
    for (std::size_t i = 0; i < m.size(); ++i)
        s += (i ? "," : "") + std::to_string(m[i]);
    return s + "}";
}

std::size_t SymPower::index_of(const Multiset& m) const
{
    Multiset sorted = m;
    std::sort(sorted.begin(), sorted.end());
    const auto it = std::lower_bound(basis_multisets.begin(), basis_multisets.end(), sorted);
    if (it == basis_multisets.end() || *it != sorted)
        throw std::out_of_range("multiset " + to_string(m) + " is not a basis index");
    return static_cast<std::size_t>(it - basis_multisets.begin());
}

SymPower sym_power(const AlgebraPtr& a, std::size_t n)
{
    if (n == 0)
        throw std::invalid_argument("symmetric power needs n >= 1");
    SymPower sp;
    sp.base = a;
    sp.n = n;
    sp.ambient = TensorShape(a, n);
    sp.basis_multisets = multisets(a->dim(), n);
    const std::size_t dim = sp.basis_multisets.size();

    Matrix cols(sp.ambient.dim(), dim);
    for (std::size_t j = 0; j < dim; ++j) {
        Multiset perm = sp.basis_multisets[j];
        do
            cols(sp.ambient.flat(perm), j) = 1;
        while (std::next_permutation(perm.begin(), perm.end()));
    }
    sp.inclusion = ColumnBasis(cols);

    std::vector<std::vector<Rational>> images(dim);
    for (std::size_t j = 0; j < dim; ++j)
        images[j] = cols.column(j);
    std::vector<Rational> constants(dim * dim * dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i; j < dim; ++j) {
            const auto prod = sp.ambient.multiply<Rational>(images[i], images[j]);
            const auto c = sp.inclusion.coordinates<Rational>(prod);
            if (!c)
                throw std::logic_error("symmetric power is not closed under multiplication: e" +
                                       to_string(sp.basis_multisets[i]) + " * e" + to_string(sp.basis_multisets[j]));
            for (std::size_t k = 0; k < dim; ++k) {
                constants[(i * dim + j) * dim + k] = (*c)[k];
                constants[(j * dim + i) * dim + k] = (*c)[k];
            }
        }
    auto unit = sp.inclusion.coordinates<Rational>(sp.ambient.unit());
    if (!unit)
        throw std::logic_error("unit tensor is not symmetric");
    sp.algebra = Algebra::create("S^" + std::to_string(n) + "(" + a->label() + ")", std::move(*unit), std::move(constants));
    return sp;
}

HomCheck is_algebra_hom(const LinMap& f)
{
    HomCheck r;
    const auto& dom = f.domain();
    std::vector<Element> images;
    images.reserve(dom->dim());
    for (std::size_t i = 0; i < dom->dim(); ++i)
        images.push_back(f(Element::basis(dom, i)));
    for (std::size_t i = 0; i < dom->dim(); ++i)
        for (std::size_t j = i; j < dom->dim(); ++j) {
            Element lhs = f(Element::basis(dom, i) * Element::basis(dom, j));
            Element rhs = images[i] * images[j];
            if (!(lhs == rhs)) {
                r.passed = false;
                r.i = i;
                r.j = j;
                r.lhs = std::move(lhs);
                r.rhs = std::move(rhs);
                return r;
            }
        }
    const Element u = value_at_unit(f);
    const Element one = Element::one(f.codomain());
    if (!(u == one)) {
        r.passed = false;
        r.unit_failed = true;
        r.lhs = u;
        r.rhs = one;
    }
    return r;
}

CertifiedNHom alpha(const SymPower& sp, const LinMap& f)
{
    if (!same_algebra(f.domain(), sp.algebra))
        throw std::invalid_argument("map is not defined on the symmetric power");
    if (auto check = is_algebra_hom(f); !check) {
        const std::string where = check.unit_failed ? "F(1) != 1"
                                                    : "F(e_i e_j) != F(e_i) F(e_j) for i = " + std::to_string(check.i) +
                                                          ", j = " + std::to_string(check.j);
        throw NotAHomomorphism("not an algebra homomorphism: " + where, std::move(check));
    }
    const std::size_t d = sp.base->dim();
    Matrix m(f.codomain()->dim(), d);
    for (std::size_t j = 0; j < d; ++j) {
        const Element v = f(delta(sp, Element::basis(sp.base, j)));
        for (std::size_t i = 0; i < v.dim(); ++i)
            m(i, j) = v[i];
    }
    const LinMap phi(sp.base, f.codomain(), m);
    auto c = classify_n(phi, sp.n);
    if (c.kind != Classification::Kind::n_hom || c.n != sp.n)
        throw std::logic_error("restriction of a homomorphism is not an n-homomorphism: " + c.reason);
    return std::move(*c.certified);
}

LinMap beta(const SymPower& sp, const CertifiedNHom& phi)
{
    if (phi.n() != sp.n)
        throw std::invalid_argument("map degree " + std::to_string(phi.n()) + " differs from the symmetric power " +
                                    std::to_string(sp.n));
    if (!same_algebra(phi.map().domain(), sp.base))
        throw std::invalid_argument("map is not defined on the base algebra");
    const AlgebraPtr& b = phi.map().codomain();
    Matrix m(b->dim(), sp.basis_multisets.size());
    for (std::size_t j = 0; j < sp.basis_multisets.size(); ++j) {
        const Multiset& ms = sp.basis_multisets[j];
        std::vector<Element> args;
        for (const auto i : ms)
            args.push_back(Element::basis(sp.base, i));
        Rational denom = 1;
        for (std::size_t start = 0; start < ms.size();) {
            std::size_t end = start;
            while (end < ms.size() && ms[end] == ms[start])
                ++end;
            denom *= factorial(static_cast<unsigned>(end - start));
            start = end;
        }
        const Element v = frobenius_form(phi.map(), args);
        for (std::size_t i = 0; i < b->dim(); ++i)
            m(i, j) = v[i] / denom;
    }
    LinMap f(sp.algebra, b, m);
    if (const auto check = is_algebra_hom(f); !check)
        throw std::logic_error("lift of an n-homomorphism is not multiplicative");
    return f;
}

IdentityCheck verify_det_identity(const SymPower& sp, const LinMap& f, const LinMap& phi)
{
    if (!same_algebra(f.domain(), sp.algebra) || !same_algebra(phi.domain(), sp.base) ||
        !same_algebra(f.codomain(), phi.codomain()))
        throw std::invalid_argument("maps do not fit the symmetric power");
    SymbolScope scope;
    const PolyElement a = scope.generic(sp.base, "a");
    const auto coeffs = elem_sym_coeffs(sp, a);
    const auto r = char_series_newton(phi, a, sp.n + 2);
    for (std::size_t k = 0; k <= sp.n; ++k) {
        const PolyElement lhs = f(coeffs[k]);
        if (!(lhs == r[k]))
            return IdentityCheck::fail("z^" + std::to_string(k), lhs - r[k]);
    }
    for (std::size_t k = sp.n + 1; k <= sp.n + 2; ++k)
        if (!r[k].is_zero())
            return IdentityCheck::fail("psi_" + std::to_string(k), r[k]);
    return IdentityCheck::pass();
}

std::vector<LinMap> coordinate_homomorphisms(const SymPower& sp)
{
    std::vector<LinMap> out;
    const auto q = function_algebra(1);
    const std::size_t dim = sp.algebra->dim();
    for (std::size_t j = 0; j < dim; ++j) {
        Matrix m(1, dim);
        m(0, j) = 1;
        LinMap f(sp.algebra, q, m);
        if (is_algebra_hom(f))
            out.push_back(std::move(f));
    }
    return out;
}

} // namespace frobenia
