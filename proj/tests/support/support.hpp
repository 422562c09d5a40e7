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

#ifndef FROBENIA_TESTS_SUPPORT_HPP
#define FROBENIA_TESTS_SUPPORT_HPP

// Test helpers: seeded random inputs and oracles that share no code with the
// library routines they check. Oracles work on plain vectors of Poly.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "frobenia/algebra.hpp"
#include "frobenia/element.hpp"
#include "frobenia/linmap.hpp"
#include "frobenia/poly.hpp"

namespace frobenia::test {

using Rng = std::mt19937_64;

/// Small random rational n/d with |n| <= num_bound, 1 <= d <= den_bound.
inline Rational random_rational(Rng& rng, int num_bound = 5, int den_bound = 3)
{
    std::uniform_int_distribution<int> num(-num_bound, num_bound);
    std::uniform_int_distribution<int> den(1, den_bound);
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

inline Element random_element(Rng& rng, const AlgebraPtr& a)
{
    std::vector<Rational> c(a->dim());
    for (auto& x : c)
        x = random_rational(rng);
    return {a, std::move(c)};
}

inline LinMap random_map(Rng& rng, const AlgebraPtr& a, const AlgebraPtr& b)
{
    Matrix m(b->dim(), a->dim());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            m(i, j) = random_rational(rng);
    return {a, b, std::move(m)};
}

/// x^d as a monic coefficient list, constant term first.
inline std::vector<Rational> monomial_modulus(std::size_t d)
{
    std::vector<Rational> f(d + 1);
    f[d] = 1;
    return f;
}

/// Row matrix summing point evaluations with the given multiplicities; the
/// map from functions on m points to Q.
inline LinMap signed_ev(std::size_t m, const std::vector<long>& weights)
{
    Matrix row(1, m);
    for (std::size_t i = 0; i < m; ++i)
        row(0, i) = weights.at(i);
    return {function_algebra(m), function_algebra(1), std::move(row)};
}

/// Multiplicity vector of a multiset of points.
inline std::vector<long> counts(std::size_t m, const std::vector<std::size_t>& points)
{
    std::vector<long> w(m, 0);
    for (const auto p : points)
        ++w.at(p);
    return w;
}

/// All multisets of size k from {0..m-1}, as sorted point lists.
inline std::vector<std::vector<std::size_t>> point_multisets(std::size_t m, std::size_t k)
{
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    const auto rec = [&](auto&& self, std::size_t start) -> void {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < m; ++i) {
            cur.push_back(i);
            self(self, i);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

// ---- Series oracles over Poly, truncated at z^order ----

using PolySeries = std::vector<Poly>;

inline PolySeries series_product(const PolySeries& a, const PolySeries& b)
{
    PolySeries r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; i + j < a.size(); ++j)
            r[i + j] += a[i] * b[j];
    return r;
}

/// 1 / s for s(0) = 1.
inline PolySeries series_inverse(const PolySeries& s)
{
    PolySeries r(s.size());
    r[0] = 1;
    for (std::size_t k = 1; k < s.size(); ++k) {
        Poly acc;
        for (std::size_t j = 1; j <= k; ++j)
            acc -= s[j] * r[k - j];
        r[k] = acc;
    }
    return r;
}

/// prod_{i in plus} (1 + u_i z) / prod_{j in minus} (1 + u_j z).
inline PolySeries rational_char_series(const std::vector<Poly>& plus, const std::vector<Poly>& minus,
                                       std::size_t order)
{
    PolySeries num(order + 1), den(order + 1);
    num[0] = 1;
    den[0] = 1;
    for (const auto& u : plus) {
        PolySeries f(order + 1);
        f[0] = 1;
        if (order >= 1)
            f[1] = u;
        num = series_product(num, f);
    }
    for (const auto& u : minus) {
        PolySeries f(order + 1);
        f[0] = 1;
        if (order >= 1)
            f[1] = u;
        den = series_product(den, f);
    }
    return series_product(num, series_inverse(den));
}

/// binom(c, k) for rational c.
inline Rational binomial(const Rational& c, std::size_t k)
{
    Rational r = 1;
    for (std::size_t i = 0; i < k; ++i)
        r *= (c - static_cast<long>(i)) / Rational(static_cast<long>(i + 1));
    return r;
}

/// The coordinates a(x) for x in `points`, with repeats.
inline std::vector<Poly> point_values(const PolyElement& a, const std::vector<std::size_t>& points)
{
    std::vector<Poly> v;
    for (const auto p : points)
        v.push_back(a[p]);
    return v;
}

} // namespace frobenia::test

#endif
