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

#include "frobenia/algebra.hpp"

#include <stdexcept>

namespace frobenia {

AlgebraPtr Algebra::create(std::string label, std::vector<Rational> unit, std::vector<Rational> constants)
{
    const std::size_t n = unit.size();
    if (n == 0)
        throw std::invalid_argument("algebra dimension must be positive");
    if (constants.size() != n * n * n)
        throw std::invalid_argument("structure constants must have dim^3 entries");
    auto alg = std::shared_ptr<Algebra>(new Algebra());
    alg->label_ = std::move(label);
    alg->dim_ = n;
    alg->unit_ = std::move(unit);
    alg->constants_ = std::move(constants);
    alg->table_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (const auto& c = alg->constant(i, j, k); sgn(c) != 0)
                    alg->table_[i * n + j].emplace_back(k, c);
    return alg;
}

bool Algebra::same_structure(const Algebra& other) const
{
    return dim_ == other.dim_ && unit_ == other.unit_ && constants_ == other.constants_;
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b)
{
    return a == b || (a && b && a->same_structure(*b));
}

std::vector<AxiomViolation> validate_algebra(const Algebra& a)
{
    std::vector<AxiomViolation> report;
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (a.constant(i, j, k) != a.constant(j, i, k))
                    report.push_back({"commutativity", {i, j, k}, a.constant(i, j, k), a.constant(j, i, k)});

    // (e_i e_j) e_l versus e_i (e_j e_l), coordinate k.
    std::vector<Rational> left(n);
    std::vector<Rational> right(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l) {
                std::fill(left.begin(), left.end(), Rational(0));
                std::fill(right.begin(), right.end(), Rational(0));
                for (const auto& [m, c] : a.product(i, j))
                    for (const auto& [k, d] : a.product(m, l))
                        left[k] += c * d;
                for (const auto& [m, c] : a.product(j, l))
                    for (const auto& [k, d] : a.product(i, m))
                        right[k] += c * d;
                for (std::size_t k = 0; k < n; ++k)
                    if (left[k] != right[k])
                        report.push_back({"associativity", {i, j, l, k}, left[k], right[k]});
            }

    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            Rational s = 0;
            for (std::size_t i = 0; i < n; ++i)
                if (sgn(a.unit()[i]) != 0)
                    s += a.unit()[i] * a.constant(i, j, k);
            const Rational expected = j == k ? 1 : 0;
            if (s != expected)
                report.push_back({"unit", {j, k}, s, expected});
        }
    return report;
}

AlgebraPtr function_algebra(std::size_t m)
{
    if (m == 0)
        throw std::invalid_argument("function algebra needs at least one point");
    std::vector<Rational> c(m * m * m);
    for (std::size_t i = 0; i < m; ++i)
        c[(i * m + i) * m + i] = 1;
    return Algebra::create("functions(" + std::to_string(m) + ")", std::vector<Rational>(m, Rational(1)), std::move(c));
}

AlgebraPtr quotient_algebra(const std::vector<Rational>& f)
{
    if (f.size() < 2)
        throw std::invalid_argument("quotient polynomial must have degree >= 1");
    if (f.back() != 1)
        throw std::invalid_argument("quotient polynomial must be monic");
    const std::size_t d = f.size() - 1;
    // reduced[p] = coordinates of x^p mod f, for p <= 2d - 2.
    std::vector<std::vector<Rational>> reduced(2 * d - 1, std::vector<Rational>(d));
    for (std::size_t p = 0; p < d; ++p)
        reduced[p][p] = 1;
    for (std::size_t p = d; p + 1 < 2 * d; ++p) {
        // x^p = x * x^{p-1}; the x^d overflow is replaced by -(f_0 + ... + f_{d-1} x^{d-1}).
        const auto& prev = reduced[p - 1];
        auto& cur = reduced[p];
        for (std::size_t k = 1; k < d; ++k)
            cur[k] = prev[k - 1];
        const Rational top = prev[d - 1];
        for (std::size_t k = 0; k < d; ++k)
            cur[k] -= top * f[k];
    }
    std::vector<Rational> c(d * d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                c[(i * d + j) * d + k] = reduced[i + j][k];
    std::vector<Rational> unit(d);
    unit[0] = 1;
    std::string label = "quotient(";
    for (std::size_t k = 0; k < f.size(); ++k)
        label += (k ? "," : "") + to_string(f[k]);
    label += ")";
    return Algebra::create(std::move(label), std::move(unit), std::move(c));
}

TensorProduct tensor_product(const AlgebraPtr& a, const AlgebraPtr& b)
{
    const std::size_t na = a->dim();
    const std::size_t nb = b->dim();
    const std::size_t n = na * nb;
    std::vector<Rational> c(n * n * n);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t i2 = 0; i2 < na; ++i2)
            for (const auto& [k, ca] : a->product(i, i2))
                for (std::size_t j = 0; j < nb; ++j)
                    for (std::size_t j2 = 0; j2 < nb; ++j2)
                        for (const auto& [l, cb] : b->product(j, j2))
                            c[((i * nb + j) * n + (i2 * nb + j2)) * n + (k * nb + l)] = ca * cb;
    std::vector<Rational> unit(n);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nb; ++j)
            unit[i * nb + j] = a->unit()[i] * b->unit()[j];
    TensorProduct t;
    t.algebra = Algebra::create(a->label() + "⊗" + b->label(), std::move(unit), std::move(c));
    t.left_dim = na;
    t.right_dim = nb;
    return t;
}

AlgebraPtr tensor_power(const AlgebraPtr& a, std::size_t n)
{
    if (n == 0)
        return function_algebra(1);
    AlgebraPtr result = a;
    for (std::size_t k = 1; k < n; ++k)
        result = tensor_product(result, a).algebra;
    return result;
}

} // namespace frobenia
