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

#include "frobenia/pq.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>

#include "frobenia/charfn.hpp"

namespace frobenia {

const char* to_string(PqCandidate::Status s)
{
    switch (s) {
    case PqCandidate::Status::certified_up_to_k_max:
        return "certified_up_to_k_max";
    case PqCandidate::Status::refuted:
        return "refuted";
    }
    return "?";
}

PqCandidate hankel_check(const LinMap& phi, std::size_t p, std::size_t q, std::int64_t k_max)
{
    PqCandidate c;
    c.p = p;
    c.q = q;
    c.k_min = static_cast<std::int64_t>(p) - static_cast<std::int64_t>(q) + 1;
    c.k_max = k_max;
    if (k_max < c.k_min)
        throw std::invalid_argument("k_max must be at least p - q + 1 = " + std::to_string(c.k_min));
    if (q > 16)
        throw std::invalid_argument("Hankel order q must be at most 16");

    const AlgebraPtr& b = phi.codomain();
    c.chi = value_at_unit(phi);
    const Element expected = Rational(c.k_min - 1) * Element::one(b);
    if (!(c.chi == expected)) {
        c.status = PqCandidate::Status::refuted;
        c.witness = lift(c.chi - expected);
        c.reason = "phi(1) differs from (p - q) * 1";
        return c;
    }

    SymbolScope scope;
    const PolyElement a = scope.generic(phi.domain(), "a");
    const std::int64_t top = k_max + 2 * static_cast<std::int64_t>(q);
    const auto psi = top >= 0 ? psi_sequence(phi, a, static_cast<std::size_t>(top)) : std::vector<PolyElement>{};
    const PolyElement zero = PolyElement::zero(b);
    const auto entry = [&](std::int64_t j) -> const PolyElement& { return j < 0 ? zero : psi[static_cast<std::size_t>(j)]; };

    for (std::int64_t k = c.k_min; k <= k_max; ++k) {
        std::vector<std::vector<PolyElement>> h(q + 1, std::vector<PolyElement>(q + 1));
        for (std::size_t i = 0; i <= q; ++i)
            for (std::size_t j = 0; j <= q; ++j)
                h[i][j] = entry(k + static_cast<std::int64_t>(i + j));
        PolyElement det = laplace_determinant(h, zero, PolyElement::one(b));
        if (!det.is_zero()) {
            c.status = PqCandidate::Status::refuted;
            c.refuted_at = k;
            c.witness = std::move(det);
            c.reason = "Hankel determinant at k = " + std::to_string(k) + " is nonzero";
            return c;
        }
    }
    c.status = PqCandidate::Status::certified_up_to_k_max;
    c.reason = "Hankel determinants vanish for k in [" + std::to_string(c.k_min) + ", " + std::to_string(k_max) + "]";
    return c;
}

std::vector<PqCandidate> classify_pq(const LinMap& phi, std::size_t p_max, std::size_t q_max, std::int64_t k_max)
{
    std::vector<PqCandidate> out;
    const Element chi = value_at_unit(phi);
    const Element one = Element::one(phi.codomain());
    std::optional<Rational> c;
    for (std::size_t i = 0; i < one.dim(); ++i)
        if (sgn(one[i]) != 0) {
            c = chi[i] / one[i];
            break;
        }
    if (!c || !(chi == *c * one) || !is_integer(*c))
        return out;
    const std::int64_t diff = *as_int64(*c);
    for (std::size_t q = 0; q <= q_max; ++q) {
        const std::int64_t p = diff + static_cast<std::int64_t>(q);
        if (p < 0 || p > static_cast<std::int64_t>(p_max) || k_max < p - static_cast<std::int64_t>(q) + 1)
            continue;
        auto cand = hankel_check(phi, static_cast<std::size_t>(p), q, k_max);
        if (cand.certified())
            out.push_back(std::move(cand));
    }
    return out;
}

LinMap ev_pq(std::size_t m, const std::vector<std::size_t>& plus, const std::vector<std::size_t>& minus)
{
    Matrix row(1, m);
    for (const auto i : plus) {
        if (i >= m)
            throw std::out_of_range("point index " + std::to_string(i) + " out of range");
        row(0, i) += 1;
    }
    for (const auto i : minus) {
        if (i >= m)
            throw std::out_of_range("point index " + std::to_string(i) + " out of range");
        row(0, i) -= 1;
    }
    return LinMap(function_algebra(m), function_algebra(1), std::move(row));
}

namespace {

/// Columns e_M of S^n inside the n-th tensor power of a d-dimensional space.
Matrix sym_inclusion(std::size_t d, std::size_t n)
{
    const auto ms = multisets(d, n);
    std::size_t rows = 1;
    for (std::size_t s = 0; s < n; ++s)
        rows *= d;
    Matrix cols(rows, ms.size());
    for (std::size_t j = 0; j < ms.size(); ++j) {
        Multiset perm = ms[j];
        do {
            std::size_t f = 0;
            for (const auto i : perm)
                f = f * d + i;
            cols(f, j) = 1;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return cols;
}

Matrix kron(const Matrix& a, const Matrix& b)
{
    Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (sgn(a(i, j)) == 0)
                continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    if (sgn(b(k, l)) != 0)
                        r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return r;
}

std::size_t ipow(std::size_t base, std::size_t e)
{
    std::size_t r = 1;
    for (std::size_t i = 0; i < e; ++i)
        r *= base;
    return r;
}

AlgebraPtr sym_algebra(const AlgebraPtr& a, std::size_t n)
{
    return n == 0 ? function_algebra(1) : sym_power(a, n).algebra;
}

} // namespace

LinMap mu_map(const AlgebraPtr& a, std::size_t p, std::size_t q)
{
    if (p == 0 || q == 0)
        throw std::invalid_argument("mu needs p >= 1 and q >= 1");
    const std::size_t d = a->dim();
    const AlgebraPtr domain = tensor_product(sym_power(a, p).algebra, sym_power(a, q).algebra).algebra;
    const AlgebraPtr codomain =
        tensor_product(tensor_product(sym_algebra(a, p - 1), sym_algebra(a, q - 1)).algebra, a).algebra;

    const Matrix ip = sym_inclusion(d, p);
    const Matrix iq = sym_inclusion(d, q);
    const ColumnBasis target(kron(kron(sym_inclusion(d, p - 1), sym_inclusion(d, q - 1)), Matrix::identity(d)));
    const std::size_t dq1 = ipow(d, q - 1);

    Matrix mu(codomain->dim(), domain->dim());
    for (std::size_t i = 0; i < ip.cols(); ++i)
        for (std::size_t j = 0; j < iq.cols(); ++j) {
            std::vector<Rational> image(target.ambient_dim());
            for (std::size_t r1 = 0; r1 < ip.rows(); ++r1) {
                if (sgn(ip(r1, i)) == 0)
                    continue;
                for (std::size_t r2 = 0; r2 < iq.rows(); ++r2) {
                    if (sgn(iq(r2, j)) == 0)
                        continue;
                    // The last digit of each block is the factor being multiplied.
                    const std::size_t head = (r1 / d) * dq1 + r2 / d;
                    for (const auto& [k, c] : a->product(r1 % d, r2 % d))
                        image[head * d + k] += ip(r1, i) * iq(r2, j) * c;
                }
            }
            const auto coords = target.coordinates<Rational>(image);
            if (!coords)
                throw std::logic_error("mu image is not symmetric in the remaining factors");
            for (std::size_t r = 0; r < coords->size(); ++r)
                mu(r, i * iq.cols() + j) = (*coords)[r];
        }
    return LinMap(domain, codomain, std::move(mu));
}

namespace {

AlgebraPtr induced_algebra(const std::string& label, const TensorShape& shape, const ColumnBasis& basis)
{
    const std::size_t dim = basis.dim();
    std::vector<std::vector<Rational>> images(dim);
    for (std::size_t j = 0; j < dim; ++j)
        images[j] = basis.columns().column(j);
    std::vector<Rational> constants(dim * dim * dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i; j < dim; ++j) {
            const auto c = basis.coordinates<Rational>(shape.multiply<Rational>(images[i], images[j]));
            if (!c)
                throw std::logic_error(label + " is not closed under multiplication (basis pair " + std::to_string(i) +
                                       ", " + std::to_string(j) + ")");
            for (std::size_t k = 0; k < dim; ++k) {
                constants[(i * dim + j) * dim + k] = (*c)[k];
                constants[(j * dim + i) * dim + k] = (*c)[k];
            }
        }
    auto unit = basis.coordinates<Rational>(shape.unit());
    if (!unit)
        throw std::logic_error(label + " does not contain the unit");
    return Algebra::create(label, std::move(*unit), std::move(constants));
}

} // namespace

PqSymPower sym_pq_power(const AlgebraPtr& a, std::size_t p, std::size_t q)
{
    if (p == 0)
        throw std::invalid_argument("S^{p|q} needs p >= 1");
    const std::string label = "S^{" + std::to_string(p) + "|" + std::to_string(q) + "}(" + a->label() + ")";
    const std::size_t d = a->dim();
    PqSymPower s;
    s.base = a;
    s.p = p;
    s.q = q;
    s.tensor = TensorShape(a, p + q);
    const SymPower sp = sym_power(a, p);
    if (q == 0) {
        s.ambient = tensor_product(sp.algebra, function_algebra(1)).algebra;
        s.basis = Matrix::identity(sp.algebra->dim());
        s.embedding = sp.inclusion;
        s.algebra = Algebra::create(label, sp.algebra->unit(), sp.algebra->constants());
        return s;
    }
    s.ambient = tensor_product(sp.algebra, sym_power(a, q).algebra).algebra;
    const LinMap mu = mu_map(a, p, q);

    // Solve μ(v) = w with w in the span of e_M ⊗ e_N ⊗ 1.
    const std::size_t cp = multisets(d, p - 1).size();
    const std::size_t cq = multisets(d, q - 1).size();
    const std::size_t n_amb = s.ambient->dim();
    const std::size_t n_w = cp * cq;
    Matrix system(mu.codomain()->dim(), n_amb + n_w);
    for (std::size_t r = 0; r < system.rows(); ++r)
        for (std::size_t c = 0; c < n_amb; ++c)
            system(r, c) = mu.matrix()(r, c);
    for (std::size_t w = 0; w < n_w; ++w)
        for (std::size_t k = 0; k < d; ++k)
            system(w * d + k, n_amb + w) = -a->unit()[k];
    const Matrix null = nullspace(system);
    Matrix v(n_amb, null.cols());
    for (std::size_t r = 0; r < n_amb; ++r)
        for (std::size_t c = 0; c < null.cols(); ++c)
            v(r, c) = null(r, c);
    const auto keep = independent_columns(v);
    s.basis = Matrix(n_amb, keep.size());
    for (std::size_t c = 0; c < keep.size(); ++c)
        for (std::size_t r = 0; r < n_amb; ++r)
            s.basis(r, c) = v(r, keep[c]);

    s.embedding = ColumnBasis(kron(sym_inclusion(d, p), sym_inclusion(d, q)) * s.basis);
    s.algebra = induced_algebra(label, s.tensor, s.embedding);
    return s;
}

std::size_t max_oracle_tuples()
{
    constexpr std::size_t fallback = 1'000'000;
    const char* env = std::getenv("FROBENIA_MAX_TUPLES");
    if (!env || !*env)
        return fallback;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0' || v == 0)
        throw std::invalid_argument(std::string("FROBENIA_MAX_TUPLES is not a positive integer: ") + env);
    return static_cast<std::size_t>(v);
}

PqOracle sym_pq_oracle(std::size_t m, std::size_t p, std::size_t q, std::size_t max_tuples)
{
    if (m == 0 || p + q == 0)
        throw std::invalid_argument("oracle needs m >= 1 and p + q >= 1");
    const std::size_t slots = p + q;
    std::size_t n = 1;
    for (std::size_t s = 0; s < slots; ++s) {
        if (n > max_tuples / m)
            throw std::length_error("oracle enumeration exceeds " + std::to_string(max_tuples) + " tuples");
        n *= m;
    }

    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    const auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    const auto unite = [&](std::size_t x, std::size_t y) {
        x = find(x);
        y = find(y);
        if (x != y)
            parent[std::max(x, y)] = std::min(x, y);
    };
    const auto flat = [&](const std::vector<std::size_t>& t) {
        std::size_t f = 0;
        for (const auto i : t)
            f = f * m + i;
        return f;
    };

    std::vector<std::size_t> t(slots);
    for (std::size_t f = 0; f < n; ++f) {
        std::size_t x = f;
        for (std::size_t s = slots; s-- > 0;) {
            t[s] = x % m;
            x /= m;
        }
        auto canon = t;
        std::sort(canon.begin(), canon.begin() + static_cast<std::ptrdiff_t>(p));
        std::sort(canon.begin() + static_cast<std::ptrdiff_t>(p), canon.end());
        unite(f, flat(canon));
        if (p >= 1 && q >= 1 && t[p - 1] == t[slots - 1]) {
            auto glued = t;
            glued[p - 1] = glued[slots - 1] = 0;
            unite(f, flat(glued));
        }
    }

    PqOracle o;
    o.m = m;
    o.p = p;
    o.q = q;
    std::vector<std::size_t> class_index(n, n);
    for (std::size_t f = 0; f < n; ++f) {
        const std::size_t r = find(f);
        if (class_index[r] == n) {
            class_index[r] = o.classes.size();
            o.classes.emplace_back();
        }
        o.classes[class_index[r]].push_back(f);
    }
    o.class_of.resize(n);
    for (std::size_t c = 0; c < o.classes.size(); ++c)
        for (const auto f : o.classes[c])
            o.class_of[f] = c;

    const std::size_t dim = o.classes.size();
    std::vector<Rational> constants(dim * dim * dim);
    // The pointwise product of indicators i and j is supported on
    // classes[i] ∩ classes[j]; it is expressible iff that support is a union
    // of whole classes.
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            std::map<std::size_t, std::size_t> hits;
            for (const auto f : o.classes[i])
                if (o.class_of[f] == j)
                    ++hits[o.class_of[f]];
            for (const auto& [k, count] : hits) {
                if (count != o.classes[k].size())
                    throw std::logic_error("class indicator product is not constant on classes");
                constants[(i * dim + j) * dim + k] = 1;
            }
        }
    auto unit = o.coordinates(std::vector<Rational>(n, Rational(1)));
    o.algebra = Algebra::create("Sym^{" + std::to_string(p) + "|" + std::to_string(q) + "}(" + std::to_string(m) +
                                    " points)",
                                std::move(*unit), std::move(constants));
    return o;
}

std::optional<std::vector<Rational>> PqOracle::coordinates(std::span<const Rational> v) const
{
    if (v.size() != class_of.size())
        throw std::invalid_argument("vector has wrong length for the oracle space");
    std::vector<Rational> c(classes.size());
    for (std::size_t k = 0; k < classes.size(); ++k) {
        c[k] = v[classes[k].front()];
        for (const auto f : classes[k])
            if (v[f] != c[k])
                return std::nullopt;
    }
    return c;
}

PqComparison compare_with_oracle(const PqSymPower& s, const PqOracle& o)
{
    if (!same_algebra(s.base, function_algebra(o.m)) || s.p != o.p || s.q != o.q)
        throw std::invalid_argument("oracle and S^{p|q} are built from different data");
    PqComparison r;
    const std::size_t dim = s.algebra->dim();
    r.same_dimension = dim == o.algebra->dim();
    if (!r.same_dimension) {
        r.detail = "dimensions " + std::to_string(dim) + " and " + std::to_string(o.algebra->dim()) + " differ";
        return r;
    }
    Matrix t(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
        const auto c = o.coordinates(s.embedding.columns().column(j));
        if (!c) {
            r.detail = "basis vector " + std::to_string(j) + " is not constant on oracle classes";
            return r;
        }
        for (std::size_t i = 0; i < dim; ++i)
            t(i, j) = (*c)[i];
    }
    if (rank(t) != dim) {
        r.detail = "subspaces differ";
        return r;
    }
    r.same_subspace = true;
    LinMap iso(s.algebra, o.algebra, t);
    const auto hom = is_algebra_hom(iso);
    r.isomorphic = static_cast<bool>(hom);
    r.detail = r.isomorphic ? "identical subspaces; the change of basis is multiplicative"
                            : "the change of basis does not respect the products";
    r.isomorphism = std::move(iso);
    return r;
}

} // namespace frobenia
