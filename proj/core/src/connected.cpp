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

#include "frobenia/connected.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <tuple>

namespace frobenia {

namespace {

void trim(UPoly& f)
{
    while (!f.empty() && sgn(f.back()) == 0)
        f.pop_back();
}

int degree(const UPoly& f) { return static_cast<int>(f.size()) - 1; }

UPoly make_monic(UPoly f)
{
    trim(f);
    if (f.empty())
        return f;
    const Rational lead = f.back();
    for (auto& c : f)
        c /= lead;
    return f;
}

UPoly sub(UPoly a, const UPoly& b)
{
    if (a.size() < b.size())
        a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] -= b[i];
    trim(a);
    return a;
}

UPoly mul(const UPoly& a, const UPoly& b)
{
    if (a.empty() || b.empty())
        return {};
    UPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

std::pair<UPoly, UPoly> divmod(UPoly a, const UPoly& b)
{
    trim(a);
    if (b.empty())
        throw std::domain_error("polynomial division by zero");
    if (degree(a) < degree(b))
        return {{}, a};
    UPoly q(a.size() - b.size() + 1);
    const Rational lead = b.back();
    for (int k = degree(a) - degree(b); k >= 0; --k) {
        const Rational c = a[static_cast<std::size_t>(k) + b.size() - 1] / lead;
        q[static_cast<std::size_t>(k)] = c;
        for (std::size_t j = 0; j < b.size(); ++j)
            a[static_cast<std::size_t>(k) + j] -= c * b[j];
    }
    trim(a);
    trim(q);
    return {q, a};
}

UPoly quotient(const UPoly& a, const UPoly& b) { return divmod(a, b).first; }

UPoly derivative(const UPoly& f)
{
    UPoly d;
    for (std::size_t i = 1; i < f.size(); ++i)
        d.push_back(f[i] * static_cast<long>(i));
    trim(d);
    return d;
}

UPoly gcd(UPoly a, UPoly b)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

/// Returns (g, s, t) with s*a + t*b = g monic.
std::tuple<UPoly, UPoly, UPoly> xgcd(UPoly a, UPoly b)
{
    UPoly s0{Rational(1)}, s1;
    UPoly t0, t1{Rational(1)};
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto [q, r] = divmod(a, b);
        a = std::move(b);
        b = std::move(r);
        auto s2 = sub(s0, mul(q, s1));
        auto t2 = sub(t0, mul(q, t1));
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    const Rational lead = a.back();
    for (auto* p : {&a, &s0, &t0})
        for (auto& c : *p)
            c /= lead;
    return {a, s0, t0};
}

UPoly power(const UPoly& f, unsigned k)
{
    UPoly r{Rational(1)};
    for (unsigned i = 0; i < k; ++i)
        r = mul(r, f);
    return r;
}

/// Yun's square-free decomposition of a monic f: f = prod_i parts[i]^(i+1).
std::vector<UPoly> squarefree_decomposition(const UPoly& f)
{
    std::vector<UPoly> parts;
    const UPoly df = derivative(f);
    const UPoly a0 = gcd(f, df);
    UPoly b = quotient(f, a0);
    UPoly c = quotient(df, a0);
    UPoly d = sub(c, derivative(b));
    while (degree(b) > 0) {
        UPoly a = gcd(b, d);
        parts.push_back(a);
        b = quotient(b, a);
        c = quotient(d, a);
        d = sub(c, derivative(b));
    }
    return parts;
}

constexpr long kDivisorLimit = 1'000'000'000'000L;

std::optional<std::vector<mpz_class>> divisors(mpz_class n)
{
    n = abs(n);
    if (n > kDivisorLimit)
        return std::nullopt;
    const long v = n.get_si();
    std::vector<mpz_class> out;
    for (long d = 1; d * d <= v; ++d)
        if (v % d == 0) {
            out.emplace_back(d);
            if (d * d != v)
                out.emplace_back(v / d);
        }
    return out;
}

Rational horner(const UPoly& f, const Rational& x)
{
    Rational r = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it)
        r = r * x + *it;
    return r;
}

} // namespace

UPoly minimal_polynomial(const Element& a)
{
    const std::size_t n = a.dim();
    std::vector<std::vector<Rational>> powers{Element::one(a.algebra()).coords()};
    Element cur = Element::one(a.algebra());
    for (std::size_t k = 1; k <= n; ++k) {
        cur = cur * a;
        const Matrix span = Matrix::from_columns(powers, n);
        if (auto c = solve(span, cur.coords())) {
            UPoly m(k + 1);
            for (std::size_t j = 0; j < k; ++j)
                m[j] = -(*c)[j];
            m[k] = 1;
            return m;
        }
        powers.push_back(cur.coords());
    }
    throw std::logic_error("minimal polynomial degree exceeds dimension");
}

std::vector<Rational> rational_roots(const UPoly& f_in, bool* complete)
{
    if (complete)
        *complete = true;
    UPoly f = f_in;
    trim(f);
    std::vector<Rational> roots;
    if (degree(f) < 1)
        return roots;
    mpz_class den_lcm = 1;
    for (const auto& c : f)
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    std::vector<mpz_class> ic;
    for (const auto& c : f)
        ic.push_back(mpz_class(c.get_num() * (den_lcm / c.get_den())));
    std::size_t shift = 0;
    while (ic[shift] == 0)
        ++shift;
    if (shift > 0)
        roots.emplace_back(0);
    if (shift + 1 == ic.size())
        return roots;
    const auto ps = divisors(ic[shift]);
    const auto qs = divisors(ic.back());
    if (!ps || !qs) {
        if (complete)
            *complete = false;
        return roots;
    }
    for (const auto& p : *ps)
        for (const auto& q : *qs)
            for (int sign : {1, -1}) {
                Rational x(p * sign, q);
                x.canonicalize();
                if (sgn(horner(f, x)) == 0 && std::find(roots.begin(), roots.end(), x) == roots.end())
                    roots.push_back(x);
            }
    std::sort(roots.begin(), roots.end());
    return roots;
}

Element evaluate(const UPoly& f, const Element& a)
{
    Element r = Element::zero(a.algebra());
    const Element one = Element::one(a.algebra());
    for (auto it = f.rbegin(); it != f.rend(); ++it)
        r = r * a + *it * one;
    return r;
}

Matrix nilradical(const AlgebraPtr& a)
{
    const std::size_t n = a->dim();
    std::vector<Rational> trace(n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j)
            trace[k] += a->constant(k, j, j);
    Matrix gram(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& [k, c] : a->product(i, j))
                gram(i, j) += c * trace[k];
    return nullspace(gram);
}

const char* to_string(Connectivity::Kind k)
{
    switch (k) {
    case Connectivity::Kind::connected_certified:
        return "connected_certified";
    case Connectivity::Kind::split:
        return "split";
    case Connectivity::Kind::inconclusive:
        return "inconclusive";
    }
    return "?";
}

namespace {

bool is_nontrivial_idempotent(const Element& e)
{
    return e * e == e && !e.is_zero() && !(e == Element::one(e.algebra()));
}

/// A factorization m = g*h with gcd(g, h) = 1 and both factors nonconstant.
std::optional<std::pair<UPoly, UPoly>> coprime_split(const UPoly& m)
{
    const auto parts = squarefree_decomposition(m);
    std::vector<std::size_t> nontrivial;
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (degree(parts[i]) > 0)
            nontrivial.push_back(i);
    if (nontrivial.size() >= 2) {
        const std::size_t i = nontrivial.front();
        UPoly g = power(parts[i], static_cast<unsigned>(i + 1));
        return std::pair{g, quotient(m, g)};
    }
    if (nontrivial.size() == 1) {
        const std::size_t i = nontrivial.front();
        const UPoly& s = parts[i];
        if (degree(s) < 2)
            return std::nullopt;
        const auto roots = rational_roots(s);
        if (roots.empty())
            return std::nullopt;
        UPoly g = power(UPoly{-roots.front(), Rational(1)}, static_cast<unsigned>(i + 1));
        return std::pair{g, quotient(m, g)};
    }
    return std::nullopt;
}

} // namespace

Connectivity find_idempotent_split(const AlgebraPtr& b, unsigned trials, std::uint64_t seed)
{
    if (!validate_algebra(*b).empty())
        throw std::invalid_argument("connectedness test needs a valid algebra");
    Connectivity result;
    const std::size_t n = b->dim();
    result.radical_dim = nilradical(b).cols();
    const std::size_t reduced_dim = n - result.radical_dim;

    for (std::size_t i = 0; i < n; ++i) {
        const Element e = Element::basis(b, i);
        if (is_nontrivial_idempotent(e)) {
            result.kind = Connectivity::Kind::split;
            result.idempotent = e;
            result.reason = "basis element e_" + std::to_string(i + 1) + " is idempotent";
            return result;
        }
    }
    if (reduced_dim == 1) {
        result.kind = Connectivity::Kind::connected_certified;
        result.reason = "quotient by the nilradical is Q";
        return result;
    }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (unsigned t = 0; t < trials; ++t) {
        std::vector<Rational> c(n);
        for (auto& x : c)
            x = coeff(rng);
        const Element r(b, std::move(c));
        const UPoly m = minimal_polynomial(r);
        if (auto split = coprime_split(m)) {
            auto [g, s, unused] = xgcd(split->first, split->second);
            (void)unused;
            const Element e = evaluate(mul(s, split->first), r);
            if (!is_nontrivial_idempotent(e))
                throw std::logic_error("CRT lift did not produce a nontrivial idempotent");
            result.kind = Connectivity::Kind::split;
            result.idempotent = e;
            result.reason = "coprime factors of a minimal polynomial";
            return result;
        }
        const auto parts = squarefree_decomposition(m);
        UPoly radical_part{Rational(1)};
        for (const auto& p : parts)
            radical_part = mul(radical_part, p);
        const int d = degree(radical_part);
        bool complete = false;
        const bool no_roots = rational_roots(radical_part, &complete).empty() && complete;
        if (static_cast<std::size_t>(d) == reduced_dim && (d == 1 || (d <= 3 && no_roots))) {
            result.kind = Connectivity::Kind::connected_certified;
            result.reason = "quotient by the nilradical is a field of degree " + std::to_string(d);
            return result;
        }
    }
    result.kind = Connectivity::Kind::inconclusive;
    result.reason = "no idempotent found and no locality certificate";
    return result;
}

} // namespace frobenia
