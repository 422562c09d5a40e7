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

#include "frobenia/poly.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <deque>
#include <mutex>
#include <stdexcept>

namespace frobenia {

namespace {

struct VariableTable {
    std::mutex mutex;
    std::deque<std::string> names; // deque: references stay valid on growth
    std::unordered_map<std::string, VarId> ids;
};

VariableTable& variable_table()
{
    static VariableTable table;
    return table;
}

bool term_before(const Poly::Term& a, const Poly::Term& b)
{
    return grlex_less(b.monomial, a.monomial);
}

} // namespace

VarId intern_variable(std::string_view name)
{
    if (name.empty())
        throw std::invalid_argument("empty indeterminate name");
    auto& t = variable_table();
    std::lock_guard lock(t.mutex);
    std::string key(name);
    if (auto it = t.ids.find(key); it != t.ids.end())
        return it->second;
    const auto id = static_cast<VarId>(t.names.size());
    t.names.push_back(key);
    t.ids.emplace(std::move(key), id);
    return id;
}

std::optional<VarId> find_variable(std::string_view name)
{
    auto& t = variable_table();
    std::lock_guard lock(t.mutex);
    if (auto it = t.ids.find(std::string(name)); it != t.ids.end())
        return it->second;
    return std::nullopt;
}

const std::string& variable_name(VarId id)
{
    auto& t = variable_table();
    std::lock_guard lock(t.mutex);
    if (id >= t.names.size())
        throw std::out_of_range("unknown indeterminate id");
    return t.names[id];
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::variable(VarId v, std::uint32_t exponent)
{
    Monomial m;
    if (exponent > 0) {
        m.factors_.emplace_back(v, exponent);
        m.degree_ = exponent;
    }
    return m;
}

Monomial Monomial::from_factors(std::vector<Factor> factors)
{
    std::sort(factors.begin(), factors.end());
    Monomial m;
    for (const auto& [v, e] : factors) {
        if (e == 0)
            continue;
        if (!m.factors_.empty() && m.factors_.back().first == v)
            m.factors_.back().second += e;
        else
            m.factors_.emplace_back(v, e);
        m.degree_ += e;
    }
    return m;
}

std::uint32_t Monomial::exponent(VarId v) const noexcept
{
    for (const auto& [id, e] : factors_)
        if (id == v)
            return e;
    return 0;
}

Monomial operator*(const Monomial& a, const Monomial& b)
{
    Monomial r;
    r.degree_ = a.degree_ + b.degree_;
    std::size_t i = 0;
    std::size_t j = 0;
    const auto& fa = a.factors_;
    const auto& fb = b.factors_;
    while (i < fa.size() && j < fb.size()) {
        if (fa[i].first == fb[j].first) {
            r.factors_.emplace_back(fa[i].first, fa[i].second + fb[j].second);
            ++i;
            ++j;
        } else if (fa[i].first < fb[j].first) {
            r.factors_.push_back(fa[i++]);
        } else {
            r.factors_.push_back(fb[j++]);
        }
    }
    for (; i < fa.size(); ++i)
        r.factors_.push_back(fa[i]);
    for (; j < fb.size(); ++j)
        r.factors_.push_back(fb[j]);
    return r;
}

std::size_t Monomial::hash() const noexcept
{
    std::size_t h = 0x9e3779b97f4a7c15ULL ^ degree_;
    for (const auto& [v, e] : factors_) {
        h ^= (static_cast<std::size_t>(v) << 20 ^ e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

std::string Monomial::to_string() const
{
    if (factors_.empty())
        return "1";
    std::string s;
    for (const auto& [v, e] : factors_) {
        if (!s.empty())
            s += '*';
        s += variable_name(v);
        if (e > 1)
            s += '^' + std::to_string(e);
    }
    return s;
}

bool grlex_less(const Monomial& a, const Monomial& b) noexcept
{
    if (a.degree() != b.degree())
        return a.degree() < b.degree();
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    const std::size_t n = std::min(fa.size(), fb.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (fa[i].first != fb[i].first)
            return fa[i].first > fb[i].first; // a lacks b's lower variable
        if (fa[i].second != fb[i].second)
            return fa[i].second < fb[i].second;
    }
    return false;
}

// -------------------------------------------------------------------- Poly

Poly::Poly(const Rational& c)
{
    if (c != 0)
        terms_.push_back(Term{Monomial{}, c});
}

Poly Poly::variable(VarId v) { return monomial(Monomial::variable(v)); }

Poly Poly::monomial(Monomial m, Rational c)
{
    Poly p;
    if (c != 0)
        p.terms_.push_back(Term{std::move(m), std::move(c)});
    return p;
}

Poly Poly::from_terms(std::vector<Term> terms)
{
    std::sort(terms.begin(), terms.end(), term_before);
    Poly p;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial)
            p.terms_.back().coeff += t.coeff;
        else
            p.terms_.push_back(std::move(t));
        if (p.terms_.back().coeff == 0)
            p.terms_.pop_back();
    }
    return p;
}

bool Poly::is_constant() const noexcept
{
    return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

Rational Poly::constant_term() const
{
    if (!terms_.empty() && terms_.back().monomial.is_one())
        return terms_.back().coeff;
    return 0;
}

Rational Poly::coefficient(const Monomial& m) const
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) { return grlex_less(key, t.monomial); });
    if (it != terms_.end() && it->monomial == m)
        return it->coeff;
    return 0;
}

int Poly::degree() const noexcept
{
    return terms_.empty() ? -1 : static_cast<int>(terms_.front().monomial.degree());
}

bool Poly::is_homogeneous() const noexcept
{
    return terms_.empty() || terms_.front().monomial.degree() == terms_.back().monomial.degree();
}

std::vector<VarId> Poly::variables() const
{
    std::vector<VarId> vars;
    for (const auto& t : terms_)
        for (const auto& f : t.monomial.factors())
            vars.push_back(f.first);
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
}

namespace {

std::vector<Poly::Term> merge_terms(const std::vector<Poly::Term>& a, const std::vector<Poly::Term>& b, bool subtract)
{
    std::vector<Poly::Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].monomial == b[j].monomial) {
            Rational c = subtract ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
            if (c != 0)
                out.push_back(Poly::Term{a[i].monomial, std::move(c)});
            ++i;
            ++j;
        } else if (grlex_less(b[j].monomial, a[i].monomial)) {
            out.push_back(a[i++]);
        } else {
            out.push_back(subtract ? Poly::Term{b[j].monomial, -b[j].coeff} : b[j]);
            ++j;
        }
    }
    for (; i < a.size(); ++i)
        out.push_back(a[i]);
    for (; j < b.size(); ++j)
        out.push_back(subtract ? Poly::Term{b[j].monomial, -b[j].coeff} : b[j]);
    return out;
}

constexpr std::size_t kPackedSlots = 8;

// Packs exponents into one byte per variable, lowest variable id in the most
// significant byte, so integer order matches lex order at fixed degree.
bool packable(const Poly& a, const Poly& b, std::vector<VarId>& vars)
{
    auto va = a.variables();
    auto vb = b.variables();
    vars.clear();
    std::set_union(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(vars));
    if (vars.size() > kPackedSlots)
        return false;
    std::array<std::uint32_t, kPackedSlots> ma{};
    std::array<std::uint32_t, kPackedSlots> mb{};
    auto slot = [&](VarId v) { return static_cast<std::size_t>(std::lower_bound(vars.begin(), vars.end(), v) - vars.begin()); };
    for (const auto& t : a.terms())
        for (const auto& [v, e] : t.monomial.factors())
            ma[slot(v)] = std::max(ma[slot(v)], e);
    for (const auto& t : b.terms())
        for (const auto& [v, e] : t.monomial.factors())
            mb[slot(v)] = std::max(mb[slot(v)], e);
    for (std::size_t s = 0; s < kPackedSlots; ++s)
        if (ma[s] + mb[s] > 255)
            return false;
    return true;
}

std::uint64_t pack(const Monomial& m, const std::vector<VarId>& vars)
{
    std::uint64_t key = 0;
    for (const auto& [v, e] : m.factors()) {
        const auto s = static_cast<std::size_t>(std::lower_bound(vars.begin(), vars.end(), v) - vars.begin());
        key |= static_cast<std::uint64_t>(e) << (8 * (kPackedSlots - 1 - s));
    }
    return key;
}

Monomial unpack(std::uint64_t key, const std::vector<VarId>& vars)
{
    std::vector<Monomial::Factor> f;
    for (std::size_t s = 0; s < vars.size(); ++s) {
        const auto e = static_cast<std::uint32_t>((key >> (8 * (kPackedSlots - 1 - s))) & 0xffU);
        if (e > 0)
            f.emplace_back(vars[s], e);
    }
    return Monomial::from_factors(std::move(f));
}

std::uint32_t packed_degree(std::uint64_t key)
{
    std::uint32_t d = 0;
    for (; key != 0; key >>= 8)
        d += static_cast<std::uint32_t>(key & 0xffU);
    return d;
}

Poly multiply_packed(const Poly& a, const Poly& b, const std::vector<VarId>& vars)
{
    std::vector<std::uint64_t> ka;
    std::vector<std::uint64_t> kb;
    ka.reserve(a.size());
    kb.reserve(b.size());
    for (const auto& t : a.terms())
        ka.push_back(pack(t.monomial, vars));
    for (const auto& t : b.terms())
        kb.push_back(pack(t.monomial, vars));

    std::unordered_map<std::uint64_t, Rational> acc;
    acc.reserve(std::min<std::size_t>(a.size() * b.size(), 1U << 20));
    Rational prod;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Rational& ca = a.terms()[i].coeff;
        for (std::size_t j = 0; j < b.size(); ++j) {
            mpq_mul(prod.get_mpq_t(), ca.get_mpq_t(), b.terms()[j].coeff.get_mpq_t());
            auto [it, fresh] = acc.try_emplace(ka[i] + kb[j]);
            if (fresh)
                mpq_swap(it->second.get_mpq_t(), prod.get_mpq_t());
            else
                mpq_add(it->second.get_mpq_t(), it->second.get_mpq_t(), prod.get_mpq_t());
        }
    }

    struct Packed {
        std::uint32_t degree;
        std::uint64_t key;
        Rational* coeff;
    };
    std::vector<Packed> keys;
    keys.reserve(acc.size());
    for (auto& [k, c] : acc)
        if (c != 0)
            keys.push_back(Packed{packed_degree(k), k, &c});
    std::sort(keys.begin(), keys.end(), [](const Packed& x, const Packed& y) {
        return x.degree != y.degree ? x.degree > y.degree : x.key > y.key;
    });
    std::vector<Poly::Term> terms;
    terms.reserve(keys.size());
    for (const auto& k : keys)
        terms.push_back(Poly::Term{unpack(k.key, vars), std::move(*k.coeff)});
    return Poly::from_terms(std::move(terms));
}

Poly multiply_generic(const Poly& a, const Poly& b)
{
    std::unordered_map<Monomial, Rational, MonomialHash> acc;
    for (const auto& ta : a.terms())
        for (const auto& tb : b.terms())
            acc[ta.monomial * tb.monomial] += ta.coeff * tb.coeff;
    std::vector<Poly::Term> terms;
    terms.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0)
            terms.push_back(Poly::Term{m, std::move(c)});
    return Poly::from_terms(std::move(terms));
}

} // namespace

Poly& Poly::operator+=(const Poly& o)
{
    if (o.is_zero())
        return *this;
    terms_ = merge_terms(terms_, o.terms_, false);
    return *this;
}

Poly& Poly::operator-=(const Poly& o)
{
    if (o.is_zero())
        return *this;
    terms_ = merge_terms(terms_, o.terms_, true);
    return *this;
}

Poly& Poly::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_)
        t.coeff *= c;
    return *this;
}

Poly& Poly::operator*=(const Poly& o)
{
    *this = *this * o;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b)
{
    if (a.is_zero() || b.is_zero())
        return Poly{};
    if (a.is_constant())
        return b * a.terms_.front().coeff;
    if (b.is_constant())
        return a * b.terms_.front().coeff;
    std::vector<VarId> vars;
    if (packable(a, b, vars))
        return multiply_packed(a, b, vars);
    return multiply_generic(a, b);
}

Poly operator-(Poly a)
{
    for (auto& t : a.terms_)
        t.coeff = -t.coeff;
    return a;
}

Poly Poly::substitute(const std::unordered_map<VarId, Rational>& values) const
{
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Rational c = t.coeff;
        std::vector<Monomial::Factor> rest;
        for (const auto& [v, e] : t.monomial.factors()) {
            if (auto it = values.find(v); it != values.end()) {
                Rational p;
                mpz_pow_ui(p.get_num_mpz_t(), it->second.get_num_mpz_t(), e);
                mpz_pow_ui(p.get_den_mpz_t(), it->second.get_den_mpz_t(), e);
                c *= p;
            } else {
                rest.emplace_back(v, e);
            }
        }
        if (c != 0)
            out.push_back(Term{Monomial::from_factors(std::move(rest)), std::move(c)});
    }
    return from_terms(std::move(out));
}

std::string Poly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string s;
    bool first = true;
    for (const auto& t : terms_) {
        const bool negative = t.coeff < 0;
        if (first)
            s += negative ? "-" : "";
        else
            s += negative ? " - " : " + ";
        first = false;
        const Rational mag = abs(t.coeff);
        if (t.monomial.is_one())
            s += frobenia::to_string(mag);
        else if (mag == 1)
            s += t.monomial.to_string();
        else
            s += frobenia::to_string(mag) + "*" + t.monomial.to_string();
    }
    return s;
}

namespace {

Poly parse_term(std::string_view term, std::string_view whole)
{
    auto fail = [&] { throw ParseError("invalid polynomial '" + std::string(whole) + "'"); };
    if (term.empty())
        fail();
    Rational coeff = 1;
    std::vector<Monomial::Factor> factors;
    std::size_t pos = 0;
    while (pos <= term.size()) {
        const auto star = term.find('*', pos);
        const std::string_view f = term.substr(pos, star == std::string_view::npos ? std::string_view::npos : star - pos);
        if (f.empty())
            fail();
        if (std::isdigit(static_cast<unsigned char>(f.front()))) {
            coeff *= parse_rational(f);
        } else {
            const auto caret = f.find('^');
            const std::string_view name = f.substr(0, caret);
            for (char ch : name)
                if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_')
                    fail();
            std::uint32_t e = 1;
            if (caret != std::string_view::npos) {
                const Rational r = parse_rational(f.substr(caret + 1));
                const auto v = as_int64(r);
                if (!v || *v < 0)
                    fail();
                e = static_cast<std::uint32_t>(*v);
            }
            factors.emplace_back(intern_variable(name), e);
        }
        if (star == std::string_view::npos)
            break;
        pos = star + 1;
    }
    return Poly::monomial(Monomial::from_factors(std::move(factors)), coeff);
}

} // namespace

Poly parse_poly(std::string_view text)
{
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            s += ch;
    if (s.empty())
        throw ParseError("empty polynomial");
    Poly out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        bool negative = false;
        if (s[pos] == '+' || s[pos] == '-') {
            negative = s[pos] == '-';
            ++pos;
        }
        std::size_t end = pos;
        while (end < s.size() && s[end] != '+' && s[end] != '-')
            ++end;
        Poly t = parse_term(std::string_view(s).substr(pos, end - pos), text);
        if (negative)
            out -= t;
        else
            out += t;
        pos = end;
    }
    return out;
}

Poly pow(const Poly& p, unsigned k)
{
    Poly r(1);
    for (unsigned i = 0; i < k; ++i)
        r *= p;
    return r;
}

} // namespace frobenia
