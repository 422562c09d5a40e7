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

#ifndef FROBENIA_POLY_HPP
#define FROBENIA_POLY_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "frobenia/rational.hpp"

namespace frobenia {

/// Handle of a formal indeterminate in the process-wide name table.
///
/// The table is append-only and internally synchronized; an id never changes
/// its name once issued, so polynomials can be shared freely across threads.
using VarId = std::uint32_t;

VarId intern_variable(std::string_view name);
std::optional<VarId> find_variable(std::string_view name);
const std::string& variable_name(VarId id);

/// A power product x_{i1}^{e1} ... x_{ik}^{ek}; factors sorted by id, exponents > 0.
class Monomial {
public:
    using Factor = std::pair<VarId, std::uint32_t>;
    using Factors = boost::container::small_vector<Factor, 4>;

    Monomial() = default;
    static Monomial variable(VarId v, std::uint32_t exponent = 1);
    /// Builds from arbitrary (id, exponent) pairs; merges repeats, drops zeros.
    static Monomial from_factors(std::vector<Factor> factors);

    const Factors& factors() const noexcept { return factors_; }
    std::uint32_t degree() const noexcept { return degree_; }
    std::uint32_t exponent(VarId v) const noexcept;
    bool is_one() const noexcept { return factors_.empty(); }

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b) noexcept
    {
        return a.degree_ == b.degree_ && a.factors_ == b.factors_;
    }

    std::size_t hash() const noexcept;
    std::string to_string() const;

private:
    Factors factors_;
    std::uint32_t degree_ = 0;
};

/// Graded-lexicographic order: total degree first, then the exponent of the
/// lowest-numbered indeterminate decides.
bool grlex_less(const Monomial& a, const Monomial& b) noexcept;

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

/// Multivariate polynomial over the rationals in canonical form.
///
/// Terms are kept sorted by decreasing graded-lex order with no zero
/// coefficients, so two polynomials are equal iff their term lists are, and the
/// zero polynomial is exactly the empty term list.
class Poly {
public:
    struct Term {
        Monomial monomial;
        Rational coeff;
        friend bool operator==(const Term&, const Term&) = default;
    };

    Poly() = default;
    Poly(const Rational& c); // NOLINT: scalars embed implicitly
    Poly(long c) : Poly(Rational(c)) {} // NOLINT
    Poly(int c) : Poly(Rational(c)) {}  // NOLINT

    static Poly variable(VarId v);
    static Poly variable(std::string_view name) { return variable(intern_variable(name)); }
    static Poly monomial(Monomial m, Rational c = 1);
    /// Takes terms in any order; sorts and merges.
    static Poly from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    /// Constant term (zero when absent).
    Rational constant_term() const;
    Rational coefficient(const Monomial& m) const;
    /// Total degree; -1 for the zero polynomial.
    int degree() const noexcept;
    bool is_homogeneous() const noexcept;
    std::vector<VarId> variables() const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rational& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    friend Poly operator-(Poly a);
    friend bool operator==(const Poly& a, const Poly& b) = default;

    /// Replaces the assigned indeterminates by values; others stay symbolic.
    Poly substitute(const std::unordered_map<VarId, Rational>& values) const;

    std::string to_string() const;

private:
    std::vector<Term> terms_;
};

/// Reads the text produced by Poly::to_string (e.g. "3/2*a_1^2*b_2 - a_1 + 1").
Poly parse_poly(std::string_view text);

Poly pow(const Poly& p, unsigned k);

} // namespace frobenia

#endif
