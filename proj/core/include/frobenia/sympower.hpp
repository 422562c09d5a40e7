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

#ifndef FROBENIA_SYMPOWER_HPP
#define FROBENIA_SYMPOWER_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "frobenia/check.hpp"
#include "frobenia/frobenius.hpp"
#include "frobenia/linmap.hpp"
#include "frobenia/tensor.hpp"

namespace frobenia {

/// Nondecreasing index sequence standing for a multiset of basis indices.
using Multiset = std::vector<std::size_t>;

/// All size-n multisets of {0, ..., d-1} in lexicographic order.
std::vector<Multiset> multisets(std::size_t d, std::size_t n);

/// S^n A inside A^{⊗n}. Basis vector e_M is the sum of the distinct
/// arrangements of M, without normalization.
struct SymPower {
    AlgebraPtr base;
    std::size_t n = 0;
    TensorShape ambient;
    std::vector<Multiset> basis_multisets;
    ColumnBasis inclusion; // column j = e_{M_j} in A^{⊗n}
    AlgebraPtr algebra;

    std::size_t index_of(const Multiset& m) const;

    /// Coordinates in the e_M basis of a symmetric tensor; throws
    /// std::logic_error if the tensor is not symmetric.
    template <Scalar S>
    BasicElement<S> from_ambient(std::span<const S> v) const
    {
        auto c = inclusion.coordinates<S>(v);
        if (!c)
            throw std::logic_error("tensor does not lie in the symmetric power");
        return {algebra, std::move(*c)};
    }
};

/// Builds S^n A (n >= 1) with structure constants obtained by multiplying the
/// inclusion images in A^{⊗n}; closure is verified.
SymPower sym_power(const AlgebraPtr& a, std::size_t n);

/// Δ(a) = a⊗1⊗...⊗1 + ... + 1⊗...⊗1⊗a in the e_M basis.
template <Scalar S>
BasicElement<S> delta(const SymPower& sp, const BasicElement<S>& a)
{
    std::vector<S> sum(sp.ambient.dim());
    for (std::size_t s = 0; s < sp.n; ++s) {
        const auto d = sp.ambient.slot_element(s, a);
        for (std::size_t i = 0; i < sum.size(); ++i)
            if (!is_zero(d[i]))
                sum[i] += d[i];
    }
    return sp.from_ambient<S>(sum);
}

/// Coefficients of det(1 + Λ(a) z): the elementary symmetric polynomials of
/// the diagonal entries 1⊗...⊗a⊗...⊗1, expressed in the e_M basis.
template <Scalar S>
std::vector<BasicElement<S>> elem_sym_coeffs(const SymPower& sp, const BasicElement<S>& a)
{
    const auto unit = sp.ambient.unit();
    std::vector<std::vector<S>> e(sp.n + 1, std::vector<S>(sp.ambient.dim()));
    for (std::size_t i = 0; i < unit.size(); ++i)
        e[0][i] = S(unit[i]);
    for (std::size_t s = 0; s < sp.n; ++s) {
        const auto d = sp.ambient.slot_element(s, a);
        for (std::size_t k = s + 1; k >= 1; --k) {
            const auto term = sp.ambient.multiply<S>(e[k - 1], d);
            for (std::size_t i = 0; i < term.size(); ++i)
                if (!is_zero(term[i]))
                    e[k][i] += term[i];
        }
    }
    std::vector<BasicElement<S>> out;
    out.reserve(sp.n + 1);
    for (const auto& v : e)
        out.push_back(sp.from_ambient<S>(v));
    return out;
}

/// Result of checking F(e_i e_j) = F(e_i) F(e_j) over basis pairs, then F(1) = 1.
struct HomCheck {
    bool passed = true;
    bool unit_failed = false;
    std::size_t i = 0, j = 0; // offending basis pair when !unit_failed
    Element lhs, rhs;

    explicit operator bool() const noexcept { return passed; }
};

HomCheck is_algebra_hom(const LinMap& f);

/// Thrown when a map that must be an algebra homomorphism is not one.
class NotAHomomorphism : public std::invalid_argument {
public:
    NotAHomomorphism(const std::string& what, HomCheck check)
        : std::invalid_argument(what), check_(std::move(check))
    {
    }
    const HomCheck& check() const noexcept { return check_; }

private:
    HomCheck check_;
};

/// φ = F ∘ Δ for an algebra homomorphism F: S^n A → B, certified as an
/// n-homomorphism.
CertifiedNHom alpha(const SymPower& sp, const LinMap& f);

/// The homomorphism F: S^n A → B with F(e_M) = Φ_n(M) / prod_j m_j!, where
/// m_j are the multiplicities in M. Multiplicativity is verified.
LinMap beta(const SymPower& sp, const CertifiedNHom& phi);

/// F(det(1 + Λ(a) z)) = R_φ(a, z) for generic a, plus ψ_{n+1} = ψ_{n+2} = 0.
IdentityCheck verify_det_identity(const SymPower& sp, const LinMap& f, const LinMap& phi);

/// Coordinate functionals e_M^*: S^n A → Q that are algebra homomorphisms.
std::vector<LinMap> coordinate_homomorphisms(const SymPower& sp);

/// Serialization label, e.g. "{0,0,1}".
std::string to_string(const Multiset& m);

} // namespace frobenia

#endif
