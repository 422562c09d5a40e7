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

#ifndef FROBENIA_CHECK_HPP
#define FROBENIA_CHECK_HPP

#include <optional>
#include <string>
#include <utility>

#include "frobenia/element.hpp"

namespace frobenia {

/// Outcome of an exact identity check. On failure `where` names the first
/// offending coefficient and `witness` holds the nonzero difference lhs - rhs.
struct IdentityCheck {
    bool passed = true;
    std::string where;
    std::optional<PolyElement> witness;

    explicit operator bool() const noexcept { return passed; }

    static IdentityCheck pass() { return {}; }
    static IdentityCheck fail(std::string where, PolyElement witness)
    {
        return {false, std::move(where), std::move(witness)};
    }
};

inline PolyElement as_poly(const Element& e) { return lift(e); }
inline const PolyElement& as_poly(const PolyElement& e) { return e; }

} // namespace frobenia

#endif
