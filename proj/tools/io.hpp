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

#ifndef FROBENIA_TOOLS_IO_HPP
#define FROBENIA_TOOLS_IO_HPP

// JSON formats for algebras and linear maps.
//
//   algebra: {"label": str, "dim": n, "unit": [r, ...],
//             "structure_constants": [[[r, ...], ...], ...]}
//            {"preset": "functions", "points": m}
//            {"preset": "quotient", "poly": [r, ...]}   (constant term first)
//   map:     {"domain": algebra | "file.json", "codomain": algebra | "file.json",
//             "matrix": [[r, ...], ...]}
//
// Rationals are strings "p/q" or "p", or JSON integers.

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "frobenia/linmap.hpp"
#include "frobenia/pq.hpp"
#include "frobenia/sympower.hpp"

namespace frobenia::io {

using Json = nlohmann::ordered_json;

/// Input error carrying the location (file and JSON pointer) of the fault.
class IoError : public std::runtime_error {
public:
    IoError(const std::string& location, const std::string& message)
        : std::runtime_error(location + ": " + message), location_(location)
    {
    }
    const std::string& location() const noexcept { return location_; }

private:
    std::string location_;
};

Json read_json_file(const std::filesystem::path& path);

Rational parse_rational_json(const Json& j, const std::string& location);
Json rational_json(const Rational& r);

/// Parses an algebra; with `validate` set, an axiom failure is an IoError.
AlgebraPtr parse_algebra(const Json& j, const std::string& location, bool validate = true);
AlgebraPtr load_algebra(const std::filesystem::path& path, bool validate = true);
Json algebra_json(const Algebra& a);

/// `default_domain` is used when the "domain" key is absent; file references
/// are resolved against `base_dir`.
LinMap parse_map(const Json& j, const std::string& location, const std::filesystem::path& base_dir,
                 const AlgebraPtr& default_domain = nullptr);
LinMap load_map(const std::filesystem::path& path, const AlgebraPtr& default_domain = nullptr);
Json map_json(const LinMap& f);

/// Comma-separated rationals, e.g. "1,-2/3".
Element parse_element(const AlgebraPtr& a, const std::string& text, const std::string& location);
Json element_json(const Element& e);
Json element_json(const PolyElement& e);

Json sym_power_json(const SymPower& sp);
Json sym_pq_json(const PqSymPower& s);
Json oracle_json(const PqOracle& o);

} // namespace frobenia::io

#endif
