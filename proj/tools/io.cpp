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

#include "io.hpp"

#include <fstream>
#include <sstream>

namespace frobenia::io {

namespace {

const Json& require(const Json& j, const char* key, const std::string& location)
{
    if (!j.is_object())
        throw IoError(location, "expected a JSON object");
    const auto it = j.find(key);
    if (it == j.end())
        throw IoError(location, std::string("missing key \"") + key + "\"");
    return *it;
}

std::size_t parse_size(const Json& j, const std::string& location)
{
    if (!j.is_number_integer() || j.get<long long>() < 0)
        throw IoError(location, "expected a nonnegative integer");
    return j.get<std::size_t>();
}

std::vector<Rational> parse_vector(const Json& j, const std::string& location)
{
    if (!j.is_array())
        throw IoError(location, "expected an array of rationals");
    std::vector<Rational> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(parse_rational_json(j[i], location + "/" + std::to_string(i)));
    return out;
}

std::string describe(const AxiomViolation& v)
{
    std::string s = v.axiom + " fails at (";
    for (std::size_t i = 0; i < v.indices.size(); ++i)
        s += (i ? "," : "") + std::to_string(v.indices[i]);
    return s + "): " + to_string(v.lhs) + " != " + to_string(v.rhs);
}

} // namespace

Json read_json_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw IoError(path.string(), "cannot open file");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw IoError(path.string(), std::string("invalid JSON: ") + e.what());
    }
}

Rational parse_rational_json(const Json& j, const std::string& location)
{
    if (j.is_number_integer())
        return Rational(j.dump());
    if (!j.is_string())
        throw IoError(location, "expected a rational as a string \"p/q\" or an integer");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const ParseError& e) {
        throw IoError(location, e.what());
    }
}

Json rational_json(const Rational& r) { return to_string(r); }

AlgebraPtr parse_algebra(const Json& j, const std::string& location, bool validate)
{
    if (!j.is_object())
        throw IoError(location, "expected an algebra object");
    AlgebraPtr a;
    if (const auto preset = j.find("preset"); preset != j.end()) {
        if (!preset->is_string())
            throw IoError(location + "/preset", "expected a string");
        const std::string name = preset->get<std::string>();
        try {
            if (name == "functions") {
                a = function_algebra(parse_size(require(j, "points", location), location + "/points"));
            } else if (name == "quotient") {
                a = quotient_algebra(parse_vector(require(j, "poly", location), location + "/poly"));
            } else {
                throw IoError(location + "/preset", "unknown preset \"" + name + "\"");
            }
        } catch (const std::invalid_argument& e) {
            throw IoError(location, e.what());
        }
    } else {
        const std::size_t dim = parse_size(require(j, "dim", location), location + "/dim");
        if (dim == 0)
            throw IoError(location + "/dim", "dimension must be positive");
        auto unit = parse_vector(require(j, "unit", location), location + "/unit");
        if (unit.size() != dim)
            throw IoError(location + "/unit", "expected " + std::to_string(dim) + " entries");
        const Json& sc = require(j, "structure_constants", location);
        const std::string sl = location + "/structure_constants";
        if (!sc.is_array() || sc.size() != dim)
            throw IoError(sl, "expected a " + std::to_string(dim) + "x" + std::to_string(dim) + "x" +
                                  std::to_string(dim) + " array");
        std::vector<Rational> constants;
        constants.reserve(dim * dim * dim);
        for (std::size_t i = 0; i < dim; ++i) {
            const std::string li = sl + "/" + std::to_string(i);
            if (!sc[i].is_array() || sc[i].size() != dim)
                throw IoError(li, "expected " + std::to_string(dim) + " rows");
            for (std::size_t k = 0; k < dim; ++k) {
                auto row = parse_vector(sc[i][k], li + "/" + std::to_string(k));
                if (row.size() != dim)
                    throw IoError(li + "/" + std::to_string(k), "expected " + std::to_string(dim) + " entries");
                for (auto& c : row)
                    constants.push_back(std::move(c));
            }
        }
        std::string label = "algebra";
        if (const auto it = j.find("label"); it != j.end()) {
            if (!it->is_string())
                throw IoError(location + "/label", "expected a string");
            label = it->get<std::string>();
        }
        a = Algebra::create(std::move(label), std::move(unit), std::move(constants));
    }
    if (const auto violations = validate ? validate_algebra(*a) : std::vector<AxiomViolation>{}; !violations.empty())
        throw IoError(location, "not a commutative associative unital algebra: " + describe(violations.front()));
    return a;
}

AlgebraPtr load_algebra(const std::filesystem::path& path, bool validate)
{
    return parse_algebra(read_json_file(path), path.string() + "#", validate);
}

Json algebra_json(const Algebra& a)
{
    const std::size_t n = a.dim();
    Json j;
    j["label"] = a.label();
    j["dim"] = n;
    Json unit = Json::array();
    for (const auto& u : a.unit())
        unit.push_back(rational_json(u));
    j["unit"] = std::move(unit);
    Json sc = Json::array();
    for (std::size_t i = 0; i < n; ++i) {
        Json rows = Json::array();
        for (std::size_t j2 = 0; j2 < n; ++j2) {
            Json row = Json::array();
            for (std::size_t k = 0; k < n; ++k)
                row.push_back(rational_json(a.constant(i, j2, k)));
            rows.push_back(std::move(row));
        }
        sc.push_back(std::move(rows));
    }
    j["structure_constants"] = std::move(sc);
    return j;
}

namespace {

AlgebraPtr algebra_ref(const Json& j, const std::string& location, const std::filesystem::path& base_dir)
{
    if (j.is_string()) {
        const std::filesystem::path ref = j.get<std::string>();
        return load_algebra(ref.is_absolute() ? ref : base_dir / ref);
    }
    return parse_algebra(j, location);
}

} // namespace

LinMap parse_map(const Json& j, const std::string& location, const std::filesystem::path& base_dir,
                 const AlgebraPtr& default_domain)
{
    if (!j.is_object())
        throw IoError(location, "expected a map object");
    AlgebraPtr domain = default_domain;
    if (const auto it = j.find("domain"); it != j.end())
        domain = algebra_ref(*it, location + "/domain", base_dir);
    if (!domain)
        throw IoError(location, "missing key \"domain\"");
    const AlgebraPtr codomain = algebra_ref(require(j, "codomain", location), location + "/codomain", base_dir);
    const Json& mj = require(j, "matrix", location);
    const std::string ml = location + "/matrix";
    if (!mj.is_array() || mj.size() != codomain->dim())
        throw IoError(ml, "expected " + std::to_string(codomain->dim()) + " rows (codomain dimension)");
    Matrix m(codomain->dim(), domain->dim());
    for (std::size_t i = 0; i < mj.size(); ++i) {
        const auto row = parse_vector(mj[i], ml + "/" + std::to_string(i));
        if (row.size() != domain->dim())
            throw IoError(ml + "/" + std::to_string(i),
                          "expected " + std::to_string(domain->dim()) + " columns (domain dimension)");
        for (std::size_t k = 0; k < row.size(); ++k)
            m(i, k) = row[k];
    }
    return LinMap(domain, codomain, std::move(m));
}

LinMap load_map(const std::filesystem::path& path, const AlgebraPtr& default_domain)
{
    return parse_map(read_json_file(path), path.string() + "#", path.parent_path(), default_domain);
}

Json map_json(const LinMap& f)
{
    Json j;
    j["domain"] = algebra_json(*f.domain());
    j["codomain"] = algebra_json(*f.codomain());
    Json rows = Json::array();
    for (std::size_t i = 0; i < f.matrix().rows(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < f.matrix().cols(); ++k)
            row.push_back(rational_json(f.matrix()(i, k)));
        rows.push_back(std::move(row));
    }
    j["matrix"] = std::move(rows);
    return j;
}

Element parse_element(const AlgebraPtr& a, const std::string& text, const std::string& location)
{
    std::vector<Rational> coords;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            coords.push_back(parse_rational(item));
        } catch (const ParseError& e) {
            throw IoError(location, e.what());
        }
    }
    if (coords.size() != a->dim())
        throw IoError(location, "expected " + std::to_string(a->dim()) + " coordinates, got " +
                                    std::to_string(coords.size()));
    return Element(a, std::move(coords));
}

Json element_json(const Element& e)
{
    Json j = Json::array();
    for (const auto& c : e.coords())
        j.push_back(rational_json(c));
    return j;
}

Json element_json(const PolyElement& e)
{
    Json j = Json::array();
    for (const auto& c : e.coords())
        j.push_back(c.to_string());
    return j;
}

namespace {

Json multiset_json(const Multiset& m)
{
    Json j = Json::array();
    for (const auto i : m)
        j.push_back(i);
    return j;
}

} // namespace

Json sym_power_json(const SymPower& sp)
{
    Json j = algebra_json(*sp.algebra);
    Json ms = Json::array();
    for (const auto& m : sp.basis_multisets)
        ms.push_back(multiset_json(m));
    j["basis_multisets"] = std::move(ms);
    return j;
}

Json sym_pq_json(const PqSymPower& s)
{
    Json j = algebra_json(*s.algebra);
    Json cols = Json::array();
    for (std::size_t c = 0; c < s.basis.cols(); ++c) {
        Json col = Json::array();
        for (const auto& x : s.basis.column(c))
            col.push_back(rational_json(x));
        cols.push_back(std::move(col));
    }
    const auto left = multisets(s.base->dim(), s.p);
    const auto right = s.q == 0 ? std::vector<Multiset>{Multiset{}} : multisets(s.base->dim(), s.q);
    Json amb = Json::array();
    for (const auto& l : left)
        for (const auto& r : right)
            amb.push_back(Json::array({multiset_json(l), multiset_json(r)}));
    j["ambient_basis"] = std::move(amb);
    j["basis"] = std::move(cols);
    return j;
}

Json oracle_json(const PqOracle& o)
{
    Json j = algebra_json(*o.algebra);
    Json classes = Json::array();
    for (const auto& c : o.classes) {
        Json tuples = Json::array();
        for (const auto f : c) {
            Json t = Json::array();
            std::vector<std::size_t> digits(o.p + o.q);
            std::size_t x = f;
            for (std::size_t s = digits.size(); s-- > 0;) {
                digits[s] = x % o.m;
                x /= o.m;
            }
            for (const auto d : digits)
                t.push_back(d);
            tuples.push_back(std::move(t));
        }
        classes.push_back(std::move(tuples));
    }
    j["classes"] = std::move(classes);
    return j;
}

} // namespace frobenia::io
