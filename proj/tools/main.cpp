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

// frobenia: command-line front end. Reports go to stdout as JSON, logs to
// stderr. Exit status: 0 ok, 1 refuted, 2 error.

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <variant>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "frobenia/charfn.hpp"
#include "frobenia/connected.hpp"
#include "frobenia/frobenius.hpp"
#include "frobenia/pq.hpp"
#include "frobenia/sympower.hpp"
#include "io.hpp"
#include "report.hpp"

namespace fs = std::filesystem;
using namespace frobenia;
using frobenia::cli::Json;
using frobenia::cli::Report;
using frobenia::cli::Status;

namespace {

struct Globals {
    std::uint64_t seed = 0;
    std::string format = "json";
    bool quiet = false;
};

/// Paths of the algebra and map arguments shared by most commands.
struct MapArgs {
    std::string algebra;
    std::string map;
};

void add_map_args(CLI::App* cmd, MapArgs& args)
{
    cmd->add_option("algebra", args.algebra, "Domain algebra JSON")->required()->check(CLI::ExistingFile);
    cmd->add_option("map", args.map, "Linear map JSON (its domain defaults to the algebra)")
        ->required()
        ->check(CLI::ExistingFile);
}

struct Loaded {
    AlgebraPtr algebra;
    LinMap map;
};

Loaded load(Report& r, const MapArgs& args)
{
    r.add_file(args.algebra);
    r.add_file(args.map);
    AlgebraPtr a = io::load_algebra(args.algebra);
    LinMap f = io::load_map(args.map, a);
    if (!same_algebra(f.domain(), a))
        throw io::IoError(args.map, "map domain differs from the algebra " + args.algebra);
    return {a, std::move(f)};
}

Json classification_json(const Classification& c)
{
    Json j;
    j["kind"] = to_string(c.kind);
    if (c.kind == Classification::Kind::n_hom)
        j["n"] = c.n;
    j["chi"] = io::element_json(c.chi);
    j["chi_scalar"] = c.chi_scalar ? io::rational_json(*c.chi_scalar) : Json();
    j["bound"] = c.bound;
    j["witness"] = c.witness ? io::element_json(*c.witness) : Json();
    j["reason"] = c.reason;
    return j;
}

Json candidate_json(const PqCandidate& c)
{
    Json j;
    j["p"] = c.p;
    j["q"] = c.q;
    j["status"] = to_string(c.status);
    j["chi"] = io::element_json(c.chi);
    j["k_min"] = c.k_min;
    j["k_max"] = c.k_max;
    j["refuted_at"] = c.refuted_at ? Json(*c.refuted_at) : Json();
    j["witness"] = c.witness ? io::element_json(*c.witness) : Json();
    j["reason"] = c.reason;
    return j;
}

template <Scalar S>
Json series_json(const TruncSeries<S>& s)
{
    Json j = Json::array();
    for (const auto& c : s.coeffs())
        j.push_back(io::element_json(c));
    return j;
}

/// The explicit element from --at, or a generic one tagged "a".
std::variant<Element, PolyElement> element_arg(const AlgebraPtr& a, const std::optional<std::string>& at,
                                               SymbolScope& scope)
{
    if (at)
        return io::parse_element(a, *at, "--at");
    return scope.generic(a, "a");
}

void write_output(const std::string& path, const Json& j)
{
    std::ofstream out(path);
    if (!out)
        throw io::IoError(path, "cannot write file");
    out << j.dump(2) << '\n';
}

CertifiedNHom require_n_hom(const LinMap& phi, std::size_t n_max, Json& result)
{
    auto c = classify_n(phi, n_max);
    result["classification"] = classification_json(c);
    if (!c.certified)
        throw std::invalid_argument("map is not a certified n-homomorphism with n <= " + std::to_string(n_max) +
                                    ": " + c.reason);
    return *c.certified;
}

using Handler = std::function<void(Report&)>;

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact computations with Frobenius n-homomorphisms and their characteristic functions"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--seed", g.seed, "Seed for randomized steps")->capture_default_str();
    app.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"json"}))->capture_default_str();
    app.add_flag("--quiet", g.quiet, "No log lines on stderr");

    Handler handler;
    std::string command;
    const auto sub = [&](const std::string& name, const std::string& help) {
        CLI::App* c = app.add_subcommand(name, help);
        c->fallthrough();
        return c;
    };

    // algcheck
    std::string alg_path;
    {
        auto* c = sub("algcheck", "Check the algebra axioms");
        c->add_option("algebra", alg_path, "Algebra JSON")->required()->check(CLI::ExistingFile);
        c->callback([&] {
            handler = [&](Report& r) {
                r.add_file(alg_path);
                const AlgebraPtr a = io::load_algebra(alg_path, false);
                const auto violations = validate_algebra(*a);
                r.result["label"] = a->label();
                r.result["dim"] = a->dim();
                Json vs = Json::array();
                for (const auto& v : violations) {
                    Json idx = Json::array();
                    for (const auto i : v.indices)
                        idx.push_back(i);
                    vs.push_back({{"axiom", v.axiom},
                                  {"indices", idx},
                                  {"lhs", io::rational_json(v.lhs)},
                                  {"rhs", io::rational_json(v.rhs)}});
                }
                r.result["valid"] = violations.empty();
                r.result["violations"] = vs;
                if (!violations.empty())
                    r.refute();
            };
        });
    }

    // connected
    unsigned trials = 32;
    {
        auto* c = sub("connected", "Search for a nontrivial idempotent");
        c->add_option("algebra", alg_path, "Algebra JSON")->required()->check(CLI::ExistingFile);
        c->add_option("--trials", trials, "Random elements to try")->capture_default_str();
        c->callback([&] {
            handler = [&](Report& r) {
                r.add_file(alg_path);
                r.add_parameter("trials", trials);
                r.add_parameter("seed", g.seed);
                const auto res = find_idempotent_split(io::load_algebra(alg_path), trials, g.seed);
                r.result["kind"] = to_string(res.kind);
                r.result["idempotent"] = res.idempotent ? io::element_json(*res.idempotent) : Json();
                r.result["radical_dim"] = res.radical_dim;
                r.result["reason"] = res.reason;
            };
        });
    }

    // charfn
    MapArgs margs;
    std::size_t order = 8;
    std::optional<std::string> at;
    {
        auto* c = sub("charfn", "Characteristic function coefficients by both routes");
        add_map_args(c, margs);
        c->add_option("--order", order, "Truncation order")->capture_default_str();
        c->add_option("--at", at, "Element coordinates, comma separated (default: generic element)");
        c->add_flag("--symbolic", "Use a generic element (default)");
        c->callback([&] {
            handler = [&](Report& r) {
                auto [a, phi] = load(r, margs);
                r.add_parameter("order", order);
                SymbolScope scope;
                std::visit(
                    [&](const auto& x) {
                        const auto direct = char_series_direct(phi, x, order);
                        const auto newton = char_series_newton(phi, x, order);
                        r.result["element"] = io::element_json(x);
                        r.result["direct"] = series_json(direct);
                        r.result["newton"] = series_json(newton);
                        r.result["routes_agree"] = direct == newton;
                        if (!(direct == newton))
                            r.refute();
                    },
                    element_arg(a, at, scope));
            };
        });
    }

    // frobenius
    std::size_t k = 2;
    std::vector<std::string> elems;
    {
        auto* c = sub("frobenius", "Evaluate the Frobenius form by recursion and by polarization");
        add_map_args(c, margs);
        c->add_option("--k", k, "Number of arguments")->capture_default_str()->check(CLI::Range(1, 12));
        c->add_option("--arg", elems, "Argument coordinates (repeat k times; default: generic elements)");
        c->callback([&] {
            handler = [&](Report& r) {
                auto [a, phi] = load(r, margs);
                r.add_parameter("k", k);
                const auto run = [&](const auto& args) {
                    const auto form = frobenius_form(phi, args);
                    const auto polar = polarize(phi, k, args);
                    Json js = Json::array();
                    for (const auto& x : args)
                        js.push_back(io::element_json(x));
                    r.result["args"] = js;
                    r.result["frobenius_form"] = io::element_json(form);
                    r.result["polarized"] = io::element_json(polar);
                    r.result["routes_agree"] = form == polar;
                    if (!(form == polar))
                        r.refute();
                };
                if (elems.empty()) {
                    SymbolScope scope;
                    std::vector<PolyElement> args;
                    for (std::size_t i = 1; i <= k; ++i)
                        args.push_back(scope.generic(a, "x" + std::to_string(i)));
                    run(args);
                } else {
                    if (elems.size() != k)
                        throw std::invalid_argument("expected " + std::to_string(k) + " --arg values");
                    std::vector<Element> args;
                    for (std::size_t i = 0; i < k; ++i)
                        args.push_back(io::parse_element(a, elems[i], "--arg " + std::to_string(i + 1)));
                    run(args);
                }
            };
        });
    }

    // classify
    std::optional<std::size_t> max_n;
    std::vector<std::size_t> pq_bounds;
    std::optional<std::int64_t> kmax;
    {
        auto* c = sub("classify", "Classify as an n-homomorphism or a p|q-homomorphism");
        add_map_args(c, margs);
        auto* mn = c->add_option("--max-n", max_n, "Largest n to test");
        auto* pq = c->add_option("--pq", pq_bounds, "Bounds P Q for p|q classification")->expected(2);
        c->add_option("--kmax", kmax, "Largest Hankel shift (default P+Q+3)");
        mn->excludes(pq);
        c->callback([&] {
            if (!max_n && pq_bounds.empty())
                throw CLI::ValidationError("classify", "one of --max-n or --pq is required");
            handler = [&](Report& r) {
                auto [a, phi] = load(r, margs);
                if (max_n) {
                    r.add_parameter("max_n", *max_n);
                    const auto cl = classify_n(phi, *max_n);
                    r.result = classification_json(cl);
                    if (cl.kind != Classification::Kind::n_hom)
                        r.refute();
                    return;
                }
                const std::size_t p_max = pq_bounds[0], q_max = pq_bounds[1];
                const std::int64_t km = kmax.value_or(static_cast<std::int64_t>(p_max + q_max + 3));
                r.add_parameter("pq", {p_max, q_max});
                r.add_parameter("kmax", km);
                const auto found = classify_pq(phi, p_max, q_max, km);
                Json cs = Json::array();
                for (const auto& cand : found)
                    cs.push_back(candidate_json(cand));
                r.result["chi"] = io::element_json(value_at_unit(phi));
                r.result["certified"] = cs;
                r.result["minimal"] = found.empty() ? Json() : Json({{"p", found[0].p}, {"q", found[0].q}});
                if (found.empty())
                    r.refute();
            };
        });
    }

    // ber
    std::size_t n_bound = 8;
    {
        auto* c = sub("ber", "Berezinian of a certified n-homomorphism");
        add_map_args(c, margs);
        c->add_option("--max-n", n_bound, "Largest n to test")->capture_default_str();
        c->add_option("--at", at, "Element coordinates, comma separated (default: generic element)");
        c->add_flag("--symbolic", "Use a generic element (default)");
        c->callback([&] {
            handler = [&](Report& r) {
                auto [a, phi] = load(r, margs);
                r.add_parameter("max_n", n_bound);
                const auto cert = require_n_hom(phi, n_bound, r.result);
                SymbolScope scope;
                std::visit(
                    [&](const auto& x) {
                        r.result["element"] = io::element_json(x);
                        r.result["berezinian"] = io::element_json(berezinian(cert, x));
                    },
                    element_arg(a, at, scope));
            };
        });
    }

    // verify-ber
    {
        auto* c = sub("verify-ber", "Check ber = psi_n and multiplicativity symbolically");
        add_map_args(c, margs);
        c->add_option("--max-n", n_bound, "Largest n to test")->capture_default_str();
        c->callback([&] {
            handler = [&](Report& r) {
                auto [a, phi] = load(r, margs);
                r.add_parameter("max_n", n_bound);
                const auto cert = require_n_hom(phi, n_bound, r.result);
                const auto psi_n = verify_ber_psi_n(cert);
                const auto mult = verify_ber_mult(cert);
                const auto ident2 = verify_ident2(cert);
                r.result["ber_equals_psi_n"] = cli::check_json(psi_n);
                r.result["multiplicative"] = cli::check_json(mult);
                r.result["product_rule"] = cli::check_json(ident2);
                if (!psi_n || !mult || !ident2)
                    r.refute();
            };
        });
    }

    // sympower
    std::size_t n = 2;
    std::optional<std::string> out_path;
    {
        auto* c = sub("sympower", "Build the symmetric power S^n A");
        c->add_option("algebra", alg_path, "Algebra JSON")->required()->check(CLI::ExistingFile);
        c->add_option("-n", n, "Power")->required()->check(CLI::PositiveNumber);
        c->add_option("-o,--output", out_path, "Also write the algebra JSON here");
        c->callback([&] {
            handler = [&](Report& r) {
                r.add_file(alg_path);
                r.add_parameter("n", n);
                const auto sp = sym_power(io::load_algebra(alg_path), n);
                r.result["algebra"] = io::sym_power_json(sp);
                r.result["valid"] = validate_algebra(*sp.algebra).empty();
                if (out_path)
                    write_output(*out_path, r.result["algebra"]);
            };
        });
    }

    // lift
    {
        auto* c = sub("lift", "Lift an n-homomorphism to an algebra homomorphism S^n A -> B");
        add_map_args(c, margs);
        c->add_option("-n", n, "Degree")->required()->check(CLI::PositiveNumber);
        c->add_option("-o,--output", out_path, "Also write the map JSON here");
        c->callback([&] {
            handler = [&](Report& r) {
                auto [a, phi] = load(r, margs);
                r.add_parameter("n", n);
                const auto cert = require_n_hom(phi, n, r.result);
                if (cert.n() != n)
                    throw std::invalid_argument("map is an " + std::to_string(cert.n()) + "-homomorphism, not an " +
                                                std::to_string(n) + "-homomorphism");
                const auto sp = sym_power(a, n);
                const LinMap f = beta(sp, cert);
                r.result["map"] = io::map_json(f);
                r.result["basis_multisets"] = io::sym_power_json(sp)["basis_multisets"];
                if (out_path)
                    write_output(*out_path, r.result["map"]);
            };
        });
    }

    // restrict
    std::string hom_path;
    {
        auto* c = sub("restrict", "Restrict an algebra homomorphism S^n A -> B along the diagonal");
        c->add_option("algebra", alg_path, "Base algebra JSON")->required()->check(CLI::ExistingFile);
        c->add_option("map", hom_path, "Map JSON on S^n A (its domain defaults to S^n A)")
            ->required()
            ->check(CLI::ExistingFile);
        c->add_option("-n", n, "Degree")->required()->check(CLI::PositiveNumber);
        c->add_option("-o,--output", out_path, "Also write the map JSON here");
        c->callback([&] {
            handler = [&](Report& r) {
                r.add_file(alg_path);
                r.add_file(hom_path);
                r.add_parameter("n", n);
                const auto sp = sym_power(io::load_algebra(alg_path), n);
                const LinMap f = io::load_map(hom_path, sp.algebra);
                try {
                    const auto cert = alpha(sp, f);
                    r.result["map"] = io::map_json(cert.map());
                    r.result["n"] = cert.n();
                    if (out_path)
                        write_output(*out_path, r.result["map"]);
                } catch (const NotAHomomorphism& e) {
                    const auto& chk = e.check();
                    r.result["homomorphism"] = false;
                    r.result["unit_failed"] = chk.unit_failed;
                    r.result["pair"] = chk.unit_failed ? Json() : Json({chk.i, chk.j});
                    r.result["lhs"] = io::element_json(chk.lhs);
                    r.result["rhs"] = io::element_json(chk.rhs);
                    r.refute();
                }
            };
        });
    }

    // verify-det
    std::optional<std::string> lift_path;
    {
        auto* c = sub("verify-det", "Check F(det(1 + L(a) z)) = R(a, z) symbolically");
        add_map_args(c, margs);
        c->add_option("-n", n, "Degree")->required()->check(CLI::PositiveNumber);
        c->add_option("--lift", lift_path, "Homomorphism S^n A -> B (default: the lift of the map)")
            ->check(CLI::ExistingFile);
        c->callback([&] {
            handler = [&](Report& r) {
                auto [a, phi] = load(r, margs);
                r.add_parameter("n", n);
                const auto sp = sym_power(a, n);
                std::optional<LinMap> f;
                if (lift_path) {
                    r.add_file(*lift_path);
                    f = io::load_map(*lift_path, sp.algebra);
                } else {
                    const auto cert = require_n_hom(phi, n, r.result);
                    if (cert.n() != n)
                        throw std::invalid_argument("map is an " + std::to_string(cert.n()) +
                                                    "-homomorphism, not an " + std::to_string(n) + "-homomorphism");
                    f = beta(sp, cert);
                }
                const auto chk = verify_det_identity(sp, *f, phi);
                r.result["identity"] = cli::check_json(chk);
                if (!chk)
                    r.refute();
            };
        });
    }

    // hankel
    std::size_t p = 1, q = 1;
    {
        auto* c = sub("hankel", "Hankel determinant test for a p|q-homomorphism");
        add_map_args(c, margs);
        c->add_option("-p", p, "Numerator degree")->required();
        c->add_option("-q", q, "Denominator degree")->required();
        c->add_option("--kmax", kmax, "Largest shift (default p+q+3)");
        c->callback([&] {
            handler = [&](Report& r) {
                auto [a, phi] = load(r, margs);
                const std::int64_t km = kmax.value_or(static_cast<std::int64_t>(p + q + 3));
                r.add_parameter("p", p);
                r.add_parameter("q", q);
                r.add_parameter("kmax", km);
                const auto cand = hankel_check(phi, p, q, km);
                r.result = candidate_json(cand);
                if (!cand.certified())
                    r.refute();
            };
        });
    }

    // sympq
    {
        auto* c = sub("sympq", "Build S^{p|q} A");
        c->add_option("algebra", alg_path, "Algebra JSON")->required()->check(CLI::ExistingFile);
        c->add_option("-p", p, "First block size")->required()->check(CLI::PositiveNumber);
        c->add_option("-q", q, "Second block size")->required();
        c->add_option("-o,--output", out_path, "Also write the algebra JSON here");
        c->callback([&] {
            handler = [&](Report& r) {
                r.add_file(alg_path);
                r.add_parameter("p", p);
                r.add_parameter("q", q);
                const auto s = sym_pq_power(io::load_algebra(alg_path), p, q);
                r.result["algebra"] = io::sym_pq_json(s);
                r.result["valid"] = validate_algebra(*s.algebra).empty();
                if (out_path)
                    write_output(*out_path, r.result["algebra"]);
            };
        });
    }

    // sympq-oracle
    std::size_t m = 2;
    bool compare = false;
    {
        auto* c = sub("sympq-oracle", "Functions on the identification space of m^(p+q) tuples");
        c->add_option("-m", m, "Number of points")->required()->check(CLI::PositiveNumber);
        c->add_option("-p", p, "First block size")->required();
        c->add_option("-q", q, "Second block size")->required();
        c->add_flag("--compare", compare, "Compare with S^{p|q} of functions on m points");
        c->add_option("-o,--output", out_path, "Also write the algebra JSON here");
        c->callback([&] {
            handler = [&](Report& r) {
                r.add_parameter("m", m);
                r.add_parameter("p", p);
                r.add_parameter("q", q);
                const auto o = sym_pq_oracle(m, p, q);
                r.result["algebra"] = io::oracle_json(o);
                if (compare) {
                    const auto s = sym_pq_power(function_algebra(m), p, q);
                    const auto cmp = compare_with_oracle(s, o);
                    r.result["comparison"] = {{"same_dimension", cmp.same_dimension},
                                              {"same_subspace", cmp.same_subspace},
                                              {"isomorphic", cmp.isomorphic},
                                              {"detail", cmp.detail}};
                    if (!cmp)
                        r.refute();
                }
                if (out_path)
                    write_output(*out_path, r.result["algebra"]);
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::string what = e.what();
        for (int i = 1; i < argc; ++i) {
            const std::string arg = argv[i];
            if (arg == "--seed" || arg == "--format") {
                ++i;
            } else if (!arg.starts_with("-")) {
                if (app.get_subcommand_no_throw(arg) == nullptr)
                    what = "unknown command '" + arg + "'";
                break;
            }
        }
        std::cerr << "frobenia: " << what << "\n\n" << app.help();
        return 2;
    }

    Report report;
    report.command = app.get_subcommands().front()->get_name();
    try {
        handler(report);
    } catch (const std::exception& e) {
        report.status = Status::error;
        report.result = Json::object();
        report.result["error"] = e.what();
    }
    std::cout << report.to_json().dump(2) << '\n';
    if (!g.quiet)
        std::cerr << "frobenia " << report.command << ": " << cli::to_string(report.status) << '\n';
    return cli::exit_code(report.status);
}
