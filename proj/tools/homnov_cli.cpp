// Command-line front end: check predicates on algebra documents, run the
// constructions, compute low-degree cohomology, and analyze truncated
// deformations.  Exit codes: 0 = predicate true / action succeeded,
// 1 = predicate false / precondition or reduction failure, 2 = input error.
// Diagnostics go to stderr; stdout carries only documents and reports.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "homnov/cohomology.hpp"
#include "homnov/constructions.hpp"
#include "homnov/deformation.hpp"
#include "homnov/errors.hpp"
#include "homnov/io.hpp"
#include "homnov/selftest.hpp"
#include "homnov/superalgebra.hpp"

namespace {

using namespace homnov;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string tuple_text(const std::vector<std::size_t>& tuple) {
    std::string out = "(";
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(tuple[i]);
    }
    return out + ")";
}

std::string vec_text(const Vec& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += format_rational(v[i]);
    }
    return out + ")";
}

nlohmann::json tuple_json(const std::vector<std::size_t>& tuple) {
    nlohmann::json arr = nlohmann::json::array();
    for (std::size_t t : tuple) arr.push_back(t);
    return arr;
}

nlohmann::json vec_json(const Vec& v) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Rat& c : v) arr.push_back(format_rational(c));
    return arr;
}

Rat parse_rational_flag(const std::string& text, const std::string& flag) {
    auto value = parse_rational(text);
    if (!value.has_value())
        throw InputError(flag + ": '" + text +
                         "' is not a rational literal \"p\" or \"p/q\"");
    return *value;
}

const EvenMap& require_map(const AlgebraDocument& doc,
                           const std::string& name) {
    auto it = doc.maps.find(name);
    if (it == doc.maps.end())
        throw InputError("document has no map named '" + name +
                         "'; add it under \"maps\" or select another with "
                         "--map");
    return it->second;
}

// ---------------------------------------------------------------------- //
// check

int cmd_check(const std::string& subject, const std::string& path,
              const std::string& map_name, const std::string& weight_text,
              bool machine) {
    AlgebraDocument doc = parse_algebra_document(read_file(path));
    const SuperAlgebra& a = *doc.algebra;

    CheckResult result = CheckResult::pass();
    if (subject == "hom-novikov") {
        result = is_hom_novikov(a);
    } else if (subject == "hom-lie") {
        result = is_hom_lie(a);
    } else if (subject == "hom-assoc") {
        result = is_hom_associative(a);
    } else if (subject == "supercomm") {
        result = is_supercommutative(a);
    } else if (subject == "derivation") {
        const EvenMap& d =
            require_map(doc, map_name.empty() ? "D" : map_name);
        result = is_derivation(a, d);
    } else if (subject == "rota-baxter") {
        const EvenMap& p =
            require_map(doc, map_name.empty() ? "P" : map_name);
        Rat weight(0);
        if (!weight_text.empty())
            weight = parse_rational_flag(weight_text, "--weight");
        else if (doc.weight.has_value())
            weight = *doc.weight;
        result = is_rota_baxter(a, p, weight);
    } else if (subject == "quadratic") {
        if (!doc.form.has_value())
            throw InputError("subject 'quadratic' requires a \"form\" "
                             "entry in the document");
        const BilinearForm& b = *doc.form;
        result = form_is_supersymmetric(b);
        if (result.ok()) result = form_is_even(b);
        if (result.ok()) result = form_is_nondegenerate(b);
        if (result.ok()) result = form_is_novikov_invariant(a, b);
    } else {
        throw InputError(
            "unknown check subject '" + subject +
            "' (expected one of: hom-novikov, hom-lie, hom-assoc, "
            "supercomm, derivation, rota-baxter, quadratic)");
    }

    if (machine) {
        nlohmann::json out;
        out["command"] = "check";
        out["subject"] = subject;
        out["ok"] = result.ok();
        if (!result.ok()) {
            out["identity"] = result.violation->identity;
            out["tuple"] = tuple_json(result.violation->tuple);
            out["residual"] = vec_json(result.violation->residual);
        }
        std::cout << out.dump(2) << "\n";
    } else if (result.ok()) {
        std::cout << "check " << subject << ": pass\n";
    } else {
        std::cout << "check " << subject
                  << ": FAIL identity=" << result.violation->identity
                  << " tuple=" << tuple_text(result.violation->tuple)
                  << " residual=" << vec_text(result.violation->residual)
                  << "\n";
    }
    return result.ok() ? 0 : 1;
}

// ---------------------------------------------------------------------- //
// construct

int cmd_construct(const std::string& kind, const std::string& path,
                  const std::string& map_name, const std::string& xi_text,
                  const std::string& weight_text, std::size_t order) {
    AlgebraDocument doc = parse_algebra_document(read_file(path));
    const SuperAlgebra& a = *doc.algebra;

    AlgebraDocument out;
    if (kind == "sub-adjacent") {
        out.algebra = sub_adjacent_hom_lie(a);
    } else if (kind == "untwist") {
        out.algebra = involutive_untwist(a);
    } else if (kind == "alpha-inv-bracket") {
        out.algebra = alpha_inverse_bracket(a);
    } else if (kind == "yau-square") {
        out.algebra = yau_square_twist(a);
    } else if (kind == "deriv-product") {
        const EvenMap& d =
            require_map(doc, map_name.empty() ? "D" : map_name);
        out.algebra = derivation_product(a, d);
    } else if (kind == "twisted-deriv-product") {
        const EvenMap& d =
            require_map(doc, map_name.empty() ? "D" : map_name);
        out.algebra = twisted_derivation_product(a, d);
    } else if (kind == "xi-family") {
        const EvenMap& d =
            require_map(doc, map_name.empty() ? "D" : map_name);
        Rat xi;
        if (!xi_text.empty())
            xi = parse_rational_flag(xi_text, "--xi");
        else if (doc.xi.has_value())
            xi = *doc.xi;
        else
            throw InputError("construction 'xi-family' needs a parameter: "
                             "pass --xi or add \"xi\" to the document");
        out.algebra = xi_family(a, d, xi);
    } else if (kind == "rota-baxter") {
        const EvenMap& p =
            require_map(doc, map_name.empty() ? "P" : map_name);
        Rat weight(0);
        if (!weight_text.empty())
            weight = parse_rational_flag(weight_text, "--weight");
        else if (doc.weight.has_value())
            weight = *doc.weight;
        out.algebra = rota_baxter_product(a, p, weight);
    } else if (kind == "form-twist") {
        if (!doc.form.has_value())
            throw InputError("construction 'form-twist' requires a "
                             "\"form\" entry in the document");
        out.algebra = doc.algebra;
        out.form = form_twist(*doc.form, EvenMap(a.space(), a.alpha()),
                              order == 0 ? 1 : order);
    } else if (kind == "half-bracket") {
        out.algebra = half_bracket_algebra(a);
    } else {
        throw InputError(
            "unknown construction '" + kind +
            "' (expected one of: sub-adjacent, untwist, "
            "alpha-inv-bracket, yau-square, deriv-product, "
            "twisted-deriv-product, xi-family, rota-baxter, form-twist, "
            "half-bracket)");
    }
    std::cout << emit_algebra_document(out);
    return 0;
}

// ---------------------------------------------------------------------- //
// cohomology

int cmd_cohomology(const std::string& path, const std::string& parity,
                   bool machine) {
    AlgebraDocument doc = parse_algebra_document(read_file(path));
    std::vector<Parity> parities;
    if (parity == "even")
        parities = {0};
    else if (parity == "odd")
        parities = {1};
    else if (parity == "both")
        parities = {0, 1};
    else
        throw InputError("--parity must be one of: even, odd, both");

    nlohmann::json out;
    for (Parity p : parities) {
        CohomologyReport report = h2(doc.algebra, p);
        const char* name = p == 0 ? "even" : "odd";
        if (machine) {
            out[name] = {{"C2", report.dim_cochains},
                         {"Z2", report.dim_cocycles},
                         {"B2", report.dim_coboundaries},
                         {"H2", report.dim_h2}};
        } else {
            std::cout << "C2(" << name << ")=" << report.dim_cochains
                      << " Z2(" << name << ")=" << report.dim_cocycles
                      << " B2(" << name << ")=" << report.dim_coboundaries
                      << " H2(" << name << ")=" << report.dim_h2 << "\n";
        }
    }
    if (machine) std::cout << out.dump(2) << "\n";
    return 0;
}

// ---------------------------------------------------------------------- //
// deform

int cmd_deform(const std::string& action, const std::string& algebra_path,
               const std::string& deformation_path, std::size_t order,
               bool machine) {
    AlgebraDocument adoc = parse_algebra_document(read_file(algebra_path));
    DeformationDocument ddoc =
        parse_deformation_document(read_file(deformation_path));
    TruncatedDeformation d = bind_deformation(ddoc, adoc.algebra);
    if (order != 0) d = retruncate(d, order);

    if (action == "check") {
        DeformationCheckResult result = check_deformation(d);
        if (machine) {
            nlohmann::json out;
            out["command"] = "deform check";
            out["order"] = d.order();
            out["ok"] = result.ok();
            if (!result.ok()) {
                out["violation_order"] = result.violation->order;
                out["identity"] = result.violation->identity;
                out["tuple"] = tuple_json(result.violation->tuple);
                out["residual"] = vec_json(result.violation->residual);
            }
            std::cout << out.dump(2) << "\n";
        } else if (result.ok()) {
            std::cout << "deform check: pass through order " << d.order()
                      << "\n";
        } else {
            std::cout << "deform check: FAIL order="
                      << result.violation->order
                      << " identity=" << result.violation->identity
                      << " tuple=" << tuple_text(result.violation->tuple)
                      << " residual="
                      << vec_text(result.violation->residual) << "\n";
        }
        return result.ok() ? 0 : 1;
    }
    if (action == "infinitesimal") {
        if (d.order() == 0)
            throw InputError("the deformation has no first-order term");
        bool ok = is_infinitesimal(d.base(), d.term(1));
        if (machine) {
            nlohmann::json out;
            out["command"] = "deform infinitesimal";
            out["ok"] = ok;
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "deform infinitesimal: first-order term is "
                      << (ok ? "" : "NOT ") << "a two-cocycle\n";
        }
        return ok ? 0 : 1;
    }
    if (action == "trivialize") {
        auto [reduced, trivial] = rigidity_reduce(d);
        std::cout << emit_deformation_document(
            deformation_document(reduced));
        if (trivial)
            std::cerr << "trivialize: fully reduced to the null "
                         "deformation\n";
        else
            std::cerr << "trivialize: not reducible past the emitted "
                         "deformation (obstruction reached)\n";
        return trivial ? 0 : 1;
    }
    throw InputError("unknown deform action '" + action +
                     "' (expected one of: check, infinitesimal, "
                     "trivialize)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic toolkit for twisted graded algebras "
                 "given by structure constants"};
    app.require_subcommand(1);

    std::string subject, kind, action;
    std::string algebra_path, deformation_path;
    std::string parity = "both";
    std::string map_name, weight_text, xi_text;
    std::size_t order = 0;
    bool machine = false;
    std::uint64_t seed = 0;
    int code = 0;

    CLI::App* check = app.add_subcommand(
        "check", "verify a predicate on an algebra document");
    check->add_option("subject", subject,
                      "one of: hom-novikov, hom-lie, hom-assoc, supercomm, "
                      "derivation, rota-baxter, quadratic")
        ->required();
    check->add_option("file", algebra_path, "algebra document")->required();
    check->add_option("--map", map_name,
                      "name of the document map to test (default: D for "
                      "derivation, P for rota-baxter)");
    check->add_option("--weight", weight_text,
                      "operator weight as a rational literal (overrides "
                      "the document)");
    check->add_flag("--machine", machine, "JSON output");
    check->callback([&] {
        code = cmd_check(subject, algebra_path, map_name, weight_text,
                         machine);
    });

    CLI::App* construct = app.add_subcommand(
        "construct", "derive a new algebra document from an input algebra");
    construct->add_option("kind", kind,
                          "one of: sub-adjacent, untwist, "
                          "alpha-inv-bracket, yau-square, deriv-product, "
                          "twisted-deriv-product, xi-family, rota-baxter, "
                          "form-twist, half-bracket")
        ->required();
    construct->add_option("file", algebra_path, "algebra document")
        ->required();
    construct->add_option("--map", map_name,
                          "name of the document map to use");
    construct->add_option("--xi", xi_text,
                          "family parameter as a rational literal");
    construct->add_option("--weight", weight_text,
                          "operator weight as a rational literal");
    construct->add_option("--order", order,
                          "power of the twisting map (form-twist only, "
                          "default 1)");
    construct->callback([&] {
        code = cmd_construct(kind, algebra_path, map_name, xi_text,
                             weight_text, order);
    });

    CLI::App* cohomology = app.add_subcommand(
        "cohomology", "dimensions of the degree-2 cohomology spaces");
    cohomology->add_option("file", algebra_path, "algebra document")
        ->required();
    cohomology->add_option("--parity", parity, "even, odd, or both");
    cohomology->add_flag("--machine", machine, "JSON output");
    cohomology->callback(
        [&] { code = cmd_cohomology(algebra_path, parity, machine); });

    CLI::App* deform = app.add_subcommand(
        "deform", "analyze a truncated deformation of an algebra");
    deform->add_option("action", action,
                       "one of: check, infinitesimal, trivialize")
        ->required();
    deform->add_option("algebra", algebra_path, "algebra document")
        ->required();
    deform->add_option("deformation", deformation_path,
                       "deformation document")
        ->required();
    deform->add_option("--order", order,
                       "re-truncate the deformation to this order");
    deform->add_flag("--machine", machine, "JSON output");
    deform->callback([&] {
        code = cmd_deform(action, algebra_path, deformation_path, order,
                          machine);
    });

    CLI::App* selftest = app.add_subcommand(
        "selftest", "seeded randomized verification of the library");
    selftest->add_option("--seed", seed, "random seed (default 0)");
    selftest->callback([&] { code = run_selftest(seed, std::cout); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return code;
}
