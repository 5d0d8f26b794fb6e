// gengroup: command-line front end for the generalized-group library.
// Exit codes: 0 success, 1 mathematical failure or falsification,
// 2 usage, I/O or parse error.

#include "gengroup/core.hpp"
#include "gengroup/harness.hpp"
#include "gengroup/hom.hpp"
#include "gengroup/io.hpp"
#include "gengroup/rees.hpp"
#include "gengroup/slender.hpp"
#include "gengroup/star_expr.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

using namespace gengroup;
using gengroup::io::json;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

void print(const json& doc) { std::cout << doc.dump(2) << '\n'; }

const char* yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_verify(const std::string& path) {
    const auto doc = io::parse_cayley(io::read_json_file(path));
    const auto report = verify_axioms(doc.table);
    if (!report.verdict()) {
        std::cout << "invalid: " << describe(report) << '\n';
        return kFailure;
    }
    const FiniteGenGroup g(doc.names, doc.table);
    std::cout << "valid generalized group\n"
              << "order: " << g.order() << '\n'
              << "idempotents: " << idempotents(g).size() << '\n'
              << "group: " << yes_no(is_group(g)) << '\n'
              << "abelian: " << yes_no(is_abelian(g)) << '\n'
              << "normal: " << yes_no(is_normal(g)) << '\n';
    return kOk;
}

// Accepts a Cayley document or a Rees spec document.
FiniteGenGroup load_structure(const std::string& path) {
    const auto doc = io::read_json_file(path);
    if (doc.is_object() && doc.contains("sandwich")) return rees_build(io::rees_from_json(doc));
    return io::group_from_json(doc);
}

int cmd_decompose(const std::string& path) {
    const auto g = load_structure(path);
    json ids = json::array();
    json components = json::array();
    for (Element e : idempotents(g)) {
        ids.push_back(g.name(e));
        json members = json::array();
        for (Element x : component_members(g, e)) members.push_back(g.name(x));
        components.push_back({{"identity", g.name(e)},
                              {"members", std::move(members)},
                              {"group", io::to_json(group_component(g, e).gg())}});
    }
    print({{"idempotents", std::move(ids)}, {"components", std::move(components)}});
    return kOk;
}

int cmd_rees(const std::string& spec_path, const std::string& check_path) {
    const auto spec = io::rees_from_json(io::read_json_file(spec_path));
    if (check_path.empty()) {
        print(io::to_json(rees_build(spec)));
        return kOk;
    }
    const auto table = io::group_from_json(io::read_json_file(check_path));
    const auto report = check_rees_idempotents(spec, table);
    std::cout << format_report({report});
    return report.status == ClaimStatus::Falsified ? kFailure : kOk;
}

int cmd_product(const std::string& a, const std::string& b) {
    print(io::to_json(direct_product(io::group_from_json(io::read_json_file(a)),
                                     io::group_from_json(io::read_json_file(b)))));
    return kOk;
}

int cmd_hom(const std::string& source_path, const std::string& target_path, const std::string& map_path) {
    const auto source = io::group_from_json(io::read_json_file(source_path));
    const auto target = io::group_from_json(io::read_json_file(target_path));
    const HomTable h(source, target, io::images_from_json(io::read_json_file(map_path)));
    const auto check = check_hom(h);
    if (!check) {
        std::cout << "not a homomorphism witness=(" << check.witness->first << "," << check.witness->second << ")\n";
        return kFailure;
    }
    const auto violations = check_preservation(h);
    std::cout << "homomorphism: yes\n"
              << "preserves e and inverses: " << yes_no(violations.empty()) << '\n'
              << "isomorphism: " << yes_no(is_isomorphism(h)) << '\n';
    return violations.empty() ? kOk : kFailure;
}

int cmd_enumerate(const std::string& source_path, const std::string& target_path, std::size_t cap) {
    const auto source = io::group_from_json(io::read_json_file(source_path));
    const auto target = io::group_from_json(io::read_json_file(target_path));
    const auto result = enumerate_homs(source, target, cap);
    json homs = json::array();
    for (const auto& h : result.homs) homs.push_back(h.images());
    print({{"count", result.homs.size()}, {"truncated", result.truncated}, {"homs", std::move(homs)}});
    return kOk;
}

int cmd_snf(const std::string& path, const std::string& certificate) {
    const auto a = io::matrix_from_json(io::read_json_file(path));
    if (certificate.empty()) {
        print(io::to_json(smith_normal_form(a)));
        return kOk;
    }
    const auto audit = audit_snf(a, io::snf_from_json(io::read_json_file(certificate)));
    if (!audit.ok) {
        std::cout << "certificate rejected: " << audit.failure << " witness=" << audit.witness << '\n';
        return kFailure;
    }
    std::cout << "certificate ok\n";
    return kOk;
}

std::string verdict_line(const FgAbelian& g) {
    return to_string(g) + " — " + (is_slender_fg(g) ? "slender" : "not slender");
}

int cmd_classify(const std::string& path, std::optional<int> generators) {
    const auto relations = io::matrix_from_json(io::read_json_file(path));
    std::cout << verdict_line(classify(relations, generators.value_or(static_cast<int>(relations.cols())))) << '\n';
    return kOk;
}

int cmd_slender(const std::string& target) {
    const auto& names = named_catalogue();
    if (std::find(names.begin(), names.end(), target) != names.end()) {
        const auto v = named_verdict(target);
        std::cout << target << " — " << (v.slender ? "slender" : "not slender") << " (" << v.citation << ")\n";
        return kOk;
    }
    if (!std::filesystem::exists(target)) throw UnknownName("unknown group name or file: " + target);
    return cmd_classify(target, std::nullopt);
}

int cmd_star_eval(const std::string& expr) {
    std::cout << to_string(evaluate_star_expression(expr)) << '\n';
    return kOk;
}

int cmd_claim_checks(const RunConfig& cfg, const std::string& json_path) {
    const auto reports = run_all(cfg);
    std::cout << format_report(reports);
    if (std::all_of(reports.begin(), reports.end(), [](const ClaimReport& r) { return r.status == ClaimStatus::Skipped; }))
        std::cerr << "warning: every claim was skipped\n";
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) throw io::FileError("cannot write " + json_path);
        out << io::report_json(reports, cfg).dump(2) << '\n';
    }
    return any_falsified(reports) ? kFailure : kOk;
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("GENGROUP_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw CLI::ValidationError("GENGROUP_SEED", "must be a nonnegative integer");
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generalized groups, Rees constructions, Smith normal form and slenderness checks"};
    app.require_subcommand(1);

    std::string path, path2, path3, check_path, expr, json_path, inject = "none";
    std::size_t cap = 100000;
    std::optional<int> generators;
    std::optional<std::uint64_t> seed;
    SeqIndex bound = 100;
    int samples = 1000;

    auto* verify = app.add_subcommand("verify", "check the generalized-group axioms of a Cayley document");
    verify->add_option("table", path, "Cayley document")->required();

    auto* decompose = app.add_subcommand("decompose", "list idempotents and their group components");
    decompose->add_option("table", path, "Cayley or Rees spec document")->required();

    auto* rees = app.add_subcommand("rees", "build a Rees matrix instance");
    rees->add_option("spec", path, "Rees spec document")->required();
    rees->add_option("--check", check_path, "compare a table's local identities with the Rees spec");

    auto* product = app.add_subcommand("product", "direct product of two Cayley documents");
    product->add_option("left", path, "Cayley document")->required();
    product->add_option("right", path2, "Cayley document")->required();

    auto* hom = app.add_subcommand("hom", "check a map between two Cayley documents");
    hom->add_option("source", path, "Cayley document")->required();
    hom->add_option("target", path2, "Cayley document")->required();
    hom->add_option("map", path3, "hom document {\"images\": [...]}")->required();

    auto* enumerate = app.add_subcommand("enumerate-homs", "list all homomorphisms");
    enumerate->add_option("source", path, "Cayley document")->required();
    enumerate->add_option("target", path2, "Cayley document")->required();
    enumerate->add_option("--cap", cap, "maximum number of homomorphisms");

    auto* snf = app.add_subcommand("snf", "Smith normal form of a matrix document");
    snf->add_option("matrix", path, "matrix document")->required();
    snf->add_option("--certificate", check_path, "audit a claimed {U, D, V} instead of computing one");

    auto* classify_cmd = app.add_subcommand("classify", "structure of Z^n modulo the relation rows");
    classify_cmd->add_option("relations", path, "matrix document")->required();
    classify_cmd->add_option("--generators", generators, "generator count (default: column count)");

    auto* slender = app.add_subcommand("slender", "slenderness verdict for a named group or relation matrix");
    slender->add_option("group", path, "Q, J_p, prod_Z, Z^n, free_abelian, or a matrix document")->required();

    auto* star_eval = app.add_subcommand("star-eval", "evaluate a sequence expression");
    star_eval->add_option("expr", expr, "expression")->required();

    auto* checks = app.add_subcommand("paper-checks", "run every claim check on the seeded corpus");
    checks->add_option("--seed", seed, "corpus seed (default: GENGROUP_SEED or 0)");
    checks->add_option("--bound,--bounds", bound, "largest basis index scanned; 0 skips everything")
        ->check(CLI::NonNegativeNumber);
    checks->add_option("--samples", samples, "random inputs per check")->check(CLI::PositiveNumber);
    checks->add_option("--inject", inject, "inject a corrupted fixture")
        ->check(CLI::IsMember({"none", "broken-table", "non-hom-map", "wrong-sandwich", "corrupted-composite",
                               "non-unimodular-u", "wrong-window"}));
    checks->add_option("--json", json_path, "also write the full JSON report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*verify) return cmd_verify(path);
        if (*decompose) return cmd_decompose(path);
        if (*rees) return cmd_rees(path, check_path);
        if (*product) return cmd_product(path, path2);
        if (*hom) return cmd_hom(path, path2, path3);
        if (*enumerate) return cmd_enumerate(path, path2, cap);
        if (*snf) return cmd_snf(path, check_path);
        if (*classify_cmd) return cmd_classify(path, generators);
        if (*slender) return cmd_slender(path);
        if (*star_eval) return cmd_star_eval(expr);
        if (*checks) {
            RunConfig cfg{seed ? *seed : default_seed(), bound, samples, parse_mutation(inject)};
            return cmd_claim_checks(cfg, json_path);
        }
    } catch (const AxiomViolation& e) {
        std::cerr << "error: not a generalized group: " << e.what() << '\n';
        return kFailure;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
