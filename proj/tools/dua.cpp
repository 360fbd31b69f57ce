// dua: exact workbench for noetherian down-up algebras.
//
// Subcommands:
//   verify    run the machine-check suites and optionally write a JSON report
//   classify  stable-rank range for one parameter triple
//   eval      normal form of an expression in a chosen presentation
//   table     classify the bundled parameter fixtures and cross-check them
//
// Exit codes: 0 success / all checks pass, 1 a check or fixture failed,
// 2 usage or parse problems, 3 unsupported coefficient field.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "dua/classify.hpp"
#include "dua/fixtures.hpp"
#include "dua/parser.hpp"
#include "dua/verify.hpp"
#include "dua/version.hpp"

namespace {

using nlohmann::json;

json report_to_json(const std::string& suite, int bound,
                    const std::vector<dua::CheckResult>& results) {
    json checks = json::array();
    for (const auto& r : results) {
        checks.push_back({{"id", r.id},
                          {"suite", r.suite},
                          {"citation", r.citation},
                          {"verdict", r.pass ? "pass" : "fail"},
                          {"witness", r.witness},
                          {"ms", r.ms}});
    }
    return json{{"tool_version", dua::TOOL_VERSION},
                {"suite", suite},
                {"bound", bound},
                {"checks", checks}};
}

int cmd_verify(const std::string& suite, int bound, const std::string& json_path) {
    auto results = dua::run_suite(suite, bound);
    size_t passed = 0;
    for (const auto& r : results) {
        std::cout << (r.pass ? "PASS" : "FAIL") << "  " << std::left << std::setw(18) << r.id
                  << " [" << r.ms << " ms]  " << r.witness << "\n";
        if (r.pass) ++passed;
    }
    std::cout << passed << "/" << results.size() << " checks passed (suite " << suite
              << ", bound " << bound << ")\n";
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) throw dua::Error("cannot write report to " + json_path);
        out << report_to_json(suite, bound, results).dump(2) << "\n";
    }
    return dua::all_passed(results) ? 0 : 1;
}

json classification_to_json(const dua::ClassificationReport& r) {
    json j{{"alpha", r.alpha.to_string()},
           {"beta", r.beta.to_string()},
           {"gamma", r.gamma.to_string()},
           {"noetherian", r.noetherian},
           {"notes", r.notes}};
    j["krull_dim"] = r.krull_dim ? json(*r.krull_dim) : json(nullptr);
    if (r.roots) {
        j["roots"] = {{"lambda", r.roots->lambda.to_string()},
                      {"mu", r.roots->mu.to_string()},
                      {"field", r.roots->field.to_string()},
                      {"double_root", r.roots->double_root}};
    } else {
        j["roots"] = nullptr;
    }
    json tests = json::array();
    for (const auto& t : r.unity_tests)
        tests.push_back({{"quantity", t.quantity},
                         {"order", t.order ? json(*t.order) : json(nullptr)}});
    j["root_of_unity_tests"] = tests;
    if (r.sr_lower) {
        j["stable_rank"] = {{"lower", *r.sr_lower}, {"upper", *r.sr_upper}, {"exact", r.sr_exact}};
    } else {
        j["stable_rank"] = nullptr;
    }
    return j;
}

int cmd_classify(const std::string& a, const std::string& b, const std::string& g, bool as_json) {
    auto rep = dua::classify(dua::parse_scalar(a), dua::parse_scalar(b), dua::parse_scalar(g));
    if (as_json) {
        std::cout << classification_to_json(rep).dump(2) << "\n";
        return 0;
    }
    std::cout << "A(alpha = " << rep.alpha.to_string() << ", beta = " << rep.beta.to_string()
              << ", gamma = " << rep.gamma.to_string() << ")\n";
    std::cout << "noetherian:    " << (rep.noetherian ? "yes" : "no") << "\n";
    if (rep.krull_dim) std::cout << "Krull dim:     " << *rep.krull_dim << "\n";
    if (rep.roots) {
        std::cout << "roots:         lambda = " << rep.roots->lambda.to_string()
                  << ", mu = " << rep.roots->mu.to_string() << "  (over "
                  << rep.roots->field.to_string() << ")\n";
    }
    for (const auto& t : rep.unity_tests) {
        std::cout << "unity test:    " << t.quantity << " -> "
                  << (t.order ? "order " + std::to_string(*t.order) : "not a root of unity")
                  << "\n";
    }
    std::cout << "stable rank:   " << rep.sr_display() << "\n";
    std::cout << "notes:\n";
    for (const auto& n : rep.notes) std::cout << "  - " << n << "\n";
    return 0;
}

int cmd_eval(const std::string& expr, const std::string& alg) {
    dua::PresentationPtr p;
    if (alg == "A0") p = dua::make_downup(0);
    else if (alg == "A1") p = dua::make_downup(1);
    else p = dua::make_tilde(1);
    std::cout << dua::parse_expression(expr, p).to_string() << "\n";
    return 0;
}

int cmd_table(const std::string& fixtures_path, const std::string& out_path) {
    auto rows = dua::load_fixtures(fixtures_path);
    std::ostringstream table;
    table << std::left << std::setw(48) << "family" << std::setw(18) << "alpha" << std::setw(18)
          << "beta" << std::setw(8) << "gamma" << std::setw(7) << "Kdim"
          << "stable rank\n";
    table << std::string(112, '-') << "\n";
    std::vector<std::string> mismatches;
    for (const auto& f : rows) {
        auto res = dua::check_fixture_row(f);
        table << std::left << std::setw(48) << f.label << std::setw(18) << f.alpha << std::setw(18)
              << f.beta << std::setw(8) << f.gamma << std::setw(7)
              << (res.report.krull_dim ? std::to_string(*res.report.krull_dim) : "n/a")
              << res.report.sr_display() << (res.ok ? "" : "   << MISMATCH") << "\n";
        if (!res.ok) mismatches.push_back(res.mismatch);
    }
    std::cout << table.str();
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw dua::Error("cannot write table to " + out_path);
        out << table.str();
    }
    if (!mismatches.empty()) {
        std::cerr << "\nfixture mismatches:\n";
        for (const auto& m : mismatches) std::cerr << "  " << m << "\n";
        return 1;
    }
    std::cout << "all " << rows.size() << " fixture rows reproduced\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact workbench for noetherian down-up algebras"};
    app.set_version_flag("--version", std::string(dua::TOOL_VERSION));
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "run the machine-check suites");
    std::string suite = "all";
    int bound = 5;
    std::string json_path;
    verify->add_option("--suite", suite, "all, section3_1, section3_2, section4, or engine")
        ->check(CLI::IsMember({"all", "section3_1", "section3_2", "section4", "engine"}));
    verify->add_option("--bound", bound, "degree bound for the ideal checks")
        ->check(CLI::Range(2, 8));
    verify->add_option("--json", json_path, "write a JSON report to this path");

    auto* classify = app.add_subcommand("classify", "stable-rank range for one parameter triple");
    std::string ca, cb, cg;
    bool cjson = false;
    classify->add_option("alpha", ca, "alpha as an exact scalar expression")->required();
    classify->add_option("beta", cb, "beta as an exact scalar expression")->required();
    classify->add_option("gamma", cg, "gamma as an exact scalar expression")->required();
    classify->add_flag("--json", cjson, "emit the report as JSON");

    auto* eval = app.add_subcommand("eval", "normal form of an expression");
    std::string expr, alg = "A1";
    eval->add_option("expr", expr, "expression in u, w, d, lambda, mu, sqrt(n)")->required();
    eval->add_option("--alg", alg, "A0 (gamma = 0), A1 (gamma = 1), or tilde (two generators)")
        ->check(CLI::IsMember({"A0", "A1", "tilde"}));

    auto* table = app.add_subcommand("table", "classify the bundled parameter fixtures");
    std::string fixtures_path = "data/family_fixtures.json", out_path;
    table->add_option("--fixtures", fixtures_path, "fixtures JSON path");
    table->add_option("--out", out_path, "also write the rendered table to this path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (verify->parsed()) return cmd_verify(suite, bound, json_path);
        if (classify->parsed()) return cmd_classify(ca, cb, cg, cjson);
        if (eval->parsed()) return cmd_eval(expr, alg);
        if (table->parsed()) return cmd_table(fixtures_path, out_path);
    } catch (const dua::ParseError& e) {
        std::cerr << "parse error at column " << e.column << ": " << e.what() << " (expected "
                  << e.expected << ")\n";
        return 2;
    } catch (const dua::PresentationMismatch& e) {
        std::cerr << "presentation error: " << e.what() << "\n";
        return 2;
    } catch (const dua::FixtureMissing& e) {
        std::cerr << "fixture error: " << e.what() << "\n";
        return 2;
    } catch (const dua::UnsupportedField& e) {
        std::cerr << "unsupported field: " << e.what() << "\n";
        return 3;
    } catch (const dua::FieldMismatch& e) {
        std::cerr << "field mismatch: " << e.what() << "\n";
        return 3;
    } catch (const dua::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
