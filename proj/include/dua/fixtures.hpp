#pragma once
// Bundled parameter fixtures: known down-up families with their expected
// Krull dimension and stable-rank range.  The classifier must reproduce every
// row exactly; any drift is a hard failure.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "dua/classify.hpp"
#include "dua/parser.hpp"

namespace dua {

struct FixtureRow {
    std::string id, label;
    std::string alpha, beta, gamma; // exact scalar expressions
    int krull = 0, sr_lower = 0, sr_upper = 0;
    bool exact = false;
};

inline std::vector<FixtureRow> load_fixtures(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FixtureMissing("cannot open fixtures file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw FixtureMissing("fixtures file " + path + " is not valid JSON: " + e.what());
    }
    std::vector<FixtureRow> rows;
    try {
        for (const auto& row : j.at("rows")) {
            FixtureRow f;
            f.id = row.at("id").get<std::string>();
            f.label = row.at("label").get<std::string>();
            f.alpha = row.at("alpha").get<std::string>();
            f.beta = row.at("beta").get<std::string>();
            f.gamma = row.at("gamma").get<std::string>();
            const auto& e = row.at("expected");
            f.krull = e.at("krull_dim").get<int>();
            f.sr_lower = e.at("sr_lower").get<int>();
            f.sr_upper = e.at("sr_upper").get<int>();
            f.exact = e.at("exact").get<bool>();
            rows.push_back(std::move(f));
        }
    } catch (const nlohmann::json::exception& e) {
        throw FixtureMissing("fixtures file " + path + " has missing fields: " + e.what());
    }
    if (rows.empty()) throw FixtureMissing("fixtures file " + path + " has no rows");
    return rows;
}

struct FixtureOutcome {
    ClassificationReport report;
    bool ok = false;
    std::string mismatch; // empty when ok
};

inline FixtureOutcome check_fixture_row(const FixtureRow& f) {
    FixtureOutcome out;
    out.report = classify(parse_scalar(f.alpha), parse_scalar(f.beta), parse_scalar(f.gamma));
    const auto& r = out.report;
    out.ok = r.noetherian && r.krull_dim && r.sr_lower && *r.krull_dim == f.krull &&
             *r.sr_lower == f.sr_lower && *r.sr_upper == f.sr_upper && r.sr_exact == f.exact;
    if (!out.ok) {
        std::ostringstream m;
        m << f.id << ": expected Kdim " << f.krull << ", sr [" << f.sr_lower << ", " << f.sr_upper
          << "], exact " << (f.exact ? "yes" : "no") << "; computed Kdim "
          << (r.krull_dim ? std::to_string(*r.krull_dim) : "n/a") << ", sr " << r.sr_display();
        out.mismatch = m.str();
    }
    return out;
}

} // namespace dua
