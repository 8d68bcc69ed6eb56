#include <doctest.h>

#include <json.hpp>
#include <stdexcept>

#include "leecode/report.hpp"

using namespace leecode;

namespace {

SupportSet S(std::initializer_list<int> coords, int m) { return SupportSet::from_coordinates(coords, m); }

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields(1);
    bool quoted = false;
    for (char c : line) {
        if (c == '"') {
            quoted = !quoted;
        } else if (c == ',' && !quoted) {
            fields.emplace_back();
        } else {
            fields.back() += c;
        }
    }
    return fields;
}

}  // namespace

TEST_CASE("parse_support") {
    CHECK(parse_support("1,2") == std::vector<int>{1, 2});
    CHECK(parse_support("none").empty());
    CHECK(parse_support("3") == std::vector<int>{3});
    CHECK_THROWS_AS(parse_support("1,,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_support("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_support("1.5"), std::invalid_argument);
    CHECK(format_support(S({1, 3}, 3)) == "1,3");
    CHECK(format_support(SupportSet::empty(3)) == "none");
}

TEST_CASE("engine names") {
    for (auto e : {Engine::analyze, Engine::brute, Engine::closed, Engine::compare}) {
        CHECK(parse_engine(to_string(e)) == e);
    }
    CHECK_THROWS_AS(parse_engine("fast"), std::invalid_argument);
}

TEST_CASE("minimality claims") {
    CHECK(minimality_claim(3, S({1}, 3), S({2}, 3), S({3}, 3)) == MinimalityClaim::guaranteed);
    CHECK(minimality_claim(3, S({1, 2}, 3), S({1, 3}, 3), S({2, 3}, 3)) == MinimalityClaim::open);
    CHECK(minimality_claim(3, S({1}, 3), S({1, 2}, 3), S({3}, 3)) == MinimalityClaim::not_covered);
}

TEST_CASE("analyze report for the first published instance") {
    const auto r = analyze_instance(3, S({1, 2}, 3), S({1, 3}, 3), S({2, 3}, 3), {Engine::compare});
    CHECK(r.ok());
    CHECK(r.distributions_match == true);
    CHECK(r.enumerator == "X^128 + 2X^96Y^32 + 250X^64Y^64 + 2X^32Y^96 + Y^128");
    CHECK(r.param_n == 128);
    CHECK(r.param_k == 8);
    CHECK(r.param_d == 32);
    CHECK(r.kernel_size == 2);
    CHECK(r.code_size == 256);
    CHECK(r.self_orthogonal == true);
    CHECK(r.exact_minimal == false);
    CHECK(r.claim == MinimalityClaim::open);
}

TEST_CASE("analyze report for the second published instance") {
    const auto r = analyze_instance(3, S({1}, 3), S({2}, 3), S({3}, 3));
    CHECK(r.param_n == 432);
    CHECK(r.param_k == 9);
    CHECK(r.param_d == 192);
    CHECK(r.self_orthogonal == true);
    CHECK(r.ab.minimal);
    CHECK(r.exact_minimal == true);
    CHECK_FALSE(r.distributions_match.has_value());
}

TEST_CASE("closed engine skips the Gray checks") {
    const auto r = analyze_instance(3, S({1}, 3), S({2}, 3), S({3}, 3), {Engine::closed});
    CHECK_FALSE(r.self_orthogonal.has_value());
    CHECK_FALSE(r.exact_minimal.has_value());
    const auto j = nlohmann::json::parse(to_json(r));
    CHECK(j["self_orthogonal"] == "skipped");
    CHECK(j["exact_minimal"] == "skipped");
}

TEST_CASE("budget exceeded gives a warning") {
    AnalyzeOptions options;
    options.budget_bytes = 1;
    const auto r = analyze_instance(3, S({1}, 3), S({2}, 3), S({3}, 3), options);
    CHECK(r.warning.has_value());
    CHECK(r.param_k == 9);
    CHECK(nlohmann::json::parse(to_json(r)).contains("warning"));
}

TEST_CASE("JSON is canonical and round-trips byte for byte") {
    AnalyzeOptions options;
    options.engine = Engine::compare;
    options.include_message_distribution = true;
    const auto r = analyze_instance(3, S({1, 2}, 3), S({1, 3}, 3), S({2, 3}, 3), options);
    for (int indent : {-1, 2}) {
        const auto text = to_json(r, indent);
        CHECK(canonicalize_json(text, indent) == text);
    }
    const auto j = nlohmann::ordered_json::parse(to_json(r));
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    const std::vector<std::string> expected = {
        "m",         "D",           "E",        "F",           "L_length",        "gray_length",
        "code_size", "kernel_size", "distribution", "message_distribution", "enumerator", "params",
        "self_orthogonal", "weights_div4", "ab_ratio", "ab_minimal", "exact_minimal", "paper_claim_minimal",
        "distributions_match"};
    CHECK(keys == expected);
    CHECK(j["params"]["n"] == 128);
    CHECK(j["paper_claim_minimal"] == "open");
    CHECK(j["D"] == nlohmann::ordered_json::array({1, 2}));
    CHECK(j["distribution"][2]["weight"] == 64);
    CHECK(j["distribution"][2]["frequency"] == 250);
}

TEST_CASE("CSV rows line up with the header") {
    const auto header = split_csv(csv_header());
    const auto r = analyze_instance(3, S({1}, 3), S({2}, 3), SupportSet::empty(3));
    const auto row = split_csv(to_csv_row(r));
    REQUIRE(row.size() == header.size());
    CHECK(row[0] == "3");
    CHECK(row[1] == "1");
    CHECK(row[3] == "none");
    CHECK(to_text(r).find("enumerator") != std::string::npos);
}

TEST_CASE("scan over m=2") {
    AnalyzeOptions options;
    options.engine = Engine::compare;
    options.workers = 2;
    std::vector<AnalysisReport> rows;
    const auto count = run_scan(2, options, {}, [&](const AnalysisReport& r) { rows.push_back(r); });
    CHECK(count == 27);
    REQUIRE(rows.size() == 27);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        REQUIRE(rows[i].ok());
        REQUIRE(rows[i].distribution.total() == rows[i].code_size);
        REQUIRE(rows[i].code_size * rows[i].kernel_size == 64);
        if (i > 0) {
            auto key = [](const AnalysisReport& r) {
                return std::tuple(r.d.mask().bits, r.e.mask().bits, r.f.mask().bits);
            };
            REQUIRE(key(rows[i - 1]) < key(rows[i]));
        }
    }

    ScanFilters equal;
    equal.equal_sizes = true;
    CHECK(run_scan(2, options, equal, [](const AnalysisReport&) {}) == 1 + 8);

    ScanFilters minimal;
    minimal.minimal_only = true;
    std::size_t kept = 0;
    run_scan(2, options, minimal, [&](const AnalysisReport& r) {
        ++kept;
        CHECK(r.exact_minimal.value_or(r.ab.minimal));
    });
    CHECK(kept < 27);
}
