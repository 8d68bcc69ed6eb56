#pragma once

// One-instance analysis: parameters, distribution, orthogonality and minimality verdicts, and
// their JSON / CSV / text renderings.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "leecode/code_builder.hpp"
#include "leecode/gray_analysis.hpp"
#include "leecode/simplicial.hpp"

namespace leecode {

enum class Engine { analyze, brute, closed, compare };

Engine parse_engine(const std::string& name);
std::string to_string(Engine engine);

/// Whether the equal-support minimality theorem covers the instance.
enum class MinimalityClaim {
    /// |D| = |E| = |F| = n <= m - 2: guaranteed minimal.
    guaranteed,
    /// Supports of different sizes: outside the theorem.
    not_covered,
    /// |D| = |E| = |F| = m - 1: the ratio test fails and the question is open.
    open,
};

MinimalityClaim minimality_claim(int m, const SupportSet& d, const SupportSet& e, const SupportSet& f);

struct AnalyzeOptions {
    Engine engine = Engine::analyze;
    std::uint64_t budget_bytes = std::uint64_t{64} << 20;
    unsigned workers = 0;
    bool include_message_distribution = false;
};

struct DistributionDiff {
    std::string level;
    std::int64_t weight = 0;
    std::int64_t brute = 0;
    std::int64_t closed = 0;
};

struct AnalysisReport {
    int m = 0;
    SupportSet d = SupportSet::empty(2);
    SupportSet e = SupportSet::empty(2);
    SupportSet f = SupportSet::empty(2);
    Engine engine = Engine::analyze;

    std::int64_t l_length = 0;
    std::int64_t gray_length = 0;
    std::int64_t code_size = 0;
    std::int64_t kernel_size = 0;
    WeightDistribution distribution;
    std::optional<WeightDistribution> message_distribution;
    std::string enumerator;

    std::int64_t param_n = 0;
    int param_k = 0;
    std::int64_t param_d = 0;

    /// nullopt when the Gray image was not materialized.
    std::optional<bool> self_orthogonal;
    bool weights_div4 = false;
    AshikhminBarg ab;
    std::optional<bool> exact_minimal;
    MinimalityClaim claim = MinimalityClaim::not_covered;

    /// compare engine only.
    std::optional<bool> distributions_match;
    std::vector<DistributionDiff> diff;
    std::optional<std::string> warning;

    bool ok() const { return distributions_match.value_or(true); }
};

AnalysisReport analyze_instance(int m, const SupportSet& d, const SupportSet& e, const SupportSet& f,
                                const AnalyzeOptions& options = {});

/// Canonical JSON: fixed key order, integers and booleans only. indent < 0 gives one line.
std::string to_json(const AnalysisReport& report, int indent = 2);
/// Parses and re-serializes JSON text with key order preserved.
std::string canonicalize_json(const std::string& text, int indent = 2);

std::string csv_header();
std::string to_csv_row(const AnalysisReport& report);
std::string to_text(const AnalysisReport& report);

struct ScanFilters {
    bool equal_sizes = false;
    bool self_orthogonal_only = false;
    /// Keeps rows whose exhaustive check (or, if skipped, the ratio test) says minimal.
    bool minimal_only = false;
};

bool passes(const ScanFilters& filters, const AnalysisReport& report);

/// Analyzes every triple of proper supports of [m] in lexicographic (D, E, F) mask order and calls
/// emit for each row that passes the filters, in that order. Rows are computed by
/// options.workers threads, each analysis single-threaded. Returns the number of rows emitted.
std::size_t run_scan(int m, const AnalyzeOptions& options, const ScanFilters& filters,
                     const std::function<void(const AnalysisReport&)>& emit);

/// "1,2" / "none" <-> coordinates.
std::vector<int> parse_support(const std::string& text);
std::string format_support(const SupportSet& s, const std::string& separator = ",");

}  // namespace leecode
