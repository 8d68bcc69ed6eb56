// leecode: analyze the Z2[u]-linear codes C_L built from three single-maximal-element complexes.
//
//   leecode --m 3 --D 1,2 --E 1,3 --F 2,3 --mode compare
//   leecode scan --m 3 --mode compare --format csv

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "leecode/report.hpp"

namespace {

constexpr int kUsageError = 2;
constexpr int kMismatch = 1;
constexpr int kDefaultMaxM = 5;

int max_dimension() {
    if (const char* env = std::getenv("LEECODE_MAX_M")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("LEECODE_MAX_M is not an integer: ") + env);
        }
    }
    return kDefaultMaxM;
}

struct RunConfig {
    int m = 0;
    std::optional<std::string> d;
    std::optional<std::string> e;
    std::optional<std::string> f;
    std::string mode = "analyze";
    std::optional<std::string> format;
    std::string out;
    std::uint64_t budget = std::uint64_t{64} << 20;
    unsigned workers = 0;
    bool message_distribution = false;
    std::vector<std::string> filters;
    bool equal_sizes = false;
};

leecode::SupportSet support_arg(const std::optional<std::string>& text, const char* name, int m) {
    if (!text) throw std::invalid_argument(std::string("--") + name + " is required");
    try {
        return leecode::SupportSet::from_coordinates(leecode::parse_support(*text), m);
    } catch (const std::invalid_argument& err) {
        throw std::invalid_argument(std::string("--") + name + ": " + err.what());
    }
}

int run(const RunConfig& cfg, bool scan, std::ostream& out) {
    const int limit = max_dimension();
    if (cfg.m < leecode::kMinDimension || cfg.m > limit) {
        throw std::invalid_argument("--m must lie in [2, " + std::to_string(limit) +
                                    "] (raise the limit with LEECODE_MAX_M)");
    }

    leecode::AnalyzeOptions options;
    options.budget_bytes = cfg.budget;
    options.workers = cfg.workers;
    options.include_message_distribution = cfg.message_distribution;

    if (!scan) {
        options.engine = leecode::parse_engine(cfg.mode);
        const auto d = support_arg(cfg.d, "D", cfg.m);
        const auto e = support_arg(cfg.e, "E", cfg.m);
        const auto f = support_arg(cfg.f, "F", cfg.m);
        const auto report = leecode::analyze_instance(cfg.m, d, e, f, options);
        const std::string format = cfg.format.value_or("text");
        if (format == "json") {
            out << leecode::to_json(report) << "\n";
        } else if (format == "csv") {
            out << leecode::csv_header() << "\n" << leecode::to_csv_row(report) << "\n";
        } else {
            out << leecode::to_text(report);
        }
        return report.ok() ? 0 : kMismatch;
    }

    options.engine = cfg.mode == "scan" ? leecode::Engine::analyze : leecode::parse_engine(cfg.mode);
    leecode::ScanFilters filters;
    filters.equal_sizes = cfg.equal_sizes;
    for (const auto& name : cfg.filters) {
        if (name == "minimal") {
            filters.minimal_only = true;
        } else if (name == "self-orthogonal") {
            filters.self_orthogonal_only = true;
        } else {
            throw std::invalid_argument("unknown filter '" + name + "'");
        }
    }
    const std::string format = cfg.format.value_or("csv");
    bool all_match = true;
    if (format == "csv") out << leecode::csv_header() << "\n";
    leecode::run_scan(cfg.m, options, filters, [&](const leecode::AnalysisReport& report) {
        all_match = all_match && report.ok();
        if (format == "json") {
            out << leecode::to_json(report, -1) << "\n";
        } else if (format == "csv") {
            out << leecode::to_csv_row(report) << "\n";
        } else {
            out << leecode::to_text(report) << "\n";
        }
        out.flush();
    });
    return all_match ? 0 : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lee weight distributions and Gray-image analysis of Z2[u]-linear codes C_L"};
    app.fallthrough();
    RunConfig cfg;

    app.add_option("--m", cfg.m, "Dimension m")->required();
    app.add_option("--D", cfg.d, "Support D as 1-based coordinates, e.g. 1,2, or 'none'");
    app.add_option("--E", cfg.e, "Support E");
    app.add_option("--F", cfg.f, "Support F");
    app.add_option("--mode", cfg.mode, "analyze | brute | closed | compare | scan")
        ->check(CLI::IsMember({"analyze", "brute", "closed", "compare", "scan"}));
    app.add_option("--format", cfg.format, "text | json | csv")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--out", cfg.out, "Write output to this path instead of stdout");
    app.add_option("--budget", cfg.budget, "Byte budget for materializing the Gray image");
    app.add_option("--workers", cfg.workers, "Worker threads (0 = all cores, 1 = deterministic serial)");
    app.add_flag("--message-distribution", cfg.message_distribution,
                 "Also emit the message-level distribution (JSON)");

    auto* scan = app.add_subcommand("scan", "Analyze every triple of proper supports of [m]");
    scan->add_option("--filter", cfg.filters, "minimal | self-orthogonal (repeatable)");
    scan->add_flag("--equal-sizes", cfg.equal_sizes, "Only triples with |D| = |E| = |F|");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        const int code = app.exit(err);
        return code == 0 ? 0 : kUsageError;
    }

    try {
        const bool scanning = scan->parsed() || cfg.mode == "scan";
        if (!cfg.out.empty()) {
            std::ofstream file(cfg.out, std::ios::binary);
            if (!file) throw std::invalid_argument("cannot open '" + cfg.out + "' for writing");
            return run(cfg, scanning, file);
        }
        return run(cfg, scanning, std::cout);
    } catch (const std::invalid_argument& err) {
        std::cerr << "leecode: " << err.what() << "\n";
        return kUsageError;
    } catch (const std::exception& err) {
        std::cerr << "leecode: error: " << err.what() << "\n";
        return 3;
    }
}
