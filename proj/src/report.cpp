#include "leecode/report.hpp"

#include <json.hpp>

#include <condition_variable>
#include <mutex>
#include <array>
#include <bit>
#include <exception>
#include <set>
#include <thread>
#include <sstream>
#include <stdexcept>

#include "leecode/closed_form.hpp"

namespace leecode {

using ordered_json = nlohmann::ordered_json;

Engine parse_engine(const std::string& name) {
    if (name == "analyze") return Engine::analyze;
    if (name == "brute") return Engine::brute;
    if (name == "closed") return Engine::closed;
    if (name == "compare") return Engine::compare;
    throw std::invalid_argument("unknown mode '" + name + "'");
}

std::string to_string(Engine engine) {
    switch (engine) {
        case Engine::analyze: return "analyze";
        case Engine::brute: return "brute";
        case Engine::closed: return "closed";
        case Engine::compare: return "compare";
    }
    return "?";
}

MinimalityClaim minimality_claim(int m, const SupportSet& d, const SupportSet& e, const SupportSet& f) {
    if (d.size() != e.size() || e.size() != f.size()) return MinimalityClaim::not_covered;
    return minimality_predicate(m, d.size()) ? MinimalityClaim::guaranteed : MinimalityClaim::open;
}

namespace {

void diff_level(const std::string& level, const WeightDistribution& brute, const WeightDistribution& closed,
                std::vector<DistributionDiff>& out) {
    std::set<std::int64_t> weights;
    for (const auto& [w, f] : brute.entries) weights.insert(w);
    for (const auto& [w, f] : closed.entries) weights.insert(w);
    for (auto w : weights) {
        if (brute.at(w) != closed.at(w)) out.push_back({level, w, brute.at(w), closed.at(w)});
    }
}

ordered_json distribution_json(const WeightDistribution& dist) {
    ordered_json arr = ordered_json::array();
    for (const auto& [w, f] : dist.entries) {
        ordered_json row;
        row["weight"] = w;
        row["frequency"] = f;
        arr.push_back(std::move(row));
    }
    return arr;
}

template <typename T>
ordered_json optional_or_skipped(const std::optional<T>& value) {
    if (value) return ordered_json(*value);
    return ordered_json("skipped");
}

ordered_json claim_json(MinimalityClaim claim) {
    switch (claim) {
        case MinimalityClaim::guaranteed: return true;
        case MinimalityClaim::not_covered: return false;
        case MinimalityClaim::open: return "open";
    }
    return false;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

template <typename T>
std::string optional_text(const std::optional<T>& value) {
    if (!value) return "skipped";
    if constexpr (std::is_same_v<T, bool>) {
        return bool_text(*value);
    } else {
        return std::to_string(*value);
    }
}

std::string claim_text(MinimalityClaim claim) {
    switch (claim) {
        case MinimalityClaim::guaranteed: return "true";
        case MinimalityClaim::not_covered: return "false";
        case MinimalityClaim::open: return "open";
    }
    return "false";
}

}  // namespace

AnalysisReport analyze_instance(int m, const SupportSet& d, const SupportSet& e, const SupportSet& f,
                                const AnalyzeOptions& options) {
    AnalysisReport report;
    report.m = m;
    report.d = d;
    report.e = e;
    report.f = f;
    report.engine = options.engine;
    report.l_length = code_length(m, d, e, f);
    report.gray_length = 2 * report.l_length;
    report.claim = minimality_claim(m, d, e, f);

    const EnumerationOptions enum_options{options.workers, std::nullopt};
    WeightDistribution message_level;
    switch (options.engine) {
        case Engine::analyze:
        case Engine::closed: {
            auto [msg, cw] = distribution_formula(m, d, e, f);
            message_level = std::move(msg);
            report.distribution = std::move(cw);
            report.kernel_size = kernel_size_formula(m, d, e, f);
            break;
        }
        case Engine::brute: {
            auto result = brute_force(build_defining_set(m, d, e, f), enum_options);
            message_level = std::move(result.message_level);
            report.distribution = std::move(result.codeword_level);
            report.kernel_size = std::int64_t(result.kernel.size());
            break;
        }
        case Engine::compare: {
            auto result = brute_force(build_defining_set(m, d, e, f), enum_options);
            auto [msg, cw] = distribution_formula(m, d, e, f);
            diff_level("message", result.message_level, msg, report.diff);
            diff_level("codeword", result.codeword_level, cw, report.diff);
            const bool kernels_agree = std::int64_t(result.kernel.size()) == kernel_size_formula(m, d, e, f);
            report.distributions_match = report.diff.empty() && kernels_agree;
            message_level = std::move(result.message_level);
            report.distribution = std::move(result.codeword_level);
            report.kernel_size = std::int64_t(result.kernel.size());
            break;
        }
    }
    report.code_size = report.distribution.total();
    if (options.include_message_distribution) report.message_distribution = message_level;
    report.enumerator = enumerator_string(report.distribution, report.gray_length);
    report.weights_div4 = all_weights_divisible_by_4(report.distribution);
    report.ab = ashikhmin_barg_check(report.distribution);

    report.param_n = report.gray_length;
    report.param_k = std::countr_zero(std::uint64_t(report.code_size));
    report.param_d = report.distribution.min_nonzero_weight().value_or(0);

    if (options.engine != Engine::closed) {
        const auto code = gray_image(m, d, e, f, {options.budget_bytes, options.workers});
        report.param_k = code.dimension;
        report.param_d = code.min_distance.value_or(0);
        if (code.materialized) {
            report.self_orthogonal = is_self_orthogonal_exact(code, resolve_workers(options.workers));
            report.exact_minimal = is_minimal_exact(code, options.workers);
        } else {
            report.warning = code.warning;
        }
    }
    return report;
}

std::string to_json(const AnalysisReport& r, int indent) {
    ordered_json j;
    j["m"] = r.m;
    j["D"] = r.d.mask().coordinates();
    j["E"] = r.e.mask().coordinates();
    j["F"] = r.f.mask().coordinates();
    j["L_length"] = r.l_length;
    j["gray_length"] = r.gray_length;
    j["code_size"] = r.code_size;
    j["kernel_size"] = r.kernel_size;
    j["distribution"] = distribution_json(r.distribution);
    if (r.message_distribution) j["message_distribution"] = distribution_json(*r.message_distribution);
    j["enumerator"] = r.enumerator;
    j["params"] = ordered_json{{"n", r.param_n}, {"k", r.param_k}, {"d", r.param_d}};
    j["self_orthogonal"] = optional_or_skipped(r.self_orthogonal);
    j["weights_div4"] = r.weights_div4;
    j["ab_ratio"] = ordered_json{{"w0", r.ab.w0}, {"w_inf", r.ab.w_inf}};
    j["ab_minimal"] = r.ab.minimal;
    j["exact_minimal"] = optional_or_skipped(r.exact_minimal);
    j["paper_claim_minimal"] = claim_json(r.claim);
    if (r.distributions_match) {
        j["distributions_match"] = *r.distributions_match;
        if (!r.diff.empty()) {
            ordered_json diff = ordered_json::array();
            for (const auto& row : r.diff) {
                diff.push_back(ordered_json{{"level", row.level},
                                            {"weight", row.weight},
                                            {"brute", row.brute},
                                            {"closed", row.closed}});
            }
            j["distribution_diff"] = std::move(diff);
        }
    }
    if (r.warning) j["warning"] = *r.warning;
    return j.dump(indent);
}

std::string canonicalize_json(const std::string& text, int indent) {
    return ordered_json::parse(text).dump(indent);
}

std::string csv_header() {
    return "m,D,E,F,L_length,gray_length,code_size,kernel_size,enumerator,n,k,d,self_orthogonal,"
           "weights_div4,w0,w_inf,ab_minimal,exact_minimal,paper_claim_minimal,distributions_match";
}

std::string to_csv_row(const AnalysisReport& r) {
    std::ostringstream out;
    out << r.m << ',' << csv_field(format_support(r.d)) << ',' << csv_field(format_support(r.e)) << ','
        << csv_field(format_support(r.f)) << ',' << r.l_length << ',' << r.gray_length << ','
        << r.code_size << ',' << r.kernel_size << ',' << csv_field(r.enumerator) << ',' << r.param_n
        << ',' << r.param_k << ',' << r.param_d << ',' << optional_text(r.self_orthogonal) << ','
        << bool_text(r.weights_div4) << ',' << r.ab.w0 << ',' << r.ab.w_inf << ','
        << bool_text(r.ab.minimal) << ',' << optional_text(r.exact_minimal) << ','
        << claim_text(r.claim) << ',';
    if (r.distributions_match) out << bool_text(*r.distributions_match);
    return out.str();
}

std::string to_text(const AnalysisReport& r) {
    std::ostringstream out;
    auto braces = [](const SupportSet& s) { return s.size() == 0 ? std::string("{}") : "{" + format_support(s) + "}"; };
    out << "instance     m=" << r.m << " D=" << braces(r.d) << " E=" << braces(r.e) << " F=" << braces(r.f)
        << "\n";
    out << "length |L|   " << r.l_length << " (Gray length " << r.gray_length << ")\n";
    out << "code size    " << r.code_size << " (kernel size " << r.kernel_size << ")\n";
    out << "enumerator   " << r.enumerator << "\n";
    out << "weights      " << r.distribution.distinct_nonzero_weights() << " distinct nonzero\n";
    for (const auto& [w, f] : r.distribution.entries) out << "  " << w << ": " << f << "\n";
    out << "params       [" << r.param_n << ", " << r.param_k << ", " << r.param_d << "]\n";
    out << "self-orth.   " << optional_text(r.self_orthogonal) << " (all weights = 0 mod 4: "
        << bool_text(r.weights_div4) << ")\n";
    out << "AB ratio     " << r.ab.w0 << "/" << r.ab.w_inf << " -> " << (r.ab.minimal ? "> 1/2" : "<= 1/2")
        << "\n";
    out << "minimality   ";
    switch (r.claim) {
        case MinimalityClaim::guaranteed: out << "guaranteed by the equal-support theorem"; break;
        case MinimalityClaim::not_covered: out << "no theoretical guarantee (unequal supports)"; break;
        case MinimalityClaim::open: out << "open case (n = m-1)"; break;
    }
    if (r.exact_minimal) {
        out << "; exhaustive check: " << (*r.exact_minimal ? "minimal" : "NOT minimal");
    } else {
        out << "; exhaustive check skipped";
    }
    out << "\n";
    if (r.distributions_match) {
        out << "compare      " << (*r.distributions_match ? "brute force and closed form agree" : "MISMATCH")
            << "\n";
        for (const auto& row : r.diff) {
            out << "  " << row.level << " weight " << row.weight << ": brute " << row.brute << ", closed "
                << row.closed << "\n";
        }
    }
    if (r.warning) out << "warning      " << *r.warning << "\n";
    return out.str();
}

bool passes(const ScanFilters& filters, const AnalysisReport& r) {
    if (filters.equal_sizes && !(r.d.size() == r.e.size() && r.e.size() == r.f.size())) return false;
    if (filters.self_orthogonal_only && !r.self_orthogonal.value_or(false)) return false;
    if (filters.minimal_only && !r.exact_minimal.value_or(r.ab.minimal)) return false;
    return true;
}

std::size_t run_scan(int m, const AnalyzeOptions& options, const ScanFilters& filters,
                     const std::function<void(const AnalysisReport&)>& emit) {
    const auto supports = proper_supports(m);
    std::vector<std::array<std::size_t, 3>> jobs;
    for (std::size_t i = 0; i < supports.size(); ++i) {
        for (std::size_t j = 0; j < supports.size(); ++j) {
            for (std::size_t k = 0; k < supports.size(); ++k) {
                const auto& d = supports[i];
                const auto& e = supports[j];
                const auto& f = supports[k];
                if (filters.equal_sizes && !(d.size() == e.size() && e.size() == f.size())) continue;
                jobs.push_back({i, j, k});
            }
        }
    }

    AnalyzeOptions row_options = options;
    row_options.workers = 1;
    auto analyze_job = [&](std::size_t idx) {
        const auto& [i, j, k] = jobs[idx];
        return analyze_instance(m, supports[i], supports[j], supports[k], row_options);
    };

    std::size_t emitted = 0;
    auto deliver = [&](const AnalysisReport& report) {
        if (!passes(filters, report)) return;
        emit(report);
        ++emitted;
    };

    const unsigned workers = std::min<std::size_t>(resolve_workers(options.workers), std::max<std::size_t>(jobs.size(), 1));
    if (workers == 1) {
        for (std::size_t idx = 0; idx < jobs.size(); ++idx) deliver(analyze_job(idx));
        return emitted;
    }

    // Reorder buffer: workers fill slots in any order, this thread emits them in job order.
    std::vector<std::optional<AnalysisReport>> slots(jobs.size());
    std::exception_ptr failure;
    std::mutex mutex;
    std::condition_variable ready;
    std::size_t next_job = 0;
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                while (true) {
                    std::size_t idx;
                    {
                        std::lock_guard lock(mutex);
                        if (next_job >= jobs.size() || failure) return;
                        idx = next_job++;
                    }
                    try {
                        auto report = analyze_job(idx);
                        std::lock_guard lock(mutex);
                        slots[idx] = std::move(report);
                    } catch (...) {
                        std::lock_guard lock(mutex);
                        if (!failure) failure = std::current_exception();
                    }
                    ready.notify_all();
                }
            });
        }
        for (std::size_t idx = 0; idx < jobs.size(); ++idx) {
            AnalysisReport report;
            {
                std::unique_lock lock(mutex);
                ready.wait(lock, [&] { return slots[idx].has_value() || failure; });
                if (failure) break;
                report = std::move(*slots[idx]);
                slots[idx].reset();
            }
            deliver(report);
        }
    }
    if (failure) std::rethrow_exception(failure);
    return emitted;
}

std::vector<int> parse_support(const std::string& text) {
    std::vector<int> coords;
    if (text == "none" || text.empty()) return coords;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) throw std::invalid_argument("empty coordinate in '" + text + "'");
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad coordinate '" + item + "'");
        }
        if (used != item.size()) throw std::invalid_argument("bad coordinate '" + item + "'");
        coords.push_back(value);
    }
    return coords;
}

std::string format_support(const SupportSet& s, const std::string& separator) {
    const auto coords = s.mask().coordinates();
    if (coords.empty()) return "none";
    std::string out;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) out += separator;
        out += std::to_string(coords[i]);
    }
    return out;
}

}  // namespace leecode
