#include "leecode/gray_analysis.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "leecode/closed_form.hpp"

namespace leecode {

namespace {

void require_materialized(const BinaryCode& code) {
    if (!code.materialized) throw std::invalid_argument("code words are not materialized");
}

// Runs body(begin, end) over [0, count) split into `workers` contiguous ranges.
template <typename Body>
void parallel_ranges(std::size_t count, unsigned workers, Body body) {
    workers = std::max(1u, std::min<unsigned>(workers, unsigned(std::max<std::size_t>(count, 1))));
    if (workers == 1) {
        body(std::size_t{0}, count);
        return;
    }
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        const std::size_t begin = count * w / workers;
        const std::size_t end = count * (w + 1) / workers;
        pool.emplace_back([=] { body(begin, end); });
    }
}

}  // namespace

BinaryCode binary_code_from_words(std::vector<BitWord> words) {
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    if (words.empty() || !std::has_single_bit(words.size())) {
        throw std::invalid_argument("number of codewords must be a power of two");
    }
    const std::size_t n = words.front().size();
    std::unordered_set<BitWord> members(words.begin(), words.end());
    if (!words.front().is_zero()) throw std::invalid_argument("code does not contain the zero word");

    BinaryCode code;
    code.length = std::int64_t(n);
    code.dimension = std::countr_zero(words.size());
    code.materialized = true;
    for (const auto& w : words) {
        if (w.size() != n) throw std::invalid_argument("codewords of different lengths");
        if (!w.is_zero()) {
            const auto weight = std::int64_t(w.weight());
            code.min_distance = code.min_distance ? std::min(*code.min_distance, weight) : weight;
        }
    }
    // Closure: sums of pairs from a spanning set must stay in the code.
    std::vector<BitWord> basis;
    for (const auto& w : words) {
        basis.push_back(w);
        if (gf2_rank(basis) < int(basis.size())) basis.pop_back();
    }
    if (int(basis.size()) != code.dimension) throw std::invalid_argument("word set is not a linear code");
    for (const auto& x : words) {
        for (const auto& b : basis) {
            if (!members.contains(x ^ b)) throw std::invalid_argument("word set is not closed under addition");
        }
    }
    code.generators = std::move(basis);
    code.words = std::move(words);
    return code;
}

int gf2_rank(std::vector<BitWord> rows) {
    if (rows.empty()) return 0;
    const std::size_t n = rows.front().size();
    int rank = 0;
    for (std::size_t col = 0; col < n && rank < int(rows.size()); ++col) {
        auto pivot = std::find_if(rows.begin() + rank, rows.end(), [col](const BitWord& r) { return r.get(col); });
        if (pivot == rows.end()) continue;
        std::iter_swap(rows.begin() + rank, pivot);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (int(i) != rank && rows[i].get(col)) rows[i] ^= rows[rank];
        }
        ++rank;
    }
    return rank;
}

BinaryCode gray_image(int m, const SupportSet& d, const SupportSet& e, const SupportSet& f,
                      const GrayImageOptions& options) {
    const std::int64_t n = 2 * code_length(m, d, e, f);
    const std::int64_t size = code_size_formula(m, d, e, f);
    const std::uint64_t bytes = std::uint64_t(size) * ((std::uint64_t(n) + 63) / 64) * 8;

    const Encoder encoder(build_defining_set(m, d, e, f));
    BinaryCode code;
    code.length = n;
    for (int j = 0; j < m; ++j) {
        const BitVec unit = BitVec::make(std::uint32_t{1} << j, m);
        const BitVec zero = BitVec::zero(m);
        for (const auto& a : {MixedWord::make(unit, zero, zero), MixedWord::make(zero, unit, zero),
                              MixedWord::make(zero, zero, unit)}) {
            code.generators.push_back(gray_map_word(encoder.encode(a)));
        }
    }

    if (bytes > options.budget_bytes) {
        const auto [message_level, codeword_level] = distribution_formula(m, d, e, f);
        code.dimension = std::countr_zero(std::uint64_t(size));
        code.min_distance = codeword_level.min_nonzero_weight();
        code.warning = "materialization needs " + std::to_string(bytes) + " bytes, budget is " +
                       std::to_string(options.budget_bytes) + "; parameters from closed form";
        return code;
    }

    const std::uint64_t messages = std::uint64_t{1} << (3 * m);
    std::vector<BitWord> images(messages);
    parallel_ranges(messages, resolve_workers(options.workers), [&](std::size_t begin, std::size_t end) {
        for (std::size_t idx = begin; idx < end; ++idx) {
            images[idx] = gray_map_word(encoder.encode(MixedWord::from_index(idx, m)));
        }
    });
    std::sort(images.begin(), images.end());
    images.erase(std::unique(images.begin(), images.end()), images.end());
    if (!std::has_single_bit(images.size())) throw std::logic_error("Gray image size is not a power of two");

    code.dimension = std::countr_zero(images.size());
    for (const auto& w : images) {
        if (w.is_zero()) continue;
        const auto weight = std::int64_t(w.weight());
        code.min_distance = code.min_distance ? std::min(*code.min_distance, weight) : weight;
    }
    code.words = std::move(images);
    code.materialized = true;
    return code;
}

bool is_self_orthogonal_exact(const BinaryCode& code, unsigned workers) {
    require_materialized(code);
    const auto& gens = code.generators.empty() ? code.words : code.generators;
    bool generators_ok = true;
    for (std::size_t i = 0; i < gens.size() && generators_ok; ++i) {
        for (std::size_t j = i; j < gens.size(); ++j) {
            if (parity_dot(gens[i], gens[j]) != 0) {
                generators_ok = false;
                break;
            }
        }
    }

    if (code.words.size() <= kFullGramAuditLimit) {
        std::atomic<bool> all_ok{true};
        parallel_ranges(code.words.size(), workers, [&](std::size_t begin, std::size_t end) {
            for (std::size_t i = begin; i < end && all_ok; ++i) {
                for (std::size_t j = i; j < code.words.size(); ++j) {
                    if (parity_dot(code.words[i], code.words[j]) != 0) {
                        all_ok = false;
                        return;
                    }
                }
            }
        });
        if (all_ok != generators_ok) {
            throw std::logic_error("generator Gram check disagrees with the full Gram audit");
        }
    }
    return generators_ok;
}

bool all_weights_divisible_by_4(const WeightDistribution& dist) {
    return std::all_of(dist.entries.begin(), dist.entries.end(),
                       [](const auto& kv) { return kv.second == 0 || kv.first % 4 == 0; });
}

AshikhminBarg ashikhmin_barg_check(const WeightDistribution& dist) {
    const auto w0 = dist.min_nonzero_weight();
    const auto w_inf = dist.max_weight();
    if (!w0 || !w_inf) throw std::invalid_argument("Ashikhmin-Barg check needs a nonzero codeword");
    return {*w0, *w_inf, 2 * *w0 > *w_inf};
}

bool is_minimal_exact(const BinaryCode& code, unsigned workers) {
    require_materialized(code);
    // supp(c') inside supp(c) with c' != c forces wt(c') < wt(c), so only lighter words are candidates.
    std::vector<const BitWord*> nonzero;
    std::vector<std::size_t> weights;
    for (const auto& w : code.words) {
        if (!w.is_zero()) nonzero.push_back(&w);
    }
    std::sort(nonzero.begin(), nonzero.end(),
              [](const BitWord* a, const BitWord* b) { return a->weight() < b->weight(); });
    for (const auto* w : nonzero) weights.push_back(w->weight());

    std::atomic<bool> minimal{true};
    parallel_ranges(nonzero.size(), resolve_workers(workers), [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end && minimal; ++i) {
            for (std::size_t j = 0; j < nonzero.size() && weights[j] < weights[i]; ++j) {
                if (nonzero[j]->is_subset_of(*nonzero[i])) {
                    minimal = false;
                    return;
                }
            }
        }
    });
    return minimal;
}

bool minimality_predicate(int m, int n) {
    if (n < 0 || n > m - 1) throw std::invalid_argument("support size must lie in [0, m-1]");
    return n <= m - 2;
}

}  // namespace leecode
