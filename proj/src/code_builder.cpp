#include "leecode/code_builder.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace leecode {

namespace {

void check_list(const std::vector<BitVec>& list, int m) {
    for (const auto& v : list) {
        if (v.m != m) throw std::invalid_argument("defining-set vector has wrong dimension");
    }
}

std::uint64_t message_count(int m) {
    if (3 * m >= 63) throw std::domain_error("message space too large to enumerate");
    return std::uint64_t{1} << (3 * m);
}

}  // namespace

DefiningSet DefiningSet::from_lists(int m, std::vector<BitVec> first, std::vector<BitVec> second,
                                    std::vector<BitVec> third) {
    BitVec::zero(m);  // validates m
    check_list(first, m);
    check_list(second, m);
    check_list(third, m);
    DefiningSet set;
    set.m_ = m;
    set.first_ = std::move(first);
    set.second_ = std::move(second);
    set.third_ = std::move(third);
    return set;
}

Triple DefiningSet::triple(std::size_t i) const {
    if (i >= size()) throw std::out_of_range("defining-set index");
    const std::size_t n2 = second_.size();
    const std::size_t n3 = third_.size();
    return {first_[i / (n2 * n3)], second_[(i / n3) % n2], third_[i % n3]};
}

std::vector<Triple> DefiningSet::triples() const {
    std::vector<Triple> out;
    out.reserve(size());
    for (const auto& t1 : first_) {
        for (const auto& t2 : second_) {
            for (const auto& t3 : third_) out.push_back({t1, t2, t3});
        }
    }
    return out;
}

DefiningSet build_defining_set(int m, const SupportSet& d, const SupportSet& e, const SupportSet& f) {
    if (d.dimension() != m || e.dimension() != m || f.dimension() != m) {
        throw std::invalid_argument("supports must be subsets of [m]");
    }
    DefiningSet set = DefiningSet::from_lists(m, complement_members(d), complement_members(e),
                                              complement_members(f));
    set.d_ = d;
    set.e_ = e;
    set.f_ = f;
    return set;
}

// ---------------------------------------------------------------------------------------------

Encoder::Encoder(DefiningSet set) : set_(std::move(set)) {
    const int m = set_.dimension();
    const std::uint32_t count = BitVec::full_mask(m) + 1;
    const auto& third = set_.third();
    third_parity_.reserve(count);
    third_parity_flipped_.reserve(count);
    for (std::uint32_t v = 0; v < count; ++v) {
        BitWord w(third.size());
        for (std::size_t i = 0; i < third.size(); ++i) w.set(i, std::popcount(v & third[i].bits) & 1);
        BitWord flipped = w;
        flipped.flip_all();
        third_parity_.push_back(std::move(w));
        third_parity_flipped_.push_back(std::move(flipped));
    }
}

// Within the block of a fixed (t1, t2) the u-part is <p,t1> + <r,t2> + <q,t3>, i.e. the
// precomputed q-row over the third list, possibly complemented; the unit part <q,t2> is constant.
CodewordZ2u Encoder::encode(const MixedWord& a) const {
    if (a.dimension() != set_.dimension()) throw std::invalid_argument("message dimension mismatch");
    const std::size_t n3 = set_.third().size();
    CodewordZ2u w(length());
    if (n3 == 0) return w;
    const auto& row = third_parity_[a.q.bits];
    const auto& row_flipped = third_parity_flipped_[a.q.bits];
    std::size_t offset = 0;
    for (const auto& t1 : set_.first()) {
        const int c1 = std::popcount(a.p.bits & t1.bits) & 1;
        for (const auto& t2 : set_.second()) {
            const int c = c1 ^ (std::popcount(a.r.bits & t2.bits) & 1);
            w.r.write_bits(offset, c ? row_flipped : row, n3);
            if (std::popcount(a.q.bits & t2.bits) & 1) w.q.fill(offset, n3, true);
            offset += n3;
        }
    }
    return w;
}

CodewordZ2u encode(const MixedWord& a, const DefiningSet& set) { return Encoder(set).encode(a); }

// ---------------------------------------------------------------------------------------------

std::string to_string(DistributionLevel level) {
    return level == DistributionLevel::message ? "message" : "codeword";
}

std::int64_t WeightDistribution::total() const {
    std::int64_t t = 0;
    for (const auto& [w, f] : entries) t += f;
    return t;
}

std::int64_t WeightDistribution::at(std::int64_t weight) const {
    auto it = entries.find(weight);
    return it == entries.end() ? 0 : it->second;
}

std::optional<std::int64_t> WeightDistribution::min_nonzero_weight() const {
    for (const auto& [w, f] : entries) {
        if (w != 0 && f != 0) return w;
    }
    return std::nullopt;
}

std::optional<std::int64_t> WeightDistribution::max_weight() const {
    for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
        if (it->second != 0) return it->first;
    }
    return std::nullopt;
}

std::size_t WeightDistribution::distinct_nonzero_weights() const {
    return std::count_if(entries.begin(), entries.end(),
                         [](const auto& kv) { return kv.first != 0 && kv.second != 0; });
}

WeightDistribution to_codeword_level(const WeightDistribution& message_level, std::int64_t kernel_size) {
    if (kernel_size <= 0) throw std::invalid_argument("kernel size must be positive");
    WeightDistribution out;
    out.level = DistributionLevel::codeword;
    for (const auto& [w, f] : message_level.entries) {
        if (f % kernel_size != 0) {
            throw std::logic_error("frequency " + std::to_string(f) + " at weight " + std::to_string(w) +
                                   " not divisible by kernel size " + std::to_string(kernel_size));
        }
        if (f != 0) out.entries[w] = f / kernel_size;
    }
    return out;
}

unsigned resolve_workers(unsigned requested) {
    if (requested != 0) return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

struct PartialCount {
    std::vector<std::int64_t> histogram;
    std::vector<std::uint64_t> kernel;
};

void enumerate_range(const Encoder& encoder, std::uint64_t begin, std::uint64_t end, PartialCount& out) {
    const int m = encoder.defining_set().dimension();
    out.histogram.assign(2 * encoder.length() + 1, 0);
    for (std::uint64_t idx = begin; idx < end; ++idx) {
        const auto word = encoder.encode(MixedWord::from_index(idx, m));
        const std::size_t w = lee_weight(word);
        ++out.histogram[w];
        if (w == 0) out.kernel.push_back(idx);
    }
}

// Counts distinct codewords per weight by hashing them all.
void dedup_audit(const Encoder& encoder, const WeightDistribution& codeword_level) {
    const int m = encoder.defining_set().dimension();
    std::unordered_map<BitWord, std::int64_t> seen;
    for (std::uint64_t idx = 0; idx < message_count(m); ++idx) {
        const auto word = encoder.encode(MixedWord::from_index(idx, m));
        seen.emplace(word.q.concat(word.r), std::int64_t(lee_weight(word)));
    }
    WeightDistribution hashed;
    hashed.level = DistributionLevel::codeword;
    for (const auto& [word, w] : seen) ++hashed.entries[w];
    if (hashed != codeword_level) {
        throw std::logic_error("codeword-level distribution disagrees with the dedup audit");
    }
}

}  // namespace

BruteForceResult brute_force(const DefiningSet& set, const EnumerationOptions& options) {
    const int m = set.dimension();
    const std::uint64_t total = message_count(m);
    const Encoder encoder(set);

    const unsigned workers = std::min<std::uint64_t>(resolve_workers(options.workers), total);
    std::vector<PartialCount> partials(workers);
    if (workers == 1) {
        enumerate_range(encoder, 0, total, partials[0]);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t begin = total * w / workers;
            const std::uint64_t end = total * (w + 1) / workers;
            pool.emplace_back([&, begin, end, w] { enumerate_range(encoder, begin, end, partials[w]); });
        }
    }

    BruteForceResult result;
    result.message_level.level = DistributionLevel::message;
    for (const auto& part : partials) {
        for (std::size_t w = 0; w < part.histogram.size(); ++w) {
            if (part.histogram[w] != 0) result.message_level.entries[std::int64_t(w)] += part.histogram[w];
        }
        for (auto idx : part.kernel) result.kernel.push_back(MixedWord::from_index(idx, m));
    }
    std::sort(result.kernel.begin(), result.kernel.end(),
              [](const MixedWord& x, const MixedWord& y) { return x.index() < y.index(); });

    // f is linear, so a + k encodes like a for every kernel element k; cosets have equal size.
    result.codeword_level = to_codeword_level(result.message_level, std::int64_t(result.kernel.size()));

    if (options.dedup_audit.value_or(m <= 3)) dedup_audit(encoder, result.codeword_level);
    return result;
}

std::pair<WeightDistribution, WeightDistribution> brute_force_distribution(
    int m, const SupportSet& d, const SupportSet& e, const SupportSet& f,
    const EnumerationOptions& options) {
    auto result = brute_force(build_defining_set(m, d, e, f), options);
    return {std::move(result.message_level), std::move(result.codeword_level)};
}

std::vector<MixedWord> kernel(int m, const SupportSet& d, const SupportSet& e, const SupportSet& f) {
    const Encoder encoder(build_defining_set(m, d, e, f));
    std::vector<MixedWord> out;
    for (std::uint64_t idx = 0; idx < message_count(m); ++idx) {
        auto a = MixedWord::from_index(idx, m);
        if (encoder.encode(a).is_zero()) out.push_back(a);
    }
    return out;
}

}  // namespace leecode
