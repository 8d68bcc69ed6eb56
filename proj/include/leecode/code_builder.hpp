#pragma once

// The defining set L, the encoding map a -> ((a . l))_{l in L}, and exhaustive (ground-truth)
// Lee weight distributions and kernels.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "leecode/ring.hpp"
#include "leecode/simplicial.hpp"

namespace leecode {

struct Triple {
    BitVec t1;
    BitVec t2;
    BitVec t3;
    friend bool operator==(const Triple&, const Triple&) = default;
};

/// Ordered index set L = T1 x T2 x T3, lexicographic in (t1, t2, t3).
///
/// The public constructor takes the complements of three single-maximal-element complexes.
/// from_lists() accepts any three lists of vectors of Z2^m; it feeds oracle tests and the
/// enumeration engine but carries no closed-form claim.
class DefiningSet {
public:
    static DefiningSet from_lists(int m, std::vector<BitVec> first, std::vector<BitVec> second,
                                  std::vector<BitVec> third);

    int dimension() const { return m_; }
    std::size_t size() const { return first_.size() * second_.size() * third_.size(); }

    const std::vector<BitVec>& first() const { return first_; }
    const std::vector<BitVec>& second() const { return second_; }
    const std::vector<BitVec>& third() const { return third_; }

    /// Present when built from supports.
    const std::optional<SupportSet>& d() const { return d_; }
    const std::optional<SupportSet>& e() const { return e_; }
    const std::optional<SupportSet>& f() const { return f_; }

    Triple triple(std::size_t i) const;
    std::vector<Triple> triples() const;

private:
    friend DefiningSet build_defining_set(int, const SupportSet&, const SupportSet&,
                                          const SupportSet&);
    DefiningSet() = default;

    int m_ = 0;
    std::vector<BitVec> first_;
    std::vector<BitVec> second_;
    std::vector<BitVec> third_;
    std::optional<SupportSet> d_;
    std::optional<SupportSet> e_;
    std::optional<SupportSet> f_;
};

DefiningSet build_defining_set(int m, const SupportSet& d, const SupportSet& e, const SupportSet& f);

/// Precomputes the parity tables of a defining set so that repeated encodings are word-parallel.
class Encoder {
public:
    explicit Encoder(DefiningSet set);

    const DefiningSet& defining_set() const { return set_; }
    std::size_t length() const { return set_.size(); }

    /// Entry i is inner_product_mixed(a, t1_i, t2_i, t3_i).
    CodewordZ2u encode(const MixedWord& a) const;

private:
    DefiningSet set_;
    // Indexed by v in Z2^m: (<v, t>)_{t in third list} and its complement.
    std::vector<BitWord> third_parity_;
    std::vector<BitWord> third_parity_flipped_;
};

CodewordZ2u encode(const MixedWord& a, const DefiningSet& set);

enum class DistributionLevel { message, codeword };

std::string to_string(DistributionLevel level);

/// Exact Lee weight -> frequency map.
struct WeightDistribution {
    DistributionLevel level = DistributionLevel::message;
    std::map<std::int64_t, std::int64_t> entries;

    std::int64_t total() const;
    /// Frequency of `weight`, zero if absent.
    std::int64_t at(std::int64_t weight) const;
    std::optional<std::int64_t> min_nonzero_weight() const;
    std::optional<std::int64_t> max_weight() const;
    std::size_t distinct_nonzero_weights() const;

    friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
};

/// Divides every frequency by the kernel size (kernel cosets share one codeword).
/// Throws std::logic_error if a frequency is not divisible.
WeightDistribution to_codeword_level(const WeightDistribution& message_level, std::int64_t kernel_size);

struct EnumerationOptions {
    /// 0 selects std::thread::hardware_concurrency().
    unsigned workers = 0;
    /// Hash every distinct codeword and check the per-weight counts; nullopt enables it for m <= 3.
    std::optional<bool> dedup_audit;
};

struct BruteForceResult {
    WeightDistribution message_level;
    WeightDistribution codeword_level;
    std::vector<MixedWord> kernel;
};

/// Encodes every message of R^m. Works for any DefiningSet, including from_lists().
BruteForceResult brute_force(const DefiningSet& set, const EnumerationOptions& options = {});

std::pair<WeightDistribution, WeightDistribution> brute_force_distribution(
    int m, const SupportSet& d, const SupportSet& e, const SupportSet& f,
    const EnumerationOptions& options = {});

/// All messages that encode to the zero word, in ascending index order.
std::vector<MixedWord> kernel(int m, const SupportSet& d, const SupportSet& e, const SupportSet& f);

unsigned resolve_workers(unsigned requested);

}  // namespace leecode
