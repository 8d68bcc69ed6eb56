#pragma once

// Closed-form Lee weights and weight distribution of C_L for single-maximal-element complexes.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "leecode/code_builder.hpp"
#include "leecode/ring.hpp"
#include "leecode/simplicial.hpp"

namespace leecode {

/// Length (2^m - 2^|D|)(2^m - 2^|E|)(2^m - 2^|F|) of C_L.
std::int64_t code_length(int m, const SupportSet& d, const SupportSet& e, const SupportSet& f);

/// Lee weight of c_a evaluated from the character-sum closed form with Kronecker deltas and chi terms.
std::int64_t lee_weight_formula(int m, const SupportSet& d, const SupportSet& e, const SupportSet& f,
                                const MixedWord& a);

/// One row of the closed-form distribution table before or after merging.
struct WeightRow {
    std::int64_t weight = 0;
    std::int64_t frequency = 0;
    /// Case indices aggregated into this row, e.g. {6, 18}. The residual row is labelled {2}.
    std::vector<int> case_labels;
};

/// Message-level rows before merging: the zero row, those of the eleven explicit rows that occur
/// (nonzero frequency), then the residual weight-|L| row.
std::vector<WeightRow> distribution_rows(int m, const SupportSet& d, const SupportSet& e,
                                         const SupportSet& f);

/// Rows merged by evaluated weight, ascending, zero-frequency rows dropped.
std::vector<WeightRow> merge_rows(const std::vector<WeightRow>& rows);

/// Kernel size of a -> c_a: 2 when |D| = |E| = m - 1, otherwise 1.
std::int64_t kernel_size_formula(int m, const SupportSet& d, const SupportSet& e, const SupportSet& f);

/// |C_L| = 2^{3m} / kernel size.
std::int64_t code_size_formula(int m, const SupportSet& d, const SupportSet& e, const SupportSet& f);

/// (message-level, codeword-level). Throws std::logic_error if the residual row is negative.
std::pair<WeightDistribution, WeightDistribution> distribution_formula(int m, const SupportSet& d,
                                                                        const SupportSet& e,
                                                                        const SupportSet& f);

/// "X^128 + 2X^96Y^32 + ..." with terms ascending in the Y exponent.
/// Throws std::invalid_argument if a weight exceeds gray_length.
std::string enumerator_string(const WeightDistribution& dist, std::int64_t gray_length);

}  // namespace leecode
