#pragma once

// Binary Gray images Phi(C_L): parameters, self-orthogonality and minimality.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "leecode/code_builder.hpp"
#include "leecode/ring.hpp"
#include "leecode/simplicial.hpp"

namespace leecode {

inline constexpr std::uint64_t kDefaultMaterializationBudget = std::uint64_t{256} << 20;
/// Codes with at most this many words also get the full pairwise Gram audit.
inline constexpr std::size_t kFullGramAuditLimit = 512;

/// A binary linear code. `words` is empty unless the code was materialized.
struct BinaryCode {
    std::int64_t length = 0;
    int dimension = 0;
    /// Minimum nonzero weight; nullopt for the zero code.
    std::optional<std::int64_t> min_distance;
    bool materialized = false;
    /// All codewords in ascending order, zero word first.
    std::vector<BitWord> words;
    /// A generating set (not necessarily independent).
    std::vector<BitWord> generators;
    /// Set when materialization was refused.
    std::optional<std::string> warning;

    std::size_t size() const { return std::size_t{1} << dimension; }
};

/// Builds a materialized code from a list of words, checking closure under addition.
BinaryCode binary_code_from_words(std::vector<BitWord> words);

struct GrayImageOptions {
    std::uint64_t budget_bytes = kDefaultMaterializationBudget;
    unsigned workers = 0;
};

/// One Gray image per distinct codeword of C_L. When |C_L| x 2|L| bits exceeds the budget the code
/// is returned parameters-only, with k and d taken from the closed-form distribution.
BinaryCode gray_image(int m, const SupportSet& d, const SupportSet& e, const SupportSet& f,
                      const GrayImageOptions& options = {});

/// Rank over GF(2).
int gf2_rank(std::vector<BitWord> rows);

/// Pairwise orthogonality over the generating set (all words when none is stored).
/// Small codes are also checked over every pair of codewords. Throws if not materialized.
bool is_self_orthogonal_exact(const BinaryCode& code, unsigned workers = 1);

/// Every nonzero weight is divisible by 4.
bool all_weights_divisible_by_4(const WeightDistribution& dist);

struct AshikhminBarg {
    std::int64_t w0 = 0;
    std::int64_t w_inf = 0;
    /// w0 / w_inf > 1/2, evaluated as 2 w0 > w_inf.
    bool minimal = false;
};

/// Throws std::invalid_argument for the zero code.
AshikhminBarg ashikhmin_barg_check(const WeightDistribution& dist);

/// No two distinct nonzero codewords c' != c with supp(c') inside supp(c). Throws if not materialized.
bool is_minimal_exact(const BinaryCode& code, unsigned workers = 0);

/// Sufficient condition for minimality when |D| = |E| = |F| = n: n <= m - 2.
bool minimality_predicate(int m, int n);

}  // namespace leecode
