#pragma once

// Simplicial complexes generated by one maximal element, their complements in Z2^m and the
// subset-counting identities used by the weight formulas.

#include <cstdint>
#include <vector>

#include "leecode/ring.hpp"

namespace leecode {

/// Support S of the single maximal element of a complex Delta_S = {t : supp(t) subset of S}.
/// S = [m] is rejected because Delta_S would be all of Z2^m; S = {} is allowed.
class SupportSet {
public:
    explicit SupportSet(BitVec mask);
    static SupportSet from_coordinates(const std::vector<int>& coords, int m);
    static SupportSet empty(int m) { return SupportSet(BitVec::zero(m)); }

    const BitVec& mask() const { return mask_; }
    int dimension() const { return mask_.m; }
    int size() const { return mask_.weight(); }

    friend bool operator==(const SupportSet&, const SupportSet&) = default;

private:
    BitVec mask_;
};

/// All proper supports of [m] in ascending mask order (2^m - 1 of them).
std::vector<SupportSet> proper_supports(int m);

/// Members of Delta_S in ascending order; 2^|S| entries.
std::vector<BitVec> complex_members(const SupportSet& s);
/// Members of Z2^m \ Delta_S in ascending order; 2^m - 2^|S| entries.
std::vector<BitVec> complement_members(const SupportSet& s);

/// chi(X|Y) = 1 iff X and Y are disjoint.
int chi(const BitVec& x, const BitVec& y);

/// sum_{t in Delta_S} (-1)^{<p,t>} in closed form: 2^|S| chi(supp(p)|S).
std::int64_t eval_H_at_signs(const SupportSet& s, const BitVec& p);

/// Counting identities over subsets of [m]. Fields not filled by a given routine stay zero.
struct SupportCounts {
    // {X != 0 : chi(X|D) = 1} and {X : chi(X|D) = 0}
    std::int64_t nonempty_disjoint = 0;
    std::int64_t meets = 0;
    // {X != 0 : chi(X|D) chi(X|E) = 1} and {X : chi(X|D) chi(X|E) = 0}
    std::int64_t nonempty_disjoint_both = 0;
    std::int64_t meets_either = 0;
    // Ordered pairs (X, Y) of distinct nonempty subsets with chi(Y|E) = 1, split by
    // chi(X|D) + chi(X xor Y|D) in {0, 1, 2}.
    std::int64_t t0 = 0;
    std::int64_t t1 = 0;
    std::int64_t t2 = 0;
    // Patterns (chi(X|D), chi(X|E)) over all X subset of [m].
    std::int64_t meets_d_meets_e = 0;
    std::int64_t meets_d_disjoint_e = 0;
    std::int64_t disjoint_d_meets_e = 0;
    // Same pairs as t0..t2 but with chi(Y|E) = 0, summed over all splits.
    std::int64_t tprime_total = 0;

    friend bool operator==(const SupportCounts&, const SupportCounts&) = default;
};

/// Fills nonempty_disjoint, meets, nonempty_disjoint_both, meets_either, t0, t1, t2.
SupportCounts disjointness_counts(const SupportSet& d, const SupportSet& e);
/// Fills the three pattern counts and tprime_total.
SupportCounts pattern_counts(const SupportSet& d, const SupportSet& e);

}  // namespace leecode
