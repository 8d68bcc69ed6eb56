#include "leecode/simplicial.hpp"

#include <bit>
#include <stdexcept>

namespace leecode {

namespace {

std::int64_t pow2(int e) {
    if (e < 0 || e > 62) throw std::domain_error("power of two out of range");
    return std::int64_t{1} << e;
}

void require_same_dimension(const SupportSet& d, const SupportSet& e) {
    if (d.dimension() != e.dimension()) throw std::invalid_argument("supports over different m");
}

}  // namespace

SupportSet::SupportSet(BitVec mask) : mask_(BitVec::make(mask.bits, mask.m)) {
    if (mask_.bits == BitVec::full_mask(mask_.m)) {
        throw std::invalid_argument("support equal to [m] generates all of Z2^m");
    }
}

SupportSet SupportSet::from_coordinates(const std::vector<int>& coords, int m) {
    return SupportSet(BitVec::from_coordinates(coords, m));
}

std::vector<SupportSet> proper_supports(int m) {
    std::vector<SupportSet> out;
    const std::uint32_t full = BitVec::full_mask(m);
    out.reserve(full);
    for (std::uint32_t s = 0; s < full; ++s) out.emplace_back(BitVec::make(s, m));
    return out;
}

std::vector<BitVec> complex_members(const SupportSet& s) {
    const int m = s.dimension();
    const std::uint32_t mask = s.mask().bits;
    std::vector<BitVec> out;
    out.reserve(std::size_t{1} << s.size());
    for (std::uint32_t t = 0; t <= BitVec::full_mask(m); ++t) {
        if ((t & ~mask) == 0) out.push_back(BitVec{t, m});
    }
    return out;
}

std::vector<BitVec> complement_members(const SupportSet& s) {
    const int m = s.dimension();
    const std::uint32_t mask = s.mask().bits;
    std::vector<BitVec> out;
    out.reserve((std::size_t{1} << m) - (std::size_t{1} << s.size()));
    for (std::uint32_t t = 0; t <= BitVec::full_mask(m); ++t) {
        if ((t & ~mask) != 0) out.push_back(BitVec{t, m});
    }
    return out;
}

int chi(const BitVec& x, const BitVec& y) { return (x & y).is_zero() ? 1 : 0; }

std::int64_t eval_H_at_signs(const SupportSet& s, const BitVec& p) {
    return pow2(s.size()) * chi(p, s.mask());
}

SupportCounts disjointness_counts(const SupportSet& d, const SupportSet& e) {
    require_same_dimension(d, e);
    const int m = d.dimension();
    const int nd = d.size();
    const int ne = e.size();
    const int nde = std::popcount(d.mask().bits | e.mask().bits);

    SupportCounts c;
    c.nonempty_disjoint = pow2(m - nd) - 1;
    c.meets = pow2(m) - pow2(m - nd);
    c.nonempty_disjoint_both = pow2(m - nde) - 1;
    c.meets_either = pow2(m) - pow2(m - nde);
    c.t0 = pow2(m) * (pow2(m - ne) - 1) + pow2(m - nd) * (1 + pow2(m - nde) - pow2(m + 1 - ne));
    c.t1 = 2 * (pow2(m - nd) - 1) * (pow2(m - ne) - pow2(m - nde));
    c.t2 = (pow2(m - nd) - 2) * (pow2(m - nde) - 1);
    return c;
}

SupportCounts pattern_counts(const SupportSet& d, const SupportSet& e) {
    require_same_dimension(d, e);
    const int m = d.dimension();
    const int nd = d.size();
    const int ne = e.size();
    const int nunion = std::popcount(d.mask().bits | e.mask().bits);
    const int ninter = std::popcount(d.mask().bits & e.mask().bits);

    SupportCounts c;
    c.meets_d_meets_e =
        pow2(m) - pow2(m - nunion) * (pow2(nd - ninter) + pow2(ne - ninter) - 1);
    c.meets_d_disjoint_e = pow2(m - nunion) * (pow2(nd - ninter) - 1);
    c.disjoint_d_meets_e = pow2(m - nunion) * (pow2(ne - ninter) - 1);
    c.tprime_total = (pow2(m) - pow2(m - ne)) * (pow2(m) - 2);
    return c;
}

}  // namespace leecode
