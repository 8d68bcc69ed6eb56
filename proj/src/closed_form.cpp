#include "leecode/closed_form.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>
#include <stdexcept>

namespace leecode {

namespace {

std::int64_t pow2(int e) {
    if (e < 0 || e > 62) throw std::domain_error("power of two out of range");
    return std::int64_t{1} << e;
}

void require_dimension(int m, const SupportSet& d, const SupportSet& e, const SupportSet& f) {
    if (d.dimension() != m || e.dimension() != m || f.dimension() != m) {
        throw std::invalid_argument("supports must be subsets of [m]");
    }
}

// Character sum over a complement: sum_{t not in Delta_S} (-1)^{<v,t>} = 2^m [v = 0] - 2^|S| chi(v|S).
std::int64_t complement_sum(int m, const SupportSet& s, const BitVec& v) {
    return (v.is_zero() ? pow2(m) : 0) - eval_H_at_signs(s, v);
}

}  // namespace

std::int64_t code_length(int m, const SupportSet& d, const SupportSet& e, const SupportSet& f) {
    require_dimension(m, d, e, f);
    return (pow2(m) - pow2(d.size())) * (pow2(m) - pow2(e.size())) * (pow2(m) - pow2(f.size()));
}

std::int64_t lee_weight_formula(int m, const SupportSet& d, const SupportSet& e, const SupportSet& f,
                                const MixedWord& a) {
    require_dimension(m, d, e, f);
    if (a.dimension() != m) throw std::invalid_argument("message dimension mismatch");
    const std::int64_t length = code_length(m, d, e, f);
    const std::int64_t sp = complement_sum(m, d, a.p);
    const std::int64_t sq = complement_sum(m, f, a.q);
    const std::int64_t sr = complement_sum(m, e, a.r);
    const std::int64_t sqr = complement_sum(m, e, a.q ^ a.r);
    // 2|L| - (sp sr sq) - (sp sqr sq) is twice the weight; both products share the parity of |L|.
    const std::int64_t twice = 2 * length - sp * sr * sq - sp * sqr * sq;
    if (twice % 2 != 0) throw std::logic_error("odd numerator in Lee weight formula");
    return twice / 2;
}

std::vector<WeightRow> distribution_rows(int m, const SupportSet& d, const SupportSet& e,
                                         const SupportSet& f) {
    require_dimension(m, d, e, f);
    const int nd = d.size();
    const int ne = e.size();
    const int nf = f.size();
    const std::int64_t full = pow2(m);
    const std::int64_t cd = full - pow2(nd);  // |Delta_D^c|
    const std::int64_t ce = full - pow2(ne);
    const std::int64_t cf = full - pow2(nf);
    const std::int64_t sd = pow2(nd);
    const std::int64_t se = pow2(ne);
    const std::int64_t sf = pow2(nf);
    const std::int64_t length = cd * ce * cf;

    const int n_union_ef = std::popcount(e.mask().bits | f.mask().bits);
    const std::int64_t nonzero_disjoint_d = pow2(m - nd) - 1;
    const std::int64_t nonzero_disjoint_e = pow2(m - ne) - 1;
    const std::int64_t nonzero_disjoint_ef = pow2(m - n_union_ef) - 1;
    // X meets E but misses F.
    const std::int64_t meets_e_misses_f = pattern_counts(e, f).meets_d_disjoint_e;
    const auto pairs = disjointness_counts(e, f);

    // Each row as (twice its weight, frequency, labels). A row with nonzero frequency always has
    // an even doubled weight; rows that cannot occur may not, and are dropped.
    struct Raw {
        std::int64_t twice_weight;
        std::int64_t frequency;
        std::vector<int> labels;
    };
    const std::int64_t l2 = 2 * length;
    const std::vector<Raw> raw = {
        {0, 1, {1}},
        {l2 + 2 * cd * se * cf, nonzero_disjoint_e, {3}},
        {l2 + cd * ce * sf, 2 * meets_e_misses_f, {6, 18}},
        {l2 + cd * ce * sf - cd * se * sf, 2 * nonzero_disjoint_ef, {7, 19}},
        {l2 - cd * se * sf, pairs.t1, {13, 14}},
        {l2 - 2 * cd * se * sf, pairs.t2, {15}},
        {l2 + 2 * sd * ce * cf, nonzero_disjoint_d, {21}},
        {l2 - 2 * sd * se * cf, nonzero_disjoint_d * nonzero_disjoint_e, {25}},
        {l2 - sd * ce * sf, 2 * nonzero_disjoint_d * meets_e_misses_f, {32, 56}},
        {l2 - sd * ce * sf + sd * se * sf, 2 * nonzero_disjoint_d * nonzero_disjoint_ef, {33, 57}},
        {l2 + sd * se * sf, nonzero_disjoint_d * pairs.t1, {47, 48}},
        {l2 + 2 * sd * se * sf, nonzero_disjoint_d * pairs.t2, {49}},
    };

    std::vector<WeightRow> rows;
    for (const auto& r : raw) {
        if (r.frequency < 0) throw std::logic_error("negative frequency in closed-form row");
        if (r.frequency == 0) continue;
        if (r.twice_weight % 2 != 0) throw std::logic_error("odd doubled weight in an occurring row");
        rows.push_back({r.twice_weight / 2, r.frequency, r.labels});
    }

    std::int64_t explicit_total = 0;
    for (const auto& row : rows) explicit_total += row.frequency;
    const std::int64_t residual = pow2(3 * m) - explicit_total;
    if (residual < 0) throw std::logic_error("negative residual frequency at weight |L|");
    rows.push_back({length, residual, {2}});
    return rows;
}

std::vector<WeightRow> merge_rows(const std::vector<WeightRow>& rows) {
    std::map<std::int64_t, WeightRow> merged;
    for (const auto& row : rows) {
        if (row.frequency == 0) continue;
        auto& slot = merged[row.weight];
        slot.weight = row.weight;
        slot.frequency += row.frequency;
        slot.case_labels.insert(slot.case_labels.end(), row.case_labels.begin(), row.case_labels.end());
    }
    std::vector<WeightRow> out;
    out.reserve(merged.size());
    for (auto& [w, row] : merged) {
        std::sort(row.case_labels.begin(), row.case_labels.end());
        out.push_back(std::move(row));
    }
    return out;
}

std::int64_t kernel_size_formula(int m, const SupportSet& d, const SupportSet& e, const SupportSet& f) {
    require_dimension(m, d, e, f);
    return (d.size() == m - 1 && e.size() == m - 1) ? 2 : 1;
}

std::int64_t code_size_formula(int m, const SupportSet& d, const SupportSet& e, const SupportSet& f) {
    return pow2(3 * m) / kernel_size_formula(m, d, e, f);
}

std::pair<WeightDistribution, WeightDistribution> distribution_formula(int m, const SupportSet& d,
                                                                        const SupportSet& e,
                                                                        const SupportSet& f) {
    WeightDistribution message_level;
    message_level.level = DistributionLevel::message;
    for (const auto& row : merge_rows(distribution_rows(m, d, e, f))) {
        if (row.weight < 0) throw std::logic_error("negative weight in closed-form row");
        message_level.entries[row.weight] = row.frequency;
    }
    auto codeword_level = to_codeword_level(message_level, kernel_size_formula(m, d, e, f));
    return {std::move(message_level), std::move(codeword_level)};
}

std::string enumerator_string(const WeightDistribution& dist, std::int64_t gray_length) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [w, freq] : dist.entries) {
        if (freq == 0) continue;
        if (w < 0 || w > gray_length) {
            throw std::invalid_argument("weight " + std::to_string(w) + " exceeds Gray length " +
                                        std::to_string(gray_length));
        }
        if (!first) out << " + ";
        first = false;
        const std::int64_t x_exp = gray_length - w;
        if (freq != 1 || (x_exp == 0 && w == 0)) out << freq;
        if (x_exp != 0) out << "X^" << x_exp;
        if (w != 0) out << "Y^" << w;
    }
    return out.str();
}

}  // namespace leecode
