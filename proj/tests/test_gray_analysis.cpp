#include <doctest.h>

#include <stdexcept>

#include "leecode/closed_form.hpp"
#include "leecode/gray_analysis.hpp"

using namespace leecode;

namespace {

SupportSet S(std::initializer_list<int> coords, int m) { return SupportSet::from_coordinates(coords, m); }

BitWord W(std::initializer_list<int> bits) { return BitWord::from_bits(bits); }

void check_params(const BinaryCode& code, std::int64_t n, int k, std::int64_t d) {
    CHECK(code.length == n);
    CHECK(code.dimension == k);
    REQUIRE(code.min_distance.has_value());
    CHECK(*code.min_distance == d);
}

}  // namespace

TEST_CASE("Gray image parameters") {
    check_params(gray_image(3, S({1, 2}, 3), S({1, 3}, 3), S({2, 3}, 3)), 128, 8, 32);
    check_params(gray_image(3, S({1}, 3), S({2}, 3), S({3}, 3)), 432, 9, 192);
    check_params(gray_image(3, SupportSet::empty(3), SupportSet::empty(3), SupportSet::empty(3)), 686, 9, 336);
    check_params(gray_image(4, S({1, 2, 3}, 4), S({1, 2, 4}, 4), S({1, 3, 4}, 4)), 1024, 11, 256);
    check_params(gray_image(4, S({1, 2}, 4), S({2, 3}, 4), S({3, 4}, 4)), 3456, 12, 1536);
}

TEST_CASE("materialized Gray images are linear codes") {
    const auto code = gray_image(3, S({1}, 3), S({2, 3}, 3), S({1, 3}, 3));
    REQUIRE(code.materialized);
    CHECK(code.words.size() == code.size());
    CHECK(code.words.front().is_zero());
    CHECK(gf2_rank(code.generators) == code.dimension);
    CHECK(binary_code_from_words(code.words).dimension == code.dimension);
}

TEST_CASE("dimension follows the kernel size") {
    for (const auto& d : proper_supports(3)) {
        for (const auto& e : proper_supports(3)) {
            const auto f = S({1}, 3);
            const auto code = gray_image(3, d, e, f);
            const bool big = d.size() == 2 && e.size() == 2;
            REQUIRE(code.dimension == (big ? 8 : 9));
        }
    }
}

TEST_CASE("memory budget falls back to parameters only") {
    GrayImageOptions options;
    options.budget_bytes = 1024;
    const auto code = gray_image(3, S({1}, 3), S({2}, 3), S({3}, 3), options);
    CHECK_FALSE(code.materialized);
    CHECK(code.warning.has_value());
    check_params(code, 432, 9, 192);
    CHECK_THROWS_AS(is_self_orthogonal_exact(code), std::invalid_argument);
    CHECK_THROWS_AS(is_minimal_exact(code), std::invalid_argument);
}

TEST_CASE("binary_code_from_words validation") {
    CHECK_THROWS_AS(binary_code_from_words({W({0, 0}), W({1, 0}), W({0, 1})}), std::invalid_argument);
    CHECK_THROWS_AS(binary_code_from_words({W({1, 0}), W({0, 1})}), std::invalid_argument);
    CHECK_THROWS_AS(binary_code_from_words({W({0, 0, 0}), W({1, 0, 0}), W({0, 1, 0}), W({0, 0, 1})}),
                    std::invalid_argument);
    const auto code = binary_code_from_words({W({1, 1, 0}), W({0, 0, 0}), W({0, 1, 1}), W({1, 0, 1})});
    CHECK(code.dimension == 2);
    CHECK(*code.min_distance == 2);
}

TEST_CASE("self-orthogonality") {
    CHECK(is_self_orthogonal_exact(gray_image(3, S({1, 2}, 3), S({1, 3}, 3), S({2, 3}, 3))));
    CHECK(is_self_orthogonal_exact(gray_image(3, S({1}, 3), S({2}, 3), S({3}, 3))));
    CHECK(is_self_orthogonal_exact(binary_code_from_words({W({0, 0, 0})})));
    CHECK_FALSE(is_self_orthogonal_exact(binary_code_from_words({W({0, 0}), W({1, 0})})));
    CHECK(is_self_orthogonal_exact(binary_code_from_words({W({0, 0, 0, 0}), W({1, 1, 0, 0}), W({0, 0, 1, 1}),
                                                           W({1, 1, 1, 1})})));
    // Recorded as found: no claim covers empty supports.
    CHECK(is_self_orthogonal_exact(gray_image(3, SupportSet::empty(3), SupportSet::empty(3), SupportSet::empty(3))));
}

TEST_CASE("all_weights_divisible_by_4") {
    CHECK(all_weights_divisible_by_4({DistributionLevel::codeword, {{0, 1}, {32, 2}, {64, 250}, {96, 2}, {128, 1}}}));
    CHECK(all_weights_divisible_by_4(distribution_formula(3, S({1}, 3), S({2}, 3), S({3}, 3)).second));
    CHECK_FALSE(all_weights_divisible_by_4({DistributionLevel::codeword, {{0, 1}, {2, 3}}}));
}

TEST_CASE("weights divisible by 4 imply a self-orthogonal image at m=3") {
    const int m = 3;
    int checked = 0;
    for (const auto& d : proper_supports(m)) {
        for (const auto& e : proper_supports(m)) {
            for (const auto& f : proper_supports(m)) {
                if (d.size() == 0 || e.size() == 0 || f.size() == 0) continue;
                if (!all_weights_divisible_by_4(distribution_formula(m, d, e, f).second)) continue;
                ++checked;
                REQUIRE(is_self_orthogonal_exact(gray_image(m, d, e, f)));
            }
        }
    }
    CHECK(checked > 0);
}

TEST_CASE("ashikhmin_barg_check") {
    const auto ab = ashikhmin_barg_check({DistributionLevel::codeword, {{0, 1}, {192, 11}, {288, 6}}});
    CHECK(ab.w0 == 192);
    CHECK(ab.w_inf == 288);
    CHECK(ab.minimal);
    CHECK_FALSE(ashikhmin_barg_check({DistributionLevel::codeword, {{0, 1}, {32, 2}, {64, 250}, {128, 1}}}).minimal);
    CHECK(ashikhmin_barg_check({DistributionLevel::codeword, {{0, 1}, {8, 3}}}).minimal);
    // 2 w0 == w_inf is not strictly above one half.
    CHECK_FALSE(ashikhmin_barg_check({DistributionLevel::codeword, {{0, 1}, {4, 1}, {8, 1}}}).minimal);
    CHECK_THROWS_AS(ashikhmin_barg_check({DistributionLevel::codeword, {{0, 1}}}), std::invalid_argument);
}

TEST_CASE("exact minimality") {
    CHECK(is_minimal_exact(gray_image(3, S({1}, 3), S({2}, 3), S({3}, 3))));
    // supp(1000) lies inside supp(1100).
    CHECK_FALSE(is_minimal_exact(
        binary_code_from_words({W({0, 0, 0, 0}), W({1, 1, 0, 0}), W({1, 0, 0, 0}), W({0, 1, 0, 0})})));
    CHECK(is_minimal_exact(binary_code_from_words({W({0, 0, 0}), W({1, 1, 0}), W({0, 1, 1}), W({1, 0, 1})})));
    // Recorded as found for n = m - 1.
    CHECK_FALSE(is_minimal_exact(gray_image(3, S({1, 2}, 3), S({1, 3}, 3), S({2, 3}, 3))));
}

TEST_CASE("ratio test implies exact minimality at m=3") {
    const int m = 3;
    for (const auto& d : proper_supports(m)) {
        for (const auto& e : proper_supports(m)) {
            for (const auto& f : proper_supports(m)) {
                const auto ab = ashikhmin_barg_check(distribution_formula(m, d, e, f).second);
                if (ab.minimal) REQUIRE(is_minimal_exact(gray_image(m, d, e, f)));
            }
        }
    }
}

TEST_CASE("minimality_predicate") {
    CHECK(minimality_predicate(3, 1));
    CHECK_FALSE(minimality_predicate(3, 2));
    CHECK(minimality_predicate(4, 2));
    CHECK(minimality_predicate(3, 0));
    CHECK_THROWS_AS(minimality_predicate(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(minimality_predicate(3, -1), std::invalid_argument);
}

TEST_CASE("equal supports below m-1 pass the ratio test with ratio (2^m - 2^(n+1)) / (2^m - 2^n)") {
    for (int m : {3, 4, 5}) {
        const auto supports = proper_supports(m);
        for (int n = 0; n <= m - 2; ++n) {
            for (const auto& d : supports) {
                if (d.size() != n) continue;
                for (const auto& e : supports) {
                    if (e.size() != n) continue;
                    for (const auto& f : supports) {
                        if (f.size() != n) continue;
                        CAPTURE(m);
                        CAPTURE(n);
                        const auto ab = ashikhmin_barg_check(distribution_formula(m, d, e, f).second);
                        REQUIRE(minimality_predicate(m, n));
                        REQUIRE(ab.minimal);
                        const std::int64_t num = (std::int64_t{1} << m) - (std::int64_t{2} << n);
                        const std::int64_t den = (std::int64_t{1} << m) - (std::int64_t{1} << n);
                        REQUIRE(ab.w0 * den == ab.w_inf * num);
                    }
                }
            }
        }
    }
}
