#include <doctest.h>

#include <random>
#include <stdexcept>

#include "leecode/ring.hpp"
#include "oracles.hpp"

using namespace leecode;

namespace {

BitWord random_word(std::size_t n, std::mt19937_64& rng) {
    BitWord w(n);
    for (std::size_t i = 0; i < n; ++i) w.set(i, rng() & 1u);
    return w;
}

CodewordZ2u random_codeword(std::size_t n, std::mt19937_64& rng) {
    return CodewordZ2u(random_word(n, rng), random_word(n, rng));
}

MixedWord random_message(int m, std::mt19937_64& rng) {
    return MixedWord::from_index(rng() & ((std::uint64_t{1} << (3 * m)) - 1), m);
}

}  // namespace

TEST_CASE("BitVec validates dimension and stray bits") {
    CHECK_THROWS_AS(BitVec::make(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(BitVec::make(0b1000, 3), std::invalid_argument);
    CHECK(BitVec::from_coordinates({1, 3}, 4).bits == 0b0101u);
    CHECK_THROWS_AS(BitVec::from_coordinates({4}, 3), std::invalid_argument);
    CHECK(BitVec::make(0b101, 3).coordinates() == std::vector<int>{1, 3});
}

TEST_CASE("parity_dot") {
    CHECK(parity_dot(BitVec::make(0b101, 3), BitVec::make(0b100, 3)) == 1);
    CHECK(parity_dot(BitVec::make(0b110, 3), BitVec::make(0b000, 3)) == 0);
    CHECK(parity_dot(BitVec::make(0b110, 3), BitVec::make(0b011, 3)) == 1);
    CHECK_THROWS_AS(parity_dot(BitVec::make(1, 3), BitVec::make(1, 4)), std::invalid_argument);
}

TEST_CASE("parity_dot is symmetric and bilinear") {
    const int m = 5;
    for (std::uint32_t x = 0; x < 32; ++x) {
        for (std::uint32_t y = 0; y < 32; ++y) {
            const auto bx = BitVec::make(x, m);
            const auto by = BitVec::make(y, m);
            REQUIRE(parity_dot(bx, by) == parity_dot(by, bx));
            for (std::uint32_t z = 0; z < 32; z += 7) {
                const auto bz = BitVec::make(z, m);
                REQUIRE(parity_dot(bx ^ bz, by) == (parity_dot(bx, by) ^ parity_dot(bz, by)));
            }
        }
    }
}

TEST_CASE("Z2[u] ring laws") {
    const auto u = Z2uElement::u();
    CHECK(u * u == Z2uElement::zero());
    CHECK(Z2uElement::one_plus_u() * Z2uElement::one_plus_u() == Z2uElement::one());
    for (auto a : Z2uElement::all()) {
        CHECK(a + a == Z2uElement::zero());
        CHECK(a * Z2uElement::one() == a);
        for (auto b : Z2uElement::all()) {
            CHECK(a * b == b * a);
            for (auto c : Z2uElement::all()) CHECK(a * (b + c) == a * b + a * c);
        }
    }
}

TEST_CASE("gray_map_elem") {
    CHECK(gray_map_elem(Z2uElement::zero()) == GrayPair{0, 0});
    CHECK(gray_map_elem(Z2uElement::one_plus_u()) == GrayPair{1, 0});
    CHECK(gray_map_elem(Z2uElement::u()) == GrayPair{1, 1});
    CHECK(gray_map_elem(Z2uElement::one()) == GrayPair{0, 1});
}

TEST_CASE("gray_map_word and lee_weight") {
    CHECK(gray_map_word(CodewordZ2u(3)) == BitWord(6));

    const CodewordZ2u w(BitWord::from_bits({1, 0}), BitWord::from_bits({0, 1}));
    CHECK(gray_map_word(w) == BitWord::from_bits({0, 1, 1, 1}));

    CodewordZ2u single_u(1);
    single_u.set(0, Z2uElement::u());
    CHECK(lee_weight(single_u) == 2);
    CodewordZ2u single_one(1);
    single_one.set(0, Z2uElement::one());
    CHECK(lee_weight(single_one) == 1);

    const CodewordZ2u x(BitWord::from_bits({1, 1, 0}), BitWord::from_bits({0, 1, 1}));
    CHECK(lee_weight(x) == 4);
    CHECK(gray_map_word(x).weight() == 4);
}

TEST_CASE("lee_weight agrees with the symbol table oracle") {
    std::mt19937_64 rng(7);
    for (std::size_t n : {1u, 5u, 64u, 65u, 200u}) {
        for (int trial = 0; trial < 50; ++trial) {
            const auto w = random_codeword(n, rng);
            std::int64_t expected = 0;
            for (std::size_t i = 0; i < n; ++i) expected += oracle::lee_symbol({w.q.get(i), w.r.get(i)});
            REQUIRE(std::int64_t(lee_weight(w)) == expected);
        }
    }
}

TEST_CASE("Gray map is an isometry and additive") {
    std::mt19937_64 rng(0x6c65);
    for (std::size_t n : {1u, 7u, 63u, 64u, 130u, 432u}) {
        for (int trial = 0; trial < 10000; ++trial) {
            const auto a = random_codeword(n, rng);
            const auto b = random_codeword(n, rng);
            REQUIRE(lee_weight(a - b) == hamming_distance(gray_map_word(a), gray_map_word(b)));
            REQUIRE(gray_map_word(a + b) == (gray_map_word(a) ^ gray_map_word(b)));
        }
    }
}

TEST_CASE("inner_product_mixed") {
    const int m = 3;
    const auto zero = MixedWord::zero(m);
    for (std::uint32_t t = 0; t < 8; ++t) {
        const auto v = BitVec::make(t, m);
        CHECK(inner_product_mixed(zero, v, v, v) == Z2uElement::zero());
    }
    const auto one = BitVec::make(0b001, m);
    CHECK(inner_product_mixed(MixedWord::make(one, one, BitVec::zero(m)), one, one, one) == Z2uElement::one());
    const auto a = MixedWord::make(BitVec::make(0b100, m), BitVec::zero(m), BitVec::make(0b010, m));
    CHECK(inner_product_mixed(a, BitVec::make(0b001, m), BitVec::make(0b010, m), BitVec::make(0b111, m)) ==
          Z2uElement::u());
    CHECK_THROWS_AS(inner_product_mixed(a, BitVec::make(1, 4), one, one), std::invalid_argument);
}

TEST_CASE("inner_product_mixed is Z2[u]-linear in the message") {
    std::mt19937_64 rng(11);
    for (int m : {2, 3, 4}) {
        for (int trial = 0; trial < 2000; ++trial) {
            const auto a = random_message(m, rng);
            const auto b = random_message(m, rng);
            const auto t1 = BitVec::make(std::uint32_t(rng()) & BitVec::full_mask(m), m);
            const auto t2 = BitVec::make(std::uint32_t(rng()) & BitVec::full_mask(m), m);
            const auto t3 = BitVec::make(std::uint32_t(rng()) & BitVec::full_mask(m), m);
            REQUIRE(inner_product_mixed(a + b, t1, t2, t3) ==
                    inner_product_mixed(a, t1, t2, t3) + inner_product_mixed(b, t1, t2, t3));
            for (auto alpha : Z2uElement::all()) {
                REQUIRE(inner_product_mixed(alpha * a, t1, t2, t3) == alpha * inner_product_mixed(a, t1, t2, t3));
            }
        }
    }
}

TEST_CASE("MixedWord index round trip") {
    for (std::uint64_t idx = 0; idx < 512; ++idx) REQUIRE(MixedWord::from_index(idx, 3).index() == idx);
    CHECK_THROWS_AS(MixedWord::from_index(512, 3), std::invalid_argument);
}

TEST_CASE("BitWord bit copies across limb boundaries") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = 1 + rng() % 300;
        const std::size_t count = rng() % (n + 1);
        const std::size_t offset = count == n ? 0 : rng() % (n - count + 1);
        auto dst = random_word(n, rng);
        const auto src = random_word(count + rng() % 70, rng);
        auto expected = dst;
        for (std::size_t i = 0; i < count; ++i) expected.set(offset + i, src.get(i));
        dst.write_bits(offset, src, count);
        REQUIRE(dst == expected);

        auto filled = expected;
        const bool value = rng() & 1u;
        for (std::size_t i = 0; i < count; ++i) expected.set(offset + i, value);
        filled.fill(offset, count, value);
        REQUIRE(filled == expected);
    }
    BitWord w(70);
    w.flip_all();
    CHECK(w.weight() == 70);
    CHECK_THROWS_AS(w.write_bits(60, BitWord(20), 20), std::out_of_range);
    CHECK_THROWS_AS(w ^= BitWord(71), std::invalid_argument);
}

TEST_CASE("scalar multiples of codewords") {
    const CodewordZ2u w(BitWord::from_bits({1, 0, 1, 1}), BitWord::from_bits({0, 1, 1, 0}));
    for (auto alpha : Z2uElement::all()) {
        const auto scaled = alpha * w;
        for (std::size_t i = 0; i < w.size(); ++i) REQUIRE(scaled.at(i) == alpha * w.at(i));
    }
}
