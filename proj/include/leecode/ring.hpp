#pragma once

// Arithmetic over Z2, Z2[u] (u^2 = 0), Z2^m and the mixed alphabet R^m = Z2^m x (Z2^m + uZ2^m),
// plus the Gray map and Lee / Hamming weights.
//
// Coordinate j in [m] is bit j-1 of a mask throughout the library.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace leecode {

inline constexpr int kMinDimension = 2;
inline constexpr int kMaxDimension = 20;

/// A vector of Z2^m stored as a bitmask. Also used for supports of subsets of [m].
struct BitVec {
    std::uint32_t bits = 0;
    int m = 0;

    /// Validates 2 <= m <= kMaxDimension and that no bit at position >= m is set.
    static BitVec make(std::uint32_t bits, int m);
    static BitVec zero(int m) { return make(0, m); }
    static BitVec all_ones(int m) { return make(full_mask(m), m); }
    /// 1-based coordinates, e.g. {1, 3} -> 101b.
    static BitVec from_coordinates(const std::vector<int>& coords, int m);

    static constexpr std::uint32_t full_mask(int m) {
        return m >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << m) - 1u;
    }

    int weight() const { return std::popcount(bits); }
    bool is_zero() const { return bits == 0; }
    std::vector<int> coordinates() const;

    friend bool operator==(const BitVec&, const BitVec&) = default;
};

BitVec operator^(const BitVec& x, const BitVec& y);
BitVec operator&(const BitVec& x, const BitVec& y);

/// <x, y> over Z2. Throws std::invalid_argument on dimension mismatch.
int parity_dot(const BitVec& x, const BitVec& y);

/// y + uz in Z2[u].
struct Z2uElement {
    std::uint8_t y = 0;
    std::uint8_t z = 0;

    static Z2uElement zero() { return {0, 0}; }
    static Z2uElement one() { return {1, 0}; }
    static Z2uElement u() { return {0, 1}; }
    static Z2uElement one_plus_u() { return {1, 1}; }
    /// All four ring elements in the order 0, 1, u, 1+u.
    static std::vector<Z2uElement> all();

    friend bool operator==(const Z2uElement&, const Z2uElement&) = default;
};

Z2uElement operator+(Z2uElement a, Z2uElement b);
Z2uElement operator*(Z2uElement a, Z2uElement b);

struct GrayPair {
    std::uint8_t first = 0;
    std::uint8_t second = 0;
    friend bool operator==(const GrayPair&, const GrayPair&) = default;
};

/// y + uz -> (z, y + z).
GrayPair gray_map_elem(Z2uElement e);

/// a = (p, q + ur) in R^m.
struct MixedWord {
    BitVec p;
    BitVec q;
    BitVec r;

    static MixedWord make(BitVec p, BitVec q, BitVec r);
    static MixedWord zero(int m);
    /// Packs (p, q, r) into one index p | q << m | r << 2m; the inverse of index().
    static MixedWord from_index(std::uint64_t index, int m);

    int dimension() const { return p.m; }
    std::uint64_t index() const;
    bool is_zero() const { return p.is_zero() && q.is_zero() && r.is_zero(); }

    friend bool operator==(const MixedWord&, const MixedWord&) = default;
};

MixedWord operator+(const MixedWord& a, const MixedWord& b);
/// Module action (y + uz)(p, q + ur) = (yp, yq + u(yr + zq)).
MixedWord operator*(Z2uElement alpha, const MixedWord& a);

/// (a . (t1, t2 + u t3)) = <q,t2> + u(<p,t1> + <q,t3> + <r,t2>).
Z2uElement inner_product_mixed(const MixedWord& a, const BitVec& t1, const BitVec& t2,
                               const BitVec& t3);

/// Fixed-length binary word packed into 64-bit limbs; bits past size() are always zero.
class BitWord {
public:
    BitWord() = default;
    explicit BitWord(std::size_t size) : size_(size), limbs_((size + 63) / 64, 0) {}
    static BitWord from_bits(const std::vector<int>& bits);

    std::size_t size() const { return size_; }
    const std::vector<std::uint64_t>& limbs() const { return limbs_; }

    bool get(std::size_t i) const { return (limbs_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool value);
    void flip_all();

    std::size_t weight() const;
    bool is_zero() const;
    /// True iff every set bit of *this is also set in other.
    bool is_subset_of(const BitWord& other) const;

    /// Copies the low `count` bits of `src` (which must hold at least count bits) to position `offset`.
    void write_bits(std::size_t offset, const BitWord& src, std::size_t count);
    /// Fills [offset, offset + count) with `value`.
    void fill(std::size_t offset, std::size_t count, bool value);

    BitWord& operator^=(const BitWord& other);
    BitWord& operator&=(const BitWord& other);
    friend BitWord operator^(BitWord a, const BitWord& b) { return a ^= b; }
    friend BitWord operator&(BitWord a, const BitWord& b) { return a &= b; }

    /// Concatenation (*this, tail).
    BitWord concat(const BitWord& tail) const;

    std::string to_string() const;

    friend bool operator==(const BitWord&, const BitWord&) = default;
    friend auto operator<=>(const BitWord& a, const BitWord& b) {
        if (auto c = a.size_ <=> b.size_; c != 0) return c;
        return a.limbs_ <=> b.limbs_;
    }

private:
    void check_same_size(const BitWord& other) const;

    std::size_t size_ = 0;
    std::vector<std::uint64_t> limbs_;
};

/// Parity of popcount(a AND b).
int parity_dot(const BitWord& a, const BitWord& b);
std::size_t hamming_distance(const BitWord& a, const BitWord& b);

/// A word of Z2[u]^n stored as (Q, R): entry i is Q_i + u R_i.
struct CodewordZ2u {
    BitWord q;
    BitWord r;

    CodewordZ2u() = default;
    explicit CodewordZ2u(std::size_t n) : q(n), r(n) {}
    CodewordZ2u(BitWord q_part, BitWord r_part);

    std::size_t size() const { return q.size(); }
    Z2uElement at(std::size_t i) const { return {std::uint8_t(q.get(i)), std::uint8_t(r.get(i))}; }
    void set(std::size_t i, Z2uElement e);
    bool is_zero() const { return q.is_zero() && r.is_zero(); }

    /// Componentwise sum; subtraction is the same operation in characteristic 2.
    CodewordZ2u& operator+=(const CodewordZ2u& other);
    friend CodewordZ2u operator+(CodewordZ2u a, const CodewordZ2u& b) { return a += b; }
    friend CodewordZ2u operator-(CodewordZ2u a, const CodewordZ2u& b) { return a += b; }

    friend bool operator==(const CodewordZ2u&, const CodewordZ2u&) = default;
};

/// Scalar multiple alpha * w, entrywise in Z2[u].
CodewordZ2u operator*(Z2uElement alpha, const CodewordZ2u& w);

/// Phi(Q + uR) = (R, Q + R), length 2n.
BitWord gray_map_word(const CodewordZ2u& w);

/// wt_H(R) + wt_H(Q + R).
std::size_t lee_weight(const CodewordZ2u& w);

}  // namespace leecode

template <>
struct std::hash<leecode::BitWord> {
    std::size_t operator()(const leecode::BitWord& w) const noexcept {
        std::size_t h = w.size();
        for (auto limb : w.limbs()) h = (h ^ limb) * 0x100000001b3ull + (h >> 29);
        return h;
    }
};
