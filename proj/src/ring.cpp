#include "leecode/ring.hpp"

#include <algorithm>
#include <stdexcept>

namespace leecode {

namespace {

void require_same_dimension(const BitVec& x, const BitVec& y) {
    if (x.m != y.m) {
        throw std::invalid_argument("dimension mismatch: " + std::to_string(x.m) + " vs " +
                                    std::to_string(y.m));
    }
}

}  // namespace

BitVec BitVec::make(std::uint32_t bits, int m) {
    if (m < kMinDimension || m > kMaxDimension) {
        throw std::invalid_argument("dimension m must lie in [" + std::to_string(kMinDimension) +
                                    ", " + std::to_string(kMaxDimension) + "], got " +
                                    std::to_string(m));
    }
    if ((bits & ~full_mask(m)) != 0) {
        throw std::invalid_argument("bit set outside the first " + std::to_string(m) + " positions");
    }
    return BitVec{bits, m};
}

BitVec BitVec::from_coordinates(const std::vector<int>& coords, int m) {
    std::uint32_t bits = 0;
    for (int c : coords) {
        if (c < 1 || c > m) {
            throw std::invalid_argument("coordinate " + std::to_string(c) + " outside [1, " +
                                        std::to_string(m) + "]");
        }
        bits |= std::uint32_t{1} << (c - 1);
    }
    return make(bits, m);
}

std::vector<int> BitVec::coordinates() const {
    std::vector<int> out;
    for (int j = 0; j < m; ++j) {
        if ((bits >> j) & 1u) out.push_back(j + 1);
    }
    return out;
}

BitVec operator^(const BitVec& x, const BitVec& y) {
    require_same_dimension(x, y);
    return BitVec{x.bits ^ y.bits, x.m};
}

BitVec operator&(const BitVec& x, const BitVec& y) {
    require_same_dimension(x, y);
    return BitVec{x.bits & y.bits, x.m};
}

int parity_dot(const BitVec& x, const BitVec& y) {
    require_same_dimension(x, y);
    return std::popcount(x.bits & y.bits) & 1;
}

std::vector<Z2uElement> Z2uElement::all() { return {zero(), one(), u(), one_plus_u()}; }

Z2uElement operator+(Z2uElement a, Z2uElement b) {
    return {std::uint8_t(a.y ^ b.y), std::uint8_t(a.z ^ b.z)};
}

// (y1 + u z1)(y2 + u z2) = y1 y2 + u(y1 z2 + z1 y2)
Z2uElement operator*(Z2uElement a, Z2uElement b) {
    return {std::uint8_t(a.y & b.y), std::uint8_t((a.y & b.z) ^ (a.z & b.y))};
}

GrayPair gray_map_elem(Z2uElement e) { return {e.z, std::uint8_t(e.y ^ e.z)}; }

MixedWord MixedWord::make(BitVec p, BitVec q, BitVec r) {
    require_same_dimension(p, q);
    require_same_dimension(p, r);
    return MixedWord{p, q, r};
}

MixedWord MixedWord::zero(int m) { return make(BitVec::zero(m), BitVec::zero(m), BitVec::zero(m)); }

MixedWord MixedWord::from_index(std::uint64_t index, int m) {
    const auto mask = BitVec::full_mask(m);
    if (m > kMaxDimension || (3 * m < 64 && (index >> (3 * m)) != 0)) {
        throw std::invalid_argument("message index out of range");
    }
    return make(BitVec::make(std::uint32_t(index & mask), m),
                BitVec::make(std::uint32_t((index >> m) & mask), m),
                BitVec::make(std::uint32_t((index >> (2 * m)) & mask), m));
}

std::uint64_t MixedWord::index() const {
    const int m = dimension();
    return std::uint64_t{p.bits} | (std::uint64_t{q.bits} << m) | (std::uint64_t{r.bits} << (2 * m));
}

MixedWord operator+(const MixedWord& a, const MixedWord& b) {
    return MixedWord::make(a.p ^ b.p, a.q ^ b.q, a.r ^ b.r);
}

MixedWord operator*(Z2uElement alpha, const MixedWord& a) {
    const int m = a.dimension();
    const std::uint32_t ymask = alpha.y ? BitVec::full_mask(m) : 0u;
    const std::uint32_t zmask = alpha.z ? BitVec::full_mask(m) : 0u;
    return MixedWord{BitVec{a.p.bits & ymask, m}, BitVec{a.q.bits & ymask, m},
                     BitVec{(a.r.bits & ymask) ^ (a.q.bits & zmask), m}};
}

Z2uElement inner_product_mixed(const MixedWord& a, const BitVec& t1, const BitVec& t2,
                               const BitVec& t3) {
    const int y = parity_dot(a.q, t2);
    const int z = parity_dot(a.p, t1) ^ parity_dot(a.q, t3) ^ parity_dot(a.r, t2);
    return {std::uint8_t(y), std::uint8_t(z)};
}

// ---------------------------------------------------------------------------------------------
// BitWord

BitWord BitWord::from_bits(const std::vector<int>& bits) {
    BitWord w(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) w.set(i, bits[i] != 0);
    return w;
}

void BitWord::set(std::size_t i, bool value) {
    const std::uint64_t bit = std::uint64_t{1} << (i & 63);
    if (value) {
        limbs_[i >> 6] |= bit;
    } else {
        limbs_[i >> 6] &= ~bit;
    }
}

void BitWord::flip_all() {
    for (auto& limb : limbs_) limb = ~limb;
    if (size_ % 64 != 0) limbs_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
}

std::size_t BitWord::weight() const {
    std::size_t w = 0;
    for (auto limb : limbs_) w += std::popcount(limb);
    return w;
}

bool BitWord::is_zero() const {
    return std::all_of(limbs_.begin(), limbs_.end(), [](std::uint64_t l) { return l == 0; });
}

bool BitWord::is_subset_of(const BitWord& other) const {
    check_same_size(other);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        if ((limbs_[i] & ~other.limbs_[i]) != 0) return false;
    }
    return true;
}

void BitWord::write_bits(std::size_t offset, const BitWord& src, std::size_t count) {
    if (offset + count > size_ || count > src.size_) {
        throw std::out_of_range("BitWord::write_bits range");
    }
    std::size_t done = 0;
    while (done < count) {
        const std::size_t dst = offset + done;
        const std::size_t dst_shift = dst & 63;
        const std::size_t src_shift = done & 63;
        // Take as many bits as fit in both the current source limb and destination limb.
        const std::size_t chunk = std::min({count - done, 64 - dst_shift, 64 - src_shift});
        const std::uint64_t mask = chunk == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << chunk) - 1;
        const std::uint64_t bits = (src.limbs_[done >> 6] >> src_shift) & mask;
        auto& limb = limbs_[dst >> 6];
        limb = (limb & ~(mask << dst_shift)) | (bits << dst_shift);
        done += chunk;
    }
}

void BitWord::fill(std::size_t offset, std::size_t count, bool value) {
    if (offset + count > size_) throw std::out_of_range("BitWord::fill range");
    std::size_t done = 0;
    while (done < count) {
        const std::size_t dst = offset + done;
        const std::size_t shift = dst & 63;
        const std::size_t chunk = std::min(count - done, 64 - shift);
        const std::uint64_t mask = chunk == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << chunk) - 1;
        auto& limb = limbs_[dst >> 6];
        limb = value ? (limb | (mask << shift)) : (limb & ~(mask << shift));
        done += chunk;
    }
}

BitWord& BitWord::operator^=(const BitWord& other) {
    check_same_size(other);
    for (std::size_t i = 0; i < limbs_.size(); ++i) limbs_[i] ^= other.limbs_[i];
    return *this;
}

BitWord& BitWord::operator&=(const BitWord& other) {
    check_same_size(other);
    for (std::size_t i = 0; i < limbs_.size(); ++i) limbs_[i] &= other.limbs_[i];
    return *this;
}

BitWord BitWord::concat(const BitWord& tail) const {
    BitWord out(size_ + tail.size_);
    out.write_bits(0, *this, size_);
    out.write_bits(size_, tail, tail.size_);
    return out;
}

std::string BitWord::to_string() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i) {
        if (get(i)) s[i] = '1';
    }
    return s;
}

void BitWord::check_same_size(const BitWord& other) const {
    if (size_ != other.size_) {
        throw std::invalid_argument("word length mismatch: " + std::to_string(size_) + " vs " +
                                    std::to_string(other.size_));
    }
}

int parity_dot(const BitWord& a, const BitWord& b) {
    if (a.size() != b.size()) throw std::invalid_argument("word length mismatch");
    unsigned acc = 0;
    for (std::size_t i = 0; i < a.limbs().size(); ++i) {
        acc ^= std::popcount(a.limbs()[i] & b.limbs()[i]) & 1;
    }
    return int(acc);
}

std::size_t hamming_distance(const BitWord& a, const BitWord& b) { return (a ^ b).weight(); }

// ---------------------------------------------------------------------------------------------
// CodewordZ2u

CodewordZ2u::CodewordZ2u(BitWord q_part, BitWord r_part) : q(std::move(q_part)), r(std::move(r_part)) {
    if (q.size() != r.size()) throw std::invalid_argument("Q and R must have equal length");
}

void CodewordZ2u::set(std::size_t i, Z2uElement e) {
    q.set(i, e.y != 0);
    r.set(i, e.z != 0);
}

CodewordZ2u& CodewordZ2u::operator+=(const CodewordZ2u& other) {
    q ^= other.q;
    r ^= other.r;
    return *this;
}

CodewordZ2u operator*(Z2uElement alpha, const CodewordZ2u& w) {
    // y-part: alpha.y * Q; u-part: alpha.y * R + alpha.z * Q
    CodewordZ2u out(w.size());
    if (alpha.y) {
        out.q = w.q;
        out.r = w.r;
    }
    if (alpha.z) out.r ^= w.q;
    return out;
}

BitWord gray_map_word(const CodewordZ2u& w) { return w.r.concat(w.q ^ w.r); }

std::size_t lee_weight(const CodewordZ2u& w) { return w.r.weight() + (w.q ^ w.r).weight(); }

}  // namespace leecode
