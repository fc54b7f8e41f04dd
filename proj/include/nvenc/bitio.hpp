#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "nvenc/errors.hpp"

namespace nvenc {

__extension__ typedef unsigned __int128 uint128_t;

// A read ran past the end of a bit sequence.
class truncation_error : public corruption_error {
public:
    using corruption_error::corruption_error;
};

// Append-only bit sequence, MSB-first within each byte. Unused bits of the
// last byte are always zero, so equal streams have equal byte images.
class BitStream {
public:
    BitStream() = default;

    // Parses a string of '0'/'1' characters.
    static BitStream from_string(std::string_view bits);
    // Adopts the first `bit_count` bits of `bytes`; trailing bits must be zero.
    static BitStream from_bytes(std::span<const std::uint8_t> bytes, std::size_t bit_count);

    std::size_t size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }
    bool operator[](std::size_t pos) const noexcept { return (bytes_[pos >> 3] >> (7 - (pos & 7))) & 1u; }

    void push_back(bool bit);
    // Appends the low `width` bits of `value`, most significant first.
    void append(std::uint64_t value, unsigned width);
    void append(uint128_t value, unsigned width);
    void append(const BitStream& other);

    // Zero-padded byte image.
    const std::vector<std::uint8_t>& bytes() const noexcept { return bytes_; }
    std::string to_string() const;

    friend bool operator==(const BitStream&, const BitStream&) = default;

private:
    std::vector<std::uint8_t> bytes_;
    std::size_t size_ = 0;
};

// Cursor over a BitStream (or a window of one).
class BitReader {
public:
    explicit BitReader(const BitStream& stream) : BitReader(stream, 0, stream.size()) {}
    BitReader(const BitStream& stream, std::size_t begin, std::size_t end);

    bool read_bit();
    std::uint64_t read_bits(unsigned width);
    uint128_t read_bits128(unsigned width);

    std::size_t position() const noexcept { return pos_ - begin_; }
    std::size_t remaining() const noexcept { return end_ - pos_; }
    bool at_end() const noexcept { return pos_ == end_; }

private:
    const BitStream* stream_;
    std::size_t begin_;
    std::size_t pos_;
    std::size_t end_;
};

// Unary degree code: d-1 ones followed by a zero.
void write_degree(BitStream& out, std::size_t degree);
std::size_t read_degree(BitReader& in);

// Sequence over {0, 1, 2}.
class TritString {
public:
    TritString() = default;
    static TritString from_string(std::string_view trits);

    void push_back(std::uint8_t trit);
    std::size_t size() const noexcept { return trits_.size(); }
    bool empty() const noexcept { return trits_.empty(); }
    std::uint8_t operator[](std::size_t i) const noexcept { return trits_[i]; }
    std::string to_string() const;

    friend bool operator==(const TritString&, const TritString&) = default;

private:
    std::vector<std::uint8_t> trits_;
};

// Trits are packed in blocks of 41, each block evaluated in base 3 (first
// trit most significant) and stored in 65 bits. A final block of t < 41
// trits takes bit_width(3^t - 1) bits.
inline constexpr std::size_t kTritBlockLength = 41;
inline constexpr unsigned kTritBlockBits = 65;

std::size_t packed_trit_bits(std::size_t trit_count);
BitStream pack_trits(const TritString& trits);
void pack_trits(const TritString& trits, BitStream& out);
TritString unpack_trits(BitReader& in, std::size_t trit_count);

// Combinatorial number system: the subset {p_1 < ... < p_k} of {0..L-1}
// has rank sum_j C(p_j, j), a bijection onto [0, C(L, k)).
struct SubsetRank {
    std::size_t k = 0;
    mpz_class rank;
};

mpz_class binomial(std::size_t n, std::size_t k);

SubsetRank subset_rank(std::span<const std::size_t> positions, std::size_t length);
SubsetRank subset_rank(const std::vector<bool>& membership);
std::vector<std::size_t> subset_unrank(std::size_t k, const mpz_class& rank, std::size_t length);

// Bits needed for a rank among C(L, k) subsets: ceil(log2 C(L, k)).
std::size_t subset_rank_bits(std::size_t length, std::size_t k);

// Fixed-width big-endian big-integer field.
void write_big(BitStream& out, const mpz_class& value, std::size_t width);
mpz_class read_big(BitReader& in, std::size_t width);

} // namespace nvenc
