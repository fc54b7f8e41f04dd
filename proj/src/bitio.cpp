#include "nvenc/bitio.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace nvenc {

BitStream BitStream::from_string(std::string_view bits) {
    BitStream s;
    for (char c : bits) {
        if (c != '0' && c != '1') throw argument_error(std::string("invalid bit character '") + c + "'");
        s.push_back(c == '1');
    }
    return s;
}

BitStream BitStream::from_bytes(std::span<const std::uint8_t> bytes, std::size_t bit_count) {
    if (bytes.size() * 8 < bit_count) throw truncation_error("byte buffer shorter than declared bit count");
    BitStream s;
    s.bytes_.assign(bytes.begin(), bytes.begin() + static_cast<std::ptrdiff_t>((bit_count + 7) / 8));
    s.size_ = bit_count;
    if (bit_count % 8 != 0) {
        const std::uint8_t pad_mask = static_cast<std::uint8_t>(0xFFu >> (bit_count % 8));
        if (s.bytes_.back() & pad_mask) throw corruption_error("nonzero padding bits");
    }
    return s;
}

void BitStream::push_back(bool bit) {
    if ((size_ & 7) == 0) bytes_.push_back(0);
    if (bit) bytes_.back() |= static_cast<std::uint8_t>(0x80u >> (size_ & 7));
    ++size_;
}

void BitStream::append(std::uint64_t value, unsigned width) {
    for (unsigned b = width; b-- > 0;) push_back(b < 64 && ((value >> b) & 1u));
}

void BitStream::append(uint128_t value, unsigned width) {
    for (unsigned b = width; b-- > 0;) push_back(b < 128 && ((value >> b) & 1u));
}

void BitStream::append(const BitStream& other) {
    if ((size_ & 7) == 0) {
        bytes_.insert(bytes_.end(), other.bytes_.begin(), other.bytes_.end());
        size_ += other.size_;
        return;
    }
    for (std::size_t i = 0; i < other.size_; ++i) push_back(other[i]);
}

std::string BitStream::to_string() const {
    std::string out;
    out.reserve(size_);
    for (std::size_t i = 0; i < size_; ++i) out += (*this)[i] ? '1' : '0';
    return out;
}

BitReader::BitReader(const BitStream& stream, std::size_t begin, std::size_t end)
    : stream_(&stream), begin_(begin), pos_(begin), end_(end) {
    if (begin > end || end > stream.size()) throw argument_error("bit window outside stream");
}

bool BitReader::read_bit() {
    if (pos_ >= end_) throw truncation_error("read past end of bit segment");
    return (*stream_)[pos_++];
}

std::uint64_t BitReader::read_bits(unsigned width) {
    if (width > 64) throw argument_error("read_bits width above 64");
    if (remaining() < width) throw truncation_error("read past end of bit segment");
    std::uint64_t v = 0;
    for (unsigned b = 0; b < width; ++b) v = (v << 1) | ((*stream_)[pos_++] ? 1u : 0u);
    return v;
}

uint128_t BitReader::read_bits128(unsigned width) {
    if (width > 128) throw argument_error("read_bits128 width above 128");
    if (remaining() < width) throw truncation_error("read past end of bit segment");
    uint128_t v = 0;
    for (unsigned b = 0; b < width; ++b) v = (v << 1) | ((*stream_)[pos_++] ? 1u : 0u);
    return v;
}

void write_degree(BitStream& out, std::size_t degree) {
    if (degree == 0) throw argument_error("degree codes need a positive degree");
    for (std::size_t i = 1; i < degree; ++i) out.push_back(true);
    out.push_back(false);
}

std::size_t read_degree(BitReader& in) {
    std::size_t degree = 1;
    while (in.read_bit()) ++degree;
    return degree;
}

TritString TritString::from_string(std::string_view trits) {
    TritString t;
    for (char c : trits) {
        if (c < '0' || c > '2') throw argument_error(std::string("invalid trit character '") + c + "'");
        t.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return t;
}

void TritString::push_back(std::uint8_t trit) {
    if (trit > 2) throw argument_error("trit value " + std::to_string(trit) + " outside {0,1,2}");
    trits_.push_back(trit);
}

std::string TritString::to_string() const {
    std::string out;
    out.reserve(trits_.size());
    for (auto t : trits_) out += static_cast<char>('0' + t);
    return out;
}

namespace {

uint128_t pow3(std::size_t e) {
    uint128_t v = 1;
    for (std::size_t i = 0; i < e; ++i) v *= 3;
    return v;
}

unsigned bit_width128(uint128_t v) {
    const auto hi = static_cast<std::uint64_t>(v >> 64);
    if (hi) return 64 + static_cast<unsigned>(std::bit_width(hi));
    return static_cast<unsigned>(std::bit_width(static_cast<std::uint64_t>(v)));
}

unsigned block_bits(std::size_t len) {
    return len == kTritBlockLength ? kTritBlockBits : bit_width128(pow3(len) - 1);
}

} // namespace

std::size_t packed_trit_bits(std::size_t trit_count) {
    return (trit_count / kTritBlockLength) * kTritBlockBits + block_bits(trit_count % kTritBlockLength);
}

void pack_trits(const TritString& trits, BitStream& out) {
    for (std::size_t start = 0; start < trits.size(); start += kTritBlockLength) {
        const std::size_t len = std::min(kTritBlockLength, trits.size() - start);
        uint128_t value = 0;
        for (std::size_t i = 0; i < len; ++i) value = value * 3 + trits[start + i];
        out.append(value, block_bits(len));
    }
}

BitStream pack_trits(const TritString& trits) {
    BitStream out;
    pack_trits(trits, out);
    return out;
}

TritString unpack_trits(BitReader& in, std::size_t trit_count) {
    TritString trits;
    for (std::size_t start = 0; start < trit_count; start += kTritBlockLength) {
        const std::size_t len = std::min(kTritBlockLength, trit_count - start);
        uint128_t value = in.read_bits128(block_bits(len));
        if (value >= pow3(len)) throw corruption_error("trit block value out of range");
        std::uint8_t digits[kTritBlockLength];
        for (std::size_t i = len; i-- > 0;) {
            digits[i] = static_cast<std::uint8_t>(value % 3);
            value /= 3;
        }
        for (std::size_t i = 0; i < len; ++i) trits.push_back(digits[i]);
    }
    return trits;
}

mpz_class binomial(std::size_t n, std::size_t k) {
    mpz_class r;
    if (k > n) return r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

SubsetRank subset_rank(std::span<const std::size_t> positions, std::size_t length) {
    for (std::size_t j = 0; j < positions.size(); ++j) {
        if (positions[j] >= length) throw argument_error("subset position outside 0..L-1");
        if (j > 0 && positions[j - 1] >= positions[j]) throw argument_error("subset positions must be strictly increasing");
    }
    SubsetRank out;
    out.k = positions.size();
    // Walk p = 0..L-1 keeping term = C(p, j), where j is the ordinal the next
    // member would get. While every position so far is a member, p = j-1 and
    // the term is zero.
    mpz_class& rank = out.rank;
    mpz_class term;
    std::size_t next = 0;
    std::size_t j = 1;
    for (std::size_t p = 0; p < length && next < positions.size(); ++p) {
        const bool member = positions[next] == p;
        if (p < j) {
            if (member) {
                ++next;
                ++j;
            } else {
                term = 1;  // C(p+1, j) with p+1 = j
            }
            continue;
        }
        if (member) {
            rank += term;
            mpz_mul_ui(term.get_mpz_t(), term.get_mpz_t(), p + 1);
            mpz_divexact_ui(term.get_mpz_t(), term.get_mpz_t(), j + 1);
            ++next;
            ++j;
        } else {
            mpz_mul_ui(term.get_mpz_t(), term.get_mpz_t(), p + 1);
            mpz_divexact_ui(term.get_mpz_t(), term.get_mpz_t(), p + 1 - j);
        }
    }
    return out;
}

SubsetRank subset_rank(const std::vector<bool>& membership) {
    std::vector<std::size_t> positions;
    for (std::size_t p = 0; p < membership.size(); ++p)
        if (membership[p]) positions.push_back(p);
    return subset_rank(positions, membership.size());
}

std::vector<std::size_t> subset_unrank(std::size_t k, const mpz_class& rank, std::size_t length) {
    if (k > length) throw argument_error("subset size exceeds length");
    if (rank < 0 || rank >= binomial(length, k)) throw corruption_error("subset rank out of range");
    std::vector<std::size_t> positions(k);
    if (k == 0) return positions;
    mpz_class r = rank;
    std::size_t j = k;
    std::size_t p = length - 1;
    mpz_class term = binomial(p, j);  // C(p, j)
    while (j > 0) {
        if (p < j) {
            // Only p = j-1 can remain: the rest are forced to 0..j-1.
            for (; j > 0; --j) positions[j - 1] = j - 1;
            break;
        }
        if (term <= r) {
            positions[j - 1] = p;
            r -= term;
            mpz_mul_ui(term.get_mpz_t(), term.get_mpz_t(), j);
            mpz_divexact_ui(term.get_mpz_t(), term.get_mpz_t(), p);
            --j;
        } else {
            mpz_mul_ui(term.get_mpz_t(), term.get_mpz_t(), p - j);
            mpz_divexact_ui(term.get_mpz_t(), term.get_mpz_t(), p);
        }
        --p;
    }
    return positions;
}

std::size_t subset_rank_bits(std::size_t length, std::size_t k) {
    mpz_class count = binomial(length, k);
    if (count <= 1) return 0;
    count -= 1;
    return mpz_sizeinbase(count.get_mpz_t(), 2);
}

void write_big(BitStream& out, const mpz_class& value, std::size_t width) {
    if (value < 0 || (value != 0 && mpz_sizeinbase(value.get_mpz_t(), 2) > width))
        throw argument_error("big integer does not fit in " + std::to_string(width) + " bits");
    for (std::size_t b = width; b-- > 0;) out.push_back(mpz_tstbit(value.get_mpz_t(), b));
}

mpz_class read_big(BitReader& in, std::size_t width) {
    if (in.remaining() < width) throw truncation_error("read past end of bit segment");
    mpz_class v;
    for (std::size_t b = width; b-- > 0;)
        if (in.read_bit()) mpz_setbit(v.get_mpz_t(), b);
    return v;
}

} // namespace nvenc
