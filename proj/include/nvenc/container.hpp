#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "nvenc/codec_colored.hpp"
#include "nvenc/codec_general.hpp"
#include "nvenc/codec_joint.hpp"

namespace nvenc {

// File layout:
//   "NLVE" | version (1) | scheme | varint n | [varint k, scheme 3 only]
//   | varint segment bit lengths | payload bits, last byte zero-padded
// Scheme 1 stores three lengths (U, T_min, T_max). Schemes 2 and 3 store
// five (u_gb, v_bad, packed v_neutral, T_min, T_max); scheme 3 puts the
// C(n-1, k) rank field, whose length follows from n and k, before them.
enum class Scheme : std::uint8_t { joint = 1, colored = 2, general = 3 };

inline constexpr char kMagic[4] = {'N', 'L', 'V', 'E'};
inline constexpr std::uint8_t kFormatVersion = 1;
inline constexpr std::uint64_t kMaxElements = std::uint64_t{1} << 32;

std::string_view to_string(Scheme scheme);
Scheme parse_scheme(std::string_view text);

// Unsigned LEB128.
void write_varint(std::vector<std::uint8_t>& out, std::uint64_t value);
std::uint64_t read_varint(std::span<const std::uint8_t> in, std::size_t& pos);

using Encoding = std::variant<JointEncoding, ColoredEncoding, GeneralEncoding>;

Scheme scheme_of(const Encoding& e);
std::size_t element_count(const Encoding& e);
std::size_t payload_bits(const Encoding& e);

// Throws precondition_error for consecutive equal elements under schemes 1 and 2.
Encoding encode_array(const ValueArray& a, Scheme scheme);

std::vector<std::uint8_t> serialize(const Encoding& e);
// Throws corruption_error on anything malformed.
Encoding deserialize(std::span<const std::uint8_t> bytes);

// Query structure rebuilt from an encoding; the array itself is never
// recovered.
class DecodedContainer {
public:
    explicit DecodedContainer(const Encoding& e);

    Scheme scheme() const noexcept;
    std::size_t n() const noexcept;
    bool supports(QueryKind kind) const noexcept;
    // Throws argument_error for unsupported kinds or indices outside 1..n.
    std::size_t answer(QueryKind kind, std::size_t i) const;

    // Encoding recomputed from the decoded trees.
    Encoding reencode() const;
    std::string dump_trees() const;

private:
    std::variant<JointQueries, ColoredQueries, GeneralQueries> queries_;
};

struct BitBudget {
    std::size_t payload_bits;
    std::size_t bound_bits;  // 3n-1, ceil((2+log2 3)n) or ceil(log2(13) n)
    double rate_bound;       // 3-1/n, 2+log2 3 or log2 13
};
BitBudget bit_budget(const Encoding& e);
std::string stats_line(const Encoding& e);

} // namespace nvenc
