#pragma once

#include <cmath>
#include <cstddef>

#include "nvenc/array_model.hpp"
#include "nvenc/bitio.hpp"
#include "nvenc/codec_colored.hpp"

namespace nvenc {

// Arbitrary arrays: the run bit string C (as a subset rank over its n-1
// positions) plus the colored encoding of the run-reduced array A'.
struct GeneralEncoding {
    std::size_t n = 0;
    std::size_t k = 0;          // ones in C
    BitStream c_rank_bits;      // ceil(log2 C(n-1, k)) bits
    ColoredEncoding colored;    // of A', which has n - k elements

    std::size_t payload_bits() const noexcept { return c_rank_bits.size() + colored.payload_bits(); }

    friend bool operator==(const GeneralEncoding&, const GeneralEncoding&) = default;
};

// Decoded form: answers all four queries on original indices by mapping
// into A', querying the colored heaps and mapping the answer back.
class GeneralQueries {
public:
    GeneralQueries(RunStructure runs, ColoredTree cmin, ColoredTree cmax);

    std::size_t n() const noexcept { return runs_.original_size(); }
    bool supports(QueryKind) const noexcept { return true; }
    std::size_t answer(QueryKind kind, std::size_t i) const;

    const RunStructure& runs() const noexcept { return runs_; }
    const ColoredQueries& reduced() const noexcept { return reduced_; }

private:
    RunStructure runs_;
    ColoredQueries reduced_;
};

GeneralEncoding encode_general(const ValueArray& a);
// Re-encodes a decoded structure; identical to encoding the source array.
GeneralEncoding encode_general(const GeneralQueries& decoded);

GeneralQueries decode_general(const GeneralEncoding& e);

// log2 C(n, k) through lgamma.
double log2_binomial(std::size_t n, std::size_t k);

struct SplitBoundSides {
    double lhs;  // c(n-k) + log2 C(n, k)
    double rhs;  // log2(2^c + 1) n
};
SplitBoundSides split_bound_sides(double c, std::size_t n, std::size_t k);
// lhs <= rhs within 1e-6 n.
bool split_bound_check(double c, std::size_t n, std::size_t k);

// c = 2 + log2 3, for which 2^c + 1 = 13.
inline double colored_rate() { return 2.0 + std::log2(3.0); }

// log2(13) n + 2 ceil(log2 n) + 96.
double general_bound_bits(std::size_t n);

} // namespace nvenc
