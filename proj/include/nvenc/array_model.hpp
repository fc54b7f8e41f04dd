#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "nvenc/errors.hpp"

namespace nvenc {

enum class QueryKind { psv, plv, nsv, nlv };

std::string_view to_string(QueryKind kind);
QueryKind parse_query_kind(std::string_view text);

// The input array A[1..n]. Indices 0 and n+1 are virtual sentinels and
// are never stored.
class ValueArray {
public:
    explicit ValueArray(std::vector<std::int64_t> values);
    ValueArray(std::initializer_list<std::int64_t> values)
        : ValueArray(std::vector<std::int64_t>(values)) {}

    std::size_t size() const noexcept { return values_.size(); }

    // 1-based access.
    std::int64_t operator[](std::size_t i) const noexcept { return values_[i - 1]; }
    std::int64_t at(std::size_t i) const;

    std::span<const std::int64_t> values() const noexcept { return values_; }

    // Smallest i with A[i] = A[i+1], if any.
    std::optional<std::size_t> first_consecutive_equal() const noexcept;

    friend bool operator==(const ValueArray&, const ValueArray&) = default;

private:
    std::vector<std::int64_t> values_;
};

// Strict parser: integers separated by whitespace (newlines included),
// nothing else. Throws parse_error, or empty_array_error on no values.
ValueArray parse_array_text(std::string_view text);

// Brute-force reference answers. Each is a plain linear scan and returns
// the sentinel 0 (previous-*) or n+1 (next-*) when no index qualifies.
std::size_t oracle_psv(const ValueArray& a, std::size_t i);
std::size_t oracle_plv(const ValueArray& a, std::size_t i);
std::size_t oracle_nsv(const ValueArray& a, std::size_t i);
std::size_t oracle_nlv(const ValueArray& a, std::size_t i);
std::size_t oracle(const ValueArray& a, QueryKind kind, std::size_t i);

// Run compression of an array: c_bits[i] = 1 iff A[i] = A[i+1]. The
// reduced array keeps the last element of every run, so it has no two
// consecutive equal elements.
class RunStructure {
public:
    // Decoder-side construction: the bit string alone determines the runs.
    // `c_bits` has length n-1 (entry j holds C[j+1]).
    static RunStructure from_bits(std::vector<bool> c_bits);

    std::size_t original_size() const noexcept { return c_bits_.size() + 1; }
    std::size_t reduced_size() const noexcept { return kept_positions_.size(); }
    std::size_t ones() const noexcept { return k_; }

    // C[i] for 1 <= i <= n-1.
    bool c_bit(std::size_t i) const;
    const std::vector<bool>& c_bits() const noexcept { return c_bits_; }

    // Original indices of the kept (run-final) elements, increasing, ending with n.
    const std::vector<std::size_t>& kept_positions() const noexcept { return kept_positions_; }

    // A' itself; only available when built from an array.
    const ValueArray& reduced_array() const;

    // Position in A' of the last element of i's run.
    std::size_t map_query_index(std::size_t i) const;

    // Translates an answer on A' (0, 1..n', or n'+1) back to A.
    std::size_t map_answer_to_original(std::size_t reduced_answer, QueryKind kind) const;

    friend RunStructure compute_runs(const ValueArray& a);

private:
    RunStructure() = default;
    void index_runs();

    std::vector<bool> c_bits_;
    std::size_t k_ = 0;
    std::vector<std::size_t> kept_positions_;
    std::vector<std::size_t> run_starts_;  // first original index of each run
    std::vector<std::size_t> rank_map_;  // original index - 1 -> reduced index
    std::optional<ValueArray> reduced_;
};

RunStructure compute_runs(const ValueArray& a);

} // namespace nvenc
