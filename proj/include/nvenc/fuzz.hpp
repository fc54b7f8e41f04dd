#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "nvenc/array_model.hpp"

namespace nvenc {

enum class Distribution { distinct, small_alphabet, long_runs };

std::vector<std::int64_t> generate_array(Distribution dist, std::size_t n, std::int64_t alphabet, std::mt19937_64& rng);

// Seed for the i-th generated array; arrays are independent of each other,
// so any split of the index range across workers gives the same results.
std::uint64_t array_seed(std::uint64_t seed, std::uint64_t index);

struct CheckOptions {
    // Arrays up to this length are checked at every index; longer ones at a
    // fixed sample of indices (the brute-force oracle is linear per query).
    std::size_t full_check_limit = 4096;
    std::size_t sampled_indices = 256;
};

// Runs every codec and invariant check on one array: builders against the
// oracle, tree shape invariants, leaf duality, red leaves and the good/bad balance,
// encode/serialize/decode/re-encode for each applicable scheme, size bounds,
// and all four queries against the oracle. Returns a description of the
// first failure. `checks` is incremented once per passed check.
std::optional<std::string> check_array(const ValueArray& a, std::size_t& checks, const CheckOptions& options = {});

// Greedily deletes elements while `fails` keeps returning true.
std::vector<std::int64_t> minimize_failure(std::vector<std::int64_t> values,
                                           const std::function<bool(const std::vector<std::int64_t>&)>& fails);

struct FuzzOptions {
    std::size_t count = 1000;
    std::size_t max_n = 200;
    std::int64_t alphabet = 5;
    std::uint64_t seed = 42;
    // All arrays of length 1..max_n over {1..alphabet}; `count` is ignored.
    bool exhaustive = false;
    CheckOptions check;
};

struct FuzzFailure {
    std::vector<std::int64_t> array;      // as generated
    std::vector<std::int64_t> minimized;  // smallest failing sub-array found
    std::string message;
};

struct FuzzReport {
    std::size_t arrays = 0;
    std::size_t checks = 0;
    std::vector<FuzzFailure> failures;
};

FuzzReport run_fuzz(const FuzzOptions& options);

} // namespace nvenc
