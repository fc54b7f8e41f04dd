#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "nvenc/array_model.hpp"

using namespace nvenc;

namespace {

const ValueArray kSample{3, 8, 5, 6, 3, 2, 7, 10, 9};

// The defining set formulas, evaluated literally.
std::size_t formula(const ValueArray& a, QueryKind kind, std::size_t i) {
    std::set<std::size_t> candidates;
    const bool previous = kind == QueryKind::psv || kind == QueryKind::plv;
    const bool smaller = kind == QueryKind::psv || kind == QueryKind::nsv;
    for (std::size_t j = 1; j <= a.size(); ++j) {
        if (previous ? j >= i : j <= i) continue;
        if (smaller ? a[j] < a[i] : a[j] > a[i]) candidates.insert(j);
    }
    candidates.insert(previous ? 0 : a.size() + 1);
    return previous ? *candidates.rbegin() : *candidates.begin();
}

template <typename F>
void for_each_array(std::size_t max_len, std::int64_t alphabet, F f) {
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<std::int64_t> v(len, 1);
        while (true) {
            f(ValueArray(v));
            std::size_t pos = len;
            while (pos > 0 && v[pos - 1] == alphabet) v[--pos] = 1;
            if (pos == 0) break;
            ++v[pos - 1];
        }
    }
}

constexpr QueryKind kAllKinds[] = {QueryKind::psv, QueryKind::plv, QueryKind::nsv, QueryKind::nlv};

} // namespace

TEST_CASE("oracle examples") {
    CHECK(oracle_psv(kSample, 4) == 3);
    CHECK(oracle_psv(ValueArray{5}, 1) == 0);
    CHECK(oracle_psv(kSample, 5) == 0);
    CHECK(oracle_plv(kSample, 4) == 2);
    CHECK(oracle_nsv(kSample, 1) == 6);
    CHECK(oracle_nlv(kSample, 8) == 10);
}

TEST_CASE("oracles reject out-of-range indices") {
    CHECK_THROWS_AS(oracle_psv(kSample, 0), argument_error);
    CHECK_THROWS_AS(oracle_nsv(kSample, 10), argument_error);
    CHECK_THROWS_AS(oracle(kSample, QueryKind::nlv, 0), argument_error);
}

TEST_CASE("empty arrays are rejected with a distinct error") {
    CHECK_THROWS_AS(ValueArray(std::vector<std::int64_t>{}), empty_array_error);
    CHECK_THROWS_AS(parse_array_text("  \n "), empty_array_error);
}

TEST_CASE("oracles match the defining set formulas") {
    for_each_array(6, 3, [](const ValueArray& a) {
        for (std::size_t i = 1; i <= a.size(); ++i)
            for (QueryKind k : kAllKinds) REQUIRE(oracle(a, k, i) == formula(a, k, i));
    });
}

TEST_CASE("array text parsing") {
    CHECK(parse_array_text("3\n8\n5\n") == ValueArray{3, 8, 5});
    CHECK(parse_array_text("  -4 7\t+2\r\n9") == ValueArray{-4, 7, 2, 9});
    CHECK(parse_array_text("-9223372036854775808 9223372036854775807") ==
          ValueArray{std::numeric_limits<std::int64_t>::min(), std::numeric_limits<std::int64_t>::max()});
    CHECK_THROWS_AS(parse_array_text("1 2 x"), parse_error);
    CHECK_THROWS_AS(parse_array_text("1,2"), parse_error);
    CHECK_THROWS_AS(parse_array_text("1.5"), parse_error);
    CHECK_THROWS_AS(parse_array_text("9223372036854775808"), parse_error);
    CHECK_THROWS_AS(parse_array_text("+-3"), parse_error);
}

TEST_CASE("compute_runs examples") {
    SUBCASE("[2,1,1,3]") {
        const RunStructure rs = compute_runs(ValueArray{2, 1, 1, 3});
        CHECK(rs.c_bits() == std::vector<bool>{false, true, false});
        CHECK(rs.ones() == 1);
        CHECK(rs.reduced_array() == ValueArray{2, 1, 3});
        CHECK(rs.kept_positions() == std::vector<std::size_t>{1, 3, 4});
    }
    SUBCASE("[5]") {
        const RunStructure rs = compute_runs(ValueArray{5});
        CHECK(rs.c_bits().empty());
        CHECK(rs.ones() == 0);
        CHECK(rs.reduced_array() == ValueArray{5});
    }
    SUBCASE("[7,7,7]") {
        const RunStructure rs = compute_runs(ValueArray{7, 7, 7});
        CHECK(rs.c_bits() == std::vector<bool>{true, true});
        CHECK(rs.ones() == 2);
        CHECK(rs.reduced_array() == ValueArray{7});
    }
}

TEST_CASE("run structure rebuilt from bits has no reduced values") {
    const RunStructure rs = RunStructure::from_bits({false, true, false});
    CHECK(rs.kept_positions() == std::vector<std::size_t>{1, 3, 4});
    CHECK_THROWS_AS(rs.reduced_array(), argument_error);
    CHECK(rs.c_bit(2));
    CHECK_THROWS_AS(rs.c_bit(0), argument_error);
    CHECK_THROWS_AS(rs.c_bit(4), argument_error);
}

TEST_CASE("map_query_index examples") {
    const RunStructure rs = compute_runs(ValueArray{2, 1, 1, 3});
    CHECK(rs.map_query_index(2) == 2);
    CHECK(rs.map_query_index(1) == 1);
    CHECK(rs.map_query_index(3) == 2);
    CHECK(rs.map_query_index(4) == 3);
    CHECK(compute_runs(ValueArray{7, 7, 7}).map_query_index(1) == 1);
    CHECK_THROWS_AS(rs.map_query_index(0), argument_error);
    CHECK_THROWS_AS(rs.map_query_index(5), argument_error);
}

TEST_CASE("map_answer_to_original examples") {
    const RunStructure rs = compute_runs(ValueArray{2, 1, 1, 3});
    CHECK(rs.map_answer_to_original(2, QueryKind::nsv) == 2);
    CHECK(rs.map_answer_to_original(2, QueryKind::psv) == 3);
    CHECK(rs.map_answer_to_original(0, QueryKind::psv) == 0);
    CHECK(rs.map_answer_to_original(4, QueryKind::nlv) == 5);
    CHECK_THROWS_AS(rs.map_answer_to_original(5, QueryKind::nsv), argument_error);
}

TEST_CASE("previous-value answers are run ends") {
    for_each_array(7, 3, [](const ValueArray& a) {
        const RunStructure rs = compute_runs(a);
        for (std::size_t i = 1; i <= a.size(); ++i) {
            for (QueryKind k : {QueryKind::psv, QueryKind::plv}) {
                const std::size_t j = oracle(a, k, i);
                REQUIRE((j == 0 || j == a.size() || !rs.c_bit(j)));
            }
        }
    });
}

TEST_CASE("answers on A' map back to answers on A") {
    for_each_array(7, 3, [](const ValueArray& a) {
        const RunStructure rs = compute_runs(a);
        const ValueArray& reduced = rs.reduced_array();
        REQUIRE(!reduced.first_consecutive_equal());
        REQUIRE(rs.reduced_size() == a.size() - rs.ones());
        for (std::size_t i = 1; i <= a.size(); ++i) {
            for (QueryKind k : kAllKinds) {
                const std::size_t via_reduced =
                    rs.map_answer_to_original(oracle(reduced, k, rs.map_query_index(i)), k);
                REQUIRE(via_reduced == oracle(a, k, i));
            }
        }
    });
}

TEST_CASE("run structure invariants on random arrays") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 200; ++round) {
        const std::size_t n = 1 + rng() % 300;
        std::vector<std::int64_t> v(n);
        for (auto& x : v) x = static_cast<std::int64_t>(rng() % 3);
        const ValueArray a(v);
        const RunStructure rs = compute_runs(a);
        const auto& kept = rs.kept_positions();
        REQUIRE(kept.size() == n - rs.ones());
        REQUIRE(kept.back() == n);
        REQUIRE(std::is_sorted(kept.begin(), kept.end()));
        for (std::size_t i = 1; i < n; ++i) REQUIRE(rs.c_bit(i) == (a[i] == a[i + 1]));
    }
}
