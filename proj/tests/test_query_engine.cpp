#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nvenc/query_engine.hpp"

using namespace nvenc;

namespace {

const ValueArray kSample{3, 8, 5, 6, 3, 2, 7, 10, 9};

struct Heaps {
    ColoredTree cmin;
    ColoredTree cmax;
};

Heaps heaps_of(const ValueArray& a) {
    return {colorize(build_min_heap(a), a), colorize(build_max_heap(a), a)};
}

void expect_oracle_equivalence(const ValueArray& a) {
    const Heaps h = heaps_of(a);
    for (std::size_t i = 1; i <= a.size(); ++i) {
        REQUIRE(psv_from_tree(h.cmin, i) == oracle_psv(a, i));
        REQUIRE(nsv_from_tree(h.cmin, i) == oracle_nsv(a, i));
        REQUIRE(plv_from_tree(h.cmax, i) == oracle_plv(a, i));
        REQUIRE(nlv_from_tree(h.cmax, i) == oracle_nlv(a, i));
    }
}

} // namespace

TEST_CASE("queries on cMin(A) of the running example") {
    const Heaps h = heaps_of(kSample);
    CHECK(psv_from_tree(h.cmin, 9) == 7);
    CHECK(psv_from_tree(h.cmin, 6) == 0);
    CHECK(nsv_from_tree(h.cmin, 1) == 6);
    CHECK(nsv_from_tree(h.cmin, 9) == 10);
    CHECK(nsv_from_tree(h.cmin, 2) == 3);
}

TEST_CASE("queries on cMax(A) of the running example") {
    const Heaps h = heaps_of(kSample);
    CHECK(nlv_from_tree(h.cmax, 5) == 7);
    CHECK(plv_from_tree(h.cmax, 9) == 8);
    CHECK(nlv_from_tree(h.cmax, 8) == 10);
}

TEST_CASE("chain tree") {
    const Heaps h = heaps_of(ValueArray{1, 2, 3});
    CHECK(psv_from_tree(h.cmin, 3) == 2);
    CHECK(nsv_from_tree(h.cmin, 1) == 4);
}

TEST_CASE("range errors") {
    const Heaps h = heaps_of(kSample);
    CHECK_THROWS_AS(psv_from_tree(h.cmin, 0), argument_error);
    CHECK_THROWS_AS(nsv_from_tree(h.cmin, 10), argument_error);
    CHECK_THROWS_AS(plv_from_tree(h.cmax, 10), argument_error);
    CHECK_THROWS_AS(nlv_from_tree(h.cmax, 0), argument_error);
}

TEST_CASE("exhaustive equivalence, length <= 7 over {1,2,3}, equal neighbours included") {
    std::size_t arrays = 0;
    for (std::size_t len = 1; len <= 7; ++len) {
        std::vector<std::int64_t> v(len, 1);
        while (true) {
            expect_oracle_equivalence(ValueArray(v));
            ++arrays;
            std::size_t pos = len;
            while (pos > 0 && v[pos - 1] == 3) v[--pos] = 1;
            if (pos == 0) break;
            ++v[pos - 1];
        }
    }
    CHECK(arrays == 3279);
}

TEST_CASE("randomized equivalence on larger arrays") {
    std::mt19937_64 rng(99);
    for (int round = 0; round < 200; ++round) {
        const std::size_t n = 1 + rng() % 400;
        const std::uint64_t alphabet = round % 3 == 0 ? n : 1 + rng() % 6;
        std::vector<std::int64_t> v(n);
        for (auto& x : v) x = static_cast<std::int64_t>(rng() % alphabet);
        expect_oracle_equivalence(ValueArray(v));
    }
}
