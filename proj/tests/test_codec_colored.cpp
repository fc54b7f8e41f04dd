#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "nvenc/codec_colored.hpp"

using namespace nvenc;

namespace {

const ValueArray kSample{3, 8, 5, 6, 3, 2, 7, 10, 9};

ValueArray random_distinct_neighbours(std::mt19937_64& rng, std::size_t n, std::uint64_t alphabet) {
    std::vector<std::int64_t> v;
    while (v.size() < n) {
        const auto x = static_cast<std::int64_t>(rng() % alphabet);
        if (!v.empty() && v.back() == x) continue;
        v.push_back(x);
    }
    return ValueArray(v);
}

} // namespace

TEST_CASE("index classes of the running example") {
    const OrdinalTree mn = build_min_heap(kSample);
    const OrdinalTree mx = build_max_heap(kSample);
    CHECK(classify_index(mn, mx, 6) == IndexClass::good);
    CHECK(classify_index(mn, mx, 7) == IndexClass::good);
    CHECK(classify_index(mn, mx, 1) == IndexClass::bad);
    CHECK(classify_index(mn, mx, 2) == IndexClass::bad);
    for (std::size_t i : {3, 4, 5, 8}) CHECK(classify_index(mn, mx, i) == IndexClass::neutral);
    CHECK_THROWS_AS(classify_index(mn, mx, 0), argument_error);
    CHECK_THROWS_AS(classify_index(mn, mx, 9), argument_error);
}

TEST_CASE("good and bad counts") {
    const GoodBadCount fig = count_good_bad(build_min_heap(kSample), build_max_heap(kSample));
    CHECK(fig.good == 2);
    CHECK(fig.bad == 2);
    const GoodBadCount one = count_good_bad(build_min_heap(ValueArray{5}), build_max_heap(ValueArray{5}));
    CHECK(one.good == 0);
    CHECK(one.bad == 0);

    std::mt19937_64 rng(17);
    for (int round = 0; round < 2000; ++round) {
        const ValueArray a = random_distinct_neighbours(rng, 1 + rng() % 300, 2 + rng() % 50);
        const GoodBadCount c = count_good_bad(build_min_heap(a), build_max_heap(a));
        REQUIRE(c.good == c.bad);
    }
}

TEST_CASE("running example encodes to the published strings") {
    const ColoredEncoding e = encode_colored(kSample);
    CHECK(e.t_min.to_string() == "110100010");
    CHECK(e.t_max.to_string() == "110110000");
    CHECK(e.u_gb.to_string() == "0100");
    CHECK(e.v_bad.to_string() == "10");
    CHECK(e.v_neutral.to_string() == "2022");
    CHECK(e.g == 2);
    CHECK(e.payload_bits() == 31);
    CHECK(31 <= std::ceil((2 + std::log2(3.0)) * 9) + 2);
}

TEST_CASE("single element") {
    const ColoredEncoding e = encode_colored(ValueArray{5});
    CHECK(e.u_gb.empty());
    CHECK(e.v_bad.empty());
    CHECK(e.v_neutral.empty());
    CHECK(e.t_min.to_string() == "0");
    CHECK(e.t_max.to_string() == "0");
    const auto [cmin, cmax] = decode_colored(e);
    CHECK(cmin.to_text() == "0b(1b)");
    CHECK(cmax.to_text() == "0b(1b)");
}

TEST_CASE("decoding the running example restores colors") {
    const auto [cmin, cmax] = decode_colored(encode_colored(kSample));
    CHECK(cmin.red_nodes() == std::vector<std::size_t>{2, 5, 8});
    CHECK(cmax.red_nodes() == std::vector<std::size_t>{1, 2, 3, 4});
    CHECK(cmin == colorize(build_min_heap(kSample), kSample));
    CHECK(cmax == colorize(build_max_heap(kSample), kSample));
}

TEST_CASE("exhaustive round trip and queries, length <= 7 over {1,2,3}") {
    std::size_t arrays = 0;
    for (std::size_t len = 1; len <= 7; ++len) {
        std::vector<std::int64_t> v(len, 1);
        while (true) {
            const ValueArray a(v);
            if (!a.first_consecutive_equal()) {
                ++arrays;
                const ColoredTree cmin = colorize(build_min_heap(a), a);
                const ColoredTree cmax = colorize(build_max_heap(a), a);
                const ColoredEncoding e = encode_colored(cmin, cmax);
                auto [dmin, dmax] = decode_colored(e);
                REQUIRE(dmin == cmin);
                REQUIRE(dmax == cmax);
                REQUIRE(encode_colored(dmin, dmax) == e);
                const ColoredQueries q(std::move(dmin), std::move(dmax));
                for (std::size_t i = 1; i <= len; ++i)
                    for (QueryKind k : {QueryKind::psv, QueryKind::plv, QueryKind::nsv, QueryKind::nlv})
                        REQUIRE(q.answer(k, i) == oracle(a, k, i));
            }
            std::size_t pos = len;
            while (pos > 0 && v[pos - 1] == 3) v[--pos] = 1;
            if (pos == 0) break;
            ++v[pos - 1];
        }
    }
    // 3 * 2^(len-1) arrays per length.
    CHECK(arrays == 3 + 6 + 12 + 24 + 48 + 96 + 192);
}

TEST_CASE("random round trips and size") {
    std::mt19937_64 rng(31);
    for (int round = 0; round < 300; ++round) {
        const std::size_t n = 1 + rng() % 2000;
        const ValueArray a = random_distinct_neighbours(rng, n, round % 2 ? 3 : n + 1);
        const ColoredEncoding e = encode_colored(a);
        REQUIRE(e.u_gb.size() == 2 * e.g);
        REQUIRE(e.v_bad.size() == e.g);
        REQUIRE(e.v_neutral.size() == n - 1 - 2 * e.g);
        REQUIRE(e.payload_bits() == colored_size_bits(n, e.g, n - 1 - 2 * e.g));
        REQUIRE(static_cast<double>(e.payload_bits()) <= 3.586 * static_cast<double>(n) + 70);
        const auto [cmin, cmax] = decode_colored(e);
        REQUIRE(encode_colored(cmin, cmax) == e);
    }
}

TEST_CASE("colored_size_bits") {
    CHECK(colored_size_bits(9, 2, 4) == 31);
    CHECK(colored_size_bits(1, 0, 0) == 2);
    CHECK_THROWS_AS(colored_size_bits(9, 2, 5), argument_error);
    CHECK_THROWS_AS(colored_size_bits(4, 2, 0), argument_error);
    CHECK(colored_bound_bits(9) == doctest::Approx(32.2647).epsilon(1e-5));
}

TEST_CASE("size bound holds over every feasible (n, g)") {
    for (std::size_t n = 1; n <= 10000; ++n) {
        const double bound = 3.586 * static_cast<double>(n) + 70;
        for (std::size_t g = 0; 2 * g + 1 <= n; ++g) {
            const std::size_t m = n - 1 - 2 * g;
            const double analytic = 2.0 * n + 3.0 * g + 1.58537 * static_cast<double>(m) + 65;
            if (analytic > bound) FAIL("analytic size above bound at n=" << n << " g=" << g);
        }
        // g = 0 is the largest case for the exact size.
        if (static_cast<double>(colored_size_bits(n, 0, n - 1)) > bound) FAIL("exact size above bound at n=" << n);
    }
}

TEST_CASE("precondition violations") {
    try {
        encode_colored(ValueArray{7, 7, 7});
        FAIL("expected a precondition error");
    } catch (const precondition_error& e) {
        CHECK(e.index() == 1);
    }
    // A tree pair that satisfies the leaf/internal duality but has a blue
    // leaf with a right sibling.
    const ValueArray a{1, 3, 2};
    const OrdinalTree mn = build_min_heap(a);
    const OrdinalTree mx = build_max_heap(a);
    const ColoredTree cmin = colorize(mn, a);
    std::vector<Color> blue(mx.n() + 1, Color::blue);
    CHECK_THROWS_AS(encode_colored(cmin, ColoredTree(mx, blue)), precondition_error);
}

TEST_CASE("corrupt encodings") {
    const ColoredEncoding good = encode_colored(kSample);
    SUBCASE("neutral trits exhausted") {
        ColoredEncoding e = good;
        e.v_neutral = TritString::from_string("202");
        CHECK_THROWS_AS(decode_colored(e), truncation_error);
    }
    SUBCASE("extra neutral trit") {
        ColoredEncoding e = good;
        e.v_neutral.push_back(1);
        CHECK_THROWS_AS(decode_colored(e), corruption_error);
    }
    SUBCASE("u_gb exhausted") {
        ColoredEncoding e = good;
        e.u_gb = BitStream::from_string("010");
        CHECK_THROWS_AS(decode_colored(e), truncation_error);
    }
    SUBCASE("trailing v_bad bit") {
        ColoredEncoding e = good;
        e.v_bad.push_back(true);
        CHECK_THROWS_AS(decode_colored(e), corruption_error);
    }
    SUBCASE("trailing degree bit") {
        ColoredEncoding e = good;
        e.t_max.push_back(false);
        CHECK_THROWS_AS(decode_colored(e), corruption_error);
    }
}
