#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nvenc/container.hpp"

using namespace nvenc;
using Bytes = std::vector<std::uint8_t>;

namespace {

const ValueArray kSample{3, 8, 5, 6, 3, 2, 7, 10, 9};

} // namespace

TEST_CASE("varints") {
    Bytes out;
    write_varint(out, 0);
    write_varint(out, 127);
    write_varint(out, 300);
    write_varint(out, UINT64_MAX);
    CHECK(out.size() == 1 + 1 + 2 + 10);
    CHECK(out[2] == 0xAC);
    CHECK(out[3] == 0x02);
    std::size_t pos = 0;
    CHECK(read_varint(out, pos) == 0);
    CHECK(read_varint(out, pos) == 127);
    CHECK(read_varint(out, pos) == 300);
    CHECK(read_varint(out, pos) == UINT64_MAX);
    CHECK(pos == out.size());

    const Bytes truncated{0x80};
    pos = 0;
    CHECK_THROWS_AS(read_varint(truncated, pos), truncation_error);
    const Bytes overlong(11, 0x80);
    pos = 0;
    CHECK_THROWS_AS(read_varint(overlong, pos), corruption_error);
}

TEST_CASE("golden bytes for the running example") {
    CHECK(serialize(encode_array(kSample, Scheme::joint)) ==
          Bytes{'N', 'L', 'V', 'E', 1, 1, 9, 8, 9, 9, 0x59, 0xD1, 0x6C, 0x00});
    CHECK(serialize(encode_array(kSample, Scheme::colored)) ==
          Bytes{'N', 'L', 'V', 'E', 1, 2, 9, 4, 2, 7, 9, 9, 0x49, 0xF6, 0x8B, 0x60});
    // No runs: the general container is the colored one with k = 0 and
    // an empty rank field.
    CHECK(serialize(encode_array(kSample, Scheme::general)) ==
          Bytes{'N', 'L', 'V', 'E', 1, 3, 9, 0, 4, 2, 7, 9, 9, 0x49, 0xF6, 0x8B, 0x60});
}

TEST_CASE("schemes") {
    CHECK(parse_scheme("joint") == Scheme::joint);
    CHECK(parse_scheme("2") == Scheme::colored);
    CHECK(parse_scheme("general") == Scheme::general);
    CHECK_THROWS_AS(parse_scheme("huffman"), argument_error);
    CHECK_THROWS_AS(encode_array(ValueArray{7, 7, 7}, Scheme::colored), precondition_error);
    CHECK_THROWS_AS(encode_array(ValueArray{7, 7, 7}, Scheme::joint), precondition_error);
    CHECK_NOTHROW(encode_array(ValueArray{7, 7, 7}, Scheme::general));
}

TEST_CASE("round trips are byte-identical for every scheme") {
    std::mt19937_64 rng(41);
    for (int round = 0; round < 300; ++round) {
        const std::size_t n = 1 + rng() % 700;
        std::vector<std::int64_t> v;
        const std::uint64_t alphabet = 2 + rng() % 5;
        while (v.size() < n) {
            const auto x = static_cast<std::int64_t>(rng() % alphabet);
            if (round % 2 == 0 && !v.empty() && v.back() == x) continue;
            v.push_back(x);
        }
        const ValueArray a(v);
        for (Scheme s : {Scheme::joint, Scheme::colored, Scheme::general}) {
            if (s != Scheme::general && a.first_consecutive_equal()) continue;
            const Encoding e = encode_array(a, s);
            const Bytes bytes = serialize(e);
            REQUIRE(deserialize(bytes) == e);
            const DecodedContainer d(deserialize(bytes));
            REQUIRE(d.scheme() == s);
            REQUIRE(d.n() == n);
            REQUIRE(serialize(d.reencode()) == bytes);
        }
    }
}

TEST_CASE("decoded containers answer queries") {
    const DecodedContainer colored(deserialize(serialize(encode_array(kSample, Scheme::colored))));
    CHECK(colored.answer(QueryKind::nsv, 1) == 6);
    const DecodedContainer joint(deserialize(serialize(encode_array(kSample, Scheme::joint))));
    CHECK(joint.answer(QueryKind::psv, 4) == 3);
    CHECK_FALSE(joint.supports(QueryKind::nsv));
    CHECK_THROWS_WITH_AS(joint.answer(QueryKind::nsv, 1), "scheme 1 answers psv/plv only", argument_error);
    const DecodedContainer general(deserialize(serialize(encode_array(ValueArray{2, 1, 1, 3}, Scheme::general))));
    CHECK(general.answer(QueryKind::nsv, 1) == 2);
    CHECK_THROWS_AS(general.answer(QueryKind::nsv, 5), argument_error);
}

TEST_CASE("tree dumps") {
    const DecodedContainer colored(encode_array(kSample, Scheme::colored));
    CHECK(colored.dump_trees() ==
          "cMin(A): 0b(1b(2r 3b(4b)) 5r 6b(7b(8r 9b)))\ncMax(A): 0b(1r 2r(3r 4r(5b(6b)) 7b) 8b(9b))\n");
    const DecodedContainer joint(encode_array(kSample, Scheme::joint));
    CHECK(joint.dump_trees() == "Min(A): 0(1(2 3(4)) 5 6(7(8 9)))\nMax(A): 0(1 2(3 4(5(6)) 7) 8(9))\n");
    const DecodedContainer general(encode_array(ValueArray{2, 1, 1, 3}, Scheme::general));
    CHECK(general.dump_trees() == "C: 010\ncMin(A'): 0b(1r 2b(3b))\ncMax(A'): 0b(1r(2b) 3b)\n");
}

TEST_CASE("stats lines") {
    CHECK(stats_line(encode_array(kSample, Scheme::joint)).find("payload=26 bits (3n-1=26)") != std::string::npos);
    CHECK(stats_line(encode_array(kSample, Scheme::colored)).find("payload=31 bits, bound 33") != std::string::npos);
    const BitBudget b = bit_budget(encode_array(kSample, Scheme::general));
    CHECK(b.payload_bits == 31);
    CHECK(b.bound_bits == 34);
}

TEST_CASE("corrupt containers") {
    const Bytes good = serialize(encode_array(kSample, Scheme::colored));
    auto mutated = [&](auto f) {
        Bytes b = good;
        f(b);
        return b;
    };
    CHECK_THROWS_AS(deserialize(Bytes{'N', 'L', 'V'}), truncation_error);
    CHECK_THROWS_AS(deserialize(mutated([](Bytes& b) { b[0] = 'X'; })), corruption_error);
    CHECK_THROWS_AS(deserialize(mutated([](Bytes& b) { b[4] = 2; })), corruption_error);
    CHECK_THROWS_AS(deserialize(mutated([](Bytes& b) { b[5] = 4; })), corruption_error);
    CHECK_THROWS_AS(deserialize(mutated([](Bytes& b) { b[6] = 0; })), corruption_error);
    CHECK_THROWS_AS(deserialize(mutated([](Bytes& b) { b.push_back(0); })), corruption_error);
    CHECK_THROWS_AS(deserialize(mutated([](Bytes& b) { b.pop_back(); })), corruption_error);
    // Padding bit after the 31 payload bits.
    CHECK_THROWS_AS(deserialize(mutated([](Bytes& b) { b.back() |= 1; })), corruption_error);
    // u_gb length 5 leaves a neutral count whose packed size mismatches.
    CHECK_THROWS_AS(deserialize(mutated([](Bytes& b) { b[7] = 5; })), corruption_error);
    // A well-formed header whose degree bits decode to garbage.
    CHECK_THROWS_AS(DecodedContainer(deserialize(mutated([](Bytes& b) { b[13] ^= 0x40; }))), corruption_error);

    const Bytes joint = serialize(encode_array(kSample, Scheme::joint));
    Bytes bad_u = joint;
    bad_u[7] = 7;
    bad_u[8] = 10;
    CHECK_THROWS_AS(deserialize(bad_u), corruption_error);
}
