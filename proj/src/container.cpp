#include "nvenc/container.hpp"

#include <cmath>
#include <cstdio>
#include <string>

namespace nvenc {

std::string_view to_string(Scheme scheme) {
    switch (scheme) {
    case Scheme::joint: return "joint";
    case Scheme::colored: return "colored";
    case Scheme::general: return "general";
    }
    return "?";
}

Scheme parse_scheme(std::string_view text) {
    if (text == "joint" || text == "1") return Scheme::joint;
    if (text == "colored" || text == "2") return Scheme::colored;
    if (text == "general" || text == "3") return Scheme::general;
    throw argument_error("unknown scheme '" + std::string(text) + "'");
}

void write_varint(std::vector<std::uint8_t>& out, std::uint64_t value) {
    while (value >= 0x80) {
        out.push_back(static_cast<std::uint8_t>(value | 0x80));
        value >>= 7;
    }
    out.push_back(static_cast<std::uint8_t>(value));
}

std::uint64_t read_varint(std::span<const std::uint8_t> in, std::size_t& pos) {
    std::uint64_t value = 0;
    for (unsigned shift = 0; shift < 64; shift += 7) {
        if (pos >= in.size()) throw truncation_error("varint runs past end of header");
        const std::uint8_t byte = in[pos++];
        if (shift == 63 && (byte & 0x7E)) throw corruption_error("varint overflows 64 bits");
        value |= static_cast<std::uint64_t>(byte & 0x7F) << shift;
        if (!(byte & 0x80)) return value;
    }
    throw corruption_error("varint longer than 10 bytes");
}

Scheme scheme_of(const Encoding& e) { return static_cast<Scheme>(e.index() + 1); }

std::size_t element_count(const Encoding& e) {
    return std::visit([](const auto& x) { return x.n; }, e);
}

std::size_t payload_bits(const Encoding& e) {
    return std::visit([](const auto& x) { return x.payload_bits(); }, e);
}

Encoding encode_array(const ValueArray& a, Scheme scheme) {
    switch (scheme) {
    case Scheme::joint: return encode_joint(a);
    case Scheme::colored: return encode_colored(a);
    case Scheme::general: return encode_general(a);
    }
    throw argument_error("unknown scheme");
}

namespace {

void write_colored_lengths(std::vector<std::uint8_t>& out, const ColoredEncoding& e) {
    write_varint(out, e.u_gb.size());
    write_varint(out, e.v_bad.size());
    write_varint(out, packed_trit_bits(e.v_neutral.size()));
    write_varint(out, e.t_min.size());
    write_varint(out, e.t_max.size());
}

void append_colored_payload(BitStream& payload, const ColoredEncoding& e) {
    payload.append(e.u_gb);
    payload.append(e.v_bad);
    pack_trits(e.v_neutral, payload);
    payload.append(e.t_min);
    payload.append(e.t_max);
}

BitStream take(BitReader& in, std::size_t bits) {
    if (in.remaining() < bits) throw truncation_error("segment runs past end of payload");
    BitStream out;
    for (std::size_t i = 0; i < bits; ++i) out.push_back(in.read_bit());
    return out;
}

struct ColoredLengths {
    std::size_t u_gb, v_bad, packed, t_min, t_max;
    std::size_t total() const { return u_gb + v_bad + packed + t_min + t_max; }
};

std::size_t read_length(std::span<const std::uint8_t> in, std::size_t& pos) {
    const std::uint64_t v = read_varint(in, pos);
    if (v > std::uint64_t{8} * in.size()) throw corruption_error("segment length exceeds file size");
    return static_cast<std::size_t>(v);
}

ColoredLengths read_colored_lengths(std::span<const std::uint8_t> in, std::size_t& pos) {
    ColoredLengths l{};
    l.u_gb = read_length(in, pos);
    l.v_bad = read_length(in, pos);
    l.packed = read_length(in, pos);
    l.t_min = read_length(in, pos);
    l.t_max = read_length(in, pos);
    return l;
}

ColoredEncoding read_colored_payload(BitReader& in, std::size_t n, const ColoredLengths& l) {
    ColoredEncoding e;
    e.n = n;
    if (l.u_gb > n - 1) throw corruption_error("u_gb longer than the number of inner indices");
    if (l.v_bad > l.u_gb) throw corruption_error("v_bad longer than u_gb");
    const std::size_t neutral = n - 1 - l.u_gb;
    if (l.packed != packed_trit_bits(neutral))
        throw corruption_error("packed v_neutral has " + std::to_string(l.packed) + " bits, expected " +
                               std::to_string(packed_trit_bits(neutral)));
    e.u_gb = take(in, l.u_gb);
    e.v_bad = take(in, l.v_bad);
    e.g = l.u_gb - l.v_bad;
    e.v_neutral = unpack_trits(in, neutral);
    e.t_min = take(in, l.t_min);
    e.t_max = take(in, l.t_max);
    return e;
}

std::size_t read_element_count(std::span<const std::uint8_t> in, std::size_t& pos) {
    const std::uint64_t n = read_varint(in, pos);
    if (n == 0) throw corruption_error("container declares an empty array");
    if (n > kMaxElements) throw corruption_error("container declares more than 2^32 elements");
    return static_cast<std::size_t>(n);
}

} // namespace

std::vector<std::uint8_t> serialize(const Encoding& e) {
    std::vector<std::uint8_t> out(std::begin(kMagic), std::end(kMagic));
    out.push_back(kFormatVersion);
    out.push_back(static_cast<std::uint8_t>(scheme_of(e)));
    write_varint(out, element_count(e));

    BitStream payload;
    if (const auto* j = std::get_if<JointEncoding>(&e)) {
        write_varint(out, j->u.size());
        write_varint(out, j->t_min.size());
        write_varint(out, j->t_max.size());
        payload.append(j->u);
        payload.append(j->t_min);
        payload.append(j->t_max);
    } else if (const auto* c = std::get_if<ColoredEncoding>(&e)) {
        write_colored_lengths(out, *c);
        append_colored_payload(payload, *c);
    } else {
        const auto& gen = std::get<GeneralEncoding>(e);
        write_varint(out, gen.k);
        write_colored_lengths(out, gen.colored);
        payload.append(gen.c_rank_bits);
        append_colored_payload(payload, gen.colored);
    }
    out.insert(out.end(), payload.bytes().begin(), payload.bytes().end());
    return out;
}

Encoding deserialize(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 6) throw truncation_error("file shorter than the container header");
    if (!std::equal(std::begin(kMagic), std::end(kMagic), bytes.begin())) throw corruption_error("bad magic");
    if (bytes[4] != kFormatVersion) throw corruption_error("unsupported container version " + std::to_string(bytes[4]));
    const std::uint8_t scheme_byte = bytes[5];
    if (scheme_byte < 1 || scheme_byte > 3) throw corruption_error("unknown scheme id " + std::to_string(scheme_byte));
    const auto scheme = static_cast<Scheme>(scheme_byte);

    std::size_t pos = 6;
    const std::size_t n = read_element_count(bytes, pos);

    std::size_t k = 0;
    std::size_t rank_bits = 0;
    std::size_t lengths[3] = {};
    ColoredLengths colored{};
    std::size_t total = 0;
    if (scheme == Scheme::joint) {
        for (auto& l : lengths) {
            l = read_length(bytes, pos);
            total += l;
        }
        if (lengths[0] != n - 1) throw corruption_error("U must have n-1 bits");
    } else {
        if (scheme == Scheme::general) {
            const std::uint64_t k_raw = read_varint(bytes, pos);
            if (k_raw >= n) throw corruption_error("run count k must be below n");
            k = static_cast<std::size_t>(k_raw);
        }
        colored = read_colored_lengths(bytes, pos);
        total = colored.total();
        // The colored part needs at least two bits per element, which also
        // bounds the cost of the binomial below.
        if (total < 2 * (n - k)) throw corruption_error("payload too short for the declared element count");
        if (scheme == Scheme::general) rank_bits = subset_rank_bits(n - 1, k);
        total += rank_bits;
    }

    const std::size_t payload_bytes = bytes.size() - pos;
    if (payload_bytes != (total + 7) / 8)
        throw corruption_error("payload has " + std::to_string(payload_bytes) + " bytes, segment lengths imply " +
                               std::to_string((total + 7) / 8));
    const BitStream payload = BitStream::from_bytes(bytes.subspan(pos), total);
    BitReader in(payload);

    switch (scheme) {
    case Scheme::joint: {
        JointEncoding e;
        e.n = n;
        e.u = take(in, lengths[0]);
        e.t_min = take(in, lengths[1]);
        e.t_max = take(in, lengths[2]);
        return e;
    }
    case Scheme::colored:
        return read_colored_payload(in, n, colored);
    case Scheme::general: {
        GeneralEncoding e;
        e.n = n;
        e.k = k;
        e.c_rank_bits = take(in, rank_bits);
        e.colored = read_colored_payload(in, n - k, colored);
        return e;
    }
    }
    throw corruption_error("unknown scheme");
}

namespace {

std::variant<JointQueries, ColoredQueries, GeneralQueries> decode_any(const Encoding& e) {
    if (const auto* j = std::get_if<JointEncoding>(&e)) {
        auto [min_tree, max_tree] = decode_joint(*j);
        return JointQueries(std::move(min_tree), std::move(max_tree));
    }
    if (const auto* c = std::get_if<ColoredEncoding>(&e)) {
        auto [cmin, cmax] = decode_colored(*c);
        return ColoredQueries(std::move(cmin), std::move(cmax));
    }
    return decode_general(std::get<GeneralEncoding>(e));
}

} // namespace

DecodedContainer::DecodedContainer(const Encoding& e) : queries_(decode_any(e)) {}

Scheme DecodedContainer::scheme() const noexcept { return static_cast<Scheme>(queries_.index() + 1); }

std::size_t DecodedContainer::n() const noexcept {
    return std::visit([](const auto& q) { return q.n(); }, queries_);
}

bool DecodedContainer::supports(QueryKind kind) const noexcept {
    return std::visit([kind](const auto& q) { return q.supports(kind); }, queries_);
}

std::size_t DecodedContainer::answer(QueryKind kind, std::size_t i) const {
    return std::visit([&](const auto& q) { return q.answer(kind, i); }, queries_);
}

Encoding DecodedContainer::reencode() const {
    if (const auto* j = std::get_if<JointQueries>(&queries_)) return encode_joint(j->min_tree(), j->max_tree());
    if (const auto* c = std::get_if<ColoredQueries>(&queries_)) return encode_colored(c->cmin(), c->cmax());
    return encode_general(std::get<GeneralQueries>(queries_));
}

std::string DecodedContainer::dump_trees() const {
    if (const auto* j = std::get_if<JointQueries>(&queries_))
        return "Min(A): " + j->min_tree().to_text() + "\nMax(A): " + j->max_tree().to_text() + "\n";
    if (const auto* c = std::get_if<ColoredQueries>(&queries_))
        return "cMin(A): " + c->cmin().to_text() + "\ncMax(A): " + c->cmax().to_text() + "\n";
    const auto& g = std::get<GeneralQueries>(queries_);
    std::string c_bits;
    for (bool b : g.runs().c_bits()) c_bits += b ? '1' : '0';
    return "C: " + c_bits + "\ncMin(A'): " + g.reduced().cmin().to_text() + "\ncMax(A'): " +
           g.reduced().cmax().to_text() + "\n";
}

BitBudget bit_budget(const Encoding& e) {
    const std::size_t n = element_count(e);
    const double dn = static_cast<double>(n);
    switch (scheme_of(e)) {
    case Scheme::joint: return {payload_bits(e), 3 * n - 1, 3.0 - 1.0 / dn};
    case Scheme::colored: {
        const double rate = 2.0 + std::log2(3.0);
        return {payload_bits(e), static_cast<std::size_t>(std::ceil(rate * dn)), rate};
    }
    case Scheme::general: {
        const double rate = std::log2(13.0);
        return {payload_bits(e), static_cast<std::size_t>(std::ceil(rate * dn)), rate};
    }
    }
    throw argument_error("unknown scheme");
}

std::string stats_line(const Encoding& e) {
    const BitBudget b = bit_budget(e);
    const std::size_t n = element_count(e);
    char rates[96];
    std::snprintf(rates, sizeof rates, "bits/n=%.4f rate-bound=%.4f", static_cast<double>(b.payload_bits) / static_cast<double>(n),
                  b.rate_bound);
    std::string line = "scheme=" + std::string(to_string(scheme_of(e))) + " n=" + std::to_string(n) +
                       " payload=" + std::to_string(b.payload_bits) + " bits";
    if (scheme_of(e) == Scheme::joint) {
        line += " (3n-1=" + std::to_string(b.bound_bits) + ")";
    } else {
        line += ", bound " + std::to_string(b.bound_bits);
    }
    return line + " " + rates;
}

} // namespace nvenc
