#include "nvenc/codec_general.hpp"

#include <cmath>
#include <string>

#include "nvenc/query_engine.hpp"

namespace nvenc {

GeneralQueries::GeneralQueries(RunStructure runs, ColoredTree cmin, ColoredTree cmax)
    : runs_(std::move(runs)), reduced_(std::move(cmin), std::move(cmax)) {
    if (reduced_.n() != runs_.reduced_size())
        throw corruption_error("colored part has " + std::to_string(reduced_.n()) + " elements, runs imply " +
                               std::to_string(runs_.reduced_size()));
}

std::size_t GeneralQueries::answer(QueryKind kind, std::size_t i) const {
    const std::size_t reduced_index = runs_.map_query_index(i);
    return runs_.map_answer_to_original(reduced_.answer(kind, reduced_index), kind);
}

namespace {

BitStream rank_c_bits(const RunStructure& runs) {
    const std::size_t length = runs.original_size() - 1;
    BitStream out;
    write_big(out, subset_rank(runs.c_bits()).rank, subset_rank_bits(length, runs.ones()));
    return out;
}

} // namespace

GeneralEncoding encode_general(const ValueArray& a) {
    RunStructure runs = compute_runs(a);
    GeneralEncoding e;
    e.n = a.size();
    e.k = runs.ones();
    e.c_rank_bits = rank_c_bits(runs);
    e.colored = encode_colored(runs.reduced_array());
    return e;
}

GeneralEncoding encode_general(const GeneralQueries& decoded) {
    GeneralEncoding e;
    e.n = decoded.n();
    e.k = decoded.runs().ones();
    e.c_rank_bits = rank_c_bits(decoded.runs());
    e.colored = encode_colored(decoded.reduced().cmin(), decoded.reduced().cmax());
    return e;
}

GeneralQueries decode_general(const GeneralEncoding& e) {
    if (e.n == 0) throw empty_array_error();
    if (e.k >= e.n) throw corruption_error("run count k must be below n");
    const std::size_t length = e.n - 1;
    if (e.c_rank_bits.size() != subset_rank_bits(length, e.k))
        throw corruption_error("run rank field has " + std::to_string(e.c_rank_bits.size()) + " bits, expected " +
                               std::to_string(subset_rank_bits(length, e.k)));
    BitReader reader(e.c_rank_bits);
    const mpz_class rank = read_big(reader, e.c_rank_bits.size());
    std::vector<bool> c_bits(length, false);
    for (std::size_t p : subset_unrank(e.k, rank, length)) c_bits[p] = true;

    RunStructure runs = RunStructure::from_bits(std::move(c_bits));
    if (e.colored.n != runs.reduced_size())
        throw corruption_error("colored part declares " + std::to_string(e.colored.n) + " elements, expected " +
                               std::to_string(runs.reduced_size()));
    auto [cmin, cmax] = decode_colored(e.colored);
    return GeneralQueries(std::move(runs), std::move(cmin), std::move(cmax));
}

double log2_binomial(std::size_t n, std::size_t k) {
    if (k > n) throw argument_error("binomial with k > n");
    const long double ln = std::lgammal(static_cast<long double>(n) + 1) -
                           std::lgammal(static_cast<long double>(k) + 1) -
                           std::lgammal(static_cast<long double>(n - k) + 1);
    return static_cast<double>(ln / std::log(2.0L));
}

SplitBoundSides split_bound_sides(double c, std::size_t n, std::size_t k) {
    if (!(c > 0) || !std::isfinite(c)) throw argument_error("split bound needs a positive finite constant c");
    if (k > n) throw argument_error("split bound needs 0 <= k <= n");
    return {c * static_cast<double>(n - k) + log2_binomial(n, k),
            std::log2(std::exp2(c) + 1.0) * static_cast<double>(n)};
}

bool split_bound_check(double c, std::size_t n, std::size_t k) {
    const SplitBoundSides s = split_bound_sides(c, n, k);
    return s.lhs <= s.rhs + 1e-6 * static_cast<double>(n);
}

double general_bound_bits(std::size_t n) {
    const double log_n = n > 1 ? std::ceil(std::log2(static_cast<double>(n))) : 0.0;
    return std::log2(13.0) * static_cast<double>(n) + 2.0 * log_n + 96.0;
}

} // namespace nvenc
