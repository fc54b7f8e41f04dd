#include "nvenc/fuzz.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "nvenc/codec_colored.hpp"
#include "nvenc/codec_general.hpp"
#include "nvenc/codec_joint.hpp"
#include "nvenc/container.hpp"
#include "nvenc/heap_builder.hpp"
#include "nvenc/query_engine.hpp"

namespace nvenc {

std::vector<std::int64_t> generate_array(Distribution dist, std::size_t n, std::int64_t alphabet, std::mt19937_64& rng) {
    if (n == 0) throw empty_array_error();
    if (alphabet < 1) throw argument_error("alphabet must be at least 1");
    std::vector<std::int64_t> values(n);
    std::uniform_int_distribution<std::int64_t> letter(1, alphabet);
    switch (dist) {
    case Distribution::distinct:
        std::iota(values.begin(), values.end(), std::int64_t{1});
        std::shuffle(values.begin(), values.end(), rng);
        break;
    case Distribution::small_alphabet:
        for (auto& v : values) v = letter(rng);
        break;
    case Distribution::long_runs: {
        std::uniform_int_distribution<std::size_t> run_length(1, std::max<std::size_t>(2, std::min<std::size_t>(n, 16)));
        for (std::size_t i = 0; i < n;) {
            const std::int64_t v = letter(rng);
            for (std::size_t len = run_length(rng); len > 0 && i < n; --len) values[i++] = v;
        }
        break;
    }
    }
    return values;
}

std::uint64_t array_seed(std::uint64_t seed, std::uint64_t index) {
    // splitmix64 finalizer
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

namespace {

struct CheckFailed {
    std::string message;
};

class Checker {
public:
    Checker(const ValueArray& a, std::size_t& checks, const CheckOptions& options)
        : a_(a), checks_(checks), options_(options) {
        const std::size_t n = a.size();
        if (n <= options.full_check_limit) {
            indices_.resize(n);
            std::iota(indices_.begin(), indices_.end(), std::size_t{1});
        } else {
            const std::size_t step = n / options.sampled_indices + 1;
            for (std::size_t i = 1; i <= n; i += step) indices_.push_back(i);
            for (std::size_t i = 2; i <= 4; ++i) indices_.push_back(i);
            indices_.push_back(n - 1);
            indices_.push_back(n);
        }
    }

    void expect(bool ok, const std::string& what) {
        if (!ok) throw CheckFailed{what};
        ++checks_;
    }

    template <typename Answer>
    void expect_queries(const std::string& label, std::initializer_list<QueryKind> kinds, Answer answer) {
        for (QueryKind kind : kinds) {
            for (std::size_t i : indices_) {
                const std::size_t got = answer(kind, i);
                const std::size_t want = oracle(a_, kind, i);
                if (got != want) {
                    std::ostringstream msg;
                    msg << label << ": " << to_string(kind) << "(" << i << ") = " << got << ", oracle says " << want;
                    throw CheckFailed{msg.str()};
                }
            }
            ++checks_;
        }
    }

    void expect_round_trip(const std::string& label, const Encoding& e) {
        const auto bytes = serialize(e);
        const Encoding parsed = deserialize(bytes);
        expect(parsed == e, label + ": deserialize(serialize(e)) differs from e");
        const DecodedContainer decoded(parsed);
        expect(serialize(decoded.reencode()) == bytes, label + ": re-encoding the decoded trees changes the bytes");
        const bool all_kinds = decoded.supports(QueryKind::nsv);
        if (all_kinds) {
            expect_queries(label, {QueryKind::psv, QueryKind::plv, QueryKind::nsv, QueryKind::nlv},
                           [&](QueryKind k, std::size_t i) { return decoded.answer(k, i); });
        } else {
            expect_queries(label, {QueryKind::psv, QueryKind::plv},
                           [&](QueryKind k, std::size_t i) { return decoded.answer(k, i); });
        }
    }

    void run() {
        const std::size_t n = a_.size();
        const OrdinalTree min_tree = build_min_heap(a_);
        const OrdinalTree max_tree = build_max_heap(a_);
        for (std::size_t i : indices_) {
            if (min_tree.parent(i) != oracle_psv(a_, i)) throw CheckFailed{"Min(A) parent differs from PSV at " + std::to_string(i)};
            if (max_tree.parent(i) != oracle_plv(a_, i)) throw CheckFailed{"Max(A) parent differs from PLV at " + std::to_string(i)};
        }
        ++checks_;
        expect(min_tree.is_consistent() && max_tree.is_consistent(), "tree parent/children maps disagree");
        expect(min_tree.is_preorder_labeled() && max_tree.is_preorder_labeled(), "tree labels are not preorder ranks");
        expect(check_sibling_monotonicity(min_tree, a_, HeapOrder::min), "Min(A) siblings not non-increasing");
        expect(check_sibling_monotonicity(max_tree, a_, HeapOrder::max), "Max(A) siblings not non-decreasing");

        const ColoredTree cmin = colorize(min_tree, a_);
        const ColoredTree cmax = colorize(max_tree, a_);
        expect(check_coloring(cmin, a_) && check_coloring(cmax, a_), "coloring rule violated");
        expect_queries("trees of A", {QueryKind::psv, QueryKind::plv, QueryKind::nsv, QueryKind::nlv},
                       [&](QueryKind k, std::size_t i) { return query_trees(cmin, cmax, k, i); });

        if (!a_.first_consecutive_equal()) {
            if (auto i = find_duality_violation(min_tree, max_tree))
                throw CheckFailed{"leaf/internal duality fails at " + std::to_string(*i)};
            ++checks_;
            expect(check_red_leaves(cmin) && check_red_leaves(cmax), "a leaf with a right sibling is blue");
            const GoodBadCount gb = count_good_bad(min_tree, max_tree);
            expect(gb.good == gb.bad, "good count " + std::to_string(gb.good) + " != bad count " + std::to_string(gb.bad));

            const Encoding joint = encode_joint(min_tree, max_tree);
            expect(payload_bits(joint) == 3 * n - 1, "joint payload is not 3n-1 bits");
            expect_round_trip("joint", joint);

            const ColoredEncoding colored = encode_colored(cmin, cmax);
            expect(colored.payload_bits() == colored_size_bits(n, gb.good, n - 1 - 2 * gb.good),
                   "colored payload differs from 2n + 3g + packed(n-1-2g)");
            expect(static_cast<double>(colored.payload_bits()) <= 3.586 * static_cast<double>(n) + 70,
                   "colored payload above 3.586n + 70");
            expect_round_trip("colored", colored);
        }

        const GeneralEncoding general = encode_general(a_);
        expect(static_cast<double>(general.payload_bits()) <= general_bound_bits(n),
               "general payload " + std::to_string(general.payload_bits()) + " above log2(13)n + 2ceil(log2 n) + 96");
        expect_round_trip("general", general);
    }

private:
    const ValueArray& a_;
    std::size_t& checks_;
    const CheckOptions& options_;
    std::vector<std::size_t> indices_;
};

std::string describe(const std::vector<std::int64_t>& values) {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << values[i];
    out << ']';
    return out.str();
}

} // namespace

std::optional<std::string> check_array(const ValueArray& a, std::size_t& checks, const CheckOptions& options) {
    try {
        Checker(a, checks, options).run();
    } catch (const CheckFailed& f) {
        return f.message;
    } catch (const std::exception& e) {
        return std::string("unexpected exception: ") + e.what();
    }
    return std::nullopt;
}

std::vector<std::int64_t> minimize_failure(std::vector<std::int64_t> values,
                                           const std::function<bool(const std::vector<std::int64_t>&)>& fails) {
    bool progress = true;
    while (progress && values.size() > 1) {
        progress = false;
        for (std::size_t drop = 0; drop < values.size() && values.size() > 1; ++drop) {
            std::vector<std::int64_t> candidate = values;
            candidate.erase(candidate.begin() + static_cast<std::ptrdiff_t>(drop));
            if (fails(candidate)) {
                values = std::move(candidate);
                progress = true;
                --drop;
            }
        }
    }
    return values;
}

namespace {

void check_one(std::vector<std::int64_t> values, const FuzzOptions& options, FuzzReport& report) {
    ++report.arrays;
    const ValueArray a(values);
    auto failure = check_array(a, report.checks, options.check);
    if (!failure) return;
    FuzzFailure f;
    f.message = *failure;
    f.minimized = minimize_failure(values, [&](const std::vector<std::int64_t>& v) {
        std::size_t ignored = 0;
        return check_array(ValueArray(v), ignored, options.check).has_value();
    });
    f.array = std::move(values);
    f.message += " (minimized reproducer " + describe(f.minimized) + ")";
    report.failures.push_back(std::move(f));
}

} // namespace

FuzzReport run_fuzz(const FuzzOptions& options) {
    if (options.max_n == 0) throw argument_error("max_n must be at least 1");
    if (options.alphabet < 1) throw argument_error("alphabet must be at least 1");
    FuzzReport report;
    if (options.exhaustive) {
        double total = 0;
        for (std::size_t len = 1; len <= options.max_n; ++len)
            total += std::pow(static_cast<double>(options.alphabet), static_cast<double>(len));
        if (total > 1e7) throw argument_error("exhaustive sweep would exceed 10^7 arrays");
        for (std::size_t len = 1; len <= options.max_n; ++len) {
            std::vector<std::int64_t> values(len, 1);
            while (true) {
                check_one(values, options, report);
                std::size_t pos = len;
                while (pos > 0 && values[pos - 1] == options.alphabet) values[--pos] = 1;
                if (pos == 0) break;
                ++values[pos - 1];
            }
        }
        return report;
    }
    for (std::size_t i = 0; i < options.count; ++i) {
        std::mt19937_64 rng(array_seed(options.seed, i));
        std::uniform_int_distribution<std::size_t> length(1, options.max_n);
        const std::size_t n = length(rng);
        const auto dist = static_cast<Distribution>(i % 3);
        check_one(generate_array(dist, n, options.alphabet, rng), options, report);
    }
    return report;
}

} // namespace nvenc
