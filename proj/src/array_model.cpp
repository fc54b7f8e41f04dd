#include "nvenc/array_model.hpp"

#include <charconv>
#include <string>

namespace nvenc {

std::string_view to_string(QueryKind kind) {
    switch (kind) {
    case QueryKind::psv: return "psv";
    case QueryKind::plv: return "plv";
    case QueryKind::nsv: return "nsv";
    case QueryKind::nlv: return "nlv";
    }
    return "?";
}

QueryKind parse_query_kind(std::string_view text) {
    if (text == "psv") return QueryKind::psv;
    if (text == "plv") return QueryKind::plv;
    if (text == "nsv") return QueryKind::nsv;
    if (text == "nlv") return QueryKind::nlv;
    throw argument_error("unknown query kind '" + std::string(text) + "'");
}

ValueArray::ValueArray(std::vector<std::int64_t> values) : values_(std::move(values)) {
    if (values_.empty()) throw empty_array_error();
}

std::int64_t ValueArray::at(std::size_t i) const {
    if (i < 1 || i > values_.size())
        throw argument_error("index " + std::to_string(i) + " outside 1.." + std::to_string(values_.size()));
    return values_[i - 1];
}

std::optional<std::size_t> ValueArray::first_consecutive_equal() const noexcept {
    for (std::size_t j = 0; j + 1 < values_.size(); ++j)
        if (values_[j] == values_[j + 1]) return j + 1;
    return std::nullopt;
}

ValueArray parse_array_text(std::string_view text) {
    std::vector<std::int64_t> values;
    std::size_t pos = 0;
    std::size_t line = 1;
    auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; };
    while (pos < text.size()) {
        if (is_space(text[pos])) {
            if (text[pos] == '\n') ++line;
            ++pos;
            continue;
        }
        std::size_t end = pos;
        while (end < text.size() && !is_space(text[end])) ++end;
        std::string_view token = text.substr(pos, end - pos);
        // from_chars takes no '+' sign.
        std::string_view digits = token;
        if (digits.size() > 1 && digits[0] == '+' && digits[1] >= '0' && digits[1] <= '9') digits.remove_prefix(1);
        std::int64_t value = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
        if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
            throw parse_error("line " + std::to_string(line) + ": '" + std::string(token) +
                              "' is not a 64-bit integer");
        }
        values.push_back(value);
        pos = end;
    }
    if (values.empty()) throw empty_array_error();
    return ValueArray(std::move(values));
}

namespace {

void check_index(const ValueArray& a, std::size_t i) {
    if (i < 1 || i > a.size())
        throw argument_error("query index " + std::to_string(i) + " outside 1.." + std::to_string(a.size()));
}

template <typename Pred>
std::size_t scan_left(const ValueArray& a, std::size_t i, Pred pred) {
    check_index(a, i);
    for (std::size_t j = i - 1; j >= 1; --j)
        if (pred(a[j], a[i])) return j;
    return 0;
}

template <typename Pred>
std::size_t scan_right(const ValueArray& a, std::size_t i, Pred pred) {
    check_index(a, i);
    for (std::size_t j = i + 1; j <= a.size(); ++j)
        if (pred(a[j], a[i])) return j;
    return a.size() + 1;
}

} // namespace

std::size_t oracle_psv(const ValueArray& a, std::size_t i) {
    return scan_left(a, i, [](auto x, auto y) { return x < y; });
}

std::size_t oracle_plv(const ValueArray& a, std::size_t i) {
    return scan_left(a, i, [](auto x, auto y) { return x > y; });
}

std::size_t oracle_nsv(const ValueArray& a, std::size_t i) {
    return scan_right(a, i, [](auto x, auto y) { return x < y; });
}

std::size_t oracle_nlv(const ValueArray& a, std::size_t i) {
    return scan_right(a, i, [](auto x, auto y) { return x > y; });
}

std::size_t oracle(const ValueArray& a, QueryKind kind, std::size_t i) {
    switch (kind) {
    case QueryKind::psv: return oracle_psv(a, i);
    case QueryKind::plv: return oracle_plv(a, i);
    case QueryKind::nsv: return oracle_nsv(a, i);
    case QueryKind::nlv: return oracle_nlv(a, i);
    }
    throw argument_error("unknown query kind");
}

RunStructure RunStructure::from_bits(std::vector<bool> c_bits) {
    RunStructure rs;
    rs.c_bits_ = std::move(c_bits);
    rs.index_runs();
    return rs;
}

RunStructure compute_runs(const ValueArray& a) {
    std::vector<bool> bits(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) bits[i - 1] = a[i] == a[i + 1];
    RunStructure rs = RunStructure::from_bits(std::move(bits));
    std::vector<std::int64_t> reduced;
    reduced.reserve(rs.kept_positions_.size());
    for (std::size_t p : rs.kept_positions_) reduced.push_back(a[p]);
    rs.reduced_.emplace(std::move(reduced));
    return rs;
}

void RunStructure::index_runs() {
    const std::size_t n = c_bits_.size() + 1;
    k_ = 0;
    kept_positions_.clear();
    run_starts_.clear();
    rank_map_.assign(n, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        if (i == 1 || !c_bits_[i - 2]) run_starts_.push_back(i);
        if (i == n || !c_bits_[i - 1]) {
            kept_positions_.push_back(i);
        } else {
            ++k_;
        }
    }
    // Each index maps to the run end at or after it.
    std::size_t reduced = kept_positions_.size();
    for (std::size_t i = n; i >= 1; --i) {
        if (i < n && !c_bits_[i - 1]) --reduced;
        rank_map_[i - 1] = reduced;
    }
}

bool RunStructure::c_bit(std::size_t i) const {
    if (i < 1 || i >= original_size())
        throw argument_error("C index " + std::to_string(i) + " outside 1.." + std::to_string(original_size() - 1));
    return c_bits_[i - 1];
}

const ValueArray& RunStructure::reduced_array() const {
    if (!reduced_) throw argument_error("reduced array unavailable: run structure was rebuilt from bits");
    return *reduced_;
}

std::size_t RunStructure::map_query_index(std::size_t i) const {
    if (i < 1 || i > original_size())
        throw argument_error("query index " + std::to_string(i) + " outside 1.." + std::to_string(original_size()));
    return rank_map_[i - 1];
}

std::size_t RunStructure::map_answer_to_original(std::size_t reduced_answer, QueryKind kind) const {
    const std::size_t reduced_n = reduced_size();
    if (reduced_answer == 0) return 0;
    if (reduced_answer == reduced_n + 1) return original_size() + 1;
    if (reduced_answer > reduced_n)
        throw argument_error("reduced answer " + std::to_string(reduced_answer) + " outside 0.." +
                             std::to_string(reduced_n + 1));
    if (kind == QueryKind::psv || kind == QueryKind::plv) return kept_positions_[reduced_answer - 1];
    // Next-* answers point at the first element of the answering run.
    return run_starts_[reduced_answer - 1];
}

} // namespace nvenc
