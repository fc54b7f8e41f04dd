// nvenc: encode arrays into nearest-smaller/larger-value bitstreams and
// answer PSV/PLV/NSV/NLV queries from the encodings alone.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nvenc/container.hpp"
#include "nvenc/fuzz.hpp"

namespace {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kParse = 2,
    kPrecondition = 3,
    kCorruption = 4,
    kFuzzFailure = 5,
};

class io_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::vector<std::uint8_t> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, const std::vector<std::uint8_t>& bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw io_error("cannot create '" + path + "'");
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw io_error("write to '" + path + "' failed");
}

nvenc::Encoding load_container(const std::string& path) {
    const auto bytes = read_file(path);
    return nvenc::deserialize(bytes);
}

int cmd_encode(const std::string& in_path, const std::string& scheme_name, const std::string& out_path) {
    const auto raw = read_file(in_path);
    const nvenc::ValueArray a = nvenc::parse_array_text(std::string_view(reinterpret_cast<const char*>(raw.data()), raw.size()));
    const nvenc::Encoding e = nvenc::encode_array(a, nvenc::parse_scheme(scheme_name));
    write_file(out_path, nvenc::serialize(e));
    std::cout << nvenc::stats_line(e) << '\n';
    return kOk;
}

int cmd_decode(const std::string& in_path, bool dump_trees) {
    const nvenc::Encoding e = load_container(in_path);
    const nvenc::DecodedContainer decoded(e);
    std::cout << "scheme=" << nvenc::to_string(decoded.scheme()) << " n=" << decoded.n() << " decoded\n";
    if (dump_trees) std::cout << decoded.dump_trees();
    return kOk;
}

int cmd_query(const std::string& in_path, const std::string& kind_name, std::size_t index) {
    const nvenc::QueryKind kind = nvenc::parse_query_kind(kind_name);
    const nvenc::DecodedContainer decoded(load_container(in_path));
    std::cout << decoded.answer(kind, index) << '\n';
    return kOk;
}

int cmd_stats(const std::string& in_path) {
    std::cout << nvenc::stats_line(load_container(in_path)) << '\n';
    return kOk;
}

std::string describe(const std::vector<std::int64_t>& values) {
    std::ostringstream out;
    for (std::size_t i = 0; i < values.size(); ++i) out << (i ? " " : "") << values[i];
    return out.str();
}

int cmd_fuzz(const nvenc::FuzzOptions& options) {
    const nvenc::FuzzReport report = nvenc::run_fuzz(options);
    for (const auto& f : report.failures) {
        std::cout << "FAIL [" << describe(f.array) << "]: " << f.message << '\n'
                  << "  reproducer: " << describe(f.minimized) << '\n';
    }
    std::cout << report.arrays << " arrays, " << report.checks << " checks passed, " << report.failures.size()
              << " failures\n";
    return report.failures.empty() ? kOk : kFuzzFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Nearest smaller/larger value encodings"};
    app.require_subcommand(1);

    std::string in_path, out_path, scheme = "general", kind;
    std::size_t index = 0;
    bool dump_trees = false;
    nvenc::FuzzOptions fuzz;

    auto* encode = app.add_subcommand("encode", "Encode an integer array file into a container");
    encode->add_option("--scheme", scheme, "joint | colored | general")->check(CLI::IsMember({"joint", "colored", "general"}));
    encode->add_option("--in", in_path, "Array text file (whitespace-separated integers)")->required();
    encode->add_option("--out", out_path, "Output container")->required();

    auto* decode = app.add_subcommand("decode", "Rebuild the trees stored in a container");
    decode->add_option("--in", in_path, "Container file")->required();
    decode->add_flag("--dump-trees", dump_trees, "Print the trees in parenthesized form");

    auto* query = app.add_subcommand("query", "Answer one query from a container");
    query->add_option("--in", in_path, "Container file")->required();
    query->add_option("--kind", kind, "psv | plv | nsv | nlv")->required()->check(CLI::IsMember({"psv", "plv", "nsv", "nlv"}));
    query->add_option("--index", index, "1-based index")->required();

    auto* stats = app.add_subcommand("stats", "Report payload size against the bound");
    stats->add_option("--in", in_path, "Container file")->required();

    auto* fuzz_cmd = app.add_subcommand("fuzz", "Randomized or exhaustive self-check");
    fuzz_cmd->add_option("--count", fuzz.count, "Number of random arrays");
    fuzz_cmd->add_option("--max-n", fuzz.max_n, "Largest array length")->check(CLI::PositiveNumber);
    fuzz_cmd->add_option("--alphabet", fuzz.alphabet, "Values drawn from 1..K")->check(CLI::PositiveNumber);
    fuzz_cmd->add_option("--seed", fuzz.seed, "RNG seed");
    fuzz_cmd->add_flag("--exhaustive", fuzz.exhaustive, "Every array of length 1..max-n over 1..K");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*encode) return cmd_encode(in_path, scheme, out_path);
        if (*decode) return cmd_decode(in_path, dump_trees);
        if (*query) return cmd_query(in_path, kind, index);
        if (*stats) return cmd_stats(in_path);
        if (*fuzz_cmd) return cmd_fuzz(fuzz);
    } catch (const nvenc::parse_error& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kParse;
    } catch (const nvenc::empty_array_error& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kParse;
    } catch (const nvenc::precondition_error& e) {
        std::cerr << "precondition violated: " << e.what() << '\n';
        return kPrecondition;
    } catch (const nvenc::corruption_error& e) {
        std::cerr << "corrupt container: " << e.what() << '\n';
        return kCorruption;
    } catch (const nvenc::argument_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const io_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
