#include "strucprof/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include "strucprof/io.hpp"
#include "strucprof/profile.hpp"
#include "strucprof/series.hpp"
#include "strucprof/verify.hpp"

namespace strucprof {

namespace {

int env_threads() {
    const char* raw = std::getenv("STRUCPROF_THREADS");
    if (!raw) return 0;
    try {
        const int t = std::stoi(raw);
        return t > 0 ? t : 0;
    } catch (const std::logic_error&) {
        return 0;
    }
}

std::vector<BigInt> parse_coeffs(const std::string& csv) {
    std::vector<BigInt> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw ParseError("empty coefficient");
        out.emplace_back(tok);
    }
    if (out.empty()) throw ParseError("no coefficients given");
    return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"profiles and monomorphic decompositions of finite relational structures"};
    app.require_subcommand(1);
    const int threads = env_threads();

    // profile
    auto* profile_cmd = app.add_subcommand("profile", "emit a profile table");
    std::string family_desc, file_path, format = "csv";
    int max_n = -1, prefix_cap = 0;
    auto* fam_opt = profile_cmd->add_option("--family", family_desc, "family descriptor");
    auto* file_opt = profile_cmd->add_option("--file", file_path, "structure file");
    fam_opt->excludes(file_opt);
    profile_cmd->add_option("--max-n", max_n, "largest substructure size")->required();
    profile_cmd->add_option("--prefix-cap", prefix_cap, "stabilization prefix cap");
    profile_cmd->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    // components / intervals
    auto* components_cmd = app.add_subcommand("components", "coarsest monomorphic decomposition");
    std::string components_file;
    components_cmd->add_option("--file", components_file, "structure file")->required();
    auto* intervals_cmd = app.add_subcommand("intervals", "interval decomposition");
    std::string intervals_file;
    intervals_cmd->add_option("--file", intervals_file, "structure file")->required();

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "growth verdict for a family");
    std::string classify_family;
    int classify_max_n = -1;
    classify_cmd->add_option("--family", classify_family, "family descriptor")->required();
    classify_cmd->add_option("--max-n", classify_max_n, "table size")->required();

    // obstruct
    auto* obstruct_cmd = app.add_subcommand("obstruct", "embedded obstruction prefixes");
    std::string obstruct_family;
    int obstruct_prefix = 0, obstruct_target = 0;
    obstruct_cmd->add_option("--family", obstruct_family, "family descriptor")->required();
    obstruct_cmd->add_option("--prefix", obstruct_prefix, "host prefix length")->required();
    obstruct_cmd->add_option("--target", obstruct_target, "obstruction prefix length")
        ->required();

    // series
    auto* series_cmd = app.add_subcommand("series", "expand a rational power series");
    std::string num_csv, den_csv;
    int series_max_n = -1;
    series_cmd->add_option("--num", num_csv, "numerator coefficients")->required();
    series_cmd->add_option("--den", den_csv, "denominator coefficients")->required();
    series_cmd->add_option("--max-n", series_max_n, "expansion order")->required();

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run a golden suite");
    std::string suite;
    verify_cmd->add_option("--suite", suite, "suite name or 'all'")->required();

    std::vector<std::string> argv_copy = args;
    std::reverse(argv_copy.begin(), argv_copy.end());
    try {
        app.parse(argv_copy);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (*profile_cmd) {
            if (max_n < 0) throw RangeError("--max-n must be non-negative");
            ProfileTable table;
            if (fam_opt->count()) {
                StabilizationSchedule sched;
                if (prefix_cap > 0) sched.cap = prefix_cap;
                table = profile_table(parse_family(family_desc), max_n, sched, threads);
                if (!table.stabilized)
                    err << "warning: profile did not stabilize below the prefix cap\n";
            } else if (file_opt->count()) {
                RelStructure s = load_structure(file_path);
                const int clamped = std::min(max_n, s.domain_size);
                if (clamped < max_n)
                    err << "warning: --max-n clamped to the domain size "
                        << s.domain_size << '\n';
                table = profile_table_of_structure(s, file_path, clamped, threads);
            } else {
                err << "error: profile needs --family or --file\n";
                return 2;
            }
            out << (format == "json" ? table_to_json(table) + "\n" : table_to_csv(table));
            return 0;
        }
        if (*components_cmd) {
            out << components(load_structure(components_file)).serialize();
            return 0;
        }
        if (*intervals_cmd) {
            out << interval_decomposition(make_ordered(load_structure(intervals_file)))
                       .serialize();
            return 0;
        }
        if (*classify_cmd) {
            if (classify_max_n < 8) throw RangeError("classification needs --max-n >= 8");
            const ProfileTable table =
                profile_table(parse_family(classify_family), classify_max_n, {}, threads);
            out << classify_growth(table).to_string() << '\n';
            return 0;
        }
        if (*obstruct_cmd) {
            const auto hits =
                obstruction_search(parse_family(obstruct_family), obstruct_prefix, obstruct_target);
            for (std::size_t i = 0; i < hits.size(); ++i) {
                if (i) out << ',';
                out << hits[i];
            }
            out << '\n';
            return 0;
        }
        if (*series_cmd) {
            if (series_max_n < 0) throw RangeError("--max-n must be non-negative");
            const RationalSeries s =
                RationalSeries::make(parse_coeffs(num_csv), parse_coeffs(den_csv));
            out << sequence_to_string(series_expand(s, series_max_n)) << '\n';
            return 0;
        }
        if (*verify_cmd) {
            return run_suites({suite}, out, threads) ? 0 : 1;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    err << "error: no command given\n";
    return 2;
}

}  // namespace strucprof
