#include "cli.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>

#include "CLI11.hpp"

#include "egcd/bench.hpp"
#include "egcd/core.hpp"
#include "egcd/modular.hpp"
#include "egcd/serialize.hpp"
#include "egcd/sweep.hpp"

namespace egcd::cli {

namespace {

void print_stats(std::ostream& out, const char* name, const SweepStats& s, const char* unit) {
    out << name << ": pairs=" << s.pairs << ' ' << unit << '=' << s.checks << " violations=" << s.violations
        << '\n';
}

int report_verify(std::ostream& out, std::ostream& err, std::initializer_list<std::pair<const char*, SweepStats>> parts) {
    std::uint64_t violations = 0;
    for (const auto& [name, stats] : parts) {
        violations += stats.violations;
        if (stats.first_violation) err << name << ": " << *stats.first_violation << '\n';
    }
    out << "total violations: " << violations << '\n';
    return violations == 0 ? kOk : kDomainFailure;
}

}  // namespace

int emit_checked_trace(const EgcdTrace& trace, TraceFormat format, std::ostream& out, std::ostream& err) {
    CheckResult result;
    try {
        result = check_trace(trace);
    } catch (const MalformedTrace& e) {
        result = CheckResult::fail(Clause::exit_identity, std::nullopt, e.what());
    }
    if (format == TraceFormat::csv) {
        out << trace_to_csv(trace);
    } else {
        out << to_json(trace).dump(2) << '\n';
    }
    if (!result) {
        err << "invariant violation: " << *result.violated << '\n';
        return kDomainFailure;
    }
    return kOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Extended Euclid toolkit: gcd, Bezout coefficients, modular inverses, traced runs"};
    app.require_subcommand(1);

    std::string a_text, b_text;
    bool json = false;

    auto* gcd_cmd = app.add_subcommand("gcd", "Print gcd(a, b)");
    gcd_cmd->add_option("a", a_text)->required();
    gcd_cmd->add_option("b", b_text)->required();

    auto* egcd_cmd = app.add_subcommand("egcd", "Print d x y with d = gcd(a, b) = a x + b y");
    egcd_cmd->add_option("a", a_text)->required();
    egcd_cmd->add_option("b", b_text)->required();
    egcd_cmd->add_flag("--json", json, "Emit {\"d\",\"x\",\"y\"} JSON");

    auto* inv_cmd = app.add_subcommand("inverse", "Print the inverse of a modulo m in [0, m)");
    inv_cmd->add_option("a", a_text)->required();
    inv_cmd->add_option("m", b_text)->required();

    bool csv = false;
    auto* trace_cmd = app.add_subcommand("trace", "Print the per-iteration trace after checking the loop invariant");
    trace_cmd->add_option("a", a_text)->required();
    trace_cmd->add_option("b", b_text)->required();
    auto* json_flag = trace_cmd->add_flag("--json", json, "JSON output (default)");
    trace_cmd->add_flag("--csv", csv, "CSV output")->excludes(json_flag);

    std::optional<std::size_t> random_count;
    std::size_t max_bits = 256;
    std::uint64_t seed = 1;
    std::optional<std::uint64_t> exhaustive_to;
    bool serial = false;
    auto* verify_cmd = app.add_subcommand("verify", "Run the invariant and oracle suites");
    auto* random_opt = verify_cmd->add_option("--random", random_count, "Number of random pairs");
    verify_cmd->add_option("--max-bits", max_bits, "Operand bit length ceiling for --random")
        ->needs(random_opt)
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--seed", seed, "RNG seed for --random")->needs(random_opt);
    auto* exh_opt = verify_cmd->add_option("--exhaustive-to", exhaustive_to,
                                           "Check every pair 0 <= b <= a <= K")
                        ->check(CLI::Range(std::uint64_t{0}, kOracleBound));
    exh_opt->excludes(random_opt);
    verify_cmd->add_flag("--serial", serial, "Use the single-threaded reference kernels");

    std::string variant_text = "iterative";
    std::size_t bits = 256, count = 100;
    std::uint64_t bench_seed = 1;
    bool parallel = false;
    auto* bench_cmd = app.add_subcommand("bench", "Time one variant and print a JSON report");
    bench_cmd->add_option("--variant", variant_text)->check(CLI::IsMember({"recursive", "iterative"}));
    bench_cmd->add_option("--bits", bits)->check(CLI::Range(std::size_t{2}, std::size_t{1} << 20));
    bench_cmd->add_option("--count", count)->check(CLI::PositiveNumber);
    bench_cmd->add_option("--seed", bench_seed);
    bench_cmd->add_flag("--parallel", parallel, "Run trials with OpenMP");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        if (verify_cmd->parsed() && !random_count && !exhaustive_to) {
            throw CLI::ValidationError("verify", "one of --random N or --exhaustive-to K is required");
        }
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (gcd_cmd->parsed()) {
            out << gcd(Nat::parse(a_text), Nat::parse(b_text)) << '\n';
        } else if (egcd_cmd->parsed()) {
            const BezoutTriple t = egcd_iterative(Nat::parse(a_text), Nat::parse(b_text));
            if (json) {
                out << to_json(t).dump() << '\n';
            } else {
                out << t.d << ' ' << t.x << ' ' << t.y << '\n';
            }
        } else if (inv_cmd->parsed()) {
            const Nat a = Nat::parse(a_text);
            const Modulus m(Nat::parse(b_text));
            try {
                out << mod_inverse(a, m) << '\n';
            } catch (const NonInvertible& e) {
                err << e.what() << '\n';
                return kDomainFailure;
            }
        } else if (trace_cmd->parsed()) {
            const EgcdTrace trace = egcd_traced(Nat::parse(a_text), Nat::parse(b_text));
            return emit_checked_trace(trace, csv ? TraceFormat::csv : TraceFormat::json, out, err);
        } else if (verify_cmd->parsed()) {
            const Execution exec = serial ? Execution::serial : Execution::parallel;
            if (exhaustive_to) {
                const auto pairs = domain_pairs(*exhaustive_to, PairDomain::ordered);
                const SweepStats oracle = oracle_sweep(*exhaustive_to, PairDomain::ordered, exec);
                const SweepStats cross = cross_variant_sweep(pairs, exec);
                const SweepStats inv = invariant_sweep(pairs, exec);
                print_stats(out, "oracle", oracle, "checks");
                print_stats(out, "cross-variant", cross, "checks");
                print_stats(out, "invariant", inv, "rows");
                return report_verify(out, err, {{"oracle", oracle}, {"cross-variant", cross}, {"invariant", inv}});
            }
            const auto pairs = random_pairs(*random_count, max_bits, seed);
            const SweepStats cross = cross_variant_sweep(pairs, exec);
            const SweepStats inv = invariant_sweep(pairs, exec);
            print_stats(out, "cross-variant", cross, "checks");
            print_stats(out, "invariant", inv, "rows");
            return report_verify(out, err, {{"cross-variant", cross}, {"invariant", inv}});
        } else if (bench_cmd->parsed()) {
            const BenchReport r = run_bench(parse_variant(variant_text), bits, count, bench_seed,
                                            parallel ? Execution::parallel : Execution::serial);
            out << to_json(r).dump() << '\n';
        }
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ResourceExhausted& e) {
        err << "error: " << e.what() << '\n';
        return kDomainFailure;
    }
    return kOk;
}

}  // namespace egcd::cli
