#include "cli.hpp"

#include <cstdint>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <string>

#include <CLI11.hpp>

#include "gadic/bfs_oracle.hpp"
#include "gadic/dataset.hpp"
#include "gadic/errors.hpp"
#include "gadic/expansion.hpp"
#include "gadic/factorization.hpp"
#include "gadic/generating_set.hpp"
#include "gadic/lambda.hpp"
#include "gadic/length3_sieve.hpp"
#include "gadic/plength.hpp"
#include "gadic/sun.hpp"

namespace gadic::cli {

namespace {

// Reproducible defaults shared by the subcommands.
struct Config {
    int probabilistic_rounds = 64;    // extra strong rounds above 2^64
    int bfs_margin = 4;               // exploration box multiplier
    unsigned plength_cap = 64;        // two-power cap for single queries
    unsigned sieve_cap = 40;          // two-power cap for bulk sieving
    std::uint64_t rho_budget = 10'000'000;
    unsigned threads = 0;             // 0 = hardware concurrency
    std::string format = "text";      // lambda-table rendering
};

std::pair<std::int64_t, std::int64_t> parse_window(const std::string& text) {
    const auto colon = text.find(':', 1);
    if (colon == std::string::npos)
        throw std::invalid_argument("window must look like 'lo:hi', got '" + text + "'");
    return {to_int64(parse_integer(text.substr(0, colon))),
            to_int64(parse_integer(text.substr(colon + 1)))};
}

TableSpec::Format parse_format(const std::string& text) {
    if (text == "csv")
        return TableSpec::Format::csv;
    if (text == "json")
        return TableSpec::Format::json;
    if (text == "text")
        return TableSpec::Format::text;
    throw std::invalid_argument("format must be csv, json or text, got '" + text + "'");
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw std::invalid_argument("cannot open output file '" + path + "'");
    file << text;
}

void print_plength(const PLengthReport& report, std::ostream& out) {
    out << "n: " << report.n << '\n';
    out << "upper bound: " << report.upper_bound << '\n';
    out << "witness: " << report.witness_string() << '\n';
    out << "two-power cap: " << report.two_power_cap << '\n';
    if (report.candidate)
        out << "status: candidate (lengths 1-2 ruled out only within the cap)\n";
    else
        out << "status: exact\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"minimal g-adic expansions, word metrics on integer Cayley graphs, "
                 "and prime-power length searches"};
    app.require_subcommand(1);

    Config config;
    std::string arg_n, arg_x, arg_set = "g:2", arg_window, arg_output;
    std::int64_t arg_base = 2, arg_k = 1, arg_bound = 1000, arg_count = 1;
    std::int64_t arg_kmax = 20, arg_gmin = 2, arg_gmax = 100, arg_nmax = 10000;
    std::string arg_lo, arg_hi;
    std::vector<std::int64_t> arg_bases;

    auto* expand_cmd = app.add_subcommand("expand", "minimal g-adic expansion of n");
    expand_cmd->add_option("n", arg_n, "integer to expand")->required();
    expand_cmd->add_option("--base", arg_base, "base g >= 2")->required();
    expand_cmd->callback([&] { out << expand(parse_integer(arg_n), arg_base).to_string() << '\n'; });

    auto* length_cmd = app.add_subcommand("length", "g-length of n");
    length_cmd->add_option("n", arg_n, "integer to measure")->required();
    length_cmd->add_option("--base", arg_base, "base g >= 2")->required();
    length_cmd->callback([&] { out << g_length(parse_integer(arg_n), arg_base) << '\n'; });

    auto* lambda_cmd = app.add_subcommand("lambda", "smallest positive integer of g-length k");
    lambda_cmd->add_option("--base", arg_base, "base g >= 2")->required();
    lambda_cmd->add_option("--k", arg_k, "target length k >= 1")->required();
    lambda_cmd->callback([&] { out << lambda(arg_base, arg_k) << '\n'; });

    auto* table_cmd = app.add_subcommand("lambda-table", "table of lambda_g(k) values");
    table_cmd->add_option("--bases", arg_bases, "base columns (default: primes below 30)");
    table_cmd->add_option("--kmax", arg_kmax, "number of rows");
    table_cmd->add_option("--format", config.format, "csv, json or text");
    table_cmd->add_option("--output,-o", arg_output, "write to file instead of stdout");
    table_cmd->callback([&] {
        TableSpec spec;
        if (!arg_bases.empty())
            spec.bases = arg_bases;
        spec.k_max = arg_kmax;
        spec.format = parse_format(config.format);
        write_output(emit_lambda_table(spec), arg_output, out);
    });

    auto* oracle_cmd = app.add_subcommand("oracle", "BFS word lengths over a window");
    oracle_cmd->add_option("--set", arg_set, "generating set (g:5 | primes:all | primes:2,3 | list:1,2,9)")
        ->required();
    oracle_cmd->add_option("--window", arg_window, "window 'lo:hi' containing 0")->required();
    oracle_cmd->add_option("--margin", config.bfs_margin, "exploration margin (default 4)");
    oracle_cmd->callback([&] {
        const auto [lo, hi] = parse_window(arg_window);
        const auto table =
            bfs_lengths(GeneratingSetDescriptor::parse(arg_set), lo, hi, config.bfs_margin);
        out << "n,length\n";
        for (std::int64_t n = table.lo; n <= table.hi; ++n)
            out << n << ',' << table.at(n) << '\n';
    });

    auto* oracle_lambda_cmd =
        app.add_subcommand("oracle-lambda", "smallest positive n of BFS length k");
    oracle_lambda_cmd->add_option("--set", arg_set, "generating set descriptor")->required();
    oracle_lambda_cmd->add_option("--k", arg_k, "target length")->required();
    oracle_lambda_cmd->add_option("--bound", arg_bound, "search bound")->required();
    oracle_lambda_cmd->add_option("--margin", config.bfs_margin, "exploration margin (default 4)");
    oracle_lambda_cmd->callback([&] {
        const auto result = oracle_lambda(GeneratingSetDescriptor::parse(arg_set), arg_k,
                                          arg_bound, config.bfs_margin);
        if (result)
            out << *result << '\n';
        else
            out << "not-found\n";
    });

    auto* plength_cmd = app.add_subcommand("plength", "prime-power word-length upper bound");
    plength_cmd->add_option("n", arg_n, "integer to bound")->required();
    plength_cmd->add_option("--cap", config.plength_cap, "two-power exponent cap (default 64)");
    plength_cmd->callback([&] {
        print_plength(plength_upper(parse_integer(arg_n), {config.plength_cap}), out);
    });

    auto* goldbach_cmd = app.add_subcommand("goldbach", "smallest-p Goldbach pair of even n");
    goldbach_cmd->add_option("n", arg_n, "even integer >= 4")->required();
    goldbach_cmd->callback([&] {
        const Integer n = parse_integer(arg_n);
        const auto [p, q] = goldbach_pair(n);
        out << n << " = " << p << " + " << q << '\n';
    });

    auto* three_cmd = app.add_subcommand("three-primes", "three-prime decomposition of odd n > 5");
    three_cmd->add_option("n", arg_n, "odd integer > 5")->required();
    three_cmd->callback([&] {
        const Integer n = parse_integer(arg_n);
        const auto parts = three_prime_decomposition(n);
        out << n << " = " << parts[0] << " + " << parts[1] << " + " << parts[2] << '\n';
    });

    auto* sieve_cmd = app.add_subcommand("sieve3", "length-3 candidate sieve over odd [lo, hi]");
    sieve_cmd->add_option("--lo", arg_lo, "odd lower end")->required();
    sieve_cmd->add_option("--hi", arg_hi, "odd upper end")->required();
    sieve_cmd->add_option("--cap", config.sieve_cap, "two-power exponent cap (default 40)");
    sieve_cmd->add_option("--threads", config.threads, "worker threads (default: hardware)");
    sieve_cmd->callback([&] {
        Length3SieveOptions options;
        options.two_power_cap = config.sieve_cap;
        options.threads = config.threads;
        const auto survivors =
            sieve_length3_candidates(parse_integer(arg_lo), parse_integer(arg_hi), options);
        for (const Integer& n : survivors)
            out << n << '\n';
        err << "survivors: " << survivors.size() << " (range [" << arg_lo << ", " << arg_hi
            << "], cap " << config.sieve_cap << ")\n";
    });

    auto* sun_verify_cmd = app.add_subcommand("sun-verify", "re-derive the congruence-class example");
    sun_verify_cmd->add_option("--rounds", config.probabilistic_rounds,
                               "extra strong rounds above 2^64 (default 64)");
    bool sun_ok = true;
    sun_verify_cmd->callback([&] {
        const auto verification = verify_sun_example({config.probabilistic_rounds});
        for (const auto& check : verification.checks)
            out << check.name << ": " << (check.passed ? "pass" : "FAIL") << '\n';
        sun_ok = verification.all_passed();
    });

    auto* sun_member_cmd = app.add_subcommand("sun-member", "membership in the certified residue class");
    sun_member_cmd->add_option("x", arg_x, "integer to test")->required();
    sun_member_cmd->callback(
        [&] { out << (sun_class_member(parse_integer(arg_x)) ? "true" : "false") << '\n'; });

    auto* fig2_cmd = app.add_subcommand("fig2", "g-length of a fixed n across bases (CSV)");
    fig2_cmd->add_option("--n", arg_n, "integer to measure")->default_val("20233509");
    fig2_cmd->add_option("--gmin", arg_gmin, "first base (default 2)");
    fig2_cmd->add_option("--gmax", arg_gmax, "last base (default 100)");
    fig2_cmd->add_option("--output,-o", arg_output, "write to file instead of stdout");
    fig2_cmd->callback([&] {
        write_output(emit_length_vs_g(parse_integer(arg_n), arg_gmin, arg_gmax), arg_output, out);
    });

    auto* fig3_cmd = app.add_subcommand("fig3", "length histogram with lambda overlay (CSV)");
    fig3_cmd->add_option("--base", arg_base, "base g >= 2")->default_val(19);
    fig3_cmd->add_option("--nmax", arg_nmax, "histogram end (default 10000)");
    fig3_cmd->add_option("--output,-o", arg_output, "write to file instead of stdout");
    fig3_cmd->callback(
        [&] { write_output(emit_length_histogram(arg_base, arg_nmax), arg_output, out); });

    auto* bfile_cmd = app.add_subcommand("bfile", "OEIS-style b-file of lambda_g");
    bfile_cmd->add_option("--base", arg_base, "base g >= 2")->required();
    bfile_cmd->add_option("--count", arg_count, "number of terms")->required();
    bfile_cmd->add_option("--output,-o", arg_output, "write to file instead of stdout");
    bfile_cmd->callback([&] { write_output(emit_bfile(arg_base, arg_count), arg_output, out); });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const computation_error& e) {
        err << "computation failed: " << e.what() << '\n';
        return kExitComputation;
    } catch (const std::logic_error& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitComputation;
    }
    return sun_ok ? kExitOk : kExitComputation;
}

}  // namespace gadic::cli
