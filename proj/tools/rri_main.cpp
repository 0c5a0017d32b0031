#include <iostream>
#include <set>
#include <string>

#include <CLI11.hpp>

#include "rri/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"exact real-root isolation for square-free integer polynomials"};
    app.require_subcommand(1);

    rri::IsolateConfig iso;
    auto* isolate = app.add_subcommand("isolate", "isolate all real roots of one polynomial");
    isolate->add_option("--poly", iso.poly_path, "input file, or - for stdin")
        ->capture_default_str();
    isolate->add_option("--format", iso.format, "input format")
        ->check(CLI::IsMember({"coeffs", "json"}))
        ->capture_default_str();
    isolate->add_option("--algorithm", iso.algorithm, "isolation algorithm")
        ->check(CLI::IsMember({"dsc2", "dsc"}))
        ->capture_default_str();
    isolate->add_option("--square-free", iso.square_free, "non-square-free input policy")
        ->check(CLI::IsMember({"error", "auto"}))
        ->capture_default_str();
    isolate->add_option("--output", iso.output, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    isolate->add_flag("--stats", iso.stats, "include subdivision statistics");
    isolate->add_flag("--verify", iso.verify)->group("");  /* test hook: Sturm cross-check */

    rri::BenchCliConfig bench;
    auto* bench_cmd = app.add_subcommand("bench", "run an instance grid and emit CSV");
    bench_cmd->add_option("--family", bench.family, "mignotte|wilkinson|chebyshev|random")
        ->required();
    bench_cmd->add_option("--n", bench.ns, "degrees, comma separated")
        ->delimiter(',')
        ->required();
    bench_cmd->add_option("--tau", bench.taus, "coefficient bit sizes, comma separated")
        ->delimiter(',');
    bench_cmd->add_option("--seeds", bench.seeds, "seeds, comma separated")->delimiter(',');
    bench_cmd->add_option("--algorithms", bench.algorithms, "dsc2,dsc subset")
        ->delimiter(',');
    bench_cmd->add_option("--csv", bench.csv_path, "output file, or - for stdout");
    bench_cmd->add_flag("--timing", bench.timing,
                        "measure wall_time_ms (off by default: timed runs are not "
                        "byte-reproducible)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? rri::exit_ok : rri::exit_input_error;
    }

    try {
        if (isolate->parsed()) return rri::run_isolate(iso, std::cin, std::cout, std::cerr);
        return rri::run_bench(bench, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return rri::exit_input_error;
    }
}
