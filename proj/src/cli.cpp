#include "rri/cli.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "rri/io.hpp"
#include "rri/sturm.hpp"

namespace rri {

namespace {

bool verify_against_sturm(const BigIntPoly& f, const IsolationResult& result,
                          std::ostream& err) {
    const SturmChain chain = sturm_chain(f);
    const OpenInterval domain = cauchy_interval(f);
    const int expected = sturm_count(chain, domain);
    if (static_cast<std::size_t>(expected) != result.roots.size()) {
        err << "verify: sturm reports " << expected << " roots, isolator reports "
            << result.roots.size() << "\n";
        return false;
    }
    for (const auto& r : result.roots) {
        if (r.is_point()) {
            if (!poly_eval(f, r.point()).is_zero()) {
                err << "verify: reported point " << r.point() << " is not a root\n";
                return false;
            }
        } else if (sturm_count(chain, r.interval()) != 1) {
            err << "verify: interval " << r.interval() << " does not isolate one root\n";
            return false;
        }
    }
    return true;
}

}  // namespace

int run_isolate(const IsolateConfig& config, std::istream& in, std::ostream& out,
                std::ostream& err) {
    std::string text;
    if (config.poly_path == "-") {
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    } else {
        std::ifstream file(config.poly_path);
        if (!file) {
            err << "error: cannot open '" << config.poly_path << "'\n";
            return exit_input_error;
        }
        std::ostringstream buf;
        buf << file.rdbuf();
        text = buf.str();
    }

    BigIntPoly f;
    try {
        f = config.format == "json" ? parse_poly_json(text) : parse_coeff_list(text);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    }
    if (f.degree() < 1) {
        err << "error: polynomial must have degree at least 1\n";
        return exit_input_error;
    }

    const BigIntPoly reduced = square_free_part(f);
    bool square_free_applied = false;
    if (config.square_free == "auto") {
        square_free_applied = reduced != f;
        if (square_free_applied) f = reduced;
    } else if (reduced.degree() != f.degree()) {
        err << "error: polynomial is not square-free (use --square-free auto)\n";
        return exit_not_square_free;
    }

    const IsolationResult result = config.algorithm == "dsc" ? dsc_classic(f) : dsc2(f);

    if (config.verify && !verify_against_sturm(f, result, err)) return exit_verification_failed;

    if (config.output == "json")
        out << result_to_json(f.degree(), square_free_applied, result, config.stats).dump(2)
            << "\n";
    else
        out << render_result_text(f.degree(), square_free_applied, result, config.stats);
    return exit_ok;
}

int run_bench(const BenchCliConfig& config, std::ostream& out, std::ostream& err) {
    const auto family = family_from_name(config.family);
    if (!family) {
        err << "error: unknown family '" << config.family << "'\n";
        return exit_input_error;
    }
    BenchConfig grid;
    grid.family = *family;
    grid.ns = config.ns;
    grid.taus = config.taus;
    grid.seeds = config.seeds;
    grid.algorithms = config.algorithms;
    grid.timing = config.timing;

    std::vector<BenchRecord> records;
    try {
        records = run_bench_grid(grid);
    } catch (const BenchVerificationError& e) {
        err << "error: " << e.what() << "\n";
        return exit_verification_failed;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    }

    const std::string csv = bench_csv(records);
    if (config.csv_path.empty() || config.csv_path == "-") {
        out << csv;
    } else {
        std::ofstream file(config.csv_path, std::ios::binary);
        if (!file) {
            err << "error: cannot write '" << config.csv_path << "'\n";
            return exit_input_error;
        }
        file << csv;
    }
    return exit_ok;
}

}  // namespace rri
