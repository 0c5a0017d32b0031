#include "rri/bench.hpp"

#include <chrono>
#include <sstream>

#include "rri/isolator.hpp"

namespace rri {

const char* const bench_csv_header =
    "family,n,tau,seed,algorithm,tree_size,quadratic_steps,linear_steps,var_calls,"
    "max_n_exp,wall_time_ms,root_count";

namespace {

IsolationResult run_algorithm(const std::string& name, const BigIntPoly& f) {
    if (name == "dsc2") return dsc2(f);
    if (name == "dsc") return dsc_classic(f);
    throw std::invalid_argument("unknown algorithm: '" + name + "'");
}

}  // namespace

std::vector<BenchRecord> run_bench_grid(const BenchConfig& config) {
    if (config.algorithms.empty())
        throw std::invalid_argument("bench: no algorithms selected");
    for (const auto& a : config.algorithms)
        if (a != "dsc2" && a != "dsc")
            throw std::invalid_argument("unknown algorithm: '" + a + "'");
    std::vector<BenchRecord> records;
    for (int n : config.ns) {
        for (int tau : config.taus) {
            for (std::uint64_t seed : config.seeds) {
                const BigIntPoly f = generate_family(config.family, n, tau, seed);
                std::size_t first_count = 0;
                bool have_count = false;
                for (const auto& algorithm : config.algorithms) {
                    BenchRecord rec;
                    rec.family = family_name(config.family);
                    rec.n = n;
                    rec.tau = tau;
                    rec.seed = seed;
                    rec.algorithm = algorithm;
                    const auto t0 = std::chrono::steady_clock::now();
                    const IsolationResult res = run_algorithm(algorithm, f);
                    const auto t1 = std::chrono::steady_clock::now();
                    if (config.timing)
                        rec.wall_time_ms =
                            std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0)
                                .count();
                    rec.tree_size = res.stats.tree_size;
                    rec.quadratic_steps = res.stats.quadratic_steps;
                    rec.linear_steps = res.stats.linear_steps;
                    rec.var_calls = res.stats.var_calls;
                    rec.max_n_exp = res.stats.max_n_exp;
                    rec.root_count = res.roots.size();
                    if (!have_count) {
                        first_count = rec.root_count;
                        have_count = true;
                    } else if (rec.root_count != first_count) {
                        std::ostringstream msg;
                        msg << "root count disagreement on " << rec.family << " n=" << n
                            << " tau=" << tau << " seed=" << seed << ": "
                            << config.algorithms.front() << " found " << first_count << ", "
                            << algorithm << " found " << rec.root_count;
                        throw BenchVerificationError(msg.str());
                    }
                    records.push_back(std::move(rec));
                }
            }
        }
    }
    return records;
}

std::string bench_csv(const std::vector<BenchRecord>& records) {
    std::ostringstream os;
    os << bench_csv_header << "\n";
    for (const auto& r : records) {
        os << r.family << "," << r.n << "," << r.tau << "," << r.seed << "," << r.algorithm
           << "," << r.tree_size << "," << r.quadratic_steps << "," << r.linear_steps << ","
           << r.var_calls << "," << r.max_n_exp << "," << r.wall_time_ms << ","
           << r.root_count << "\n";
    }
    return os.str();
}

}  // namespace rri
