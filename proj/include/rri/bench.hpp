#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "rri/families.hpp"

namespace rri {

struct BenchRecord {
    std::string family;
    int n = 0;
    int tau = 0;
    std::uint64_t seed = 0;
    std::string algorithm;
    std::int64_t tree_size = 0;
    std::int64_t quadratic_steps = 0;
    std::int64_t linear_steps = 0;
    std::int64_t var_calls = 0;
    int max_n_exp = 1;
    std::int64_t wall_time_ms = 0;
    std::size_t root_count = 0;
};

struct BenchConfig {
    Family family = Family::mignotte;
    std::vector<int> ns;
    std::vector<int> taus;
    std::vector<std::uint64_t> seeds;
    std::vector<std::string> algorithms;  /* "dsc2" and/or "dsc" */
    /* wall_time_ms is only measured when set; it stays 0 otherwise so that
     * identical invocations produce byte-identical CSV */
    bool timing = false;
};

/* Thrown when the algorithms disagree on the root count of an instance. */
struct BenchVerificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* Runs the full grid n x tau x seed x algorithm in that nesting order; every
 * instance is generated once and handed to each algorithm. */
std::vector<BenchRecord> run_bench_grid(const BenchConfig& config);

extern const char* const bench_csv_header;
std::string bench_csv(const std::vector<BenchRecord>& records);

}  // namespace rri
