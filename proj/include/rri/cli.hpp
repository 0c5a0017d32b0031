#pragma once

#include <iosfwd>
#include <string>

#include "rri/bench.hpp"

namespace rri {

/* exit codes shared by both subcommands */
inline constexpr int exit_ok = 0;
inline constexpr int exit_input_error = 2;
inline constexpr int exit_not_square_free = 3;
inline constexpr int exit_verification_failed = 4;

struct IsolateConfig {
    std::string poly_path = "-";        /* "-" reads the provided stream */
    std::string format = "coeffs";      /* coeffs | json */
    std::string algorithm = "dsc2";     /* dsc2 | dsc */
    std::string square_free = "error";  /* error | auto */
    std::string output = "text";        /* json | text */
    bool stats = false;
    bool verify = false;                /* cross-check against the Sturm oracle */
};

int run_isolate(const IsolateConfig& config, std::istream& in, std::ostream& out,
                std::ostream& err);

struct BenchCliConfig {
    std::string family;
    std::vector<int> ns;
    std::vector<int> taus{0};
    std::vector<std::uint64_t> seeds{0};
    std::vector<std::string> algorithms{"dsc2", "dsc"};
    std::string csv_path;  /* empty or "-" writes to the output stream */
    bool timing = false;
};

int run_bench(const BenchCliConfig& config, std::ostream& out, std::ostream& err);

}  // namespace rri
