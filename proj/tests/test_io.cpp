#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <random>
#include <sstream>
#include <string>

#include "rri/cli.hpp"
#include "rri/io.hpp"
#include "test_support.hpp"

using rri::BigIntPoly;
using rri::Dyadic;

TEST_CASE("coefficient list parsing") {
    CHECK(rri::parse_coeff_list(" -6 11  -6 1 \n") == BigIntPoly{-6, 11, -6, 1});
    CHECK(rri::parse_coeff_list("0 0 1").degree() == 2);
    CHECK(rri::parse_coeff_list("+5 -3") == BigIntPoly{5, -3});
    CHECK(rri::parse_coeff_list("0").is_zero());

    CHECK_THROWS_AS((void)rri::parse_coeff_list(""), rri::ParseError);
    CHECK_THROWS_AS((void)rri::parse_coeff_list("  \n "), rri::ParseError);
    CHECK_THROWS_AS((void)rri::parse_coeff_list("1 x 2"), rri::ParseError);
    CHECK_THROWS_AS((void)rri::parse_coeff_list("1.5"), rri::ParseError);
    CHECK_THROWS_AS((void)rri::parse_coeff_list("--2"), rri::ParseError);
    CHECK_THROWS_AS((void)rri::parse_coeff_list("-"), rri::ParseError);
}

TEST_CASE("coefficient list round-trip") {
    CHECK(rri::serialize_coeff_list(BigIntPoly{-6, 11, -6, 1}) == "-6 11 -6 1\n");
    CHECK(rri::serialize_coeff_list(BigIntPoly{}) == "0\n");
    std::mt19937_64 rng(17);
    for (int iter = 0; iter < 50; ++iter) {
        const BigIntPoly f = test_support::random_square_free_poly(rng, 10, 48);
        CHECK(rri::parse_coeff_list(rri::serialize_coeff_list(f)) == f);
    }
}

TEST_CASE("polynomial JSON round-trip and strictness") {
    const BigIntPoly f{-2, 0, 1};
    CHECK(rri::parse_poly_json(rri::serialize_poly_json(f)) == f);

    /* coefficients wider than any machine word survive */
    std::vector<mpz_class> wide{mpz_class("-1208925819614629174706176"), mpz_class(3)};
    const BigIntPoly g{std::move(wide)};
    CHECK(rri::parse_poly_json(rri::serialize_poly_json(g)) == g);

    CHECK_THROWS_AS((void)rri::parse_poly_json("not json"), rri::ParseError);
    CHECK_THROWS_AS((void)rri::parse_poly_json("[1, 2]"), rri::ParseError);
    CHECK_THROWS_AS((void)rri::parse_poly_json(R"({"coefficients": ["1"]})"), rri::ParseError);
    CHECK_THROWS_AS((void)rri::parse_poly_json(R"({"degree": 1, "coefficients": [1, 2]})"),
                    rri::ParseError);
    CHECK_THROWS_AS((void)rri::parse_poly_json(R"({"degree": 1.5, "coefficients": ["1"]})"),
                    rri::ParseError);
    CHECK_THROWS_AS((void)rri::parse_poly_json(R"({"degree": 1, "coefficients": []})"),
                    rri::ParseError);
    /* declared degree must match after trailing zeros are trimmed */
    CHECK_THROWS_AS(
        (void)rri::parse_poly_json(R"({"degree": 2, "coefficients": ["1", "2", "0"]})"),
        rri::ParseError);
}

TEST_CASE("dyadic and descriptor JSON forms") {
    CHECK(rri::dyadic_to_json(Dyadic(mpz_class(3), -2)).dump() == R"({"m":"3","e":-2})");
    CHECK(rri::dyadic_to_json(Dyadic(12L)).dump() == R"({"m":"3","e":2})");
    CHECK(rri::dyadic_to_json(Dyadic()).dump() == R"({"m":"0","e":0})");

    using rri::RootDescriptor;
    CHECK(rri::descriptor_to_json(RootDescriptor::point(Dyadic(1L))).dump() ==
          R"({"kind":"point","at":{"m":"1","e":0}})");
    const rri::OpenInterval I(Dyadic(0L), Dyadic(mpz_class(1), -1));
    CHECK(rri::descriptor_to_json(RootDescriptor::isolating(I)).dump() ==
          R"({"kind":"interval","lower":{"m":"0","e":0},"upper":{"m":"1","e":-1}})");
}

TEST_CASE("result serialization") {
    const BigIntPoly f{-2, 0, 1};
    const auto result = rri::dsc2(f);

    const auto with = rri::result_to_json(2, false, result, true);
    CHECK(with.at("degree") == 2);
    CHECK(with.at("square_free_applied") == false);
    CHECK(with.at("roots").size() == 2);
    CHECK(with.at("stats").at("tree_size").get<long long>() >= 1);
    const auto without = rri::result_to_json(2, true, result, false);
    CHECK_FALSE(without.contains("stats"));
    CHECK(without.at("square_free_applied") == true);

    const std::string text = rri::render_result_text(2, false, result, true);
    CHECK(text.find("degree: 2\n") != std::string::npos);
    CHECK(text.find("roots: 2\n") != std::string::npos);
    CHECK(text.find("stats: tree_size=") != std::string::npos);
    CHECK(text.find("note:") == std::string::npos);
    const std::string noted = rri::render_result_text(1, true, result, false);
    CHECK(noted.find("note: replaced input by its square-free part\n") != std::string::npos);
}

TEST_CASE("bench CSV shape") {
    CHECK(std::string(rri::bench_csv_header) ==
          "family,n,tau,seed,algorithm,tree_size,quadratic_steps,linear_steps,var_calls,"
          "max_n_exp,wall_time_ms,root_count");

    rri::BenchRecord rec;
    rec.family = "mignotte";
    rec.n = 4;
    rec.tau = 6;
    rec.seed = 0;
    rec.algorithm = "dsc2";
    rec.tree_size = 5;
    rec.quadratic_steps = 1;
    rec.linear_steps = 2;
    rec.var_calls = 9;
    rec.max_n_exp = 2;
    rec.wall_time_ms = 0;
    rec.root_count = 2;
    const std::string csv = rri::bench_csv({rec});
    CHECK(csv == std::string(rri::bench_csv_header) + "\n" + "mignotte,4,6,0,dsc2,5,1,2,9,2,0,2\n");
}

TEST_CASE("bench grid ordering and cross-checks") {
    rri::BenchConfig grid;
    grid.family = rri::Family::random_poly;
    grid.ns = {4, 6};
    grid.taus = {8};
    grid.seeds = {1, 2};
    grid.algorithms = {"dsc2", "dsc"};
    const auto records = rri::run_bench_grid(grid);
    REQUIRE(records.size() == 8);
    CHECK(records[0].n == 4);
    CHECK(records[0].seed == 1);
    CHECK(records[0].algorithm == "dsc2");
    CHECK(records[1].algorithm == "dsc");
    CHECK(records[2].seed == 2);
    CHECK(records[4].n == 6);
    for (std::size_t i = 0; i < records.size(); i += 2) {
        CHECK(records[i].root_count == records[i + 1].root_count);
        CHECK(records[i].wall_time_ms == 0); /* timing off */
    }
    CHECK_THROWS_AS((void)rri::run_bench_grid([&] {
                        auto bad = grid;
                        bad.algorithms = {"bogus"};
                        return bad;
                    }()),
                    std::invalid_argument);
}

TEST_CASE("run_isolate exit codes") {
    const auto run = [](const rri::IsolateConfig& config, const std::string& input,
                        std::string* out_text = nullptr, std::string* err_text = nullptr) {
        std::istringstream in(input);
        std::ostringstream out, err;
        const int code = rri::run_isolate(config, in, out, err);
        if (out_text) *out_text = out.str();
        if (err_text) *err_text = err.str();
        return code;
    };

    rri::IsolateConfig config;
    std::string out, err;
    CHECK(run(config, "-2 0 1", &out) == rri::exit_ok);
    CHECK(out.find("roots: 2\n") != std::string::npos);

    CHECK(run(config, "abc", nullptr, &err) == rri::exit_input_error);
    CHECK(err.find("error:") != std::string::npos);
    CHECK(run(config, "5") == rri::exit_input_error);
    CHECK(run(config, "") == rri::exit_input_error);

    /* (x - 1)^2 under the strict default, then reduced automatically */
    CHECK(run(config, "1 -2 1") == rri::exit_not_square_free);
    config.square_free = "auto";
    config.output = "json";
    CHECK(run(config, "1 -2 1", &out) == rri::exit_ok);
    const auto doc = nlohmann::json::parse(out);
    CHECK(doc.at("degree") == 1);
    CHECK(doc.at("square_free_applied") == true);
    CHECK(doc.at("roots").size() == 1);

    config = rri::IsolateConfig{};
    config.format = "json";
    CHECK(run(config, rri::serialize_poly_json(BigIntPoly{-2, 0, 1})) == rri::exit_ok);
    CHECK(run(config, "-2 0 1") == rri::exit_input_error);

    config = rri::IsolateConfig{};
    config.verify = true;
    config.algorithm = "dsc";
    CHECK(run(config, "-6 11 -6 1", &out) == rri::exit_ok);
    CHECK(out.find("roots: 3\n") != std::string::npos);

    config = rri::IsolateConfig{};
    config.poly_path = "/nonexistent/poly.txt";
    CHECK(run(config, "") == rri::exit_input_error);
}

TEST_CASE("run_bench exit codes and determinism") {
    const auto run = [](const rri::BenchCliConfig& config, std::string* out_text = nullptr) {
        std::ostringstream out, err;
        const int code = rri::run_bench(config, out, err);
        if (out_text) *out_text = out.str();
        return code;
    };

    rri::BenchCliConfig config;
    config.family = "random";
    config.ns = {4, 6};
    config.taus = {8};
    config.seeds = {1, 2};
    std::string first, second;
    CHECK(run(config, &first) == rri::exit_ok);
    CHECK(run(config, &second) == rri::exit_ok);
    CHECK(first == second);
    std::size_t lines = 0;
    for (char ch : first) lines += ch == '\n' ? 1 : 0;
    CHECK(lines == 9); /* header + 2 ns x 1 tau x 2 seeds x 2 algorithms */
    CHECK(first.rfind(rri::bench_csv_header, 0) == 0);

    config.family = "legendre";
    CHECK(run(config) == rri::exit_input_error);
    config.family = "wilkinson";
    config.ns = {1};
    CHECK(run(config) == rri::exit_input_error);
}
