/* End-to-end acceptance gate.  Runs one check per shipped guarantee and
 * prints a single [PASS]/[FAIL] line for each; exits nonzero when any check
 * fails.  All thresholds are pinned here on purpose: a behavior change that
 * moves one of these numbers should have to edit this file.
 *
 * Usage: acceptance <path-to-rri-cli>  (the CLI path is needed by the
 * byte-identical-rerun check). */

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rri/families.hpp"
#include "rri/io.hpp"
#include "rri/isolator.hpp"
#include "rri/sign_variations.hpp"
#include "rri/sturm.hpp"
#include "test_support.hpp"

using rri::BigIntPoly;
using rri::Dyadic;
using rri::OpenInterval;

namespace {

/* instance corpus shared by the oracle-agreement and trace-invariant checks:
 * 200 random square-free polynomials (deg <= 12, tau <= 16) plus the three
 * deterministic families at small sizes */
std::vector<BigIntPoly> build_corpus() {
    std::vector<BigIntPoly> corpus;
    std::mt19937_64 rng(0x5eed0001);
    for (int i = 0; i < 200; ++i) {
        const int n = 2 + static_cast<int>(rng() % 11);   /* degree 2..12 */
        const int tau = 2 + static_cast<int>(rng() % 15); /* tau 2..16 */
        corpus.push_back(rri::generate_family(rri::Family::random_poly, n, tau, rng()));
    }
    for (int n = 2; n <= 12; ++n)
        corpus.push_back(rri::generate_family(rri::Family::wilkinson, n, 0, 0));
    for (int n = 2; n <= 16; ++n)
        corpus.push_back(rri::generate_family(rri::Family::chebyshev, n, 0, 0));
    for (int n = 2; n <= 16; ++n)
        corpus.push_back(rri::generate_family(rri::Family::mignotte, n, 16, 0));
    return corpus;
}

bool check_oracle_agreement(const std::vector<BigIntPoly>& corpus, std::string& detail) {
    int failures = 0;
    std::string first;
    for (const BigIntPoly& f : corpus) {
        for (auto* algo : {&rri::dsc2, &rri::dsc_classic}) {
            std::string why;
            if (!test_support::validate_result(f, (*algo)(f, {}), &why)) {
                ++failures;
                if (first.empty()) first = why + " on " + f.to_string();
            }
        }
    }
    std::ostringstream os;
    if (failures == 0)
        os << corpus.size() << " instances x 2 algorithms agree with the sturm oracle";
    else
        os << failures << " disagreements; first: " << first;
    detail = os.str();
    return failures == 0;
}

bool check_wilkinson_membership(std::string& detail) {
    const BigIntPoly f = rri::generate_family(rri::Family::wilkinson, 10, 0, 0);
    const auto result = rri::dsc2(f);
    if (result.roots.size() != 10) {
        detail = "expected 10 descriptors, got " + std::to_string(result.roots.size());
        return false;
    }
    for (long i = 1; i <= 10; ++i) {
        const auto& r = result.roots[static_cast<std::size_t>(i - 1)];
        const Dyadic root{i};
        if (r.is_point()) {
            if (r.point() == root) continue;
            detail = "descriptor " + std::to_string(i) + " is a different point";
            return false;
        }
        const auto& I = r.interval();
        const bool inside = I.lower() < root && root < I.upper();
        const bool sign_change =
            rri::poly_eval(f, I.lower()).sign() * rri::poly_eval(f, I.upper()).sign() == -1;
        if (!inside || !sign_change) {
            detail = "root " + std::to_string(i) + " not bracketed by descriptor " +
                     std::to_string(i);
            return false;
        }
    }
    detail = "10 descriptors, each bracketing its root with a sign change";
    return true;
}

/* var(f, I) can only overshoot the real root count, and only by an even
 * amount */
bool check_bound_and_parity(std::string& detail) {
    std::mt19937_64 rng(0x5eed0003);
    const int trials = 1000;
    int failures = 0;
    for (int iter = 0; iter < trials; ++iter) {
        const BigIntPoly f = test_support::random_square_free_poly(rng, 10, 10);
        Dyadic a, b;
        while (true) {
            a = test_support::random_dyadic(rng, 10, -3, 3);
            b = test_support::random_dyadic(rng, 10, -3, 3);
            if (!(a < b)) continue;
            if (rri::poly_eval(f, a).is_zero() || rri::poly_eval(f, b).is_zero()) continue;
            break;
        }
        const OpenInterval I(a, b);
        const int v = rri::var(f, I);
        const int m = rri::sturm_count(f, I);
        if (v < m || (v - m) % 2 != 0) ++failures;
    }
    detail = std::to_string(trials) + " random (f, I) pairs" +
             (failures ? ", " + std::to_string(failures) + " violations" : "");
    return failures == 0;
}

bool check_subadditivity(std::string& detail) {
    std::mt19937_64 rng(0x5eed0004);
    const int trials = 1000;
    int failures = 0;
    for (int iter = 0; iter < trials; ++iter) {
        const BigIntPoly f = test_support::random_square_free_poly(rng, 10, 10);
        Dyadic d[4];
        while (true) {
            for (auto& x : d) x = test_support::random_dyadic(rng, 10, -3, 3);
            std::sort(d, d + 4);
            if (d[0] < d[1] && d[2] < d[3]) break;
        }
        const OpenInterval whole(d[0] - Dyadic(1L), d[3] + Dyadic(1L));
        const int v1 = rri::var(f, OpenInterval(d[0], d[1]));
        const int v2 = rri::var(f, OpenInterval(d[2], d[3]));
        if (v1 + v2 > rri::var(f, whole)) ++failures;
    }
    detail = std::to_string(trials) + " disjoint subinterval triples" +
             (failures ? ", " + std::to_string(failures) + " violations" : "");
    return failures == 0;
}

bool check_tree_size_trend(std::string& detail) {
    const int n = 16;
    const std::vector<int> taus{16, 32, 64, 128};
    std::vector<std::int64_t> classic, fast;
    for (int tau : taus) {
        const BigIntPoly f = rri::generate_family(rri::Family::mignotte, n, tau, 0);
        classic.push_back(rri::dsc_classic(f).stats.tree_size);
        fast.push_back(rri::dsc2(f).stats.tree_size);
    }
    /* pinned: baseline must grow at least 4x from tau 16 to 128, the
     * accelerated tree at most 2x, and every accelerated tree stays under
     * 16 * n * log2(n * tau) */
    std::ostringstream os;
    os << "classic " << classic.front() << "->" << classic.back() << ", dsc2 "
       << fast.front() << "->" << fast.back();
    bool ok = true;
    if (classic.back() < 4 * classic.front()) {
        os << "; baseline grew less than 4x";
        ok = false;
    }
    if (fast.back() > 2 * fast.front()) {
        os << "; accelerated tree grew more than 2x";
        ok = false;
    }
    for (std::size_t i = 0; i < taus.size(); ++i) {
        const double bound = 16.0 * n * std::log2(double(n) * double(taus[i]));
        if (double(fast[i]) > bound) {
            os << "; tree " << fast[i] << " exceeds bound " << bound << " at tau "
               << taus[i];
            ok = false;
        }
    }
    detail = os.str();
    return ok;
}

bool check_trace_invariants(const std::vector<BigIntPoly>& corpus, std::string& detail) {
    std::int64_t events = 0, violations = 0;
    for (const BigIntPoly& f : corpus) {
        const Dyadic max_width = Dyadic::power_of_two(rri::coefficient_bitsize(f) + 2);
        rri::IsolatorOptions opts;
        opts.observer = [&](const rri::SubdivisionEvent& ev) {
            ++events;
            const Dyadic pw = ev.parent.width();
            auto bad = [&](bool cond) { violations += cond ? 0 : 1; };
            bad(pw.is_power_of_two() && pw <= max_width);
            bad(ev.parent_n_exp >= 1);
            for (const auto& c : ev.children) {
                const Dyadic cw = c.interval.width();
                bad(cw.is_power_of_two() && cw <= max_width);
                bad(c.n_exp >= 1);
                bad(cw <= pw.times_pow2(-1));
                if (ev.kind == rri::SubdivisionEvent::Kind::quadratic)
                    bad(c.n_exp == ev.parent_n_exp + 1);
                else
                    bad(c.n_exp == std::max(1, ev.parent_n_exp - 1));
            }
        };
        for (auto* algo : {&rri::dsc2, &rri::dsc_classic}) (void)(*algo)(f, opts);
    }
    detail = std::to_string(events) + " subdivision events, " + std::to_string(violations) +
             " violations";
    return violations == 0;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool run_command(const std::string& cmd) {
    const int status = std::system(cmd.c_str());
    return status != -1 && WIFEXITED(status) && WEXITSTATUS(status) == 0;
}

bool check_determinism(const std::string& cli, std::string& detail) {
    if (cli.empty()) {
        detail = "CLI path not provided";
        return false;
    }
    char tmpl[] = "/tmp/rri-accept-XXXXXX";
    if (!mkdtemp(tmpl)) {
        detail = "cannot create temp directory";
        return false;
    }
    const std::string dir(tmpl);
    const std::string poly = dir + "/poly.txt";
    {
        std::ofstream out(poly, std::ios::binary);
        out << rri::serialize_coeff_list(rri::generate_family(rri::Family::mignotte, 10, 12, 0));
    }

    const std::string isolate = "'" + cli + "' isolate --poly '" + poly +
                                "' --output json --stats > '" + dir + "/iso%d.json' 2>/dev/null";
    const std::string bench = "'" + cli +
                              "' bench --family random --n 6,8 --tau 8,12 --seeds 1,2"
                              " --algorithms dsc2,dsc --csv '" +
                              dir + "/bench%d.csv' > /dev/null 2>&1";
    for (int i = 1; i <= 2; ++i) {
        auto fill = [&](std::string s) {
            s.replace(s.find("%d"), 2, std::to_string(i));
            return s;
        };
        if (!run_command(fill(isolate)) || !run_command(fill(bench))) {
            detail = "CLI invocation failed";
            return false;
        }
    }
    const std::string iso1 = read_file(dir + "/iso1.json");
    const bool iso_same = !iso1.empty() && iso1 == read_file(dir + "/iso2.json");
    const std::string csv1 = read_file(dir + "/bench1.csv");
    const bool csv_same = !csv1.empty() && csv1 == read_file(dir + "/bench2.csv");
    (void)run_command("rm -rf '" + dir + "'");
    if (!iso_same || !csv_same) {
        detail = std::string("rerun differs: ") + (iso_same ? "" : "isolate ") +
                 (csv_same ? "" : "bench");
        return false;
    }
    detail = "isolate and bench reruns byte-identical";
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";
    const auto corpus = build_corpus();

    struct Check {
        const char* name;
        bool pass;
        std::string detail;
    };
    std::vector<Check> checks;
    auto add = [&](const char* name, auto&& fn) {
        std::string detail;
        const bool pass = fn(detail);
        checks.push_back({name, pass, std::move(detail)});
        std::cout << (pass ? "[PASS] " : "[FAIL] ") << name << ": " << checks.back().detail
                  << "\n";
    };

    add("oracle agreement", [&](std::string& d) { return check_oracle_agreement(corpus, d); });
    add("wilkinson-10 membership", [](std::string& d) { return check_wilkinson_membership(d); });
    add("variation bound and parity", [](std::string& d) { return check_bound_and_parity(d); });
    add("variation subadditivity", [](std::string& d) { return check_subadditivity(d); });
    add("tree-size trend", [](std::string& d) { return check_tree_size_trend(d); });
    add("trace invariants", [&](std::string& d) { return check_trace_invariants(corpus, d); });
    add("byte-identical reruns", [&](std::string& d) { return check_determinism(cli, d); });

    int failed = 0;
    for (const auto& c : checks) failed += c.pass ? 0 : 1;
    if (failed) {
        std::cout << failed << " of " << checks.size() << " checks failed\n";
        return 1;
    }
    std::cout << "all " << checks.size() << " checks passed\n";
    return 0;
}
