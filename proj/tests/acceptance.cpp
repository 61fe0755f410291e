// Acceptance suite: one line per criterion, exit 0 only if every
// criterion holds. All checks are exact (integer or rational equality);
// the run also reports wall time per criterion since the suite doubles as
// a smoke benchmark.
//
// usage: acceptance <path-to-chebx-cli> <path-to-golden-dir>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "chebx/chebyshev.hpp"
#include "chebx/identities.hpp"
#include "chebx/quadext.hpp"
#include "chebx/rational_roots.hpp"
#include "chebx/roots.hpp"
#include "support/oracles.hpp"

using namespace chebx;
namespace fs = std::filesystem;

namespace {

std::string g_cli_path;
std::string g_golden_dir;
int g_failures = 0;

void run_criterion(int number, const std::string& title, const std::function<bool()>& body) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" (") + e.what() + ")";
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    if (!ok) ++g_failures;
    std::printf("%s  criterion %d: %s  [%.2fs]%s\n", ok ? "PASS" : "FAIL", number,
                title.c_str(), elapsed.count(), note.c_str());
    std::fflush(stdout);
}

// --- criterion bodies ----------------------------------------------------

bool generator_cross_validation() {
    ChebCache cache;
    for (std::size_t n = 1; n <= 64; ++n) {
        if (gen_closed_form(ChebKind::FirstKind, n) != cache.first_kind(n)) return false;
        if (gen_closed_form(ChebKind::SecondKind, n) != cache.second_kind(n)) return false;
    }
    return true;
}

bool identity_suite() {
    ChebCache cache;
    const auto reports = run_suite(64, cache);
    // 7 identities over [0,64] plus shift-square over [0,32]
    if (reports.size() != 7 * 65 + 33) return false;
    return all_passed(reports);
}

bool root_location_and_simplicity() {
    ChebCache cache;
    for (std::size_t n = 1; n <= 32; ++n) {
        for (ChebKind kind : {ChebKind::FirstKind, ChebKind::SecondKind}) {
            const IntPoly& p = cache.get(kind, n);
            if (!is_squarefree(p)) return false;
            if (count_roots(sturm_chain(p), Rat(-1), Rat(1)) != n) return false;
        }
        const IntPoly& ts = cache.shifted_first_kind(n);
        if (count_roots(sturm_chain(ts), Rat(0), Rat(1)) != n) return false;
    }
    return true;
}

bool closed_form_values() {
    ChebCache cache;
    const Rat points[] = {Rat(0),    Rat(1, 2),  Rat(-1, 2), Rat(1, 3), Rat(-1, 3),
                          Rat(3, 4), Rat(-3, 4), Rat(2),     Rat(-5, 4)};
    for (const Rat& w : points) {
        for (std::size_t k = 0; k <= 30; ++k) {
            if (closed_form_value(ChebKind::FirstKind, w, k) != eval_rat(cache.first_kind(k), w))
                return false;
            if (closed_form_value(ChebKind::SecondKind, w, k) !=
                eval_rat(cache.second_kind(k), w))
                return false;
        }
    }
    return j_power_period();
}

bool rational_root_classification() {
    ChebCache cache;
    for (std::size_t n = 1; n <= 200; ++n) {
        for (ChebKind kind :
             {ChebKind::FirstKind, ChebKind::SecondKind, ChebKind::ShiftedFirstKind}) {
            if (!cross_check(kind, n, cache).agrees) return false;
        }
    }
    const auto u2 = cross_check(ChebKind::SecondKind, 2, cache);
    if (u2.computed != std::vector<Rat>{Rat(-1, 2), Rat(1, 2)}) return false;
    const auto u5 = cross_check(ChebKind::SecondKind, 5, cache);
    if (u5.computed != std::vector<Rat>{Rat(-1, 2), Rat(0), Rat(1, 2)}) return false;
    const auto t8 = cross_check(ChebKind::FirstKind, 8, cache);
    return t8.computed.empty();
}

bool isolation_soundness() {
    ChebCache cache;
    const Rat width(Int(1), pow_int(Int(2), 40));
    for (std::size_t n = 1; n <= 16; ++n) {
        for (ChebKind kind : {ChebKind::FirstKind, ChebKind::SecondKind}) {
            const IntPoly& p = cache.get(kind, n);
            const auto ivs = isolate_roots(p, Rat(-1), Rat(1));
            if (ivs.size() != n) return false;
            std::vector<Rat> exact_found;
            for (std::size_t i = 0; i < ivs.size(); ++i) {
                if (i + 1 < ivs.size() && !(ivs[i].hi <= ivs[i + 1].lo)) return false;
                const IsolInterval fine = refine(p, ivs[i], width);
                if (fine.is_exact()) {
                    if (sign_at(p, *fine.exact) != 0) return false;
                } else {
                    if (fine.width() > width) return false;
                    if (sign_at(p, fine.lo) * sign_at(p, fine.hi) != -1) return false;
                }
                if (ivs[i].is_exact()) exact_found.push_back(*ivs[i].exact);
            }
            if (exact_found != expected_rational_roots(kind, n)) return false;
        }
    }
    return true;
}

bool sturm_oracle() {
    std::mt19937_64 rng(0xC0FFEE);
    int accepted = 0;
    while (accepted < 200) {
        const IntPoly p = chebx::testing::random_nonzero_poly(rng, 8, 20);
        if (*p.degree() < 1 || !chebx::testing::naive_is_squarefree(p)) continue;
        ++accepted;
        if (!is_squarefree(p)) return false;

        const SturmChain chain = sturm_chain(p);
        Int maxc = 0;
        for (const Int& c : p.coeffs()) maxc = std::max(maxc, Int(abs(c)));
        Rat a = -(Rat(maxc, abs(p.leading())) + Rat(1));
        Rat b = -a;
        while (sign_at(p, a) == 0) a -= Rat(1);
        while (sign_at(p, b) == 0) b += Rat(1);
        if (count_roots(chain, a, b) != chebx::testing::naive_count_roots(p, a, b)) return false;

        std::uniform_int_distribution<long> pt(-60, 60);
        for (int k = 0; k < 3; ++k) {
            Rat lo(pt(rng), 11), hi(pt(rng), 11);
            if (hi < lo) std::swap(lo, hi);
            if (lo == hi || sign_at(p, lo) == 0 || sign_at(p, hi) == 0) continue;
            if (count_roots(chain, lo, hi) != chebx::testing::naive_count_roots(p, lo, hi)) {
                return false;
            }
        }
    }
    return true;
}

// --- CLI contract ---------------------------------------------------------

int run_cli(const std::string& args, const std::string& stdout_path) {
    const std::string cmd =
        g_cli_path + " " + args + " > " + stdout_path + " 2> /dev/null";
    const int status = std::system(cmd.c_str());
    if (status == -1) return -1;
    return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

bool cli_contract() {
    const fs::path tmp = fs::temp_directory_path() / "chebx_acceptance";
    fs::create_directories(tmp);
    const std::string out = (tmp / "out.txt").string();

    // golden byte equality of gen output
    for (int n : {1, 4, 5, 64}) {
        for (const std::string fmt : {"json", "plain"}) {
            const std::string args =
                "gen T " + std::to_string(n) + " --format " + fmt;
            if (run_cli(args, out) != 0) return false;
            const std::string ext = fmt == "json" ? ".json" : ".txt";
            const std::string golden =
                (fs::path(g_golden_dir) / ("gen_T_" + std::to_string(n) + ext)).string();
            if (slurp(out) != slurp(golden)) {
                std::cerr << "golden mismatch for: " << args << "\n";
                return false;
            }
        }
    }

    // exit code 0: a passing check
    if (run_cli("verify --max-n 4 --only ode,coprime", out) != 0) return false;
    // exit code 1: injected failure, witness present in the output
    if (run_cli("verify --max-n 6 --inject-defect", out) != 1) return false;
    if (slurp(out).find("witness") == std::string::npos) return false;
    // exit code 2: usage errors
    if (run_cli("gen Q 3", out) != 2) return false;
    if (run_cli("gen T 3 --format yaml", out) != 2) return false;
    if (run_cli("roots isolate T 3 --width 0", out) != 2) return false;
    if (run_cli("verify --only nosuchsuite", out) != 2) return false;
    // and a couple of passing analysis commands
    if (run_cli("roots isolate T 3 --width 1/1024", out) != 0) return false;
    if (run_cli("roots rational U 5", out) != 0) return false;
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 3) {
        std::cerr << "usage: acceptance <chebx-cli> <golden-dir>\n";
        return 2;
    }
    g_cli_path = argv[1];
    g_golden_dir = argv[2];

    run_criterion(1, "generator cross-validation (T, U; n in [1,64])",
                  generator_cross_validation);
    run_criterion(2, "identity suite (eq1..eq5, ode, coprime n in [0,64]; shift-square n in [0,32])",
                  identity_suite);
    run_criterion(3, "root location and simplicity (n in [1,32]; T* on (0,1))",
                  root_location_and_simplicity);
    run_criterion(4, "closed-form values on the rational grid (k in [0,30])",
                  closed_form_values);
    run_criterion(5, "rational root classification (all kinds, n in [1,200])",
                  rational_root_classification);
    run_criterion(6, "isolation soundness (n in [1,16], width 2^-40)", isolation_soundness);
    run_criterion(7, "Sturm chain vs naive rational oracle (200 random polynomials)",
                  sturm_oracle);
    run_criterion(8, "CLI contract (golden files and exit codes)", cli_contract);

    if (g_failures == 0) {
        std::printf("all 8 criteria passed\n");
        return 0;
    }
    std::printf("%d criteria FAILED\n", g_failures);
    return 1;
}
