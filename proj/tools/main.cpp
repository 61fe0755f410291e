/*
   Copyright 2026 The chebx authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// chebx command line tool.
//
// Exit codes: 0 all checks passed (or nothing to check), 1 a mathematical
// check failed, 2 usage error. JSON output serializes every number as a
// decimal string: coefficients reach hundreds of digits and must survive
// consumers that parse numbers into doubles.

#include <algorithm>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "chebx/chebyshev.hpp"
#include "chebx/identities.hpp"
#include "chebx/quadext.hpp"
#include "chebx/rational_roots.hpp"
#include "chebx/roots.hpp"

using json = nlohmann::ordered_json;
using namespace chebx;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

ChebKind kind_from_string(const std::string& s) {
    if (s == "T") return ChebKind::FirstKind;
    if (s == "U") return ChebKind::SecondKind;
    if (s == "Tstar") return ChebKind::ShiftedFirstKind;
    throw UsageError("unknown kind '" + s + "' (expected T, U or Tstar)");
}

json coeff_strings(const IntPoly& p) {
    json arr = json::array();
    for (const Int& c : p.coeffs()) arr.push_back(to_decimal(c));
    return arr;
}

json make_document(const std::string& command, const std::string& status, json payload) {
    json doc;
    doc["schema_version"] = "1";
    doc["command"] = command;
    doc["status"] = status;
    doc["payload"] = std::move(payload);
    return doc;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os) throw UsageError("cannot open output file '" + out_path + "'");
    os << text;
}

void emit_json(const json& doc, const std::string& out_path) {
    emit(doc.dump(2) + "\n", out_path);
}

// ---------------------------------------------------------------- gen --

struct GenOptions {
    std::string kind = "T";
    unsigned long n = 0;
    std::string method = "recurrence";
    std::string format = "json";
    std::string out;
};

int run_gen(const GenOptions& opt) {
    const ChebKind kind = kind_from_string(opt.kind);
    IntPoly p;
    if (opt.method == "recurrence") {
        p = gen_recurrence(kind, opt.n);
    } else {
        try {
            p = gen_closed_form(kind, opt.n);
        } catch (const UnsupportedKind& e) {
            throw UsageError(e.what());
        }
    }

    if (opt.format == "plain") {
        std::string line;
        const auto& c = p.coeffs();
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) line += ' ';
            line += to_decimal(c[i]);
        }
        if (p.is_zero()) line = "0";
        emit(line + "\n", opt.out);
        return kExitPass;
    }

    json payload;
    payload["kind"] = opt.kind;
    payload["n"] = std::to_string(opt.n);
    payload["method"] = opt.method;
    payload["degree"] = p.is_zero() ? "-inf" : std::to_string(*p.degree());
    payload["coefficients"] = coeff_strings(p);
    emit_json(make_document("gen", "n/a", std::move(payload)), opt.out);
    return kExitPass;
}

// ------------------------------------------------------------- verify --

struct VerifyOptions {
    unsigned long max_n = 64;
    std::vector<std::string> only;
    std::string format = "json";
    std::string out;
    bool inject_defect = false;
};

struct CheckLine {
    std::string suite;
    std::string label;
    bool passed;
    std::optional<IntPoly> witness;
    std::string note;
};

const std::vector<std::string> kAllSuites = {
    "eq1", "eq2",     "eq3",    "eq4",   "eq5",      "ode",  "coprime",
    "shiftsquare", "closedform", "values", "jperiod", "roots", "rational"};

void run_identity_suite(const std::string& suite, unsigned long max_n, ChebCache& cache,
                        std::vector<CheckLine>& lines) {
    const IdentityId id = identity_from_token(suite);
    const unsigned long hi =
        id == IdentityId::ShiftSquare ? (max_n + 1) / 2 : max_n;
    for (unsigned long n = 0; n <= hi; ++n) {
        CheckReport r = check_identity(id, n, cache);
        lines.push_back({suite, "n=" + std::to_string(n), r.passed, std::move(r.witness), ""});
    }
}

void run_closed_form_suite(unsigned long max_n, ChebCache& cache,
                           std::vector<CheckLine>& lines) {
    for (ChebKind kind : {ChebKind::FirstKind, ChebKind::SecondKind}) {
        for (unsigned long n = 1; n <= max_n; ++n) {
            const IntPoly a = gen_recurrence(kind, n, cache);
            const IntPoly b = gen_closed_form(kind, n);
            const bool ok = a == b;
            CheckLine line{"closedform", to_string(kind) + " n=" + std::to_string(n), ok, {}, ""};
            if (!ok) line.witness = a - b;
            lines.push_back(std::move(line));
        }
    }
}

void run_values_suite(unsigned long max_n, ChebCache& cache, std::vector<CheckLine>& lines) {
    const Rat points[] = {Rat(0),    Rat(1, 2),  Rat(-1, 2), Rat(1, 3), Rat(-1, 3),
                          Rat(3, 4), Rat(-3, 4), Rat(2),     Rat(-5, 4)};
    const unsigned long kmax = std::min<unsigned long>(max_n, 30);
    for (const Rat& w : points) {
        bool ok = true;
        std::string note;
        for (unsigned long k = 0; k <= kmax && ok; ++k) {
            for (ChebKind kind : {ChebKind::FirstKind, ChebKind::SecondKind}) {
                if (closed_form_value(kind, w, k) != eval_rat(cache.get(kind, k), w)) {
                    ok = false;
                    note = "mismatch at " + to_string(kind) + " k=" + std::to_string(k);
                    break;
                }
            }
        }
        lines.push_back(
            {"values", "w=" + w.to_string() + " k<=" + std::to_string(kmax), ok, {}, note});
    }
}

void run_roots_suite(unsigned long max_n, ChebCache& cache, std::vector<CheckLine>& lines) {
    const unsigned long hi = std::min<unsigned long>(max_n, 32);
    for (ChebKind kind :
         {ChebKind::FirstKind, ChebKind::SecondKind, ChebKind::ShiftedFirstKind}) {
        const Rat a = kind == ChebKind::ShiftedFirstKind ? Rat(0) : Rat(-1);
        const Rat b(1);
        for (unsigned long n = 1; n <= hi; ++n) {
            const IntPoly& p = cache.get(kind, n);
            bool ok = false;
            std::string note;
            try {
                ok = is_squarefree(p) && count_roots(sturm_chain(p), a, b) == n;
                if (!ok) note = "count or squarefreeness off";
            } catch (const Error& e) {
                note = e.what();
            }
            lines.push_back(
                {"roots", to_string(kind) + " n=" + std::to_string(n), ok, {}, note});
        }
    }
}

void run_rational_suite(unsigned long max_n, ChebCache& cache, std::vector<CheckLine>& lines) {
    for (ChebKind kind :
         {ChebKind::FirstKind, ChebKind::SecondKind, ChebKind::ShiftedFirstKind}) {
        for (unsigned long n = 1; n <= max_n; ++n) {
            const RationalRootReport r = cross_check(kind, n, cache);
            std::string note;
            if (!r.agrees) {
                note = "computed {";
                for (const Rat& v : r.computed) note += v.to_string() + " ";
                note += "} expected {";
                for (const Rat& v : r.expected) note += v.to_string() + " ";
                note += "}";
            }
            lines.push_back(
                {"rational", to_string(kind) + " n=" + std::to_string(n), r.agrees, {}, note});
        }
    }
}

int run_verify(const VerifyOptions& opt) {
    if (opt.max_n < 1) throw UsageError("--max-n must be >= 1");
    std::vector<std::string> suites = opt.only.empty() ? kAllSuites : opt.only;
    for (const auto& s : suites) {
        if (std::find(kAllSuites.begin(), kAllSuites.end(), s) == kAllSuites.end()) {
            throw UsageError("unknown suite selector '" + s + "'");
        }
    }

    ChebCache cache;
    if (opt.inject_defect) cache.corrupt_first_kind(std::min<unsigned long>(5, opt.max_n));

    std::vector<CheckLine> lines;
    for (const std::string& suite : suites) {
        if (suite == "closedform") {
            run_closed_form_suite(opt.max_n, cache, lines);
        } else if (suite == "values") {
            run_values_suite(opt.max_n, cache, lines);
        } else if (suite == "jperiod") {
            lines.push_back({"jperiod", "j^3=1, j^{2n}!=-1", j_power_period(), {}, ""});
        } else if (suite == "roots") {
            run_roots_suite(opt.max_n, cache, lines);
        } else if (suite == "rational") {
            run_rational_suite(opt.max_n, cache, lines);
        } else {
            run_identity_suite(suite, opt.max_n, cache, lines);
        }
    }

    const std::size_t failed =
        static_cast<std::size_t>(std::count_if(lines.begin(), lines.end(),
                                               [](const CheckLine& l) { return !l.passed; }));
    const bool all_ok = failed == 0;

    if (opt.format == "plain") {
        std::string text;
        for (const auto& l : lines) {
            text += (l.passed ? "PASS " : "FAIL ") + l.suite + " " + l.label;
            if (!l.passed && l.witness) text += " witness: " + l.witness->to_string();
            if (!l.passed && !l.note.empty()) text += " (" + l.note + ")";
            text += "\n";
        }
        text += std::string(all_ok ? "PASS" : "FAIL") + " " + std::to_string(lines.size()) +
                " checks, " + std::to_string(failed) + " failed\n";
        emit(text, opt.out);
        return all_ok ? kExitPass : kExitCheckFailed;
    }

    json checks = json::array();
    for (const auto& l : lines) {
        json c;
        c["suite"] = l.suite;
        c["case"] = l.label;
        c["passed"] = l.passed;
        if (!l.passed && l.witness) c["witness"] = coeff_strings(*l.witness);
        if (!l.passed && !l.note.empty()) c["note"] = l.note;
        checks.push_back(std::move(c));
    }
    json payload;
    payload["max_n"] = std::to_string(opt.max_n);
    payload["suites"] = suites;
    payload["checks"] = std::move(checks);
    payload["summary"] = {{"total", std::to_string(lines.size())},
                          {"failed", std::to_string(failed)}};
    emit_json(make_document("verify", all_ok ? "pass" : "fail", std::move(payload)), opt.out);
    return all_ok ? kExitPass : kExitCheckFailed;
}

// -------------------------------------------------------------- roots --

struct RootsOptions {
    std::string kind = "T";
    unsigned long n = 1;
    std::string width;
    std::string format = "json";
    std::string out;
};

int run_roots_isolate(const RootsOptions& opt) {
    if (opt.n < 1) throw UsageError("n must be >= 1");
    const ChebKind kind = kind_from_string(opt.kind);

    std::optional<Rat> width;
    if (!opt.width.empty()) {
        Rat w;
        try {
            w = Rat::parse(opt.width);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        if (w.sign() <= 0) throw UsageError("--width must be positive");
        width = w;
    }

    const IntPoly& p = default_cache().get(kind, opt.n);
    const Rat a = kind == ChebKind::ShiftedFirstKind ? Rat(0) : Rat(-1);
    const Rat b(1);
    std::vector<IsolInterval> ivs = isolate_roots(p, a, b);
    if (width) {
        for (IsolInterval& iv : ivs) iv = refine(p, iv, *width);
    }

    if (opt.format == "plain") {
        std::string text;
        for (const IsolInterval& iv : ivs) {
            if (iv.is_exact()) {
                text += "exact " + iv.exact->to_string() + "\n";
            } else {
                text += iv.lo.to_string() + " " + iv.hi.to_string() + "\n";
            }
        }
        emit(text, opt.out);
        return kExitPass;
    }

    json arr = json::array();
    for (const IsolInterval& iv : ivs) {
        json j;
        j["lo"] = iv.lo.to_string();
        j["hi"] = iv.hi.to_string();
        if (iv.is_exact()) j["exact"] = iv.exact->to_string();
        arr.push_back(std::move(j));
    }
    json payload;
    payload["kind"] = opt.kind;
    payload["n"] = std::to_string(opt.n);
    payload["interval"] = {{"lo", a.to_string()}, {"hi", b.to_string()}};
    if (width) payload["width"] = width->to_string();
    payload["count"] = std::to_string(ivs.size());
    payload["intervals"] = std::move(arr);
    emit_json(make_document("roots isolate", "n/a", std::move(payload)), opt.out);
    return kExitPass;
}

int run_roots_rational(const RootsOptions& opt) {
    if (opt.n < 1) throw UsageError("n must be >= 1");
    const ChebKind kind = kind_from_string(opt.kind);
    const RationalRootReport r = cross_check(kind, opt.n);

    auto rat_list = [](const std::vector<Rat>& v) {
        json arr = json::array();
        for (const Rat& x : v) arr.push_back(x.to_string());
        return arr;
    };

    if (opt.format == "plain") {
        std::string text = "computed:";
        for (const Rat& x : r.computed) text += " " + x.to_string();
        text += "\nexpected:";
        for (const Rat& x : r.expected) text += " " + x.to_string();
        text += "\nagrees: " + std::string(r.agrees ? "true" : "false") + "\n";
        emit(text, opt.out);
        return r.agrees ? kExitPass : kExitCheckFailed;
    }

    json payload;
    payload["kind"] = opt.kind;
    payload["n"] = std::to_string(opt.n);
    payload["computed"] = rat_list(r.computed);
    payload["expected"] = rat_list(r.expected);
    payload["agrees"] = r.agrees;
    emit_json(make_document("roots rational", r.agrees ? "pass" : "fail", std::move(payload)),
              opt.out);
    return r.agrees ? kExitPass : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Chebyshev polynomial toolkit: generation, identity "
                 "verification and real root analysis over the integers"};
    app.set_version_flag("--version", std::string("chebx ") + CHEBX_VERSION);
    app.require_subcommand(1);

    GenOptions gen_opt;
    CLI::App* gen = app.add_subcommand("gen", "emit the coefficients of T_n, U_n or T*_n");
    gen->add_option("kind", gen_opt.kind, "polynomial family: T, U or Tstar")->required();
    gen->add_option("n", gen_opt.n, "index (degree)")->required();
    gen->add_option("--method", gen_opt.method, "construction route")
        ->check(CLI::IsMember({"recurrence", "closed-form"}))
        ->capture_default_str();
    gen->add_option("--format", gen_opt.format, "output format")
        ->check(CLI::IsMember({"json", "plain"}))
        ->capture_default_str();
    gen->add_option("--out", gen_opt.out, "write output to this file instead of stdout");

    VerifyOptions verify_opt;
    CLI::App* verify = app.add_subcommand(
        "verify", "machine-check the identity, closed-form, root and rational-root suites");
    verify->add_option("--max-n", verify_opt.max_n, "largest index exercised")
        ->capture_default_str();
    verify->add_option("--only", verify_opt.only,
                       "comma separated subset of suites (eq1..eq5, ode, coprime, "
                       "shiftsquare, closedform, values, jperiod, roots, rational)")
        ->delimiter(',');
    verify->add_option("--format", verify_opt.format, "output format")
        ->check(CLI::IsMember({"json", "plain"}))
        ->capture_default_str();
    verify->add_option("--out", verify_opt.out, "write output to this file instead of stdout");
    verify->add_flag("--inject-defect", verify_opt.inject_defect,
                     "corrupt one cached coefficient first (self-test of the failure path)");

    RootsOptions roots_opt;
    CLI::App* roots = app.add_subcommand("roots", "real root analysis");
    roots->require_subcommand(1);
    CLI::App* isolate = roots->add_subcommand(
        "isolate", "isolating intervals for every real root, optionally refined");
    isolate->add_option("kind", roots_opt.kind, "polynomial family: T, U or Tstar")->required();
    isolate->add_option("n", roots_opt.n, "index (degree)")->required();
    isolate->add_option("--width", roots_opt.width,
                        "refine each interval to at most this width, e.g. 1/1024");
    isolate->add_option("--format", roots_opt.format, "output format")
        ->check(CLI::IsMember({"json", "plain"}))
        ->capture_default_str();
    isolate->add_option("--out", roots_opt.out, "write output to this file instead of stdout");

    CLI::App* rational = roots->add_subcommand(
        "rational", "rational roots: computed set, classified set and agreement");
    rational->add_option("kind", roots_opt.kind, "polynomial family: T, U or Tstar")->required();
    rational->add_option("n", roots_opt.n, "index (degree)")->required();
    rational->add_option("--format", roots_opt.format, "output format")
        ->check(CLI::IsMember({"json", "plain"}))
        ->capture_default_str();
    rational->add_option("--out", roots_opt.out, "write output to this file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints the message / help text
        const bool informational =
            e.get_name() == "CallForHelp" || e.get_name() == "CallForVersion";
        return informational ? kExitPass : kExitUsage;
    }

    try {
        if (gen->parsed()) return run_gen(gen_opt);
        if (verify->parsed()) return run_verify(verify_opt);
        if (roots->parsed()) {
            if (isolate->parsed()) return run_roots_isolate(roots_opt);
            if (rational->parsed()) return run_roots_rational(roots_opt);
        }
        throw UsageError("no subcommand given");
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
