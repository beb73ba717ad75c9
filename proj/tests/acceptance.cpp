// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
// usage: acceptance [path-to-twistlab-binary]

#include "twistlab/axbdouble/double_group.hpp"
#include "twistlab/cli/runner.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace twistlab;

namespace {

struct Outcome {
    bool ok = true;
    std::string why;
    void need(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            why = what;
        }
    }
};

cli::SuiteResult run_one(const std::string& name, int order, std::uint64_t seed = 1, int samples = 50) {
    cli::SuiteConfig c;
    c.suites = {name};
    c.order = order;
    c.seed = seed;
    c.samples = samples;
    return cli::run_suite(c).results.at(0);
}

const CheckResult* find(const VerificationReport& r, const std::string& name) {
    for (const auto& c : r.checks)
        if (c.name == name) return &c;
    return nullptr;
}

bool has_pass(const VerificationReport& r, const std::string& name) {
    const CheckResult* c = find(r, name);
    return c && c->passed;
}

void require_suite(Outcome& o, const cli::SuiteResult& s) {
    for (const auto& c : s.report.checks)
        if (!c.passed) o.need(false, s.name + ": " + c.name + (c.detail.empty() ? "" : " (" + c.detail + ")"));
}

int samples_in(const std::string& detail) {
    // "... N/M samples"
    auto p = detail.find(" samples");
    if (p == std::string::npos) return 0;
    auto slash = detail.rfind('/', p);
    auto start = detail.find_last_of(" ,;", slash);
    int agreed = std::atoi(detail.substr(start == std::string::npos ? 0 : start + 1, slash).c_str());
    int total = std::atoi(detail.substr(slash + 1, p - slash - 1).c_str());
    return agreed == total ? total : 0;
}

Outcome c1() {
    Outcome o;
    auto s = run_one("lie-bialgebra", 0);
    require_suite(o, s);
    for (const char* n : {"Jacobi axb", "Jacobi axb_dual", "Jacobi axb_double", "delta(H) = -2 H^E", "delta(E) = 0",
                          "[H*, E*] = -2 H*"})
        o.need(has_pass(s.report, n), std::string("missing ") + n);
    o.need(s.seconds < 1, "runtime");
    return o;
}

Outcome c2() {
    Outcome o;
    auto s = run_one("axb_double_group", 0, 1, 50);
    require_suite(o, s);
    for (const char* n : {"associativity", "exp((t+u) xi) = exp(t xi) exp(u xi)"}) {
        const CheckResult* c = find(s.report, n);
        o.need(c && samples_in(c->detail) >= 50, std::string(n) + ": fewer than 50 samples");
    }
    o.need(has_pass(s.report, "decompose round trip"), "decompose round trip");
    o.need(s.report.value("dressing: x_sign").has_value(), "dressing sign not reported");
    o.need(has_pass(s.report, "dressing: action axiom act(p, s s') = act(act(p, s'), s)"), "action axiom");
    o.need(s.seconds < 10, "runtime");
    return o;
}

Outcome c3() {
    Outcome o;
    auto s = run_one("poisson", 0);
    require_suite(o, s);
    auto ps = axbdouble::poisson_structures();
    o.need(ps.pi_lambda.str() == "2*y^2*d_x^d_y", "pi_lambda = " + ps.pi_lambda.str());
    o.need((ps.pi_star - ps.pi_lambda).str() == "2*y*d_x^d_y", "pi* - pi_lambda");
    o.need(s.seconds < 1, "runtime");
    return o;
}

Outcome c4() {
    Outcome o;
    auto s = run_one("dressing-generators", 0);
    require_suite(o, s);
    for (const char* fam : {"lambda", "star"})
        for (const char* cond : {"DressShift H", "DressShift E", "AlgMorph [H,E]", "MC H", "MC E"})
            o.need(has_pass(s.report, std::string(fam) + ": " + cond), std::string(fam) + " " + cond);
    auto ps = axbdouble::poisson_structures();
    auto dress_fails = [](const VerificationReport& r) {
        for (const auto& c : r.checks)
            if (c.name.rfind("DressShift", 0) == 0 && !c.passed) return true;
        return false;
    };
    o.need(dress_fails(axbdouble::verify_dressing_generator(axbdouble::star_generators(), ps.pi_lambda)),
           "star with pi_lambda passes DressShift");
    o.need(dress_fails(axbdouble::verify_dressing_generator(axbdouble::lambda_generators(), ps.pi_star)),
           "lambda with pi* passes DressShift");
    o.need(s.seconds < 5, "runtime");
    return o;
}

Outcome c5() {
    Outcome o;
    auto s = run_one("twist-axioms", 4);
    require_suite(o, s);
    o.need(s.order == 4, "order");
    o.need(s.report.value("semiclassical coefficient").has_value(), "semiclassical coefficient");
    o.need(s.report.value("mutated fixture first failing order") == std::optional<std::string>("2"), "mutated fixture");
    o.need(s.seconds < 60, "runtime");
    return o;
}

Outcome c6() {
    Outcome o;
    auto s = run_one("udf", 3);
    require_suite(o, s);
    for (int k = 0; k <= 3; ++k)
        o.need(has_pass(s.report, "Lambda (f*g)*h = f*(g*h) order " + std::to_string(k)), "associativity order " + std::to_string(k));
    o.need(has_pass(s.report, "Lambda antisymmetric first order = c {f,g}"), "first order");
    o.need(s.report.value("Lambda constant").has_value(), "constant not recorded");
    o.need(s.seconds < 60, "runtime");
    return o;
}

Outcome c7() {
    Outcome o;
    auto s = run_one("duality", 3);
    require_suite(o, s);
    for (int k = 0; k <= 3; ++k) o.need(has_pass(s.report, "star_cocycle = star_udf order " + std::to_string(k)), "cocycle star");
    for (int k = 0; k <= 2; ++k) {
        o.need(has_pass(s.report, "gamma 2-cocycle order " + std::to_string(k)), "gamma");
        o.need(has_pass(s.report, "<D_F X, f(x)g> = <X, m^gamma(f(x)g)> order " + std::to_string(k)), "m^gamma");
    }
    o.need(s.seconds < 120, "runtime");
    return o;
}

Outcome c8() {
    Outcome o;
    auto s = run_one("classical-momentum", 0);
    require_suite(o, s);
    for (const char* n : {"dressing: phi(H) = pi^#(J^* alpha)", "dressing: phi(E) = pi^#(J^* alpha)",
                          "dressing: equivariant iff Poisson", "coadjoint: phi(H) = pi^#(J^* alpha)",
                          "coadjoint: phi(E) = pi^#(J^* alpha)", "coadjoint: equivariant iff Poisson"})
        o.need(has_pass(s.report, n), std::string("missing ") + n);
    for (const char* x : {"H", "E"}) {
        const CheckResult* c = find(s.report, std::string("coadjoint: Exp_* phi(") + x + ") = l at sampled points");
        o.need(c && c->passed && samples_in(c->detail) >= 20, std::string("Exp pointwise ") + x);
    }
    int mutations = 0;
    for (const auto& c : s.report.checks)
        if (c.name.rfind("mutation ", 0) == 0 && c.name.find("equivariant iff Poisson") != std::string::npos) ++mutations;
    o.need(mutations >= 4, "mutations covered");
    o.need(s.seconds < 30, "runtime");
    return o;
}

Outcome c9() {
    Outcome o;
    auto s = run_one("quantum-momentum", 2);
    require_suite(o, s);
    for (int k = 0; k <= 2; ++k) {
        o.need(has_pass(s.report, "identity: J^*(f * g) = J^*f * J^*g order " + std::to_string(k)), "identity");
        o.need(has_pass(s.report, "Exp: J^*(f * g) = J^*f * J^*g order " + std::to_string(k)), "Exp");
    }
    o.need(has_pass(s.report, "Exp: sampled J^*(f * g) = J^*f * J^*g"), "Exp sampled");
    o.need(has_pass(s.report, "identity: comodule identity on deformed products"), "comodule");
    int first_order = 0;
    for (const auto& [k, v] : s.report.values)
        if (k.find("first failing order") != std::string::npos) first_order += v == "1" ? 1 : -100;
    o.need(first_order >= 2, "mutations must fail at first order");
    o.need(s.seconds < 120, "runtime");
    return o;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome c10(const std::string& binary) {
    Outcome o;
    cli::SuiteConfig c;
    c.suites = {"all"};
    c.seed = 20261015;
    std::string a = cli::run_suite(c).to_json();
    c.jobs = 3;
    std::string b = cli::run_suite(c).to_json();
    o.need(!a.empty() && a == b, "library reports differ");
    if (!binary.empty()) {
        auto dir = std::filesystem::temp_directory_path();
        std::string r1 = (dir / "twistlab-accept-1.json").string(), r2 = (dir / "twistlab-accept-2.json").string();
        for (const auto& r : {r1, r2}) {
            std::string cmd = "\"" + binary + "\" verify --suite all --seed 7 --report \"" + r + "\" > /dev/null";
            o.need(std::system(cmd.c_str()) == 0, "verify --suite all exited nonzero");
        }
        std::string x = slurp(r1), y = slurp(r2);
        o.need(!x.empty() && x == y, "CLI reports differ");
        std::filesystem::remove(r1);
        std::filesystem::remove(r2);
    }
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    std::string binary = argc > 1 ? argv[1] : "";
    struct Criterion {
        int id;
        const char* text;
        std::function<Outcome()> run;
    };
    std::vector<Criterion> all{
        {1, "Lie bialgebra suite", c1},
        {2, "double group suite", c2},
        {3, "Poisson suite", c3},
        {4, "dressing generator suite", c4},
        {5, "twist suite through order 4", c5},
        {6, "UDF suite through order 3", c6},
        {7, "duality suite", c7},
        {8, "classical momentum suite", c8},
        {9, "quantum momentum suite", c9},
        {10, "byte-identical reports", [&] { return c10(binary); }},
    };
    int failed = 0;
    for (const auto& c : all) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.need(false, std::string("threw: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("criterion %2d %-30s %s (%.2fs)%s%s\n", c.id, c.text, o.ok ? "PASS" : "FAIL", secs,
                    o.ok ? "" : ": ", o.why.c_str());
        failed += o.ok ? 0 : 1;
    }
    return failed ? 1 : 0;
}
