#include "twistlab/cli/runner.hpp"

#include "twistlab/axbdouble/double_group.hpp"
#include "twistlab/liebialg/lie_algebra.hpp"
#include "twistlab/momentum/momentum.hpp"
#include "twistlab/ueahopf/uea.hpp"

#include "json.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <iomanip>
#include <set>
#include <sstream>

namespace twistlab::cli {

using exprcas::Scalar;
using liebialg::LieAlgebra;
using liebialg::Tensor;
using ueahopf::UEA;

namespace {

struct Entry {
    SuiteInfo info;
    // order -> effective order
    std::function<int(int)> order_of;
    std::function<VerificationReport(int, const SuiteConfig&)> run;
};

int at_least_one(int n) { return std::max(n, 1); }

const std::vector<Entry>& entries() {
    static const std::vector<Entry> e{
        {{"lie-bialgebra", "Jacobi for axb, its dual and the double; cobracket of r = H^E; dual bracket"},
         [](int) { return 0; },
         [](int, const SuiteConfig&) { return lie_bialgebra_suite(); }},
        {{"axb_double_group", "double group law, exp, embeddings, decompose, dressing action"},
         [](int) { return 0; },
         [](int, const SuiteConfig& c) { return axbdouble::double_group_suite(c.seed, c.samples); }},
        {{"poisson", "pi_lambda, pi*, linear part, Schouten brackets"},
         [](int) { return 0; },
         [](int, const SuiteConfig&) { return axbdouble::poisson_suite(); }},
        {{"dressing-generators", "DressShift, AlgMorph, MC for both generator families"},
         [](int) { return 0; },
         [](int, const SuiteConfig&) { return axbdouble::dressing_generator_suite(); }},
        {{"twist-axioms", "Jordanian twist cocycle, counit, twisted Hopf axioms, semiclassical limit"},
         at_least_one,
         [](int n, const SuiteConfig&) { return twist_axioms_suite(n); }},
        {{"udf", "star product from the dressing action: associativity, unit, first order"},
         at_least_one,
         [](int n, const SuiteConfig&) { return quantizeudf::udf_suite(n); }},
        {{"duality", "coaction star product, 2-cocycle gamma, m^gamma duality"},
         at_least_one,
         [](int n, const SuiteConfig& c) { return quantizeudf::duality_suite(n, c.seed); }},
        {{"classical-momentum", "momentum condition, equivariance, Poisson map, Exp, mutations"},
         [](int) { return 0; },
         [](int, const SuiteConfig& c) { return momentum::classical_suite(c.seed); }},
        {{"quantum-momentum", "J^* as a star-algebra map for J = id and J = Exp"},
         [](int n) { return std::clamp(n, 1, 2); },
         [](int n, const SuiteConfig& c) { return momentum::quantum_suite(n, c.seed); }},
    };
    return e;
}

const std::map<std::string, std::vector<std::string>>& groups() {
    static const std::map<std::string, std::vector<std::string>> g{
        {"appendix-a", {"lie-bialgebra", "axb_double_group", "poisson", "dressing-generators"}},
        {"quantization", {"twist-axioms", "udf", "duality"}},
        {"momentum", {"classical-momentum", "quantum-momentum"}},
    };
    return g;
}

const std::vector<std::pair<std::string, std::string>>& conventions() {
    static const std::vector<std::pair<std::string, std::string>> c{
        {"sharp", "pi^#(a) = pi(., a)"},
        {"bracket", "{f, g} = pi(df, dg)"},
        {"koszul", "pi(a, b) = <pi^#(a), b>"},
        {"fundamental_fields", "l_X(p) = d/dt act(p, exp tX) at 0, anti-homomorphic"},
        {"charts", "S* law in (kappa, e^{-2nu} - 1); dressing in (kappa, 1 - e^{-2nu})"},
        {"star_element", "F on right modules, F^{-1} on left modules"},
        {"coaction_pairing", "left actions pair with gamma, right actions with gamma^{-1}"},
        {"r_matrix", "r = H^E, delta(X) = [r, X (x) 1 + 1 (x) X]"},
    };
    return c;
}

std::string status(bool ok) { return ok ? "pass" : "fail"; }

void derive_constants(RunReport& out) {
    auto g = liebialg::build_axb();
    auto s = ueahopf::twist_semiclassical(ueahopf::jordanian_twist(g, 1));
    auto c = ueahopf::proportionality(s.r, liebialg::r_matrix_axb(g));
    out.derived.emplace_back("twist_semiclassical_coefficient", c ? c->get_str() : "none");
    auto d = axbdouble::dressing_action_check();
    out.derived.emplace_back("dressing_x_sign", d.value("x_sign").value_or("undetermined"));
    auto lam = axbdouble::verify_dressing_generator(axbdouble::lambda_generators(),
                                                    axbdouble::poisson_structures().pi_lambda);
    out.derived.emplace_back("mc_constant", lam.value("mc_constant").value_or("undetermined"));
}

}  // namespace

const std::vector<SuiteInfo>& registry() {
    static const std::vector<SuiteInfo> r = [] {
        std::vector<SuiteInfo> v;
        for (const auto& e : entries()) v.push_back(e.info);
        return v;
    }();
    return r;
}

std::vector<std::string> expand_suites(const std::vector<std::string>& names) {
    std::set<std::string> want;
    for (const auto& n : names) {
        if (n.empty()) continue;
        if (n == "all") {
            for (const auto& e : entries()) want.insert(e.info.name);
        } else if (auto g = groups().find(n); g != groups().end()) {
            want.insert(g->second.begin(), g->second.end());
        } else if (std::any_of(entries().begin(), entries().end(), [&](const Entry& e) { return e.info.name == n; })) {
            want.insert(n);
        } else {
            throw UsageError("unknown suite '" + n + "'");
        }
    }
    std::vector<std::string> out;
    for (const auto& e : entries())
        if (want.count(e.info.name)) out.push_back(e.info.name);
    return out;
}

RunReport run_suite(const SuiteConfig& config) {
    if (config.order < 0 || config.order > 4) throw UsageError("order must be in [0, 4]");
    if (config.samples < 1) throw UsageError("samples must be positive");
    RunReport out;
    out.config = config;
    std::vector<std::string> names = expand_suites(config.suites);
    if (names.empty()) return out;

    auto one = [&config](const Entry& e) {
        SuiteResult r;
        r.name = e.info.name;
        r.order = e.order_of(config.order);
        auto t0 = std::chrono::steady_clock::now();
        try {
            r.report = e.run(r.order, config);
        } catch (const std::exception& ex) {
            r.report = VerificationReport(e.info.name);
            r.report.add("suite raised", false, ex.what());
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return r;
    };
    std::vector<const Entry*> todo;
    for (const auto& n : names)
        for (const auto& e : entries())
            if (e.info.name == n) todo.push_back(&e);

    if (config.jobs > 1) {
        std::vector<std::future<SuiteResult>> fs;
        for (const Entry* e : todo) fs.push_back(std::async(std::launch::async, one, std::cref(*e)));
        for (auto& f : fs) out.results.push_back(f.get());
    } else {
        for (const Entry* e : todo) out.results.push_back(one(*e));
    }
    derive_constants(out);
    return out;
}

bool RunReport::passed() const { return failed_checks() == 0; }

int RunReport::failed_checks() const {
    int n = 0;
    for (const auto& r : results)
        for (const auto& c : r.report.checks) n += c.passed ? 0 : 1;
    return n;
}

std::string RunReport::to_json() const {
    using nlohmann::ordered_json;
    ordered_json j;
    j["tool"] = "twistlab";
    j["config"] = {{"suites", config.suites}, {"order", config.order}, {"seed", config.seed}, {"samples", config.samples}};
    ordered_json conv = ordered_json::object();
    for (const auto& [k, v] : conventions()) conv[k] = v;
    j["conventions"] = conv;
    ordered_json der = ordered_json::object();
    for (const auto& [k, v] : derived) der[k] = v;
    j["derived"] = der;
    ordered_json suites = ordered_json::array();
    int total = 0;
    for (const auto& r : results) {
        ordered_json s;
        s["name"] = r.name;
        s["order"] = r.order;
        s["status"] = status(r.report.passed());
        ordered_json checks = ordered_json::array();
        for (const auto& c : r.report.checks) {
            ordered_json cj{{"name", c.name}, {"status", status(c.passed)}};
            if (c.order) cj["order"] = *c.order;
            if (!c.detail.empty()) cj["detail"] = c.detail;
            checks.push_back(std::move(cj));
        }
        total += static_cast<int>(r.report.checks.size());
        s["checks"] = std::move(checks);
        ordered_json vals = ordered_json::array();
        for (const auto& [k, v] : r.report.values) vals.push_back({{"key", k}, {"value", v}});
        s["values"] = std::move(vals);
        suites.push_back(std::move(s));
    }
    j["suites"] = std::move(suites);
    j["summary"] = {{"suites", results.size()}, {"checks", total}, {"failed", failed_checks()}, {"status", status(passed())}};
    return j.dump(2) + "\n";
}

std::string RunReport::summary_table(bool with_timings) const {
    std::ostringstream os;
    std::size_t w = 5;
    for (const auto& r : results) w = std::max(w, r.name.size());
    os << std::left << std::setw(static_cast<int>(w) + 2) << "suite" << std::setw(7) << "order" << std::setw(8)
       << "checks" << std::setw(8) << "failed" << std::setw(8) << "status";
    if (with_timings) os << "seconds";
    os << "\n";
    for (const auto& r : results) {
        int failed = 0;
        for (const auto& c : r.report.checks) failed += c.passed ? 0 : 1;
        os << std::setw(static_cast<int>(w) + 2) << r.name << std::setw(7) << r.order << std::setw(8)
           << r.report.checks.size() << std::setw(8) << failed << std::setw(8) << status(failed == 0);
        if (with_timings) os << std::fixed << std::setprecision(3) << r.seconds;
        os << "\n";
        for (const auto& c : r.report.checks)
            if (!c.passed) os << "  FAIL " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    }
    for (const auto& [k, v] : derived) os << k << " = " << v << "\n";
    return os.str();
}

VerificationReport lie_bialgebra_suite() {
    VerificationReport rep("Lie bialgebra ax+b");
    LieAlgebra s = liebialg::fixture("axb"), sd = liebialg::fixture("axb_dual"), d = liebialg::fixture("axb_double");
    for (const auto& g : {s, sd, d}) {
        auto j = liebialg::jacobi_check(g);
        rep.add("Jacobi " + g.name(), j.passed(), std::to_string(j.checks.size()) + " failing triples");
    }
    rep.add("fixture axb equals the built-in table", s.same_as(liebialg::build_axb()));
    rep.add("fixture axb_double equals the built-in table", d.same_as(liebialg::build_double_axb()));

    Tensor r = liebialg::r_matrix_axb(s);
    Tensor H = Tensor::basis(s, "H"), E = Tensor::basis(s, "E");
    Tensor dH = liebialg::cobracket(r, H), dE = liebialg::cobracket(r, E);
    rep.add("delta(H) = -2 H^E", dH == Tensor::wedge(H, E) * -2, dH.str());
    rep.add("delta(E) = 0", dE.is_zero(), dE.str());
    rep.merge(liebialg::cobracket_cocycle_check(r), "cocycle: ");
    Tensor cybe = liebialg::schouten_cybe(r);
    rep.add("[r, r] = 0", cybe.is_zero(), cybe.str());

    LieAlgebra dual = liebialg::dual_algebra(s, liebialg::cobracket_table(r));
    Tensor hs = Tensor::basis(dual, "H*"), es = Tensor::basis(dual, "E*");
    Tensor b = liebialg::bracket(hs, es);
    rep.add("[H*, E*] = -2 H*", b == hs * -2, b.str());
    rep.add("dual from the cobracket equals fixture axb_dual", dual.same_as(sd));
    rep.merge(liebialg::bracket_intertwine_check(s, sd, {{0, 1}, {-1, 0}}), "flat: ");
    VerificationReport heis = liebialg::double_heisenberg_check(d);
    rep.merge(heis, "double: ");
    return rep;
}

VerificationReport twist_axioms_suite(int order) {
    VerificationReport rep("twist axioms");
    LieAlgebra g = liebialg::build_axb();
    ueahopf::TwistSeries F = ueahopf::jordanian_twist(g, order);
    rep.merge(ueahopf::twist_check(F), "jordanian: ");
    UEA H = UEA::generator(g, "H"), E = UEA::generator(g, "E");
    rep.merge(ueahopf::twisted_hopf_check(F, {H, E, H * E}), "jordanian: ");

    auto sc = ueahopf::twist_semiclassical(F);
    Tensor r = liebialg::r_matrix_axb(g);
    auto c = ueahopf::proportionality(sc.r, r);
    rep.add("semiclassical limit lies in g (x) g", sc.in_g_tensor_g, sc.detail);
    rep.add("semiclassical limit is alternating", sc.r.is_alternating(), sc.r.str());
    rep.add("semiclassical limit is proportional to H^E", c.has_value(), sc.r.str());
    rep.add("semiclassical limit solves CYBE", liebialg::schouten_cybe(sc.r).is_zero());
    if (c) rep.record("semiclassical coefficient", c->get_str());

    // 1 (x) 1 + h E (x) H is not a cocycle
    ueahopf::TwistSeries bad = ueahopf::series_one(g, 2, order);
    bad[1] = UEA::tensor(E, H);
    VerificationReport br = ueahopf::twist_check(bad);
    auto k = br.first_failing_order();
    rep.record("mutated fixture first failing order", k ? std::to_string(*k) : "none");
    if (order >= 2)
        rep.add("mutated fixture fails at order 2", k && *k == 2, k ? "order " + std::to_string(*k) : "passes");
    return rep;
}

Space parse_space(const std::string& s) {
    if (s == "gstar") return Space::GStar;
    if (s == "gdual-coadjoint") return Space::GDualCoadjoint;
    if (s == "group") return Space::Group;
    throw UsageError("unknown space '" + s + "' (gstar, gdual-coadjoint, group)");
}

quantizeudf::HopfAction space_action(Space s) {
    switch (s) {
        case Space::GStar: return quantizeudf::dressing_hopf_action();
        case Space::GDualCoadjoint: return momentum::coadjoint_fields();
        case Space::Group: return quantizeudf::left_invariant_action();
    }
    throw UsageError("unknown space");
}

quantizeudf::SSeries star_calc(Space space, const std::string& f, const std::string& g, int order) {
    if (order < 0 || order > 4) throw UsageError("order must be in [0, 4]");
    quantizeudf::HopfAction act = space_action(space);
    Scalar a = exprcas::parse_scalar(f), b = exprcas::parse_scalar(g);
    const auto& coords = act.chart().coords();
    for (const Scalar* s : {&a, &b})
        for (const auto& c : s->coordinates())
            if (std::find(coords.begin(), coords.end(), c) == coords.end())
                throw UnknownCoordinate("'" + c + "' is not a coordinate of chart " + act.chart().name());
    LieAlgebra alg = liebialg::build_axb();
    ueahopf::TwistSeries F = order == 0 ? ueahopf::series_one(alg, 2, 0) : ueahopf::jordanian_twist(alg, order);
    return quantizeudf::StarProduct(F, act, order)(a, b);
}

}  // namespace twistlab::cli
