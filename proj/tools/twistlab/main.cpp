#include "twistlab/cli/runner.hpp"
#include "twistlab/liebialg/lie_algebra.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

namespace fs = std::filesystem;
using namespace twistlab;

constexpr const char* kReportDirEnv = "TWISTLAB_REPORT_DIR";

std::string default_report_path() {
    const char* dir = std::getenv(kReportDirEnv);
    if (!dir || !*dir) return {};
    return (fs::path(dir) / "twistlab-report.json").string();
}

int run_verify(cli::SuiteConfig cfg) {
    if (cfg.report_path.empty()) cfg.report_path = default_report_path();
    cli::RunReport rep = cli::run_suite(cfg);
    std::cout << rep.summary_table(true);
    if (!cfg.report_path.empty()) {
        fs::path p(cfg.report_path);
        if (p.has_parent_path()) fs::create_directories(p.parent_path());
        std::ofstream out(p, std::ios::binary);
        if (!out) throw cli::UsageError("cannot write report to " + cfg.report_path);
        out << rep.to_json();
        std::cout << "report: " << cfg.report_path << "\n";
    }
    return rep.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"twistlab: exact checks for twists, star products and momentum maps on ax+b"};
    app.require_subcommand(1);

    cli::SuiteConfig cfg;
    cfg.suites = {"all"};
    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--suite", cfg.suites, "suite or group name, or all")->delimiter(',');
    verify->add_option("--order,-N", cfg.order, "hbar order")->check(CLI::Range(0, 4));
    verify->add_option("--seed", cfg.seed, "sampling seed");
    verify->add_option("--samples", cfg.samples, "samples per sampled identity")->check(CLI::PositiveNumber);
    verify->add_option("--jobs,-j", cfg.jobs, "run suites concurrently")->check(CLI::PositiveNumber);
    verify->add_option("--report", cfg.report_path, std::string("JSON report path (default $") + kReportDirEnv + "/twistlab-report.json)");
    bool list_suites = false;
    verify->add_flag("--list", list_suites, "list suites and groups");

    std::string space = "gstar", f, g;
    int star_order = 2;
    auto* star = app.add_subcommand("star", "print f * g as an hbar series");
    star->add_option("--space", space, "gstar, gdual-coadjoint or group");
    star->add_option("--f", f, "first function")->required();
    star->add_option("--g", g, "second function")->required();
    star->add_option("--order,-N", star_order, "hbar order")->check(CLI::Range(0, 4));

    auto* fixtures = app.add_subcommand("fixtures", "shipped fixtures");
    fixtures->require_subcommand(1);
    fixtures->add_subcommand("list", "list fixture names");
    std::string show_name;
    fixtures->add_subcommand("show", "print a fixture as JSON")->add_option("name", show_name)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*verify) {
            if (list_suites) {
                for (const auto& s : cli::registry()) std::cout << s.name << "  " << s.description << "\n";
                std::cout << "groups: all, appendix-a, quantization, momentum\n";
                return 0;
            }
            return run_verify(cfg);
        }
        if (*star) {
            auto s = cli::star_calc(cli::parse_space(space), f, g, star_order);
            std::cout << quantizeudf::series_str(s) << "\n";
            return 0;
        }
        if (fixtures->got_subcommand("list")) {
            for (const auto& n : liebialg::fixture_names()) std::cout << n << "\n";
            return 0;
        }
        std::cout << liebialg::fixture_text(show_name);
        return 0;
    } catch (const cli::UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
