#pragma once

#include "twistlab/errors.hpp"
#include "twistlab/quantizeudf/udf.hpp"
#include "twistlab/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace twistlab::cli {

struct SuiteConfig {
    std::vector<std::string> suites;  // names or groups; "all" expands to the registry
    int order = 3;                    // hbar order, 0..4
    std::uint64_t seed = 1;
    int samples = 50;
    int jobs = 1;  // suites run concurrently when > 1
    std::string report_path;
};

struct SuiteResult {
    std::string name;
    int order = 0;  // effective order the suite ran at
    VerificationReport report;
    double seconds = 0;
};

struct RunReport {
    SuiteConfig config;
    std::vector<SuiteResult> results;  // registry order
    std::vector<std::pair<std::string, std::string>> derived;

    bool passed() const;
    int failed_checks() const;
    // Deterministic for a fixed config: no timings, no host data.
    std::string to_json() const;
    std::string summary_table(bool with_timings) const;
};

struct SuiteInfo {
    std::string name;
    std::string description;
};
const std::vector<SuiteInfo>& registry();
// Groups map to registry names; "all" is every suite.
std::vector<std::string> expand_suites(const std::vector<std::string>& names);  // UsageError on unknown names

class UsageError : public Error {
public:
    using Error::Error;
};

// Runs the expanded suites. A suite that throws is reported as one failing
// check carrying the error text; nothing escapes except UsageError.
RunReport run_suite(const SuiteConfig& config);

VerificationReport lie_bialgebra_suite();
// Jordanian twist through order N, the twisted Hopf axioms, the semiclassical
// limit, and a non-cocycle fixture that must fail.
VerificationReport twist_axioms_suite(int order);

enum class Space { GStar, GDualCoadjoint, Group };
Space parse_space(const std::string& s);  // UsageError
quantizeudf::HopfAction space_action(Space s);
// f * g with the Jordanian twist; ParseError / UnknownCoordinate on bad input.
quantizeudf::SSeries star_calc(Space space, const std::string& f, const std::string& g, int order);

}  // namespace twistlab::cli
