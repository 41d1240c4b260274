#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace minkasym {

struct Failure {
    std::string body;      // family spec or vertex JSON, enough to replay with `compute`
    std::string quantity;
    std::string expected;
    double observed = 0;
    double tol = 0;
};

struct VerifySummary {
    std::string suite;
    std::size_t checks = 0;
    std::vector<Failure> failures;
    std::vector<std::string> notes;

    bool ok() const { return failures.empty(); }
    // check that passes iff cond; records a failure otherwise
    void expect(bool cond, const std::string& body, const std::string& quantity, const std::string& expected,
                double observed, double tol);
    void merge(const VerifySummary& other);
};

struct VerifyOptions {
    std::size_t samples = 500;
    std::uint64_t seed = 1;
    double tol = 1e-7;  // bound tolerance; ASYM_TOL overrides
};

VerifyOptions options_from_env(VerifyOptions base);

// one function per acceptance criterion
VerifySummary check_golden_values();
VerifySummary check_planar_region(const VerifyOptions& o);
VerifySummary check_crossings(const VerifyOptions& o);
VerifySummary check_sandwich();
VerifySummary check_pseudo_complete_grid();
VerifySummary check_completeness();
// quoted_values: also test the quoted D/w = 1.135 and a decreasing bound
VerifySummary check_hood(bool quoted_values);
VerifySummary check_hood();
VerifySummary check_oracles(const VerifyOptions& o);
VerifySummary check_properties(const VerifyOptions& o);
VerifySummary check_k_rho();
VerifySummary check_family_invariants();

extern const std::vector<std::string> kSuiteNames;
bool is_suite(const std::string& name);
// "all" expands to every suite
std::vector<VerifySummary> run_suite(const std::string& name, const VerifyOptions& o);
std::string format_summary(const VerifySummary& s);

}  // namespace minkasym
