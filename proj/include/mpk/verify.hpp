/**
 * @file verify.hpp
 * @brief Named verification suites: cross-method agreement, structural
 *        identities and exact spot checks, each reporting a first witness.
 */
#pragma once

#include "mpk/kostka.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace mpk {

struct CheckResult {
    std::string name;
    bool ok = true;
    std::string detail;  // first counterexample on failure, a summary otherwise
};

struct VerifyOptions {
    int n_max = 3;
    std::vector<int> r_values{2, 3};
    unsigned jobs = 1;
    unsigned seed = 20240607;
};

/// Suite names accepted by run_suite ("all" runs every suite).
std::vector<std::string> suite_names();
/// Throws std::invalid_argument for an unknown suite.
std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opt);

/// Individual suites.
std::vector<CheckResult> verify_kostka_threeway(const VerifyOptions& opt);
std::vector<CheckResult> verify_plus_twoway(const VerifyOptions& opt);
std::vector<CheckResult> verify_classical(const VerifyOptions& opt);
std::vector<CheckResult> verify_specialization(const VerifyOptions& opt);
std::vector<CheckResult> verify_cross_r(const VerifyOptions& opt);
std::vector<CheckResult> verify_positivity(const VerifyOptions& opt);
std::vector<CheckResult> verify_degree(const VerifyOptions& opt);
std::vector<CheckResult> verify_stability(const VerifyOptions& opt);
std::vector<CheckResult> verify_cauchy(const VerifyOptions& opt);
std::vector<CheckResult> verify_structural(const VerifyOptions& opt);
std::vector<CheckResult> verify_oracles(const VerifyOptions& opt);
std::vector<CheckResult> verify_rational_identities(const VerifyOptions& opt);

/// First differing entry of two tables over the same order, or empty.
std::string table_diff(const KostkaTable& a, const KostkaTable& b);

nlohmann::json report_to_json(const std::string& suite, const std::vector<CheckResult>& results);

}  // namespace mpk
