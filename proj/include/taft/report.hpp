#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace taft {

/// One verified case. case_id values are stable across versions; params
/// repeat the case coordinates as strings for machine consumption.
struct CaseResult {
    std::string case_id;
    std::vector<std::pair<std::string, std::string>> params;
    bool pass = false;
    std::string detail;  // empty unless there is something to say
};

struct VerificationReport {
    std::string tool_version;
    int n = 0;
    int root_exponent = 1;
    std::string suite;
    std::vector<CaseResult> cases;
    struct Summary {
        long total = 0;
        long passed = 0;
        long failed = 0;
        long long elapsed_ms = 0;  // the only nondeterministic field
    } summary;

    void add_case(CaseResult c) { cases.push_back(std::move(c)); }
    void finalize(long long elapsed_ms);
    bool all_passed() const { return summary.failed == 0; }
};

/// JSON is the canonical format; CSV and text are derived views. All three
/// are deterministic for a fixed configuration (elapsed_ms excepted).
std::string reports_to_json(std::span<const VerificationReport> reports);
std::string reports_to_csv(std::span<const VerificationReport> reports);
std::string reports_to_text(std::span<const VerificationReport> reports);

/// One row of the identity table: the composition sum against both
/// closed-form oracles.
struct IdentityRow {
    int n = 0;
    int k = 0;
    int s = 0;
    std::string lhs;         // composition sum
    std::string rhs_qbinom;  // Gaussian binomial branch (or 0)
    std::string rhs_series;  // series-oracle coefficient
    bool pass = false;
};

std::vector<IdentityRow> identity_table(int n, int root_exponent);

std::string table_to_csv(std::span<const IdentityRow> rows);
std::string table_to_json(std::span<const IdentityRow> rows);
std::string table_to_text(std::span<const IdentityRow> rows);

}  // namespace taft
