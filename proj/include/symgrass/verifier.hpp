#pragma once

// Verification suites and report serialization behind the CLI.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "symgrass/code_engine.hpp"

namespace symgrass {

enum class Status { pass, fail, skipped_budget };

std::string_view status_name(Status s);
Status parse_status(std::string_view s);

struct CheckRecord {
    std::string name;
    std::string reference;   // the mathematical statement being checked
    std::string source;      // origin of the expected value: formula, enumeration, tabulated
    nlohmann::json expected;
    nlohmann::json computed;
    Status status = Status::pass;
    std::string detail;
    std::optional<bool> discrepancy;         // tabulated value disagrees with the formula
    std::optional<std::uint64_t> required;   // skipped_budget only
    std::optional<std::uint64_t> budget;
};

struct VerificationReport {
    std::string suite;
    nlohmann::json parameters = nlohmann::json::object();
    std::vector<CheckRecord> checks;
    // Runtime metadata, excluded from the deterministic part of the output.
    unsigned workers = 1;
    std::string timestamp;
    double elapsed_seconds = 0;

    void add(CheckRecord r) { checks.push_back(std::move(r)); }
    std::size_t count(Status s) const;
    bool ok() const { return count(Status::fail) == 0; }
    /// Deterministic identifier derived from suite and parameters.
    std::string run_id() const;
};

nlohmann::json to_json(const VerificationReport& r);
VerificationReport report_from_json(const nlohmann::json& j);

enum class Format { json, csv, text };
/// UnsupportedFormat for anything else.
Format parse_format(std::string_view s);
std::string report_emit(const VerificationReport& r, Format format);

struct RunOptions {
    std::optional<int> ell;              // unset: suite default (2 for tables)
    std::vector<std::uint32_t> q_list;   // empty: suite default
    std::uint64_t budget = default_budget();
    unsigned workers = 1;
    std::uint64_t seed = 1;
    std::uint64_t samples = 0;           // 0: suite default
};

/// One parameter-table row per q.
struct TableRow {
    std::uint32_t q = 0;
    std::uint64_t n = 0;
    int k = 0;
    std::uint64_t d_formula = 0;
    std::optional<std::uint64_t> d_exhaustive;
    std::uint64_t d_witness = 0;
    std::optional<std::uint64_t> d_tabulated;
    bool discrepancy = false;   // tabulated value differs from the formula
};

struct TableRun {
    VerificationReport report;
    std::vector<TableRow> rows;
};

/// q^delta - q^(delta-1) - q^(delta-2), delta = l(l+1)/2, for l >= 2; q - 1 for l = 1.
std::uint64_t distance_formula(int ell, std::uint32_t q);

/// Published (n, k, d) tables for l = 2 and l = 3.
std::optional<std::uint64_t> tabulated_distance(int ell, std::uint32_t q);

TableRun run_verify_tables(const RunOptions& opt);
std::string table_csv(const std::vector<TableRow>& rows, int ell);

const std::vector<std::string>& suite_names();
/// UnknownSuite for names outside suite_names().
VerificationReport run_lemma_checks(std::string_view suite, const RunOptions& opt);

// Counting helpers behind the lemma suites.
/// #{(t1, t2) : (t1 + a)(t2 + b) = lambda}.
std::uint64_t hyperbolic_count(const Field& f, Repr a, Repr b, Repr lambda);
/// Largest solution count of T_i^2 = a_i, T_i T_j = b_ij over all instances with n unknowns.
std::uint64_t quadratic_system_max(const Field& f, int n);

}  // namespace symgrass
