#pragma once

#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "translab/core_numerics.hpp"
#include "translab/hydrogen.hpp"
#include "translab/products.hpp"

// Identity-suite runner and table emitters. The suite runs a fixed
// registry of machine checks, one per displayed identity, each with a
// baked-in default tolerance that can be overridden individually.

namespace translab::report {

/// One verified identity: lhs, rhs, residual, tolerance, verdict.
struct IdentityCheck {
    std::string id;
    std::string description;
    double lhs = 0.0;
    double rhs = 0.0;
    double abs_err = 0.0;  // |lhs - rhs| exactly as computed
    double tol = 0.0;
    bool pass = false;     // abs_err <= tol
};

/// Tolerances and term caps echoed into every report.
struct SuiteConfig {
    std::map<std::string, double> tol_overrides;
    std::size_t max_terms = 0;
    double tail_tol = 0.0;
};

struct SuiteReport {
    std::vector<IdentityCheck> checks;  // ordered by id
    bool all_pass = false;
    SuiteConfig config;
    std::string timestamp;  // ISO-8601 UTC; empty = omitted on emit
};

/// Thrown for malformed requests (unknown override ids and the like);
/// the CLI maps it to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Ids of the registered checks, in report order.
std::vector<std::string> registry_ids();

/// Run the full registry. Unknown override ids throw UsageError before any
/// computation. `jobs` > 1 runs checks concurrently; the report is
/// assembled in registry order regardless of completion order.
SuiteReport run_identity_suite(const std::map<std::string, double>& tol_overrides,
                               const core::TruncationPolicy& policy,
                               unsigned jobs = 1);

enum class Format { Csv, Json };

/// Emitters. CSV uses a mandatory header row, '.' decimal separator and
/// 17 significant digits (round-trip safe); JSON uses the field names of
/// the type definitions verbatim.
void emit(const SuiteReport& report, Format format, std::ostream& out);
void emit(std::span<const products::LadderRow> rows, Format format, std::ostream& out);
void emit(std::span<const hydrogen::VariationalRow> rows, Format format, std::ostream& out);
void emit(const core::SeriesResult& result, Format format, std::ostream& out);

/// Open `path` for writing ("-" = stdout) and emit into it; I/O failures
/// throw std::runtime_error naming the path.
template <typename T>
void emit_to(const T& value, Format format, const std::string& path);

/// 17-significant-digit formatting used by the CSV emitter (parsing the
/// result back yields the identical double).
std::string format_double(double x);

}  // namespace translab::report
