#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graft/io.hpp"
#include "graft/parallel.hpp"
#include "graft/report.hpp"

namespace graft {

inline constexpr std::uint64_t kDefaultSeed = 20140413;

struct SuiteOptions {
    std::vector<std::string> only; // empty = everything
    std::uint64_t seed = kDefaultSeed;
    Exec exec = Exec::OpenMP;
};

/// Runs the full verification suite for one corpus entry, in a fixed order.
/// Check failures and internal errors become FAIL/ERROR verdicts; this never
/// throws for a parsed input.
std::vector<CheckReport> run_checks(const ParsedInput& input, const SuiteOptions& opt);

enum class ReportFormat { Text, Structured };

/// Text mode: one `CHECK <name> <verdict> ...` line per report. Structured
/// mode: a JSON document with stable key order and no timing fields, so
/// identical inputs and seed give byte-identical output.
std::string emit_report(const std::vector<CheckReport>& reports, ReportFormat fmt,
                        const std::string& source, std::uint64_t seed);

/// 0 iff no FAIL/ERROR verdicts, else 1.
int exit_code(const std::vector<CheckReport>& reports);

} // namespace graft
