#pragma once

#include <string>

#include "lrc/suites.hpp"

namespace lrc {

enum class ReportFormat { Text, Json };

/// {suite, cases: [{id, status, witness?}], seed, elapsed_ms}
std::string report_json(const SuiteReport& r);
std::string report_text(const SuiteReport& r);
/// Inverse of report_json; throws std::invalid_argument on malformed input.
SuiteReport parse_report_json(const std::string& text);

/// Writes to `path`, or to stdout when the path is empty.  Throws ConfigError when the file cannot be written.
void emit_report(const SuiteReport& r, ReportFormat format, const std::string& path = "");

}  // namespace lrc
