#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "egcd/trace.hpp"

namespace egcd::cli {

/// Exit codes: 0 success, 1 domain failure, 2 usage or parse error.
inline constexpr int kOk = 0;
inline constexpr int kDomainFailure = 1;
inline constexpr int kUsage = 2;

enum class TraceFormat { json, csv };

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Checks `trace` with check_trace, writes it in `format` to `out`, and
/// reports any violation on `err`. Returns kOk or kDomainFailure.
int emit_checked_trace(const EgcdTrace& trace, TraceFormat format, std::ostream& out, std::ostream& err);

}  // namespace egcd::cli
