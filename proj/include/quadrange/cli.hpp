#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "quadrange/io.hpp"

namespace quadrange {

/// Exit statuses of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitBadInput = 2;

/// Runs one invocation. `args` excludes the program name. Documents go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// The analyze document for a parsed model.
Json analyze_report(const ModelDocument& doc, const ToleranceConfig& cfg);

/// Parses "re,im" (or a bare real) without consulting the locale.
Complex parse_complex_arg(const std::string& text);

}  // namespace quadrange
