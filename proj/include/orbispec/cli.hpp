#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "orbispec/workspace.hpp"

namespace orbispec {

enum ExitCode : int { kExitOk = 0, kExitMismatch = 1, kExitInput = 2, kExitUnsupported = 3 };

/// Environment variable holding the largest accepted truncation order.
inline constexpr const char* kMaxOrderEnv = "ORBISPEC_MAX_N";
inline constexpr std::size_t kDefaultMaxOrder = 64;

std::size_t max_truncation_order();

struct JobOutput {
  std::string text;
  int exit_code = kExitOk;
  std::string error;  // diagnostic for the error stream
};

enum class OutputFormat { Text, Csv };

/// Runs one job; ws may be null for expand jobs.
JobOutput execute_job(const Workspace* ws, const JobDecl& job, OutputFormat format);

/// Parses "(1-T)^-{1/2}", "(1+T)^{1/2}", "A^0", "(<series>)^[<element>]".
/// "A" stands for the series passed in series_text.
struct ExpandRequest {
  TruncatedSeries base;
  GroupRingElement exponent;
};
ExpandRequest parse_expand_expression(std::string_view expr, const Signature& sig, std::size_t order,
                                      std::string_view series_text);

/// CSV field quoting: fields containing commas or quotes are wrapped in quotes.
std::string csv_field(const std::string& s);

/// argv-style entry point (args excludes the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orbispec
