#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace expweyl
{

// Version tag of the structured (JSON) report layout.
inline constexpr const char *kReportSchema = "expweyl.report/1";

// Runs one command line (program name excluded) and returns the process exit
// status: 0 on success, 1 when a check command reports a failure, 2 on a
// usage error, and 10 + ErrorCode for a surfaced module error.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace expweyl
