#pragma once

#include <string>

#include "hsp/homspace.hpp"
#include "hsp/rational.hpp"

namespace hsp {

inline constexpr const char* kReportSchema = "report/v1";

struct AnalyzeOptions {
  Rat theta = 0;
  bool solve = true;
};

// Exit codes shared by the command line tool.
enum ExitCode { kExitOk = 0, kExitUsage = 1, kExitInvalid = 2, kExitUnsupported = 3 };

struct AnalysisReport {
  std::string json;     // "report/v1", byte-deterministic
  std::string summary;  // human-readable text
  int exit_code = kExitOk;
};

// Full pipeline: weight polytope, flats, minimal polytope, bounds, marked
// faces with singularity verdicts, and the solver when d <= 3.
AnalysisReport analyze(const HomSpaceData& data, const AnalyzeOptions& options = {});

// Polytope-level report for the Kaehler b2 = 1 family, 2 <= d <= 7.
AnalysisReport kaehler_b2_report(int d);

}  // namespace hsp
