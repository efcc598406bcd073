#pragma once

#include <cstdint>
#include <ostream>
#include <string>

namespace permdual::cli {

struct VerifyOptions {
  std::string suite = "all";
  int n_lo = 3;
  int n_hi = 6;
  std::uint64_t seed = 1;
  int sample_size = 0;  // 0 = exhaustive where a choice exists
  std::string fixture;
};

// Runs the requested suites and writes the run report. The report is
// deterministic for a given (options, fixture content); wall-clock timing
// goes to timing_out instead. Returns the process exit code.
int run_verify(const VerifyOptions& options, std::ostream& out, std::ostream& timing_out);

}  // namespace permdual::cli
