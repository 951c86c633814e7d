#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "peanuts/estimators.hpp"

namespace peanuts {

enum class Command { Count, Exact, List, Stats };
enum class OutputFormat { Json, Csv };

struct RunConfig {
  std::string input_path;
  Command command = Command::Count;
  PatternKind pattern = PatternKind::KClique;
  int k = 0;
  std::uint64_t samples = 500000;
  std::optional<std::uint64_t> seed; // time-derived when unset, always echoed
  Mode mode = Mode::InverseTS;
  OutputFormat output = OutputFormat::Json;
  int threads = 1;
  std::uint64_t max_list = 1000; // cap on emitted list instances
  bool with_exact = false;       // stats: also compute exact counts and ratios
};

// Executes one command and writes the report to out, diagnostics to err.
// Exit codes: 0 success, 1 usage/config error, 2 I/O or parse error.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

} // namespace peanuts
