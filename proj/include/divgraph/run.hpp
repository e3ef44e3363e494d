#pragma once

#include <optional>
#include <string>
#include <vector>

#include "divgraph/config.hpp"
#include "divgraph/report.hpp"

namespace divgraph {

struct RunOptions {
  /// Write one JSON file per output (and the DOT file) into this directory.
  std::optional<std::string> out_dir;
  bool write_dot = false;
  /// Overrides the configured search bound.
  std::optional<std::size_t> search_bound;
  /// Overrides the configured assert mode.
  std::optional<bool> assert_mode;
};

struct RunReport {
  /// {"model": ..., "window": ..., "<output>": ...}; keys sorted.
  Json document;
  /// Set when the graph output ran.
  std::string dot;
  /// Fails-with-witness verdicts, oracle disagreements and failed checks.
  std::vector<std::string> failures;
  std::vector<std::string> written;
  /// 0, or 1 when assert mode is on and failures is non-empty.
  int exit_code = 0;
};

/// Builds the model and window, then runs the selected outputs in the fixed
/// Output order. Module errors propagate unchanged.
RunReport run(const RunConfig& config, const std::vector<Output>& outputs,
              const RunOptions& options = {});
RunReport run(const RunConfig& config, const RunOptions& options = {});

}  // namespace divgraph
