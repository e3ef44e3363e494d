#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "divgraph/model.hpp"
#include "divgraph/models.hpp"

namespace divgraph {

/// Analyses a run can produce, in execution order.
enum class Output { Graph, Components, Classify, Atomicity, Topology, OracleCheck };

std::string_view output_name(Output output);
/// Throws ParseError for unknown names.
Output parse_output(std::string_view name);
const std::vector<Output>& all_outputs();

struct RunConfig {
  ModelDefinition model;
  WindowSpec window;
  std::size_t length_cap = 64;
  std::size_t search_bound = 8;
  /// Sorted into execution order, duplicate-free.
  std::vector<Output> outputs;
  bool assert_mode = false;
};

/// Line-oriented "key = value" text; '#' starts a comment. Numbers are exact
/// rationals. Recognized keys:
///
///   kind, id, generators, assert, outputs,
///   window.<bound>, window.fractional, window.elements, window.cofactors,
///   model.declared_atoms, flags.value_faithful, flags.antimatter,
///   bounds.length_cap, bounds.search, bounds.oracle
///
/// Lists are ';'-separated; scalar generators may also be ','-separated.
/// Throws ParseError naming the line, UnknownModelKind, or InvalidBounds.
RunConfig parse_config(std::string_view text);
RunConfig load_config(const std::string& path);

}  // namespace divgraph
