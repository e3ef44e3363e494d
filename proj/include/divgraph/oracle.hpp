#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "divgraph/graph.hpp"
#include "divgraph/model.hpp"

namespace divgraph {

inline constexpr std::size_t kOracleVertexLimit = 500;

struct Disagreement {
  std::string check;
  std::string subject;
  std::string detail;
};

struct OracleReport {
  std::size_t vertices_checked = 0;
  std::size_t pairs_checked = 0;
  /// Verdicts computed from brute-force factorization enumeration alone.
  std::map<Property, Status> oracle_verdicts;
  std::map<Property, Status> path_verdicts;
  std::vector<Disagreement> disagreements;

  bool agree() const { return disagreements.empty(); }
};

/// Compares the path-based classification of the graph with the model's
/// factorization oracle (lengths and factorization multisets per vertex, and
/// the Atomic/BFD/HFD verdicts), and weak components with
/// quotient_of_atomics over all vertex pairs. Throws WindowTooLarge above
/// kOracleVertexLimit vertices.
OracleReport oracle_crosscheck(const DivisibilityModel& model, const DivGraph& graph,
                               std::size_t length_cap, std::size_t search_bound);

}  // namespace divgraph
