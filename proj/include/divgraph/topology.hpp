#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "divgraph/graph.hpp"
#include "divgraph/model.hpp"
#include "divgraph/partition.hpp"

namespace divgraph {

/// Finite poset on labelled points; leq[a][b] means a <= b.
struct FinitePoset {
  std::vector<std::string> points;
  std::vector<std::vector<bool>> leq;

  std::size_t size() const { return points.size(); }
  /// Reflexive, antisymmetric and transitive.
  bool valid() const;

  friend bool operator==(const FinitePoset&, const FinitePoset&) = default;
};

/// Finite Alexandrov space given by its minimal open sets, stored as sorted
/// point indices.
struct AlexandrovSpace {
  std::vector<std::string> points;
  std::vector<std::vector<std::size_t>> min_open;

  std::size_t size() const { return points.size(); }
  std::size_t index_of(const std::string& label) const;

  friend bool operator==(const AlexandrovSpace&, const AlexandrovSpace&) = default;
};

/// min_open(a) = {x : x <= a}.
AlexandrovSpace poset_to_space(const FinitePoset& poset);

/// a <= b iff a in min_open(b). Throws NotT0 when two points share a minimal
/// open set and InvalidElement when the sets are not a coherent basis.
FinitePoset space_to_poset(const AlexandrovSpace& space);

bool is_T0(const AlexandrovSpace& space);
/// x in min_open(x), and y in min_open(x) implies min_open(y) within
/// min_open(x).
bool is_basis_coherent(const AlexandrovSpace& space);

/// A chain a = x0, ..., xn = b whose consecutive minimal open sets meet.
bool chain_connected(const AlexandrovSpace& space, std::size_t a, std::size_t b);
Partition connected_components_topology(const AlexandrovSpace& space);

/// Poset on the graph's vertices with x <= a iff x == a or x/a is atomic.
FinitePoset window_poset(const DivisibilityModel& model, const DivGraph& graph);

namespace serial {
FinitePoset window_poset(const DivisibilityModel& model, const DivGraph& graph);
}  // namespace serial

}  // namespace divgraph
