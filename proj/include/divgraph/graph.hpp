#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "divgraph/model.hpp"
#include "divgraph/verdict.hpp"

namespace divgraph {

using Edge = std::pair<std::size_t, std::size_t>;

/// Finite window of the graph of divisibility. Vertices are kept in
/// model order; edge (i, j) means vertices[i] -> vertices[j], i.e.
/// vertices[i] / vertices[j] is an atom. Immutable once built.
class DivGraph {
 public:
  DivGraph() = default;
  /// Throws InvalidElement on self-loops, parallel edges or bad indices.
  DivGraph(std::vector<Element> vertices, std::vector<Edge> edges, std::vector<bool> boundary,
           bool fractional);

  const std::vector<Element>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t size() const { return vertices_.size(); }
  const Element& vertex(std::size_t i) const { return vertices_[i]; }
  bool is_boundary(std::size_t i) const { return boundary_[i]; }
  const std::vector<bool>& boundary() const { return boundary_; }
  /// True when the window is a window of P(D) rather than P(D)^+.
  bool fractional() const { return fractional_; }

  const std::vector<std::size_t>& out(std::size_t i) const { return out_[i]; }
  const std::vector<std::size_t>& in(std::size_t i) const { return in_[i]; }

  std::optional<std::size_t> index_of(const Element& e) const;
  std::optional<std::size_t> index_of(const std::string& label) const;

  /// Kahn order; nullopt when a directed cycle exists.
  std::optional<std::vector<std::size_t>> topological_order() const;

  /// Copy with one edge removed (used to seed harness sanity checks).
  DivGraph without_edge(const Edge& edge) const;

  friend bool operator==(const DivGraph& a, const DivGraph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_ && a.boundary_ == b.boundary_ &&
           a.fractional_ == b.fractional_;
  }

 private:
  std::vector<Element> vertices_;
  std::vector<Edge> edges_;
  std::vector<bool> boundary_;
  bool fractional_ = false;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// The subgraph induced on the integral nonunit vertices (P(D)^+).
DivGraph integral_subgraph(const DivisibilityModel& model, const DivGraph& graph);

/// a -> b iff a/b is an atom. False for a == b.
bool cover_edge(const DivisibilityModel& model, const Element& a, const Element& b);

/// a < b in the divisibility order of P(D): a/b is an atomic element.
bool strictly_below(const DivisibilityModel& model, const Element& a, const Element& b);

/// OpenMP-parallel over source vertices. The window may be in any order and
/// is sorted by the model; boundary flags come from successor probes.
DivGraph build_graph(const DivisibilityModel& model, std::vector<Element> window);

namespace serial {
/// Reference implementation of build_graph; single-threaded.
DivGraph build_graph(const DivisibilityModel& model, std::vector<Element> window);
}  // namespace serial

struct SinkReport {
  std::vector<Element> sinks;
  /// Candidates with no outgoing edge that the model says are not atoms.
  std::vector<Element> artifacts;
};

/// Vertices with in-edges but no out-edges, plus isolated model atoms;
/// every candidate is cross-checked with is_atom.
SinkReport sinks(const DivisibilityModel& model, const DivGraph& graph);

enum class TerminalKind { AtomSink, NonAtomDeadEnd, WindowBoundary, LengthCap };
std::string_view terminal_name(TerminalKind kind);

struct GraphPath {
  std::vector<std::size_t> vertices;
  TerminalKind terminal;
  std::size_t edge_count() const { return vertices.size() - 1; }
};

struct PathReport {
  Element source;
  std::vector<GraphPath> paths;
  /// No path was cut by the length cap.
  bool exhaustive = true;
};

/// Directed paths from a, up to length_cap edges. A boundary vertex also
/// closes an escaping path (its out-neighbourhood is truncated), while the
/// walk continues along in-window edges.
PathReport paths_from(const DivisibilityModel& model, const DivGraph& graph, const Element& a,
                      std::size_t length_cap);

enum class Property { Atomic, ACCP, BFD, FFD, HFD };
std::string_view property_name(Property p);

/// Path facts for one vertex of P(D)^+ in the window. Lengths count
/// factorization length (edges + 1 for the terminal atom).
struct VertexAnalysis {
  Element vertex;
  std::set<std::size_t> lengths;
  /// Factorizations spelled by complete paths, as sorted atom-label lists.
  std::set<std::vector<std::string>> factorizations;
  std::size_t longest_path = 0;
  bool boundary = false;
  /// Some path reaches a boundary vertex or the length cap.
  bool escapes = false;
  /// Some path ends at a non-atom with no successors at all.
  bool dead_end = false;
};

struct FactorizationReport {
  std::map<Property, Verdict> verdicts;
  std::vector<VertexAnalysis> vertices;
};

/// Window-relative classification over the P(D)^+ vertices of the graph.
FactorizationReport classify(const DivisibilityModel& model, const DivGraph& graph,
                             std::size_t length_cap);

/// Per-vertex path analysis used by classify (exposed for cross-checks).
std::vector<VertexAnalysis> analyze_paths(const DivisibilityModel& model, const DivGraph& graph,
                                          std::size_t length_cap);

/// {x in universe : a <= x <= b}, with a <= x meaning a == x or a < x.
std::vector<Element> interval(const DivisibilityModel& model, const Element& a, const Element& b,
                              const std::vector<Element>& universe);

}  // namespace divgraph
