#include "divgraph/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <unordered_set>

#include "divgraph/errors.hpp"
#include "divgraph/parallel.hpp"

namespace divgraph {

std::string_view status_name(Status s) {
  switch (s) {
    case Status::Holds: return "Holds";
    case Status::Fails: return "Fails";
    case Status::Inconclusive: return "Inconclusive";
  }
  return "?";
}

std::string_view provenance_name(Provenance p) {
  switch (p) {
    case Provenance::Graph: return "Graph";
    case Provenance::Analytic: return "Analytic";
    case Provenance::Searched: return "Searched";
  }
  return "?";
}

std::string_view terminal_name(TerminalKind kind) {
  switch (kind) {
    case TerminalKind::AtomSink: return "AtomSink";
    case TerminalKind::NonAtomDeadEnd: return "NonAtomDeadEnd";
    case TerminalKind::WindowBoundary: return "WindowBoundary";
    case TerminalKind::LengthCap: return "LengthCap";
  }
  return "?";
}

std::string_view property_name(Property p) {
  switch (p) {
    case Property::Atomic: return "Atomic";
    case Property::ACCP: return "ACCP";
    case Property::BFD: return "BFD";
    case Property::FFD: return "FFD";
    case Property::HFD: return "HFD";
  }
  return "?";
}

DivGraph::DivGraph(std::vector<Element> vertices, std::vector<Edge> edges,
                   std::vector<bool> boundary, bool fractional)
    : vertices_(std::move(vertices)),
      edges_(std::move(edges)),
      boundary_(std::move(boundary)),
      fractional_(fractional),
      out_(vertices_.size()),
      in_(vertices_.size()) {
  if (boundary_.size() != vertices_.size()) {
    throw Error(ErrorCode::InvalidElement, "boundary flags do not match the vertex count");
  }
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!index_.emplace(vertices_[i].label(), i).second) {
      throw Error(ErrorCode::InvalidElement, "duplicate vertex '" + vertices_[i].label() + "'");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto [from, to] = edges_[e];
    if (from >= vertices_.size() || to >= vertices_.size()) {
      throw Error(ErrorCode::InvalidElement, "edge endpoint out of range");
    }
    if (from == to) {
      throw Error(ErrorCode::InvalidElement, "self-loop at '" + vertices_[from].label() + "'");
    }
    if (e > 0 && edges_[e - 1] == edges_[e]) {
      throw Error(ErrorCode::InvalidElement, "parallel edge");
    }
    out_[from].push_back(to);
    in_[to].push_back(from);
  }
}

std::optional<std::size_t> DivGraph::index_of(const Element& e) const {
  return index_of(e.label());
}

std::optional<std::size_t> DivGraph::index_of(const std::string& label) const {
  const auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::vector<std::size_t>> DivGraph::topological_order() const {
  std::vector<std::size_t> indegree(size());
  for (std::size_t i = 0; i < size(); ++i) indegree[i] = in_[i].size();
  std::deque<std::size_t> ready;
  for (std::size_t i = 0; i < size(); ++i) {
    if (indegree[i] == 0) ready.push_back(i);
  }
  std::vector<std::size_t> order;
  while (!ready.empty()) {
    const std::size_t v = ready.front();
    ready.pop_front();
    order.push_back(v);
    for (std::size_t w : out_[v]) {
      if (--indegree[w] == 0) ready.push_back(w);
    }
  }
  if (order.size() != size()) return std::nullopt;
  return order;
}

DivGraph DivGraph::without_edge(const Edge& edge) const {
  std::vector<Edge> kept;
  for (const auto& e : edges_) {
    if (e != edge) kept.push_back(e);
  }
  return DivGraph(vertices_, std::move(kept), boundary_, fractional_);
}

DivGraph integral_subgraph(const DivisibilityModel& model, const DivGraph& graph) {
  std::vector<long> local(graph.size(), -1);
  std::vector<Element> vertices;
  std::vector<bool> boundary;
  for (std::size_t i = 0; i < graph.size(); ++i) {
    const Element& v = graph.vertex(i);
    if (model.is_integral(v) && !model.is_unit(v)) {
      local[i] = static_cast<long>(vertices.size());
      vertices.push_back(v);
      boundary.push_back(graph.is_boundary(i));
    }
  }
  std::vector<Edge> edges;
  for (const auto& [from, to] : graph.edges()) {
    if (local[from] >= 0 && local[to] >= 0) {
      edges.emplace_back(static_cast<std::size_t>(local[from]), static_cast<std::size_t>(local[to]));
    }
  }
  return DivGraph(std::move(vertices), std::move(edges), std::move(boundary), false);
}

bool cover_edge(const DivisibilityModel& model, const Element& a, const Element& b) {
  if (a == b) return false;
  return model.is_atom(model.quotient(a, b));
}

bool strictly_below(const DivisibilityModel& model, const Element& a, const Element& b) {
  if (a == b) return false;
  return model.is_atomic_element(model.quotient(a, b));
}

namespace {

void prepare_window(const DivisibilityModel& model, std::vector<Element>& window) {
  std::sort(window.begin(), window.end(),
            [&](const Element& a, const Element& b) { return model.element_less(a, b); });
  window.erase(std::unique(window.begin(), window.end()), window.end());
}

bool is_fractional_window(const DivisibilityModel& model, const std::vector<Element>& window) {
  return std::any_of(window.begin(), window.end(), [&](const Element& v) {
    return !model.is_integral(v) || model.is_unit(v);
  });
}

bool boundary_flag(const DivisibilityModel& model, const Element& v, bool fractional,
                   const std::unordered_set<std::string>& labels) {
  const SuccessorProbe probe = model.atom_successors(v, fractional);
  if (probe.unbounded) return true;
  return std::any_of(probe.successors.begin(), probe.successors.end(),
                     [&](const Element& s) { return labels.count(s.label()) == 0; });
}

std::vector<Edge> row_edges(const DivisibilityModel& model, const std::vector<Element>& window,
                            std::size_t i) {
  std::vector<Edge> row;
  for (std::size_t j = 0; j < window.size(); ++j) {
    if (j != i && cover_edge(model, window[i], window[j])) row.emplace_back(i, j);
  }
  return row;
}

}  // namespace

DivGraph build_graph(const DivisibilityModel& model, std::vector<Element> window) {
  prepare_window(model, window);
  const bool fractional = is_fractional_window(model, window);
  std::unordered_set<std::string> labels;
  for (const auto& v : window) labels.insert(v.label());

  const std::size_t n = window.size();
  std::vector<std::vector<Edge>> rows(n);
  std::vector<char> boundary(n, 0);
  parallel_for(n, [&](std::size_t i) {
    rows[i] = row_edges(model, window, i);
    boundary[i] = boundary_flag(model, window[i], fractional, labels) ? 1 : 0;
  });

  std::vector<Edge> edges;
  for (auto& row : rows) edges.insert(edges.end(), row.begin(), row.end());
  return DivGraph(std::move(window), std::move(edges),
                  std::vector<bool>(boundary.begin(), boundary.end()), fractional);
}

namespace serial {

DivGraph build_graph(const DivisibilityModel& model, std::vector<Element> window) {
  prepare_window(model, window);
  const bool fractional = is_fractional_window(model, window);
  std::unordered_set<std::string> labels;
  for (const auto& v : window) labels.insert(v.label());

  std::vector<Edge> edges;
  std::vector<bool> boundary;
  for (std::size_t i = 0; i < window.size(); ++i) {
    for (std::size_t j = 0; j < window.size(); ++j) {
      if (i != j && cover_edge(model, window[i], window[j])) edges.emplace_back(i, j);
    }
    boundary.push_back(boundary_flag(model, window[i], fractional, labels));
  }
  return DivGraph(std::move(window), std::move(edges), std::move(boundary), fractional);
}

}  // namespace serial

SinkReport sinks(const DivisibilityModel& model, const DivGraph& graph) {
  SinkReport report;
  for (std::size_t i = 0; i < graph.size(); ++i) {
    if (!graph.out(i).empty()) continue;
    const Element& v = graph.vertex(i);
    const bool atom = model.is_atom(v);
    if (graph.in(i).empty()) {
      // Isolated vertex: counted only when the model confirms an atom.
      if (atom) report.sinks.push_back(v);
      continue;
    }
    (atom ? report.sinks : report.artifacts).push_back(v);
  }
  return report;
}

PathReport paths_from(const DivisibilityModel& model, const DivGraph& graph, const Element& a,
                      std::size_t length_cap) {
  const auto start = graph.index_of(a);
  if (!start) {
    throw Error(ErrorCode::InvalidElement, "'" + a.label() + "' is not a vertex of the graph");
  }
  PathReport report{a, {}, true};
  std::vector<std::size_t> path{*start};
  std::function<void()> walk = [&]() {
    const std::size_t v = path.back();
    const auto& next = graph.out(v);
    if (graph.is_boundary(v)) {
      report.paths.push_back(GraphPath{path, TerminalKind::WindowBoundary});
    }
    if (next.empty()) {
      if (!graph.is_boundary(v)) {
        report.paths.push_back(GraphPath{path, model.is_atom(graph.vertex(v))
                                                   ? TerminalKind::AtomSink
                                                   : TerminalKind::NonAtomDeadEnd});
      }
      return;
    }
    if (path.size() - 1 == length_cap) {
      report.paths.push_back(GraphPath{path, TerminalKind::LengthCap});
      report.exhaustive = false;
      return;
    }
    for (std::size_t w : next) {
      path.push_back(w);
      walk();
      path.pop_back();
    }
  };
  walk();
  return report;
}

std::vector<VertexAnalysis> analyze_paths(const DivisibilityModel& model, const DivGraph& graph,
                                          std::size_t length_cap) {
  // Restrict to P(D)^+: integral nonunit vertices and the edges among them.
  std::vector<std::size_t> members;
  std::vector<long> local(graph.size(), -1);
  for (std::size_t i = 0; i < graph.size(); ++i) {
    const Element& v = graph.vertex(i);
    if (model.is_integral(v) && !model.is_unit(v)) {
      local[i] = static_cast<long>(members.size());
      members.push_back(i);
    }
  }
  std::unordered_set<std::string> labels;
  for (std::size_t i : members) labels.insert(graph.vertex(i).label());

  const auto order = graph.topological_order();
  if (!order) {
    throw Error(ErrorCode::InvalidElement, "graph has a directed cycle");
  }

  std::vector<VertexAnalysis> result;
  result.reserve(members.size());
  for (std::size_t i : members) result.push_back(VertexAnalysis{graph.vertex(i), {}, {}, 0, false, false, false});

  // Successors first: walk the topological order backwards.
  for (auto it = order->rbegin(); it != order->rend(); ++it) {
    const long k = local[*it];
    if (k < 0) continue;
    VertexAnalysis& va = result[static_cast<std::size_t>(k)];
    const Element& v = graph.vertex(*it);
    va.boundary = graph.fractional() ? boundary_flag(model, v, false, labels)
                                     : graph.is_boundary(*it);
    std::vector<std::size_t> next;
    for (std::size_t w : graph.out(*it)) {
      if (local[w] >= 0) next.push_back(w);
    }
    if (next.empty()) {
      const bool atom = model.is_atom(v);
      if (atom) {
        va.lengths.insert(1);
        va.factorizations.insert({v.label()});
      }
      va.escapes = va.boundary;
      va.dead_end = !atom && !va.boundary;
      continue;
    }
    va.escapes = va.boundary;
    for (std::size_t w : next) {
      const VertexAnalysis& child = result[static_cast<std::size_t>(local[w])];
      const std::string atom = model.quotient(v, graph.vertex(w)).label();
      for (std::size_t len : child.lengths) va.lengths.insert(len + 1);
      for (const auto& f : child.factorizations) {
        std::vector<std::string> extended = f;
        extended.insert(std::upper_bound(extended.begin(), extended.end(), atom), atom);
        va.factorizations.insert(std::move(extended));
      }
      va.longest_path = std::max(va.longest_path, child.longest_path + 1);
      va.escapes = va.escapes || child.escapes;
      va.dead_end = va.dead_end || child.dead_end;
    }
    if (va.longest_path > length_cap) va.escapes = true;
  }
  return result;
}

namespace {

template <typename Pred>
std::optional<std::size_t> simplest_where(const DivisibilityModel& model,
                                          const std::vector<VertexAnalysis>& vs, Pred pred) {
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (!pred(vs[i])) continue;
    if (!best || model.simpler(vs[i].vertex, vs[*best].vertex)) best = i;
  }
  return best;
}

std::vector<std::string> escaping_path(const DivGraph& graph,
                                       const std::vector<VertexAnalysis>& vs,
                                       const Element& from) {
  std::unordered_map<std::string, std::size_t> pos;
  for (std::size_t i = 0; i < vs.size(); ++i) pos.emplace(vs[i].vertex.label(), i);
  std::vector<std::string> path{from.label()};
  std::size_t g = *graph.index_of(from);
  while (!vs[pos.at(graph.vertex(g).label())].boundary &&
         vs[pos.at(graph.vertex(g).label())].longest_path > 0) {
    bool moved = false;
    for (std::size_t w : graph.out(g)) {
      const auto it = pos.find(graph.vertex(w).label());
      if (it != pos.end() && vs[it->second].escapes) {
        g = w;
        path.push_back(graph.vertex(w).label());
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }
  return path;
}

std::vector<std::size_t> to_vector(const std::set<std::size_t>& s) { return {s.begin(), s.end()}; }

}  // namespace

FactorizationReport classify(const DivisibilityModel& model, const DivGraph& graph,
                             std::size_t length_cap) {
  FactorizationReport report;
  report.vertices = analyze_paths(model, graph, length_cap);
  const auto& vs = report.vertices;
  auto& verdicts = report.verdicts;

  // Atomic: some complete path from every vertex.
  const auto dead = simplest_where(model, vs, [](const VertexAnalysis& v) {
    return v.lengths.empty() && !v.escapes;
  });
  const auto open = simplest_where(model, vs, [](const VertexAnalysis& v) {
    return v.lengths.empty() && v.escapes;
  });
  std::optional<std::size_t> certified_non_atomic;
  if (!dead && open) {
    certified_non_atomic = simplest_where(model, vs, [&](const VertexAnalysis& v) {
      if (!v.lengths.empty()) return false;
      try {
        return !model.is_atomic_element(v.vertex);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::UndecidableWithoutBound) throw;
        return false;
      }
    });
  }
  if (dead) {
    verdicts.emplace(Property::Atomic,
                     Verdict{Status::Fails, Provenance::Graph,
                             Witness{vs[*dead].vertex,
                                     "no path from this vertex terminates at an atom", {}, {}}});
  } else if (open && certified_non_atomic) {
    verdicts.emplace(Property::Atomic,
                     Verdict{Status::Fails, Provenance::Analytic,
                             Witness{vs[*certified_non_atomic].vertex,
                                     "the model certifies this element is not a product of atoms",
                                     {}, {}}});
  } else if (open) {
    verdicts.emplace(Property::Atomic,
                     Verdict{Status::Inconclusive, Provenance::Graph,
                             BoundaryReason{"paths from this vertex leave the window before "
                                            "reaching an atom",
                                            length_cap, vs[*open].vertex,
                                            escaping_path(graph, vs, vs[*open].vertex)}});
  } else {
    verdicts.emplace(Property::Atomic,
                     Verdict{Status::Holds, Provenance::Graph,
                             WindowCertificate{"every vertex has a path terminating at an atom", {}}});
  }

  // ACCP: every path terminates at an atom.
  const Verdict& atomic = verdicts.at(Property::Atomic);
  const auto dead_path = simplest_where(model, vs, [](const VertexAnalysis& v) { return v.dead_end; });
  const auto escaping = simplest_where(model, vs, [](const VertexAnalysis& v) { return v.escapes; });
  if (atomic.fails()) {
    Witness w = atomic.witness();
    w.reason = "not atomic: " + w.reason;
    verdicts.emplace(Property::ACCP, Verdict{Status::Fails, atomic.provenance, w});
  } else if (dead_path) {
    verdicts.emplace(Property::ACCP,
                     Verdict{Status::Fails, Provenance::Graph,
                             Witness{vs[*dead_path].vertex,
                                     "a path from this vertex ends at a non-atom with no successors",
                                     {}, {}}});
  } else if (escaping) {
    verdicts.emplace(Property::ACCP,
                     Verdict{Status::Inconclusive, Provenance::Graph,
                             BoundaryReason{"a path from this vertex escapes the window or hits "
                                            "the length cap",
                                            length_cap, vs[*escaping].vertex,
                                            escaping_path(graph, vs, vs[*escaping].vertex)}});
  } else {
    verdicts.emplace(Property::ACCP,
                     Verdict{Status::Holds, Provenance::Graph,
                             WindowCertificate{"every path from every vertex terminates at an atom",
                                               {}}});
  }

  const Verdict& accp = verdicts.at(Property::ACCP);
  const auto inherit = [&](const std::string& holds_summary) {
    if (accp.holds()) {
      return Verdict{Status::Holds, Provenance::Graph, WindowCertificate{holds_summary, {}}};
    }
    return accp;
  };
  std::size_t max_length = 0;
  std::size_t max_count = 0;
  for (const auto& v : vs) {
    if (!v.lengths.empty()) max_length = std::max(max_length, *v.lengths.rbegin());
    max_count = std::max(max_count, v.factorizations.size());
  }
  verdicts.emplace(Property::BFD,
                   inherit("all paths terminate at atoms; longest factorization in window has "
                           "length " + std::to_string(max_length)));
  verdicts.emplace(Property::FFD,
                   inherit("all paths terminate at atoms; at most " + std::to_string(max_count) +
                           " factorization(s) per vertex"));

  const auto uneven = simplest_where(model, vs, [](const VertexAnalysis& v) {
    return v.lengths.size() >= 2;
  });
  if (uneven) {
    verdicts.emplace(Property::HFD,
                     Verdict{Status::Fails, Provenance::Graph,
                             Witness{vs[*uneven].vertex,
                                     "complete paths from this vertex have different lengths",
                                     to_vector(vs[*uneven].lengths), {}}});
  } else {
    verdicts.emplace(Property::HFD,
                     inherit("every vertex has a single factorization length"));
  }
  return report;
}

std::vector<Element> interval(const DivisibilityModel& model, const Element& a, const Element& b,
                              const std::vector<Element>& universe) {
  std::vector<Element> out;
  for (const auto& x : universe) {
    const bool above_a = x == a || strictly_below(model, a, x);
    const bool below_b = x == b || strictly_below(model, x, b);
    if (above_a && below_b) out.push_back(x);
  }
  return out;
}

}  // namespace divgraph
