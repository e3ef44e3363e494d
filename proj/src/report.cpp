#include "divgraph/report.hpp"

#include <sstream>

namespace divgraph {

namespace {

struct EvidenceJson {
  Json operator()(const Certificate& c) const {
    return {{"kind", "certificate"},
            {"a", c.a.label()},
            {"b", c.b.label()},
            {"numerator_atoms", labels_json(c.numerator_atoms)},
            {"denominator_atoms", labels_json(c.denominator_atoms)}};
  }
  Json operator()(const Witness& w) const {
    Json j{{"kind", "witness"}, {"element", w.element.label()}, {"reason", w.reason}};
    if (!w.lengths.empty()) j["lengths"] = w.lengths;
    if (!w.path.empty()) j["path"] = w.path;
    return j;
  }
  Json operator()(const WindowCertificate& c) const {
    Json elements = Json::array();
    for (const auto& e : c.elements) {
      Json item{{"element", e.element.label()},
                {"atoms", labels_json(e.atoms)},
                {"product", e.product.label()},
                {"provenance", provenance_name(e.provenance)}};
      if (e.multiplier) item["multiplier"] = e.multiplier->label();
      elements.push_back(std::move(item));
    }
    return {{"kind", "window_certificate"}, {"summary", c.summary}, {"elements", elements}};
  }
  Json operator()(const BoundaryReason& b) const {
    Json j{{"kind", "boundary"}, {"reason", b.reason}, {"bound", b.bound}};
    if (b.element) j["element"] = b.element->label();
    if (!b.path.empty()) j["path"] = b.path;
    return j;
  }
};

std::string dot_quote(const std::string& text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Json labels_json(const std::vector<Element>& elements) {
  Json out = Json::array();
  for (const auto& e : elements) out.push_back(e.label());
  return out;
}

Json verdict_json(const Verdict& verdict) {
  return {{"status", status_name(verdict.status)},
          {"provenance", provenance_name(verdict.provenance)},
          {"evidence", std::visit(EvidenceJson{}, verdict.evidence)}};
}

Json partition_json(const Partition& partition) {
  return {{"count", partition.count()},
          {"component_of", partition.as_map()},
          {"components", partition.blocks()}};
}

Json graph_json(const DivisibilityModel& model, const DivGraph& graph) {
  Json edges = Json::array();
  for (const auto& [from, to] : graph.edges()) {
    edges.push_back({graph.vertex(from).label(), graph.vertex(to).label()});
  }
  std::vector<Element> boundary;
  for (std::size_t i = 0; i < graph.size(); ++i) {
    if (graph.is_boundary(i)) boundary.push_back(graph.vertex(i));
  }
  const SinkReport s = sinks(model, graph);
  return {{"vertices", labels_json(graph.vertices())},
          {"edges", edges},
          {"edge_count", graph.edges().size()},
          {"boundary", labels_json(boundary)},
          {"fractional", graph.fractional()},
          {"sinks", labels_json(s.sinks)},
          {"sink_artifacts", labels_json(s.artifacts)}};
}

std::string graph_dot(const DivisibilityModel& model, const DivGraph& graph) {
  std::ostringstream out;
  out << "digraph " << dot_quote(model.id()) << " {\n  rankdir=TB;\n";
  for (std::size_t i = 0; i < graph.size(); ++i) {
    const Element& v = graph.vertex(i);
    std::string style;
    if (model.is_atom(v)) style += "shape=doublecircle";
    if (graph.is_boundary(i)) style += std::string(style.empty() ? "" : ", ") + "style=dashed";
    out << "  " << dot_quote(v.label());
    if (!style.empty()) out << " [" << style << "]";
    out << ";\n";
  }
  for (const auto& [from, to] : graph.edges()) {
    out << "  " << dot_quote(graph.vertex(from).label()) << " -> "
        << dot_quote(graph.vertex(to).label()) << ";\n";
  }
  out << "}\n";
  return out.str();
}

Json classify_json(const DivisibilityModel& model, const DivGraph& graph,
                   const FactorizationReport& report) {
  Json verdicts = Json::object();
  for (const auto& [property, verdict] : report.verdicts) {
    verdicts[std::string(property_name(property))] = verdict_json(verdict);
  }
  Json vertices = Json::object();
  for (const auto& va : report.vertices) {
    vertices[va.vertex.label()] = {{"lengths", va.lengths},
                                   {"factorizations", va.factorizations},
                                   {"longest_path", va.longest_path},
                                   {"boundary", va.boundary},
                                   {"escapes", va.escapes},
                                   {"dead_end", va.dead_end}};
  }
  const SinkReport s = sinks(model, graph);
  return {{"verdicts", verdicts},
          {"vertices", vertices},
          {"sinks", labels_json(s.sinks)},
          {"sink_artifacts", labels_json(s.artifacts)}};
}

Json space_json(const AlexandrovSpace& space) {
  Json min_open = Json::object();
  for (std::size_t i = 0; i < space.size(); ++i) {
    std::vector<std::string> members;
    for (std::size_t j : space.min_open[i]) members.push_back(space.points[j]);
    min_open[space.points[i]] = members;
  }
  return min_open;
}

Json oracle_json(const OracleReport& report) {
  Json oracle = Json::object();
  Json paths = Json::object();
  for (const auto& [p, s] : report.oracle_verdicts) oracle[std::string(property_name(p))] = status_name(s);
  for (const auto& [p, s] : report.path_verdicts) paths[std::string(property_name(p))] = status_name(s);
  Json disagreements = Json::array();
  for (const auto& d : report.disagreements) {
    disagreements.push_back({{"check", d.check}, {"subject", d.subject}, {"detail", d.detail}});
  }
  return {{"vertices_checked", report.vertices_checked},
          {"pairs_checked", report.pairs_checked},
          {"oracle_verdicts", oracle},
          {"path_verdicts", paths},
          {"disagreements", disagreements},
          {"agree", report.agree()}};
}

Json prime_witness_json(const PrimeWitnessReport& report) {
  return {{"holds", report.holds},
          {"atoms", labels_json(report.atoms)},
          {"ideal_elements", labels_json(report.ideal_elements)},
          {"violations", report.violations},
          {"summary", report.summary}};
}

}  // namespace divgraph
