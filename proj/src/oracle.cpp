#include "divgraph/oracle.hpp"

#include <algorithm>
#include <set>

#include "divgraph/connectivity.hpp"
#include "divgraph/errors.hpp"
#include "divgraph/parallel.hpp"

namespace divgraph {

namespace {

struct OracleFacts {
  std::set<std::size_t> lengths;
  std::set<std::vector<std::string>> factorizations;
  bool bound_too_small = false;
};

OracleFacts oracle_facts(const DivisibilityModel& model, const Element& a, std::size_t cap) {
  const FactorizationSet set = model.factorizations(a, cap);
  OracleFacts facts;
  facts.bound_too_small = set.bound_too_small;
  for (const auto& f : set.factorizations) {
    std::vector<std::string> labels;
    for (const auto& atom : f.atoms) labels.push_back(atom.label());
    std::sort(labels.begin(), labels.end());
    facts.lengths.insert(labels.size());
    facts.factorizations.insert(std::move(labels));
  }
  return facts;
}

std::string describe(const std::set<std::size_t>& lengths) {
  std::string out = "{";
  for (std::size_t len : lengths) {
    if (out.size() > 1) out += ", ";
    out += std::to_string(len);
  }
  return out + "}";
}

template <typename T>
bool subset(const std::set<T>& small, const std::set<T>& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

OracleReport oracle_crosscheck(const DivisibilityModel& model, const DivGraph& graph,
                               std::size_t length_cap, std::size_t search_bound) {
  if (graph.size() > kOracleVertexLimit) {
    throw Error(ErrorCode::WindowTooLarge,
                std::to_string(graph.size()) + " vertices exceed the oracle limit of " +
                    std::to_string(kOracleVertexLimit));
  }
  OracleReport report;
  const FactorizationReport paths = classify(model, graph, length_cap);
  const auto& vs = paths.vertices;
  report.vertices_checked = vs.size();

  std::vector<OracleFacts> facts(vs.size());
  parallel_for(vs.size(),
               [&](std::size_t i) { facts[i] = oracle_facts(model, vs[i].vertex, length_cap); });

  bool any_missing = false;
  bool any_undecided = false;
  bool any_uneven = false;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const VertexAnalysis& va = vs[i];
    const OracleFacts& of = facts[i];
    const std::string& label = va.vertex.label();
    if (of.bound_too_small) {
      any_undecided = true;
    } else if (of.lengths.empty()) {
      any_missing = true;
    }
    if (of.lengths.size() >= 2) any_uneven = true;
    if (of.bound_too_small) continue;
    if (!va.escapes) {
      if (va.lengths != of.lengths) {
        report.disagreements.push_back({"lengths", label,
                                        "paths give " + describe(va.lengths) + ", oracle gives " +
                                            describe(of.lengths)});
      } else if (va.factorizations != of.factorizations) {
        report.disagreements.push_back(
            {"factorizations", label, "same lengths but different atom multisets"});
      }
    } else if (!subset(va.lengths, of.lengths) || !subset(va.factorizations, of.factorizations)) {
      report.disagreements.push_back(
          {"factorizations", label, "window paths spell factorizations the oracle does not know"});
    }
  }

  const Status atomic = any_missing     ? Status::Fails
                        : any_undecided ? Status::Inconclusive
                                        : Status::Holds;
  report.oracle_verdicts[Property::Atomic] = atomic;
  report.oracle_verdicts[Property::BFD] = atomic;
  report.oracle_verdicts[Property::HFD] = any_uneven ? Status::Fails : atomic;
  for (const auto& [property, oracle_status] : report.oracle_verdicts) {
    const Status path_status = paths.verdicts.at(property).status;
    report.path_verdicts[property] = path_status;
    if (path_status != Status::Inconclusive && oracle_status != Status::Inconclusive &&
        path_status != oracle_status) {
      report.disagreements.push_back({"verdict", std::string(property_name(property)),
                                      "paths say " + std::string(status_name(path_status)) +
                                          ", oracle says " +
                                          std::string(status_name(oracle_status))});
    }
  }

  const Partition components = weak_components(graph);
  const AtomSubgroup atoms = atom_subgroup(model);
  const std::size_t n = graph.size();
  std::vector<std::vector<Disagreement>> rows(n);
  parallel_for(n, [&](std::size_t i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Verdict q = quotient_of_atomics(model, atoms, graph.vertex(i), graph.vertex(j),
                                            search_bound);
      const std::string pair = graph.vertex(i).label() + " ~ " + graph.vertex(j).label();
      if (q.status == Status::Inconclusive) {
        rows[i].push_back({"quotient", pair, "quotient_of_atomics is inconclusive"});
      } else if (q.holds() != components.same(i, j)) {
        rows[i].push_back({"components", pair,
                           q.holds() ? "quotient of atomics but in different weak components"
                                     : "same weak component but no quotient of atomics"});
      }
    }
  });
  for (auto& row : rows) {
    for (auto& d : row) report.disagreements.push_back(std::move(d));
  }
  report.pairs_checked = n * (n - (n > 0 ? 1 : 0)) / 2;
  return report;
}

}  // namespace divgraph
