#include "divgraph/run.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "divgraph/errors.hpp"

namespace divgraph {

namespace {

namespace fs = std::filesystem;

void note_failure(RunReport& report, const std::string& where, const Verdict& verdict) {
  if (verdict.fails() && std::holds_alternative<Witness>(verdict.evidence)) {
    report.failures.push_back(where + " fails at " + verdict.witness().element.label());
  }
}

/// Writes through a temporary file so a crash never leaves a truncated
/// artifact under the final name.
void write_file(const fs::path& path, const std::string& content) {
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    out << content;
    if (!out) throw std::runtime_error("cannot write '" + tmp.string() + "'");
  }
  fs::rename(tmp, path);
}

bool lemma_chain_violated(Status atomic, Status almost, Status quasi) {
  return (atomic == Status::Holds && almost == Status::Fails) ||
         (almost == Status::Holds && quasi == Status::Fails) ||
         (atomic == Status::Holds && quasi == Status::Fails);
}

}  // namespace

RunReport run(const RunConfig& config, const std::vector<Output>& outputs,
              const RunOptions& options) {
  const auto model = make_model(config.model);
  const std::vector<Element> window = model->enumerate_window(config.window);
  const DivGraph graph = build_graph(*model, window);
  const std::size_t search = options.search_bound.value_or(config.search_bound);
  const std::size_t cap = config.length_cap;

  RunReport report;
  Json& doc = report.document;
  doc["model"] = {{"id", model->id()},
                  {"kind", model->kind()},
                  {"value_group", model->value_group().describe()}};
  doc["window"] = {{"size", graph.size()}, {"fractional", graph.fractional()}};
  doc["bounds"] = {{"length_cap", cap}, {"search", search}};

  std::vector<Output> order = outputs;
  std::sort(order.begin(), order.end());
  order.erase(std::unique(order.begin(), order.end()), order.end());

  for (Output output : order) {
    const std::string name(output_name(output));
    Json section;
    switch (output) {
      case Output::Graph: {
        section = graph_json(*model, graph);
        report.dot = graph_dot(*model, graph);
        break;
      }
      case Output::Components: {
        const Partition weak = weak_components(graph);
        const AtomSubgroup atoms = atom_subgroup(*model);
        Json labels = Json::object();
        for (const auto& v : graph.vertices()) labels[v.label()] = component_label(*model, atoms, v);
        section = {{"weak", partition_json(weak)},
                   {"weakly_connected", weak.count() == 1},
                   {"atom_subgroup", atoms.descriptor.describe()},
                   {"no_atoms", atoms.no_atoms},
                   {"coset_labels", labels},
                   {"labels_match_components", label_partition(*model, atoms, graph) == weak}};
        if (graph.fractional()) {
          // Connectivity of P(D)^+ and of the whole window can differ; both
          // counts are reported.
          const Partition integral = weak_components(integral_subgraph(*model, graph));
          section["integral_component_count"] = integral.count();
          section["fractional_component_count"] = weak.count();
        }
        break;
      }
      case Output::Classify: {
        const FactorizationReport fr = classify(*model, graph, cap);
        section = classify_json(*model, graph, fr);
        for (const auto& [property, verdict] : fr.verdicts) {
          note_failure(report, "classify " + std::string(property_name(property)), verdict);
        }
        break;
      }
      case Output::Atomicity: {
        const Verdict atomic = classify(*model, graph, cap).verdicts.at(Property::Atomic);
        const Verdict almost = is_almost_atomic(*model, window, search);
        const Verdict quasi = is_quasi_atomic(*model, window, search);
        const Partition weak = weak_components(graph);
        const bool violated = lemma_chain_violated(atomic.status, almost.status, quasi.status);
        section = {{"atomic", verdict_json(atomic)},
                   {"almost_atomic", verdict_json(almost)},
                   {"quasi_atomic", verdict_json(quasi)},
                   {"atom_subgroup", atom_subgroup(*model).descriptor.describe()},
                   {"implication_chain_holds", !violated},
                   {"weakly_connected", weak.count() == 1}};
        if (almost.status != Status::Inconclusive) {
          section["almost_atomic_matches_connectivity"] = almost.holds() == (weak.count() == 1);
        }
        note_failure(report, "atomicity Atomic", atomic);
        note_failure(report, "atomicity AlmostAtomic", almost);
        note_failure(report, "atomicity QuasiAtomic", quasi);
        if (violated) report.failures.push_back("atomic => almost atomic => quasi atomic violated");
        if (model->kind() == "zxq") {
          const PrimeWitnessReport prime = prime_witness_check_zxq(*model, window);
          section["prime_ideal_check"] = prime_witness_json(prime);
          for (const auto& v : prime.violations) report.failures.push_back("prime ideal check: " + v);
        }
        break;
      }
      case Output::Topology: {
        const FinitePoset poset = window_poset(*model, graph);
        const AlexandrovSpace space = poset_to_space(poset);
        const Partition components = connected_components_topology(space);
        const bool t0 = is_T0(space);
        const bool round_trip = t0 && space_to_poset(space) == poset;
        const bool matches = components == weak_components(graph);
        section = {{"min_open", space_json(space)},
                   {"is_T0", t0},
                   {"basis_coherent", is_basis_coherent(space)},
                   {"round_trip", round_trip},
                   {"components", partition_json(components)},
                   {"matches_weak_components", matches}};
        if (!t0) report.failures.push_back("topology: window space is not T0");
        if (!round_trip) report.failures.push_back("topology: poset/space round trip differs");
        if (!matches) report.failures.push_back("topology: components differ from weak components");
        break;
      }
      case Output::OracleCheck: {
        const OracleReport oracle = oracle_crosscheck(*model, graph, cap, search);
        section = oracle_json(oracle);
        for (const auto& d : oracle.disagreements) {
          report.failures.push_back("oracle " + d.check + " " + d.subject + ": " + d.detail);
        }
        break;
      }
    }
    doc[name] = section;
  }

  if (options.out_dir) {
    const fs::path dir(*options.out_dir);
    fs::create_directories(dir);
    for (Output output : order) {
      const std::string name(output_name(output));
      const fs::path path = dir / (model->id() + "." + name + ".json");
      Json single = {{"model", doc["model"]}, {"window", doc["window"]}, {name, doc[name]}};
      write_file(path, single.dump(2) + "\n");
      report.written.push_back(path.string());
    }
    if (options.write_dot && !report.dot.empty()) {
      const fs::path path = dir / (model->id() + ".dot");
      write_file(path, report.dot);
      report.written.push_back(path.string());
    }
  }

  const bool assert_mode = options.assert_mode.value_or(config.assert_mode);
  report.exit_code = assert_mode && !report.failures.empty() ? 1 : 0;
  return report;
}

RunReport run(const RunConfig& config, const RunOptions& options) {
  return run(config, config.outputs, options);
}

}  // namespace divgraph
