// Command-line front end: divgraph <command> --config FILE [options]

#include <chrono>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "divgraph/errors.hpp"
#include "divgraph/run.hpp"

namespace {

using divgraph::Json;

constexpr int kExitAssert = 1;
constexpr int kExitConfig = 2;
constexpr int kExitOther = 3;

struct Flags {
  std::string config;
  std::optional<std::string> out;
  bool dot = false;
  bool json = false;
  bool assert_mode = false;
  std::optional<std::size_t> bound;
};

std::string verdict_line(const Json& v) {
  std::string line = v["status"].get<std::string>() + " (" + v["provenance"].get<std::string>() + ")";
  const Json& e = v["evidence"];
  if (e.contains("element")) line += " at " + e["element"].get<std::string>();
  if (e.contains("lengths")) line += ", lengths " + e["lengths"].dump();
  if (e["kind"] == "certificate") {
    line += ": " + e["numerator_atoms"].dump() + " / " + e["denominator_atoms"].dump();
  }
  return line;
}

void print_summary(const Json& doc, std::ostream& out) {
  out << "model " << doc["model"]["id"].get<std::string>() << " ("
      << doc["model"]["value_group"].get<std::string>() << "), window of "
      << doc["window"]["size"] << " elements\n";
  if (doc.contains("graph")) {
    const Json& g = doc["graph"];
    out << "graph: " << g["edge_count"] << " edges, sinks " << g["sinks"].dump() << ", "
        << g["boundary"].size() << " boundary vertices\n";
  }
  if (doc.contains("components")) {
    const Json& c = doc["components"];
    out << "components: " << c["weak"]["count"] << " weak component(s), atom subgroup "
        << c["atom_subgroup"].get<std::string>() << "\n";
    for (const auto& [id, members] : c["weak"]["components"].items()) {
      out << "  " << id << ": " << members.dump() << "\n";
    }
    if (c.contains("integral_component_count")) {
      out << "  integral subgraph: " << c["integral_component_count"] << " component(s)\n";
    }
  }
  if (doc.contains("classify")) {
    for (const auto& [name, v] : doc["classify"]["verdicts"].items()) {
      out << "classify " << name << ": " << verdict_line(v) << "\n";
    }
  }
  if (doc.contains("atomicity")) {
    const Json& a = doc["atomicity"];
    out << "atomic: " << verdict_line(a["atomic"]) << "\n";
    out << "almost atomic: " << verdict_line(a["almost_atomic"]) << "\n";
    out << "quasi atomic: " << verdict_line(a["quasi_atomic"]) << "\n";
    if (a.contains("prime_ideal_check")) {
      out << "prime ideal check: " << a["prime_ideal_check"]["summary"].get<std::string>() << "\n";
    }
  }
  if (doc.contains("topology")) {
    const Json& t = doc["topology"];
    out << "topology: T0 " << t["is_T0"] << ", " << t["components"]["count"]
        << " component(s), matches weak components " << t["matches_weak_components"] << "\n";
  }
  if (doc.contains("oracle-check")) {
    const Json& o = doc["oracle-check"];
    out << "oracle check: " << o["vertices_checked"] << " vertices, " << o["pairs_checked"]
        << " pairs, " << o["disagreements"].size() << " disagreement(s)\n";
    for (const auto& d : o["disagreements"]) {
      out << "  " << d["check"].get<std::string>() << " " << d["subject"].get<std::string>()
          << ": " << d["detail"].get<std::string>() << "\n";
    }
  }
}

bool is_config_error(divgraph::ErrorCode code) {
  using divgraph::ErrorCode;
  return code == ErrorCode::ParseError || code == ErrorCode::UnknownModelKind ||
         code == ErrorCode::InvalidBounds || code == ErrorCode::InvalidElement ||
         code == ErrorCode::ModelMismatch || code == ErrorCode::EmptyWindow;
}

int execute(const Flags& flags, std::optional<divgraph::Output> only) {
  const auto start = std::chrono::steady_clock::now();
  divgraph::RunConfig config;
  try {
    config = divgraph::load_config(flags.config);
  } catch (const divgraph::Error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  }
  try {
    std::vector<divgraph::Output> outputs =
        only ? std::vector<divgraph::Output>{*only} : config.outputs;
    if (outputs.empty()) outputs = divgraph::all_outputs();
    if (flags.dot) outputs.push_back(divgraph::Output::Graph);

    divgraph::RunOptions options;
    options.out_dir = flags.out;
    options.write_dot = flags.dot;
    options.search_bound = flags.bound;
    if (flags.assert_mode) options.assert_mode = true;

    const divgraph::RunReport report = divgraph::run(config, outputs, options);
    if (flags.json) {
      std::cout << report.document.dump(2) << "\n";
    } else if (flags.dot && !flags.out) {
      std::cout << report.dot;
    } else {
      print_summary(report.document, std::cout);
    }
    for (const auto& path : report.written) std::cerr << "wrote " << path << "\n";
    if (report.exit_code == kExitAssert) {
      for (const auto& f : report.failures) std::cerr << "assert: " << f << "\n";
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    std::cerr << "elapsed " << elapsed.count() << " s\n";
    return report.exit_code;
  } catch (const divgraph::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_config_error(e.code()) ? kExitConfig : kExitOther;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitOther;
  }
}

void add_flags(CLI::App& cmd, Flags& flags) {
  cmd.add_option("--config", flags.config, "Run configuration file")->required()->check(CLI::ExistingFile);
  cmd.add_option("--out", flags.out, "Directory for JSON (and DOT) artifacts");
  cmd.add_flag("--dot", flags.dot, "Emit the graph in DOT format");
  cmd.add_flag("--json", flags.json, "Print the JSON report on stdout");
  cmd.add_flag("--assert", flags.assert_mode, "Exit 1 when any verdict fails with a witness");
  cmd.add_option("--bound", flags.bound, "Search bound for certificates")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graphs of divisibility: build, classify and compare finite windows"};
  app.require_subcommand(1);
  Flags flags;

  struct Command {
    const char* name;
    const char* help;
    std::optional<divgraph::Output> output;
  };
  const Command commands[] = {
      {"graph", "Build the window graph", divgraph::Output::Graph},
      {"classify", "Atomic/ACCP/BFD/FFD/HFD verdicts from paths", divgraph::Output::Classify},
      {"components", "Weak components and atom-subgroup coset labels",
       divgraph::Output::Components},
      {"atomicity", "Atomic, almost atomic and quasi atomic verdicts", divgraph::Output::Atomicity},
      {"topology", "Alexandrov space of the window", divgraph::Output::Topology},
      {"check", "Cross-check paths and components against brute force",
       divgraph::Output::OracleCheck},
      {"run", "Run the outputs listed in the config", std::nullopt},
  };
  std::optional<divgraph::Output> selected;
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    add_flags(*sub, flags);
    sub->callback([&selected, &c] { selected = c.output; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }
  return execute(flags, selected);
}
