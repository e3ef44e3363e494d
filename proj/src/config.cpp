#include "divgraph/config.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "divgraph/errors.hpp"

namespace divgraph {

namespace {

struct OutputName {
  Output output;
  std::string_view name;
};

constexpr OutputName kOutputs[] = {
    {Output::Graph, "graph"},         {Output::Components, "components"},
    {Output::Classify, "classify"},   {Output::Atomicity, "atomicity"},
    {Output::Topology, "topology"},   {Output::OracleCheck, "oracle-check"},
};

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = text.find(sep, start);
    const std::string_view item = trim(text.substr(start, end - start));
    if (!item.empty()) out.emplace_back(item);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

class LineError {
 public:
  LineError(std::size_t line, std::string key) : line_(line), key_(std::move(key)) {}

  Error operator()(ErrorCode code, const std::string& message) const {
    return Error(code, "line " + std::to_string(line_) + ", field '" + key_ + "': " + message);
  }

 private:
  std::size_t line_;
  std::string key_;
};

bool parse_bool(std::string_view text, const LineError& fail) {
  if (text == "true" || text == "yes" || text == "1") return true;
  if (text == "false" || text == "no" || text == "0") return false;
  throw fail(ErrorCode::ParseError, "expected true or false, got '" + std::string(text) + "'");
}

Rational parse_number(std::string_view text, const LineError& fail) {
  try {
    return parse_rational(text);
  } catch (const Error& e) {
    throw fail(ErrorCode::ParseError, e.what());
  }
}

std::size_t parse_cap(std::string_view text, const LineError& fail) {
  const Rational value = parse_number(text, fail);
  if (value <= 0 || !is_integer(value)) {
    throw fail(ErrorCode::InvalidBounds, "must be a positive integer, got '" + std::string(text) + "'");
  }
  if (value > Rational(1000000)) {
    throw fail(ErrorCode::InvalidBounds, "exceeds the supported maximum 1000000");
  }
  return static_cast<std::size_t>(value.get_num().get_ui());
}

std::vector<Value> parse_generators(std::string_view text, const LineError& fail) {
  const bool vectors = text.find('(') != std::string_view::npos;
  const bool semicolons = text.find(';') != std::string_view::npos;
  std::vector<Value> out;
  try {
    for (const auto& item : split(text, vectors || semicolons ? ';' : ',')) {
      out.push_back(parse_value(item));
    }
  } catch (const Error& e) {
    throw fail(ErrorCode::ParseError, std::string("malformed generator: ") + e.what());
  }
  if (out.empty()) throw fail(ErrorCode::ParseError, "no generators given");
  for (const auto& g : out) {
    if (g.dimension() != out.front().dimension()) {
      throw fail(ErrorCode::ParseError, "generators have different dimensions");
    }
  }
  return out;
}

}  // namespace

std::string_view output_name(Output output) {
  for (const auto& entry : kOutputs) {
    if (entry.output == output) return entry.name;
  }
  return "?";
}

Output parse_output(std::string_view name) {
  for (const auto& entry : kOutputs) {
    if (entry.name == name) return entry.output;
  }
  throw Error(ErrorCode::ParseError, "unknown output '" + std::string(name) + "'");
}

const std::vector<Output>& all_outputs() {
  static const std::vector<Output> outputs = [] {
    std::vector<Output> out;
    for (const auto& entry : kOutputs) out.push_back(entry.output);
    return out;
  }();
  return outputs;
}

RunConfig parse_config(std::string_view text) {
  RunConfig config;
  std::set<std::string> seen;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  bool antimatter_flag = false;
  std::size_t antimatter_line = 0;

  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::ParseError,
                  "line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    const LineError fail(line_no, key);
    if (!seen.insert(key).second) throw fail(ErrorCode::ParseError, "duplicate key");
    if (value.empty()) throw fail(ErrorCode::ParseError, "empty value");

    if (key == "kind") {
      config.model.kind = value;
      const auto& kinds = known_model_kinds();
      if (std::find(kinds.begin(), kinds.end(), config.model.kind) == kinds.end()) {
        throw fail(ErrorCode::UnknownModelKind, "unknown model kind '" + config.model.kind + "'");
      }
    } else if (key == "id") {
      config.model.id = value;
    } else if (key == "generators") {
      config.model.generators = parse_generators(value, fail);
    } else if (key == "assert") {
      config.assert_mode = parse_bool(value, fail);
    } else if (key == "outputs") {
      for (const auto& name : split(value, ',')) {
        try {
          config.outputs.push_back(parse_output(name));
        } catch (const Error& e) {
          throw fail(ErrorCode::ParseError, e.what());
        }
      }
    } else if (key == "window.fractional") {
      config.window.include_fractional = parse_bool(value, fail);
    } else if (key == "window.elements") {
      config.window.elements = split(value, ';');
    } else if (key == "window.cofactors") {
      config.model.cofactors = split(value, ';');
    } else if (key == "model.declared_atoms") {
      config.model.declared_atoms = split(value, ';');
    } else if (key == "flags.value_faithful") {
      config.model.flags.value_faithful = parse_bool(value, fail);
    } else if (key == "flags.antimatter") {
      antimatter_flag = parse_bool(value, fail);
      antimatter_line = line_no;
    } else if (key == "bounds.length_cap") {
      config.length_cap = parse_cap(value, fail);
    } else if (key == "bounds.search") {
      config.search_bound = parse_cap(value, fail);
    } else if (key == "bounds.oracle") {
      config.model.oracle_bound = parse_cap(value, fail);
    } else if (key.rfind("window.", 0) == 0 && key.size() > 7) {
      const Rational bound = parse_number(value, fail);
      if (bound <= 0) throw fail(ErrorCode::InvalidBounds, "window bounds must be positive");
      config.window.bounds[key.substr(7)] = bound;
    } else {
      throw fail(ErrorCode::ParseError, "unknown key");
    }
  }

  if (config.model.kind.empty()) {
    throw Error(ErrorCode::ParseError, "missing required field 'kind'");
  }
  if (antimatter_flag && config.model.kind != "antimatter") {
    throw LineError(antimatter_line, "flags.antimatter")(
        ErrorCode::ParseError, "only the antimatter kind has no atoms");
  }
  config.window.model_id = config.model.id.empty() ? config.model.kind : config.model.id;
  std::sort(config.outputs.begin(), config.outputs.end());
  config.outputs.erase(std::unique(config.outputs.begin(), config.outputs.end()),
                       config.outputs.end());
  return config;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read config file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

}  // namespace divgraph
