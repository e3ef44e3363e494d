#include "divgraph/errors.hpp"
#include "divgraph/models.hpp"

namespace divgraph {

const std::vector<std::string>& known_model_kinds() {
  static const std::vector<std::string> kinds{"antimatter", "d1", "d2", "dvr", "numerical", "zxq"};
  return kinds;
}

namespace {

void require_no_generators(const ModelDefinition& def) {
  if (!def.generators.empty()) {
    throw Error(ErrorCode::InvalidElement,
                "model kind '" + def.kind + "' is fixed and takes no generators");
  }
}

std::string id_or(const ModelDefinition& def, const std::string& fallback) {
  return def.id.empty() ? fallback : def.id;
}

}  // namespace

std::unique_ptr<DivisibilityModel> make_model(const ModelDefinition& def) {
  std::unique_ptr<DivisibilityModel> model;
  if (def.kind == "dvr") {
    require_no_generators(def);
    model = std::make_unique<DvrModel>(id_or(def, "dvr"));
  } else if (def.kind == "numerical") {
    std::vector<Integer> gens;
    for (const auto& g : def.generators) {
      if (g.dimension() != 1 || !is_integer(g[0]) || g[0] <= 0) {
        throw Error(ErrorCode::InvalidElement,
                    "numerical monoid generator " + g.to_string() + " is not a positive integer");
      }
      gens.push_back(g[0].get_num());
    }
    model = std::make_unique<NumericalMonoidModel>(std::move(gens), id_or(def, "numerical"),
                                                   def.flags);
  } else if (def.kind == "antimatter") {
    require_no_generators(def);
    model = std::make_unique<AntimatterModel>(id_or(def, "antimatter"));
  } else if (def.kind == "d1") {
    require_no_generators(def);
    model = std::make_unique<RankTwoModel>(RankTwoModel::Variant::Rational, id_or(def, "d1"));
  } else if (def.kind == "d2") {
    require_no_generators(def);
    model = std::make_unique<RankTwoModel>(RankTwoModel::Variant::Integer, id_or(def, "d2"));
  } else if (def.kind == "zxq") {
    require_no_generators(def);
    std::vector<Polynomial> declared;
    for (const auto& text : def.declared_atoms) declared.push_back(parse_polynomial(text));
    std::vector<Polynomial> cofactors;
    for (const auto& text : def.cofactors) cofactors.push_back(parse_polynomial(text));
    model = std::make_unique<ZxqModel>(id_or(def, "zxq"), std::move(declared), std::move(cofactors));
  } else {
    throw Error(ErrorCode::UnknownModelKind, "unknown model kind '" + def.kind + "'");
  }
  model->set_oracle_bound(def.oracle_bound);
  return model;
}

}  // namespace divgraph
