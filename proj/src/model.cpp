#include "divgraph/model.hpp"

#include <algorithm>
#include <atomic>

#include "divgraph/errors.hpp"

namespace divgraph {

namespace {

std::uint64_t next_model_tag() {
  static std::atomic<std::uint64_t> counter{1};
  return counter.fetch_add(1);
}

}  // namespace

std::optional<Rational> WindowSpec::find_bound(std::string_view key) const {
  const auto it = bounds.find(std::string(key));
  if (it == bounds.end()) return std::nullopt;
  return it->second;
}

Rational WindowSpec::positive_bound(std::string_view key) const {
  const auto value = find_bound(key);
  if (!value) {
    throw Error(ErrorCode::InvalidBounds, "missing window bound '" + std::string(key) + "'");
  }
  if (*value <= 0) {
    throw Error(ErrorCode::InvalidBounds,
                "window bound '" + std::string(key) + "' must be positive");
  }
  return *value;
}

long WindowSpec::positive_int_bound(std::string_view key) const {
  const Rational value = positive_bound(key);
  if (!is_integer(value) || !value.get_num().fits_slong_p()) {
    throw Error(ErrorCode::InvalidBounds,
                "window bound '" + std::string(key) + "' must be a machine-size integer");
  }
  return value.get_num().get_si();
}

DivisibilityModel::DivisibilityModel(std::string id, std::string kind, ValueGroup group,
                                     ModelFlags flags)
    : id_(std::move(id)),
      kind_(std::move(kind)),
      group_(group),
      flags_(flags),
      tag_(next_model_tag()) {}

void DivisibilityModel::check_owned(const Element& a) const {
  if (a.model_tag() != tag_) {
    throw Error(ErrorCode::ElementForeignToModel,
                "element '" + a.label() + "' was not built by model '" + id_ + "'");
  }
}

Element DivisibilityModel::unit() const { return do_unit(); }

bool DivisibilityModel::divides(const Element& a, const Element& b) const {
  check_owned(a);
  check_owned(b);
  return do_divides(a, b);
}

Element DivisibilityModel::quotient(const Element& a, const Element& b) const {
  check_owned(a);
  check_owned(b);
  return do_quotient(a, b);
}

Element DivisibilityModel::product(const Element& a, const Element& b) const {
  check_owned(a);
  check_owned(b);
  return do_product(a, b);
}

bool DivisibilityModel::is_unit(const Element& a) const {
  check_owned(a);
  return a == do_unit();
}

bool DivisibilityModel::is_integral(const Element& a) const {
  check_owned(a);
  return do_is_integral(a);
}

bool DivisibilityModel::is_atom(const Element& a) const {
  check_owned(a);
  return do_is_atom(a);
}

bool DivisibilityModel::is_atomic_element(const Element& a) const {
  return is_atomic_element(a, oracle_bound_);
}

bool DivisibilityModel::is_atomic_element(const Element& a,
                                          std::optional<std::size_t> bound) const {
  check_owned(a);
  if (flags_.value_faithful) {
    return do_is_atomic(a);
  }
  if (!bound) {
    throw Error(ErrorCode::UndecidableWithoutBound,
                "model '" + id_ + "' is not value-faithful and no oracle bound was supplied");
  }
  return !do_factorizations(a, *bound).factorizations.empty();
}

std::vector<Element> DivisibilityModel::enumerate_window(const WindowSpec& spec) const {
  if (!spec.model_id.empty() && spec.model_id != id_) {
    throw Error(ErrorCode::ModelMismatch,
                "window is for model '" + spec.model_id + "', not '" + id_ + "'");
  }
  std::vector<Element> out;
  if (!spec.elements.empty()) {
    for (const auto& text : spec.elements) {
      Element e = do_parse(text);
      if (!spec.include_fractional && (!do_is_integral(e) || e == do_unit())) {
        throw Error(ErrorCode::InvalidElement,
                    "'" + text + "' is not a nonunit integral element; integral windows "
                    "hold P(D)^+ only");
      }
      out.push_back(std::move(e));
    }
  } else {
    out = do_enumerate(spec);
  }
  std::sort(out.begin(), out.end(),
            [this](const Element& a, const Element& b) { return element_less(a, b); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.empty()) {
    throw Error(ErrorCode::EmptyWindow, "window bounds for model '" + id_ + "' exclude every element");
  }
  return out;
}

FactorizationSet DivisibilityModel::factorizations(const Element& a,
                                                   std::size_t max_length) const {
  check_owned(a);
  if (max_length < 1) {
    throw Error(ErrorCode::InvalidBounds, "factorization length bound must be >= 1");
  }
  return do_factorizations(a, max_length);
}

SuccessorProbe DivisibilityModel::atom_successors(const Element& a, bool fractional) const {
  check_owned(a);
  return do_successors(a, fractional);
}

Value DivisibilityModel::group_value(const Element& a) const {
  check_owned(a);
  return do_group_value(a);
}

std::vector<Value> DivisibilityModel::atom_group_values() const {
  std::vector<Value> out;
  const auto atoms = atom_elements();
  if (!atoms) return out;
  for (const auto& atom : *atoms) {
    Value v = do_group_value(atom);
    if (std::find(out.begin(), out.end(), v) == out.end()) {
      out.push_back(std::move(v));
    }
  }
  return out;
}

std::optional<std::pair<std::vector<Element>, std::vector<Element>>>
DivisibilityModel::quotient_certificate(const Element&, const Element&) const {
  return std::nullopt;
}

std::optional<Element> DivisibilityModel::quasi_atomic_multiplier(const Element&) const {
  return std::nullopt;
}

std::optional<std::string> DivisibilityModel::quasi_atomic_obstruction(const Element&) const {
  const auto atoms = atom_elements();
  if (atoms && atoms->empty()) {
    return "the model has no atoms, so F(D) is empty and no product ab is atomic";
  }
  return std::nullopt;
}

Element DivisibilityModel::parse_element(std::string_view text) const { return do_parse(text); }

bool DivisibilityModel::element_less(const Element& a, const Element& b) const {
  const Value va = do_group_value(a);
  const Value vb = do_group_value(b);
  if (va != vb) return va < vb;
  return a.label() < b.label();
}

bool DivisibilityModel::simpler(const Element& a, const Element& b) const {
  const Rational na = do_group_value(a).l1_norm();
  const Rational nb = do_group_value(b).l1_norm();
  if (na != nb) return na < nb;
  return element_less(a, b);
}

}  // namespace divgraph
