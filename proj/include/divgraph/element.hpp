#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "divgraph/polynomial.hpp"
#include "divgraph/value.hpp"

namespace divgraph {

/// Canonical representative of a class of nonzero principal fractional
/// ideals, i.e. of K^x modulo units. Two elements built by the same model
/// denote the same class iff their labels are equal.
class Element {
 public:
  Element(std::uint64_t model_tag, std::string label, std::optional<Value> value,
          std::shared_ptr<const RationalFunction> symbolic = nullptr)
      : model_tag_(model_tag),
        label_(std::move(label)),
        value_(std::move(value)),
        symbolic_(std::move(symbolic)) {}

  const std::string& label() const { return label_; }
  std::uint64_t model_tag() const { return model_tag_; }

  bool has_value() const { return value_.has_value(); }
  /// Requires has_value().
  const Value& value() const { return *value_; }

  /// Model-specific payload (the Z + xQ[x] model stores the reduced
  /// rational function here); null for value-based models.
  const RationalFunction* symbolic() const { return symbolic_.get(); }

  friend bool operator==(const Element& a, const Element& b) {
    return a.model_tag_ == b.model_tag_ && a.label_ == b.label_;
  }

 private:
  std::uint64_t model_tag_;
  std::string label_;
  std::optional<Value> value_;
  std::shared_ptr<const RationalFunction> symbolic_;
};

}  // namespace divgraph
