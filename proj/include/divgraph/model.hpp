#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "divgraph/element.hpp"
#include "divgraph/value.hpp"

namespace divgraph {

struct ModelFlags {
  bool antimatter = false;
  /// Divisibility, atomicity and membership in F(D) are decided by the
  /// model's analytic predicates. When false, atomicity of an element falls
  /// back to the bounded factorization oracle.
  bool value_faithful = true;
};

/// Finite truncation of P(D)^+ (or of P(D) when include_fractional is set).
/// Bounds are model specific, e.g. "max_exponent" for the DVR model.
struct WindowSpec {
  std::string model_id;
  std::map<std::string, Rational> bounds;
  bool include_fractional = false;
  /// Explicit element literals; when non-empty they replace enumeration.
  std::vector<std::string> elements;

  std::optional<Rational> find_bound(std::string_view key) const;
  /// Throws InvalidBounds when the key is absent or not a positive number.
  Rational positive_bound(std::string_view key) const;
  /// positive_bound() that must also be an integer.
  long positive_int_bound(std::string_view key) const;
};

struct Factorization {
  std::vector<Element> atoms;  // sorted by label
  Element target;
};

struct FactorizationSet {
  std::vector<Factorization> factorizations;  // sorted, deduplicated
  /// Set when no factorization was found within max_length although an atom
  /// divides the target and the model does not rule out a factorization.
  bool bound_too_small = false;
};

/// Outcome of probing the atom-quotient successors b of a (a/b an atom).
struct SuccessorProbe {
  std::vector<Element> successors;
  /// The model knows there are infinitely many such successors.
  bool unbounded = false;
};

/// Computable presentation of a reduced divisibility monoid. Immutable after
/// construction; every query is a pure function of its arguments and may be
/// issued concurrently.
class DivisibilityModel {
 public:
  DivisibilityModel(std::string id, std::string kind, ValueGroup group, ModelFlags flags);
  virtual ~DivisibilityModel() = default;

  DivisibilityModel(const DivisibilityModel&) = delete;
  DivisibilityModel& operator=(const DivisibilityModel&) = delete;

  const std::string& id() const { return id_; }
  const std::string& kind() const { return kind_; }
  const ValueGroup& value_group() const { return group_; }
  const ModelFlags& flags() const { return flags_; }
  std::uint64_t tag() const { return tag_; }

  /// The class of units (value 0).
  Element unit() const;

  /// a | b, i.e. b/a lies in D.
  bool divides(const Element& a, const Element& b) const;
  /// a/b as a (possibly fractional) class.
  Element quotient(const Element& a, const Element& b) const;
  Element product(const Element& a, const Element& b) const;

  bool is_unit(const Element& a) const;
  /// a lies in D (units included).
  bool is_integral(const Element& a) const;
  bool is_atom(const Element& a) const;
  /// a lies in F(D). Uses the analytic predicate when value_faithful, else the
  /// oracle with the model's configured bound; throws UndecidableWithoutBound
  /// when neither is available.
  bool is_atomic_element(const Element& a) const;
  bool is_atomic_element(const Element& a, std::optional<std::size_t> bound) const;

  /// Deterministic, sorted by element_less, duplicate-free.
  std::vector<Element> enumerate_window(const WindowSpec& spec) const;

  /// Exhaustive search for atom multisets of size <= max_length multiplying
  /// to a.
  FactorizationSet factorizations(const Element& a, std::size_t max_length) const;

  SuccessorProbe atom_successors(const Element& a, bool fractional) const;

  /// Image of a in the value group used for coset labelling. For value-based
  /// models this is the value itself.
  Value group_value(const Element& a) const;
  virtual ValueGroup coset_group() const { return group_; }

  /// Finite list of atom classes, or nullopt when the atoms are infinite.
  virtual std::optional<std::vector<Element>> atom_elements() const = 0;
  /// Generators of the subgroup generated by atom values, deduplicated.
  virtual std::vector<Value> atom_group_values() const;

  /// Analytic realization of a/b as a quotient of atom products, for models
  /// whose atoms cannot be listed. nullopt when unavailable or impossible.
  virtual std::optional<std::pair<std::vector<Element>, std::vector<Element>>>
  quotient_certificate(const Element& a, const Element& b) const;

  /// Analytic b in D with ab in F(D), when the model knows one.
  virtual std::optional<Element> quasi_atomic_multiplier(const Element& a) const;
  /// Reason no b in D can make ab atomic, when the model can prove it.
  virtual std::optional<std::string> quasi_atomic_obstruction(const Element& a) const;

  Element parse_element(std::string_view text) const;

  /// Total order used for vertex lists: by group value, then label.
  bool element_less(const Element& a, const Element& b) const;
  /// Ranking for witnesses: smallest L1 norm of the group value, then
  /// element_less.
  bool simpler(const Element& a, const Element& b) const;

  /// Oracle bound used by is_atomic_element when the model is not
  /// value-faithful.
  void set_oracle_bound(std::optional<std::size_t> bound) { oracle_bound_ = bound; }
  std::optional<std::size_t> oracle_bound() const { return oracle_bound_; }

 protected:
  virtual Element do_unit() const = 0;
  virtual bool do_divides(const Element& a, const Element& b) const = 0;
  virtual Element do_quotient(const Element& a, const Element& b) const = 0;
  virtual Element do_product(const Element& a, const Element& b) const = 0;
  virtual bool do_is_integral(const Element& a) const = 0;
  virtual bool do_is_atom(const Element& a) const = 0;
  virtual bool do_is_atomic(const Element& a) const = 0;
  virtual std::vector<Element> do_enumerate(const WindowSpec& spec) const = 0;
  virtual FactorizationSet do_factorizations(const Element& a, std::size_t max_length) const = 0;
  virtual SuccessorProbe do_successors(const Element& a, bool fractional) const = 0;
  virtual Value do_group_value(const Element& a) const = 0;
  virtual Element do_parse(std::string_view text) const = 0;

  void check_owned(const Element& a) const;

 private:
  std::string id_;
  std::string kind_;
  ValueGroup group_;
  ModelFlags flags_;
  std::uint64_t tag_;
  std::optional<std::size_t> oracle_bound_;
};

/// Calls visit(indices) for every multiset of size `size` drawn from
/// {0, ..., kinds-1}, as a nondecreasing index vector. Stops early when visit
/// returns true; returns whether it stopped early.
template <typename Visit>
bool for_each_multiset(std::size_t kinds, std::size_t size, Visit&& visit) {
  std::vector<std::size_t> idx(size, 0);
  if (size == 0) {
    return visit(idx);
  }
  if (kinds == 0) {
    return false;
  }
  while (true) {
    if (visit(idx)) return true;
    std::size_t pos = size;
    while (pos > 0 && idx[pos - 1] == kinds - 1) --pos;
    if (pos == 0) return false;
    const std::size_t next = idx[pos - 1] + 1;
    for (std::size_t i = pos - 1; i < size; ++i) idx[i] = next;
  }
}

}  // namespace divgraph
