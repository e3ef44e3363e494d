#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "divgraph/model.hpp"

namespace divgraph {

/// Base for models whose classes are determined by a value in a subgroup of
/// Z^d (+) Q: divisibility, atoms and atomicity are predicates on values.
class ValueModel : public DivisibilityModel {
 public:
  using DivisibilityModel::DivisibilityModel;

  /// Throws InvalidElement when v is not in the value group.
  Element from_value(const Value& v) const;

  /// v lies in the value monoid (0 included).
  virtual bool in_monoid(const Value& v) const = 0;
  /// Values of the atom classes, sorted.
  virtual std::vector<Value> atom_values() const = 0;
  /// v is a nonzero N-combination of atom values.
  virtual bool is_atomic_value(const Value& v) const = 0;
  virtual std::string label_of(const Value& v) const = 0;
  /// Variable names accepted in monomial labels, by coordinate; empty when
  /// labels are plain values.
  virtual std::vector<std::string> variables() const { return {}; }

  std::optional<std::vector<Element>> atom_elements() const override;

 protected:
  virtual std::vector<Value> enumerate_values(const WindowSpec& spec) const = 0;

  Element do_unit() const override;
  bool do_divides(const Element& a, const Element& b) const override;
  Element do_quotient(const Element& a, const Element& b) const override;
  Element do_product(const Element& a, const Element& b) const override;
  bool do_is_integral(const Element& a) const override;
  bool do_is_atom(const Element& a) const override;
  bool do_is_atomic(const Element& a) const override;
  std::vector<Element> do_enumerate(const WindowSpec& spec) const override;
  FactorizationSet do_factorizations(const Element& a, std::size_t max_length) const override;
  SuccessorProbe do_successors(const Element& a, bool fractional) const override;
  Value do_group_value(const Element& a) const override;
  Element do_parse(std::string_view text) const override;
};

/// Discrete valuation ring: P(D)^+ = {pi, pi^2, ...}, value group Z.
/// Window bound: max_exponent.
class DvrModel final : public ValueModel {
 public:
  explicit DvrModel(std::string id = "dvr");

  bool in_monoid(const Value& v) const override;
  std::vector<Value> atom_values() const override;
  bool is_atomic_value(const Value& v) const override;
  std::string label_of(const Value& v) const override;
  std::vector<std::string> variables() const override { return {"pi"}; }

 protected:
  std::vector<Value> enumerate_values(const WindowSpec& spec) const override;
};

/// Numerical monoid <g_1, ..., g_k> written additively (labels are the
/// integers themselves). Window bound: max_value.
class NumericalMonoidModel final : public ValueModel {
 public:
  NumericalMonoidModel(std::vector<Integer> generators, std::string id = "numerical",
                       ModelFlags flags = {});

  /// Minimal generating set, ascending.
  const std::vector<Integer>& minimal_generators() const { return atoms_; }
  const Integer& gcd() const { return gcd_; }

  bool in_monoid(const Value& v) const override;
  std::vector<Value> atom_values() const override;
  bool is_atomic_value(const Value& v) const override;
  std::string label_of(const Value& v) const override;

 protected:
  std::vector<Value> enumerate_values(const WindowSpec& spec) const override;

 private:
  bool member_scaled_(const Integer& n) const;

  Integer gcd_;
  std::vector<Integer> atoms_;
  std::vector<bool> member_;  // membership of n * gcd below the conductor
};

/// Nondiscrete valuation domain with value group Q: no atoms at all.
/// Window bounds: max_value, max_den.
class AntimatterModel final : public ValueModel {
 public:
  explicit AntimatterModel(std::string id = "antimatter");

  bool in_monoid(const Value& v) const override;
  std::vector<Value> atom_values() const override;
  bool is_atomic_value(const Value& v) const override;
  std::string label_of(const Value& v) const override;
  std::vector<std::string> variables() const override { return {"x"}; }

 protected:
  std::vector<Value> enumerate_values(const WindowSpec& spec) const override;
};

/// The two localized monoid domains over F_2 in x, y with value (k, r) for
/// y^k x^r, ordered lexicographically:
///   Rational: generators x^a (a in Q^+), y, y^k/x^a (k >= 2); value group Z+Q.
///   Integer:  generators x, y, y^k/x^j (k >= 2, j >= 1); value group Z+Z.
/// Window bounds: max_k, max_abs, and max_den for the rational variant.
class RankTwoModel final : public ValueModel {
 public:
  enum class Variant { Rational, Integer };

  explicit RankTwoModel(Variant variant, std::string id = "");

  Variant variant() const { return variant_; }

  bool in_monoid(const Value& v) const override;
  std::vector<Value> atom_values() const override;
  bool is_atomic_value(const Value& v) const override;
  std::string label_of(const Value& v) const override;
  std::vector<std::string> variables() const override { return {"y", "x"}; }

  /// Rational variant: g with value (2, -r) for a of value (k, r).
  std::optional<Element> quasi_atomic_multiplier(const Element& a) const override;

 protected:
  std::vector<Value> enumerate_values(const WindowSpec& spec) const override;

 private:
  Variant variant_;
};

/// D = Z + xQ[x]. Classes are polynomials (rational functions for fractional
/// quotients) modulo +-1. Atoms are the integer primes and the Q-irreducible
/// polynomials with constant term +-1; irreducibility is decided for degree
/// <= 3 by the rational root test, and above that only for polynomials with a
/// rational root or listed in declared_atoms.
///
/// Window bounds: max_ord, max_num, max_den, max_degree, max_cofactors;
/// elements are c * x^k * g with g a product of at most max_cofactors
/// cofactor polynomials (default: 1+x).
class ZxqModel final : public DivisibilityModel {
 public:
  explicit ZxqModel(std::string id = "zxq", std::vector<Polynomial> declared_atoms = {},
                    std::vector<Polynomial> cofactors = {});

  Element from_function(const RationalFunction& f) const;
  Element from_polynomial(const Polynomial& p) const;

  /// Atoms of an ord-0 nonunit polynomial of D, sorted by label. The
  /// factorization into atoms is unique up to order and units.
  std::vector<Element> atomic_factorization(const Element& a) const;

  /// ord of the element (numerator order minus denominator order).
  long order_of(const Element& a) const;

  ValueGroup coset_group() const override { return ValueGroup{1, false}; }
  std::optional<std::vector<Element>> atom_elements() const override { return std::nullopt; }
  std::vector<Value> atom_group_values() const override;
  std::optional<std::pair<std::vector<Element>, std::vector<Element>>> quotient_certificate(
      const Element& a, const Element& b) const override;
  std::optional<std::string> quasi_atomic_obstruction(const Element& a) const override;

 protected:
  Element do_unit() const override;
  bool do_divides(const Element& a, const Element& b) const override;
  Element do_quotient(const Element& a, const Element& b) const override;
  Element do_product(const Element& a, const Element& b) const override;
  bool do_is_integral(const Element& a) const override;
  bool do_is_atom(const Element& a) const override;
  bool do_is_atomic(const Element& a) const override;
  std::vector<Element> do_enumerate(const WindowSpec& spec) const override;
  FactorizationSet do_factorizations(const Element& a, std::size_t max_length) const override;
  SuccessorProbe do_successors(const Element& a, bool fractional) const override;
  Value do_group_value(const Element& a) const override;
  Element do_parse(std::string_view text) const override;

 private:
  const RationalFunction& fn_(const Element& a) const;
  bool is_in_d_(const RationalFunction& f) const;
  /// Irreducibility over Q of a polynomial with constant term +-1.
  bool q_irreducible_(const Polynomial& p) const;
  /// Q-irreducible factors normalized to constant term 1, with multiplicity.
  std::vector<Polynomial> unit_constant_factors_(const Polynomial& p) const;
  std::vector<Element> split_constant_(const Rational& c, bool numerator_side) const;

  std::vector<Polynomial> declared_atoms_;
  std::vector<Polynomial> cofactors_;
};

/// Everything needed to build a bundled model from configuration.
struct ModelDefinition {
  std::string kind;
  std::string id;
  std::vector<Value> generators;
  std::vector<std::string> declared_atoms;
  std::vector<std::string> cofactors;
  ModelFlags flags;
  std::optional<std::size_t> oracle_bound;
};

/// Known kinds: dvr, numerical, antimatter, d1, d2, zxq. Throws
/// UnknownModelKind or InvalidElement for bad generators.
std::unique_ptr<DivisibilityModel> make_model(const ModelDefinition& definition);

const std::vector<std::string>& known_model_kinds();

}  // namespace divgraph
