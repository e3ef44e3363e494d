#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "divgraph/arith.hpp"

namespace divgraph {

/// Element of Z^d (+) Q, stored as exact rationals. Coordinates that belong
/// to the Z^d part are integers by construction (see ValueGroup::contains).
class Value {
 public:
  Value() = default;
  explicit Value(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  Value(std::initializer_list<Rational> coords) : coords_(coords) {}

  static Value zero(std::size_t dimension) {
    return Value(std::vector<Rational>(dimension, Rational(0)));
  }

  std::size_t dimension() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;

  Value& operator+=(const Value& other);
  Value& operator-=(const Value& other);
  friend Value operator+(Value a, const Value& b) { return a += b; }
  friend Value operator-(Value a, const Value& b) { return a -= b; }
  Value operator-() const;
  friend Value operator*(const Integer& k, const Value& v);

  friend bool operator==(const Value& a, const Value& b);
  /// Lexicographic order on coordinates.
  friend std::strong_ordering operator<=>(const Value& a, const Value& b);

  /// Sum of absolute coordinate values; used to pick the simplest witness.
  Rational l1_norm() const;

  /// "(a, b)" for d > 1, "a" for d == 1.
  std::string to_string() const;

 private:
  std::vector<Rational> coords_;
};

/// Parses "(a, b, ...)" or a bare scalar rational.
Value parse_value(std::string_view text);

/// Z^integer_rank, optionally followed by one Q coordinate; lexicographically
/// ordered.
struct ValueGroup {
  std::size_t integer_rank = 1;
  bool rational_part = false;

  std::size_t dimension() const { return integer_rank + (rational_part ? 1 : 0); }
  bool contains(const Value& v) const;
  std::string describe() const;

  friend bool operator==(const ValueGroup&, const ValueGroup&) = default;
};

}  // namespace divgraph
