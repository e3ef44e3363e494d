#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "divgraph/arith.hpp"

namespace divgraph {

/// Univariate polynomial over Q in x. Coefficients are stored lowest degree
/// first with no trailing zeros; the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, std::size_t degree);
  static Polynomial x() { return monomial(Rational(1), 1); }

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Index of the lowest nonzero coefficient. Requires a nonzero polynomial.
  std::size_t order() const;
  Rational coeff(std::size_t i) const;
  const Rational& leading() const { return coeffs_.back(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const Rational& c) const;

  /// Euclidean division; divisor must be nonzero.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
  /// Monic gcd; gcd(0, 0) is 0.
  static Polynomial gcd(Polynomial a, Polynomial b);

  Polynomial monic() const;
  /// Divides out x^order(); the result has a nonzero constant term.
  Polynomial without_x_power() const;
  Rational evaluate(const Rational& at) const;

  /// Distinct nonzero rational roots, ascending (rational root theorem).
  std::vector<Rational> rational_roots() const;

  /// Canonical text: terms by increasing degree, e.g. "2+x/2", "1-x",
  /// "3x^2/2".
  std::string to_string() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim_();
  std::vector<Rational> coeffs_;
};

/// Parses the label grammar produced by Polynomial::to_string, plus optional
/// '*' between coefficient and x and arbitrary whitespace.
Polynomial parse_polynomial(std::string_view text);

/// Nonzero element of Q(x) in lowest terms with a monic denominator. The
/// numerator's sign is free, so callers decide how to pick a class
/// representative.
class RationalFunction {
 public:
  RationalFunction(Polynomial numerator, Polynomial denominator);
  explicit RationalFunction(Polynomial numerator)
      : RationalFunction(std::move(numerator), Polynomial::constant(1)) {}

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_polynomial() const { return den_.degree() == 0; }
  /// ord(num) - ord(den).
  long order() const;

  RationalFunction operator*(const RationalFunction& other) const;
  RationalFunction operator/(const RationalFunction& other) const;
  RationalFunction negated() const;

  /// Representative of the class modulo {+1, -1}: the lowest-degree nonzero
  /// numerator coefficient is made positive.
  RationalFunction sign_normalized() const;

  std::string to_string() const;

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

 private:
  Polynomial num_;
  Polynomial den_;
};

}  // namespace divgraph
