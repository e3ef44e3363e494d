#include "divgraph/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "divgraph/errors.hpp"

namespace divgraph {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim_();
}

void Polynomial::trim_() {
  while (!coeffs_.empty() && coeffs_.back() == 0) {
    coeffs_.pop_back();
  }
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> coeffs(degree + 1, Rational(0));
  coeffs[degree] = c;
  return Polynomial(std::move(coeffs));
}

std::size_t Polynomial::order() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return i;
  }
  throw Error(ErrorCode::InvalidElement, "order of the zero polynomial");
}

Rational Polynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) {
    coeffs_.resize(other.coeffs_.size(), Rational(0));
  }
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    coeffs_[i] += other.coeffs_[i];
  }
  trim_();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) {
    coeffs_.resize(other.coeffs_.size(), Rational(0));
  }
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    coeffs_[i] -= other.coeffs_[i];
  }
  trim_();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) {
    return {};
  }
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::scaled(const Rational& c) const {
  std::vector<Rational> out = coeffs_;
  for (auto& v : out) v *= c;
  return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) {
    throw Error(ErrorCode::InvalidElement, "polynomial division by zero");
  }
  Polynomial remainder = a;
  if (remainder.degree() < b.degree()) {
    return {Polynomial{}, remainder};
  }
  std::vector<Rational> quotient(remainder.degree() - b.degree() + 1, Rational(0));
  while (!remainder.is_zero() && remainder.degree() >= b.degree()) {
    const std::size_t shift = remainder.degree() - b.degree();
    const Rational factor = remainder.leading() / b.leading();
    quotient[shift] = factor;
    remainder -= monomial(factor, shift) * b;
  }
  return {Polynomial(std::move(quotient)), remainder};
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(Rational(1) / leading());
}

Polynomial Polynomial::without_x_power() const {
  if (is_zero()) return *this;
  const std::size_t k = order();
  return Polynomial(std::vector<Rational>(coeffs_.begin() + static_cast<std::ptrdiff_t>(k),
                                          coeffs_.end()));
}

Rational Polynomial::evaluate(const Rational& at) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * at + *it;
  }
  return acc;
}

std::vector<Rational> Polynomial::rational_roots() const {
  if (degree() < 1) return {};
  const Polynomial reduced = without_x_power();
  if (reduced.degree() < 1) return {};
  Integer common = 1;
  for (const auto& c : reduced.coeffs_) {
    mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), c.get_den_mpz_t());
  }
  const Rational scale(common);
  const Integer constant_term = Rational(reduced.coeffs_.front() * scale).get_num();
  const Integer leading_term = Rational(reduced.coeffs_.back() * scale).get_num();
  std::set<Rational> roots;
  for (const auto& p : positive_divisors(constant_term)) {
    for (const auto& q : positive_divisors(leading_term)) {
      for (int sign : {1, -1}) {
        Rational candidate(p * sign, q);
        candidate.canonicalize();
        if (reduced.evaluate(candidate) == 0) {
          roots.insert(candidate);
        }
      }
    }
  }
  return {roots.begin(), roots.end()};
}

namespace {

std::string term_text(const Rational& magnitude, std::size_t degree) {
  const Integer& p = magnitude.get_num();
  const Integer& q = magnitude.get_den();
  std::string out;
  if (degree == 0 || p != 1) {
    out += p.get_str();
  }
  if (degree > 0) {
    out += "x";
    if (degree > 1) out += "^" + std::to_string(degree);
  }
  if (q != 1) {
    out += "/" + q.get_str();
  }
  return out;
}

}  // namespace

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    if (c < 0) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    out += term_text(abs(c), i);
  }
  return out;
}

Polynomial parse_polynomial(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  const auto fail = [&](const std::string& why) {
    return Error(ErrorCode::ParseError,
                 "bad polynomial '" + std::string(text) + "': " + why);
  };
  if (s.empty()) throw fail("empty");
  const auto read_digits = [&](std::size_t& pos) {
    const std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    return s.substr(start, pos - start);
  };

  Polynomial result;
  std::size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    } else if (!first) {
      throw fail("expected '+' or '-' at offset " + std::to_string(pos));
    }
    first = false;
    std::string numerator = read_digits(pos);
    bool has_x = false;
    std::size_t degree = 0;
    if (pos < s.size() && s[pos] == '*') {
      if (numerator.empty()) throw fail("'*' without coefficient");
      ++pos;
      if (pos >= s.size() || s[pos] != 'x') throw fail("'*' must be followed by x");
    }
    if (pos < s.size() && s[pos] == 'x') {
      has_x = true;
      degree = 1;
      ++pos;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        const std::string exp = read_digits(pos);
        if (exp.empty()) throw fail("missing exponent");
        degree = std::stoul(exp);
      }
    }
    if (numerator.empty() && !has_x) throw fail("empty term");
    std::string denominator = "1";
    if (pos < s.size() && s[pos] == '/') {
      ++pos;
      denominator = read_digits(pos);
      if (denominator.empty()) throw fail("missing denominator");
    }
    Rational c = parse_rational((numerator.empty() ? "1" : numerator) + "/" + denominator);
    if (negative) c = -c;
    result += Polynomial::monomial(c, degree);
  }
  return result;
}

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator) {
  if (numerator.is_zero() || denominator.is_zero()) {
    throw Error(ErrorCode::InvalidElement, "rational function must be nonzero with nonzero denominator");
  }
  const Polynomial g = Polynomial::gcd(numerator, denominator);
  num_ = Polynomial::divmod(numerator, g).first;
  den_ = Polynomial::divmod(denominator, g).first;
  const Rational lead = den_.leading();
  num_ = num_.scaled(Rational(1) / lead);
  den_ = den_.scaled(Rational(1) / lead);
}

long RationalFunction::order() const {
  return static_cast<long>(num_.order()) - static_cast<long>(den_.order());
}

RationalFunction RationalFunction::operator*(const RationalFunction& other) const {
  return RationalFunction(num_ * other.num_, den_ * other.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& other) const {
  return RationalFunction(num_ * other.den_, den_ * other.num_);
}

RationalFunction RationalFunction::negated() const {
  return RationalFunction(num_.scaled(Rational(-1)), den_);
}

RationalFunction RationalFunction::sign_normalized() const {
  return num_.coeff(num_.order()) < 0 ? negated() : *this;
}

std::string RationalFunction::to_string() const {
  if (is_polynomial()) {
    return num_.to_string();
  }
  const auto wrap = [](const Polynomial& p) {
    std::size_t terms = 0;
    for (const auto& c : p.coefficients()) terms += c != 0 ? 1 : 0;
    const std::string text = p.to_string();
    return terms > 1 || text.find('/') != std::string::npos ? "(" + text + ")" : text;
  };
  return wrap(num_) + "/" + wrap(den_);
}

}  // namespace divgraph
