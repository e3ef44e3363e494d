#include "divgraph/value.hpp"

#include <algorithm>

#include "divgraph/errors.hpp"

namespace divgraph {

bool Value::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](const Rational& c) { return c == 0; });
}

Value& Value::operator+=(const Value& other) {
  if (coords_.size() != other.coords_.size()) {
    throw Error(ErrorCode::InvalidElement, "value dimension mismatch");
  }
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    coords_[i] += other.coords_[i];
  }
  return *this;
}

Value& Value::operator-=(const Value& other) {
  if (coords_.size() != other.coords_.size()) {
    throw Error(ErrorCode::InvalidElement, "value dimension mismatch");
  }
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    coords_[i] -= other.coords_[i];
  }
  return *this;
}

Value Value::operator-() const {
  Value out = *this;
  for (auto& c : out.coords_) {
    c = -c;
  }
  return out;
}

Value operator*(const Integer& k, const Value& v) {
  Value out = v;
  for (auto& c : out.coords_) {
    c *= Rational(k);
  }
  return out;
}

bool operator==(const Value& a, const Value& b) { return a.coords_ == b.coords_; }

std::strong_ordering operator<=>(const Value& a, const Value& b) {
  const std::size_t n = std::min(a.coords_.size(), b.coords_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int c = cmp(a.coords_[i], b.coords_[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return a.coords_.size() <=> b.coords_.size();
}

Rational Value::l1_norm() const {
  Rational total = 0;
  for (const auto& c : coords_) {
    total += abs(c);
  }
  return total;
}

std::string Value::to_string() const {
  if (coords_.size() == 1) {
    return divgraph::to_string(coords_[0]);
  }
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i > 0) out += ", ";
    out += divgraph::to_string(coords_[i]);
  }
  return out + ")";
}

Value parse_value(std::string_view text) {
  std::string_view body = trim(text);
  if (body.empty()) {
    throw Error(ErrorCode::ParseError, "empty value literal");
  }
  if (body.front() != '(') {
    return Value{parse_rational(body)};
  }
  if (body.back() != ')') {
    throw Error(ErrorCode::ParseError, "unterminated value vector '" + std::string(text) + "'");
  }
  body = body.substr(1, body.size() - 2);
  std::vector<Rational> coords;
  while (true) {
    const auto comma = body.find(',');
    coords.push_back(parse_rational(body.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return Value(std::move(coords));
}

bool ValueGroup::contains(const Value& v) const {
  if (v.dimension() != dimension()) {
    return false;
  }
  for (std::size_t i = 0; i < integer_rank; ++i) {
    if (!is_integer(v[i])) return false;
  }
  return true;
}

std::string ValueGroup::describe() const {
  std::string out;
  for (std::size_t i = 0; i < integer_rank; ++i) {
    if (i > 0) out += "+";
    out += "Z";
  }
  if (rational_part) {
    out += integer_rank > 0 ? "+Q" : "Q";
  }
  return out;
}

}  // namespace divgraph
