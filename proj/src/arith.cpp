#include "divgraph/arith.hpp"

#include <algorithm>
#include <cctype>

#include "divgraph/errors.hpp"

namespace divgraph {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ElementForeignToModel: return "ElementForeignToModel";
    case ErrorCode::UndecidableWithoutBound: return "UndecidableWithoutBound";
    case ErrorCode::IrreducibilityUndecided: return "IrreducibilityUndecided";
    case ErrorCode::EmptyWindow: return "EmptyWindow";
    case ErrorCode::InvalidElement: return "InvalidElement";
    case ErrorCode::InvalidBounds: return "InvalidBounds";
    case ErrorCode::NotT0: return "NotT0";
    case ErrorCode::ModelMismatch: return "ModelMismatch";
    case ErrorCode::WindowTooLarge: return "WindowTooLarge";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownModelKind: return "UnknownModelKind";
  }
  return "Unknown";
}

std::string_view trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  return text;
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  });
}

}  // namespace

Rational fraction(const Integer& n, const Integer& d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  std::string_view body = trim(text);
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
    body = trim(body);
  }
  const auto slash = body.find('/');
  std::string_view num = trim(body.substr(0, slash));
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"}
                                                         : trim(body.substr(slash + 1));
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(ErrorCode::ParseError, "not an exact rational literal: '" +
                                           std::string(text) + "'");
  }
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) {
    throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  }
  Rational r(n, d);
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

std::string to_string(const Integer& value) { return value.get_str(); }

bool is_integer(const Rational& value) { return value.get_den() == 1; }

Integer floor_div(const Rational& a, const Rational& b) {
  Rational q = a / b;
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

std::string format_exponent(const Rational& exponent) {
  if (is_integer(exponent)) {
    return exponent.get_str();
  }
  return "(" + exponent.get_str() + ")";
}

bool is_prime(const Integer& n) {
  Integer m = abs(n);
  if (m < 2) {
    return false;
  }
  return mpz_probab_prime_p(m.get_mpz_t(), 30) != 0;
}

std::vector<Integer> prime_factors(const Integer& n) {
  Integer m = abs(n);
  std::vector<Integer> out;
  for (Integer p = 2; p * p <= m; ++p) {
    while (m % p == 0) {
      out.push_back(p);
      m /= p;
    }
  }
  if (m > 1) {
    out.push_back(m);
  }
  return out;
}

std::vector<Integer> positive_divisors(const Integer& n) {
  Integer m = abs(n);
  std::vector<Integer> small;
  std::vector<Integer> large;
  for (Integer d = 1; d * d <= m; ++d) {
    if (m % d == 0) {
      small.push_back(d);
      if (d * d != m) {
        large.push_back(m / d);
      }
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace divgraph
