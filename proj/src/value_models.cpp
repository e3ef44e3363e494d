#include <cctype>
#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "divgraph/errors.hpp"
#include "divgraph/models.hpp"

namespace divgraph {

namespace {

/// Reduced fractions p/q with q <= max_den inside [lo, hi], ascending.
std::vector<Rational> fractions_between(const Rational& lo, const Rational& hi, long max_den) {
  std::set<Rational> out;
  for (long q = 1; q <= max_den; ++q) {
    const Integer first = -floor_div(-lo * q, Rational(1));  // ceil(lo * q)
    for (Integer p = first;; ++p) {
      Rational r(p, q);
      r.canonicalize();
      if (r > hi) break;
      out.insert(r);
    }
  }
  return {out.begin(), out.end()};
}

std::string power_text(const std::string& base, const Rational& exponent) {
  if (exponent == 1) return base;
  return base + "^" + format_exponent(exponent);
}

/// Joins numerator and denominator factor lists into "num/den" form.
std::string monomial_label(const std::vector<std::string>& num, const std::vector<std::string>& den) {
  const auto join = [](const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) {
      if (!out.empty()) out += "*";
      out += p;
    }
    return out;
  };
  std::string out = num.empty() ? "1" : join(num);
  if (den.size() == 1) {
    out += "/" + den.front();
  } else if (den.size() > 1) {
    out += "/(" + join(den) + ")";
  }
  return out;
}

}  // namespace

// ValueModel ----------------------------------------------------------------

Element ValueModel::from_value(const Value& v) const {
  if (!value_group().contains(v)) {
    throw Error(ErrorCode::InvalidElement,
                "value " + v.to_string() + " is not in " + value_group().describe());
  }
  return Element(tag(), label_of(v), v);
}

std::optional<std::vector<Element>> ValueModel::atom_elements() const {
  std::vector<Element> out;
  for (const auto& v : atom_values()) out.push_back(from_value(v));
  return out;
}

Element ValueModel::do_unit() const { return from_value(Value::zero(value_group().dimension())); }

bool ValueModel::do_divides(const Element& a, const Element& b) const {
  return in_monoid(b.value() - a.value());
}

Element ValueModel::do_quotient(const Element& a, const Element& b) const {
  return from_value(a.value() - b.value());
}

Element ValueModel::do_product(const Element& a, const Element& b) const {
  return from_value(a.value() + b.value());
}

bool ValueModel::do_is_integral(const Element& a) const { return in_monoid(a.value()); }

bool ValueModel::do_is_atom(const Element& a) const {
  const auto atoms = atom_values();
  return std::find(atoms.begin(), atoms.end(), a.value()) != atoms.end();
}

bool ValueModel::do_is_atomic(const Element& a) const { return is_atomic_value(a.value()); }

std::vector<Element> ValueModel::do_enumerate(const WindowSpec& spec) const {
  std::vector<Element> out;
  for (const auto& v : enumerate_values(spec)) {
    if (!spec.include_fractional && (v.is_zero() || !in_monoid(v))) continue;
    out.push_back(from_value(v));
  }
  return out;
}

FactorizationSet ValueModel::do_factorizations(const Element& a, std::size_t max_length) const {
  const std::vector<Value> atoms = atom_values();
  FactorizationSet result;
  std::vector<std::size_t> chosen;

  // Depth-first over nondecreasing atom indices; the remainder must stay in
  // the value monoid, since it is itself a sum of atoms.
  std::function<void(std::size_t, const Value&)> search = [&](std::size_t start,
                                                              const Value& remaining) {
    if (remaining.is_zero()) {
      if (chosen.empty()) return;
      Factorization f{{}, a};
      for (std::size_t idx : chosen) f.atoms.push_back(from_value(atoms[idx]));
      std::sort(f.atoms.begin(), f.atoms.end(),
                [](const Element& x, const Element& y) { return x.label() < y.label(); });
      result.factorizations.push_back(std::move(f));
      return;
    }
    if (chosen.size() == max_length) return;
    for (std::size_t i = start; i < atoms.size(); ++i) {
      Value next = remaining - atoms[i];
      if (!in_monoid(next)) continue;
      chosen.push_back(i);
      search(i, next);
      chosen.pop_back();
    }
  };
  if (in_monoid(a.value())) {
    search(0, a.value());
  }

  if (result.factorizations.empty()) {
    const bool atom_divides = std::any_of(atoms.begin(), atoms.end(), [&](const Value& atom) {
      return in_monoid(a.value() - atom);
    });
    const bool ruled_out = flags().value_faithful && !is_atomic_value(a.value());
    result.bound_too_small = atom_divides && !ruled_out;
  }
  return result;
}

SuccessorProbe ValueModel::do_successors(const Element& a, bool fractional) const {
  SuccessorProbe probe;
  for (const auto& atom : atom_values()) {
    Value b = a.value() - atom;
    if (fractional || (in_monoid(b) && !b.is_zero())) {
      probe.successors.push_back(from_value(b));
    }
  }
  return probe;
}

Value ValueModel::do_group_value(const Element& a) const { return a.value(); }

namespace {

/// Index of the first '/' outside parentheses, or npos.
std::size_t top_level_slash(std::string_view text) {
  int depth = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (text[i] == '/' && depth == 0) return i;
  }
  return std::string_view::npos;
}

std::string_view strip_parens(std::string_view text) {
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')') {
    return text.substr(1, text.size() - 2);
  }
  return text;
}

/// Adds sign * (exponents of the '*'-separated factors of text) to v.
void add_factors(std::string_view text, const std::vector<std::string>& vars, int sign,
                 std::vector<Rational>& v, std::string_view whole) {
  const auto bad = [&]() {
    return Error(ErrorCode::InvalidElement, "malformed monomial label '" + std::string(whole) + "'");
  };
  if (text == "1") return;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] == '(') ++depth;
    if (i < text.size() && text[i] == ')') --depth;
    if (i < text.size() && !(text[i] == '*' && depth == 0)) continue;
    const std::string_view factor = text.substr(start, i - start);
    start = i + 1;
    const std::size_t caret = factor.find('^');
    const std::string_view name = factor.substr(0, caret);
    const auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end()) throw bad();
    Rational exponent = 1;
    if (caret != std::string_view::npos) {
      const std::string_view e = strip_parens(factor.substr(caret + 1));
      if (e.empty()) throw bad();
      exponent = parse_rational(e);
    }
    v[static_cast<std::size_t>(it - vars.begin())] += sign * exponent;
  }
}

/// Inverse of the monomial labels, e.g. "y^2/x^(1/3)" or "1/(x*y)".
Value parse_monomial(std::string_view text, const std::vector<std::string>& vars) {
  std::vector<Rational> v(vars.size(), Rational(0));
  const std::size_t slash = top_level_slash(text);
  add_factors(text.substr(0, slash), vars, 1, v, text);
  if (slash != std::string_view::npos) {
    add_factors(strip_parens(text.substr(slash + 1)), vars, -1, v, text);
  }
  return Value(std::move(v));
}

}  // namespace

Element ValueModel::do_parse(std::string_view text) const {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  }
  const auto vars = variables();
  // Monomial labels print the unit class as "1".
  if (!vars.empty() && compact == "1") return unit();
  const bool monomial = !vars.empty() && std::any_of(compact.begin(), compact.end(), [](char c) {
    return std::isalpha(static_cast<unsigned char>(c));
  });
  Value v = monomial ? parse_monomial(compact, vars) : parse_value(text);
  if (v.dimension() != value_group().dimension()) {
    throw Error(ErrorCode::InvalidElement, "'" + std::string(text) + "' has dimension " +
                                               std::to_string(v.dimension()) + ", expected " +
                                               std::to_string(value_group().dimension()));
  }
  return from_value(v);
}

// DvrModel ------------------------------------------------------------------

DvrModel::DvrModel(std::string id) : ValueModel(std::move(id), "dvr", ValueGroup{1, false}, {}) {}

bool DvrModel::in_monoid(const Value& v) const { return v[0] >= 0; }

std::vector<Value> DvrModel::atom_values() const { return {Value{Rational(1)}}; }

bool DvrModel::is_atomic_value(const Value& v) const { return v[0] >= 1; }

std::string DvrModel::label_of(const Value& v) const {
  const Rational& n = v[0];
  if (n == 0) return "1";
  if (n > 0) return power_text("pi", n);
  return "1/" + power_text("pi", -n);
}

std::vector<Value> DvrModel::enumerate_values(const WindowSpec& spec) const {
  const long max = spec.positive_int_bound("max_exponent");
  std::vector<Value> out;
  for (long n = spec.include_fractional ? -max : 1; n <= max; ++n) {
    out.push_back(Value{Rational(n)});
  }
  return out;
}

// NumericalMonoidModel ------------------------------------------------------

NumericalMonoidModel::NumericalMonoidModel(std::vector<Integer> generators, std::string id,
                                           ModelFlags flags)
    : ValueModel(std::move(id), "numerical", ValueGroup{1, false}, flags) {
  if (generators.empty()) {
    throw Error(ErrorCode::InvalidElement, "numerical monoid needs at least one generator");
  }
  gcd_ = 0;
  for (const auto& g : generators) {
    if (g <= 0) {
      throw Error(ErrorCode::InvalidElement, "numerical monoid generators must be positive");
    }
    mpz_gcd(gcd_.get_mpz_t(), gcd_.get_mpz_t(), g.get_mpz_t());
  }
  std::vector<long> scaled;
  for (const auto& g : generators) {
    const Integer s = g / gcd_;
    if (!s.fits_slong_p() || s > 100000) {
      throw Error(ErrorCode::InvalidElement, "numerical monoid generator too large");
    }
    scaled.push_back(s.get_si());
  }
  std::sort(scaled.begin(), scaled.end());
  scaled.erase(std::unique(scaled.begin(), scaled.end()), scaled.end());

  // Membership table up to the conductor: stop after min_gen consecutive
  // members, past which every integer is a member.
  const long smallest = scaled.front();
  member_.push_back(true);
  long run = 1;
  for (long n = 1; run < smallest; ++n) {
    bool m = false;
    for (long g : scaled) {
      if (g <= n && member_[static_cast<std::size_t>(n - g)]) {
        m = true;
        break;
      }
    }
    member_.push_back(m);
    run = m ? run + 1 : 0;
  }

  for (long g : scaled) {
    bool decomposable = false;
    for (long part = 1; part < g && !decomposable; ++part) {
      decomposable = member_scaled_(part) && member_scaled_(g - part);
    }
    if (!decomposable) atoms_.push_back(Integer(g) * gcd_);
  }
}

bool NumericalMonoidModel::member_scaled_(const Integer& n) const {
  if (n < 0) return false;
  if (n >= static_cast<long>(member_.size())) return true;
  return member_[n.get_ui()];
}

bool NumericalMonoidModel::in_monoid(const Value& v) const {
  if (!is_integer(v[0])) return false;
  const Integer& n = v[0].get_num();
  if (n % gcd_ != 0) return false;
  return member_scaled_(n / gcd_);
}

std::vector<Value> NumericalMonoidModel::atom_values() const {
  std::vector<Value> out;
  for (const auto& a : atoms_) out.push_back(Value{Rational(a)});
  return out;
}

bool NumericalMonoidModel::is_atomic_value(const Value& v) const {
  return !v.is_zero() && in_monoid(v);
}

std::string NumericalMonoidModel::label_of(const Value& v) const { return to_string(v[0]); }

std::vector<Value> NumericalMonoidModel::enumerate_values(const WindowSpec& spec) const {
  const long max = spec.positive_int_bound("max_value");
  std::vector<Value> out;
  for (long n = spec.include_fractional ? -max : 1; n <= max; ++n) {
    if (Integer(n) % gcd_ == 0) out.push_back(Value{Rational(n)});
  }
  return out;
}

// AntimatterModel -----------------------------------------------------------

AntimatterModel::AntimatterModel(std::string id)
    : ValueModel(std::move(id), "antimatter", ValueGroup{0, true}, ModelFlags{true, true}) {}

bool AntimatterModel::in_monoid(const Value& v) const { return v[0] >= 0; }

std::vector<Value> AntimatterModel::atom_values() const { return {}; }

bool AntimatterModel::is_atomic_value(const Value&) const { return false; }

std::string AntimatterModel::label_of(const Value& v) const {
  const Rational& a = v[0];
  if (a == 0) return "1";
  if (a > 0) return power_text("x", a);
  return "1/" + power_text("x", -a);
}

std::vector<Value> AntimatterModel::enumerate_values(const WindowSpec& spec) const {
  const Rational max = spec.positive_bound("max_value");
  const long max_den = spec.positive_int_bound("max_den");
  const Rational lo = spec.include_fractional ? Rational(-max) : Rational(1, max_den);
  std::vector<Value> out;
  for (const auto& r : fractions_between(lo, max, max_den)) out.push_back(Value{r});
  return out;
}

// RankTwoModel --------------------------------------------------------------

RankTwoModel::RankTwoModel(Variant variant, std::string id)
    : ValueModel(id.empty() ? (variant == Variant::Rational ? "d1" : "d2") : std::move(id),
                 variant == Variant::Rational ? "d1" : "d2",
                 variant == Variant::Rational ? ValueGroup{1, true} : ValueGroup{2, false}, {}),
      variant_(variant) {}

bool RankTwoModel::in_monoid(const Value& v) const {
  const Rational& k = v[0];
  const Rational& r = v[1];
  if (k < 0) return false;
  if (k <= 1) return r >= 0;
  return true;
}

std::vector<Value> RankTwoModel::atom_values() const {
  if (variant_ == Variant::Rational) {
    return {Value{Rational(1), Rational(0)}};
  }
  return {Value{Rational(0), Rational(1)}, Value{Rational(1), Rational(0)}};
}

bool RankTwoModel::is_atomic_value(const Value& v) const {
  if (v.is_zero()) return false;
  if (variant_ == Variant::Rational) {
    return v[0] >= 1 && v[1] == 0;
  }
  return v[0] >= 0 && v[1] >= 0;
}

std::string RankTwoModel::label_of(const Value& v) const {
  const Rational& k = v[0];
  const Rational& r = v[1];
  std::vector<std::string> num;
  std::vector<std::string> den;
  if (r > 0) num.push_back(power_text("x", r));
  if (k > 0) num.push_back(power_text("y", k));
  if (r < 0) den.push_back(power_text("x", -r));
  if (k < 0) den.push_back(power_text("y", -k));
  return monomial_label(num, den);
}

std::optional<Element> RankTwoModel::quasi_atomic_multiplier(const Element& a) const {
  if (variant_ != Variant::Rational) return std::nullopt;
  check_owned(a);
  return from_value(Value{Rational(2), Rational(-a.value()[1])});
}

std::vector<Value> RankTwoModel::enumerate_values(const WindowSpec& spec) const {
  const long max_k = spec.positive_int_bound("max_k");
  const Rational max_abs = spec.positive_bound("max_abs");
  const long max_den =
      variant_ == Variant::Rational ? spec.positive_int_bound("max_den") : 1;
  const std::vector<Rational> second = fractions_between(-max_abs, max_abs, max_den);
  std::vector<Value> out;
  for (long k = spec.include_fractional ? -max_k : 0; k <= max_k; ++k) {
    for (const auto& r : second) out.push_back(Value{Rational(k), r});
  }
  return out;
}

}  // namespace divgraph
