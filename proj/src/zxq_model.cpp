#include <algorithm>
#include <set>

#include "divgraph/errors.hpp"
#include "divgraph/models.hpp"

namespace divgraph {

namespace {

Polynomial x_power(std::size_t k) { return Polynomial::monomial(Rational(1), k); }

std::vector<Rational> positive_fractions(long max_num, long max_den) {
  std::set<Rational> out;
  for (long q = 1; q <= max_den; ++q) {
    for (long p = 1; p <= max_num; ++p) {
      Rational r(p, q);
      r.canonicalize();
      out.insert(r);
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace

ZxqModel::ZxqModel(std::string id, std::vector<Polynomial> declared_atoms,
                   std::vector<Polynomial> cofactors)
    : DivisibilityModel(std::move(id), "zxq", ValueGroup{1, false}, {}),
      declared_atoms_(std::move(declared_atoms)),
      cofactors_(std::move(cofactors)) {
  for (auto& p : declared_atoms_) {
    if (p.is_zero() || abs(p.coeff(0)) != 1) {
      throw Error(ErrorCode::InvalidElement,
                  "declared atoms must be polynomials with constant term +-1");
    }
    p = p.scaled(Rational(1) / p.coeff(0));
  }
  if (cofactors_.empty()) {
    cofactors_.push_back(parse_polynomial("1+x"));
  }
  for (const auto& c : cofactors_) {
    if (c.is_zero() || c.coeff(0) != 1) {
      throw Error(ErrorCode::InvalidElement, "window cofactors must have constant term 1");
    }
  }
}

Element ZxqModel::from_function(const RationalFunction& f) const {
  RationalFunction canonical = f.sign_normalized();
  std::string label = canonical.to_string();
  return Element(tag(), std::move(label), std::nullopt,
                 std::make_shared<const RationalFunction>(std::move(canonical)));
}

Element ZxqModel::from_polynomial(const Polynomial& p) const {
  if (p.is_zero()) {
    throw Error(ErrorCode::InvalidElement, "zero is not a class of P(D)");
  }
  return from_function(RationalFunction(p));
}

const RationalFunction& ZxqModel::fn_(const Element& a) const {
  if (a.symbolic() == nullptr) {
    throw Error(ErrorCode::InvalidElement, "element '" + a.label() + "' has no polynomial payload");
  }
  return *a.symbolic();
}

bool ZxqModel::is_in_d_(const RationalFunction& f) const {
  return f.is_polynomial() && is_integer(f.numerator().coeff(0));
}

long ZxqModel::order_of(const Element& a) const {
  check_owned(a);
  return fn_(a).order();
}

Element ZxqModel::do_unit() const { return from_polynomial(Polynomial::constant(1)); }

bool ZxqModel::do_divides(const Element& a, const Element& b) const {
  return is_in_d_(fn_(b) / fn_(a));
}

Element ZxqModel::do_quotient(const Element& a, const Element& b) const {
  return from_function(fn_(a) / fn_(b));
}

Element ZxqModel::do_product(const Element& a, const Element& b) const {
  return from_function(fn_(a) * fn_(b));
}

bool ZxqModel::do_is_integral(const Element& a) const { return is_in_d_(fn_(a)); }

bool ZxqModel::q_irreducible_(const Polynomial& p) const {
  const int d = p.degree();
  if (d <= 0) return false;
  if (d == 1) return true;
  if (!p.rational_roots().empty()) return false;
  if (d <= 3) return true;
  const Polynomial normalized = p.scaled(Rational(1) / p.coeff(0));
  if (std::find(declared_atoms_.begin(), declared_atoms_.end(), normalized) != declared_atoms_.end()) {
    return true;
  }
  for (const auto& declared : declared_atoms_) {
    if (declared.degree() < d && Polynomial::divmod(normalized, declared).second.is_zero()) {
      return false;
    }
  }
  throw Error(ErrorCode::IrreducibilityUndecided,
              "irreducibility of '" + p.to_string() +
                  "' (degree > 3, no rational root) is outside the decided range; "
                  "declare it as an atom to proceed");
}

bool ZxqModel::do_is_atom(const Element& a) const {
  const RationalFunction& f = fn_(a);
  if (!is_in_d_(f)) return false;
  const Polynomial& p = f.numerator();
  const Rational c0 = p.coeff(0);
  if (c0 == 0) return false;  // x*g = 2 * (x*g/2)
  if (p.degree() == 0) return is_prime(c0.get_num());
  // With |c0| > 1 the element splits as c0 * (p / c0).
  if (abs(c0) != 1) return false;
  return q_irreducible_(p);
}

bool ZxqModel::do_is_atomic(const Element& a) const {
  const RationalFunction& f = fn_(a);
  return is_in_d_(f) && f.numerator().coeff(0) != 0 && !(a == do_unit());
}

std::vector<Polynomial> ZxqModel::unit_constant_factors_(const Polynomial& p) const {
  std::vector<Polynomial> out;
  Polynomial rest = p.scaled(Rational(1) / p.coeff(0));
  for (const auto& root : rest.rational_roots()) {
    // 1 - x/root has constant term 1.
    const Polynomial linear({Rational(1), Rational(-1) / root});
    while (true) {
      auto [q, r] = Polynomial::divmod(rest, linear);
      if (!r.is_zero()) break;
      out.push_back(linear);
      rest = q.scaled(Rational(1) / q.coeff(0));
    }
  }
  if (rest.degree() >= 4) {
    for (const auto& declared : declared_atoms_) {
      while (rest.degree() >= declared.degree()) {
        auto [q, r] = Polynomial::divmod(rest, declared);
        if (!r.is_zero()) break;
        out.push_back(declared);
        rest = q.scaled(Rational(1) / q.coeff(0));
      }
    }
  }
  if (rest.degree() >= 1) {
    if (!q_irreducible_(rest)) {
      throw Error(ErrorCode::IrreducibilityUndecided,
                  "cannot factor '" + rest.to_string() + "' over Q");
    }
    out.push_back(rest);
  }
  return out;
}

std::vector<Element> ZxqModel::split_constant_(const Rational& c, bool numerator_side) const {
  std::vector<Element> out;
  const Integer& part = numerator_side ? c.get_num() : c.get_den();
  for (const auto& p : prime_factors(part)) {
    out.push_back(from_polynomial(Polynomial::constant(Rational(p))));
  }
  return out;
}

std::vector<Element> ZxqModel::atomic_factorization(const Element& a) const {
  check_owned(a);
  if (!do_is_atomic(a)) {
    throw Error(ErrorCode::InvalidElement, "'" + a.label() + "' is not an atomic element of D");
  }
  const Polynomial& p = fn_(a).numerator();
  std::vector<Element> atoms = split_constant_(p.coeff(0), true);
  for (const auto& f : unit_constant_factors_(p)) {
    atoms.push_back(from_polynomial(f));
  }
  std::sort(atoms.begin(), atoms.end(),
            [](const Element& x, const Element& y) { return x.label() < y.label(); });
  return atoms;
}

FactorizationSet ZxqModel::do_factorizations(const Element& a, std::size_t max_length) const {
  FactorizationSet result;
  if (!do_is_atomic(a)) {
    // Elements outside F(D) (ord >= 1, units, fractions) have no factorization.
    return result;
  }
  std::vector<Element> atoms = atomic_factorization(a);
  if (atoms.size() <= max_length) {
    result.factorizations.push_back(Factorization{std::move(atoms), a});
  } else {
    result.bound_too_small = true;
  }
  return result;
}

SuccessorProbe ZxqModel::do_successors(const Element& a, bool fractional) const {
  if (fractional) {
    throw Error(ErrorCode::InvalidBounds, "the zxq model supports integral windows only");
  }
  SuccessorProbe probe;
  const RationalFunction& f = fn_(a);
  if (!is_in_d_(f) || a == do_unit()) return probe;
  if (f.numerator().coeff(0) == 0) {
    // a/p lies in D for every prime p.
    probe.unbounded = true;
    for (int p : {2, 3, 5, 7}) {
      probe.successors.push_back(from_function(f / RationalFunction(Polynomial::constant(p))));
    }
    return probe;
  }
  std::vector<Element> atoms = atomic_factorization(a);
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
  for (const auto& atom : atoms) {
    Element b = do_quotient(a, atom);
    if (!(b == do_unit())) probe.successors.push_back(std::move(b));
  }
  return probe;
}

Value ZxqModel::do_group_value(const Element& a) const { return Value{Rational(fn_(a).order())}; }

std::vector<Value> ZxqModel::atom_group_values() const { return {Value{Rational(0)}}; }

std::optional<std::pair<std::vector<Element>, std::vector<Element>>>
ZxqModel::quotient_certificate(const Element& a, const Element& b) const {
  check_owned(a);
  check_owned(b);
  const RationalFunction& fa = fn_(a);
  const RationalFunction& fb = fn_(b);
  if (!is_in_d_(fa) || !is_in_d_(fb) || fa.order() != fb.order()) return std::nullopt;
  // a/b = (a/x^e)/(b/x^e); each side is c * g with c in Q and g(0) = 1.
  const auto e = static_cast<std::size_t>(fa.order());
  const Polynomial pa = Polynomial::divmod(fa.numerator(), x_power(e)).first;
  const Polynomial pb = Polynomial::divmod(fb.numerator(), x_power(e)).first;
  std::vector<Element> numerator = split_constant_(pa.coeff(0), true);
  std::vector<Element> denominator = split_constant_(pa.coeff(0), false);
  for (auto& atom : split_constant_(pb.coeff(0), false)) numerator.push_back(std::move(atom));
  for (auto& atom : split_constant_(pb.coeff(0), true)) denominator.push_back(std::move(atom));
  for (const auto& f : unit_constant_factors_(pa)) numerator.push_back(from_polynomial(f));
  for (const auto& f : unit_constant_factors_(pb)) denominator.push_back(from_polynomial(f));
  const auto by_label = [](const Element& x, const Element& y) { return x.label() < y.label(); };
  std::sort(numerator.begin(), numerator.end(), by_label);
  std::sort(denominator.begin(), denominator.end(), by_label);
  return std::make_pair(std::move(numerator), std::move(denominator));
}

std::optional<std::string> ZxqModel::quasi_atomic_obstruction(const Element& a) const {
  check_owned(a);
  const RationalFunction& f = fn_(a);
  if (is_in_d_(f) && f.order() >= 1) {
    return "ord(" + a.label() +
           ") >= 1 and every atom has ord 0, so ord(ab) >= 1 for every b in D and ab is "
           "never atomic";
  }
  return std::nullopt;
}

std::vector<Element> ZxqModel::do_enumerate(const WindowSpec& spec) const {
  if (spec.include_fractional) {
    throw Error(ErrorCode::InvalidBounds, "the zxq model supports integral windows only");
  }
  const long max_ord = spec.find_bound("max_ord") ? spec.positive_int_bound("max_ord") : 0;
  const long max_num = spec.positive_int_bound("max_num");
  const long max_den = spec.positive_int_bound("max_den");
  const long max_degree = spec.positive_int_bound("max_degree");
  const long max_cofactors =
      spec.find_bound("max_cofactors") ? spec.positive_int_bound("max_cofactors") : 1;

  // Products of at most max_cofactors cofactors (the empty product is 1).
  std::vector<Polynomial> products{Polynomial::constant(1)};
  for (long n = 1; n <= max_cofactors; ++n) {
    for_each_multiset(cofactors_.size(), static_cast<std::size_t>(n),
                      [&](const std::vector<std::size_t>& idx) {
                        Polynomial p = Polynomial::constant(1);
                        for (std::size_t i : idx) p = p * cofactors_[i];
                        if (std::find(products.begin(), products.end(), p) == products.end()) {
                          products.push_back(std::move(p));
                        }
                        return false;
                      });
  }

  const std::vector<Rational> fractions = positive_fractions(max_num, max_den);
  std::vector<Element> out;
  for (long k = 0; k <= max_ord; ++k) {
    for (const auto& g : products) {
      if (g.degree() + k > max_degree) continue;
      for (const auto& c : fractions) {
        if (k == 0 && !is_integer(c)) continue;
        if (k == 0 && c == 1 && g.degree() == 0) continue;  // the unit
        out.push_back(from_polynomial((x_power(static_cast<std::size_t>(k)) * g).scaled(c)));
      }
    }
  }
  return out;
}

Element ZxqModel::do_parse(std::string_view text) const {
  const auto slash = text.find(")/");
  if (slash != std::string_view::npos && !text.empty() && trim(text).front() == '(') {
    const std::string_view body = trim(text);
    const auto split = body.find(")/");
    std::string_view num = body.substr(1, split - 1);
    std::string_view den = trim(body.substr(split + 2));
    if (!den.empty() && den.front() == '(' && den.back() == ')') {
      den = den.substr(1, den.size() - 2);
    }
    return from_function(RationalFunction(parse_polynomial(num), parse_polynomial(den)));
  }
  return from_polynomial(parse_polynomial(text));
}

}  // namespace divgraph
