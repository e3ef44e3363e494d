#include "divgraph/connectivity.hpp"

#include <algorithm>
#include <map>

#include "divgraph/errors.hpp"
#include "divgraph/models.hpp"
#include "divgraph/parallel.hpp"

namespace divgraph {

Partition weak_components(const DivGraph& graph) {
  UnionFind dsu(graph.size());
  for (const auto& [from, to] : graph.edges()) dsu.unite(from, to);
  std::vector<std::string> labels;
  for (const auto& v : graph.vertices()) labels.push_back(v.label());
  return Partition(std::move(labels), dsu);
}

AtomSubgroup atom_subgroup(const DivisibilityModel& model) {
  const auto listed = model.atom_elements();
  if (!listed) {
    return AtomSubgroup{SubgroupDescriptor(model.coset_group(), model.atom_group_values()), {},
                        false};
  }
  std::vector<Value> values;
  std::vector<Element> atoms;
  for (const auto& atom : *listed) {
    Value v = model.group_value(atom);
    if (std::find(values.begin(), values.end(), v) == values.end()) {
      values.push_back(std::move(v));
      atoms.push_back(atom);
    }
  }
  return AtomSubgroup{SubgroupDescriptor(model.coset_group(), std::move(values)),
                      std::move(atoms), listed->empty()};
}

Membership subgroup_membership(const SubgroupDescriptor& descriptor, const Value& g) {
  return descriptor.membership(g);
}

std::string component_label(const DivisibilityModel& model, const AtomSubgroup& atoms,
                            const Element& a) {
  return atoms.descriptor.coset_label(model.group_value(a));
}

std::string component_label(const DivisibilityModel& model, const Element& a) {
  return component_label(model, atom_subgroup(model), a);
}

Partition label_partition(const DivisibilityModel& model, const AtomSubgroup& atoms,
                          const DivGraph& graph) {
  UnionFind dsu(graph.size());
  std::map<std::string, std::size_t> first;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < graph.size(); ++i) {
    const auto [it, fresh] = first.emplace(component_label(model, atoms, graph.vertex(i)), i);
    if (!fresh) dsu.unite(it->second, i);
    labels.push_back(graph.vertex(i).label());
  }
  return Partition(std::move(labels), dsu);
}

namespace {

Element product_of(const DivisibilityModel& model, const std::vector<Element>& factors) {
  Element out = model.unit();
  for (const auto& f : factors) out = model.product(out, f);
  return out;
}

std::vector<Element> sorted_by_label(std::vector<Element> v) {
  std::sort(v.begin(), v.end(),
            [](const Element& x, const Element& y) { return x.label() < y.label(); });
  return v;
}

BoundaryReason over_bound(const Element& a, std::size_t size, std::size_t bound) {
  return BoundaryReason{"smallest certificate found uses " + std::to_string(size) +
                            " atoms, above the search bound",
                        bound, a, {}};
}

}  // namespace

Verdict quotient_of_atomics(const DivisibilityModel& model, const AtomSubgroup& atoms,
                            const Element& a, const Element& b, std::size_t search_bound) {
  const Value diff = model.group_value(a) - model.group_value(b);
  const Membership m = atoms.descriptor.membership(diff);
  if (!m.member) {
    return Verdict{Status::Fails, Provenance::Analytic,
                   Witness{a,
                           "the group value of a/b, " + diff.to_string() +
                               ", lies outside the atom subgroup " + atoms.descriptor.describe(),
                           {}, {}}};
  }

  Certificate cert{a, b, {}, {}};
  if (!atoms.atoms.empty() || atoms.no_atoms) {
    for (std::size_t j = 0; j < m.coefficients.size(); ++j) {
      const Integer& c = m.coefficients[j];
      auto& side = c > 0 ? cert.numerator_atoms : cert.denominator_atoms;
      for (Integer k = 0; k < abs(c); ++k) side.push_back(atoms.atoms[j]);
    }
    const Element realized = model.quotient(product_of(model, cert.numerator_atoms),
                                            product_of(model, cert.denominator_atoms));
    if (!(realized == model.quotient(a, b))) {
      return Verdict{Status::Inconclusive, Provenance::Analytic,
                     BoundaryReason{"atom values realize the group value of a/b but not the "
                                    "class itself",
                                    search_bound, a, {}}};
    }
  } else if (auto sides = model.quotient_certificate(a, b)) {
    cert.numerator_atoms = std::move(sides->first);
    cert.denominator_atoms = std::move(sides->second);
  } else {
    return Verdict{Status::Inconclusive, Provenance::Analytic,
                   BoundaryReason{"the model offers no quotient certificate", search_bound, a, {}}};
  }
  cert.numerator_atoms = sorted_by_label(std::move(cert.numerator_atoms));
  cert.denominator_atoms = sorted_by_label(std::move(cert.denominator_atoms));
  const std::size_t size = cert.numerator_atoms.size() + cert.denominator_atoms.size();
  if (size > search_bound) {
    return Verdict{Status::Inconclusive, Provenance::Analytic, over_bound(a, size, search_bound)};
  }
  return Verdict{Status::Holds, Provenance::Analytic, std::move(cert)};
}

Verdict quotient_of_atomics(const DivisibilityModel& model, const Element& a, const Element& b,
                            std::size_t search_bound) {
  return quotient_of_atomics(model, atom_subgroup(model), a, b, search_bound);
}

namespace {

struct Assessment {
  Status status = Status::Inconclusive;
  Provenance provenance = Provenance::Searched;
  std::optional<ElementCertificate> certificate;
  std::string reason;
};

bool atomic(const DivisibilityModel& model, const Element& a, std::size_t bound) {
  return model.is_atomic_element(a, model.oracle_bound().value_or(bound));
}

Provenance atomic_provenance(const DivisibilityModel& model) {
  return model.flags().value_faithful ? Provenance::Analytic : Provenance::Searched;
}

std::vector<Element> pick(const std::vector<Element>& atoms, const std::vector<std::size_t>& idx) {
  std::vector<Element> out;
  for (std::size_t i : idx) out.push_back(atoms[i]);
  return out;
}

Assessment assess_almost(const DivisibilityModel& model, const AtomSubgroup& sub,
                         const Element& a, std::size_t bound) {
  if (atomic(model, a, bound)) {
    return {Status::Holds, atomic_provenance(model),
            ElementCertificate{a, {}, std::nullopt, a, atomic_provenance(model)}, {}};
  }
  const Value v = model.group_value(a);
  if (!sub.descriptor.membership(v).member) {
    return {Status::Fails, Provenance::Analytic, std::nullopt,
            "group value " + v.to_string() + " lies outside the atom subgroup " +
                sub.descriptor.describe() + ", so no product with atoms is atomic"};
  }
  std::optional<ElementCertificate> found;
  for (std::size_t size = 1; size <= bound && !found && !sub.atoms.empty(); ++size) {
    for_each_multiset(sub.atoms.size(), size, [&](const std::vector<std::size_t>& idx) {
      std::vector<Element> chosen = pick(sub.atoms, idx);
      const Element p = model.product(a, product_of(model, chosen));
      if (!atomic(model, p, bound)) return false;
      found = ElementCertificate{a, std::move(chosen), std::nullopt, p, Provenance::Searched};
      return true;
    });
  }
  if (found) return {Status::Holds, Provenance::Searched, std::move(found), {}};
  return {Status::Inconclusive, Provenance::Searched, std::nullopt,
          "no multiset of at most " + std::to_string(bound) + " atoms makes the product atomic"};
}

Assessment assess_quasi(const DivisibilityModel& model, const AtomSubgroup& sub, const Element& a,
                        std::size_t bound) {
  if (auto b = model.quasi_atomic_multiplier(a)) {
    const Element p = model.product(a, *b);
    if (model.is_integral(*b) && atomic(model, p, bound)) {
      return {Status::Holds, Provenance::Analytic,
              ElementCertificate{a, {}, *b, p, Provenance::Analytic}, {}};
    }
  }
  if (atomic(model, a, bound)) {
    return {Status::Holds, atomic_provenance(model),
            ElementCertificate{a, {}, model.unit(), a, atomic_provenance(model)}, {}};
  }
  if (auto obstruction = model.quasi_atomic_obstruction(a)) {
    return {Status::Fails, Provenance::Analytic, std::nullopt, *obstruction};
  }
  std::optional<ElementCertificate> found;
  for (std::size_t size = 1; size <= bound && !found && !sub.atoms.empty(); ++size) {
    for_each_multiset(sub.atoms.size(), size, [&](const std::vector<std::size_t>& idx) {
      std::vector<Element> chosen = pick(sub.atoms, idx);
      const Element p = product_of(model, chosen);
      const Element b = model.quotient(p, a);
      if (!model.is_integral(b)) return false;
      found = ElementCertificate{a, std::move(chosen), b, p, Provenance::Searched};
      return true;
    });
  }
  if (found) return {Status::Holds, Provenance::Searched, std::move(found), {}};
  return {Status::Inconclusive, Provenance::Searched, std::nullopt,
          "no element b dividing a product of at most " + std::to_string(bound) +
              " atoms makes ab atomic"};
}

std::vector<Element> integral_nonunits(const DivisibilityModel& model,
                                       const std::vector<Element>& window) {
  std::vector<Element> out;
  for (const auto& a : window) {
    if (model.is_integral(a) && !model.is_unit(a)) out.push_back(a);
  }
  return out;
}

Verdict merge(const DivisibilityModel& model, const std::vector<Element>& elements,
              std::vector<Assessment> results, std::size_t bound, const std::string& holds_summary) {
  std::optional<std::size_t> failing;
  std::optional<std::size_t> open;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (results[i].status == Status::Holds) continue;
    auto& slot = results[i].status == Status::Fails ? failing : open;
    if (!slot || model.simpler(elements[i], elements[*slot])) slot = i;
  }
  if (failing) {
    const auto& r = results[*failing];
    return Verdict{Status::Fails, r.provenance, Witness{elements[*failing], r.reason, {}, {}}};
  }
  if (open) {
    const auto& r = results[*open];
    return Verdict{Status::Inconclusive, r.provenance,
                   BoundaryReason{r.reason, bound, elements[*open], {}}};
  }
  WindowCertificate cert{holds_summary, {}};
  Provenance provenance = Provenance::Analytic;
  for (auto& r : results) {
    if (r.certificate->provenance == Provenance::Searched) provenance = Provenance::Searched;
    cert.elements.push_back(std::move(*r.certificate));
  }
  return Verdict{Status::Holds, provenance, std::move(cert)};
}

template <typename Assess>
Verdict run_parallel(const DivisibilityModel& model, const std::vector<Element>& window,
                     std::size_t bound, Assess assess, const std::string& summary) {
  const AtomSubgroup sub = atom_subgroup(model);
  const std::vector<Element> elements = integral_nonunits(model, window);
  std::vector<Assessment> results(elements.size());
  parallel_for(elements.size(),
               [&](std::size_t i) { results[i] = assess(model, sub, elements[i], bound); });
  return merge(model, elements, std::move(results), bound, summary);
}

template <typename Assess>
Verdict run_serial(const DivisibilityModel& model, const std::vector<Element>& window,
                   std::size_t bound, Assess assess, const std::string& summary) {
  const AtomSubgroup sub = atom_subgroup(model);
  const std::vector<Element> elements = integral_nonunits(model, window);
  std::vector<Assessment> results;
  for (const auto& a : elements) results.push_back(assess(model, sub, a, bound));
  return merge(model, elements, std::move(results), bound, summary);
}

const std::string kAlmostSummary =
    "every window nonunit times a finite product of atoms is atomic";
const std::string kQuasiSummary = "every window nonunit times some element of D is atomic";

}  // namespace

Verdict is_almost_atomic(const DivisibilityModel& model, const std::vector<Element>& window,
                         std::size_t search_bound) {
  return run_parallel(model, window, search_bound, assess_almost, kAlmostSummary);
}

Verdict is_quasi_atomic(const DivisibilityModel& model, const std::vector<Element>& window,
                        std::size_t search_bound) {
  return run_parallel(model, window, search_bound, assess_quasi, kQuasiSummary);
}

namespace serial {

Verdict is_almost_atomic(const DivisibilityModel& model, const std::vector<Element>& window,
                         std::size_t search_bound) {
  return run_serial(model, window, search_bound, assess_almost, kAlmostSummary);
}

Verdict is_quasi_atomic(const DivisibilityModel& model, const std::vector<Element>& window,
                        std::size_t search_bound) {
  return run_serial(model, window, search_bound, assess_quasi, kQuasiSummary);
}

}  // namespace serial

PrimeWitnessReport prime_witness_check_zxq(const DivisibilityModel& model,
                                           const std::vector<Element>& window) {
  const auto* zxq = dynamic_cast<const ZxqModel*>(&model);
  if (zxq == nullptr) {
    throw Error(ErrorCode::ModelMismatch,
                "the prime ideal check needs the Z + xQ[x] model, got '" + model.kind() + "'");
  }
  PrimeWitnessReport report;
  for (const auto& a : integral_nonunits(model, window)) {
    const long ord = zxq->order_of(a);
    const bool atom = model.is_atom(a);
    if (atom) {
      report.atoms.push_back(a);
      if (ord != 0) report.violations.push_back("atom " + a.label() + " has ord " + std::to_string(ord));
    }
    if (ord >= 1) {
      report.ideal_elements.push_back(a);
      if (atom) report.violations.push_back("ideal element " + a.label() + " is an atom");
    }
  }
  report.holds = report.violations.empty();
  report.summary =
      report.holds
          ? std::to_string(report.atoms.size()) + " window atoms, all of ord 0; " +
                std::to_string(report.ideal_elements.size()) +
                " window elements of xQ[x], none an atom: xQ[x] is a prime ideal containing no "
                "atom, so D is not quasi atomic"
          : std::to_string(report.violations.size()) + " violation(s) found";
  return report;
}

}  // namespace divgraph
