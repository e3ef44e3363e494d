#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "divgraph/graph.hpp"
#include "divgraph/model.hpp"
#include "divgraph/partition.hpp"
#include "divgraph/subgroup.hpp"
#include "divgraph/verdict.hpp"

namespace divgraph {

/// Undirected reachability classes of the graph's vertices.
Partition weak_components(const DivGraph& graph);

/// The subgroup of the coset group generated by the atom values.
struct AtomSubgroup {
  SubgroupDescriptor descriptor;
  /// atoms[j] is an atom with value descriptor.generators()[j]; empty when
  /// the model cannot list its atoms.
  std::vector<Element> atoms;
  /// The model has no atoms at all (the descriptor is trivial).
  bool no_atoms = false;
};

AtomSubgroup atom_subgroup(const DivisibilityModel& model);

Membership subgroup_membership(const SubgroupDescriptor& descriptor, const Value& g);

/// Canonical label of the coset of a's group value modulo the atom subgroup.
std::string component_label(const DivisibilityModel& model, const AtomSubgroup& atoms,
                            const Element& a);
std::string component_label(const DivisibilityModel& model, const Element& a);

/// Vertices grouped by component_label.
Partition label_partition(const DivisibilityModel& model, const AtomSubgroup& atoms,
                          const DivGraph& graph);

/// a/b as a quotient of atom products. The certificate size (number of
/// atoms on both sides) must not exceed search_bound.
Verdict quotient_of_atomics(const DivisibilityModel& model, const AtomSubgroup& atoms,
                            const Element& a, const Element& b, std::size_t search_bound);
Verdict quotient_of_atomics(const DivisibilityModel& model, const Element& a, const Element& b,
                            std::size_t search_bound);

/// Checked over the integral nonunits of the window, one element per task.
/// Holds carries a WindowCertificate in window order.
Verdict is_almost_atomic(const DivisibilityModel& model, const std::vector<Element>& window,
                         std::size_t search_bound);
Verdict is_quasi_atomic(const DivisibilityModel& model, const std::vector<Element>& window,
                        std::size_t search_bound);

namespace serial {
Verdict is_almost_atomic(const DivisibilityModel& model, const std::vector<Element>& window,
                         std::size_t search_bound);
Verdict is_quasi_atomic(const DivisibilityModel& model, const std::vector<Element>& window,
                        std::size_t search_bound);
}  // namespace serial

struct PrimeWitnessReport {
  bool holds = false;
  std::vector<Element> atoms;
  /// Window elements with ord >= 1, i.e. members of the ideal xQ[x].
  std::vector<Element> ideal_elements;
  std::vector<std::string> violations;
  std::string summary;
};

/// For the Z + xQ[x] model: every window atom has ord 0 and no window element
/// of xQ[x] is an atom. Throws ModelMismatch for other models.
PrimeWitnessReport prime_witness_check_zxq(const DivisibilityModel& model,
                                           const std::vector<Element>& window);

}  // namespace divgraph
