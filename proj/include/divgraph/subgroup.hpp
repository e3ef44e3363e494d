#pragma once

#include <string>
#include <vector>

#include "divgraph/value.hpp"

namespace divgraph {

struct Membership {
  bool member = false;
  /// Integer coefficients over the generators (in generator order) when
  /// member; chosen with small L1 norm.
  std::vector<Integer> coefficients;
};

/// Subgroup of Z^d (+) Q generated by finitely many values.
///
/// The normal form is a row echelon basis obtained with integer row
/// operations only (Euclid on rational entries), so it is a Z-basis of the
/// generated subgroup. On the Z^d part this is the Hermite normal form; the
/// pivot on the rational coordinate is the generator of the cyclic subgroup
/// of Q that remains. The unimodular transform is kept to express members
/// over the original generators.
class SubgroupDescriptor {
 public:
  SubgroupDescriptor(ValueGroup ambient, std::vector<Value> generators);

  const ValueGroup& ambient() const { return ambient_; }
  const std::vector<Value>& generators() const { return generators_; }
  /// Echelon basis rows; pivots are positive and entries above a pivot are
  /// reduced into [0, pivot).
  const std::vector<Value>& basis() const { return basis_; }
  std::size_t rank() const { return basis_.size(); }
  bool is_trivial() const { return basis_.empty(); }
  /// The subgroup is the whole ambient group.
  bool is_full() const;

  Membership membership(const Value& g) const;
  /// Canonical representative of g + H: equal for g, g' iff g - g' in H.
  Value reduce(const Value& g) const;
  std::string coset_label(const Value& g) const;

  /// "0", "Z+Z", or a list of basis rows such as "Z(1, 0)".
  std::string describe() const;

 private:
  ValueGroup ambient_;
  std::vector<Value> generators_;
  std::vector<Value> basis_;
  std::vector<std::size_t> pivots_;
  /// basis_[r] = sum_j transform_[r][j] * generators_[j].
  std::vector<std::vector<Integer>> transform_;
  /// Integer relations among the generators.
  std::vector<std::vector<Integer>> kernel_;
};

}  // namespace divgraph
