#include "divgraph/subgroup.hpp"

#include <algorithm>

#include "divgraph/errors.hpp"

namespace divgraph {

namespace {

using Row = std::vector<Rational>;
using IntRow = std::vector<Integer>;

void axpy(Row& target, const Integer& q, const Row& source) {
  for (std::size_t i = 0; i < target.size(); ++i) target[i] -= Rational(q) * source[i];
}

void axpy(IntRow& target, const Integer& q, const IntRow& source) {
  for (std::size_t i = 0; i < target.size(); ++i) target[i] -= q * source[i];
}

Integer l1(const IntRow& c) {
  Integer total = 0;
  for (const auto& x : c) total += abs(x);
  return total;
}

Integer floor_quotient(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

/// Moves c along the kernel lattice while the L1 norm drops. Each step picks
/// the best integer multiple of one kernel vector; the norm is convex in the
/// multiple, so only the breakpoints -c_j/k_j need testing.
void shrink(IntRow& c, const std::vector<IntRow>& kernel) {
  for (int round = 0; round < 64; ++round) {
    bool improved = false;
    for (const auto& k : kernel) {
      Integer best_t = 0;
      Integer best = l1(c);
      for (std::size_t j = 0; j < c.size(); ++j) {
        if (k[j] == 0) continue;
        const Integer base = floor_quotient(-c[j], k[j]);
        for (const Integer& t : {Integer(base), Integer(base + 1)}) {
          IntRow trial = c;
          axpy(trial, -t, k);
          const Integer norm = l1(trial);
          if (norm < best) {
            best = norm;
            best_t = t;
          }
        }
      }
      if (best_t != 0) {
        axpy(c, -best_t, k);
        improved = true;
      }
    }
    if (!improved) return;
  }
}

}  // namespace

SubgroupDescriptor::SubgroupDescriptor(ValueGroup ambient, std::vector<Value> generators)
    : ambient_(ambient), generators_(std::move(generators)) {
  const std::size_t d = ambient_.dimension();
  const std::size_t m = generators_.size();
  std::vector<Row> rows;
  std::vector<IntRow> u(m, IntRow(m, 0));
  for (std::size_t j = 0; j < m; ++j) {
    if (!ambient_.contains(generators_[j])) {
      throw Error(ErrorCode::InvalidElement,
                  "generator " + generators_[j].to_string() + " is not in " + ambient_.describe());
    }
    rows.push_back(generators_[j].coords());
    u[j][j] = 1;
  }

  std::size_t r = 0;
  for (std::size_t p = 0; p < d && r < m; ++p) {
    while (true) {
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i) {
        if (rows[i][p] != 0 && (best == m || abs(rows[i][p]) < abs(rows[best][p]))) best = i;
      }
      if (best == m) break;
      std::swap(rows[r], rows[best]);
      std::swap(u[r], u[best]);
      bool cleared = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (rows[i][p] == 0) continue;
        const Integer q = floor_div(rows[i][p], rows[r][p]);
        axpy(rows[i], q, rows[r]);
        axpy(u[i], q, u[r]);
        if (rows[i][p] != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (r >= m || rows[r][p] == 0) continue;
    if (rows[r][p] < 0) {
      for (auto& x : rows[r]) x = -x;
      for (auto& x : u[r]) x = -x;
    }
    for (std::size_t k = 0; k < r; ++k) {
      const Integer q = floor_div(rows[k][p], rows[r][p]);
      axpy(rows[k], q, rows[r]);
      axpy(u[k], q, u[r]);
    }
    pivots_.push_back(p);
    ++r;
  }
  for (std::size_t i = 0; i < r; ++i) {
    basis_.emplace_back(rows[i]);
    transform_.push_back(u[i]);
  }
  for (std::size_t i = r; i < m; ++i) kernel_.push_back(u[i]);
}

bool SubgroupDescriptor::is_full() const {
  if (ambient_.rational_part || rank() != ambient_.dimension()) return false;
  for (std::size_t r = 0; r < rank(); ++r) {
    if (basis_[r][pivots_[r]] != 1) return false;
  }
  return true;
}

Value SubgroupDescriptor::reduce(const Value& g) const {
  if (g.dimension() != ambient_.dimension()) {
    throw Error(ErrorCode::InvalidElement, "value " + g.to_string() + " has the wrong dimension");
  }
  Row t = g.coords();
  for (std::size_t r = 0; r < rank(); ++r) {
    axpy(t, floor_div(t[pivots_[r]], basis_[r][pivots_[r]]), basis_[r].coords());
  }
  return Value(std::move(t));
}

Membership SubgroupDescriptor::membership(const Value& g) const {
  if (g.dimension() != ambient_.dimension()) {
    throw Error(ErrorCode::InvalidElement, "value " + g.to_string() + " has the wrong dimension");
  }
  Row t = g.coords();
  IntRow y;
  for (std::size_t r = 0; r < rank(); ++r) {
    const Integer q = floor_div(t[pivots_[r]], basis_[r][pivots_[r]]);
    axpy(t, q, basis_[r].coords());
    y.push_back(q);
  }
  if (!std::all_of(t.begin(), t.end(), [](const Rational& x) { return x == 0; })) return {};
  IntRow c(generators_.size(), 0);
  for (std::size_t r = 0; r < rank(); ++r) {
    for (std::size_t j = 0; j < c.size(); ++j) c[j] += y[r] * transform_[r][j];
  }
  shrink(c, kernel_);
  return Membership{true, std::move(c)};
}

std::string SubgroupDescriptor::coset_label(const Value& g) const { return reduce(g).to_string(); }

std::string SubgroupDescriptor::describe() const {
  if (is_trivial()) return "0";
  if (is_full()) return ambient_.describe();
  std::string out;
  for (const auto& row : basis_) {
    if (!out.empty()) out += " + ";
    out += "Z*" + row.to_string();
  }
  return out;
}

}  // namespace divgraph
