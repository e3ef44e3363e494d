#include "divgraph/topology.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "divgraph/errors.hpp"
#include "divgraph/parallel.hpp"

namespace divgraph {

bool FinitePoset::valid() const {
  const std::size_t n = size();
  if (leq.size() != n) return false;
  for (const auto& row : leq) {
    if (row.size() != n) return false;
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (!leq[a][a]) return false;
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && leq[a][b] && leq[b][a]) return false;
      if (!leq[a][b]) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (leq[b][c] && !leq[a][c]) return false;
      }
    }
  }
  return true;
}

std::size_t AlexandrovSpace::index_of(const std::string& label) const {
  const auto it = std::find(points.begin(), points.end(), label);
  if (it == points.end()) {
    throw Error(ErrorCode::InvalidElement, "'" + label + "' is not a point of the space");
  }
  return static_cast<std::size_t>(it - points.begin());
}

AlexandrovSpace poset_to_space(const FinitePoset& poset) {
  AlexandrovSpace space{poset.points, std::vector<std::vector<std::size_t>>(poset.size())};
  for (std::size_t a = 0; a < poset.size(); ++a) {
    for (std::size_t x = 0; x < poset.size(); ++x) {
      if (poset.leq[x][a]) space.min_open[a].push_back(x);
    }
  }
  return space;
}

bool is_T0(const AlexandrovSpace& space) {
  std::map<std::vector<std::size_t>, std::size_t> seen;
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (!seen.emplace(space.min_open[i], i).second) return false;
  }
  return true;
}

bool is_basis_coherent(const AlexandrovSpace& space) {
  for (std::size_t x = 0; x < space.size(); ++x) {
    const auto& mx = space.min_open[x];
    if (!std::binary_search(mx.begin(), mx.end(), x)) return false;
    for (std::size_t y : mx) {
      const auto& my = space.min_open[y];
      if (!std::includes(mx.begin(), mx.end(), my.begin(), my.end())) return false;
    }
  }
  return true;
}

FinitePoset space_to_poset(const AlexandrovSpace& space) {
  if (!is_basis_coherent(space)) {
    throw Error(ErrorCode::InvalidElement, "minimal open sets do not form a coherent basis");
  }
  if (!is_T0(space)) {
    throw Error(ErrorCode::NotT0, "two points share a minimal open set");
  }
  const std::size_t n = space.size();
  FinitePoset poset{space.points, std::vector<std::vector<bool>>(n, std::vector<bool>(n, false))};
  for (std::size_t b = 0; b < n; ++b) {
    for (std::size_t a : space.min_open[b]) poset.leq[a][b] = true;
  }
  return poset;
}

namespace {

bool meets(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

}  // namespace

bool chain_connected(const AlexandrovSpace& space, std::size_t a, std::size_t b) {
  std::vector<bool> seen(space.size(), false);
  std::deque<std::size_t> queue{a};
  seen[a] = true;
  while (!queue.empty()) {
    const std::size_t x = queue.front();
    queue.pop_front();
    if (x == b) return true;
    for (std::size_t y = 0; y < space.size(); ++y) {
      if (!seen[y] && meets(space.min_open[x], space.min_open[y])) {
        seen[y] = true;
        queue.push_back(y);
      }
    }
  }
  return false;
}

Partition connected_components_topology(const AlexandrovSpace& space) {
  // Meeting minimal open sets share a point z, and z lies in its own
  // minimal open set, so joining every point to the members of its minimal
  // open set yields the same classes.
  UnionFind dsu(space.size());
  for (std::size_t x = 0; x < space.size(); ++x) {
    for (std::size_t z : space.min_open[x]) dsu.unite(x, z);
  }
  return Partition(space.points, dsu);
}

namespace {

std::vector<std::string> labels_of(const DivGraph& graph) {
  std::vector<std::string> out;
  for (const auto& v : graph.vertices()) out.push_back(v.label());
  return out;
}

std::vector<bool> poset_row(const DivisibilityModel& model, const DivGraph& graph, std::size_t x) {
  std::vector<bool> row(graph.size(), false);
  for (std::size_t a = 0; a < graph.size(); ++a) {
    row[a] = a == x || strictly_below(model, graph.vertex(x), graph.vertex(a));
  }
  return row;
}

}  // namespace

FinitePoset window_poset(const DivisibilityModel& model, const DivGraph& graph) {
  FinitePoset poset{labels_of(graph), std::vector<std::vector<bool>>(graph.size())};
  parallel_for(graph.size(), [&](std::size_t x) { poset.leq[x] = poset_row(model, graph, x); });
  return poset;
}

namespace serial {

FinitePoset window_poset(const DivisibilityModel& model, const DivGraph& graph) {
  FinitePoset poset{labels_of(graph), {}};
  for (std::size_t x = 0; x < graph.size(); ++x) poset.leq.push_back(poset_row(model, graph, x));
  return poset;
}

}  // namespace serial

}  // namespace divgraph
