#pragma once

#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <vector>

namespace divgraph {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<unsigned> rank_;
};

/// Partition of labelled points. Each block is named by its first point, so
/// two partitions of the same point list are equal iff they are the same
/// equivalence relation. Graph vertices come in model order, so the name is
/// the block's smallest element.
class Partition {
 public:
  Partition() = default;
  /// Blocks come from the DSU roots; labels[i] names point i.
  Partition(std::vector<std::string> labels, UnionFind& dsu);

  std::size_t size() const { return labels_.size(); }
  std::size_t count() const { return ids_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Block names in first-appearance order.
  const std::vector<std::string>& ids() const { return ids_; }
  const std::string& id_of(std::size_t point) const { return ids_[block_[point]]; }
  bool same(std::size_t a, std::size_t b) const { return block_[a] == block_[b]; }

  /// label -> block name.
  std::map<std::string, std::string> as_map() const;
  /// block name -> member labels in point order.
  std::map<std::string, std::vector<std::string>> blocks() const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.as_map() == b.as_map();
  }

 private:
  std::vector<std::string> labels_;
  std::vector<std::size_t> block_;
  std::vector<std::string> ids_;
};

}  // namespace divgraph
