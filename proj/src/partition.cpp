#include "divgraph/partition.hpp"

#include <unordered_map>

namespace divgraph {

Partition::Partition(std::vector<std::string> labels, UnionFind& dsu)
    : labels_(std::move(labels)), block_(labels_.size()) {
  std::unordered_map<std::size_t, std::size_t> root_block;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    const auto [it, fresh] = root_block.emplace(dsu.find(i), ids_.size());
    if (fresh) ids_.push_back(labels_[i]);
    block_[i] = it->second;
  }
}

std::map<std::string, std::string> Partition::as_map() const {
  std::map<std::string, std::string> out;
  for (std::size_t i = 0; i < labels_.size(); ++i) out.emplace(labels_[i], id_of(i));
  return out;
}

std::map<std::string, std::vector<std::string>> Partition::blocks() const {
  std::map<std::string, std::vector<std::string>> out;
  for (std::size_t i = 0; i < labels_.size(); ++i) out[id_of(i)].push_back(labels_[i]);
  return out;
}

}  // namespace divgraph
