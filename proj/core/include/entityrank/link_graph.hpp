#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "entityrank/catalog.hpp"
#include "entityrank/ingest.hpp"

namespace entityrank {

// Directed page-link graph of one language in compressed sparse row form.
// Nodes are all catalog pages of the language (isolated pages included),
// indexed by ascending page id. Forward and reverse adjacency are transposes
// of each other; duplicate edges are collapsed at build time. Immutable.
class LinkGraph {
 public:
  using Node = std::uint32_t;

  static LinkGraph build(const std::vector<LinkEdge>& edges,
                         const EntityCatalog& catalog, const std::string& language);

  const std::string& language() const { return language_; }
  std::size_t node_count() const { return node_to_page_.size(); }
  std::size_t edge_count() const { return forward_targets_.size(); }

  std::span<const Node> out_neighbors(Node node) const {
    return {forward_targets_.data() + forward_offsets_[node],
            forward_offsets_[node + 1] - forward_offsets_[node]};
  }
  std::span<const Node> in_neighbors(Node node) const {
    return {reverse_targets_.data() + reverse_offsets_[node],
            reverse_offsets_[node + 1] - reverse_offsets_[node]};
  }
  std::size_t out_degree(Node node) const {
    return forward_offsets_[node + 1] - forward_offsets_[node];
  }
  std::size_t in_degree(Node node) const {
    return reverse_offsets_[node + 1] - reverse_offsets_[node];
  }

  PageId page_id_of(Node node) const { return node_to_page_[node]; }
  std::optional<Node> node_of(PageId page_id) const;
  const std::vector<PageId>& pages() const { return node_to_page_; }

 private:
  std::string language_;
  std::vector<PageId> node_to_page_;  // ascending
  std::vector<std::size_t> forward_offsets_;
  std::vector<Node> forward_targets_;
  std::vector<std::size_t> reverse_offsets_;
  std::vector<Node> reverse_targets_;
};

struct DegreeFeatures {
  std::vector<std::uint32_t> inlinks;   // indexed by node
  std::vector<std::uint32_t> outlinks;  // indexed by node
};

// Per-node in/out link counts over the deduplicated edge set.
DegreeFeatures degree_features(const LinkGraph& graph);

// inlinks / max(outlinks, 1); the clamp keeps sink pages finite while
// preserving the "high in, low out" ordering.
double in_out_ratio(std::uint64_t inlinks, std::uint64_t outlinks);

// Number of distinct categories of a page; pages absent from the map have 0.
std::uint32_t category_count(const CategoryMap& categories,
                             const std::string& language, PageId page_id);

}  // namespace entityrank
