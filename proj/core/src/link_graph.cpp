#include "entityrank/link_graph.hpp"

#include <algorithm>

namespace entityrank {

namespace {

// Counting-sort CSR construction from (src, dst) node pairs.
void build_csr(std::size_t node_count,
               const std::vector<std::pair<LinkGraph::Node, LinkGraph::Node>>& edges,
               std::vector<std::size_t>& offsets,
               std::vector<LinkGraph::Node>& targets) {
  offsets.assign(node_count + 1, 0);
  for (const auto& [src, _] : edges) ++offsets[src + 1];
  for (std::size_t i = 0; i < node_count; ++i) offsets[i + 1] += offsets[i];
  targets.resize(edges.size());
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  for (const auto& [src, dst] : edges) targets[cursor[src]++] = dst;
  for (std::size_t i = 0; i < node_count; ++i) {
    std::sort(targets.begin() + offsets[i], targets.begin() + offsets[i + 1]);
  }
}

}  // namespace

LinkGraph LinkGraph::build(const std::vector<LinkEdge>& edges,
                           const EntityCatalog& catalog, const std::string& language) {
  LinkGraph graph;
  graph.language_ = language;
  for (const EntityRecord* record : catalog.records_in_language(language)) {
    graph.node_to_page_.push_back(record->page_id);  // ascending by construction
  }

  std::vector<std::pair<Node, Node>> node_edges;
  node_edges.reserve(edges.size());
  for (const LinkEdge& edge : edges) {
    auto src = graph.node_of(edge.src);
    auto dst = graph.node_of(edge.dst);
    if (!src || !dst) {
      throw InputError("link edge references a page unknown to language " + language);
    }
    node_edges.emplace_back(*src, *dst);
  }
  std::sort(node_edges.begin(), node_edges.end());
  node_edges.erase(std::unique(node_edges.begin(), node_edges.end()), node_edges.end());

  build_csr(graph.node_to_page_.size(), node_edges, graph.forward_offsets_,
            graph.forward_targets_);
  std::vector<std::pair<Node, Node>> reversed;
  reversed.reserve(node_edges.size());
  for (const auto& [src, dst] : node_edges) reversed.emplace_back(dst, src);
  build_csr(graph.node_to_page_.size(), reversed, graph.reverse_offsets_,
            graph.reverse_targets_);
  return graph;
}

std::optional<LinkGraph::Node> LinkGraph::node_of(PageId page_id) const {
  auto it = std::lower_bound(node_to_page_.begin(), node_to_page_.end(), page_id);
  if (it == node_to_page_.end() || *it != page_id) return std::nullopt;
  return static_cast<Node>(it - node_to_page_.begin());
}

DegreeFeatures degree_features(const LinkGraph& graph) {
  DegreeFeatures features;
  features.inlinks.resize(graph.node_count());
  features.outlinks.resize(graph.node_count());
  for (std::size_t node = 0; node < graph.node_count(); ++node) {
    features.inlinks[node] = static_cast<std::uint32_t>(graph.in_degree(node));
    features.outlinks[node] = static_cast<std::uint32_t>(graph.out_degree(node));
  }
  return features;
}

double in_out_ratio(std::uint64_t inlinks, std::uint64_t outlinks) {
  return static_cast<double>(inlinks) /
         static_cast<double>(std::max<std::uint64_t>(outlinks, 1));
}

std::uint32_t category_count(const CategoryMap& categories,
                             const std::string& language, PageId page_id) {
  auto it = categories.find({language, page_id});
  return it == categories.end() ? 0u : static_cast<std::uint32_t>(it->second.size());
}

}  // namespace entityrank
