#pragma once

#include <string>
#include <vector>

#include "entityrank/link_graph.hpp"
#include "entityrank/pagerank.hpp"

namespace entityrank {

// The five per-page link-graph features of one language, aligned with the
// graph's node order (page ids ascending).
struct WikiFeatureTable {
  std::string language;
  std::vector<PageId> page_ids;
  std::vector<double> pagerank;  // stationary probabilities, sum to 1
  std::vector<std::uint32_t> inlinks;
  std::vector<std::uint32_t> outlinks;
  std::vector<double> ratio;
  std::vector<std::uint32_t> categories;
  std::size_t pagerank_iterations = 0;
  bool pagerank_converged = false;

  std::size_t index_of(PageId page_id) const;  // pages are ascending
};

WikiFeatureTable compute_wiki_features(const LinkGraph& graph,
                                       const CategoryMap& categories,
                                       const PageRankOptions& options = {});

}  // namespace entityrank
