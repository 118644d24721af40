#include "entityrank/wiki_features.hpp"

#include <algorithm>

namespace entityrank {

std::size_t WikiFeatureTable::index_of(PageId page_id) const {
  auto it = std::lower_bound(page_ids.begin(), page_ids.end(), page_id);
  if (it == page_ids.end() || *it != page_id) {
    throw InputError("page id " + std::to_string(page_id) +
                     " not present in wiki features for language " + language);
  }
  return static_cast<std::size_t>(it - page_ids.begin());
}

WikiFeatureTable compute_wiki_features(const LinkGraph& graph,
                                       const CategoryMap& categories,
                                       const PageRankOptions& options) {
  WikiFeatureTable table;
  table.language = graph.language();
  table.page_ids = graph.pages();

  PageRankResult pr = pagerank(graph, options);
  table.pagerank = std::move(pr.scores);
  table.pagerank_iterations = pr.iterations;
  table.pagerank_converged = pr.converged;

  DegreeFeatures degrees = degree_features(graph);
  table.inlinks = std::move(degrees.inlinks);
  table.outlinks = std::move(degrees.outlinks);

  table.ratio.resize(graph.node_count());
  table.categories.resize(graph.node_count());
  for (std::size_t node = 0; node < graph.node_count(); ++node) {
    table.ratio[node] = in_out_ratio(table.inlinks[node], table.outlinks[node]);
    table.categories[node] =
        category_count(categories, table.language, table.page_ids[node]);
  }
  return table;
}

}  // namespace entityrank
