#include "entityrank/pagerank.hpp"

#include <cmath>

namespace entityrank {

PageRankResult pagerank(const LinkGraph& graph, const PageRankOptions& options) {
  const std::size_t n = graph.node_count();
  if (n == 0) throw InputError("pagerank requires a non-empty graph");
  if (!(options.damping > 0.0 && options.damping < 1.0)) {
    throw InputError("pagerank damping must lie in (0,1)");
  }
  if (!(options.tolerance > 0.0)) throw InputError("pagerank tolerance must be > 0");

  const double d = options.damping;
  std::vector<double> current(n, 1.0 / static_cast<double>(n));
  std::vector<double> next(n);

  PageRankResult result;
  result.damping = d;
  while (result.iterations < options.max_iterations) {
    double dangling_mass = 0.0;
    for (std::size_t u = 0; u < n; ++u) {
      if (graph.out_degree(u) == 0) dangling_mass += current[u];
    }
    const double base = (1.0 - d) / static_cast<double>(n) +
                        d * dangling_mass / static_cast<double>(n);
    double residual = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
      double incoming = 0.0;
      for (LinkGraph::Node u : graph.in_neighbors(static_cast<LinkGraph::Node>(v))) {
        incoming += current[u] / static_cast<double>(graph.out_degree(u));
      }
      next[v] = base + d * incoming;
      residual += std::abs(next[v] - current[v]);
    }
    current.swap(next);
    ++result.iterations;
    result.residual = residual;
    if (residual < options.tolerance) {
      result.converged = true;
      break;
    }
  }

  // Renormalize: scores must sum to 1 even after floating-point drift.
  double sum = 0.0;
  for (double score : current) sum += score;
  for (double& score : current) score /= sum;

  result.scores = std::move(current);
  return result;
}

}  // namespace entityrank
