#pragma once

#include <cstddef>
#include <vector>

#include "entityrank/link_graph.hpp"

namespace entityrank {

struct PageRankOptions {
  double damping = 0.85;
  std::size_t max_iterations = 100;
  double tolerance = 1e-9;  // L1 residual
};

struct PageRankResult {
  std::vector<double> scores;  // indexed by node; all > 0, sum to 1
  double damping = 0.85;
  std::size_t iterations = 0;
  double residual = 0.0;
  bool converged = false;  // residual < tolerance before max_iterations ran out
};

// Power iteration on the stochastic link matrix with uniform teleport.
// Dangling nodes redistribute their mass uniformly over all nodes, which
// keeps the iteration stochastic without adding edges. Stops when the L1
// residual drops below tolerance or max_iterations is reached.
// Throws InputError on an empty graph or invalid options.
PageRankResult pagerank(const LinkGraph& graph, const PageRankOptions& options = {});

}  // namespace entityrank
