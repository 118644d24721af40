#pragma once

#include <string>
#include <vector>

namespace entityrank {

struct ScoredEntity {
  std::string kb_id;
  std::string title;
  double score = 0.0;
};

struct RankedRow {
  std::size_t rank = 0;  // 1-based, consecutive
  std::string kb_id;
  std::string title;
  double score = 0.0;
};

struct RankedList {
  std::string language;
  std::vector<RankedRow> rows;
};

// Orders by score descending; ties break by ascending kb_id so reruns are
// byte-identical. The output is a permutation of the input.
RankedList rank(std::vector<ScoredEntity> entities, std::string language);

}  // namespace entityrank
