#include "entityrank/ranking.hpp"

#include <algorithm>

namespace entityrank {

RankedList rank(std::vector<ScoredEntity> entities, std::string language) {
  std::sort(entities.begin(), entities.end(),
            [](const ScoredEntity& a, const ScoredEntity& b) {
              if (a.score != b.score) return a.score > b.score;
              return a.kb_id < b.kb_id;
            });
  RankedList list;
  list.language = std::move(language);
  list.rows.reserve(entities.size());
  for (std::size_t i = 0; i < entities.size(); ++i) {
    list.rows.push_back(
        {i + 1, std::move(entities[i].kb_id), std::move(entities[i].title),
         entities[i].score});
  }
  return list;
}

}  // namespace entityrank
