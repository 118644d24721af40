#include "entityrank/triple_store.hpp"

namespace entityrank {

namespace {
const std::vector<std::size_t> kEmptyIndex;
}

TripleStore::TripleStore(std::vector<Triple> triples) : triples_(std::move(triples)) {
  for (std::size_t i = 0; i < triples_.size(); ++i) {
    by_subject_[triples_[i].subject].push_back(i);
    if (triples_[i].object.is_entity) {
      by_entity_object_[triples_[i].object.value].push_back(i);
    }
  }
}

const std::vector<std::size_t>& TripleStore::with_subject(const std::string& kb_id) const {
  auto it = by_subject_.find(kb_id);
  return it == by_subject_.end() ? kEmptyIndex : it->second;
}

const std::vector<std::size_t>& TripleStore::with_entity_object(
    const std::string& kb_id) const {
  auto it = by_entity_object_.find(kb_id);
  return it == by_entity_object_.end() ? kEmptyIndex : it->second;
}

}  // namespace entityrank
