#pragma once

#include <map>
#include <string>
#include <vector>

#include "entityrank/types.hpp"

namespace entityrank {

// The entity universe. One record per (kb_id, language); the same kb_id may
// appear under several languages and always denotes the same entity.
// Immutable once built; all lookups are safe for concurrent readers.
class EntityCatalog {
 public:
  // Throws InputError on a duplicate (kb_id, language) or (language, page_id).
  void add(EntityRecord record);

  const std::vector<EntityRecord>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  const EntityRecord* find(std::string_view kb_id, std::string_view language) const;
  const EntityRecord* find_by_page(std::string_view language, PageId page_id) const;
  bool contains_kb_id(std::string_view kb_id) const;

  // Records of one entity, ordered by language code.
  std::vector<const EntityRecord*> records_of(std::string_view kb_id) const;
  // Records of one language, ordered by page id.
  std::vector<const EntityRecord*> records_in_language(std::string_view language) const;

  // Sorted distinct language codes.
  std::vector<std::string> languages() const;
  // Sorted distinct kb ids.
  std::vector<std::string> kb_ids() const;
  std::size_t distinct_entity_count() const;

  bool operator==(const EntityCatalog& other) const;

 private:
  std::vector<EntityRecord> entries_;
  std::map<std::pair<std::string, std::string>, std::size_t> by_kb_language_;
  std::map<std::pair<std::string, PageId>, std::size_t> by_language_page_;
};

}  // namespace entityrank
