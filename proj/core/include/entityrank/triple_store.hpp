#pragma once

#include <map>
#include <string>
#include <vector>

#include "entityrank/types.hpp"

namespace entityrank {

// Object of a triple: either a reference to another entity or a literal.
struct TripleObject {
  bool is_entity = false;
  std::string value;  // kb_id when is_entity, literal text otherwise

  bool operator==(const TripleObject&) const = default;
};

struct Triple {
  std::string subject;
  std::string predicate;
  TripleObject object;

  bool operator==(const Triple&) const = default;
};

// (subject, predicate, object) edges over kb ids. Literal objects never
// participate in graph-degree features. Indexes are built once at
// construction; the store is immutable afterwards.
class TripleStore {
 public:
  TripleStore() = default;
  explicit TripleStore(std::vector<Triple> triples);

  const std::vector<Triple>& triples() const { return triples_; }
  std::size_t size() const { return triples_.size(); }

  // Indices of triples with the given subject, in input order.
  const std::vector<std::size_t>& with_subject(const std::string& kb_id) const;
  // Indices of triples whose object is an entity reference to kb_id.
  const std::vector<std::size_t>& with_entity_object(const std::string& kb_id) const;

 private:
  std::vector<Triple> triples_;
  std::map<std::string, std::vector<std::size_t>> by_subject_;
  std::map<std::string, std::vector<std::size_t>> by_entity_object_;
};

}  // namespace entityrank
