#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "entityrank/catalog.hpp"
#include "entityrank/triple_store.hpp"
#include "entityrank/types.hpp"

namespace entityrank {

// Per-file ingestion accounting. Every data line is either accepted or lands
// in exactly one reject bucket, so accepted + rejected() == data_lines.
struct ParseReport {
  std::string source;
  std::size_t data_lines = 0;
  std::size_t accepted = 0;
  std::size_t malformed = 0;     // wrong column count, bad number, bad enum
  std::size_t out_of_range = 0;  // label / score outside its legal range
  std::size_t unknown_ref = 0;   // page or kb id absent from the catalog
  std::size_t self_loops = 0;    // link with identical endpoints
  std::vector<std::size_t> rejected_lines;

  std::size_t rejected() const {
    return malformed + out_of_range + unknown_ref + self_loops;
  }
};

struct LinkEdge {
  PageId src = 0;
  PageId dst = 0;

  bool operator==(const LinkEdge&) const = default;
  auto operator<=>(const LinkEdge&) const = default;
};

// Accepted link edges grouped per language, in input order. Dangling
// endpoints and self-loops have already been dropped (and counted).
struct LinkEdgeList {
  std::map<std::string, std::vector<LinkEdge>> by_language;

  std::size_t total_edges() const;
};

// (language, page_id) -> set of category names.
using CategoryKey = std::pair<std::string, PageId>;
using CategoryMap = std::map<CategoryKey, std::set<std::string>>;

// kb_id -> human importance label in [1,5].
using LabelSet = std::map<std::string, int>;

// social id (e.g. "twitter:apple") -> externally supplied score in [0,100].
using SocialScoreMap = std::map<std::string, double>;

// File formats: UTF-8, tab-separated, LF line endings, '#' comment lines
// ignored. Malformed lines are skipped and counted, never fatal; duplicate
// catalog keys are fatal (InputError).

// pages file: kb_id \t language \t page_id \t title \t entity_type
// (entity_type optional; empty means MISC)
EntityCatalog parse_pages(const std::string& path, ParseReport& report);

// links file: language \t src_page_id \t dst_page_id
LinkEdgeList parse_links(const std::string& path, const EntityCatalog& catalog,
                         ParseReport& report);

// categories file: language \t page_id \t category_name
CategoryMap parse_categories(const std::string& path, const EntityCatalog& catalog,
                             ParseReport& report);

// triples file: subject_kb_id \t predicate \t object
// (object prefixed "kb:" is an entity reference, otherwise a literal)
TripleStore parse_triples(const std::string& path, ParseReport& report);

// labels file: kb_id \t label, label an integer in [1,5]
LabelSet parse_labels(const std::string& path, const EntityCatalog& catalog,
                      ParseReport& report);

// social scores file: social_id \t score, score a real in [0,100]
SocialScoreMap parse_external_scores(const std::string& path, ParseReport& report);

}  // namespace entityrank
