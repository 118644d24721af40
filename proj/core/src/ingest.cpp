#include "entityrank/ingest.hpp"

#include <limits>

#include "entityrank/tsv.hpp"

namespace entityrank {

namespace {

std::optional<PageId> parse_page_id(std::string_view text) {
  auto value = tsv::parse_int(text);
  if (!value || *value < 0 || *value > std::numeric_limits<PageId>::max()) {
    return std::nullopt;
  }
  return static_cast<PageId>(*value);
}

}  // namespace

std::size_t LinkEdgeList::total_edges() const {
  std::size_t n = 0;
  for (const auto& [_, edges] : by_language) n += edges.size();
  return n;
}

EntityCatalog parse_pages(const std::string& path, ParseReport& report) {
  EntityCatalog catalog;
  report.source = path;
  tsv::for_each_data_line(path, [&](std::size_t line_number, std::string_view line) {
    ++report.data_lines;
    auto fields = tsv::split_fields(line);
    if (fields.size() < 4 || fields.size() > 5) {
      ++report.malformed;
      report.rejected_lines.push_back(line_number);
      return;
    }
    EntityRecord record;
    record.kb_id = std::string(fields[0]);
    record.language = std::string(fields[1]);
    auto page_id = parse_page_id(fields[2]);
    auto type = entity_type_from_string(fields.size() == 5 ? fields[4] : std::string_view{});
    if (record.kb_id.empty() || !is_valid_language_code(record.language) ||
        !page_id || !type) {
      ++report.malformed;
      report.rejected_lines.push_back(line_number);
      return;
    }
    record.page_id = *page_id;
    record.title = std::string(fields[3]);
    record.entity_type = *type;
    catalog.add(std::move(record));  // duplicate keys throw
    ++report.accepted;
  });
  return catalog;
}

LinkEdgeList parse_links(const std::string& path, const EntityCatalog& catalog,
                         ParseReport& report) {
  LinkEdgeList list;
  report.source = path;
  tsv::for_each_data_line(path, [&](std::size_t line_number, std::string_view line) {
    ++report.data_lines;
    auto fields = tsv::split_fields(line);
    if (fields.size() != 3) {
      ++report.malformed;
      report.rejected_lines.push_back(line_number);
      return;
    }
    std::string language(fields[0]);
    auto src = parse_page_id(fields[1]);
    auto dst = parse_page_id(fields[2]);
    if (!is_valid_language_code(language) || !src || !dst) {
      ++report.malformed;
      report.rejected_lines.push_back(line_number);
      return;
    }
    if (catalog.find_by_page(language, *src) == nullptr ||
        catalog.find_by_page(language, *dst) == nullptr) {
      ++report.unknown_ref;
      report.rejected_lines.push_back(line_number);
      return;
    }
    if (*src == *dst) {
      ++report.self_loops;
      report.rejected_lines.push_back(line_number);
      return;
    }
    list.by_language[language].push_back({*src, *dst});
    ++report.accepted;
  });
  return list;
}

CategoryMap parse_categories(const std::string& path, const EntityCatalog& catalog,
                             ParseReport& report) {
  CategoryMap map;
  report.source = path;
  tsv::for_each_data_line(path, [&](std::size_t line_number, std::string_view line) {
    ++report.data_lines;
    auto fields = tsv::split_fields(line);
    if (fields.size() != 3 || fields[2].empty()) {
      ++report.malformed;
      report.rejected_lines.push_back(line_number);
      return;
    }
    std::string language(fields[0]);
    auto page_id = parse_page_id(fields[1]);
    if (!is_valid_language_code(language) || !page_id) {
      ++report.malformed;
      report.rejected_lines.push_back(line_number);
      return;
    }
    if (catalog.find_by_page(language, *page_id) == nullptr) {
      ++report.unknown_ref;
      report.rejected_lines.push_back(line_number);
      return;
    }
    map[{language, *page_id}].insert(std::string(fields[2]));
    ++report.accepted;
  });
  return map;
}

TripleStore parse_triples(const std::string& path, ParseReport& report) {
  std::vector<Triple> triples;
  report.source = path;
  tsv::for_each_data_line(path, [&](std::size_t line_number, std::string_view line) {
    ++report.data_lines;
    auto fields = tsv::split_fields(line);
    if (fields.size() != 3 || fields[0].empty() || fields[1].empty() ||
        fields[2].empty()) {
      ++report.malformed;
      report.rejected_lines.push_back(line_number);
      return;
    }
    Triple triple;
    triple.subject = std::string(fields[0]);
    triple.predicate = std::string(fields[1]);
    std::string_view object = fields[2];
    if (object.starts_with("kb:")) {
      triple.object = {true, std::string(object.substr(3))};
      if (triple.object.value.empty()) {
        ++report.malformed;
        report.rejected_lines.push_back(line_number);
        return;
      }
    } else {
      triple.object = {false, std::string(object)};
    }
    triples.push_back(std::move(triple));
    ++report.accepted;
  });
  return TripleStore(std::move(triples));
}

LabelSet parse_labels(const std::string& path, const EntityCatalog& catalog,
                      ParseReport& report) {
  LabelSet labels;
  report.source = path;
  tsv::for_each_data_line(path, [&](std::size_t line_number, std::string_view line) {
    ++report.data_lines;
    auto fields = tsv::split_fields(line);
    auto label = fields.size() == 2 ? tsv::parse_int(fields[1]) : std::nullopt;
    if (fields.size() != 2 || fields[0].empty() || !label) {
      ++report.malformed;
      report.rejected_lines.push_back(line_number);
      return;
    }
    if (*label < 1 || *label > 5) {
      ++report.out_of_range;
      report.rejected_lines.push_back(line_number);
      return;
    }
    std::string kb_id(fields[0]);
    if (!catalog.contains_kb_id(kb_id)) {
      ++report.unknown_ref;
      report.rejected_lines.push_back(line_number);
      return;
    }
    labels[kb_id] = static_cast<int>(*label);
    ++report.accepted;
  });
  return labels;
}

SocialScoreMap parse_external_scores(const std::string& path, ParseReport& report) {
  SocialScoreMap scores;
  report.source = path;
  tsv::for_each_data_line(path, [&](std::size_t line_number, std::string_view line) {
    ++report.data_lines;
    auto fields = tsv::split_fields(line);
    auto score = fields.size() == 2 ? tsv::parse_real(fields[1]) : std::nullopt;
    if (fields.size() != 2 || fields[0].empty() || !score) {
      ++report.malformed;
      report.rejected_lines.push_back(line_number);
      return;
    }
    if (*score < 0.0 || *score > 100.0) {
      ++report.out_of_range;
      report.rejected_lines.push_back(line_number);
      return;
    }
    scores[std::string(fields[0])] = *score;
    ++report.accepted;
  });
  return scores;
}

}  // namespace entityrank
