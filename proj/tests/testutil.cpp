#include "testutil.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace testutil {

entityrank::EntityCatalog synthetic_catalog(std::size_t n, const std::string& language) {
  entityrank::EntityCatalog catalog;
  for (std::size_t i = 0; i < n; ++i) {
    entityrank::EntityRecord record;
    record.kb_id = "E" + std::to_string(i);
    record.language = language;
    record.page_id = static_cast<entityrank::PageId>(i);
    record.title = "Entity " + std::to_string(i);
    catalog.add(std::move(record));
  }
  return catalog;
}

std::vector<entityrank::LinkEdge> random_edges(std::mt19937& gen, std::size_t n,
                                               std::size_t max_edges) {
  std::vector<entityrank::LinkEdge> edges;
  if (n < 2) return edges;
  std::uniform_int_distribution<std::size_t> node(0, n - 1);
  std::uniform_int_distribution<std::size_t> count(0, max_edges);
  std::size_t edge_count = count(gen);
  for (std::size_t i = 0; i < edge_count; ++i) {
    std::size_t src = node(gen);
    std::size_t dst = node(gen);
    if (src == dst) continue;
    edges.push_back({static_cast<entityrank::PageId>(src),
                     static_cast<entityrank::PageId>(dst)});
  }
  return edges;
}

entityrank::TripleStore random_triples(std::mt19937& gen, std::size_t n,
                                       std::size_t triple_count,
                                       const std::string& type_predicate) {
  std::uniform_int_distribution<std::size_t> entity(0, n - 1);
  std::uniform_int_distribution<int> coin(0, 99);
  std::uniform_int_distribution<int> type_id(0, 5);
  std::uniform_int_distribution<int> predicate_id(0, 3);
  const std::vector<std::string> predicates = {"related_to", "located_in", "knows",
                                               "member_of"};

  std::vector<entityrank::Triple> triples;
  triples.reserve(triple_count);
  for (std::size_t i = 0; i < triple_count; ++i) {
    std::string subject = "E" + std::to_string(entity(gen));
    int kind = coin(gen);
    if (kind < 25) {
      triples.push_back({subject, type_predicate,
                         {true, "T" + std::to_string(type_id(gen))}});
    } else if (kind < 40) {
      triples.push_back({subject, "note", {false, "literal " + std::to_string(i)}});
    } else {
      triples.push_back({subject, predicates[predicate_id(gen)],
                         {true, "E" + std::to_string(entity(gen))}});
    }
  }
  return entityrank::TripleStore(std::move(triples));
}

std::filesystem::path scratch_dir(const std::string& name) {
  std::filesystem::path dir = std::filesystem::current_path() / ("scratch_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace testutil
