#pragma once

// Shared fixtures: random graphs, random triple stores, catalogs over
// synthetic pages, and scratch directories for pipeline runs.

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "entityrank/catalog.hpp"
#include "entityrank/ingest.hpp"
#include "entityrank/triple_store.hpp"

namespace testutil {

// Catalog with n pages of one language, page ids 0..n-1, kb ids E0..E{n-1}.
entityrank::EntityCatalog synthetic_catalog(std::size_t n,
                                            const std::string& language = "en");

// Random edge list over nodes 0..n-1 (page ids equal node ids); may contain
// duplicate edges, never self-loops.
std::vector<entityrank::LinkEdge> random_edges(std::mt19937& gen, std::size_t n,
                                               std::size_t max_edges);

// Random triple store over entities E0..E{n-1} with a mix of entity and
// literal objects plus type triples over a small type vocabulary.
entityrank::TripleStore random_triples(std::mt19937& gen, std::size_t n,
                                       std::size_t triple_count,
                                       const std::string& type_predicate = "type");

// Creates (or wipes and recreates) a scratch directory under the current
// working directory and returns its path.
std::filesystem::path scratch_dir(const std::string& name);

// Writes a file with the given content, creating parent directories.
void write_file(const std::filesystem::path& path, const std::string& content);

// Reads a whole file; throws on failure.
std::string read_file(const std::filesystem::path& path);

}  // namespace testutil
