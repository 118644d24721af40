#include <doctest.h>

#include <filesystem>

#include "entityrank/ingest.hpp"
#include "entityrank/store_io.hpp"
#include "testutil.hpp"

using namespace entityrank;

namespace {

std::filesystem::path dir() {
  static std::filesystem::path d = testutil::scratch_dir("ingest");
  return d;
}

EntityCatalog small_catalog() {
  // en pages 17 and 42, es page 44; Q1 exists in two languages.
  ParseReport report;
  auto path = dir() / "catalog_fixture.tsv";
  testutil::write_file(path,
                       "Q1\ten\t17\tApple Inc.\tORGANIZATION\n"
                       "Q1\tes\t44\tApple\tORGANIZATION\n"
                       "Q2\ten\t42\tBanana\t\n");
  return parse_pages(path.string(), report);
}

}  // namespace

TEST_CASE("parse_pages maps fields and defaults the type") {
  auto path = dir() / "pages_basic.tsv";
  testutil::write_file(path,
                       "# comment line\n"
                       "\n"
                       "Q1\ten\t17\tApple Inc.\tORGANIZATION\n"
                       "Q2\ten\t42\tBanana\n");
  ParseReport report;
  EntityCatalog catalog = parse_pages(path.string(), report);

  CHECK(report.data_lines == 2);
  CHECK(report.accepted == 2);
  CHECK(report.rejected() == 0);
  const EntityRecord* q1 = catalog.find("Q1", "en");
  REQUIRE(q1 != nullptr);
  CHECK(q1->page_id == 17);
  CHECK(q1->title == "Apple Inc.");
  CHECK(q1->entity_type == EntityType::Organization);
  // missing type column defaults to MISC
  CHECK(catalog.find("Q2", "en")->entity_type == EntityType::Misc);
}

TEST_CASE("parse_pages on an empty file yields an empty catalog") {
  auto path = dir() / "pages_empty.tsv";
  testutil::write_file(path, "");
  ParseReport report;
  EntityCatalog catalog = parse_pages(path.string(), report);
  CHECK(catalog.empty());
  CHECK(report.data_lines == 0);
  CHECK(report.rejected() == 0);
}

TEST_CASE("one kb_id under two languages is a single cross-indexed entity") {
  EntityCatalog catalog = small_catalog();
  CHECK(catalog.find("Q1", "en") != nullptr);
  CHECK(catalog.find("Q1", "es") != nullptr);
  CHECK(catalog.find_by_page("en", 17)->kb_id == "Q1");
  CHECK(catalog.find_by_page("es", 44)->kb_id == "Q1");
  CHECK(catalog.distinct_entity_count() == 2);
  CHECK(catalog.records_of("Q1").size() == 2);
}

TEST_CASE("parse_pages rejects malformed rows but keeps the rest") {
  auto path = dir() / "pages_malformed.tsv";
  testutil::write_file(path,
                       "Q1\ten\t17\tApple\n"
                       "Q2\tEN\t18\tBad language\n"   // upper case language
                       "Q3\ten\t-4\tNegative page\n"  // negative page id
                       "Q4\ten\t19\tBad type\tFRUIT\n"
                       "\ten\t20\tEmpty kb id\n"
                       "Q5\ten\n");
  ParseReport report;
  EntityCatalog catalog = parse_pages(path.string(), report);
  CHECK(catalog.size() == 1);
  CHECK(report.data_lines == 6);
  CHECK(report.accepted == 1);
  CHECK(report.malformed == 5);
  CHECK(report.rejected_lines.size() == 5);
  CHECK(report.accepted + report.rejected() == report.data_lines);
}

TEST_CASE("the catalog rejects records violating its invariants") {
  EntityCatalog catalog;
  CHECK_THROWS_AS(catalog.add({"", "en", 1, "No id", EntityType::Misc}), InputError);
  CHECK_THROWS_AS(catalog.add({"Q1", "English", 1, "Bad code", EntityType::Misc}),
                  InputError);
  catalog.add({"Q1", "zh_yue", 1, "Regional code", EntityType::Misc});
  CHECK(catalog.size() == 1);
}

TEST_CASE("duplicate catalog keys are fatal") {
  ParseReport report;
  auto dup_kb = dir() / "pages_dup_kb.tsv";
  testutil::write_file(dup_kb,
                       "Q1\ten\t17\tApple\n"
                       "Q1\ten\t18\tApple again\n");
  CHECK_THROWS_AS(parse_pages(dup_kb.string(), report), InputError);

  auto dup_page = dir() / "pages_dup_page.tsv";
  testutil::write_file(dup_page,
                       "Q1\ten\t17\tApple\n"
                       "Q2\ten\t17\tSame page\n");
  CHECK_THROWS_AS(parse_pages(dup_page.string(), report), InputError);
}

TEST_CASE("parse_links keeps valid edges, drops self-loops and dangling ends") {
  EntityCatalog catalog = small_catalog();
  auto path = dir() / "links.tsv";
  testutil::write_file(path,
                       "en\t17\t42\n"
                       "en\t17\t17\n"
                       "en\t17\t999\n"
                       "en\tnot_a_number\t42\n");
  ParseReport report;
  LinkEdgeList links = parse_links(path.string(), catalog, report);

  REQUIRE(links.by_language.count("en") == 1);
  CHECK(links.by_language.at("en") == std::vector<LinkEdge>{{17, 42}});
  CHECK(report.accepted == 1);
  CHECK(report.self_loops == 1);
  CHECK(report.unknown_ref == 1);
  CHECK(report.malformed == 1);
  CHECK(report.accepted + report.rejected() == report.data_lines);
}

TEST_CASE("parse_categories deduplicates and validates pages") {
  EntityCatalog catalog = small_catalog();
  auto path = dir() / "categories.tsv";
  testutil::write_file(path,
                       "en\t17\tFruit\n"
                       "en\t17\tFruit\n"
                       "en\t17\tPlants\n"
                       "en\t999\tOrphan\n");
  ParseReport report;
  CategoryMap map = parse_categories(path.string(), catalog, report);

  CHECK(map.at({"en", 17}).size() == 2);
  CHECK(map.at({"en", 17}).count("Fruit") == 1);
  CHECK(report.accepted == 3);  // duplicate lines are accepted, then deduplicated
  CHECK(report.unknown_ref == 1);
}

TEST_CASE("parse_triples distinguishes entity references from literals") {
  auto path = dir() / "triples.tsv";
  testutil::write_file(path,
                       "Q1\tfounded_by\tkb:Q2\n"
                       "Q1\tsocial_profile\ttwitter:apple\n"
                       "Q2\ttype\tkb:T_person\n"
                       "Q2\tbroken\n");
  ParseReport report;
  TripleStore store = parse_triples(path.string(), report);

  REQUIRE(store.size() == 3);
  CHECK(store.triples()[0].object.is_entity);
  CHECK(store.triples()[0].object.value == "Q2");
  CHECK_FALSE(store.triples()[1].object.is_entity);
  CHECK(store.triples()[1].object.value == "twitter:apple");
  CHECK(store.triples()[2].predicate == "type");
  CHECK(report.malformed == 1);
  CHECK(store.with_subject("Q1").size() == 2);
  CHECK(store.with_entity_object("Q2").size() == 1);
}

TEST_CASE("parse_labels enforces the 1..5 range and catalog membership") {
  EntityCatalog catalog = small_catalog();
  auto path = dir() / "labels.tsv";
  testutil::write_file(path,
                       "Q1\t5\n"
                       "Q1\t6\n"
                       "Q9\t3\n");
  ParseReport report;
  LabelSet labels = parse_labels(path.string(), catalog, report);

  CHECK(labels == LabelSet{{"Q1", 5}});
  CHECK(report.accepted == 1);
  CHECK(report.out_of_range == 1);
  CHECK(report.unknown_ref == 1);
}

TEST_CASE("parse_external_scores enforces the 0..100 range") {
  auto path = dir() / "scores.tsv";
  testutil::write_file(path,
                       "twitter:apple\t90\n"
                       "twitter:x\t101\n");
  ParseReport report;
  SocialScoreMap scores = parse_external_scores(path.string(), report);
  CHECK(scores == SocialScoreMap{{"twitter:apple", 90.0}});
  CHECK(report.out_of_range == 1);

  auto empty = dir() / "scores_empty.tsv";
  testutil::write_file(empty, "");
  ParseReport empty_report;
  CHECK(parse_external_scores(empty.string(), empty_report).empty());
}

TEST_CASE("missing input files raise InputError") {
  ParseReport report;
  CHECK_THROWS_AS(parse_pages((dir() / "no_such_file.tsv").string(), report),
                  InputError);
}

TEST_CASE("catalog store round-trips and serialization is deterministic") {
  EntityCatalog catalog = small_catalog();
  store::StageHeader header{"ingest", 1, 0x1234};

  auto first = dir() / "catalog_rt1.tsv";
  auto second = dir() / "catalog_rt2.tsv";
  store::write_catalog(first.string(), header, catalog);
  EntityCatalog reloaded = store::read_catalog(first.string());
  CHECK(reloaded == catalog);

  store::write_catalog(second.string(), header, reloaded);
  CHECK(testutil::read_file(first) == testutil::read_file(second));
}

TEST_CASE("all stores reload to equal contents") {
  EntityCatalog catalog = small_catalog();
  store::StageHeader header{"ingest", 1, 0};

  auto links_path = dir() / "links_rt.tsv";
  LinkEdgeList links;
  links.by_language["en"] = {{42, 17}, {17, 42}};
  store::write_links(links_path.string(), header, links);
  LinkEdgeList links2 = store::read_links(links_path.string(), catalog);
  CHECK(links2.by_language.at("en") == std::vector<LinkEdge>{{17, 42}, {42, 17}});

  auto cats_path = dir() / "cats_rt.tsv";
  CategoryMap cats;
  cats[{"en", 17}] = {"Fruit", "Plants"};
  store::write_categories(cats_path.string(), header, cats);
  CHECK(store::read_categories(cats_path.string(), catalog) == cats);

  auto triples_path = dir() / "triples_rt.tsv";
  TripleStore store_in(std::vector<Triple>{
      {"Q1", "founded_by", {true, "Q2"}},
      {"Q1", "social_profile", {false, "twitter:apple"}},
  });
  store::write_triples(triples_path.string(), header, store_in);
  TripleStore store_out = store::read_triples(triples_path.string());
  REQUIRE(store_out.size() == 2);
  CHECK(store_out.triples()[0] == store_in.triples()[0]);

  auto labels_path = dir() / "labels_rt.tsv";
  LabelSet labels{{"Q1", 4}, {"Q2", 1}};
  store::write_labels(labels_path.string(), header, labels);
  CHECK(store::read_labels(labels_path.string(), catalog) == labels);

  auto scores_path = dir() / "scores_rt.tsv";
  SocialScoreMap scores{{"twitter:apple", 90.25}};
  store::write_social_scores(scores_path.string(), header, scores);
  CHECK(store::read_social_scores(scores_path.string()) == scores);
}

TEST_CASE("stage files are self-describing") {
  EntityCatalog catalog = small_catalog();
  auto path = dir() / "catalog_header.tsv";
  store::write_catalog(path.string(), {"ingest", 1, 0xabcdef}, catalog);
  std::string content = testutil::read_file(path);
  CHECK(content.starts_with("# entityrank stage=ingest stage_version=1 config_hash="));
  CHECK(content.find("0000000000abcdef") != std::string::npos);
}
