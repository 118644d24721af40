// Command-line front end for the entity ranking pipeline. Six staged
// subcommands share one configuration surface; every stage reads the staged
// files of its predecessors from the output directory and writes its own.
//
// Exit codes: 0 success, 1 internal error, 2 bad input or missing
// prerequisite.

#include <cstdio>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "entityrank/pipeline.hpp"

namespace {

using entityrank::InputError;
using entityrank::pipeline::PipelineConfig;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitBadInput = 2;

void add_config_options(CLI::App& app, PipelineConfig& config) {
  app.option_defaults()->always_capture_default();

  app.add_option("--pages", config.pages_path, "Pages input file");
  app.add_option("--links", config.links_path, "Links input file");
  app.add_option("--categories", config.categories_path, "Categories input file");
  app.add_option("--triples", config.triples_path, "Triples input file");
  app.add_option("--labels", config.labels_path, "Labels input file");
  app.add_option("--social-scores", config.social_scores_path,
                 "Social scores input file");
  app.add_option("--out-dir", config.output_dir, "Directory for staged outputs");

  app.add_option("--damping", config.damping, "PageRank damping factor");
  app.add_option("--tol", config.pagerank_tol, "PageRank L1 convergence tolerance");
  app.add_option("--max-iters", config.pagerank_max_iters, "PageRank iteration cap");
  app.add_option("--seed", config.split_seed, "Seed for the train/test split");
  app.add_option("--train-fraction", config.train_fraction,
                 "Fraction of labels used for training");
  app.add_option("--threshold", config.positive_threshold,
                 "Label value at or above which an entity counts as important");
  app.add_option("--top-n", config.top_n,
                 "Ranked list truncation; 0 keeps the full list");
  app.add_option("--type-predicate", config.type_predicate,
                 "Predicate carrying entity types in the triples file");
  app.add_option("--social-predicate", config.social_predicate,
                 "Predicate carrying social profile literals");
  app.add_flag("--count-distinct", config.count_distinct,
               "Count distinct entities instead of triple occurrences");
}

void print_reports(const std::vector<entityrank::ParseReport>& reports) {
  for (const auto& report : reports) {
    std::printf("%s: %zu lines, %zu accepted, %zu rejected\n", report.source.c_str(),
                report.data_lines, report.accepted, report.rejected());
  }
}

void print_eval_rows(const std::vector<entityrank::EvalRow>& rows) {
  std::printf("%-20s %9s %9s %9s %9s %9s\n", "variant", "precision", "recall", "f1",
              "coverage", "rmse");
  for (const auto& row : rows) {
    std::printf("%-20s %9.3f %9.3f %9.3f %9.3f %9.3f\n", row.variant.c_str(),
                row.metrics.precision, row.metrics.recall, row.metrics.f1,
                row.coverage, row.metrics.rmse);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Knowledge-base entity importance ranking pipeline"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "Configuration file (key=value lines)");

  PipelineConfig config;
  add_config_options(app, config);

  CLI::App* ingest = app.add_subcommand("ingest", "Parse and validate the input files");
  CLI::App* features =
      app.add_subcommand("features", "Compute link-graph and triple features");
  CLI::App* train = app.add_subcommand("train", "Fit the scoring model on the labels");
  CLI::App* eval =
      app.add_subcommand("eval", "Re-evaluate stored models on the stored split");
  CLI::App* rank = app.add_subcommand("rank", "Write per-language ranked lists");
  CLI::App* report = app.add_subcommand("report", "Write entity-type distributions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    using namespace entityrank::pipeline;
    if (ingest->parsed()) {
      IngestResult result = cmd_ingest(config);
      print_reports(result.reports);
      std::printf("stores written to %s\n", config.output_dir.c_str());
    } else if (features->parsed()) {
      FeaturesResult result = cmd_features(config);
      std::printf("feature matrix written for %zu language(s)\n",
                  result.languages.size());
      for (const std::string& name : result.degenerate_features) {
        std::fprintf(stderr, "warning: feature %s normalizes to zero everywhere\n",
                     name.c_str());
      }
    } else if (train->parsed()) {
      TrainResult result = cmd_train(config);
      std::printf("trained on %zu labels, evaluated on %zu\n", result.train_size,
                  result.test_size);
      print_eval_rows(result.report);
    } else if (eval->parsed()) {
      EvalResult result = cmd_eval(config);
      print_eval_rows(result.report);
    } else if (rank->parsed()) {
      RankResult result = cmd_rank(config);
      for (std::size_t i = 0; i < result.languages.size(); ++i) {
        std::printf("ranked %zu entities for %s\n", result.list_sizes[i],
                    result.languages[i].c_str());
      }
    } else if (report->parsed()) {
      ReportResult result = cmd_report(config);
      std::printf("type reports written for %zu language(s)\n",
                  result.languages.size());
    }
  } catch (const InputError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return kExitInternal;
  }
  return kExitOk;
}
