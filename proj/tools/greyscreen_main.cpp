// greyscreen: search, fetch and screen grey-literature PDFs against a
// review protocol with a locally hosted LLM, then score the screening
// against human raters.

#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "greyscreen/config.hpp"
#include "greyscreen/error.hpp"
#include "greyscreen/pipeline.hpp"
#include "greyscreen/util.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitIncomplete = 2;

struct CommonArgs {
  std::string config_path;
  std::string output_dir;

  // numeric overrides use sentinel "unset" values
  double timeout = -1.0;
  int parallelism = -1;
  long long max_len = -1;
  long long overlap = -1;
  int k = -1;
  double temperature = -1.0;
  long long seed = -1;
  int page_delay_ms = -1;
  std::string strategy;
  std::string prompt_template;
  std::string question;
  std::string inference_endpoint;
  std::string inference_model;
  std::string embedding_endpoint;
  std::string embedding_model;
  double confidence = -1.0;
  double margin = -1.0;
  double proportion = -1.0;
};

void add_common_flags(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--config", args.config_path, "Pipeline config file (JSON)")
      ->required();
  cmd->add_option("--output-dir", args.output_dir, "Run directory (overrides config)");
  cmd->add_option("--strategy", args.strategy, "Query strategy: or_merged | pairwise_and");
  cmd->add_option("--page-delay-ms", args.page_delay_ms, "Delay between search result pages");
  cmd->add_option("--fetch-timeout", args.timeout, "Per-document download timeout (seconds)");
  cmd->add_option("--fetch-parallelism", args.parallelism, "Concurrent downloads");
  cmd->add_option("--chunk-max-len", args.max_len, "Chunk character budget");
  cmd->add_option("--chunk-overlap", args.overlap, "Chunk overlap in sentences");
  cmd->add_option("--k", args.k, "Retrieved chunks per question");
  cmd->add_option("--temperature", args.temperature, "Inference temperature");
  cmd->add_option("--seed", args.seed, "Sampling seed");
  cmd->add_option("--prompt-template", args.prompt_template, "Prompt template file");
  cmd->add_option("--question", args.question, "Question file");
  cmd->add_option("--inference-endpoint", args.inference_endpoint, "Inference base URL");
  cmd->add_option("--inference-model", args.inference_model, "Inference model id");
  cmd->add_option("--embedding-endpoint", args.embedding_endpoint, "Embedding base URL");
  cmd->add_option("--embedding-model", args.embedding_model, "Embedding model id");
  cmd->add_option("--confidence", args.confidence, "Sampling confidence level");
  cmd->add_option("--margin", args.margin, "Sampling margin of error");
  cmd->add_option("--proportion", args.proportion, "Assumed population proportion");
}

greyscreen::PipelineConfig effective_config(const CommonArgs& args) {
  auto cfg = greyscreen::load_config(args.config_path);
  if (!args.output_dir.empty()) cfg.output_dir = args.output_dir;
  if (!args.strategy.empty()) cfg.strategy = greyscreen::strategy_from_string(args.strategy);
  if (args.page_delay_ms >= 0) cfg.search.page_delay_ms = args.page_delay_ms;
  if (args.timeout > 0) cfg.fetch_timeout_s = args.timeout;
  if (args.parallelism > 0) cfg.fetch_parallelism = args.parallelism;
  if (args.max_len > 0) cfg.chunk_max_len = static_cast<std::size_t>(args.max_len);
  if (args.overlap >= 0) cfg.chunk_overlap = static_cast<std::size_t>(args.overlap);
  if (args.k > 0) cfg.retrieval_k = args.k;
  if (args.temperature >= 0) cfg.inference.temperature = args.temperature;
  if (args.seed >= 0) cfg.seed = static_cast<std::uint64_t>(args.seed);
  if (!args.prompt_template.empty()) cfg.prompt_template_path = args.prompt_template;
  if (!args.question.empty()) cfg.question_path = args.question;
  if (!args.inference_endpoint.empty()) cfg.inference.endpoint = args.inference_endpoint;
  if (!args.inference_model.empty()) cfg.inference.model = args.inference_model;
  if (!args.embedding_endpoint.empty()) cfg.embedding.endpoint = args.embedding_endpoint;
  if (!args.embedding_model.empty()) cfg.embedding.model = args.embedding_model;
  if (args.confidence > 0) cfg.sample_confidence = args.confidence;
  if (args.margin > 0) cfg.sample_margin = args.margin;
  if (args.proportion > 0) cfg.sample_proportion = args.proportion;
  greyscreen::validate_config(cfg);
  return cfg;
}

int run_search(const CommonArgs& args) {
  auto cfg = effective_config(args);
  auto result = greyscreen::cmd_search(cfg);
  std::cout << "queries: " << result.queries << " (" << result.queries_completed
            << " completed)\n";
  std::cout << "links logged: " << result.raw_links << " (pdf: " << result.pdf_links << ")\n";
  std::cout << "exported rows: " << result.exported_rows << " -> "
            << (cfg.output_dir / "screening.csv").string() << "\n";
  for (const auto& err : result.errors) std::cerr << "warning: " << err << "\n";
  if (result.quota_exhausted) {
    std::cerr << "error: search quota exhausted; partial results preserved\n";
    return kExitIncomplete;
  }
  return result.complete() ? kExitOk : kExitIncomplete;
}

int run_screen(const CommonArgs& args, const std::string& csv) {
  auto cfg = effective_config(args);
  auto result = greyscreen::cmd_screen(cfg, csv.empty() ? std::filesystem::path()
                                                        : std::filesystem::path(csv));
  std::cout << "input rows: " << result.input_rows << "\n";
  std::cout << "processed: " << result.processed << "  skipped (already logged): "
            << result.skipped << "\n";
  std::cout << "keep: " << result.kept << "  discard: " << result.discarded
            << "  unavailable: " << result.unavailable << "\n";
  if (!result.complete) {
    std::cerr << "error: evaluation log does not cover every input row\n";
    return kExitIncomplete;
  }
  return kExitOk;
}

int run_agree(const CommonArgs& args, const std::string& votes, const std::string& llm_log) {
  auto cfg = effective_config(args);
  auto outcome = greyscreen::cmd_agree(
      cfg, llm_log.empty() ? std::filesystem::path() : std::filesystem::path(llm_log), votes);
  std::ifstream table(outcome.table_path);
  std::cout << table.rdbuf();
  std::cout << "metrics: " << outcome.metrics_path.string() << "\n";
  std::cout << "consensus: " << outcome.consensus_path.string() << "\n";
  return kExitOk;
}

int run_sample(const CommonArgs& args, const std::string& population, const std::string& out) {
  auto cfg = effective_config(args);
  auto outcome = greyscreen::cmd_sample(
      cfg, population, out.empty() ? std::filesystem::path() : std::filesystem::path(out));
  std::cout << "population: " << outcome.plan.population_n
            << "  required n: " << outcome.plan.required_n
            << "  z: " << greyscreen::format_double(outcome.plan.z) << "\n";
  std::cout << "sample written to " << outcome.out_path.string() << "\n";
  return kExitOk;
}

int run_report(const CommonArgs& args) {
  auto cfg = effective_config(args);
  std::cout << greyscreen::cmd_report(cfg);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"grey-literature screening pipeline"};
  app.require_subcommand(1);

  CommonArgs args;
  std::string csv_override, votes_csv, llm_log, population_csv, sample_out;

  auto* search = app.add_subcommand("search", "Harvest candidate PDF links");
  add_common_flags(search, args);

  auto* screen = app.add_subcommand("screen", "Fetch and screen each candidate");
  add_common_flags(screen, args);
  screen->add_option("--csv", csv_override, "Screening CSV (default: <run>/screening.csv)");

  auto* agree = app.add_subcommand("agree", "Score LLM vs human raters");
  add_common_flags(agree, args);
  agree->add_option("--votes", votes_csv, "Human votes CSV (item_id,rater_id,vote)")
      ->required();
  agree->add_option("--llm-log", llm_log, "Evaluation log (default: <run>/logs/evaluation.csv)");

  auto* sample = app.add_subcommand("sample", "Draw a representative sample");
  add_common_flags(sample, args);
  sample->add_option("--population", population_csv, "Population CSV (ids in first column)")
      ->required();
  sample->add_option("--out", sample_out, "Output CSV (default: <run>/reports/sample.csv)");

  auto* report = app.add_subcommand("report", "Summarize a run directory");
  add_common_flags(report, args);

  CLI11_PARSE(app, argc, argv);

  try {
    if (search->parsed()) return run_search(args);
    if (screen->parsed()) return run_screen(args, csv_override);
    if (agree->parsed()) return run_agree(args, votes_csv, llm_log);
    if (sample->parsed()) return run_sample(args, population_csv, sample_out);
    if (report->parsed()) return run_report(args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
