#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "greyscreen/agreement.hpp"
#include "greyscreen/config.hpp"
#include "greyscreen/verdict.hpp"

namespace greyscreen {

/// Fixed run-directory layout.
struct RunPaths {
  std::filesystem::path root;
  std::filesystem::path logs;
  std::filesystem::path cache;
  std::filesystem::path vault;
  std::filesystem::path pdf;
  std::filesystem::path reports;
  std::filesystem::path manifest_file;   // <root>/manifest
  std::filesystem::path screening_csv;   // <root>/screening.csv
  std::filesystem::path fetch_log;       // logs/fetch.csv
  std::filesystem::path eval_log;        // logs/evaluation.csv
  std::filesystem::path cache_index;     // cache/index.csv (source id -> sha256)

  static RunPaths under(const std::filesystem::path& root);
  void ensure_dirs() const;
};

struct StageStatus {
  bool complete = false;
  long long rows_in = 0;
  long long rows_out = 0;
};

/// Binds a run directory to one configuration; a hash mismatch refuses to
/// mix outputs from different configs in one directory.
struct Manifest {
  std::string run_id;
  std::string config_hash;
  std::map<std::string, StageStatus> stages;
};

Manifest load_or_init_manifest(const RunPaths& paths, const std::string& cfg_hash);
void save_manifest(const Manifest& manifest, const RunPaths& paths);

/// One evaluation-log row; the complete screening record for a source.
struct EvalRow {
  std::string id;
  std::string url;
  Choice choice = Choice::ParseFailed;
  std::optional<int> confidence;
  std::string prompt_version;
  std::string question_version;
  std::string model_id;
  double temperature = 0.0;
  std::string explanation;
  std::string timestamp;
};

std::vector<EvalRow> read_eval_log(const std::filesystem::path& file);

struct SearchStageResult {
  int queries = 0;
  int queries_completed = 0;
  long long raw_links = 0;
  long long pdf_links = 0;
  long long exported_rows = 0;
  bool quota_exhausted = false;
  std::vector<std::string> errors;

  bool complete() const { return queries_completed == queries && !quota_exhausted; }
};

/// Builds all queries, pages each one through the API, writes per-query
/// TXT/CSV logs and the deduplicated screening CSV (first-seen URL wins).
SearchStageResult cmd_search(const PipelineConfig& cfg);

struct ScreenStageResult {
  long long input_rows = 0;
  long long processed = 0;  // handled by this invocation
  long long skipped = 0;    // already present in the evaluation log
  long long kept = 0;
  long long discarded = 0;
  long long unavailable = 0;
  bool complete = false;
};

/// fetch -> extract -> block-check -> chunk -> embed -> retrieve ->
/// classify -> parse -> disposition -> log, per CSV row, resumably: rows
/// already in the evaluation log are skipped. Per-document failures are
/// logged NOT AVAILABLE and never abort the batch.
ScreenStageResult cmd_screen(const PipelineConfig& cfg,
                             const std::filesystem::path& csv_override = {});

struct AgreeOutcome {
  AgreementReport report;
  std::filesystem::path table_path;
  std::filesystem::path metrics_path;
  std::filesystem::path consensus_path;
};

/// Aggregates three-rater human votes, then scores the LLM against the
/// consensus: per-category PPA (reference = human consensus), Cohen's
/// kappa (LLM vs consensus) and Fleiss' kappa (humans only). Items that
/// are NOT AVAILABLE on either side are excluded and counted separately.
AgreeOutcome cmd_agree(const PipelineConfig& cfg, const std::filesystem::path& llm_log,
                       const std::filesystem::path& votes_csv);

struct SampleOutcome {
  SamplePlan plan;
  std::vector<std::string> ids;
  std::filesystem::path out_path;
};

/// Plans and draws the representative sample over a population CSV's ids;
/// plan parameters are emitted as header comments.
SampleOutcome cmd_sample(const PipelineConfig& cfg, const std::filesystem::path& population_csv,
                         const std::filesystem::path& out_csv = {});

/// Summary tables over the run directory (verdict counts, disposition
/// partition, availability breakdown); also written to reports/summary.txt.
std::string cmd_report(const PipelineConfig& cfg);

}  // namespace greyscreen
