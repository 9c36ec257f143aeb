#include "greyscreen/pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "greyscreen/csv.hpp"
#include "greyscreen/embedding.hpp"
#include "greyscreen/error.hpp"
#include "greyscreen/fetch.hpp"
#include "greyscreen/inference.hpp"
#include "greyscreen/prompt.hpp"
#include "greyscreen/textprep.hpp"
#include "greyscreen/util.hpp"

namespace greyscreen {

RunPaths RunPaths::under(const std::filesystem::path& root) {
  RunPaths p;
  p.root = root;
  p.logs = root / "logs";
  p.cache = root / "cache";
  p.vault = root / "vault";
  p.pdf = root / "PDF";
  p.reports = root / "reports";
  p.manifest_file = root / "manifest";
  p.screening_csv = root / "screening.csv";
  p.fetch_log = p.logs / "fetch.csv";
  p.eval_log = p.logs / "evaluation.csv";
  p.cache_index = p.cache / "index.csv";
  return p;
}

void RunPaths::ensure_dirs() const {
  for (const auto& dir : {root, logs, cache, vault, pdf, reports}) {
    std::filesystem::create_directories(dir);
  }
}

Manifest load_or_init_manifest(const RunPaths& paths, const std::string& cfg_hash) {
  Manifest m;
  if (!std::filesystem::exists(paths.manifest_file)) {
    m.run_id = cfg_hash.substr(0, 12);
    m.config_hash = cfg_hash;
    return m;
  }
  std::ifstream in(paths.manifest_file);
  nlohmann::json j;
  try {
    in >> j;
    m.run_id = j.at("run_id").get<std::string>();
    m.config_hash = j.at("config_hash").get<std::string>();
    for (const auto& [name, st] : j.value("stages", nlohmann::json::object()).items()) {
      StageStatus status;
      status.complete = st.value("complete", false);
      status.rows_in = st.value("rows_in", 0LL);
      status.rows_out = st.value("rows_out", 0LL);
      m.stages[name] = status;
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("manifest " + paths.manifest_file.string() + " is unreadable: " + e.what());
  }
  if (m.config_hash != cfg_hash) {
    throw ConfigError("run directory " + paths.root.string() +
                      " belongs to a different configuration (manifest hash " +
                      m.config_hash.substr(0, 12) + ", current " + cfg_hash.substr(0, 12) +
                      "); use a fresh directory");
  }
  return m;
}

void save_manifest(const Manifest& manifest, const RunPaths& paths) {
  nlohmann::json j;
  j["run_id"] = manifest.run_id;
  j["config_hash"] = manifest.config_hash;
  for (const auto& [name, st] : manifest.stages) {
    j["stages"][name] = {{"complete", st.complete},
                         {"rows_in", st.rows_in},
                         {"rows_out", st.rows_out}};
  }
  std::ofstream out(paths.manifest_file, std::ios::trunc);
  if (!out) throw ConfigError("cannot write manifest: " + paths.manifest_file.string());
  out << j.dump(2) << '\n';
}

// ---------------------------------------------------------------------
// search stage
// ---------------------------------------------------------------------

SearchStageResult cmd_search(const PipelineConfig& cfg) {
  validate_for_search(cfg);  // fail before any file is created
  auto queries = build_queries(cfg.terms, cfg.strategy);
  const std::string hash = config_hash(cfg);

  RunPaths paths = RunPaths::under(cfg.output_dir);
  paths.ensure_dirs();
  Manifest manifest = load_or_init_manifest(paths, hash);

  SearchStageResult result;
  result.queries = static_cast<int>(queries.size());

  std::vector<SearchHit> all_hits;
  for (const auto& query : queries) {
    QueryLog log(paths.logs, query.id, hash);
    QuerySearchResult qr = run_search(query, cfg.search, log);
    result.raw_links += static_cast<long long>(qr.items.size());
    result.pdf_links += static_cast<long long>(qr.hits.size());
    for (const auto& err : qr.page_errors) {
      result.errors.push_back(query.id + " @ start=" + std::to_string(err.start_index) + ": " +
                              err.message);
    }
    all_hits.insert(all_hits.end(), qr.hits.begin(), qr.hits.end());
    ++result.queries_completed;
    if (qr.quota_exhausted) {
      result.quota_exhausted = true;
      break;  // batch-level: preserve partial results, stop issuing queries
    }
  }

  // Export deduplicated screening CSV; first-seen URL wins.
  std::ofstream out(paths.screening_csv, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot write " + paths.screening_csv.string());
  out << "# config=" << hash << '\n';
  out << "id,url\n";
  std::set<std::string> seen;
  for (const auto& hit : all_hits) {
    if (!seen.insert(hit.url).second) continue;
    csv::write_row(out, {hit.id(), hit.url});
    ++result.exported_rows;
  }
  out.close();

  StageStatus status;
  status.rows_in = result.queries;
  status.rows_out = result.queries_completed;
  status.complete = result.complete();
  manifest.stages["search"] = status;
  save_manifest(manifest, paths);
  return result;
}

// ---------------------------------------------------------------------
// evaluation / fetch log plumbing
// ---------------------------------------------------------------------

namespace {

const char* kEvalHeader = "id,url,choice,confidence,prompt_version,question_version,"
                          "model_id,temperature,explanation,timestamp";

std::string format_temperature(double t) {
  std::string s = format_double(t);
  return s;
}

void append_eval_row(std::ofstream& out, const EvalRow& row) {
  csv::write_row(out, {row.id, row.url, to_string(row.choice),
                       row.confidence ? std::to_string(*row.confidence) : std::string(),
                       row.prompt_version, row.question_version, row.model_id,
                       format_temperature(row.temperature), row.explanation, row.timestamp});
  out.flush();
}

struct FetchLogEntry {
  FetchStatus status = FetchStatus::NotAvailable;
  std::string reason;
  std::string content_type;
  std::uint64_t bytes = 0;
  std::string sha256;
  std::string url;
};

std::map<std::string, FetchLogEntry> read_fetch_log(const std::filesystem::path& file) {
  std::map<std::string, FetchLogEntry> entries;
  if (!std::filesystem::exists(file)) return entries;
  for (const auto& row : csv::read_file(file)) {
    if (row.size() < 7 || row[0] == "id") continue;
    FetchLogEntry e;
    e.url = row[1];
    e.status = (row[2] == "DOWNLOADED") ? FetchStatus::Downloaded : FetchStatus::NotAvailable;
    e.reason = row[3];
    e.content_type = row[4];
    e.bytes = std::strtoull(row[5].c_str(), nullptr, 10);
    e.sha256 = row[6];
    entries[row[0]] = std::move(e);
  }
  return entries;
}

void append_fetch_row(std::ofstream& out, const FetchOutcome& o) {
  csv::write_row(out, {o.source_id, o.url,
                       o.status == FetchStatus::Downloaded ? "DOWNLOADED" : "NOT AVAILABLE",
                       to_string(o.reason), o.content_type, std::to_string(o.bytes), o.sha256});
  out.flush();
}

std::ofstream open_log(const std::filesystem::path& file, const std::string& hash,
                       const char* header) {
  bool fresh = !std::filesystem::exists(file) || std::filesystem::file_size(file) == 0;
  std::ofstream out(file, std::ios::binary | std::ios::app);
  if (!out) throw ConfigError("cannot open log " + file.string());
  if (fresh) {
    out << "# config=" << hash << '\n' << header << '\n';
    out.flush();
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> read_id_url_csv(
    const std::filesystem::path& file) {
  std::vector<std::pair<std::string, std::string>> rows;
  for (const auto& row : csv::read_file(file)) {
    if (row.empty() || row[0] == "id") continue;
    if (row.size() < 2) {
      throw ConfigError("screening CSV row for '" + row[0] + "' lacks a URL");
    }
    rows.emplace_back(row[0], row[1]);
  }
  return rows;
}

}  // namespace

std::vector<EvalRow> read_eval_log(const std::filesystem::path& file) {
  std::vector<EvalRow> rows;
  if (!std::filesystem::exists(file)) return rows;
  for (const auto& row : csv::read_file(file)) {
    if (row.size() < 10 || row[0] == "id") continue;
    EvalRow e;
    e.id = row[0];
    e.url = row[1];
    e.choice = choice_from_string(row[2]);
    if (!row[3].empty()) e.confidence = std::stoi(row[3]);
    e.prompt_version = row[4];
    e.question_version = row[5];
    e.model_id = row[6];
    e.temperature = row[7].empty() ? 0.0 : std::stod(row[7]);
    e.explanation = row[8];
    e.timestamp = row[9];
    rows.push_back(std::move(e));
  }
  return rows;
}

// ---------------------------------------------------------------------
// screen stage
// ---------------------------------------------------------------------

ScreenStageResult cmd_screen(const PipelineConfig& cfg,
                             const std::filesystem::path& csv_override) {
  validate_for_screen(cfg);
  const PromptTemplate tmpl = load_prompt_template(cfg.prompt_template_path);
  const ScreeningQuestion question = load_question(cfg.question_path);
  const std::string system_prompt = render_prompt(tmpl);
  const std::string hash = config_hash(cfg);

  RunPaths paths = RunPaths::under(cfg.output_dir);
  paths.ensure_dirs();
  Manifest manifest = load_or_init_manifest(paths, hash);

  const std::filesystem::path input_csv =
      csv_override.empty() ? paths.screening_csv : csv_override;
  if (!std::filesystem::exists(input_csv)) {
    throw ConfigError("screening CSV not found: " + input_csv.string());
  }
  auto input_rows = read_id_url_csv(input_csv);

  ScreenStageResult result;
  result.input_rows = static_cast<long long>(input_rows.size());

  std::set<std::string> done;
  for (const auto& row : read_eval_log(paths.eval_log)) done.insert(row.id);

  auto fetch_entries = read_fetch_log(paths.fetch_log);
  std::ofstream fetch_out = open_log(paths.fetch_log, hash,
                                     "id,url,status,reason,content_type,bytes,sha256");
  std::ofstream index_out = open_log(paths.cache_index, hash, "id,sha256");
  std::ofstream eval_out = open_log(paths.eval_log, hash, kEvalHeader);

  FetchOptions fetch_options;
  fetch_options.timeout_s = cfg.fetch_timeout_s;
  fetch_options.cache_dir = paths.cache;

  // Phase 1: bounded-parallel fetch of everything still needed.
  std::vector<CandidateSource> to_fetch;
  for (const auto& [id, url] : input_rows) {
    if (done.count(id)) continue;
    auto it = fetch_entries.find(id);
    if (it != fetch_entries.end()) {
      bool cached = it->second.status == FetchStatus::Downloaded &&
                    std::filesystem::exists(paths.cache / (it->second.sha256 + ".pdf"));
      if (cached || it->second.status == FetchStatus::NotAvailable) continue;
      fetch_entries.erase(it);  // stale entry: cached file vanished
    }
    to_fetch.push_back({id, url});
  }
  if (!to_fetch.empty()) {
    fetch_batch(to_fetch, fetch_options, cfg.fetch_parallelism, [&](const FetchOutcome& o) {
      append_fetch_row(fetch_out, o);
      if (o.status == FetchStatus::Downloaded) {
        csv::write_row(index_out, {o.source_id, o.sha256});
        index_out.flush();
      }
      FetchLogEntry e;
      e.url = o.url;
      e.status = o.status;
      e.reason = to_string(o.reason);
      e.content_type = o.content_type;
      e.bytes = o.bytes;
      e.sha256 = o.sha256;
      fetch_entries[o.source_id] = std::move(e);
    });
  }

  // Phase 2: sequential screening with per-document state reset.
  for (const auto& [id, url] : input_rows) {
    if (done.count(id)) {
      ++result.skipped;
      continue;
    }
    done.insert(id);
    ++result.processed;

    EvalRow row;
    row.id = id;
    row.url = url;
    row.prompt_version = tmpl.version_id;
    row.question_version = question.version_id;
    row.model_id = cfg.inference.model;
    row.temperature = cfg.inference.temperature;
    row.timestamp = iso8601_utc_now();

    auto log_na = [&](const std::string& why) {
      row.choice = Choice::NotAvailable;
      row.explanation = why;
      append_eval_row(eval_out, row);
    };

    auto entry = fetch_entries.find(id);
    if (entry == fetch_entries.end()) {
      log_na("http_error(missing fetch outcome)");
      continue;
    }
    if (entry->second.status == FetchStatus::NotAvailable) {
      log_na(entry->second.reason);
      continue;
    }
    const std::filesystem::path pdf_file = paths.cache / (entry->second.sha256 + ".pdf");

    DocumentText doc;
    try {
      doc = extract_text(id, pdf_file);
    } catch (const ExtractError& e) {
      log_na(std::string("extraction_error: ") + e.what());
      continue;
    }
    if (detect_block_page(doc.raw_text, cfg.block_page_markers)) {
      log_na("block_page_suspected");
      continue;
    }

    ChunkSet chunks = chunk_sentences(doc, cfg.chunk_max_len, cfg.chunk_overlap);
    write_vault(chunks, paths.vault);

    std::string raw;
    try {
      ChunkIndex index = embed_chunks(chunks, cfg.embedding);
      auto context = retrieve_context(question, index, chunks,
                                      static_cast<std::size_t>(cfg.retrieval_k), cfg.embedding);
      raw = classify(system_prompt, question, context, cfg.inference);
    } catch (const TransportError& e) {
      log_na(std::string("inference_error: ") + e.what());
      continue;
    } catch (const ProtocolError& e) {
      log_na(std::string("inference_error: ") + e.what());
      continue;
    } catch (const InvalidInputError& e) {
      log_na(std::string("inference_error: ") + e.what());
      continue;
    }

    Verdict verdict = parse_response(raw);
    verdict.source_id = id;
    row.choice = verdict.choice;
    row.confidence = verdict.confidence;
    row.explanation =
        verdict.choice == Choice::ParseFailed ? trim(verdict.raw_response) : verdict.explanation;

    if (decide_disposition(verdict) == Disposition::Keep) {
      std::filesystem::copy_file(pdf_file, paths.pdf / (id + ".pdf"),
                                 std::filesystem::copy_options::overwrite_existing);
    }
    append_eval_row(eval_out, row);
  }

  // Totals over the final log state.
  auto final_rows = read_eval_log(paths.eval_log);
  for (const auto& row : final_rows) {
    Verdict v;
    v.choice = row.choice;
    switch (decide_disposition(v)) {
      case Disposition::Keep: ++result.kept; break;
      case Disposition::Discard: ++result.discarded; break;
      case Disposition::Unavailable: ++result.unavailable; break;
    }
  }
  result.complete = static_cast<long long>(final_rows.size()) == result.input_rows;

  StageStatus status;
  status.rows_in = result.input_rows;
  status.rows_out = static_cast<long long>(final_rows.size());
  status.complete = result.complete;
  manifest.stages["screen"] = status;
  save_manifest(manifest, paths);
  return result;
}

// ---------------------------------------------------------------------
// agree stage
// ---------------------------------------------------------------------

namespace {

std::string format_fraction(const std::optional<double>& v) {
  return v ? format_double(*v) : "na";
}

Vote llm_choice_to_vote(Choice c) {
  switch (c) {
    case Choice::Yes: return Vote::Yes;
    case Choice::No: return Vote::No;
    case Choice::Doubt: return Vote::Doubt;
    case Choice::ParseFailed: return Vote::Doubt;  // kept-for-humans reading
    case Choice::NotAvailable: return Vote::NotAvailable;
  }
  return Vote::NotAvailable;
}

Vote consensus_to_vote(ConsensusCategory c) {
  switch (c) {
    case ConsensusCategory::Include: return Vote::Yes;
    case ConsensusCategory::Doubt: return Vote::Doubt;
    case ConsensusCategory::No: return Vote::No;
  }
  return Vote::No;
}

}  // namespace

AgreeOutcome cmd_agree(const PipelineConfig& cfg, const std::filesystem::path& llm_log,
                       const std::filesystem::path& votes_csv) {
  const std::string hash = config_hash(cfg);
  RunPaths paths = RunPaths::under(cfg.output_dir);
  paths.ensure_dirs();

  const std::filesystem::path llm_path = llm_log.empty() ? paths.eval_log : llm_log;
  auto eval_rows = read_eval_log(llm_path);
  if (eval_rows.empty()) throw ConfigError("no evaluation rows in " + llm_path.string());

  std::map<std::string, Choice> llm;
  std::vector<std::string> order;
  for (const auto& row : eval_rows) {
    if (!llm.count(row.id)) order.push_back(row.id);
    llm[row.id] = row.choice;
  }

  std::map<std::string, std::vector<Vote>> votes;
  for (const auto& row : csv::read_file(votes_csv)) {
    if (row.size() < 3 || row[0] == "item_id") continue;
    votes[row[0]].push_back(vote_from_string(row[2]));
  }
  if (votes.empty()) throw ConfigError("no vote rows in " + votes_csv.string());

  // Item ids must align one-to-one.
  std::vector<std::string> unmatched;
  for (const auto& id : order) {
    if (!votes.count(id)) unmatched.push_back(id);
  }
  for (const auto& [id, _] : votes) {
    if (!llm.count(id)) unmatched.push_back(id);
  }
  if (!unmatched.empty()) {
    std::sort(unmatched.begin(), unmatched.end());
    throw InvalidInputError("item ids do not align; unmatched: " + join(unmatched, ", "));
  }
  std::vector<std::string> bad_arity;
  for (const auto& [id, v] : votes) {
    if (v.size() != 3) bad_arity.push_back(id);
  }
  if (!bad_arity.empty()) {
    std::sort(bad_arity.begin(), bad_arity.end());
    throw InvalidInputError("items without exactly three rater votes: " + join(bad_arity, ", "));
  }

  AgreementReport report;
  std::vector<Vote> reference;  // human consensus
  std::vector<Vote> test;       // LLM
  std::vector<std::vector<int>> fleiss_counts;
  std::vector<std::pair<std::string, ConsensusCategory>> consensus_rows;

  for (const auto& id : order) {
    const auto& item_votes = votes[id];
    Vote llm_vote = llm_choice_to_vote(llm[id]);
    bool any_na = llm_vote == Vote::NotAvailable ||
                  std::any_of(item_votes.begin(), item_votes.end(),
                              [](Vote v) { return v == Vote::NotAvailable; });
    if (any_na) {
      ++report.n_excluded_na;
      continue;
    }
    ConsensusCategory consensus = aggregate_votes(item_votes);
    consensus_rows.emplace_back(id, consensus);
    reference.push_back(consensus_to_vote(consensus));
    test.push_back(llm_vote);

    std::vector<int> counts(3, 0);  // columns: Yes, No, Doubt
    for (Vote v : item_votes) counts[static_cast<int>(v)]++;
    fleiss_counts.push_back(std::move(counts));
    ++report.n_items;
  }

  if (report.n_items > 0) {
    for (Vote category : {Vote::Yes, Vote::No, Vote::Doubt}) {
      auto value = ppa(reference, test, category);
      long long ref_count = 0, agree = 0;
      for (std::size_t i = 0; i < reference.size(); ++i) {
        if (reference[i] != category) continue;
        ++ref_count;
        if (test[i] == category) ++agree;
      }
      report.ppa_by_category[to_string(category)] = value;
      report.counts[to_string(category)] = {agree, ref_count};
    }
    report.cohen_kappa = cohen_kappa(reference, test);
    report.fleiss_kappa = fleiss_kappa(fleiss_counts, 3);
  }

  AgreeOutcome outcome;
  outcome.report = report;
  outcome.consensus_path = paths.reports / "consensus.csv";
  outcome.metrics_path = paths.reports / "agreement_metrics.txt";
  outcome.table_path = paths.reports / "agreement.txt";

  {
    std::ofstream out(outcome.consensus_path, std::ios::binary | std::ios::trunc);
    out << "# config=" << hash << '\n' << "item_id,category\n";
    for (const auto& [id, category] : consensus_rows) {
      csv::write_row(out, {id, to_string(category)});
    }
  }

  long long pooled_agree = 0, pooled_ref = 0;
  for (const auto& [_, counts] : report.counts) {
    pooled_agree += counts.first;
    pooled_ref += counts.second;
  }
  std::optional<double> pooled;
  if (pooled_ref > 0) pooled = static_cast<double>(pooled_agree) / pooled_ref;

  {
    std::ofstream out(outcome.metrics_path, std::ios::trunc);
    out << "# config=" << hash << '\n';
    out << "ppa_yes=" << format_fraction(report.ppa_by_category[to_string(Vote::Yes)]) << '\n';
    out << "ppa_no=" << format_fraction(report.ppa_by_category[to_string(Vote::No)]) << '\n';
    out << "ppa_doubt=" << format_fraction(report.ppa_by_category[to_string(Vote::Doubt)])
        << '\n';
    out << "ppa_pooled=" << format_fraction(pooled) << '\n';
    out << "cohen_kappa=" << format_double(report.cohen_kappa) << '\n';
    out << "fleiss_kappa=" << format_fraction(report.fleiss_kappa) << '\n';
    out << "n_items=" << report.n_items << '\n';
    out << "n_excluded_na=" << report.n_excluded_na << '\n';
  }

  {
    std::ostringstream table;
    table << "agreement report (config " << hash.substr(0, 12) << ")\n";
    table << "direction: reference = human consensus, test = LLM\n";
    table << "items compared: " << report.n_items
          << "   excluded as NOT AVAILABLE: " << report.n_excluded_na << "\n\n";
    table << "category   PPA        agree/reference\n";
    for (Vote category : {Vote::Yes, Vote::No, Vote::Doubt}) {
      auto label = to_string(category);
      auto value = report.ppa_by_category[label];
      auto counts = report.counts[label];
      table << label;
      for (std::size_t i = label.size(); i < 11; ++i) table << ' ';
      std::string v = value ? format_double(*value) : "no-reference-cases";
      table << v;
      for (std::size_t i = v.size(); i < 11; ++i) table << ' ';
      table << counts.first << "/" << counts.second << "\n";
    }
    table << "pooled     " << (pooled ? format_double(*pooled) : std::string("na")) << "\n";
    table << "\ncohen_kappa (LLM vs consensus): " << format_double(report.cohen_kappa) << "\n";
    table << "fleiss_kappa (three raters):    " << format_fraction(report.fleiss_kappa) << "\n";
    std::ofstream out(outcome.table_path, std::ios::trunc);
    out << table.str();
  }
  return outcome;
}

// ---------------------------------------------------------------------
// sample stage
// ---------------------------------------------------------------------

SampleOutcome cmd_sample(const PipelineConfig& cfg, const std::filesystem::path& population_csv,
                         const std::filesystem::path& out_csv) {
  const std::string hash = config_hash(cfg);
  RunPaths paths = RunPaths::under(cfg.output_dir);
  paths.ensure_dirs();

  std::vector<std::string> ids;
  for (const auto& row : csv::read_file(population_csv)) {
    if (row.empty() || row[0].empty() || row[0] == "id" || row[0] == "item_id") continue;
    ids.push_back(row[0]);
  }
  if (ids.empty()) throw InvalidInputError("population CSV has no ids");

  SampleOutcome outcome;
  outcome.plan = make_sample_plan(static_cast<long long>(ids.size()), cfg.sample_confidence,
                                  cfg.sample_margin, cfg.sample_proportion, cfg.seed);
  outcome.ids = draw_sample(ids, static_cast<std::size_t>(outcome.plan.required_n), cfg.seed);
  outcome.out_path = out_csv.empty() ? paths.reports / "sample.csv" : out_csv;

  std::ofstream out(outcome.out_path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot write sample CSV: " + outcome.out_path.string());
  out << "# config=" << hash << '\n';
  out << "# population_N=" << outcome.plan.population_n << '\n';
  out << "# confidence=" << format_double(outcome.plan.confidence) << '\n';
  out << "# margin=" << format_double(outcome.plan.margin) << '\n';
  out << "# proportion=" << format_double(outcome.plan.proportion) << '\n';
  out << "# z=" << format_double(outcome.plan.z) << '\n';
  out << "# required_n=" << outcome.plan.required_n << '\n';
  out << "# seed=" << outcome.plan.seed << '\n';
  out << "id\n";
  for (const auto& id : outcome.ids) csv::write_row(out, {id});
  return outcome;
}

// ---------------------------------------------------------------------
// report stage
// ---------------------------------------------------------------------

std::string cmd_report(const PipelineConfig& cfg) {
  const std::string hash = config_hash(cfg);
  RunPaths paths = RunPaths::under(cfg.output_dir);
  Manifest manifest = load_or_init_manifest(paths, hash);

  std::ostringstream out;
  out << "run " << manifest.run_id << "  (config " << hash.substr(0, 12) << ")\n\n";

  // Search: raw link totals from the per-query CSV logs, deduplicated
  // totals from the exported screening CSV.
  long long raw_links = 0, raw_pdf = 0;
  if (std::filesystem::exists(paths.logs)) {
    for (const auto& entry : std::filesystem::directory_iterator(paths.logs)) {
      auto name = entry.path().filename().string();
      if (entry.path().extension() != ".csv" || name == "fetch.csv" || name == "evaluation.csv") {
        continue;
      }
      for (const auto& row : csv::read_file(entry.path())) {
        if (row.size() < 3 || row[0] == "id") continue;
        ++raw_links;
        if (row[2] == "true") ++raw_pdf;
      }
    }
  }
  long long exported = 0;
  if (std::filesystem::exists(paths.screening_csv)) {
    for (const auto& row : csv::read_file(paths.screening_csv)) {
      if (!row.empty() && row[0] != "id") ++exported;
    }
  }
  out << "search\n";
  out << "  raw links logged:      " << raw_links << "\n";
  out << "  raw pdf links:         " << raw_pdf << "\n";
  out << "  exported (dedup) rows: " << exported << "\n\n";

  auto rows = read_eval_log(paths.eval_log);
  std::map<Choice, long long> by_choice;
  long long keep = 0, discard = 0, unavailable = 0;
  long long na_block = 0, na_extract = 0, na_inference = 0, na_fetch = 0;
  for (const auto& row : rows) {
    ++by_choice[row.choice];
    Verdict v;
    v.choice = row.choice;
    switch (decide_disposition(v)) {
      case Disposition::Keep: ++keep; break;
      case Disposition::Discard: ++discard; break;
      case Disposition::Unavailable: ++unavailable; break;
    }
    if (row.choice == Choice::NotAvailable) {
      if (row.explanation.rfind("block_page_suspected", 0) == 0) {
        ++na_block;
      } else if (row.explanation.rfind("extraction_error", 0) == 0) {
        ++na_extract;
      } else if (row.explanation.rfind("inference_error", 0) == 0) {
        ++na_inference;
      } else {
        ++na_fetch;
      }
    }
  }
  out << "screen\n";
  out << "  evaluation rows: " << rows.size() << "\n";
  for (Choice c : {Choice::Yes, Choice::No, Choice::Doubt, Choice::NotAvailable,
                   Choice::ParseFailed}) {
    out << "  " << to_string(c) << ": " << by_choice[c] << "\n";
  }
  out << "  dispositions: keep=" << keep << " discard=" << discard
      << " unavailable=" << unavailable << " (sum " << (keep + discard + unavailable) << ")\n";
  out << "  not-available breakdown: fetch=" << na_fetch << " block_page=" << na_block
      << " extraction=" << na_extract << " inference=" << na_inference << "\n";
  for (const auto& [name, stage] : manifest.stages) {
    out << "\nstage " << name << ": rows_in=" << stage.rows_in << " rows_out=" << stage.rows_out
        << (stage.complete ? " complete" : " incomplete");
  }
  out << "\n";

  std::filesystem::create_directories(paths.reports);
  std::ofstream file(paths.reports / "summary.txt", std::ios::trunc);
  file << "# config=" << hash << '\n' << out.str();
  return out.str();
}

}  // namespace greyscreen
