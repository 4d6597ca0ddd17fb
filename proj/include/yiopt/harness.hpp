#ifndef YIOPT_HARNESS_HPP
#define YIOPT_HARNESS_HPP

// Experiment runner: config -> seeded runs on a worker pool -> one record
// file per run, summary tables, sensitivity sweeps and convergence traces.
//
// Output layout under the output directory:
//   experiment.json                      resolved configuration
//   runs/<problem>/<algo>/<rep>.record   one JSON RunRecord per run
//   runs/index.tsv                       one line per run, in job order
//   tables/summary.tsv, summary.json     per-cell statistics and verdicts
//   traces/<problem>/<algo>.csv          convergence quantiles
//   failures.tsv                         only when some runs failed

#include <atomic>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "yiopt/algorithms.hpp"
#include "yiopt/benchmarks.hpp"
#include "yiopt/stats.hpp"

namespace yiopt {

namespace fs = std::filesystem;

struct ExperimentConfig {
  std::string manifest = "builtin:smoke";  ///< "builtin:<name>" or a file path
  std::vector<std::size_t> dims{10};
  std::vector<AlgorithmConfig> algorithms;
  std::int64_t budget_multiplier = 10000;  ///< max evals = multiplier * D
  int repetitions = 51;
  std::uint64_t root_seed = 1;
  std::string output_dir = "out";
  int workers = 1;
  std::string reference;  ///< algorithm name verdicts are computed against
  double significance = 0.05;

  void validate() const {
    if (repetitions < 1) throw ConfigError("repetitions must be >= 1");
    if (budget_multiplier < 1) throw ConfigError("budget_multiplier must be >= 1");
    if (workers < 1) throw ConfigError("workers must be >= 1");
    if (!(significance > 0.0 && significance < 1.0)) throw ConfigError("significance must lie in (0, 1)");
    if (algorithms.empty()) throw ConfigError("at least one algorithm is required");
    std::set<std::string> names;
    for (const auto& a : algorithms) {
      if (a.name.empty()) throw ConfigError("algorithm name must not be empty");
      if (!names.insert(a.name).second) throw ConfigError("duplicate algorithm name '" + a.name + "'");
      if (std::find(algorithm_ids().begin(), algorithm_ids().end(), a.algorithm) == algorithm_ids().end())
        throw ConfigError("unknown algorithm id '" + a.algorithm + "'");
    }
    if (!reference.empty() && !names.contains(reference))
      throw ConfigError("reference '" + reference + "' is not a configured algorithm");
  }

  /// Shrinks budget and repetitions for CI.
  void apply_smoke() {
    budget_multiplier = std::min<std::int64_t>(budget_multiplier, 300);
    repetitions = std::min(repetitions, 5);
  }

  [[nodiscard]] std::string reference_name() const {
    return reference.empty() ? algorithms.front().name : reference;
  }
};

/// Tunable Yi parameters a sweep may vary.
struct SweepSpec {
  std::string target;     ///< name of a configured yi algorithm; empty = first yi
  std::string parameter;  ///< sigma | i_min | i_max | alpha_stability | n_offspring
  std::vector<double> values;
};

inline const std::vector<std::string>& sweep_parameters() {
  static const std::vector<std::string> p{"sigma", "i_min", "i_max", "alpha_stability", "n_offspring"};
  return p;
}

namespace detail {

inline void require_keys(const nlohmann::json& j, std::initializer_list<const char*> allowed,
                         const std::string& where) {
  if (!j.is_object()) throw ConfigError(where + " must be an object");
  for (const auto& [k, v] : j.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || k == a;
    if (!ok) throw ConfigError(where + ": unknown key '" + k + "'");
  }
}

inline bool is_integer_parameter(const std::string& p) {
  return p == "i_min" || p == "i_max" || p == "n_offspring";
}

}  // namespace detail

inline SweepSpec parse_sweep(const nlohmann::json& j) {
  detail::require_keys(j, {"target", "parameter", "values"}, "sweep");
  SweepSpec s;
  if (j.contains("target")) s.target = j.at("target").get<std::string>();
  if (!j.contains("parameter") || !j.contains("values")) throw ConfigError("sweep: 'parameter' and 'values' required");
  s.parameter = j.at("parameter").get<std::string>();
  if (std::find(sweep_parameters().begin(), sweep_parameters().end(), s.parameter) == sweep_parameters().end())
    throw ConfigError("sweep: unknown parameter '" + s.parameter + "'");
  if (!j.at("values").is_array() || j.at("values").empty()) throw ConfigError("sweep: 'values' must be a non-empty array");
  for (const auto& v : j.at("values")) {
    if (!v.is_number()) throw ConfigError("sweep: values must be numbers");
    s.values.push_back(v.get<double>());
  }
  return s;
}

/// Config schema (JSON; unknown keys are errors):
///
///   manifest           string   "builtin:smoke" | "builtin:desk6" | "builtin:all" | path
///   dims               [int]    dimensions for manifest rows whose dim is "*"
///   algorithms         [entry]  entry = "<id>" | {"name", "algorithm", "params"}
///   budget_multiplier  int      max evaluations per run = multiplier * D
///   repetitions        int
///   root_seed          uint64
///   output_dir         string
///   workers            int
///   reference          string   algorithm name used for verdicts
///   significance       number
///   sweep              object   {"target", "parameter", "values"} (used by `sweep`)
///
/// A relative manifest path is resolved against `base_dir`.
inline ExperimentConfig parse_config(const nlohmann::json& j, const fs::path& base_dir = {},
                                     std::optional<SweepSpec>* sweep = nullptr) {
  detail::require_keys(j,
                       {"manifest", "dims", "algorithms", "budget_multiplier", "repetitions", "root_seed",
                        "output_dir", "workers", "reference", "significance", "sweep"},
                       "config");
  ExperimentConfig c;
  try {
    if (j.contains("manifest")) {
      c.manifest = j.at("manifest").get<std::string>();
      if (!c.manifest.starts_with("builtin:") && fs::path(c.manifest).is_relative() && !base_dir.empty())
        c.manifest = fs::absolute(base_dir / c.manifest).lexically_normal().string();
    }
    if (j.contains("dims")) c.dims = j.at("dims").get<std::vector<std::size_t>>();
    if (j.contains("budget_multiplier")) c.budget_multiplier = j.at("budget_multiplier").get<std::int64_t>();
    if (j.contains("repetitions")) c.repetitions = j.at("repetitions").get<int>();
    if (j.contains("root_seed")) c.root_seed = j.at("root_seed").get<std::uint64_t>();
    if (j.contains("output_dir")) c.output_dir = j.at("output_dir").get<std::string>();
    if (j.contains("workers")) c.workers = j.at("workers").get<int>();
    if (j.contains("reference")) c.reference = j.at("reference").get<std::string>();
    if (j.contains("significance")) c.significance = j.at("significance").get<double>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  if (!j.contains("algorithms") || !j.at("algorithms").is_array())
    throw ConfigError("config: 'algorithms' must be an array");
  for (const auto& a : j.at("algorithms")) {
    AlgorithmConfig ac;
    if (a.is_string()) {
      ac.name = ac.algorithm = a.get<std::string>();
    } else {
      detail::require_keys(a, {"name", "algorithm", "params"}, "algorithm entry");
      if (!a.contains("algorithm")) throw ConfigError("algorithm entry: 'algorithm' is required");
      ac.algorithm = a.at("algorithm").get<std::string>();
      ac.name = a.contains("name") ? a.at("name").get<std::string>() : ac.algorithm;
      if (a.contains("params")) ac.params = a.at("params");
    }
    ac.seed_key = ac.name;
    c.algorithms.push_back(std::move(ac));
  }
  for (std::size_t d : c.dims) {
    if (d < 1) throw ConfigError("config: dims must be >= 1");
  }
  c.validate();
  for (const auto& a : c.algorithms) (void)make_runner(a);  // eager parameter validation
  if (sweep != nullptr) {
    if (j.contains("sweep")) {
      *sweep = parse_sweep(j.at("sweep"));
    } else {
      sweep->reset();
    }
  }
  return c;
}

inline ExperimentConfig load_config(const fs::path& path, std::optional<SweepSpec>* sweep = nullptr) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path.string() + "'");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config '" + path.string() + "': " + e.what());
  }
  return parse_config(j, path.parent_path(), sweep);
}

inline nlohmann::json config_to_json(const ExperimentConfig& c) {
  nlohmann::json j;
  j["manifest"] = c.manifest;
  j["dims"] = c.dims;
  j["budget_multiplier"] = c.budget_multiplier;
  j["repetitions"] = c.repetitions;
  j["root_seed"] = c.root_seed;
  j["output_dir"] = c.output_dir;
  j["workers"] = c.workers;
  j["reference"] = c.reference_name();
  j["significance"] = c.significance;
  auto algos = nlohmann::json::array();
  for (const auto& a : c.algorithms) algos.push_back({{"name", a.name}, {"algorithm", a.algorithm}, {"params", a.params}});
  j["algorithms"] = algos;
  return j;
}

inline std::vector<ManifestEntry> resolve_manifest(const ExperimentConfig& c) {
  std::vector<ManifestEntry> entries;
  try {
    if (c.manifest.starts_with("builtin:")) {
      const auto b = builtin_manifest(c.manifest.substr(8));
      if (!b) throw ConfigError("unknown builtin manifest '" + c.manifest + "'");
      entries = *b;
    } else {
      entries = load_manifest(c.manifest);
    }
    entries = expand_manifest(entries, c.dims);
  } catch (const ParameterError& e) {
    throw ConfigError(e.what());
  }
  if (entries.empty()) throw ConfigError("manifest '" + c.manifest + "' lists no problems");
  return entries;
}

/// Per-run seed: splitmix64(root_seed ^ fnv1a64(problem + '\x1f' + seed_key +
/// '\x1f' + decimal(rep))).
inline std::uint64_t run_seed(std::uint64_t root_seed, std::string_view problem, std::string_view seed_key, int rep) {
  std::string key(problem);
  key += '\x1f';
  key += seed_key;
  key += '\x1f';
  key += std::to_string(rep);
  return splitmix64(root_seed ^ fnv1a64(key));
}

struct RunJob {
  std::size_t problem_index = 0;
  std::size_t algorithm_index = 0;
  int repetition = 0;
  std::uint64_t seed = 0;
  std::int64_t max_evals = 0;
  std::string run_key;
};

struct StoredRun {
  RunRecord record;
  int repetition = 0;
  double final_error = 0.0;
  std::string run_key;
};

struct RunFailure {
  std::string problem;
  std::string algorithm;
  int repetition = 0;
  std::string message;
};

struct ExperimentResult {
  std::vector<ManifestEntry> problems;
  std::vector<std::string> algorithms;
  int repetitions = 0;
  std::string reference;
  double significance = 0.05;
  std::vector<std::optional<StoredRun>> runs;  ///< job order: problem, algorithm, rep
  std::vector<RunFailure> failures;
  std::size_t reused = 0;

  [[nodiscard]] bool ok() const { return failures.empty(); }

  [[nodiscard]] const std::optional<StoredRun>& run(std::size_t p, std::size_t a, int rep) const {
    return runs[(p * algorithms.size() + a) * static_cast<std::size_t>(repetitions) + static_cast<std::size_t>(rep)];
  }
};

inline fs::path record_path(const fs::path& out, std::string_view problem, std::string_view algo, int rep) {
  return out / "runs" / std::string(problem) / std::string(algo) / (std::to_string(rep) + ".record");
}

inline nlohmann::json record_to_json(const StoredRun& s) {
  const RunRecord& r = s.record;
  nlohmann::json j;
  j["algorithm"] = r.algorithm;
  j["problem"] = r.problem;
  j["repetition"] = s.repetition;
  j["seed"] = r.seed;
  j["run_key"] = s.run_key;
  j["max_evals"] = r.max_evals;
  j["total_evals"] = r.total_evals;
  j["final_best_fitness"] = r.final_best_fitness;
  j["final_error"] = s.final_error;
  j["final_best_point"] = r.final_best_point;
  auto trace = nlohmann::json::array();
  for (const auto& p : r.trace) trace.push_back({p.evals, p.best});
  j["trace"] = trace;
  return j;
}

inline StoredRun record_from_json(const nlohmann::json& j) {
  StoredRun s;
  RunRecord& r = s.record;
  r.algorithm = j.at("algorithm").get<std::string>();
  r.problem = j.at("problem").get<std::string>();
  s.repetition = j.at("repetition").get<int>();
  r.seed = j.at("seed").get<std::uint64_t>();
  s.run_key = j.at("run_key").get<std::string>();
  r.max_evals = j.at("max_evals").get<std::int64_t>();
  r.total_evals = j.at("total_evals").get<std::int64_t>();
  r.final_best_fitness = j.at("final_best_fitness").get<double>();
  s.final_error = j.at("final_error").get<double>();
  r.final_best_point = j.at("final_best_point").get<Vector>();
  for (const auto& p : j.at("trace")) r.trace.push_back({p.at(0).get<std::int64_t>(), p.at(1).get<double>()});
  return s;
}

inline void write_text(const fs::path& path, const std::string& text) {
  fs::create_directories(path.parent_path());
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + tmp.string() + "'");
    out << text;
  }
  fs::rename(tmp, path);
}

inline std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::optional<StoredRun> load_record(const fs::path& path) {
  if (!fs::exists(path)) return std::nullopt;
  try {
    return record_from_json(nlohmann::json::parse(read_text(path)));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

/// Verdict of every algorithm against the reference, per problem.
inline ComparisonTable summarize_result(const ExperimentResult& res) {
  const auto ref_it = std::find(res.algorithms.begin(), res.algorithms.end(), res.reference);
  if (ref_it == res.algorithms.end()) throw ConfigError("reference '" + res.reference + "' has no runs");
  const auto ref = static_cast<std::size_t>(ref_it - res.algorithms.begin());

  auto errors_of = [&](std::size_t p, std::size_t a) {
    Vector e;
    for (int r = 0; r < res.repetitions; ++r) {
      if (const auto& s = res.run(p, a, r)) e.push_back(s->final_error);
    }
    return e;
  };

  std::vector<ComparisonCell> cells;
  for (std::size_t p = 0; p < res.problems.size(); ++p) {
    const Vector ref_err = errors_of(p, ref);
    for (std::size_t a = 0; a < res.algorithms.size(); ++a) {
      const Vector err = errors_of(p, a);
      if (err.empty()) continue;  // surfaces as a missing cell in build_table
      ComparisonCell c;
      c.algorithm = res.algorithms[a];
      c.problem = res.problems[p].id;
      c.stats = summarize(err);
      c.verdict = a == ref || ref_err.empty() ? Verdict::tie : classify(err, ref_err, res.significance);
      cells.push_back(std::move(c));
    }
  }
  return build_table(cells);
}

inline nlohmann::json table_to_json(const ComparisonTable& t, const std::string& reference, double significance) {
  nlohmann::json j;
  j["reference"] = reference;
  j["significance"] = significance;
  j["algorithms"] = t.algorithms;
  j["problems"] = t.problems;
  auto cells = nlohmann::json::array();
  for (const auto& c : t.cells) {
    cells.push_back({{"problem", c.problem},
                     {"algorithm", c.algorithm},
                     {"n", c.stats.n},
                     {"best", c.stats.best},
                     {"worst", c.stats.worst},
                     {"mean", c.stats.mean},
                     {"std", c.stats.std},
                     {"median", c.stats.median},
                     {"verdict", std::string(1, verdict_symbol(c.verdict))}});
  }
  j["cells"] = cells;
  auto totals = nlohmann::json::object();
  for (const auto& a : t.algorithms) {
    const auto& w = t.totals.at(a);
    totals[a] = {{"win", w.win}, {"tie", w.tie}, {"loss", w.loss}};
  }
  j["totals"] = totals;
  return j;
}

inline void write_tables(const fs::path& out, const ExperimentResult& res) {
  const ComparisonTable t = summarize_result(res);
  write_text(out / "tables" / "summary.tsv", table_to_tsv(t));
  write_text(out / "tables" / "summary.json", table_to_json(t, res.reference, res.significance).dump(2) + "\n");
}

inline std::string index_tsv(const ExperimentResult& res) {
  std::ostringstream out;
  out << "problem\talgorithm\trepetition\tseed\ttotal_evals\tfinal_error\n";
  for (std::size_t p = 0; p < res.problems.size(); ++p)
    for (std::size_t a = 0; a < res.algorithms.size(); ++a)
      for (int r = 0; r < res.repetitions; ++r) {
        const auto& s = res.run(p, a, r);
        if (!s) continue;
        out << res.problems[p].id << '\t' << res.algorithms[a] << '\t' << r << '\t' << s->record.seed << '\t'
            << s->record.total_evals << '\t' << format_double(s->final_error) << '\n';
      }
  return out.str();
}

/// Runs every (problem, algorithm, repetition) job. Existing record files
/// whose run key matches are reused, so an interrupted experiment resumes.
/// Configuration errors throw before any run starts; per-run failures are
/// collected and reported in the result.
inline ExperimentResult run_experiment(const ExperimentConfig& config) {
  config.validate();
  const auto entries = resolve_manifest(config);
  std::vector<SuiteProblem> problems;
  for (const auto& e : entries) {
    try {
      problems.push_back(instantiate(e));
    } catch (const ParameterError& ex) {
      throw ConfigError(ex.what());
    }
  }
  std::vector<Runner> runners;
  for (const auto& a : config.algorithms) runners.push_back(make_runner(a));

  ExperimentResult res;
  res.problems = entries;
  for (const auto& a : config.algorithms) res.algorithms.push_back(a.name);
  res.repetitions = config.repetitions;
  res.reference = config.reference_name();
  res.significance = config.significance;

  const fs::path out(config.output_dir);
  fs::create_directories(out);
  write_text(out / "experiment.json", config_to_json(config).dump(2) + "\n");

  std::vector<RunJob> jobs;
  for (std::size_t p = 0; p < entries.size(); ++p) {
    const std::string manifest_row = format_manifest({entries[p]});
    for (std::size_t a = 0; a < config.algorithms.size(); ++a) {
      const auto& ac = config.algorithms[a];
      for (int r = 0; r < config.repetitions; ++r) {
        RunJob job;
        job.problem_index = p;
        job.algorithm_index = a;
        job.repetition = r;
        job.seed = run_seed(config.root_seed, entries[p].id, ac.seed_key, r);
        job.max_evals = config.budget_multiplier * static_cast<std::int64_t>(entries[p].dim);
        job.run_key = "algorithm=" + ac.algorithm + ";params=" + ac.params.dump() +
                      ";problem=" + manifest_row.substr(manifest_row.find('\n') + 1) +
                      "max_evals=" + std::to_string(job.max_evals) + ";seed=" + std::to_string(job.seed);
        jobs.push_back(std::move(job));
      }
    }
  }

  res.runs.resize(jobs.size());
  std::vector<std::optional<RunFailure>> failures(jobs.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> reused{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      const RunJob& job = jobs[i];
      const auto& entry = entries[job.problem_index];
      const auto& algo = config.algorithms[job.algorithm_index].name;
      const fs::path path = record_path(out, entry.id, algo, job.repetition);
      try {
        if (auto existing = load_record(path); existing && existing->run_key == job.run_key) {
          res.runs[i] = std::move(existing);
          ++reused;
          continue;
        }
        StoredRun s;
        s.record = runners[job.algorithm_index](problems[job.problem_index], job.max_evals, job.seed);
        s.record.problem = entry.id;
        s.repetition = job.repetition;
        s.final_error = s.record.final_best_fitness - entry.bias;
        s.run_key = job.run_key;
        write_text(path, record_to_json(s).dump() + "\n");
        res.runs[i] = std::move(s);
      } catch (const std::exception& ex) {
        failures[i] = RunFailure{entry.id, algo, job.repetition, ex.what()};
      }
    }
  };

  const int n_workers = std::min<int>(config.workers, static_cast<int>(jobs.size()));
  if (n_workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < n_workers; ++w) pool.emplace_back(worker);
  }
  res.reused = reused.load();
  for (auto& f : failures) {
    if (f) res.failures.push_back(std::move(*f));
  }

  write_text(out / "runs" / "index.tsv", index_tsv(res));
  if (res.ok()) {
    write_tables(out, res);
    fs::remove(out / "failures.tsv");
  } else {
    std::ostringstream fm;
    fm << "problem\talgorithm\trepetition\tmessage\n";
    for (const auto& f : res.failures) fm << f.problem << '\t' << f.algorithm << '\t' << f.repetition << '\t' << f.message << '\n';
    write_text(out / "failures.tsv", fm.str());
  }
  return res;
}

/// Rebuilds an ExperimentResult from an output directory (experiment.json
/// plus the record files).
inline ExperimentResult load_result(const fs::path& out) {
  const auto j = nlohmann::json::parse(read_text(out / "experiment.json"));
  ExperimentConfig c = parse_config(j);
  c.output_dir = out.string();
  ExperimentResult res;
  res.problems = resolve_manifest(c);
  for (const auto& a : c.algorithms) res.algorithms.push_back(a.name);
  res.repetitions = c.repetitions;
  res.reference = c.reference_name();
  res.significance = c.significance;
  for (const auto& p : res.problems)
    for (const auto& a : res.algorithms)
      for (int r = 0; r < res.repetitions; ++r) {
        auto s = load_record(record_path(out, p.id, a, r));
        if (!s) res.failures.push_back({p.id, a, r, "missing record"});
        res.runs.push_back(std::move(s));
      }
  return res;
}

/// Regenerates the summary tables from persisted records.
inline ComparisonTable rebuild_tables(const fs::path& out, std::optional<std::string> reference = std::nullopt,
                                      std::optional<double> significance = std::nullopt) {
  ExperimentResult res = load_result(out);
  if (reference) res.reference = *reference;
  if (significance) res.significance = *significance;
  write_tables(out, res);
  return summarize_result(res);
}

// ---------------------------------------------------------------------------
// Sensitivity sweeps

struct SweepRow {
  double value = 0.0;
  YiParams params;
  WinTieLoss wtl;
};

struct SweepReport {
  std::string target;
  std::string parameter;
  YiParams base;
  std::vector<SweepRow> rows;
};

inline std::string format_param_value(const std::string& parameter, double v) {
  if (detail::is_integer_parameter(parameter)) return std::to_string(static_cast<long long>(std::llround(v)));
  return format_double(v);
}

/// Sensitivity table: the effective (i_min, i_max, sigma, alpha, offspring) of
/// each variant and its win/tie/loss count against the base configuration.
inline std::string sweep_to_tsv(const SweepReport& rep) {
  std::ostringstream out;
  out << "parameter\tvalue\ti_min\ti_max\tsigma\talpha_stability\tn_offspring\twin\ttie\tloss\n";
  for (const auto& r : rep.rows) {
    out << rep.parameter << '\t' << format_param_value(rep.parameter, r.value) << '\t' << r.params.i_min << '\t'
        << r.params.i_max << '\t' << format_double(r.params.sigma) << '\t' << format_double(r.params.alpha_stability)
        << '\t' << (r.params.n_offspring ? std::to_string(*r.params.n_offspring) : std::string("2D")) << '\t'
        << r.wtl.win << '\t' << r.wtl.tie << '\t' << r.wtl.loss << '\n';
  }
  return out.str();
}

/// Runs the base configuration of the target yi algorithm and one variant per
/// sweep value, then classifies each variant against the base per problem.
/// Variants reuse the base's seed key so every configuration sees the same
/// seeds.
inline SweepReport run_sweep(const ExperimentConfig& base_config, const SweepSpec& sweep) {
  if (std::find(sweep_parameters().begin(), sweep_parameters().end(), sweep.parameter) == sweep_parameters().end())
    throw ConfigError("sweep: unknown parameter '" + sweep.parameter + "'");
  if (sweep.values.empty()) throw ConfigError("sweep: no values");

  const AlgorithmConfig* target = nullptr;
  for (const auto& a : base_config.algorithms) {
    if ((sweep.target.empty() && a.algorithm == "yi") || (!sweep.target.empty() && a.name == sweep.target)) {
      target = &a;
      break;
    }
  }
  if (target == nullptr) throw ConfigError("sweep: no yi algorithm named '" + sweep.target + "' in config");
  if (target->algorithm != "yi") throw ConfigError("sweep: target '" + target->name + "' is not a yi algorithm");

  SweepReport report;
  report.target = target->name;
  report.parameter = sweep.parameter;
  report.base = parse_yi_params(target->params);

  // validate every variant before running anything
  std::vector<AlgorithmConfig> variants;
  for (double v : sweep.values) {
    AlgorithmConfig vc = *target;
    if (detail::is_integer_parameter(sweep.parameter)) {
      if (v != std::floor(v)) throw ConfigError("sweep: " + sweep.parameter + " needs integer values");
      vc.params[sweep.parameter] = static_cast<int>(v);
    } else {
      vc.params[sweep.parameter] = v;
    }
    (void)make_runner(vc);
    variants.push_back(std::move(vc));
  }

  const fs::path root(base_config.output_dir);
  auto run_one = [&](const AlgorithmConfig& ac, const fs::path& dir) {
    ExperimentConfig c = base_config;
    c.algorithms = {ac};
    c.reference.clear();
    c.output_dir = dir.string();
    ExperimentResult r = run_experiment(c);
    if (!r.ok())
      throw std::runtime_error("sweep: " + std::to_string(r.failures.size()) + " runs failed in " + dir.string());
    return r;
  };

  const ExperimentResult base = run_one(*target, root / "base");
  for (std::size_t k = 0; k < variants.size(); ++k) {
    const double v = sweep.values[k];
    const ExperimentResult var =
        run_one(variants[k], root / (sweep.parameter + "=" + format_param_value(sweep.parameter, v)));
    SweepRow row;
    row.value = v;
    row.params = parse_yi_params(variants[k].params);
    for (std::size_t p = 0; p < base.problems.size(); ++p) {
      Vector e_base, e_var;
      for (int r = 0; r < base.repetitions; ++r) {
        e_base.push_back(base.run(p, 0, r)->final_error);
        e_var.push_back(var.run(p, 0, r)->final_error);
      }
      switch (classify(e_var, e_base, base_config.significance)) {
        case Verdict::win: ++row.wtl.win; break;
        case Verdict::tie: ++row.wtl.tie; break;
        case Verdict::loss: ++row.wtl.loss; break;
      }
    }
    report.rows.push_back(row);
  }

  write_text(root / "sweep.tsv", sweep_to_tsv(report));
  nlohmann::json j;
  j["target"] = report.target;
  j["parameter"] = report.parameter;
  auto rows = nlohmann::json::array();
  for (const auto& r : report.rows)
    rows.push_back({{"value", r.value}, {"win", r.wtl.win}, {"tie", r.wtl.tie}, {"loss", r.wtl.loss}});
  j["rows"] = rows;
  write_text(root / "sweep.json", j.dump(2) + "\n");
  return report;
}

// ---------------------------------------------------------------------------
// Convergence traces

enum class TraceAxis { raw, fraction };

struct TraceRow {
  double x = 0.0;
  double median = 0.0;
  double q25 = 0.0;
  double q75 = 0.0;
};

/// Best-so-far of a compacted trace at `evals` (last point at or before it).
inline double trace_value_at(const std::vector<TracePoint>& trace, std::int64_t evals) {
  const auto it = std::upper_bound(trace.begin(), trace.end(), evals,
                                   [](std::int64_t e, const TracePoint& p) { return e < p.evals; });
  if (it == trace.begin()) return std::numeric_limits<double>::infinity();
  return std::prev(it)->best;
}

/// Median and quartiles across repetitions on a grid of `points` eval counts
/// ending at the budget.
inline std::vector<TraceRow> trace_quantiles(const std::vector<const RunRecord*>& runs, TraceAxis axis,
                                             int points = 100) {
  if (runs.empty()) throw ParameterError("trace_quantiles: no runs");
  const std::int64_t t_max = runs.front()->max_evals;
  std::vector<TraceRow> rows;
  std::int64_t last = 0;
  for (int k = 1; k <= points; ++k) {
    const std::int64_t e = std::max<std::int64_t>(1, (t_max * k + points / 2) / points);
    if (e <= last) continue;
    last = e;
    Vector vals;
    for (const auto* r : runs) vals.push_back(trace_value_at(r->trace, e));
    std::sort(vals.begin(), vals.end());
    TraceRow row;
    row.x = axis == TraceAxis::raw ? static_cast<double>(e) : static_cast<double>(e) / static_cast<double>(t_max);
    row.median = quantile_sorted(vals, 0.5);
    row.q25 = quantile_sorted(vals, 0.25);
    row.q75 = quantile_sorted(vals, 0.75);
    rows.push_back(row);
  }
  return rows;
}

/// Writes traces/<problem>/<algo>.csv for every cell; returns the files.
inline std::vector<fs::path> export_traces(const ExperimentResult& res, const fs::path& out, TraceAxis axis,
                                           int points = 100) {
  std::vector<fs::path> files;
  bool any = false;
  for (std::size_t p = 0; p < res.problems.size(); ++p) {
    for (std::size_t a = 0; a < res.algorithms.size(); ++a) {
      std::vector<const RunRecord*> runs;
      for (int r = 0; r < res.repetitions; ++r) {
        if (const auto& s = res.run(p, a, r)) runs.push_back(&s->record);
      }
      if (runs.empty()) continue;
      any = true;
      std::ostringstream csv;
      csv << (axis == TraceAxis::raw ? "evals" : "fraction") << ",median,q25,q75\n";
      for (const auto& row : trace_quantiles(runs, axis, points))
        csv << format_double(row.x) << ',' << format_double(row.median) << ',' << format_double(row.q25) << ','
            << format_double(row.q75) << '\n';
      const fs::path f = out / "traces" / res.problems[p].id / (res.algorithms[a] + ".csv");
      write_text(f, csv.str());
      files.push_back(f);
    }
  }
  if (!any) throw ParameterError("export_traces: result set is empty");
  return files;
}

}  // namespace yiopt

#endif  // YIOPT_HARNESS_HPP
