#include <gtest/gtest.h>

#include <random>

#include "yiopt/harness.hpp"

namespace yiopt {
namespace {

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = fs::temp_directory_path() / ("yiopt_test_" + std::to_string(rd()) + std::to_string(rd()));
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  [[nodiscard]] const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

nlohmann::json small_config(const fs::path& out) {
  return {
      {"manifest", "builtin:smoke"},
      {"dims", {2}},
      {"algorithms", {"yi", {{"name", "de_fast"}, {"algorithm", "de"}, {"params", {{"crossover_rate", 0.9}}}}}},
      {"budget_multiplier", 100},
      {"repetitions", 3},
      {"root_seed", 7},
      {"output_dir", out.string()},
      {"workers", 1},
  };
}

ExperimentConfig two_problem_config(const fs::path& dir) {
  const fs::path manifest = dir / "two.manifest";
  write_text(manifest, "sph sphere 2 5 10\nras rastrigin 3 5 0 shift\n");
  auto j = small_config(dir / "out");
  j["manifest"] = manifest.string();
  return parse_config(j);
}

std::size_t count_records(const fs::path& out) {
  std::size_t n = 0;
  for (const auto& e : fs::recursive_directory_iterator(out / "runs"))
    if (e.path().extension() == ".record") ++n;
  return n;
}

TEST(Config, ParsesAndDefaults) {
  const ExperimentConfig c = parse_config(nlohmann::json{{"algorithms", {"yi", "pso"}}});
  EXPECT_EQ(c.manifest, "builtin:smoke");
  EXPECT_EQ(c.repetitions, 51);
  EXPECT_EQ(c.budget_multiplier, 10000);
  EXPECT_EQ(c.reference_name(), "yi");
  EXPECT_EQ(c.algorithms[1].seed_key, "pso");
}

TEST(Config, RejectsUnknownKeys) {
  EXPECT_THROW(parse_config(nlohmann::json{{"algorithms", {"yi"}}, {"repetitons", 3}}), ConfigError);
  EXPECT_THROW(parse_config(nlohmann::json{{"algorithms", {{{"algorithm", "yi"}, {"prams", nlohmann::json::object()}}}}}),
               ConfigError);
  EXPECT_THROW(parse_config(nlohmann::json{{"algorithms", {{{"algorithm", "yi"}, {"params", {{"sigm", 3.0}}}}}}}),
               ConfigError);
}

TEST(Config, RejectsInvalidValues) {
  EXPECT_THROW(parse_config(nlohmann::json{{"algorithms", {"nope"}}}), ConfigError);
  EXPECT_THROW(parse_config(nlohmann::json{{"algorithms", nlohmann::json::array()}}), ConfigError);
  EXPECT_THROW(parse_config(nlohmann::json{{"algorithms", {"yi"}}, {"repetitions", 0}}), ConfigError);
  EXPECT_THROW(parse_config(nlohmann::json{{"algorithms", {"yi"}}, {"budget_multiplier", 0}}), ConfigError);
  EXPECT_THROW(parse_config(nlohmann::json{{"algorithms", {"yi", "yi"}}}), ConfigError);
  EXPECT_THROW(parse_config(nlohmann::json{{"algorithms", {{{"algorithm", "yi"}, {"params", {{"sigma", 1.0}}}}}}}),
               ConfigError);
  EXPECT_THROW(parse_config(nlohmann::json{{"algorithms", {"yi"}}, {"reference", "de"}}), ConfigError);
  EXPECT_THROW(parse_config(nlohmann::json{{"algorithms", {"yi"}}, {"dims", "ten"}}), ConfigError);
}

TEST(Config, YiParameterForms) {
  const YiParams p = parse_yi_params({{"n_offspring", "2D"}, {"intervals", 4}, {"eps0_policy", "dimension_half_width"}});
  EXPECT_FALSE(p.n_offspring);
  EXPECT_EQ(p.interval_count(), 4);
  EXPECT_EQ(p.eps0_policy, ScopePolicy::dimension_half_width);
  EXPECT_EQ(*parse_yi_params({{"n_offspring", 7}}).n_offspring, 7);
  EXPECT_THROW(parse_yi_params({{"n_offspring", "3D"}}), ConfigError);
  EXPECT_THROW(parse_yi_params({{"i_min", 2.5}}), ConfigError);
}

TEST(Config, SmokeCapsAndSweepBlock) {
  std::optional<SweepSpec> sweep;
  auto j = small_config("x");
  j["budget_multiplier"] = 10000;
  j["repetitions"] = 51;
  j["sweep"] = {{"parameter", "sigma"}, {"values", {1.5, 3, 5}}};
  ExperimentConfig c = parse_config(j, {}, &sweep);
  c.apply_smoke();
  EXPECT_EQ(c.budget_multiplier, 300);
  EXPECT_EQ(c.repetitions, 5);
  ASSERT_TRUE(sweep);
  EXPECT_EQ(sweep->values, (std::vector<double>{1.5, 3.0, 5.0}));
  EXPECT_THROW(parse_sweep({{"parameter", "gamma"}, {"values", {1}}}), ConfigError);
  EXPECT_THROW(parse_sweep({{"parameter", "sigma"}, {"values", nlohmann::json::array()}}), ConfigError);
}

TEST(Config, RelativeManifestResolvedAgainstConfigDir) {
  TempDir dir;
  write_text(dir.path() / "m.txt", "a sphere 2 1 0\n");
  auto j = small_config(dir.path() / "out");
  j["manifest"] = "m.txt";
  write_text(dir.path() / "cfg.json", j.dump());
  const ExperimentConfig c = load_config(dir.path() / "cfg.json");
  EXPECT_TRUE(fs::path(c.manifest).is_absolute());
  EXPECT_EQ(resolve_manifest(c).size(), 1u);
}

TEST(Seeds, StableAndDistinct) {
  EXPECT_EQ(run_seed(1, "p", "yi", 0), run_seed(1, "p", "yi", 0));
  std::set<std::uint64_t> seen;
  for (const char* p : {"a", "b"})
    for (const char* k : {"yi", "de"})
      for (int r = 0; r < 10; ++r) seen.insert(run_seed(1, p, k, r));
  EXPECT_EQ(seen.size(), 40u);
  EXPECT_NE(run_seed(1, "a", "yi", 0), run_seed(2, "a", "yi", 0));
}

TEST(Experiment, WritesOneRecordPerRun) {
  TempDir dir;
  const ExperimentConfig c = two_problem_config(dir.path());
  const ExperimentResult r = run_experiment(c);
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.runs.size(), 12u);
  EXPECT_EQ(count_records(c.output_dir), 12u);
  EXPECT_TRUE(fs::exists(fs::path(c.output_dir) / "tables" / "summary.tsv"));
  EXPECT_TRUE(fs::exists(fs::path(c.output_dir) / "tables" / "summary.json"));
  EXPECT_TRUE(fs::exists(fs::path(c.output_dir) / "runs" / "index.tsv"));
  for (const auto& s : r.runs) {
    ASSERT_TRUE(s);
    EXPECT_EQ(s->record.total_evals, s->record.max_evals);
    EXPECT_GE(s->final_error, 0.0);
  }
  const auto sph = r.run(0, 0, 0);
  EXPECT_EQ(sph->record.max_evals, 200);
  EXPECT_NEAR(sph->final_error, sph->record.final_best_fitness - 10.0, 1e-12);
}

TEST(Experiment, RerunIsByteIdenticalAndReused) {
  TempDir dir;
  const ExperimentConfig c = two_problem_config(dir.path());
  run_experiment(c);
  const std::string table = read_text(fs::path(c.output_dir) / "tables" / "summary.tsv");
  const std::string index = read_text(fs::path(c.output_dir) / "runs" / "index.tsv");
  const ExperimentResult again = run_experiment(c);
  EXPECT_EQ(again.reused, 12u);
  EXPECT_EQ(read_text(fs::path(c.output_dir) / "tables" / "summary.tsv"), table);
  EXPECT_EQ(read_text(fs::path(c.output_dir) / "runs" / "index.tsv"), index);

  ExperimentConfig fresh = c;
  fresh.output_dir = (dir.path() / "fresh").string();
  run_experiment(fresh);
  EXPECT_EQ(read_text(fs::path(fresh.output_dir) / "tables" / "summary.tsv"), table);
}

TEST(Experiment, WorkerCountDoesNotChangeOutputs) {
  TempDir dir;
  ExperimentConfig c = two_problem_config(dir.path());
  c.output_dir = (dir.path() / "w1").string();
  c.workers = 1;
  const ExperimentResult a = run_experiment(c);
  c.output_dir = (dir.path() / "w8").string();
  c.workers = 8;
  const ExperimentResult b = run_experiment(c);
  ASSERT_EQ(a.runs.size(), b.runs.size());
  for (std::size_t i = 0; i < a.runs.size(); ++i) EXPECT_EQ(a.runs[i]->record, b.runs[i]->record);
  EXPECT_EQ(read_text(dir.path() / "w1" / "tables" / "summary.tsv"),
            read_text(dir.path() / "w8" / "tables" / "summary.tsv"));
  EXPECT_EQ(read_text(dir.path() / "w1" / "runs" / "index.tsv"), read_text(dir.path() / "w8" / "runs" / "index.tsv"));
}

TEST(Experiment, ResumeRegeneratesOnlyMissingRecords) {
  TempDir dir;
  const ExperimentConfig c = two_problem_config(dir.path());
  run_experiment(c);
  const std::string table = read_text(fs::path(c.output_dir) / "tables" / "summary.tsv");
  std::vector<fs::path> records;
  for (const auto& e : fs::recursive_directory_iterator(fs::path(c.output_dir) / "runs"))
    if (e.path().extension() == ".record") records.push_back(e.path());
  std::sort(records.begin(), records.end());
  for (std::size_t i = 0; i < records.size(); i += 2) fs::remove(records[i]);
  const ExperimentResult r = run_experiment(c);
  EXPECT_EQ(r.reused, 6u);
  EXPECT_EQ(count_records(c.output_dir), 12u);
  EXPECT_EQ(read_text(fs::path(c.output_dir) / "tables" / "summary.tsv"), table);
}

TEST(Experiment, ChangedParamsInvalidateRecords) {
  TempDir dir;
  ExperimentConfig c = two_problem_config(dir.path());
  run_experiment(c);
  c.algorithms[0].params = {{"sigma", 2.0}};
  const ExperimentResult r = run_experiment(c);
  EXPECT_EQ(r.reused, 6u);  // only the DE runs are unchanged
}

TEST(Experiment, UnknownProblemFailsBeforeRunning) {
  TempDir dir;
  ExperimentConfig c = two_problem_config(dir.path());
  c.manifest = "builtin:nothing";
  EXPECT_THROW(run_experiment(c), ConfigError);
  EXPECT_FALSE(fs::exists(fs::path(c.output_dir)));
}

TEST(Tables, RecordRoundTripAndRebuild) {
  TempDir dir;
  const ExperimentConfig c = two_problem_config(dir.path());
  const ExperimentResult r = run_experiment(c);
  const std::string table = read_text(fs::path(c.output_dir) / "tables" / "summary.tsv");
  const std::string json = read_text(fs::path(c.output_dir) / "tables" / "summary.json");
  fs::remove_all(fs::path(c.output_dir) / "tables");
  rebuild_tables(c.output_dir);
  EXPECT_EQ(read_text(fs::path(c.output_dir) / "tables" / "summary.tsv"), table);
  EXPECT_EQ(read_text(fs::path(c.output_dir) / "tables" / "summary.json"), json);

  const StoredRun& s = *r.runs[4];
  const StoredRun back = record_from_json(nlohmann::json::parse(record_to_json(s).dump()));
  EXPECT_EQ(back.record, s.record);
  EXPECT_EQ(back.final_error, s.final_error);
  EXPECT_EQ(back.run_key, s.run_key);
}

TEST(Tables, ReferenceCellsAreTies) {
  TempDir dir;
  const ExperimentConfig c = two_problem_config(dir.path());
  const ComparisonTable t = summarize_result(run_experiment(c));
  EXPECT_EQ(t.totals.at("yi"), (WinTieLoss{0, 2, 0}));
  const auto& de = t.totals.at("de_fast");
  EXPECT_EQ(de.win + de.tie + de.loss, 2);
  const ComparisonTable flipped = rebuild_tables(c.output_dir, std::string("de_fast"));
  EXPECT_EQ(flipped.totals.at("yi").win, de.loss);
  EXPECT_EQ(flipped.totals.at("yi").loss, de.win);
}

TEST(Sweep, SelfComparisonIsAllTies) {
  TempDir dir;
  ExperimentConfig c = two_problem_config(dir.path());
  c.algorithms.resize(1);
  const SweepReport rep = run_sweep(c, SweepSpec{"", "sigma", {3.0}});
  ASSERT_EQ(rep.rows.size(), 1u);
  EXPECT_EQ(rep.rows[0].wtl, (WinTieLoss{0, 2, 0}));
}

TEST(Sweep, RowsFollowConfiguredValues) {
  TempDir dir;
  ExperimentConfig c = two_problem_config(dir.path());
  const SweepReport rep = run_sweep(c, SweepSpec{"yi", "i_min", {3, 5}});
  ASSERT_EQ(rep.rows.size(), 2u);
  EXPECT_EQ(rep.rows[0].params.i_min, 3);
  EXPECT_EQ(rep.rows[1].params.i_min, 5);
  for (const auto& r : rep.rows) EXPECT_EQ(r.wtl.win + r.wtl.tie + r.wtl.loss, 2);
  const std::string tsv = read_text(fs::path(c.output_dir) / "sweep.tsv");
  EXPECT_EQ(tsv.substr(0, tsv.find('\n')), "parameter\tvalue\ti_min\ti_max\tsigma\talpha_stability\tn_offspring\twin\ttie\tloss");
  EXPECT_NE(tsv.find("i_min\t3\t3\t15\t3\t1.5\t2D\t"), std::string::npos);
  EXPECT_TRUE(fs::exists(fs::path(c.output_dir) / "i_min=5" / "tables" / "summary.tsv"));
  EXPECT_THROW(run_sweep(c, SweepSpec{"de_fast", "sigma", {2.0}}), ConfigError);
  EXPECT_THROW(run_sweep(c, SweepSpec{"", "i_min", {2.5}}), ConfigError);
  EXPECT_THROW(run_sweep(c, SweepSpec{"", "sigma", {0.5}}), ConfigError);
}

TEST(Traces, ValueLookup) {
  const std::vector<TracePoint> t{{1, 9.0}, {5, 4.0}, {9, 1.0}};
  EXPECT_TRUE(std::isinf(trace_value_at(t, 0)));
  EXPECT_EQ(trace_value_at(t, 1), 9.0);
  EXPECT_EQ(trace_value_at(t, 8), 4.0);
  EXPECT_EQ(trace_value_at(t, 100), 1.0);
}

TEST(Traces, ExportedColumns) {
  TempDir dir;
  const ExperimentConfig c = two_problem_config(dir.path());
  const ExperimentResult r = run_experiment(c);
  for (TraceAxis axis : {TraceAxis::raw, TraceAxis::fraction}) {
    const auto files = export_traces(r, dir.path() / "tr", axis);
    ASSERT_EQ(files.size(), 4u);
    for (const auto& f : files) {
      std::istringstream in(read_text(f));
      std::string line;
      std::getline(in, line);
      EXPECT_EQ(line, axis == TraceAxis::raw ? "evals,median,q25,q75" : "fraction,median,q25,q75");
      double prev_median = std::numeric_limits<double>::infinity(), last_x = 0.0;
      int rows = 0;
      while (std::getline(in, line)) {
        double x, med, q25, q75;
        char comma;
        std::istringstream ls(line);
        ls >> x >> comma >> med >> comma >> q25 >> comma >> q75;
        EXPECT_LE(med, prev_median);
        EXPECT_LE(q25, med);
        EXPECT_LE(med, q75);
        prev_median = med;
        last_x = x;
        ++rows;
      }
      EXPECT_GT(rows, 50);
      if (axis == TraceAxis::fraction) {
        EXPECT_NEAR(last_x, 1.0, 1e-12);
      } else {
        EXPECT_EQ(last_x, f.parent_path().filename() == "sph" ? 200.0 : 300.0);
      }
    }
  }
  EXPECT_THROW(export_traces(ExperimentResult{}, dir.path() / "none", TraceAxis::raw), ParameterError);
}

TEST(Traces, QuantilesMatchOracle) {
  RunRecord a, b, c;
  a.max_evals = b.max_evals = c.max_evals = 10;
  a.trace = {{1, 5.0}, {10, 1.0}};
  b.trace = {{1, 7.0}, {4, 3.0}};
  c.trace = {{1, 6.0}};
  const auto rows = trace_quantiles({&a, &b, &c}, TraceAxis::raw, 10);
  ASSERT_EQ(rows.size(), 10u);
  EXPECT_EQ(rows[0].median, 6.0);
  EXPECT_EQ(rows[3].median, 5.0);  // {5, 3, 6}
  EXPECT_EQ(rows[3].q25, 4.0);
  EXPECT_EQ(rows[9].median, 3.0);  // {1, 3, 6}
}

}  // namespace
}  // namespace yiopt
