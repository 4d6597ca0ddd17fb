// yiopt command-line front end: runs experiments, sweeps, and regenerates
// tables and convergence traces from persisted run records.

#include <CLI11.hpp>
#include <iostream>
#include <thread>

#include "yiopt/harness.hpp"

namespace {

using namespace yiopt;

struct CommonRunOptions {
  std::string config;
  std::string out;
  int workers = 0;
  bool smoke = false;
};

void add_run_options(CLI::App* cmd, CommonRunOptions& o) {
  cmd->add_option("-c,--config", o.config, "experiment JSON config")->required()->check(CLI::ExistingFile);
  cmd->add_option("-o,--out", o.out, "output directory (overrides output_dir)");
  cmd->add_option("-w,--workers", o.workers, "worker threads (overrides workers; 0 = keep)")->check(CLI::NonNegativeNumber);
  cmd->add_flag("--smoke", o.smoke, "cap budget multiplier at 300 and repetitions at 5");
}

ExperimentConfig load_with_overrides(const CommonRunOptions& o, std::optional<SweepSpec>* sweep = nullptr) {
  ExperimentConfig c = load_config(o.config, sweep);
  if (!o.out.empty()) c.output_dir = o.out;
  if (o.workers > 0) c.workers = o.workers;
  if (o.smoke) c.apply_smoke();
  return c;
}

void print_failures(const ExperimentResult& res, const std::string& out) {
  std::cerr << res.failures.size() << " run(s) failed; see " << (fs::path(out) / "failures.tsv").string() << "\n";
  for (std::size_t k = 0; k < std::min<std::size_t>(res.failures.size(), 5); ++k) {
    const auto& f = res.failures[k];
    std::cerr << "  " << f.problem << '/' << f.algorithm << '/' << f.repetition << ": " << f.message << "\n";
  }
}

int cmd_run(const CommonRunOptions& o) {
  const ExperimentConfig c = load_with_overrides(o);
  const ExperimentResult res = run_experiment(c);
  std::cerr << res.runs.size() << " runs (" << res.reused << " reused) in " << c.output_dir << "\n";
  if (!res.ok()) {
    print_failures(res, c.output_dir);
    return 1;
  }
  std::cout << table_to_tsv(summarize_result(res));
  return 0;
}

int cmd_sweep(const CommonRunOptions& o, const std::string& param, const std::vector<double>& values,
              const std::string& target) {
  std::optional<SweepSpec> from_config;
  const ExperimentConfig c = load_with_overrides(o, &from_config);
  SweepSpec spec = from_config.value_or(SweepSpec{});
  if (!param.empty()) spec.parameter = param;
  if (!values.empty()) spec.values = values;
  if (!target.empty()) spec.target = target;
  if (spec.parameter.empty()) throw ConfigError("sweep: no parameter given (use --param or a 'sweep' block)");
  const SweepReport rep = run_sweep(c, spec);
  std::cout << sweep_to_tsv(rep);
  return 0;
}

int cmd_table(const std::string& out, const std::string& reference, std::optional<double> significance) {
  const ComparisonTable t =
      rebuild_tables(out, reference.empty() ? std::nullopt : std::optional<std::string>(reference), significance);
  std::cout << table_to_tsv(t);
  return 0;
}

int cmd_traces(const std::string& out, const std::string& normalize, int points) {
  const ExperimentResult res = load_result(out);
  const TraceAxis axis = normalize == "fraction" ? TraceAxis::fraction : TraceAxis::raw;
  for (const auto& f : export_traces(res, out, axis, points)) std::cout << f.string() << "\n";
  if (!res.ok()) {
    std::cerr << res.failures.size() << " record(s) missing; traces cover the remaining runs\n";
    return 1;
  }
  return 0;
}

int cmd_list_problems(const std::string& manifest, std::size_t dim) {
  std::vector<ManifestEntry> entries;
  if (manifest.starts_with("builtin:")) {
    const auto b = builtin_manifest(manifest.substr(8));
    if (!b) throw ConfigError("unknown builtin manifest '" + manifest + "' (smoke, desk6, all)");
    entries = *b;
  } else {
    entries = load_manifest(manifest);
  }
  entries = expand_manifest(entries, {dim});
  std::cout << "id\tbase\tdim\tsuite_seed\tbias\ttransform\n";
  for (const auto& e : entries) {
    (void)instantiate(e);  // reject entries that cannot be built
    std::cout << e.id << '\t' << e.base << '\t' << e.dim << '\t' << e.suite_seed << '\t' << format_double(e.bias)
              << '\t' << transform_name(e.transform) << '\n';
  }
  return 0;
}

int cmd_list_algorithms() {
  for (const auto& id : algorithm_ids()) std::cout << id << '\t' << algorithm_description(id) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"yiopt: stable-flight optimizer and benchmarking harness"};
  app.require_subcommand(1);

  CommonRunOptions run_opts;
  auto* run = app.add_subcommand("run", "run an experiment and print the comparison table");
  add_run_options(run, run_opts);

  CommonRunOptions sweep_opts;
  std::string sweep_param, sweep_target;
  std::vector<double> sweep_values;
  auto* sweep = app.add_subcommand("sweep", "vary one yi parameter and report win/tie/loss against the base");
  add_run_options(sweep, sweep_opts);
  sweep->add_option("--param", sweep_param, "sigma | i_min | i_max | alpha_stability | n_offspring");
  sweep->add_option("--values", sweep_values, "comma-separated values")->delimiter(',');
  sweep->add_option("--target", sweep_target, "name of the yi algorithm to vary (default: first yi)");

  std::string table_out, table_reference;
  std::optional<double> table_significance;
  auto* table = app.add_subcommand("table", "rebuild summary tables from stored records");
  table->add_option("-o,--out", table_out, "experiment output directory")->required()->check(CLI::ExistingDirectory);
  table->add_option("--reference", table_reference, "algorithm to compare against");
  table->add_option("--significance", table_significance, "one-tailed significance level")
      ->check(CLI::Range(0.0, 1.0));

  std::string traces_out, normalize = "raw";
  int points = 100;
  auto* traces = app.add_subcommand("traces", "export median/quartile convergence curves as CSV");
  traces->add_option("-o,--out", traces_out, "experiment output directory")->required()->check(CLI::ExistingDirectory);
  traces->add_option("--normalize", normalize, "x axis: raw eval counts or fraction of budget")
      ->check(CLI::IsMember({"raw", "fraction"}));
  traces->add_option("--points", points, "grid points per curve")->check(CLI::PositiveNumber);

  std::string manifest = "builtin:smoke";
  std::size_t dim = 10;
  auto* list_problems = app.add_subcommand("list-problems", "print the problems of a manifest");
  list_problems->add_option("--manifest", manifest, "builtin:<smoke|desk6|all> or a manifest file");
  list_problems->add_option("--dim", dim, "dimension substituted for '*'")->check(CLI::PositiveNumber);

  auto* list_algorithms = app.add_subcommand("list-algorithms", "print the available algorithm ids");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return cmd_run(run_opts);
    if (sweep->parsed()) return cmd_sweep(sweep_opts, sweep_param, sweep_values, sweep_target);
    if (table->parsed()) return cmd_table(table_out, table_reference, table_significance);
    if (traces->parsed()) return cmd_traces(traces_out, normalize, points);
    if (list_problems->parsed()) return cmd_list_problems(manifest, dim);
    if (list_algorithms->parsed()) return cmd_list_algorithms();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
