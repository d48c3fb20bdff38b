// CLI for the online-classification-with-predictions lab: play games, check
// analytic bounds, run the adversarial lower-bound construction, sweep a
// parameter axis, and report brute-force dimensions of a finite class.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "prescient/harness.hpp"

namespace {

using namespace prescient;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& dir, const std::string& name,
                const std::string& content) {
  if (dir.empty()) return;
  std::filesystem::create_directories(dir);
  std::ofstream out(std::filesystem::path(dir) / name, std::ios::binary);
  out << content;
}

struct CommonOpts {
  std::string config_path;
  std::string out_dir;
  std::uint64_t seed = 0;
  bool seed_set = false;
  int trials = 0;
  bool retain = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--config", opts.config_path, "game config JSON path")
      ->required();
  cmd->add_option("--out", opts.out_dir, "output directory");
  cmd->add_option("--seed", opts.seed, "master seed")
      ->each([&](const std::string&) { opts.seed_set = true; });
  cmd->add_option("--trials", opts.trials, "trial count override");
  cmd->add_flag("--retain-predictions", opts.retain,
                "retain full predicted sequences in memory");
}

GameConfig load_config(const CommonOpts& opts) {
  GameConfig cfg = GameConfig::from_json(read_file(opts.config_path));
  if (opts.seed_set) cfg.seed = opts.seed;
  if (const char* env = std::getenv("PRESCIENT_SEED"))
    cfg.seed = std::strtoull(env, nullptr, 10);
  if (opts.trials > 0) cfg.trials = opts.trials;
  if (opts.retain) cfg.retain_full_predictions = true;
  return cfg;
}

void print_bounds(const BoundReport& report) {
  for (const BoundRow& r : report.rows)
    std::cout << (r.pass ? "PASS " : "FAIL ") << r.name
              << "  analytic=" << r.analytic << "  measured=" << r.measured
              << "  se=" << r.se << (r.asserted ? "" : "  [info]") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"prescient: online classification with example predictions"};
  app.require_subcommand(1);

  CommonOpts run_opts, bounds_opts, lb_opts, sweep_opts;
  std::string dims_table_path;
  std::string sweep_axis = "k";
  std::string sweep_values = "0,1,3,7";
  bool sweep_k_sqrt = false;

  CLI::App* cmd_run = app.add_subcommand("run", "play games, dump round CSV");
  add_common(cmd_run, run_opts);
  CLI::App* cmd_bounds =
      app.add_subcommand("bounds", "play games and check analytic bounds");
  add_common(cmd_bounds, bounds_opts);
  CLI::App* cmd_lb =
      app.add_subcommand("lowerbound", "run the adversarial construction");
  add_common(cmd_lb, lb_opts);
  CLI::App* cmd_sweep = app.add_subcommand("sweep", "sweep k or T");
  add_common(cmd_sweep, sweep_opts);
  cmd_sweep->add_option("--axis", sweep_axis, "k or T");
  cmd_sweep->add_option("--values", sweep_values, "comma-separated axis values");
  cmd_sweep->add_flag("--k-sqrt", sweep_k_sqrt,
                      "couple k = ceil(sqrt(T)) along a T axis");
  CLI::App* cmd_dims =
      app.add_subcommand("dims", "brute-force dimensions of a finite class");
  cmd_dims->add_option("--table", dims_table_path, "finite table JSON path")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_run->parsed()) {
      const GameConfig cfg = load_config(run_opts);
      const RunReport report = run_game(cfg);
      write_file(run_opts.out_dir, "rounds.csv", transcript_csv(report));
      std::cout << "trials=" << report.trials.size()
                << " mean_expected_mistakes=" << report.mean_mistakes
                << " mean_regret=" << report.mean_regret
                << " mean_predictor_mistakes="
                << report.mean_predictor_mistakes << "\n";
      if (run_opts.out_dir.empty()) std::cout << transcript_csv(report);
      return 0;
    }
    if (cmd_bounds->parsed()) {
      const GameConfig cfg = load_config(bounds_opts);
      const RunReport report = run_game(cfg);
      const BoundReport bounds = evaluate_bounds(report);
      write_file(bounds_opts.out_dir, "rounds.csv", transcript_csv(report));
      write_file(bounds_opts.out_dir, "bounds.csv", bounds_csv(bounds));
      print_bounds(bounds);
      return bounds.all_pass() ? 0 : 1;
    }
    if (cmd_lb->parsed()) {
      const GameConfig cfg = load_config(lb_opts);
      const BoundReport bounds = run_lower_bound(cfg);
      write_file(lb_opts.out_dir, "bounds.csv", bounds_csv(bounds));
      print_bounds(bounds);
      return bounds.all_pass() ? 0 : 1;
    }
    if (cmd_sweep->parsed()) {
      const GameConfig cfg = load_config(sweep_opts);
      std::vector<long> values;
      std::stringstream ss(sweep_values);
      for (std::string item; std::getline(ss, item, ',');)
        values.push_back(std::stol(item));
      const SweepResult result = sweep(cfg, sweep_axis, values, sweep_k_sqrt);
      write_file(sweep_opts.out_dir, "sweep.csv", result.csv());
      write_file(sweep_opts.out_dir, "sweep.svg", result.svg());
      std::cout << result.csv();
      if (sweep_axis == "T")
        std::cout << "sublinear=" << (result.sublinear ? "yes" : "no") << "\n";
      return sweep_axis == "T" && !result.sublinear ? 1 : 0;
    }
    if (cmd_dims->parsed()) {
      const FiniteTable table = FiniteTable::from_json(read_file(dims_table_path));
      std::cout << "hypotheses=" << table.size()
                << " domain=" << table.domain_size() << "\n";
      std::cout << "vc=" << vc_dimension(table) << "\n";
      std::cout << "littlestone=" << littlestone_dimension(table) << "\n";
      std::cout << "natarajan=" << natarajan_dimension(table) << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
