#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "pilp/harness.hpp"
#include "pilp/parser.hpp"

namespace {

struct SettingsFlags {
  std::string tester = "neurosymbolic";
  std::string constrainer = "noisycombo";
  std::string cost = "bce";
  double noise_level = 0.15;
  double bk_threshold = 0.5;
  std::string top_k = "3";
  std::string provenance = "basic";
  std::optional<std::size_t> max_iterations;
  std::optional<double> budget_seconds;
  std::uint64_t seed = 0;

  void add_to(CLI::App& app) {
    app.add_option("--tester", tester, "Hypothesis tester")
        ->check(CLI::IsMember({"neurosymbolic", "binary"}))
        ->capture_default_str();
    app.add_option("--constrainer", constrainer, "Constraint rule")
        ->check(CLI::IsMember({"combo", "noisycombo", "maxsynth"}))
        ->capture_default_str();
    app.add_option("--cost", cost, "Selection cost")->check(CLI::IsMember({"mdl", "bce"}))->capture_default_str();
    app.add_option("--noise-level", noise_level, "Tolerated share of covered negatives")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    app.add_option("--bk-threshold", bk_threshold, "Fact confidence cut-off of the binary tester")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    app.add_option("--top-k", top_k, "Proofs kept per query, or inf")->capture_default_str();
    app.add_option("--provenance", provenance, "Disjunction operator")
        ->check(CLI::IsMember({"basic", "noisy-or"}))
        ->capture_default_str();
    app.add_option("--max-iterations", max_iterations, "Stop after this many tested programs");
    app.add_option("--budget-seconds", budget_seconds, "Wall-clock budget")->check(CLI::NonNegativeNumber);
    app.add_option("--seed", seed, "Random seed")->capture_default_str();
  }

  pilp::SearchSettings build() const {
    pilp::SearchSettings s;
    s.tester = tester == "binary" ? pilp::TesterKind::Binary : pilp::TesterKind::Neurosymbolic;
    s.constrainer = constrainer == "combo"     ? pilp::ConstrainerKind::Combo
                    : constrainer == "maxsynth" ? pilp::ConstrainerKind::MaxSynth
                                                : pilp::ConstrainerKind::NoisyCombo;
    s.cost = cost == "mdl" ? pilp::CostKind::Mdl : pilp::CostKind::Bce;
    s.noise_level = noise_level;
    s.bk_threshold = bk_threshold;
    s.inference.provenance = provenance == "noisy-or" ? pilp::Provenance::NoisyOr : pilp::Provenance::Basic;
    if (top_k == "inf") {
      s.inference.top_k.reset();
    } else {
      std::size_t k = 0;
      const auto [ptr, ec] = std::from_chars(top_k.data(), top_k.data() + top_k.size(), k);
      if (ec != std::errc() || ptr != top_k.data() + top_k.size() || k == 0) {
        throw pilp::Error("--top-k expects a positive integer or 'inf'");
      }
      s.inference.top_k = k;
    }
    s.max_iterations = max_iterations;
    s.budget_seconds = budget_seconds;
    s.seed = seed;
    return s;
  }
};

struct BiasFlags {
  pilp::BiasOverrides overrides;

  void add_to(CLI::App& app) {
    app.add_option("--max-vars", overrides.max_vars, "Override the bias variable bound");
    app.add_option("--max-body", overrides.max_body, "Override the bias body-length bound");
    app.add_option("--max-clauses", overrides.max_clauses, "Override the bias clause bound");
  }
};

nlohmann::json report_json(const pilp::EvalReport& r) {
  return {{"f1", r.f1},
          {"tp", r.confusion.tp},
          {"fp", r.confusion.fp},
          {"tn", r.confusion.tn},
          {"fn", r.confusion.fn},
          {"bce", r.bce},
          {"threshold", r.threshold},
          {"examples", r.examples}};
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw pilp::Error("cannot write " + path.string());
  out << text;
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(',', start), text.size());
    if (end > start) out.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Probabilistic inductive logic programming"};
  app.require_subcommand(1);

  SettingsFlags settings;
  BiasFlags bias;

  auto* learn = app.add_subcommand("learn", "Learn a program from a task bundle");
  std::string task_dir;
  std::string out_path;
  bool record_wall = false;
  learn->add_option("task", task_dir, "Task bundle directory")->required();
  learn->add_option("--out", out_path, "Result file")->required();
  learn->add_flag("--record-wall-time", record_wall, "Add wall time to the metrics line");
  settings.add_to(*learn);
  bias.add_to(*learn);

  auto* eval = app.add_subcommand("eval", "Evaluate a program on a task bundle");
  std::string program_file;
  std::optional<double> threshold;
  eval->add_option("program", program_file, "Program or result file")->required();
  eval->add_option("task", task_dir, "Task bundle directory")->required();
  eval->add_option("--threshold", threshold, "Decision threshold")->check(CLI::Range(0.0, 1.0));
  eval->add_option("--out", out_path, "Write the metrics JSON here instead of stdout");
  settings.add_to(*eval);

  auto* synth = app.add_subcommand("synth", "Generate a synthetic noisy-scene task bundle");
  std::string tier = "easy";
  std::size_t n_pos = 20;
  std::size_t n_neg = 20;
  std::uint64_t synth_seed = 0;
  std::string relation_conf = "certain";
  std::string target_text;
  synth->add_option("out", out_path, "Bundle directory")->required();
  synth->add_option("--tier", tier, "Noise tier")
      ->check(CLI::IsMember(pilp::noise_tiers()))
      ->capture_default_str();
  synth->add_option("--n-pos", n_pos, "Positive scenes")->check(CLI::PositiveNumber)->capture_default_str();
  synth->add_option("--n-neg", n_neg, "Negative scenes")->check(CLI::PositiveNumber)->capture_default_str();
  synth->add_option("--seed", synth_seed, "Random seed")->capture_default_str();
  synth->add_option("--relation-confidence", relation_conf, "Relation fact confidence")
      ->check(CLI::IsMember({"certain", "margin"}))
      ->capture_default_str();
  synth->add_option("--target", target_text, "Target program text");

  auto* sweep = app.add_subcommand("sweep", "Run the noise-tier and training-size grid");
  std::string sizes = "1,2,4,8";
  std::string tiers = "easy,intermediate,hard";
  pilp::SweepGrid grid;
  std::string table_path;
  sweep->add_option("--out", out_path, "Report JSON file")->required();
  sweep->add_option("--table", table_path, "Also write the plain-text table here");
  sweep->add_option("--sizes", sizes, "Comma-separated training sizes per class")->capture_default_str();
  sweep->add_option("--tiers", tiers, "Comma-separated noise tiers")->capture_default_str();
  sweep->add_option("--repetitions", grid.repetitions, "Random splits per cell")->capture_default_str();
  sweep->add_option("--pool", grid.pool_per_class, "Examples per class in each dataset")->capture_default_str();
  sweep->add_option("--seed", grid.seed, "Random seed")->capture_default_str();
  sweep->add_option("--threads", grid.threads, "Worker threads, 0 for all cores")->capture_default_str();
  sweep->add_option("--max-vars", bias.overrides.max_vars, "Override the bias variable bound");
  sweep->add_option("--max-body", bias.overrides.max_body, "Override the bias body-length bound");
  sweep->add_option("--max-clauses", bias.overrides.max_clauses, "Override the bias clause bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? pilp::kExitOk : pilp::kExitMalformed;
  }

  try {
    if (learn->parsed()) {
      return pilp::run_learn(task_dir, settings.build(), out_path, std::cerr, {bias.overrides, record_wall});
    }
    if (eval->parsed()) {
      const auto report = pilp::run_eval(program_file, task_dir, settings.build(), threshold);
      const std::string text = report_json(report).dump(2) + "\n";
      if (out_path.empty()) {
        std::cout << text;
      } else {
        write_text(out_path, text);
      }
      return pilp::kExitOk;
    }
    if (synth->parsed()) {
      pilp::SceneConfig cfg;
      cfg.noise = pilp::noise_tier(tier);
      cfg.seed = synth_seed;
      cfg.relation_confidence =
          relation_conf == "margin" ? pilp::RelationConfidence::GeometricMargin : pilp::RelationConfidence::Certain;
      if (!target_text.empty()) cfg.target = pilp::parse_program_verbatim(target_text);
      pilp::write_task(out_path, pilp::synth_generate(cfg, n_pos, n_neg));
      return pilp::kExitOk;
    }
    if (sweep->parsed()) {
      grid.train_sizes.clear();
      for (const auto& s : split_csv(sizes)) grid.train_sizes.push_back(std::stoul(s));
      grid.tiers = split_csv(tiers);
      pilp::SceneConfig cfg;
      if (bias.overrides.max_vars || bias.overrides.max_body || bias.overrides.max_clauses) {
        pilp::Bias b = cfg.bias();
        bias.overrides.apply(b);
        grid.bias = b;
      }
      const auto report = pilp::run_sweep(cfg, grid);
      write_text(out_path, report.to_json());
      if (!table_path.empty()) write_text(table_path, report.table());
      std::cout << report.table();
      return pilp::kExitOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return pilp::kExitMalformed;
  }
  return pilp::kExitMalformed;
}
