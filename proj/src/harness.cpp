#include "pilp/harness.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

#include "json.hpp"
#include "pilp/infer.hpp"
#include "pilp/parser.hpp"

namespace pilp {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
  if (!out) throw Error("failed writing " + path.string());
}

template <typename F>
auto parse_file(const fs::path& path, F&& parse) {
  const std::string text = read_file(path);
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw Error(path.string() + ":" + e.what());
  } catch (const Error& e) {
    throw Error(path.string() + ": " + e.what());
  }
}

constexpr std::string_view kMetricsPrefix = "% metrics: ";

}  // namespace

Task read_task(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw Error(dir.string() + " is not a task directory");
  Task task;
  task.bias = parse_file(dir / "bias.pl", [](const std::string& t) { return parse_bias(t); });
  std::string head;
  const auto ids = parse_file(dir / "exs.pl", [&head](const std::string& t) { return parse_examples(t, head); });
  if (!head.empty() && head != task.bias.head.name) {
    throw Error((dir / "exs.pl").string() + ": examples use '" + head + "' but the bias declares head '" +
                task.bias.head.name + "'");
  }
  for (const auto& e : ids) {
    const fs::path facts = dir / "facts" / (e.id + ".pl");
    if (!fs::exists(facts)) throw Error("missing facts file " + facts.string() + " for example " + e.id);
    task.examples.push_back(
        ExampleRecord{e.id, e.label, parse_file(facts, [](const std::string& t) { return parse_facts(t); })});
  }
  return task;
}

void write_task(const fs::path& dir, const Task& task) {
  fs::create_directories(dir / "facts");
  write_file(dir / "bias.pl", print_bias(task.bias));
  std::vector<LabeledId> ids;
  for (const auto& e : task.examples) {
    ids.push_back({e.id, e.label});
    write_file(dir / "facts" / (e.id + ".pl"), print_facts(e.facts));
  }
  write_file(dir / "exs.pl", print_examples(ids, task.bias.head.name));
}

EvalReport evaluate_program(const Program& program, std::span<const ExampleRecord> examples,
                            const SearchSettings& settings, double threshold) {
  if (examples.empty()) throw Error("no examples to evaluate");
  EvalReport r;
  r.threshold = threshold;
  r.examples = examples.size();
  for (const auto& e : examples) {
    const GroundedExample g(e);
    const double p = settings.tester == TesterKind::Binary ? (evaluate_binary(program, g, settings.bk_threshold) ? 1.0 : 0.0)
                                                           : evaluate(program, g, settings.inference);
    r.predictions.push_back({e.id, e.label, p});
  }
  r.confusion = confusion(r.predictions, threshold);
  r.f1 = f1(r.confusion);
  r.bce = bce(r.predictions);
  return r;
}

namespace {

json settings_json(const SearchSettings& s) {
  json j;
  j["tester"] = to_string(s.tester);
  j["constrainer"] = to_string(s.constrainer);
  j["cost"] = to_string(s.cost);
  j["noise_level"] = s.noise_level;
  j["bk_threshold"] = s.bk_threshold;
  j["top_k"] = s.inference.top_k ? json(*s.inference.top_k) : json("inf");
  j["provenance"] = s.inference.provenance == Provenance::Basic ? "basic" : "noisy-or";
  j["seed"] = s.seed;
  return j;
}

json confusion_json(const Confusion& c) { return json{{"tp", c.tp}, {"fp", c.fp}, {"tn", c.tn}, {"fn", c.fn}}; }

}  // namespace

std::string format_result(const LearnResult& result, const SearchSettings& settings,
                          std::optional<double> wall_seconds) {
  json m;
  m["status"] = to_string(result.status);
  m["iterations"] = result.iterations;
  m["tested"] = result.tested;
  m["pruned"] = result.pruned;
  m["constraints"] = result.constraints;
  m["settings"] = settings_json(settings);
  if (!result.warnings.empty()) m["warnings"] = result.warnings;
  std::string text;
  if (result.best) {
    const ScoredProgram& b = *result.best;
    text = print_program(b.program);
    m["cost"] = b.cost;
    m["threshold"] = b.result.threshold;
    m["confusion"] = confusion_json(b.result.confusion);
    m["f1"] = f1(b.result.confusion);
    m["bce"] = bce(b.result.per_example);
    m["size"] = b.size;
  } else {
    text = "% no solution\n";
  }
  if (wall_seconds) m["wall_time_s"] = *wall_seconds;
  return text + std::string(kMetricsPrefix) + m.dump() + "\n";
}

std::optional<double> stored_threshold(std::string_view result_text) {
  std::size_t pos = 0;
  while (pos < result_text.size()) {
    std::size_t end = result_text.find('\n', pos);
    if (end == std::string_view::npos) end = result_text.size();
    const std::string_view line = result_text.substr(pos, end - pos);
    if (line.starts_with(kMetricsPrefix)) {
      const json m = json::parse(line.substr(kMetricsPrefix.size()), nullptr, false);
      if (m.is_object() && m.contains("threshold") && m["threshold"].is_number()) return m["threshold"].get<double>();
    }
    pos = end + 1;
  }
  return std::nullopt;
}

void BiasOverrides::apply(Bias& bias) const {
  if (max_vars) bias.max_vars = *max_vars;
  if (max_body) bias.max_body = *max_body;
  if (max_clauses) bias.max_clauses = *max_clauses;
}

int run_learn(const fs::path& task_dir, const SearchSettings& settings, const fs::path& out_path, std::ostream& log,
              const LearnOptions& options) {
  Task task;
  try {
    task = read_task(task_dir);
    options.bias.apply(task.bias);
  } catch (const Error& e) {
    log << "error: " << e.what() << "\n";
    return kExitMalformed;
  }
  const auto start = std::chrono::steady_clock::now();
  LearnResult result;
  try {
    result = learn(task, settings);
  } catch (const Error& e) {
    log << "error: " << e.what() << "\n";
    return kExitMalformed;
  }
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  for (const auto& w : result.warnings) log << "warning: " << w << "\n";
  try {
    if (!out_path.empty()) {
      write_file(out_path, format_result(result, settings, options.record_wall_time ? std::optional(wall) : std::nullopt));
    }
  } catch (const Error& e) {
    log << "error: " << e.what() << "\n";
    return kExitMalformed;
  }
  log << "status " << to_string(result.status) << ", tested " << result.tested << ", pruned " << result.pruned
      << ", wall time " << std::fixed << std::setprecision(3) << wall << " s\n";
  if (!result.best) {
    log << "error: no hypothesis was tested; no solution\n";
    return kExitNoSolution;
  }
  if (result.status == LearnStatus::Budget) log << "note: budget reached; reporting the best program so far\n";
  return kExitOk;
}

EvalReport run_eval(const fs::path& program_file, const fs::path& task_dir, const SearchSettings& settings,
                    std::optional<double> threshold) {
  const std::string text = read_file(program_file);
  const Program program = parse_file(program_file, [](const std::string& t) { return parse_program(t); });
  const Task task = read_task(task_dir);
  const double t = threshold ? *threshold : stored_threshold(text).value_or(0.5);
  return evaluate_program(program, task.examples, settings, t);
}

ModelSpec propper_model() {
  SearchSettings s;
  s.tester = TesterKind::Neurosymbolic;
  s.constrainer = ConstrainerKind::NoisyCombo;
  s.cost = CostKind::Bce;
  return {"propper", s};
}

ModelSpec binary_popper_model() {
  SearchSettings s;
  s.tester = TesterKind::Binary;
  s.bk_threshold = 0.5;
  s.constrainer = ConstrainerKind::Combo;
  s.cost = CostKind::Mdl;
  return {"binary-popper", s};
}

std::vector<SweepCell> summarize(std::span<const SweepRecord> records) {
  std::map<std::tuple<std::string, std::string, std::size_t>, std::vector<double>> groups;
  for (const auto& r : records) groups[{r.tier, r.model, r.train_size}].push_back(r.f1);
  std::vector<SweepCell> out;
  for (auto& [key, values] : groups) {
    std::sort(values.begin(), values.end());
    SweepCell c{std::get<0>(key), std::get<1>(key), std::get<2>(key), 0.0, 0.0, values.size()};
    double sum = 0.0;
    for (double v : values) sum += v;
    c.mean_f1 = sum / static_cast<double>(values.size());
    if (values.size() > 1) {
      double ss = 0.0;
      for (double v : values) ss += (v - c.mean_f1) * (v - c.mean_f1);
      c.std_f1 = std::sqrt(ss / static_cast<double>(values.size() - 1));
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string SweepReport::to_json() const {
  json j;
  j["records"] = json::array();
  for (const auto& r : records) {
    j["records"].push_back({{"tier", r.tier},
                            {"model", r.model},
                            {"train_size", r.train_size},
                            {"repetition", r.repetition},
                            {"seed", r.seed},
                            {"train_ids", r.train_ids},
                            {"program", r.program},
                            {"threshold", r.threshold},
                            {"test_confusion", confusion_json(r.test_confusion)},
                            {"f1", r.f1},
                            {"status", r.status}});
  }
  j["cells"] = json::array();
  for (const auto& c : cells) {
    j["cells"].push_back({{"tier", c.tier},
                          {"model", c.model},
                          {"train_size", c.train_size},
                          {"mean_f1", c.mean_f1},
                          {"std_f1", c.std_f1},
                          {"runs", c.runs}});
  }
  return j.dump(2) + "\n";
}

std::string SweepReport::table() const {
  std::vector<std::size_t> sizes;
  std::vector<std::pair<std::string, std::string>> rows;
  for (const auto& c : cells) {
    if (std::find(sizes.begin(), sizes.end(), c.train_size) == sizes.end()) sizes.push_back(c.train_size);
    const std::pair<std::string, std::string> row{c.tier, c.model};
    if (std::find(rows.begin(), rows.end(), row) == rows.end()) rows.push_back(row);
  }
  std::sort(sizes.begin(), sizes.end());
  std::ostringstream out;
  out << std::left << std::setw(14) << "tier" << std::setw(16) << "model";
  for (std::size_t s : sizes) out << std::setw(16) << ("n=" + std::to_string(s));
  out << "\n";
  for (const auto& [tier, model] : rows) {
    out << std::setw(14) << tier << std::setw(16) << model;
    for (std::size_t s : sizes) {
      auto it = std::find_if(cells.begin(), cells.end(), [&](const SweepCell& c) {
        return c.tier == tier && c.model == model && c.train_size == s;
      });
      std::ostringstream v;
      if (it != cells.end()) v << std::fixed << std::setprecision(3) << it->mean_f1 << " +- " << it->std_f1;
      out << std::setw(16) << v.str();
    }
    out << "\n";
  }
  return out.str();
}

namespace {

struct SweepJob {
  std::size_t tier;
  std::size_t size;
  std::size_t repetition;
  std::size_t model;
};

std::uint64_t split_seed(std::uint64_t base, std::size_t tier, std::size_t size, std::size_t rep) {
  std::seed_seq seq{static_cast<std::uint32_t>(base), static_cast<std::uint32_t>(base >> 32),
                    static_cast<std::uint32_t>(tier), static_cast<std::uint32_t>(size),
                    static_cast<std::uint32_t>(rep)};
  std::array<std::uint32_t, 2> out{};
  seq.generate(out.begin(), out.end());
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

}  // namespace

SweepReport run_sweep(const SceneConfig& base, const SweepGrid& grid) {
  std::vector<Task> datasets;
  for (std::size_t t = 0; t < grid.tiers.size(); ++t) {
    SceneConfig cfg = base;
    cfg.noise = noise_tier(grid.tiers[t]);
    cfg.seed = split_seed(grid.seed, t, 0, 0);
    Task task = synth_generate(cfg, grid.pool_per_class, grid.pool_per_class);
    if (grid.bias) task.bias = *grid.bias;
    datasets.push_back(std::move(task));
  }
  for (std::size_t n : grid.train_sizes) {
    if (n == 0 || n >= grid.pool_per_class) throw Error("train size must lie in [1, pool_per_class)");
  }

  std::vector<SweepJob> jobs;
  for (std::size_t t = 0; t < grid.tiers.size(); ++t) {
    for (std::size_t s = 0; s < grid.train_sizes.size(); ++s) {
      for (std::size_t r = 0; r < grid.repetitions; ++r) {
        for (std::size_t m = 0; m < grid.models.size(); ++m) jobs.push_back({t, s, r, m});
      }
    }
  }

  std::vector<SweepRecord> records(jobs.size());
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::string first_error;
  auto worker = [&] {
    for (std::size_t j = next++; j < jobs.size(); j = next++) {
      const SweepJob& job = jobs[j];
      const Task& data = datasets[job.tier];
      const std::size_t n = grid.train_sizes[job.size];
      SweepRecord& rec = records[j];
      rec.tier = grid.tiers[job.tier];
      rec.model = grid.models[job.model].name;
      rec.train_size = n;
      rec.repetition = job.repetition;
      rec.seed = split_seed(grid.seed, job.tier, n, job.repetition + 1);
      try {
        // Split by the generated class so every split has n scenes of each kind.
        std::vector<std::size_t> pos(grid.pool_per_class);
        std::vector<std::size_t> neg(grid.pool_per_class);
        std::iota(pos.begin(), pos.end(), 0);
        std::iota(neg.begin(), neg.end(), grid.pool_per_class);
        std::mt19937_64 rng(rec.seed);
        std::shuffle(pos.begin(), pos.end(), rng);
        std::shuffle(neg.begin(), neg.end(), rng);
        Task train{data.bias, {}};
        std::vector<ExampleRecord> test;
        for (std::size_t i = 0; i < grid.pool_per_class; ++i) {
          (i < n ? train.examples : test).push_back(data.examples[pos[i]]);
          (i < n ? train.examples : test).push_back(data.examples[neg[i]]);
        }
        for (const auto& e : train.examples) rec.train_ids.push_back(e.id);
        SearchSettings settings = grid.models[job.model].settings;
        settings.seed = rec.seed;
        const LearnResult result = learn(train, settings);
        rec.status = to_string(result.status);
        if (result.best) {
          rec.program = print_program(result.best->program);
          rec.threshold = result.best->result.threshold;
          const EvalReport ev = evaluate_program(result.best->program, test, settings, rec.threshold);
          rec.test_confusion = ev.confusion;
          rec.f1 = ev.f1;
        } else {
          std::size_t positives = 0;
          for (const auto& e : test) positives += e.label == Label::Positive ? 1 : 0;
          rec.test_confusion = Confusion{0, 0, test.size() - positives, positives};
        }
      } catch (const std::exception& e) {
        const std::lock_guard lock(error_mutex);
        if (first_error.empty()) first_error = e.what();
      }
    }
  };
  const std::size_t threads =
      std::max<std::size_t>(1, std::min(jobs.size(), grid.threads ? grid.threads : std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (std::size_t i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (!first_error.empty()) throw Error("sweep failed: " + first_error);

  SweepReport report;
  report.records = std::move(records);
  report.cells = summarize(report.records);
  return report;
}

}  // namespace pilp
