#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "pilp/harness.hpp"
#include "pilp/infer.hpp"
#include "pilp/parser.hpp"
#include "pilp/rewrite.hpp"
#include "pilp/score.hpp"
#include "pilp/search.hpp"

namespace py = pybind11;

namespace {

pilp::ExampleRecord make_example(const std::string& id, const std::string& facts_text, bool positive) {
  return {id, positive ? pilp::Label::Positive : pilp::Label::Negative, pilp::parse_facts(facts_text)};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Probabilistic inductive logic programming";

  const auto& error = py::register_exception<pilp::Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<pilp::ParseError>(m, "ParseError", error.ptr());

  py::enum_<pilp::Provenance>(m, "Provenance")
      .value("BASIC", pilp::Provenance::Basic)
      .value("NOISY_OR", pilp::Provenance::NoisyOr);
  py::enum_<pilp::TesterKind>(m, "Tester")
      .value("NEUROSYMBOLIC", pilp::TesterKind::Neurosymbolic)
      .value("BINARY", pilp::TesterKind::Binary);
  py::enum_<pilp::ConstrainerKind>(m, "Constrainer")
      .value("COMBO", pilp::ConstrainerKind::Combo)
      .value("NOISYCOMBO", pilp::ConstrainerKind::NoisyCombo)
      .value("MAXSYNTH", pilp::ConstrainerKind::MaxSynth);
  py::enum_<pilp::CostKind>(m, "Cost").value("MDL", pilp::CostKind::Mdl).value("BCE", pilp::CostKind::Bce);

  py::class_<pilp::InferenceConfig>(m, "InferenceConfig")
      .def(py::init<>())
      .def_readwrite("top_k", &pilp::InferenceConfig::top_k)
      .def_readwrite("provenance", &pilp::InferenceConfig::provenance)
      .def_readwrite("normalize", &pilp::InferenceConfig::normalize);

  py::class_<pilp::SearchSettings>(m, "SearchSettings")
      .def(py::init<>())
      .def_readwrite("constrainer", &pilp::SearchSettings::constrainer)
      .def_readwrite("cost", &pilp::SearchSettings::cost)
      .def_readwrite("tester", &pilp::SearchSettings::tester)
      .def_readwrite("noise_level", &pilp::SearchSettings::noise_level)
      .def_readwrite("bk_threshold", &pilp::SearchSettings::bk_threshold)
      .def_readwrite("inference", &pilp::SearchSettings::inference)
      .def_readwrite("max_iterations", &pilp::SearchSettings::max_iterations)
      .def_readwrite("budget_seconds", &pilp::SearchSettings::budget_seconds)
      .def_readwrite("seed", &pilp::SearchSettings::seed);

  py::class_<pilp::Program>(m, "Program")
      .def(py::init([](const std::string& text) { return pilp::parse_program(text); }), py::arg("text"))
      .def_property_readonly("size", [](const pilp::Program& p) { return pilp::program_size(p); })
      .def_property_readonly("num_clauses", [](const pilp::Program& p) { return p.clauses().size(); })
      .def("specializes", [](const pilp::Program& a, const pilp::Program& b) { return pilp::program_specializes(a, b); })
      .def("__eq__", [](const pilp::Program& a, const pilp::Program& b) { return a == b; })
      .def("__str__", [](const pilp::Program& p) { return pilp::print_program(p); })
      .def("__repr__", [](const pilp::Program& p) { return "Program(" + py::repr(py::str(pilp::print_program(p))).cast<std::string>() + ")"; });

  m.def("canonicalize", [](const std::string& clause) { return pilp::print_program(pilp::parse_program(clause)); },
        py::arg("clause"));
  m.def(
      "theta_subsumes",
      [](const std::string& general, const std::string& specific) {
        return pilp::theta_subsumes(pilp::parse_program_verbatim(general).clauses().front(),
                                    pilp::parse_program_verbatim(specific).clauses().front());
      },
      py::arg("general"), py::arg("specific"));
  m.def(
      "normalize",
      [](const std::string& program, const std::string& name) {
        return pilp::render_normalized(pilp::normalize(pilp::parse_program_verbatim(program)), name);
      },
      py::arg("program"), py::arg("name") = "g");
  m.def(
      "evaluate",
      [](const pilp::Program& program, const std::string& facts, const std::string& example,
         const pilp::InferenceConfig& config) {
        return pilp::evaluate(program, make_example(example, facts, true), config);
      },
      py::arg("program"), py::arg("facts"), py::arg("example"), py::arg("config") = pilp::InferenceConfig{});
  m.def(
      "evaluate_binary",
      [](const pilp::Program& program, const std::string& facts, const std::string& example, double threshold) {
        return pilp::evaluate_binary(program, make_example(example, facts, true), threshold);
      },
      py::arg("program"), py::arg("facts"), py::arg("example"), py::arg("bk_threshold") = 0.5);

  m.def(
      "bce",
      [](const std::vector<std::pair<int, double>>& pairs) {
        std::vector<pilp::Prediction> preds;
        for (const auto& [label, prob] : pairs) {
          preds.push_back({"", label ? pilp::Label::Positive : pilp::Label::Negative, prob});
        }
        return pilp::bce(preds);
      },
      py::arg("pairs"), "Mean binary cross-entropy of (label, probability) pairs.");
  m.def(
      "mdl", [](const pilp::Program& p, std::size_t fn, std::size_t fp) { return pilp::mdl(p, {0, fp, 0, fn}); },
      py::arg("program"), py::arg("fn"), py::arg("fp"));
  m.def(
      "select_threshold",
      [](const std::vector<std::pair<int, double>>& pairs) {
        std::vector<pilp::Prediction> preds;
        for (const auto& [label, prob] : pairs) {
          preds.push_back({"", label ? pilp::Label::Positive : pilp::Label::Negative, prob});
        }
        return pilp::select_threshold(preds);
      },
      py::arg("pairs"));

  m.def(
      "synth",
      [](const std::filesystem::path& out, const std::string& tier, std::size_t n_pos, std::size_t n_neg,
         std::uint64_t seed) {
        pilp::SceneConfig cfg;
        cfg.noise = pilp::noise_tier(tier);
        cfg.seed = seed;
        pilp::write_task(out, pilp::synth_generate(cfg, n_pos, n_neg));
      },
      py::arg("out"), py::arg("tier") = "easy", py::arg("n_pos") = 20, py::arg("n_neg") = 20, py::arg("seed") = 0);

  m.def(
      "learn",
      [](const std::filesystem::path& task_dir, const std::filesystem::path& out,
         const pilp::SearchSettings& settings) {
        std::ostringstream log;
        int code = 0;
        {
          py::gil_scoped_release release;
          code = pilp::run_learn(task_dir, settings, out, log);
        }
        return py::make_tuple(code, log.str());
      },
      py::arg("task_dir"), py::arg("out"), py::arg("settings") = pilp::SearchSettings{},
      "Runs the learner on a bundle; returns (exit_code, log).");

  m.def(
      "evaluate_file",
      [](const std::filesystem::path& program_file, const std::filesystem::path& task_dir,
         const pilp::SearchSettings& settings, std::optional<double> threshold) {
        const auto r = pilp::run_eval(program_file, task_dir, settings, threshold);
        py::dict d;
        d["f1"] = r.f1;
        d["tp"] = r.confusion.tp;
        d["fp"] = r.confusion.fp;
        d["tn"] = r.confusion.tn;
        d["fn"] = r.confusion.fn;
        d["bce"] = r.bce;
        d["threshold"] = r.threshold;
        d["examples"] = r.examples;
        return d;
      },
      py::arg("program_file"), py::arg("task_dir"), py::arg("settings") = pilp::SearchSettings{},
      py::arg("threshold") = py::none());

  m.attr("__version__") = PILP_VERSION;
}
