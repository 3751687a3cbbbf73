#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hdv/behavior.hpp"
#include "hdv/codebook.hpp"
#include "hdv/context.hpp"
#include "hdv/core.hpp"
#include "hdv/io.hpp"
#include "hdv/profile.hpp"
#include "hdv/style.hpp"
#include "hdv/text.hpp"

namespace py = pybind11;

namespace {

hdv::Seed seed_of(std::uint64_t value) { return hdv::Seed{value}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Bipolar MAP hypervector algebra and the developer-modeling "
            "layers built on it";

  // ----------------------------------------------------------- algebra --
  py::class_<hdv::Hypervector>(m, "Hypervector")
      .def_static(
          "from_components",
          [](const std::vector<std::int8_t>& components) {
            return hdv::Hypervector::from_components(components);
          },
          py::arg("components"))
      .def_property_readonly("dimension", &hdv::Hypervector::dimension)
      .def("__len__", &hdv::Hypervector::dimension)
      .def("__getitem__",
           [](const hdv::Hypervector& v, std::size_t i) {
             if (i >= v.dimension()) throw py::index_error();
             return v[i];
           })
      .def("components",
           [](const hdv::Hypervector& v) {
             return std::vector<std::int8_t>(v.components().begin(),
                                             v.components().end());
           })
      .def("__eq__", [](const hdv::Hypervector& a,
                        const hdv::Hypervector& b) { return a == b; });

  py::class_<hdv::Accumulator>(m, "Accumulator")
      .def(py::init<std::size_t>(), py::arg("dimension"))
      .def_static(
          "from_sums",
          [](const std::vector<std::int32_t>& sums, std::int64_t count) {
            return hdv::Accumulator::from_sums(sums, count);
          },
          py::arg("sums"), py::arg("count"))
      .def("add", &hdv::Accumulator::add, py::arg("vector"))
      .def("merge", &hdv::Accumulator::merge, py::arg("other"))
      .def_property_readonly("dimension", &hdv::Accumulator::dimension)
      .def_property_readonly("count", &hdv::Accumulator::count)
      .def("sums", [](const hdv::Accumulator& acc) {
        return std::vector<std::int32_t>(acc.sums().begin(), acc.sums().end());
      });

  m.def(
      "generate",
      [](const std::string& name, std::uint64_t seed, std::size_t dimension) {
        return hdv::generate(name, seed_of(seed), dimension);
      },
      py::arg("name"), py::arg("seed"), py::arg("dimension"),
      "Deterministic quasi-orthogonal vector for a symbol name");
  m.def("bind", &hdv::bind, py::arg("a"), py::arg("b"),
        "Componentwise product; self-inverse");
  m.def("permute", &hdv::permute, py::arg("a"), py::arg("k"),
        "Cyclic rotation right by k");
  m.def("dot", &hdv::dot, py::arg("a"), py::arg("b"));
  m.def("similarity", &hdv::similarity, py::arg("a"), py::arg("b"),
        "Cosine similarity, dot/D");
  m.def(
      "normalize",
      [](const hdv::Accumulator& acc, std::uint64_t seed) {
        return hdv::normalize(acc, seed_of(seed));
      },
      py::arg("accumulator"), py::arg("seed"),
      "Sign of each sum; zero sums take the bundle's tie-break vector");
  m.def("default_tau", &hdv::default_tau, py::arg("dimension"),
        "4/sqrt(D), the 4-sigma null-similarity threshold");

  // --------------------------------------------------------- codebooks --
  py::class_<hdv::CleanupResult>(m, "CleanupResult")
      .def_readonly("name", &hdv::CleanupResult::name)
      .def_readonly("score", &hdv::CleanupResult::score)
      .def_readonly("runner_up_score", &hdv::CleanupResult::runner_up_score)
      .def_readonly("confident", &hdv::CleanupResult::confident)
      .def("__repr__", [](const hdv::CleanupResult& r) {
        return "CleanupResult(name='" + r.name + "', score=" + std::to_string(r.score) +
               ", confident=" + (r.confident ? "True" : "False") + ")";
      });

  py::class_<hdv::Codebook>(m, "Codebook")
      .def(py::init([](const std::string& kind, std::uint64_t seed,
                       std::size_t dimension) {
             return hdv::Codebook(hdv::codebook_kind_from_string(kind),
                                  seed_of(seed), dimension);
           }),
           py::arg("kind"), py::arg("seed"), py::arg("dimension"))
      .def("register", &hdv::Codebook::register_name, py::arg("name"))
      .def("contains", &hdv::Codebook::contains, py::arg("name"))
      .def("vector_of", &hdv::Codebook::vector_of, py::arg("name"),
           py::return_value_policy::reference_internal)
      .def("cleanup", &hdv::Codebook::cleanup, py::arg("query"), py::arg("tau"))
      .def_property_readonly("names", &hdv::Codebook::names)
      .def_property_readonly(
          "kind",
          [](const hdv::Codebook& cb) { return std::string(to_string(cb.kind())); })
      .def_property_readonly("seed",
                             [](const hdv::Codebook& cb) { return cb.seed().value; })
      .def_property_readonly("dimension", &hdv::Codebook::dimension)
      .def("__len__", &hdv::Codebook::size);

  // ---------------------------------------------------------- behavior --
  py::class_<hdv::ActionEvent>(m, "ActionEvent")
      .def(py::init<std::int64_t, std::string, std::string>(),
           py::arg("timestamp_ms"), py::arg("session"), py::arg("action"))
      .def_readwrite("timestamp_ms", &hdv::ActionEvent::timestamp_ms)
      .def_readwrite("session", &hdv::ActionEvent::session)
      .def_readwrite("action", &hdv::ActionEvent::action);

  py::class_<hdv::TrainReport>(m, "TrainReport")
      .def_readonly("sessions_total", &hdv::TrainReport::sessions_total)
      .def_readonly("sessions_skipped", &hdv::TrainReport::sessions_skipped)
      .def_readonly("windows", &hdv::TrainReport::windows)
      .def_readonly("warnings", &hdv::TrainReport::warnings);

  py::class_<hdv::SequenceModel>(m, "SequenceModel")
      .def_readonly("n", &hdv::SequenceModel::n)
      .def_readonly("behavior", &hdv::SequenceModel::behavior)
      .def_readonly("actions", &hdv::SequenceModel::actions)
      .def_property_readonly("windows_trained", &hdv::SequenceModel::windows_trained);

  m.def("encode_window", &hdv::encode_window, py::arg("actions"), py::arg("codebook"));
  m.def(
      "train",
      [](const std::vector<hdv::ActionEvent>& events, int n, const hdv::Codebook& actions) {
        hdv::TrainReport report;
        auto model = hdv::train(events, n, actions, &report);
        return std::make_pair(std::move(model), std::move(report));
      },
      py::arg("events"), py::arg("n"), py::arg("actions"),
      "Returns (SequenceModel, TrainReport)");
  m.def("predict", &hdv::predict, py::arg("model"), py::arg("prefix"), py::arg("tau"),
        py::arg("normalize_bundle") = true);
  m.def("merge", &hdv::merge, py::arg("a"), py::arg("b"));

  // ----------------------------------------------------- style/context --
  py::class_<hdv::Profile>(m, "Profile")
      .def_readonly("pairs", &hdv::Profile::pairs)
      .def_readonly("encoding", &hdv::Profile::encoding)
      .def_property_readonly("dimension", &hdv::Profile::dimension)
      .def_property_readonly("seed",
                             [](const hdv::Profile& p) { return p.seed().value; });

  py::class_<hdv::StyleMapping>(m, "StyleMapping")
      .def_readonly("map_vector", &hdv::StyleMapping::map_vector)
      .def_readonly("source", &hdv::StyleMapping::source)
      .def_readonly("target", &hdv::StyleMapping::target);

  py::class_<hdv::AttributeResolution>(m, "AttributeResolution")
      .def_readonly("attribute", &hdv::AttributeResolution::attribute)
      .def_readonly("from_value", &hdv::AttributeResolution::from_value)
      .def_readonly("to_value", &hdv::AttributeResolution::to_value)
      .def_readonly("score", &hdv::AttributeResolution::score)
      .def_readonly("confident", &hdv::AttributeResolution::confident)
      .def_readonly("applied", &hdv::AttributeResolution::applied);

  py::class_<hdv::RestyleOutcome>(m, "RestyleOutcome")
      .def_readonly("text", &hdv::RestyleOutcome::text)
      .def_readonly("attributes", &hdv::RestyleOutcome::attributes);

  m.def(
      "build_style_profile",
      [](const std::vector<hdv::NamePair>& pairs, std::uint64_t seed,
         std::size_t dimension) {
        return hdv::build_profile(pairs, seed_of(seed), dimension);
      },
      py::arg("pairs"), py::arg("seed"), py::arg("dimension"));
  m.def("profile_vector", &hdv::profile_vector, py::arg("profile"));
  m.def("build_mapping", &hdv::build_mapping, py::arg("source"), py::arg("target"));
  m.def("translate_value", &hdv::translate_value, py::arg("value"), py::arg("mapping"),
        py::arg("value_codebook"), py::arg("tau"));
  m.def(
      "infer_style",
      [](const std::string& text, std::uint64_t seed, std::size_t dimension) {
        return hdv::infer_style(text, seed_of(seed), dimension);
      },
      py::arg("text"), py::arg("seed"), py::arg("dimension"));
  m.def("restyle", &hdv::restyle, py::arg("text"), py::arg("mapping"),
        py::arg("value_codebook"), py::arg("tau"));

  m.def(
      "encode_context",
      [](const std::vector<hdv::NamePair>& pairs, std::uint64_t seed,
         std::size_t dimension) {
        return hdv::encode_context(pairs, seed_of(seed), dimension);
      },
      py::arg("pairs"), py::arg("seed"), py::arg("dimension"));
  m.def(
      "query_role",
      [](const hdv::Profile& ctx, const std::string& role, double tau) {
        return hdv::query_role(ctx, role, ctx.values, tau);
      },
      py::arg("context"), py::arg("role"), py::arg("tau"),
      "Cleanup against the context's own filler codebook");
  m.def("context_similarity", &hdv::context_similarity, py::arg("a"), py::arg("b"));
  m.def("transition_map", &hdv::transition_map, py::arg("a"), py::arg("b"));

  // -------------------------------------------------------- persistence --
  m.def("save_codebook", &hdv::io::save_codebook, py::arg("codebook"), py::arg("path"));
  m.def("load_codebook", &hdv::io::load_codebook, py::arg("path"));
  m.def("save_model", &hdv::io::save_model, py::arg("model"), py::arg("path"));
  m.def("load_model", &hdv::io::load_model, py::arg("path"));
  m.def("save_profile", &hdv::io::save_profile, py::arg("profile"), py::arg("path"));
  m.def("load_style_profile", &hdv::io::load_style_profile, py::arg("path"));
  m.def("load_context_profile", &hdv::io::load_context_profile, py::arg("path"));
  m.def("read_action_log", &hdv::io::read_action_log, py::arg("path"));
  m.def("write_action_log", &hdv::io::write_action_log, py::arg("events"),
        py::arg("path"));
  m.def("parse_seed",
        [](const std::string& s) { return hdv::io::parse_seed(s); },
        py::arg("text"), "Decimal or 0x-prefixed hexadecimal");
}
