// hdv: train, query, and evaluate MAP hypervector models from the shell.
//
// Exit codes: 0 success, 1 usage error, 2 data error (unreadable or
// malformed files, incompatible artifacts), 3 non-confident result under
// --strict.

#include <cmath>
#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hdv/behavior.hpp"
#include "hdv/codebook.hpp"
#include "hdv/context.hpp"
#include "hdv/core.hpp"
#include "hdv/harness.hpp"
#include "hdv/io.hpp"
#include "hdv/style.hpp"
#include "hdv/text.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitSuccess = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitNotConfident = 3;

// Usage-level mistakes discovered after flag parsing (wrong prefix length,
// malformed --pair syntax); reported like CLI11 errors, exit 1.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GlobalConfig {
  std::size_t dimension = 10000;
  std::string seed_text = "0x5EED5EED5EED5EED";
  double tau = -1.0;  // <0: derive 4/sqrt(D) from the artifact's dimension
  int n = 3;
  bool json = false;
  bool strict = false;
  bool verbose = false;

  [[nodiscard]] hdv::Seed seed() const { return {hdv::io::parse_seed(seed_text)}; }
  [[nodiscard]] double tau_for(std::size_t dimension_in_use) const {
    return tau >= 0.0 ? tau : hdv::default_tau(dimension_in_use);
  }
};

void echo_config(const GlobalConfig& cfg, std::size_t dimension, double tau) {
  if (!cfg.verbose) return;
  std::cerr << "config: dimension=" << dimension << " seed=" << cfg.seed().value
            << " tau=" << hdv::io::format_score(tau) << " n=" << cfg.n << "\n";
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::stringstream stream(s);
  while (std::getline(stream, item, ',')) out.push_back(item);
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(path + ": cannot open for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  out << text;
  if (!out) throw std::runtime_error(path + ": write failed");
}

void emit(const ordered_json& doc) { std::cout << doc.dump(2) << "\n"; }

// ---------------------------------------------------------------- train --

int run_train(const GlobalConfig& cfg, const std::string& log_path,
              const std::string& model_path) {
  echo_config(cfg, cfg.dimension, cfg.tau_for(cfg.dimension));
  const auto events = hdv::io::read_action_log(log_path);
  hdv::Codebook actions(hdv::CodebookKind::kAction, cfg.seed(), cfg.dimension);
  hdv::TrainReport report;
  const auto model = hdv::train(events, cfg.n, std::move(actions), &report);
  hdv::io::save_model(model, model_path);

  if (cfg.json) {
    emit(ordered_json{{"command", "train"},
                      {"n", model.n},
                      {"dimension", model.behavior.dimension()},
                      {"seed", std::to_string(model.actions.seed().value)},
                      {"sessions_total", report.sessions_total},
                      {"sessions_skipped", report.sessions_skipped},
                      {"windows", report.windows},
                      {"actions", model.actions.size()},
                      {"warnings", report.warnings},
                      {"model", model_path}});
  } else {
    for (const auto& w : report.warnings) std::cerr << "warning: " << w << "\n";
    std::cout << "trained: n=" << model.n << " dimension=" << model.behavior.dimension()
              << " actions=" << model.actions.size() << "\n";
    std::cout << "sessions: " << report.sessions_total << " ("
              << report.sessions_skipped << " skipped)\n";
    std::cout << "windows: " << report.windows << "\n";
    std::cout << "model written to " << model_path << "\n";
  }
  return kExitSuccess;
}

// -------------------------------------------------------------- predict --

int run_predict(const GlobalConfig& cfg, const std::string& model_path,
                const std::string& prefix_csv, bool raw_sums) {
  const auto model = hdv::io::load_model(model_path);
  const double tau = cfg.tau_for(model.behavior.dimension());
  echo_config(cfg, model.behavior.dimension(), tau);

  const auto prefix = split_csv(prefix_csv);
  const auto want = static_cast<std::size_t>(model.n - 1);
  if (prefix.size() != want) {
    throw UsageError("--prefix needs exactly n-1 = " + std::to_string(want) +
                     " comma-separated actions, got " + std::to_string(prefix.size()));
  }
  const auto result = hdv::predict(model, prefix, tau, !raw_sums);

  if (cfg.json) {
    emit(ordered_json{{"command", "predict"},
                      {"action", result.name},
                      {"score", result.score},
                      {"runner_up_score", result.runner_up_score},
                      {"confident", result.confident},
                      {"tau", tau}});
  } else {
    std::cout << "prediction: " << result.name << "\n";
    std::cout << "score: " << hdv::io::format_score(result.score) << "\n";
    if (result.runner_up_score >= -1.0 && model.actions.size() > 1) {
      std::cout << "runner_up_score: " << hdv::io::format_score(result.runner_up_score)
                << "\n";
    }
    std::cout << "confident: " << (result.confident ? "yes" : "no") << "\n";
  }
  return (cfg.strict && !result.confident) ? kExitNotConfident : kExitSuccess;
}

// ----------------------------------------------------------------- eval --

int run_eval(const GlobalConfig& cfg, const std::string& model_path,
             const std::string& log_path) {
  const auto model = hdv::io::load_model(model_path);
  echo_config(cfg, model.behavior.dimension(),
              cfg.tau_for(model.behavior.dimension()));
  const auto events = hdv::io::read_action_log(log_path);
  auto windows = hdv::session_windows(events, model.n);

  std::size_t skipped = 0;
  std::erase_if(windows, [&](const std::vector<std::string>& w) {
    for (const auto& a : w) {
      if (!model.actions.contains(a)) {
        ++skipped;
        return true;
      }
    }
    return false;
  });
  if (windows.empty()) {
    throw std::runtime_error(log_path + ": no evaluable windows (" +
                             std::to_string(skipped) + " with unknown actions)");
  }
  const auto row = hdv::evaluate(model, windows);

  if (cfg.json) {
    emit(ordered_json{{"command", "eval"},
                      {"windows", row.windows},
                      {"windows_skipped", skipped},
                      {"accuracy", row.accuracy},
                      {"mean_match_score", row.mean_match_score},
                      {"mean_top_distractor_score", row.mean_top_distractor_score}});
  } else {
    std::cout << "windows: " << row.windows << " (" << skipped << " skipped)\n";
    std::cout << "accuracy: " << hdv::io::format_score(row.accuracy) << "\n";
    std::cout << "mean_match_score: " << hdv::io::format_score(row.mean_match_score)
              << "\n";
    std::cout << "mean_top_distractor_score: "
              << hdv::io::format_score(row.mean_top_distractor_score) << "\n";
  }
  return kExitSuccess;
}

// ---------------------------------------------------------------- style --

int run_style_infer(const GlobalConfig& cfg, const std::string& in_path,
                    const std::string& out_path) {
  echo_config(cfg, cfg.dimension, cfg.tau_for(cfg.dimension));
  const auto text = read_text_file(in_path);
  if (text.empty()) throw std::runtime_error(in_path + ": empty file");
  const auto profile = hdv::infer_style(text, cfg.seed(), cfg.dimension);
  if (!out_path.empty()) hdv::io::save_profile(profile, out_path);

  if (cfg.json) {
    ordered_json pairs = ordered_json::object();
    for (const auto& [attr, value] : profile.pairs) pairs[attr] = value;
    ordered_json doc{{"command", "style infer"}, {"pairs", pairs}};
    if (!out_path.empty()) doc["profile"] = out_path;
    emit(doc);
  } else {
    if (profile.pairs.empty()) {
      std::cout << "no style evidence detected\n";
    } else {
      for (const auto& [attr, value] : profile.pairs) {
        std::cout << attr << ": " << value << "\n";
      }
    }
    if (!out_path.empty()) std::cout << "profile written to " << out_path << "\n";
  }
  return kExitSuccess;
}

int run_style_map(const GlobalConfig& cfg, const std::string& source_path,
                  const std::string& target_path, const std::string& out_path) {
  const auto source = hdv::io::load_style_profile(source_path);
  const auto target = hdv::io::load_style_profile(target_path);
  echo_config(cfg, source.dimension(), cfg.tau_for(source.dimension()));
  const auto mapping = hdv::build_mapping(source, target);
  hdv::io::save_mapping(mapping, "style", out_path);

  if (cfg.json) {
    emit(ordered_json{{"command", "style map"},
                      {"source", source_path},
                      {"target", target_path},
                      {"mapping", out_path}});
  } else {
    std::cout << "mapping written to " << out_path << "\n";
  }
  return kExitSuccess;
}

int run_style_translate(const GlobalConfig& cfg, const std::string& mapping_path,
                        const std::string& value) {
  const auto [mapping, kind] = hdv::io::load_mapping(mapping_path);
  const double tau = cfg.tau_for(mapping.map_vector.dimension());
  echo_config(cfg, mapping.map_vector.dimension(), tau);
  const auto result =
      hdv::translate_value(value, mapping, mapping.source.values, tau);

  if (cfg.json) {
    emit(ordered_json{{"command", "style translate"},
                      {"value", value},
                      {"translation", result.name},
                      {"score", result.score},
                      {"runner_up_score", result.runner_up_score},
                      {"confident", result.confident},
                      {"tau", tau}});
  } else {
    std::cout << "translation: " << result.name << "\n";
    std::cout << "score: " << hdv::io::format_score(result.score) << "\n";
    std::cout << "confident: " << (result.confident ? "yes" : "no") << "\n";
  }
  return (cfg.strict && !result.confident) ? kExitNotConfident : kExitSuccess;
}

int run_style_restyle(const GlobalConfig& cfg, const std::string& mapping_path,
                      const std::string& in_path, const std::string& out_path) {
  const auto [mapping, kind] = hdv::io::load_mapping(mapping_path);
  const double tau = cfg.tau_for(mapping.map_vector.dimension());
  echo_config(cfg, mapping.map_vector.dimension(), tau);
  const auto text = read_text_file(in_path);
  const auto outcome = hdv::restyle(text, mapping, mapping.source.values, tau);

  if (cfg.json) {
    ordered_json attrs = ordered_json::array();
    for (const auto& a : outcome.attributes) {
      attrs.push_back(ordered_json{{"attribute", a.attribute},
                                   {"from", a.from_value},
                                   {"to", a.to_value},
                                   {"score", a.score},
                                   {"confident", a.confident},
                                   {"applied", a.applied}});
    }
    ordered_json doc{{"command", "style restyle"}, {"attributes", attrs}};
    if (out_path.empty()) {
      doc["text"] = outcome.text;
    } else {
      write_text_file(out_path, outcome.text);
      doc["out"] = out_path;
    }
    emit(doc);
  } else {
    auto& report = out_path.empty() ? std::cerr : static_cast<std::ostream&>(std::cout);
    for (const auto& a : outcome.attributes) {
      report << a.attribute << ": " << a.from_value << " -> "
             << (a.to_value.empty() ? "?" : a.to_value) << " score "
             << hdv::io::format_score(a.score)
             << (a.applied ? " (applied)"
                           : (a.confident ? " (already matching)" : " (not confident)"))
             << "\n";
    }
    if (out_path.empty()) {
      std::cout << outcome.text;
    } else {
      write_text_file(out_path, outcome.text);
      report << "restyled text written to " << out_path << "\n";
    }
  }
  const bool all_confident = std::all_of(
      outcome.attributes.begin(), outcome.attributes.end(),
      [](const hdv::AttributeResolution& a) { return a.confident; });
  return (cfg.strict && !all_confident) ? kExitNotConfident : kExitSuccess;
}

// -------------------------------------------------------------- context --

std::vector<hdv::NamePair> parse_pairs(const std::vector<std::string>& raw) {
  std::vector<hdv::NamePair> pairs;
  for (const auto& item : raw) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size()) {
      throw UsageError("--pair expects ROLE=FILLER, got \"" + item + "\"");
    }
    pairs.emplace_back(item.substr(0, eq), item.substr(eq + 1));
  }
  return pairs;
}

int run_context_encode(const GlobalConfig& cfg, const std::vector<std::string>& raw_pairs,
                       const std::string& out_path) {
  echo_config(cfg, cfg.dimension, cfg.tau_for(cfg.dimension));
  const auto pairs = parse_pairs(raw_pairs);
  const auto ctx = hdv::encode_context(pairs, cfg.seed(), cfg.dimension);
  hdv::io::save_profile(ctx, out_path);

  if (cfg.json) {
    ordered_json jp = ordered_json::object();
    for (const auto& [role, filler] : ctx.pairs) jp[role] = filler;
    emit(ordered_json{{"command", "context encode"},
                      {"pairs", jp},
                      {"dimension", ctx.dimension()},
                      {"seed", std::to_string(ctx.seed().value)},
                      {"context", out_path}});
  } else {
    std::cout << "context with " << ctx.pairs.size() << " pairs written to "
              << out_path << "\n";
  }
  return kExitSuccess;
}

int run_context_query(const GlobalConfig& cfg, const std::string& context_path,
                      const std::string& role) {
  const auto ctx = hdv::io::load_context_profile(context_path);
  const double tau = cfg.tau_for(ctx.dimension());
  echo_config(cfg, ctx.dimension(), tau);
  const auto result = hdv::query_role(ctx, role, ctx.values, tau);

  if (cfg.json) {
    emit(ordered_json{{"command", "context query"},
                      {"role", role},
                      {"filler", result.name},
                      {"score", result.score},
                      {"runner_up_score", result.runner_up_score},
                      {"confident", result.confident},
                      {"tau", tau}});
  } else {
    std::cout << "filler: " << result.name << "\n";
    std::cout << "score: " << hdv::io::format_score(result.score) << "\n";
    std::cout << "confident: " << (result.confident ? "yes" : "no") << "\n";
  }
  return (cfg.strict && !result.confident) ? kExitNotConfident : kExitSuccess;
}

int run_context_diff(const GlobalConfig& cfg, const std::string& a_path,
                     const std::string& b_path) {
  const auto a = hdv::io::load_context_profile(a_path);
  const auto b = hdv::io::load_context_profile(b_path);
  echo_config(cfg, a.dimension(), cfg.tau_for(a.dimension()));
  const double sim = hdv::context_similarity(a, b);

  if (cfg.json) {
    emit(ordered_json{{"command", "context diff"},
                      {"a", a_path},
                      {"b", b_path},
                      {"similarity", sim}});
  } else {
    std::cout << "similarity: " << hdv::io::format_score(sim) << "\n";
  }
  return kExitSuccess;
}

int run_context_transition(const GlobalConfig& cfg, const std::string& from_path,
                           const std::string& to_path, const std::string& out_path) {
  const auto from = hdv::io::load_context_profile(from_path);
  const auto to = hdv::io::load_context_profile(to_path);
  echo_config(cfg, from.dimension(), cfg.tau_for(from.dimension()));
  const auto mapping = hdv::build_mapping(from, to);
  hdv::io::save_mapping(mapping, "context", out_path);

  if (cfg.json) {
    emit(ordered_json{{"command", "context transition"},
                      {"from", from_path},
                      {"to", to_path},
                      {"mapping", out_path}});
  } else {
    std::cout << "transition map written to " << out_path << "\n";
  }
  return kExitSuccess;
}

// ---------------------------------------------------------------- sweep --

hdv::SweepConfig parse_sweep_config(const std::string& path,
                                    const GlobalConfig& cfg) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(path + ": cannot open for reading");
  ordered_json doc;
  try {
    doc = ordered_json::parse(in);
  } catch (const ordered_json::parse_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }

  hdv::SweepConfig config;
  config.seed = cfg.seed().value;
  config.n = cfg.n;
  try {
    doc.at("dimensions").get_to(config.dimensions);
    doc.at("window_counts").get_to(config.window_counts);
    doc.at("noise_fractions").get_to(config.noise_fractions);
    if (doc.contains("alphabet_size")) doc.at("alphabet_size").get_to(config.alphabet_size);
    if (doc.contains("trials")) doc.at("trials").get_to(config.trials);
    if (doc.contains("n")) doc.at("n").get_to(config.n);
    if (doc.contains("seed")) {
      if (doc.at("seed").is_string()) {
        config.seed = hdv::io::parse_seed(doc.at("seed").get<std::string>());
      } else {
        config.seed = doc.at("seed").get<std::uint64_t>();
      }
    }
  } catch (const ordered_json::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
  return config;
}

int run_sweep(const GlobalConfig& cfg, const std::string& config_path,
              const std::string& out_path) {
  const auto config = parse_sweep_config(config_path, cfg);
  echo_config(cfg, cfg.dimension, cfg.tau_for(cfg.dimension));
  const auto report = hdv::sweep(config);
  const auto csv = hdv::to_csv(report);
  if (out_path.empty()) {
    std::cout << csv;
  } else {
    write_text_file(out_path, csv);
    std::cout << "sweep report written to " << out_path << "\n";
  }
  return kExitSuccess;
}

}  // namespace

int main(int argc, char** argv) {
  GlobalConfig cfg;

  CLI::App app{"MAP hypervector engine: developer action prediction, style "
               "mapping, and project-context queries"};
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--dimension", cfg.dimension, "Hypervector dimension")
      ->envname("HDV_DIMENSION")
      ->check(CLI::Range(std::size_t{2}, std::size_t{1} << 24));
  app.add_option("--seed", cfg.seed_text, "Global seed (decimal or 0x hex)")
      ->envname("HDV_SEED");
  app.add_option("--tau", cfg.tau, "Confidence threshold (default 4/sqrt(D))")
      ->envname("HDV_TAU");
  app.add_option("--n", cfg.n, "Window length for training")->check(CLI::Range(2, 16));
  app.add_flag("--json", cfg.json, "Machine-readable JSON output");
  app.add_flag("--strict", cfg.strict, "Exit 3 on non-confident results");
  app.add_flag("--verbose", cfg.verbose, "Echo the effective configuration");

  std::string log_path, model_path, prefix_csv, in_path, out_path;
  std::string source_path, target_path, mapping_path, value_name;
  std::string context_path, a_path, b_path, from_path, to_path, role_name;
  std::string sweep_config_path;
  std::vector<std::string> raw_pairs;
  bool raw_sums = false;

  auto* train = app.add_subcommand("train", "Train a sequence model from a JSONL action log");
  train->add_option("--log", log_path, "Action log (JSON lines)")->required();
  train->add_option("--model", model_path, "Output model file")->required();

  auto* predict = app.add_subcommand("predict", "Predict the next action for a prefix");
  predict->add_option("--model", model_path, "Model file")->required();
  predict->add_option("--prefix", prefix_csv, "Comma-separated n-1 actions")->required();
  predict->add_flag("--raw-sums", raw_sums, "Query the raw accumulator instead of the normalized bundle");

  auto* eval = app.add_subcommand("eval", "Score a model against a held-out action log");
  eval->add_option("--model", model_path, "Model file")->required();
  eval->add_option("--log", log_path, "Action log (JSON lines)")->required();

  auto* style = app.add_subcommand("style", "Stylistic-preference commands");
  style->require_subcommand(1);
  style->fallthrough();
  auto* style_infer = style->add_subcommand("infer", "Detect a style profile from source text");
  style_infer->fallthrough();
  style_infer->add_option("--in", in_path, "Source text file")->required();
  style_infer->add_option("--out", out_path, "Optional profile output file");
  auto* style_map = style->add_subcommand("map", "Build a style-to-style mapping");
  style_map->fallthrough();
  style_map->add_option("--source", source_path, "Source style profile")->required();
  style_map->add_option("--target", target_path, "Target style profile")->required();
  style_map->add_option("--out", out_path, "Mapping output file")->required();
  auto* style_translate = style->add_subcommand("translate", "Translate one style value through a mapping");
  style_translate->fallthrough();
  style_translate->add_option("--mapping", mapping_path, "Mapping file")->required();
  style_translate->add_option("--value", value_name, "Style value name")->required();
  auto* style_restyle = style->add_subcommand("restyle", "Rewrite text into the mapped style");
  style_restyle->fallthrough();
  style_restyle->add_option("--mapping", mapping_path, "Mapping file")->required();
  style_restyle->add_option("--in", in_path, "Source text file")->required();
  style_restyle->add_option("--out", out_path, "Output file (stdout when omitted)");

  auto* context = app.add_subcommand("context", "Project-context commands");
  context->require_subcommand(1);
  context->fallthrough();
  auto* context_encode = context->add_subcommand("encode", "Encode role=filler pairs into a context");
  context_encode->fallthrough();
  context_encode->add_option("--pair", raw_pairs, "ROLE=FILLER (repeatable)")->required();
  context_encode->add_option("--out", out_path, "Context output file")->required();
  auto* context_query = context->add_subcommand("query", "Recover the filler bound to a role");
  context_query->fallthrough();
  context_query->add_option("--context", context_path, "Context file")->required();
  context_query->add_option("--role", role_name, "Role name")->required();
  auto* context_diff = context->add_subcommand("diff", "Similarity of two contexts");
  context_diff->fallthrough();
  context_diff->add_option("--a", a_path, "First context file")->required();
  context_diff->add_option("--b", b_path, "Second context file")->required();
  auto* context_transition = context->add_subcommand("transition", "Build a context-to-context transition map");
  context_transition->fallthrough();
  context_transition->add_option("--from", from_path, "Source context file")->required();
  context_transition->add_option("--to", to_path, "Target context file")->required();
  context_transition->add_option("--out", out_path, "Mapping output file")->required();

  auto* sweep = app.add_subcommand("sweep", "Run a capacity/noise sweep from a JSON config");
  sweep->add_option("--config", sweep_config_path, "Sweep configuration (JSON)")->required();
  sweep->add_option("--out", out_path, "CSV output file (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitSuccess : kExitUsage;
  }

  try {
    if (*train) return run_train(cfg, log_path, model_path);
    if (*predict) return run_predict(cfg, model_path, prefix_csv, raw_sums);
    if (*eval) return run_eval(cfg, model_path, log_path);
    if (*style_infer) return run_style_infer(cfg, in_path, out_path);
    if (*style_map) return run_style_map(cfg, source_path, target_path, out_path);
    if (*style_translate) return run_style_translate(cfg, mapping_path, value_name);
    if (*style_restyle) return run_style_restyle(cfg, mapping_path, in_path, out_path);
    if (*context_encode) return run_context_encode(cfg, raw_pairs, out_path);
    if (*context_query) return run_context_query(cfg, context_path, role_name);
    if (*context_diff) return run_context_diff(cfg, a_path, b_path);
    if (*context_transition) return run_context_transition(cfg, from_path, to_path, out_path);
    if (*sweep) return run_sweep(cfg, sweep_config_path, out_path);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  std::cerr << "error: no subcommand selected\n";
  return kExitUsage;
}
