#include "hdv/harness.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "hdv/core.hpp"

namespace hdv {

namespace {

// Uniform index in [0, n) by inverse CDF on one SplitMix64 draw. Avoids
// std::uniform_int_distribution, whose output is not pinned down by the
// standard and differs across library implementations.
std::size_t draw_index(std::uint64_t& state, std::size_t n) {
  const double u = detail::splitmix64_unit(state);
  const auto idx = static_cast<std::size_t>(u * static_cast<double>(n));
  return idx < n ? idx : n - 1;
}

// One Markov step: walk the row CDF with a single uniform draw.
std::size_t draw_row(std::uint64_t& state, const std::vector<double>& row) {
  const double u = detail::splitmix64_unit(state);
  double cum = 0.0;
  for (std::size_t j = 0; j < row.size(); ++j) {
    cum += row[j];
    if (u < cum) return j;
  }
  return row.size() - 1;
}

std::string fmt6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string fmt_hex(std::uint64_t v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "0x%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace

void validate(const MarkovGenerator& gen) {
  if (gen.alphabet.empty()) {
    throw std::invalid_argument("markov generator: empty alphabet");
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& name : gen.alphabet) {
    if (name.empty()) {
      throw std::invalid_argument("markov generator: empty action name");
    }
    if (!seen.insert(name).second) {
      throw std::invalid_argument("markov generator: duplicate action \"" + name + "\"");
    }
  }
  if (gen.transition.size() != gen.alphabet.size()) {
    throw std::invalid_argument(
        "markov generator: transition matrix needs one row per action");
  }
  for (std::size_t i = 0; i < gen.transition.size(); ++i) {
    const auto& row = gen.transition[i];
    if (row.size() != gen.alphabet.size()) {
      throw std::invalid_argument("markov generator: transition row " +
                                  std::to_string(i) + " has wrong width");
    }
    double sum = 0.0;
    for (double p : row) {
      if (!(p >= 0.0)) {
        throw std::invalid_argument(
            "markov generator: negative or NaN probability in row " + std::to_string(i));
      }
      sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
      throw std::invalid_argument("markov generator: row " + std::to_string(i) +
                                  " sums to " + std::to_string(sum) + ", expected 1");
    }
  }
}

std::vector<ActionEvent> generate_sessions(const MarkovGenerator& gen,
                                           std::size_t sessions, std::size_t length) {
  validate(gen);
  if (sessions == 0 || length == 0) {
    throw std::invalid_argument("generate_sessions: counts must be >= 1");
  }

  // Fixed epoch base keeps the streams looking like real logs while staying
  // fully determined by (seed, sessions, length).
  constexpr std::int64_t kEpochBase = 1700000000000;
  constexpr std::int64_t kSessionGap = 3600000;
  constexpr std::int64_t kStep = 1000;

  std::vector<ActionEvent> events;
  events.reserve(sessions * length);
  std::uint64_t state = gen.seed;
  for (std::size_t s = 0; s < sessions; ++s) {
    const std::string session = "session-" + std::to_string(s);
    std::int64_t t = kEpochBase + static_cast<std::int64_t>(s) * kSessionGap;
    std::size_t current = draw_index(state, gen.alphabet.size());
    for (std::size_t e = 0; e < length; ++e) {
      if (e > 0) current = draw_row(state, gen.transition[current]);
      events.push_back({t, session, gen.alphabet[current]});
      t += kStep;
    }
  }
  return events;
}

SweepRow evaluate(const SequenceModel& model,
                  const std::vector<std::vector<std::string>>& windows) {
  if (model.behavior.count() == 0) {
    throw std::invalid_argument("evaluate: model has no trained windows");
  }
  if (windows.empty()) {
    throw std::invalid_argument("evaluate: no windows to evaluate");
  }
  const auto n = static_cast<std::size_t>(model.n);
  const std::size_t dim = model.behavior.dimension();
  const auto& names = model.actions.names();

  // Hoist the sign-normalized bundle; every query unbinds against it.
  const Hypervector bundle = normalize(model.behavior, model.actions.seed());

  std::size_t correct = 0;
  double match_sum = 0.0;
  double distractor_sum = 0.0;
  std::vector<std::string> prefix(n - 1);
  for (const auto& window : windows) {
    if (window.size() != n) {
      throw std::invalid_argument("evaluate: window length " +
                                  std::to_string(window.size()) +
                                  " does not match model n=" + std::to_string(n));
    }
    const std::string& truth = window.back();
    if (!model.actions.contains(truth)) {
      throw std::invalid_argument("evaluate: unknown action \"" + truth + "\"");
    }
    std::copy(window.begin(), window.end() - 1, prefix.begin());
    const Hypervector query = permute(encode_window(prefix, model.actions), 1);
    const Hypervector unbound = bind(bundle, query);

    // Same argmax rule as prediction: exact integer dots, ties to the
    // lexicographically smaller name.
    std::int64_t truth_dot = 0;
    std::int64_t best_other = std::numeric_limits<std::int64_t>::min();
    std::size_t best_idx = 0;
    std::int64_t best_dot = std::numeric_limits<std::int64_t>::min();
    for (std::size_t i = 0; i < names.size(); ++i) {
      const std::int64_t d = dot(unbound, model.actions.vector_of(names[i]));
      if (d > best_dot || (d == best_dot && names[i] < names[best_idx])) {
        best_dot = d;
        best_idx = i;
      }
      if (names[i] == truth) {
        truth_dot = d;
      } else if (d > best_other) {
        best_other = d;
      }
    }
    if (names[best_idx] == truth) ++correct;
    match_sum += static_cast<double>(truth_dot) / static_cast<double>(dim);
    distractor_sum += static_cast<double>(best_other) / static_cast<double>(dim);
  }

  SweepRow row;
  row.dimension = dim;
  row.alphabet_size = names.size();
  row.windows = windows.size();
  row.noise_fraction = 0.0;
  row.trials = 1;
  row.accuracy = static_cast<double>(correct) / static_cast<double>(windows.size());
  row.mean_match_score = match_sum / static_cast<double>(windows.size());
  row.mean_top_distractor_score = distractor_sum / static_cast<double>(windows.size());
  return row;
}

namespace {

// Functional seed for one stream of one sweep trial. Depends only on the
// cell coordinates, the trial index, and the config seed, so cells can be
// evaluated in any order (or in parallel) without changing the report.
std::uint64_t trial_seed(const SweepConfig& config, std::size_t dimension,
                         std::size_t windows, double noise, std::size_t trial,
                         std::string_view stream) {
  std::string desc = "sweep|D=" + std::to_string(dimension) +
                     "|K=" + std::to_string(windows) +
                     "|f=" + std::to_string(std::bit_cast<std::uint64_t>(noise)) +
                     "|t=" + std::to_string(trial) + "|" + std::string(stream);
  return detail::fnv1a64(desc) ^ config.seed;
}

// Zero-padded action names so lexicographic order equals numeric order.
std::string action_name(std::size_t i, int width) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "a%0*zu", width, i);
  return buf;
}

// K distinct prefixes, each as n-1 alphabet indices. Dense prefix spaces
// are partially Fisher-Yates shuffled; sparse ones use rejection sampling.
std::vector<std::vector<std::size_t>> sample_prefixes(std::uint64_t& rng,
                                                      std::size_t alphabet,
                                                      std::size_t positions,
                                                      std::size_t k) {
  std::uint64_t cap = 1;
  bool huge = false;
  for (std::size_t i = 0; i < positions; ++i) {
    if (cap > std::numeric_limits<std::uint64_t>::max() / alphabet) {
      huge = true;
      break;
    }
    cap *= alphabet;
  }
  if (!huge && k > cap) {
    throw std::invalid_argument("sweep: " + std::to_string(k) +
                                " windows requested but only " + std::to_string(cap) +
                                " distinct prefixes exist");
  }

  std::vector<std::vector<std::size_t>> out;
  out.reserve(k);
  if (!huge && cap <= std::max<std::uint64_t>(4 * k, 1024)) {
    std::vector<std::uint64_t> codes(cap);
    std::iota(codes.begin(), codes.end(), std::uint64_t{0});
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t pick = j + draw_index(rng, cap - j);
      std::swap(codes[j], codes[pick]);
      std::uint64_t code = codes[j];
      std::vector<std::size_t> digits(positions);
      for (std::size_t i = positions; i-- > 0;) {
        digits[i] = code % alphabet;
        code /= alphabet;
      }
      out.push_back(std::move(digits));
    }
  } else {
    std::unordered_set<std::string> seen;
    while (out.size() < k) {
      std::vector<std::size_t> digits(positions);
      std::string key;
      for (auto& d : digits) {
        d = draw_index(rng, alphabet);
        key += std::to_string(d);
        key += ',';
      }
      if (seen.insert(std::move(key)).second) out.push_back(std::move(digits));
    }
  }
  return out;
}

struct TrialScores {
  double accuracy = 0.0;
  double match = 0.0;
  double distractor = 0.0;
};

TrialScores run_trial(const SweepConfig& config, std::size_t dimension,
                      std::size_t window_count, double noise, std::size_t trial,
                      int name_width) {
  const auto n = static_cast<std::size_t>(config.n);
  const Seed atom_seed{trial_seed(config, dimension, window_count, noise, trial, "atoms")};
  std::uint64_t rng = trial_seed(config, dimension, window_count, noise, trial, "rng");

  Codebook actions(CodebookKind::kAction, atom_seed, dimension);
  for (std::size_t i = 0; i < config.alphabet_size; ++i) {
    actions.register_name(action_name(i, name_width));
  }
  const auto& names = actions.names();

  const auto prefixes = sample_prefixes(rng, config.alphabet_size, n - 1, window_count);
  const auto flips = static_cast<std::size_t>(
      std::llround(noise * static_cast<double>(dimension)));

  Accumulator acc(dimension);
  std::vector<std::vector<std::string>> windows;
  windows.reserve(window_count);
  std::vector<std::uint32_t> flip_pool(dimension);
  for (const auto& prefix : prefixes) {
    std::vector<std::string> window;
    window.reserve(n);
    for (std::size_t idx : prefix) window.push_back(names[idx]);
    window.push_back(names[draw_index(rng, config.alphabet_size)]);

    Hypervector enc = encode_window(window, actions);
    if (flips > 0) {
      // Flip exactly `flips` distinct components before bundling.
      std::vector<std::int8_t> comp(enc.components().begin(), enc.components().end());
      std::iota(flip_pool.begin(), flip_pool.end(), 0u);
      for (std::size_t j = 0; j < flips; ++j) {
        const std::size_t pick = j + draw_index(rng, dimension - j);
        std::swap(flip_pool[j], flip_pool[pick]);
        comp[flip_pool[j]] = static_cast<std::int8_t>(-comp[flip_pool[j]]);
      }
      enc = Hypervector::from_components(std::move(comp));
    }
    acc.add(enc);
    windows.push_back(std::move(window));
  }

  SequenceModel model{config.n, std::move(acc), std::move(actions)};
  const SweepRow row = evaluate(model, windows);
  return {row.accuracy, row.mean_match_score, row.mean_top_distractor_score};
}

}  // namespace

SweepReport sweep(const SweepConfig& config) {
  if (config.dimensions.empty() || config.window_counts.empty() ||
      config.noise_fractions.empty()) {
    throw std::invalid_argument("sweep: all three grids must be non-empty");
  }
  if (config.alphabet_size < 2) {
    throw std::invalid_argument("sweep: alphabet size must be >= 2");
  }
  if (config.trials == 0) {
    throw std::invalid_argument("sweep: trials must be >= 1");
  }
  if (config.n < 2) {
    throw std::invalid_argument("sweep: n must be >= 2");
  }
  for (std::size_t d : config.dimensions) {
    if (d < 2) throw std::invalid_argument("sweep: dimensions must be >= 2");
  }
  for (std::size_t k : config.window_counts) {
    if (k == 0) throw std::invalid_argument("sweep: window counts must be >= 1");
  }
  for (double f : config.noise_fractions) {
    if (!(f >= 0.0 && f <= 1.0)) {
      throw std::invalid_argument("sweep: noise fractions must lie in [0, 1]");
    }
  }

  int name_width = 1;
  for (std::size_t v = config.alphabet_size - 1; v >= 10; v /= 10) ++name_width;

  SweepReport report;
  {
    std::string dims, wins, noises;
    for (std::size_t d : config.dimensions) {
      if (!dims.empty()) dims += ',';
      dims += std::to_string(d);
    }
    for (std::size_t k : config.window_counts) {
      if (!wins.empty()) wins += ',';
      wins += std::to_string(k);
    }
    for (double f : config.noise_fractions) {
      if (!noises.empty()) noises += ',';
      noises += fmt6(f);
    }
    report.header = {
        "hdv sweep",
        "seed=" + std::string(fmt_hex(config.seed)) +
            " alphabet_size=" + std::to_string(config.alphabet_size) +
            " n=" + std::to_string(config.n) +
            " trials=" + std::to_string(config.trials),
        "dimensions=" + dims,
        "window_counts=" + wins,
        "noise_fractions=" + noises,
    };
  }

  // Cells are independent (seeds are functions of the coordinates alone);
  // evaluated sequentially here, assembled in grid order either way.
  for (std::size_t dimension : config.dimensions) {
    for (std::size_t window_count : config.window_counts) {
      for (double noise : config.noise_fractions) {
        TrialScores total;
        for (std::size_t t = 0; t < config.trials; ++t) {
          const TrialScores s =
              run_trial(config, dimension, window_count, noise, t, name_width);
          total.accuracy += s.accuracy;
          total.match += s.match;
          total.distractor += s.distractor;
        }
        SweepRow row;
        row.dimension = dimension;
        row.alphabet_size = config.alphabet_size;
        row.windows = window_count;
        row.noise_fraction = noise;
        row.trials = config.trials;
        const auto trials = static_cast<double>(config.trials);
        row.accuracy = total.accuracy / trials;
        row.mean_match_score = total.match / trials;
        row.mean_top_distractor_score = total.distractor / trials;
        report.rows.push_back(row);
      }
    }
  }
  return report;
}

std::string to_csv(const SweepReport& report) {
  std::string out;
  for (const auto& line : report.header) {
    out += "# ";
    out += line;
    out += '\n';
  }
  out +=
      "dimension,alphabet_size,windows,noise_fraction,trials,accuracy,"
      "mean_match_score,mean_top_distractor_score\n";
  for (const auto& r : report.rows) {
    out += std::to_string(r.dimension);
    out += ',';
    out += std::to_string(r.alphabet_size);
    out += ',';
    out += std::to_string(r.windows);
    out += ',';
    out += fmt6(r.noise_fraction);
    out += ',';
    out += std::to_string(r.trials);
    out += ',';
    out += fmt6(r.accuracy);
    out += ',';
    out += fmt6(r.mean_match_score);
    out += ',';
    out += fmt6(r.mean_top_distractor_score);
    out += '\n';
  }
  return out;
}

}  // namespace hdv
