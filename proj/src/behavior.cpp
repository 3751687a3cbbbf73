#include "hdv/behavior.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hdv {

Hypervector encode_window(const std::vector<std::string>& actions, const Codebook& cb) {
  if (actions.empty()) {
    throw std::invalid_argument("encode_window: empty action list");
  }
  const long long n = static_cast<long long>(actions.size());
  Hypervector result = permute(cb.vector_of(actions[0]), n - 1);
  for (long long i = 1; i < n; ++i) {
    result = bind(result, permute(cb.vector_of(actions[static_cast<std::size_t>(i)]),
                                  n - 1 - i));
  }
  return result;
}

namespace {

// Per-session event indices: sessions in first-appearance order, indices
// within a session sorted by timestamp (stable on ties).
std::pair<std::vector<std::string>, std::vector<std::vector<std::size_t>>>
partition_sessions(const std::vector<ActionEvent>& events) {
  std::vector<std::string> session_order;
  std::vector<std::vector<std::size_t>> session_events;
  for (std::size_t i = 0; i < events.size(); ++i) {
    const auto& s = events[i].session;
    auto it = std::find(session_order.begin(), session_order.end(), s);
    if (it == session_order.end()) {
      session_order.push_back(s);
      session_events.emplace_back();
      it = session_order.end() - 1;
    }
    session_events[static_cast<std::size_t>(it - session_order.begin())].push_back(i);
  }
  for (auto& idx : session_events) {
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      return events[a].timestamp_ms < events[b].timestamp_ms;
    });
  }
  return {std::move(session_order), std::move(session_events)};
}

}  // namespace

SequenceModel train(const std::vector<ActionEvent>& events, int n, Codebook actions,
                    TrainReport* report) {
  if (n < 2) {
    throw std::invalid_argument("train: window length n must be >= 2");
  }
  auto [session_order, session_events] = partition_sessions(events);

  for (const auto& event : events) {
    actions.register_name(event.action);
  }

  SequenceModel model{n, Accumulator(actions.dimension()), std::move(actions)};
  TrainReport local;
  local.sessions_total = session_order.size();

  for (std::size_t s = 0; s < session_order.size(); ++s) {
    const auto& idx = session_events[s];
    if (idx.size() < static_cast<std::size_t>(n)) {
      ++local.sessions_skipped;
      local.warnings.push_back("session \"" + session_order[s] + "\" has " +
                               std::to_string(idx.size()) + " events, fewer than n=" +
                               std::to_string(n) + "; skipped");
      continue;
    }
    std::vector<std::string> window(static_cast<std::size_t>(n));
    for (std::size_t start = 0; start + static_cast<std::size_t>(n) <= idx.size();
         ++start) {
      for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) {
        window[j] = events[idx[start + j]].action;
      }
      model.behavior.add(encode_window(window, model.actions));
      ++local.windows;
    }
  }

  if (local.windows == 0) {
    throw std::invalid_argument("train: no session has at least n=" + std::to_string(n) +
                                " events");
  }
  if (report != nullptr) {
    *report = std::move(local);
  }
  return model;
}

std::vector<std::vector<std::string>> session_windows(
    const std::vector<ActionEvent>& events, int n) {
  if (n < 2) {
    throw std::invalid_argument("session_windows: window length n must be >= 2");
  }
  auto [session_order, session_events] = partition_sessions(events);
  std::vector<std::vector<std::string>> windows;
  for (const auto& idx : session_events) {
    if (idx.size() < static_cast<std::size_t>(n)) continue;
    for (std::size_t start = 0; start + static_cast<std::size_t>(n) <= idx.size();
         ++start) {
      std::vector<std::string> window(static_cast<std::size_t>(n));
      for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) {
        window[j] = events[idx[start + j]].action;
      }
      windows.push_back(std::move(window));
    }
  }
  return windows;
}

CleanupResult predict(const SequenceModel& model, const std::vector<std::string>& prefix,
                      double tau, bool normalize_bundle) {
  if (model.behavior.count() == 0) {
    throw std::invalid_argument("predict: model has no trained windows");
  }
  if (prefix.size() != static_cast<std::size_t>(model.n - 1)) {
    throw std::invalid_argument("predict: prefix length must be n-1 = " +
                                std::to_string(model.n - 1));
  }
  for (const auto& a : prefix) {
    if (!model.actions.contains(a)) {
      throw std::invalid_argument("predict: unregistered action: " + a);
    }
  }
  const Hypervector query = permute(encode_window(prefix, model.actions), 1);
  if (normalize_bundle) {
    const Hypervector bundle = normalize(model.behavior, model.actions.seed());
    return model.actions.cleanup(bind(bundle, query), tau);
  }

  // Raw-sums route: unbind the lossless accumulator and score by cosine of
  // the integer query against each action vector.
  const auto sums = model.behavior.sums();
  std::vector<std::int64_t> unbound(sums.size());
  double norm_sq = 0.0;
  for (std::size_t i = 0; i < sums.size(); ++i) {
    unbound[i] = static_cast<std::int64_t>(sums[i]) * query[i];
    norm_sq += static_cast<double>(sums[i]) * static_cast<double>(sums[i]);
  }
  const double denom =
      std::sqrt(norm_sq) * std::sqrt(static_cast<double>(sums.size()));
  const auto& names = model.actions.names();
  std::vector<std::int64_t> dots(names.size());
  for (std::size_t j = 0; j < names.size(); ++j) {
    const auto vec = model.actions.vector_of(names[j]).components();
    std::int64_t d = 0;
    for (std::size_t i = 0; i < vec.size(); ++i) {
      d += unbound[i] * vec[i];
    }
    dots[j] = d;
  }
  std::size_t best = 0;
  std::int64_t second = std::numeric_limits<std::int64_t>::min();
  for (std::size_t j = 1; j < dots.size(); ++j) {
    if (dots[j] > dots[best] || (dots[j] == dots[best] && names[j] < names[best])) {
      second = dots[best];
      best = j;
    } else if (dots[j] > second) {
      second = dots[j];
    }
  }
  CleanupResult result;
  result.name = names[best];
  result.score = denom == 0.0 ? 0.0 : static_cast<double>(dots[best]) / denom;
  result.runner_up_score = second == std::numeric_limits<std::int64_t>::min()
                               ? -1.0
                               : (denom == 0.0 ? 0.0 : static_cast<double>(second) / denom);
  result.confident = result.score >= tau;
  return result;
}

SequenceModel merge(const SequenceModel& a, const SequenceModel& b) {
  if (a.n != b.n) {
    throw std::invalid_argument("merge: window length mismatch");
  }
  if (!a.actions.same_identity(b.actions)) {
    throw std::invalid_argument("merge: models use different action codebooks");
  }
  SequenceModel out = a;
  out.behavior.merge(b.behavior);
  return out;
}

}  // namespace hdv
