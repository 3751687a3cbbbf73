#pragma once

// Action-sequence modeling: n-gram windows encoded by permute-and-bind,
// bundled into a per-user behavior accumulator, next action recovered by
// unbinding the prefix and cleaning up against the action codebook.

#include <cstdint>
#include <string>
#include <vector>

#include "hdv/codebook.hpp"
#include "hdv/core.hpp"

namespace hdv {

// One logged IDE action. Events are grouped by session and ordered by
// timestamp within a session (ties keep input order).
struct ActionEvent {
  std::int64_t timestamp_ms = 0;
  std::string session;
  std::string action;

  friend bool operator==(const ActionEvent&, const ActionEvent&) = default;
};

// Trained user-behavior bundle: the accumulator over all window encodings,
// the window length n, and the action codebook the windows resolve against.
// behavior.count() equals the number of windows trained.
struct SequenceModel {
  int n = 3;
  Accumulator behavior;
  Codebook actions;

  [[nodiscard]] std::int64_t windows_trained() const { return behavior.count(); }
};

struct TrainReport {
  std::size_t sessions_total = 0;
  std::size_t sessions_skipped = 0;
  std::size_t windows = 0;
  std::vector<std::string> warnings;
};

// Window encoding: bind over i of permute(vector(action_i), n-1-i), so the
// position exponent decreases left to right and the last action sits
// unrotated. All actions must be registered.
Hypervector encode_window(const std::vector<std::string>& actions, const Codebook& cb);

// Slides a length-n window (step 1) over every session independently and
// accumulates the encodings; windows never span session boundaries.
// Sessions are taken in first-appearance order, events within a session in
// timestamp order (stable on ties). Unknown actions are registered into the
// model's codebook. Sessions shorter than n are skipped with a warning;
// throws only when no session qualifies.
SequenceModel train(const std::vector<ActionEvent>& events, int n, Codebook actions,
                    TrainReport* report = nullptr);

// The contiguous length-n windows train() would bundle, in training order:
// sessions in first-appearance order, events by timestamp (stable on ties),
// sessions shorter than n contributing none.
std::vector<std::vector<std::string>> session_windows(
    const std::vector<ActionEvent>& events, int n);

// Next-action query. The prefix (length n-1) is encoded with the same
// right-aligned convention as training windows, then the composite is
// rotated once, lifting every position exponent by one and leaving the
// unknown final action at rotation zero. Binding the normalized bundle with
// that query cancels the prefix of every matching window exactly.
// When normalize_bundle is false the raw sums are unbound instead and the
// scores are cosine similarities of the integer query.
CleanupResult predict(const SequenceModel& model, const std::vector<std::string>& prefix,
                      double tau, bool normalize_bundle = true);

// Componentwise sum of two compatible models (same n, same codebook
// identity). Associative and commutative.
SequenceModel merge(const SequenceModel& a, const SequenceModel& b);

}  // namespace hdv
