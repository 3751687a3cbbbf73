#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hdv/behavior.hpp"
#include "hdv/codebook.hpp"
#include "hdv/core.hpp"
#include "hdv/harness.hpp"

namespace {

using hdv::ActionEvent;
using hdv::bind;
using hdv::Codebook;
using hdv::CodebookKind;
using hdv::encode_window;
using hdv::generate;
using hdv::Hypervector;
using hdv::normalize;
using hdv::permute;
using hdv::predict;
using hdv::Seed;
using hdv::SequenceModel;
using hdv::session_windows;
using hdv::similarity;
using hdv::train;
using hdv::TrainReport;

constexpr Seed kSeed{0x5EED5EED5EED5EEDULL};

Codebook action_book(std::size_t dimension = 10000) {
  return Codebook(CodebookKind::kAction, kSeed, dimension);
}

std::vector<ActionEvent> one_session(const std::vector<std::string>& actions,
                                     const std::string& session = "s1",
                                     std::int64_t t0 = 1000) {
  std::vector<ActionEvent> events;
  for (std::size_t i = 0; i < actions.size(); ++i) {
    events.push_back({t0 + static_cast<std::int64_t>(i), session, actions[i]});
  }
  return events;
}

}  // namespace

TEST_CASE("encode_window composes permuted atoms by binding") {
  Codebook cb = action_book(2048);
  cb.register_name("OpenFile");
  cb.register_name("RunTests");
  cb.register_name("Commit");

  const Hypervector expected =
      bind(permute(cb.vector_of("OpenFile"), 2),
           bind(permute(cb.vector_of("RunTests"), 1), cb.vector_of("Commit")));
  CHECK(encode_window({"OpenFile", "RunTests", "Commit"}, cb) == expected);

  CHECK(encode_window({"RunTests", "Commit"}, cb) ==
        bind(permute(cb.vector_of("RunTests"), 1), cb.vector_of("Commit")));
  CHECK(encode_window({"Commit"}, cb) == cb.vector_of("Commit"));
}

TEST_CASE("encode_window agrees with a componentwise re-derivation") {
  Codebook cb = action_book(16);
  cb.register_name("A");
  cb.register_name("B");
  cb.register_name("C");
  const Hypervector va = cb.vector_of("A");
  const Hypervector vb = cb.vector_of("B");
  const Hypervector vc = cb.vector_of("C");

  // Rotation right by k sends index i to (i + k) mod D; multiply the three
  // rotated atoms together one component at a time.
  std::vector<int> product(16, 1);
  for (std::size_t i = 0; i < 16; ++i) {
    product[(i + 2) % 16] *= va[i];
    product[(i + 1) % 16] *= vb[i];
    product[i] *= vc[i];
  }
  const Hypervector got = encode_window({"A", "B", "C"}, cb);
  for (std::size_t i = 0; i < 16; ++i) {
    REQUIRE(got[i] == product[i]);
  }
}

TEST_CASE("encode_window validates its input") {
  Codebook cb = action_book(64);
  cb.register_name("A");
  CHECK_THROWS_AS(encode_window({}, cb), std::invalid_argument);
  CHECK_THROWS_AS(encode_window({"A", "Unknown"}, cb), std::invalid_argument);
}

TEST_CASE("train bundles one window per contiguous n-gram") {
  TrainReport report;
  const auto model = train(one_session({"OpenFile", "RunTests", "Commit"}), 3,
                           action_book(), &report);
  CHECK(model.n == 3);
  CHECK(model.windows_trained() == 1);
  CHECK(report.sessions_total == 1);
  CHECK(report.sessions_skipped == 0);
  CHECK(report.windows == 1);
  CHECK(report.warnings.empty());
  CHECK(model.actions.size() == 3);
  CHECK(model.actions.contains("Commit"));

  // A single window normalizes back to its exact encoding.
  CHECK(normalize(model.behavior, kSeed) ==
        encode_window({"OpenFile", "RunTests", "Commit"}, model.actions));

  const auto longer =
      train(one_session({"A", "B", "C", "D", "E"}), 3, action_book(), nullptr);
  CHECK(longer.windows_trained() == 3);
}

TEST_CASE("train skips short sessions and rejects hopeless input") {
  auto events = one_session({"A", "B", "C"}, "long");
  auto stub = one_session({"A", "B"}, "short", 9000);
  events.insert(events.end(), stub.begin(), stub.end());

  TrainReport report;
  const auto model = train(events, 3, action_book(), &report);
  CHECK(model.windows_trained() == 1);
  CHECK(report.sessions_total == 2);
  CHECK(report.sessions_skipped == 1);
  REQUIRE(report.warnings.size() == 1);
  CHECK(report.warnings[0].find("short") != std::string::npos);

  CHECK_THROWS_AS(train(one_session({"A", "B"}), 3, action_book(), nullptr),
                  std::invalid_argument);
  CHECK_THROWS_AS(train(events, 1, action_book(), nullptr), std::invalid_argument);
}

TEST_CASE("events are ordered by timestamp with stable ties") {
  std::vector<ActionEvent> events = {
      {500, "s", "C"},
      {100, "s", "A"},
      {300, "s", "B"},
  };
  CHECK(session_windows(events, 2) ==
        std::vector<std::vector<std::string>>{{"A", "B"}, {"B", "C"}});

  // Two events share a timestamp; input order decides.
  std::vector<ActionEvent> tied = {
      {100, "s", "P"},
      {200, "s", "A"},
      {200, "s", "B"},
  };
  CHECK(session_windows(tied, 2) ==
        std::vector<std::vector<std::string>>{{"P", "A"}, {"A", "B"}});
}

TEST_CASE("windows never span session boundaries") {
  // Interleave two sessions in the input; the windows must stay per-session.
  std::vector<ActionEvent> events = {
      {1, "s1", "X1"}, {10, "s2", "Y1"}, {2, "s1", "X2"},
      {11, "s2", "Y2"}, {3, "s1", "X3"}, {12, "s2", "Y3"},
  };
  const auto windows = session_windows(events, 3);
  CHECK(windows == std::vector<std::vector<std::string>>{{"X1", "X2", "X3"},
                                                         {"Y1", "Y2", "Y3"}});

  // Collapsing the same events into one session adds exactly the windows
  // that cross the old boundary.
  std::vector<ActionEvent> merged = events;
  for (auto& e : merged) e.session = "all";
  const auto merged_windows = session_windows(merged, 3);
  CHECK(merged_windows.size() == 4);
  CHECK(merged_windows[0] == std::vector<std::string>{"X1", "X2", "X3"});
  CHECK(merged_windows[1] == std::vector<std::string>{"X2", "X3", "Y1"});
  CHECK(merged_windows[3] == std::vector<std::string>{"Y1", "Y2", "Y3"});
}

TEST_CASE("sessions are processed in first-appearance order") {
  std::vector<ActionEvent> events = {
      {50, "later", "L1"}, {1, "earlier-ts", "E1"}, {51, "later", "L2"},
      {2, "earlier-ts", "E2"},
  };
  // "later" appears first in the input, so its windows come first even though
  // its timestamps are larger.
  CHECK(session_windows(events, 2) ==
        std::vector<std::vector<std::string>>{{"L1", "L2"}, {"E1", "E2"}});
}

TEST_CASE("a single-window model predicts its successor with score 1") {
  const auto model = train(one_session({"OpenFile", "RunTests", "Commit"}), 3,
                           action_book(), nullptr);
  for (bool normalized : {true, false}) {
    const auto result =
        predict(model, {"OpenFile", "RunTests"}, hdv::default_tau(10000), normalized);
    CHECK(result.name == "Commit");
    CHECK(result.score == 1.0);
    CHECK(result.confident);
    CHECK(std::abs(result.runner_up_score) < 0.05);
  }
}

TEST_CASE("predict validates the prefix and the model") {
  const auto model = train(one_session({"A", "B", "C"}), 3, action_book(), nullptr);
  CHECK_THROWS_AS(predict(model, {"A"}, 0.04), std::invalid_argument);
  CHECK_THROWS_AS(predict(model, {"A", "B", "C"}, 0.04), std::invalid_argument);
  CHECK_THROWS_AS(predict(model, {"A", "Nope"}, 0.04), std::invalid_argument);

  Codebook cb = action_book(64);
  cb.register_name("A");
  cb.register_name("B");
  const SequenceModel untrained{3, hdv::Accumulator(64), std::move(cb)};
  CHECK_THROWS_AS(predict(untrained, {"A", "B"}, 0.5), std::invalid_argument);
}

TEST_CASE("a model holding 50 trigrams recalls them nearly perfectly") {
  // 50 sessions of 3 events = 50 windows with distinct prefixes over a
  // 20-action alphabet (prefix (i, i+1), successor i*7 mod 20).
  Codebook cb = action_book();
  std::vector<std::string> names;
  for (int i = 0; i < 20; ++i) {
    names.push_back("act" + std::string(1, static_cast<char>('a' + i)));
    cb.register_name(names.back());
  }
  std::vector<ActionEvent> events;
  std::vector<std::vector<std::string>> windows;
  for (int w = 0; w < 50; ++w) {
    const std::string session = "w" + std::to_string(w);
    const std::vector<std::string> window = {names[w % 20], names[(w / 20 * 3 + w) % 20],
                                             names[(w * 7) % 20]};
    // Prefixes (w % 20, ...) for w in [0, 50) repeat after 20; stagger the
    // middle element by w/20 so all 50 prefixes are distinct.
    events.push_back({w * 10 + 0, session, window[0]});
    events.push_back({w * 10 + 1, session, window[1]});
    events.push_back({w * 10 + 2, session, window[2]});
    windows.push_back(window);
  }
  const auto model = train(events, 3, std::move(cb), nullptr);
  REQUIRE(model.windows_trained() == 50);

  const auto row = hdv::evaluate(model, windows);
  CHECK(row.accuracy >= 0.95);
  // Mean similarity to the stored successor tracks the 50-member bundle
  // expectation 0.1123 (binomial exact); +-30% of sqrt(2/(50 pi)).
  CHECK(row.mean_match_score > 0.0790);
  CHECK(row.mean_match_score < 0.1467);
  CHECK(row.mean_top_distractor_score < 0.05);
}

TEST_CASE("a never-trained prefix is not confident") {
  const auto model = train(one_session({"A", "B", "C", "A", "B", "C", "A"}), 3,
                           action_book(), nullptr);
  // (C, A) -> B is in the training stream, (B, A) is not.
  const auto result = predict(model, {"B", "A"}, hdv::default_tau(10000));
  CHECK_FALSE(result.confident);
  CHECK(result.score < hdv::default_tau(10000));
}

TEST_CASE("raw-sums prediction agrees with the normalized route here") {
  std::vector<ActionEvent> events;
  const std::vector<std::string> names = {"A", "B", "C", "D", "E", "F"};
  for (int w = 0; w < 10; ++w) {
    const std::string session = "s" + std::to_string(w);
    events.push_back({w * 10 + 0, session, names[w % 6]});
    events.push_back({w * 10 + 1, session, names[(w + 2) % 6]});
    events.push_back({w * 10 + 2, session, names[(w + 4) % 6]});
  }
  const auto model = train(events, 3, action_book(), nullptr);
  const auto cooked = predict(model, {"A", "C"}, 0.04, true);
  const auto raw = predict(model, {"A", "C"}, 0.04, false);
  CHECK(cooked.name == raw.name);
  CHECK(raw.score > 0.0);
}

TEST_CASE("merge equals training on the concatenated logs") {
  // Pre-register every action so both halves share one codebook identity.
  Codebook base = action_book(4096);
  for (const char* name : {"A", "B", "C", "D"}) base.register_name(name);

  const auto events1 = one_session({"A", "B", "C", "D"}, "s1", 100);
  const auto events2 = one_session({"B", "A", "D", "C"}, "s2", 900);
  auto all = events1;
  all.insert(all.end(), events2.begin(), events2.end());

  const auto m1 = train(events1, 3, base, nullptr);
  const auto m2 = train(events2, 3, base, nullptr);
  const auto whole = train(all, 3, base, nullptr);

  const auto merged = hdv::merge(m1, m2);
  CHECK(merged.behavior == whole.behavior);
  CHECK(merged.windows_trained() == 4);

  const auto merged_ba = hdv::merge(m2, m1);
  CHECK(merged_ba.behavior == merged.behavior);  // commutative

  // Incompatible models are rejected.
  const auto other_n = train(events1, 2, base, nullptr);
  CHECK_THROWS_AS(hdv::merge(m1, other_n), std::invalid_argument);
  const auto other_book = train(events2, 3, action_book(4096), nullptr);
  CHECK_THROWS_AS(hdv::merge(m1, other_book), std::invalid_argument);
}

TEST_CASE("training twice from the same log is bit-identical") {
  const auto events = one_session({"A", "B", "C", "D", "E"});
  const auto m1 = train(events, 3, action_book(), nullptr);
  const auto m2 = train(events, 3, action_book(), nullptr);
  CHECK(m1.behavior == m2.behavior);
  CHECK(m1.actions.same_identity(m2.actions));
  const auto p1 = predict(m1, {"B", "C"}, 0.04);
  const auto p2 = predict(m2, {"B", "C"}, 0.04);
  CHECK(p1.name == p2.name);
  CHECK(p1.score == p2.score);
  CHECK(p1.runner_up_score == p2.runner_up_score);
}
