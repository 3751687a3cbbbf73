#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "hdv/codebook.hpp"
#include "hdv/core.hpp"

namespace {

using hdv::Codebook;
using hdv::CodebookKind;
using hdv::generate;
using hdv::Hypervector;
using hdv::Seed;

constexpr Seed kSeed{0x5EED5EED5EED5EEDULL};

Codebook action_book(std::size_t dimension = 10000) {
  return Codebook(CodebookKind::kAction, kSeed, dimension);
}

}  // namespace

TEST_CASE("codebook registration is ordered and idempotent") {
  Codebook cb = action_book();
  cb.register_name("OpenFile");
  cb.register_name("RunTests");
  cb.register_name("OpenFile");
  CHECK(cb.size() == 2);
  CHECK(cb.names() == std::vector<std::string>{"OpenFile", "RunTests"});
  CHECK(cb.contains("OpenFile"));
  CHECK_FALSE(cb.contains("Commit"));
}

TEST_CASE("codebook rejects invalid names and dimensions") {
  CHECK_THROWS_AS(Codebook(CodebookKind::kAction, kSeed, 1), std::invalid_argument);
  Codebook cb = action_book(16);
  CHECK_THROWS_AS(cb.register_name(""), std::invalid_argument);
  CHECK_THROWS_AS(cb.register_name("__tiebreak__"), std::invalid_argument);
  CHECK_THROWS_AS(cb.register_name("__tiebreak__:0123456789abcdef"),
                  std::invalid_argument);
  CHECK_THROWS_AS(cb.register_name("__tiebreak__anything"), std::invalid_argument);
}

TEST_CASE("registered vectors are exactly the generated atoms") {
  Codebook cb = action_book(777);
  cb.register_name("Commit");
  CHECK(cb.vector_of("Commit") == generate("Commit", kSeed, 777));
  CHECK_THROWS_AS(static_cast<void>(cb.vector_of("Missing")), std::invalid_argument);
}

TEST_CASE("cleanup of a registered vector scores exactly 1") {
  Codebook cb = action_book();
  for (const char* name : {"OpenFile", "RunTests", "Commit", "SwitchBranch"}) {
    cb.register_name(name);
  }
  const auto result = cb.cleanup(cb.vector_of("Commit"), hdv::default_tau(10000));
  CHECK(result.name == "Commit");
  CHECK(result.score == 1.0);
  CHECK(result.confident);
  CHECK(std::abs(result.runner_up_score) < 0.05);
}

TEST_CASE("cleanup of a singleton codebook reports no runner-up") {
  Codebook cb = action_book(64);
  cb.register_name("Only");
  const auto result = cb.cleanup(cb.vector_of("Only"), 0.5);
  CHECK(result.name == "Only");
  CHECK(result.runner_up_score == -1.0);
}

TEST_CASE("cleanup breaks exact ties toward the lexicographically smaller name") {
  // Find two names whose D=4 atoms differ in exactly two components; a query
  // agreeing with each on one of those components ties their dot products.
  std::string first;
  std::string second;
  Hypervector va = generate("t0", kSeed, 4);
  Hypervector vb = va;
  for (int i = 0; i < 200 && first.empty(); ++i) {
    for (int j = i + 1; j < 200 && first.empty(); ++j) {
      const Hypervector a = generate("t" + std::to_string(i), kSeed, 4);
      const Hypervector b = generate("t" + std::to_string(j), kSeed, 4);
      int differ = 0;
      for (std::size_t c = 0; c < 4; ++c) {
        differ += a[c] != b[c] ? 1 : 0;
      }
      if (differ == 2) {
        first = "t" + std::to_string(i);
        second = "t" + std::to_string(j);
        va = a;
        vb = b;
      }
    }
  }
  REQUIRE_FALSE(first.empty());

  std::vector<std::int8_t> q(4);
  bool gave_a = false;
  for (std::size_t c = 0; c < 4; ++c) {
    if (va[c] == vb[c]) {
      q[c] = va[c];
    } else if (!gave_a) {
      q[c] = va[c];  // one disputed component to each side
      gave_a = true;
    } else {
      q[c] = vb[c];
    }
  }
  const Hypervector query = Hypervector::from_components(q);
  REQUIRE(hdv::dot(query, va) == hdv::dot(query, vb));

  const std::string smaller = std::min(first, second);
  for (bool reversed : {false, true}) {
    Codebook cb = action_book(4);
    cb.register_name(reversed ? second : first);
    cb.register_name(reversed ? first : second);
    const auto result = cb.cleanup(query, 0.0);
    CHECK(result.name == smaller);
    CHECK(result.runner_up_score == result.score);
  }
}

TEST_CASE("cleanup results do not depend on registration order") {
  const std::vector<std::string> names = {"Commit", "OpenFile", "RunTests", "Debug",
                                          "Refactor"};
  Codebook forward = action_book();
  for (const auto& n : names) forward.register_name(n);
  Codebook backward = action_book();
  for (auto it = names.rbegin(); it != names.rend(); ++it) backward.register_name(*it);

  const Hypervector query = generate("some-query", kSeed, 10000);
  const auto a = forward.cleanup(query, 0.04);
  const auto b = backward.cleanup(query, 0.04);
  CHECK(a.name == b.name);
  CHECK(a.score == b.score);
  CHECK(a.runner_up_score == b.runner_up_score);
  CHECK(a.confident == b.confident);
}

TEST_CASE("cleanup validates the query and the codebook") {
  Codebook empty = action_book(64);
  CHECK_THROWS_AS(empty.cleanup(generate("q", kSeed, 64), 0.5), std::invalid_argument);
  Codebook cb = action_book(64);
  cb.register_name("A");
  CHECK_THROWS_AS(cb.cleanup(generate("q", kSeed, 128), 0.5), std::invalid_argument);
}

TEST_CASE("cleanup recovers a vector with 30 percent of components flipped") {
  Codebook cb = action_book();
  for (int i = 0; i < 1000; ++i) {
    cb.register_name("item" + std::to_string(i));
  }
  const Hypervector original = cb.vector_of("item371");
  std::vector<std::int8_t> noisy(original.components().begin(),
                                 original.components().end());
  // Deterministic flip set: every component index with i % 10 < 3, exactly
  // 3000 of 10000. The flips and the atoms are independent by construction.
  std::size_t flipped = 0;
  for (std::size_t i = 0; i < noisy.size(); ++i) {
    if (i % 10 < 3) {
      noisy[i] = static_cast<std::int8_t>(-noisy[i]);
      ++flipped;
    }
  }
  REQUIRE(flipped == 3000);
  const auto result =
      cb.cleanup(Hypervector::from_components(std::move(noisy)), hdv::default_tau(10000));
  CHECK(result.name == "item371");
  CHECK(result.score == 0.4);  // (10000 - 2*3000) / 10000 exactly
  CHECK(result.confident);
  CHECK(result.runner_up_score < 0.1);
}

TEST_CASE("an unrelated query is not confident at the default threshold") {
  Codebook cb = action_book();
  for (int i = 0; i < 1000; ++i) {
    cb.register_name("item" + std::to_string(i));
  }
  const auto result =
      cb.cleanup(generate("outside-the-codebook", kSeed, 10000), hdv::default_tau(10000));
  CHECK_FALSE(result.confident);
  CHECK(result.score < 0.05);
}

TEST_CASE("confidence is exactly score >= tau") {
  Codebook cb = action_book(64);
  cb.register_name("A");
  cb.register_name("B");
  const Hypervector query = cb.vector_of("A");
  CHECK(cb.cleanup(query, 1.0).confident);       // score == tau
  CHECK_FALSE(cb.cleanup(query, 1.0 + 1e-12).confident);
}

TEST_CASE("same_identity compares kind, seed, dimension, and name order") {
  Codebook a = action_book(64);
  a.register_name("X");
  a.register_name("Y");

  Codebook same = action_book(64);
  same.register_name("X");
  same.register_name("Y");
  CHECK(a.same_identity(same));

  Codebook reordered = action_book(64);
  reordered.register_name("Y");
  reordered.register_name("X");
  CHECK_FALSE(a.same_identity(reordered));

  Codebook other_kind(CodebookKind::kContextRole, kSeed, 64);
  other_kind.register_name("X");
  other_kind.register_name("Y");
  CHECK_FALSE(a.same_identity(other_kind));

  Codebook other_seed(CodebookKind::kAction, Seed{1}, 64);
  other_seed.register_name("X");
  other_seed.register_name("Y");
  CHECK_FALSE(a.same_identity(other_seed));

  Codebook other_dim = action_book(128);
  other_dim.register_name("X");
  other_dim.register_name("Y");
  CHECK_FALSE(a.same_identity(other_dim));
}

TEST_CASE("default_tau is four sigma of the null distribution") {
  CHECK(hdv::default_tau(10000) == 0.04);
  CHECK(hdv::default_tau(64) == 0.5);
  CHECK(hdv::default_tau(400) == 0.2);
}

TEST_CASE("codebook kinds round-trip through their string names") {
  for (CodebookKind kind : {CodebookKind::kAction, CodebookKind::kStyleAttribute,
                            CodebookKind::kStyleValue, CodebookKind::kContextRole,
                            CodebookKind::kContextFiller}) {
    CHECK(hdv::codebook_kind_from_string(hdv::to_string(kind)) == kind);
  }
  CHECK(hdv::to_string(CodebookKind::kAction) == "action");
  CHECK(hdv::to_string(CodebookKind::kStyleValue) == "style-value");
  CHECK_THROWS_AS(hdv::codebook_kind_from_string("nonsense"), std::invalid_argument);
}
