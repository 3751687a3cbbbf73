#pragma once

// Bipolar MAP algebra: seeded vector generation, binding (componentwise
// multiply), bundling (integer accumulate + sign normalize), cyclic
// permutation, and cosine similarity.
//
// Hypervectors are immutable values with components in {-1, +1}; all binary
// operations require equal dimensions. Accumulators keep lossless integer
// sums so bundles can be extended, merged, or normalized at any point.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hdv {

// Global seed for deterministic vector generation. Every persisted artifact
// records the seed it was built with; mixing material from different seeds
// is rejected wherever it can be detected.
struct Seed {
  std::uint64_t value = 0;

  friend bool operator==(const Seed&, const Seed&) = default;
};

// Name prefix reserved for normalization tie-break vectors; codebooks
// refuse any name starting with it.
inline constexpr std::string_view kTiebreakName = "__tiebreak__";

class Accumulator;

// Dense bipolar vector of fixed dimension. Components are exactly -1 or +1.
class Hypervector {
 public:
  // Component data must already be bipolar; throws std::invalid_argument
  // otherwise or when fewer than 2 components are given.
  static Hypervector from_components(std::vector<std::int8_t> components);

  [[nodiscard]] std::size_t dimension() const noexcept { return components_.size(); }
  [[nodiscard]] std::int8_t operator[](std::size_t i) const { return components_[i]; }
  [[nodiscard]] std::span<const std::int8_t> components() const noexcept {
    return components_;
  }

  friend bool operator==(const Hypervector&, const Hypervector&) = default;

 private:
  friend Hypervector generate(std::string_view, Seed, std::size_t);
  friend Hypervector bind(const Hypervector&, const Hypervector&);
  friend Hypervector permute(const Hypervector&, long long);
  friend Hypervector normalize(const Accumulator&, Seed);
  friend class Accumulator;

  Hypervector() = default;
  explicit Hypervector(std::vector<std::int8_t> raw) : components_(std::move(raw)) {}

  std::vector<std::int8_t> components_;
};

// Lossless bundling state: componentwise integer sums plus the number of
// bundled vectors. Invariants: |sums[i]| <= count and sums[i] has the same
// parity as count (every added vector contributes +-1 per component).
class Accumulator {
 public:
  explicit Accumulator(std::size_t dimension);

  // Restores a persisted accumulator; validates both invariants above.
  static Accumulator from_sums(std::vector<std::int32_t> sums, std::int64_t count);

  // Adds one vector. Throws on dimension mismatch or when count would
  // exceed the int32 range the sums are stored in.
  void add(const Hypervector& v);

  // Componentwise sum of two accumulators over the same dimension.
  // Associative and commutative; the basis for partitioned training.
  void merge(const Accumulator& other);

  [[nodiscard]] std::size_t dimension() const noexcept { return sums_.size(); }
  [[nodiscard]] std::int64_t count() const noexcept { return count_; }
  [[nodiscard]] std::span<const std::int32_t> sums() const noexcept { return sums_; }

  friend bool operator==(const Accumulator&, const Accumulator&) = default;

 private:
  std::vector<std::int32_t> sums_;
  std::int64_t count_ = 0;
};

// Deterministic generation: h = FNV-1a-64(name) XOR seed, then successive
// SplitMix64 words consumed most-significant-bit first, one bit per
// component (1 -> +1, 0 -> -1). Identical (name, seed, dimension) always
// yields the identical vector; distinct names are quasi-orthogonal in
// expectation (similarity mean 0, std 1/sqrt(D)).
Hypervector generate(std::string_view name, Seed seed, std::size_t dimension);

// Componentwise product. Commutative, associative, self-inverse
// (bind(a, a) is the all-+1 identity), and similarity-preserving.
Hypervector bind(const Hypervector& a, const Hypervector& b);

// Cyclic rotation right by k mod D: result[(i + k) mod D] = a[i].
// Negative k is the inverse rotation. Distributes over bind.
Hypervector permute(const Hypervector& a, long long k);

// Integer dot product; exact, used wherever scores are compared.
std::int64_t dot(const Hypervector& a, const Hypervector& b);

// (1/D) * dot: equals cosine similarity for bipolar vectors. In [-1, 1].
double similarity(const Hypervector& a, const Hypervector& b);

// Sign of each sum; zero sums (possible only for even counts) take the
// corresponding component of the accumulator's reserved tie-break vector
// generate(detail::tiebreak_name(acc), seed, D). Deriving the tie-break
// name from the accumulator's content keeps normalization deterministic
// while decorrelating the tie components of distinct bundles — a single
// shared tie vector would cancel to the all-+1 binding identity wherever
// two bundles tie on the same component, biasing any product of normalized
// bundles (style mappings, context transitions) toward passing queries
// through unchanged. Throws on an empty accumulator.
Hypervector normalize(const Accumulator& acc, Seed seed);

namespace detail {

// Building blocks of generate(), exposed for independent verification.
std::uint64_t fnv1a64(std::string_view bytes);
std::uint64_t splitmix64_next(std::uint64_t& state);

// Uniform double in [0, 1) from one SplitMix64 draw; 53 mantissa bits.
double splitmix64_unit(std::uint64_t& state);

// "__tiebreak__:" plus a 16-hex-digit FNV-1a-64 fingerprint of the
// accumulator's count and sums (both little-endian): equal content gives
// equal tie vectors, distinct bundles get independent ones.
std::string tiebreak_name(const Accumulator& acc);

}  // namespace detail

}  // namespace hdv
