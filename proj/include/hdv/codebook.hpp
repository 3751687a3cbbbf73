#pragma once

// Named registries of atomic hypervectors with exhaustive nearest-neighbor
// cleanup. Vectors are always derivable from (name, seed, dimension); the
// in-memory cache is a convenience and is never serialized.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hdv/core.hpp"

namespace hdv {

enum class CodebookKind {
  kAction,
  kStyleAttribute,
  kStyleValue,
  kContextRole,
  kContextFiller,
};

std::string_view to_string(CodebookKind kind);
CodebookKind codebook_kind_from_string(std::string_view s);

// Result of resolving a noisy query against a codebook. score is the best
// similarity, runner_up_score the second best (-1 when the codebook has a
// single entry); confident iff score >= the threshold the query was run with.
struct CleanupResult {
  std::string name;
  double score = 0.0;
  double runner_up_score = -1.0;
  bool confident = false;
};

class Codebook {
 public:
  Codebook(CodebookKind kind, Seed seed, std::size_t dimension);

  // Registers a symbol; idempotent on duplicates. The reserved tie-break
  // name and empty names are rejected.
  void register_name(std::string_view name);

  [[nodiscard]] bool contains(std::string_view name) const;
  [[nodiscard]] const Hypervector& vector_of(std::string_view name) const;

  // Exhaustive argmax of similarity over all registered names; exact
  // integer dot products, ties broken by lexicographically smaller name.
  // Throws on an empty codebook or a dimension mismatch.
  [[nodiscard]] CleanupResult cleanup(const Hypervector& query, double tau) const;

  [[nodiscard]] std::size_t size() const noexcept { return names_.size(); }
  [[nodiscard]] const std::vector<std::string>& names() const noexcept { return names_; }
  [[nodiscard]] CodebookKind kind() const noexcept { return kind_; }
  [[nodiscard]] Seed seed() const noexcept { return seed_; }
  [[nodiscard]] std::size_t dimension() const noexcept { return dimension_; }

  // Identity for merge/compatibility checks: kind, seed, dimension, and the
  // same name set in the same registration order.
  [[nodiscard]] bool same_identity(const Codebook& other) const;

 private:
  CodebookKind kind_;
  Seed seed_;
  std::size_t dimension_;
  std::vector<std::string> names_;
  std::vector<Hypervector> vectors_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Default confidence threshold: 4 sigma of the null similarity distribution.
double default_tau(std::size_t dimension);

}  // namespace hdv
