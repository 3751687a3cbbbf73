#include "hdv/codebook.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace hdv {

std::string_view to_string(CodebookKind kind) {
  switch (kind) {
    case CodebookKind::kAction:
      return "action";
    case CodebookKind::kStyleAttribute:
      return "style-attribute";
    case CodebookKind::kStyleValue:
      return "style-value";
    case CodebookKind::kContextRole:
      return "context-role";
    case CodebookKind::kContextFiller:
      return "context-filler";
  }
  throw std::logic_error("unknown codebook kind");
}

CodebookKind codebook_kind_from_string(std::string_view s) {
  if (s == "action") return CodebookKind::kAction;
  if (s == "style-attribute") return CodebookKind::kStyleAttribute;
  if (s == "style-value") return CodebookKind::kStyleValue;
  if (s == "context-role") return CodebookKind::kContextRole;
  if (s == "context-filler") return CodebookKind::kContextFiller;
  throw std::invalid_argument("unknown codebook kind: " + std::string(s));
}

Codebook::Codebook(CodebookKind kind, Seed seed, std::size_t dimension)
    : kind_(kind), seed_(seed), dimension_(dimension) {
  if (dimension < 2) {
    throw std::invalid_argument("codebook dimension must be >= 2");
  }
}

void Codebook::register_name(std::string_view name) {
  if (name.empty()) {
    throw std::invalid_argument("codebook: name must be non-empty");
  }
  if (name.starts_with(kTiebreakName)) {
    throw std::invalid_argument("codebook: names starting with \"" +
                                std::string(kTiebreakName) + "\" are reserved");
  }
  std::string key(name);
  if (index_.contains(key)) {
    return;
  }
  index_.emplace(key, names_.size());
  vectors_.push_back(generate(name, seed_, dimension_));
  names_.push_back(std::move(key));
}

bool Codebook::contains(std::string_view name) const {
  return index_.contains(std::string(name));
}

const Hypervector& Codebook::vector_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) {
    throw std::invalid_argument("codebook: unregistered name: " + std::string(name));
  }
  return vectors_[it->second];
}

CleanupResult Codebook::cleanup(const Hypervector& query, double tau) const {
  if (names_.empty()) {
    throw std::invalid_argument("cleanup: empty codebook");
  }
  if (query.dimension() != dimension_) {
    throw std::invalid_argument("cleanup: query dimension mismatch");
  }
  std::size_t best = 0;
  std::int64_t best_dot = dot(query, vectors_[0]);
  std::int64_t second_dot = std::numeric_limits<std::int64_t>::min();
  for (std::size_t i = 1; i < vectors_.size(); ++i) {
    const std::int64_t d = dot(query, vectors_[i]);
    if (d > best_dot || (d == best_dot && names_[i] < names_[best])) {
      second_dot = best_dot;
      best = i;
      best_dot = d;
    } else if (d > second_dot) {
      second_dot = d;
    }
  }
  CleanupResult result;
  result.name = names_[best];
  result.score = static_cast<double>(best_dot) / static_cast<double>(dimension_);
  result.runner_up_score =
      second_dot == std::numeric_limits<std::int64_t>::min()
          ? -1.0
          : static_cast<double>(second_dot) / static_cast<double>(dimension_);
  result.confident = result.score >= tau;
  return result;
}

bool Codebook::same_identity(const Codebook& other) const {
  return kind_ == other.kind_ && seed_ == other.seed_ &&
         dimension_ == other.dimension_ && names_ == other.names_;
}

double default_tau(std::size_t dimension) {
  return 4.0 / std::sqrt(static_cast<double>(dimension));
}

}  // namespace hdv
