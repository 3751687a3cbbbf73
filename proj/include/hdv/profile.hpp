#pragma once

// Role-filler bundles shared by the style and context modules: a list of
// (attribute, value) name pairs and the accumulator of their bound vectors.

#include <string>
#include <utility>
#include <vector>

#include "hdv/codebook.hpp"
#include "hdv/core.hpp"

namespace hdv {

using NamePair = std::pair<std::string, std::string>;

// Immutable after construction; encoding.count() equals the number of pairs.
// The two codebooks carry the profile's seed and dimension.
struct Profile {
  std::vector<NamePair> pairs;
  Accumulator encoding;
  Codebook attributes;
  Codebook values;

  [[nodiscard]] Seed seed() const { return attributes.seed(); }
  [[nodiscard]] std::size_t dimension() const { return encoding.dimension(); }
};

// Bundles bind(vector(attribute), vector(value)) over all pairs, registering
// names as needed. Attributes must be unique; empty pair lists are allowed
// only via `allow_empty` (used by style inference on evidence-free text).
Profile build_profile(const std::vector<NamePair>& pairs, Codebook attributes,
                      Codebook values, bool allow_empty = false);

// normalize(encoding) under the profile's seed.
Hypervector profile_vector(const Profile& profile);

// Same seed and dimension; required before any two profiles are combined.
void require_compatible(const Profile& a, const Profile& b, const char* op);

}  // namespace hdv
