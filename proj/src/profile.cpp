#include "hdv/profile.hpp"

#include <stdexcept>
#include <unordered_set>

namespace hdv {

Profile build_profile(const std::vector<NamePair>& pairs, Codebook attributes,
                      Codebook values, bool allow_empty) {
  if (pairs.empty() && !allow_empty) {
    throw std::invalid_argument("build_profile: empty pair list");
  }
  if (attributes.seed() != values.seed() ||
      attributes.dimension() != values.dimension()) {
    throw std::invalid_argument("build_profile: codebook seed/dimension mismatch");
  }
  std::unordered_set<std::string> seen;
  for (const auto& [attr, value] : pairs) {
    if (!seen.insert(attr).second) {
      throw std::invalid_argument("build_profile: duplicate attribute: " + attr);
    }
    attributes.register_name(attr);
    values.register_name(value);
  }
  Profile profile{pairs, Accumulator(attributes.dimension()), std::move(attributes),
                  std::move(values)};
  for (const auto& [attr, value] : pairs) {
    profile.encoding.add(
        bind(profile.attributes.vector_of(attr), profile.values.vector_of(value)));
  }
  return profile;
}

Hypervector profile_vector(const Profile& profile) {
  return normalize(profile.encoding, profile.seed());
}

void require_compatible(const Profile& a, const Profile& b, const char* op) {
  if (a.seed() != b.seed() || a.dimension() != b.dimension()) {
    throw std::invalid_argument(std::string(op) + ": profile seed/dimension mismatch");
  }
}

}  // namespace hdv
