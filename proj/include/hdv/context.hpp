#pragma once

// Project-context modeling: role-filler bundles, role queries by unbinding,
// whole-context comparison, and context-to-context transition maps. Same
// algebra as the style module over separate role/filler codebooks.

#include <string>
#include <vector>

#include "hdv/codebook.hpp"
#include "hdv/core.hpp"
#include "hdv/profile.hpp"

namespace hdv {

using ContextProfile = Profile;

ContextProfile encode_context(const std::vector<NamePair>& pairs, Seed seed,
                              std::size_t dimension);
ContextProfile encode_context(const std::vector<NamePair>& pairs, Codebook roles,
                              Codebook fillers);

// cleanup(filler_cb, bind(vector(role), normalize(encoding)), tau). The role
// must be registered in the context's role codebook.
CleanupResult query_role(const ContextProfile& ctx, const std::string& role,
                         const Codebook& filler_cb, double tau);

// Similarity of the normalized encodings.
double context_similarity(const ContextProfile& a, const ContextProfile& b);

// Bind of the normalized encodings; commutative, so the map works in both
// directions, and a context's map with itself is the all-+1 identity.
Hypervector transition_map(const ContextProfile& from, const ContextProfile& to);

}  // namespace hdv
