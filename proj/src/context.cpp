#include "hdv/context.hpp"

#include <stdexcept>

namespace hdv {

ContextProfile encode_context(const std::vector<NamePair>& pairs, Seed seed,
                              std::size_t dimension) {
  return encode_context(pairs, Codebook(CodebookKind::kContextRole, seed, dimension),
                        Codebook(CodebookKind::kContextFiller, seed, dimension));
}

ContextProfile encode_context(const std::vector<NamePair>& pairs, Codebook roles,
                              Codebook fillers) {
  return build_profile(pairs, std::move(roles), std::move(fillers));
}

CleanupResult query_role(const ContextProfile& ctx, const std::string& role,
                         const Codebook& filler_cb, double tau) {
  if (!ctx.attributes.contains(role)) {
    throw std::invalid_argument("query_role: unregistered role: " + role);
  }
  return filler_cb.cleanup(
      bind(ctx.attributes.vector_of(role), profile_vector(ctx)), tau);
}

double context_similarity(const ContextProfile& a, const ContextProfile& b) {
  require_compatible(a, b, "context_similarity");
  return similarity(profile_vector(a), profile_vector(b));
}

Hypervector transition_map(const ContextProfile& from, const ContextProfile& to) {
  require_compatible(from, to, "transition_map");
  return bind(profile_vector(from), profile_vector(to));
}

}  // namespace hdv
