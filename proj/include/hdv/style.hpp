#pragma once

// Stylistic-preference modeling: role-filler style profiles, style-to-style
// mappings built by binding, value translation through a mapping, and
// whole-text restyling. The mapping decides target values; deterministic
// textual transforms (hdv::text) apply them.

#include <string>
#include <vector>

#include "hdv/codebook.hpp"
#include "hdv/core.hpp"
#include "hdv/profile.hpp"

namespace hdv {

using StyleProfile = Profile;

// Bidirectional style translator: the componentwise product of the two
// normalized profile bundles. Binding it with either profile's bundle
// restores the other exactly; binding with a single value vector lands near
// the paired value on the far side. A mapping of a profile with itself is
// the all-+1 identity.
struct StyleMapping {
  Hypervector map_vector;
  StyleProfile source;
  StyleProfile target;
};

// Standard codebooks for the fixed attribute set (NameFormat, Indentation)
// and their enumerated values; both extensible via register_name.
Codebook standard_style_attributes(Seed seed, std::size_t dimension);
Codebook standard_style_values(Seed seed, std::size_t dimension);

StyleProfile build_profile(const std::vector<NamePair>& pairs, Seed seed,
                           std::size_t dimension);

StyleMapping build_mapping(const StyleProfile& model_style,
                           const StyleProfile& user_style);

// cleanup(value_cb, bind(vector(value), map_vector), tau).
CleanupResult translate_value(const std::string& value, const StyleMapping& mapping,
                              const Codebook& value_cb, double tau);

// Majority-vote style detection; evidence-free text yields an empty profile.
StyleProfile infer_style(const std::string& text, Seed seed, std::size_t dimension);

struct AttributeResolution {
  std::string attribute;
  std::string from_value;
  std::string to_value;   // empty when unresolved
  double score = 0.0;
  bool confident = false;
  bool applied = false;   // false for unresolved or already-matching values
};

struct RestyleOutcome {
  std::string text;
  std::vector<AttributeResolution> attributes;
};

// For each attribute detected in the text, translates its value through the
// mapping and applies the textual transform when the translation is
// confident; non-confident attributes are reported and left untouched.
// Identifiers inside string literals and comments are never re-cased;
// indentation is re-emitted everywhere.
RestyleOutcome restyle(const std::string& text, const StyleMapping& mapping,
                       const Codebook& value_cb, double tau);

}  // namespace hdv
