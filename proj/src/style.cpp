#include "hdv/style.hpp"

#include <stdexcept>

#include "hdv/text.hpp"

namespace hdv {

Codebook standard_style_attributes(Seed seed, std::size_t dimension) {
  Codebook cb(CodebookKind::kStyleAttribute, seed, dimension);
  cb.register_name(text::kNameFormat);
  cb.register_name(text::kIndentation);
  return cb;
}

Codebook standard_style_values(Seed seed, std::size_t dimension) {
  Codebook cb(CodebookKind::kStyleValue, seed, dimension);
  for (const auto& v : text::name_format_values()) {
    cb.register_name(v);
  }
  for (const auto& v : text::indentation_values()) {
    cb.register_name(v);
  }
  return cb;
}

StyleProfile build_profile(const std::vector<NamePair>& pairs, Seed seed,
                           std::size_t dimension) {
  return build_profile(pairs, standard_style_attributes(seed, dimension),
                       standard_style_values(seed, dimension));
}

StyleMapping build_mapping(const StyleProfile& model_style,
                           const StyleProfile& user_style) {
  require_compatible(model_style, user_style, "build_mapping");
  return StyleMapping{
      bind(profile_vector(model_style), profile_vector(user_style)),
      model_style,
      user_style,
  };
}

CleanupResult translate_value(const std::string& value, const StyleMapping& mapping,
                              const Codebook& value_cb, double tau) {
  if (!value_cb.contains(value)) {
    throw std::invalid_argument("translate_value: unregistered value: " + value);
  }
  return value_cb.cleanup(bind(value_cb.vector_of(value), mapping.map_vector), tau);
}

StyleProfile infer_style(const std::string& text, Seed seed, std::size_t dimension) {
  if (text.empty()) {
    throw std::invalid_argument("infer_style: empty text");
  }
  return build_profile(text::detect_style_pairs(text),
                       standard_style_attributes(seed, dimension),
                       standard_style_values(seed, dimension),
                       /*allow_empty=*/true);
}

RestyleOutcome restyle(const std::string& text, const StyleMapping& mapping,
                       const Codebook& value_cb, double tau) {
  RestyleOutcome outcome;
  outcome.text = text;
  const auto detected = text::detect_style_pairs(text);
  for (const auto& [attribute, from_value] : detected) {
    AttributeResolution res;
    res.attribute = attribute;
    res.from_value = from_value;
    if (value_cb.contains(from_value)) {
      const CleanupResult translated =
          translate_value(from_value, mapping, value_cb, tau);
      res.score = translated.score;
      res.confident = translated.confident;
      if (translated.confident) {
        res.to_value = translated.name;
      }
    }
    if (res.confident && res.to_value != res.from_value) {
      if (attribute == text::kNameFormat) {
        outcome.text =
            text::recase_identifiers(outcome.text, res.from_value, res.to_value);
        res.applied = true;
      } else if (attribute == text::kIndentation) {
        outcome.text = text::reindent(outcome.text, res.from_value, res.to_value);
        res.applied = true;
      }
    }
    outcome.attributes.push_back(std::move(res));
  }
  return outcome;
}

}  // namespace hdv
