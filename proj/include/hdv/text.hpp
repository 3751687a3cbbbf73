#pragma once

// Lexical style analysis and rewriting. Regex-level by design: identifiers
// are split at underscores, hyphens, and lower-to-upper transitions (acronym
// runs stay single segments); no parsing beyond string/comment region
// tracking. The vector-symbolic layer decides *what* to translate, these
// helpers decide *how* text changes.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hdv::text {

// Style attribute and value names shared with the codebooks.
inline constexpr std::string_view kNameFormat = "NameFormat";
inline constexpr std::string_view kIndentation = "Indentation";

inline constexpr std::string_view kCamelCase = "CamelCase";
inline constexpr std::string_view kPascalCase = "PascalCase";
inline constexpr std::string_view kSnakeCase = "SnakeCase";
inline constexpr std::string_view kScreamingSnake = "ScreamingSnake";
inline constexpr std::string_view kKebabCase = "KebabCase";

inline constexpr std::string_view kTabs = "Tabs";
inline constexpr std::string_view kSpaces2 = "Spaces2";
inline constexpr std::string_view kSpaces4 = "Spaces4";

std::vector<std::string> name_format_values();
std::vector<std::string> indentation_values();

// Classifies one identifier by its internal boundaries. Identifiers without
// boundary evidence (single lowercase words, bare capitalized words,
// all-caps runs without underscores) return nullopt and never vote or get
// rewritten. Leading/trailing underscores are ignored for classification.
std::optional<std::string> classify_identifier(std::string_view identifier);

// Splits an identifier into lowercase segments at '_', '-', lower-to-upper
// transitions, and acronym/word boundaries ("XMLParser" -> ["xml","parser"]).
std::vector<std::string> split_identifier(std::string_view identifier);

// Renders segments in the given NameFormat value; preserves leading and
// trailing underscore runs of the original identifier.
std::string render_identifier(std::string_view original, std::string_view format);

// Majority-vote detection over a whole text. Absent evidence omits the
// attribute; ties resolve in the enumeration order of the value lists above.
std::vector<std::pair<std::string, std::string>> detect_style_pairs(
    std::string_view text);

// Rewrites identifiers whose own classification equals from_format, skipping
// string literals and comments. from_format == to_format is the identity.
std::string recase_identifiers(std::string_view text, std::string_view from_format,
                               std::string_view to_format);

// Re-emits each line's leading whitespace at the same depth in the target
// unit. Applies to every line, string and comment interiors included.
std::string reindent(std::string_view text, std::string_view from_value,
                     std::string_view to_value);

}  // namespace hdv::text
