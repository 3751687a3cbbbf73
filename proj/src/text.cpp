#include "hdv/text.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

namespace hdv::text {

namespace {

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_';
}

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

bool is_lower(char c) { return std::islower(static_cast<unsigned char>(c)) != 0; }
bool is_upper(char c) { return std::isupper(static_cast<unsigned char>(c)) != 0; }
bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

char to_lower(char c) {
  return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
}
char to_upper(char c) {
  return static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
}

// Code / string-literal / comment regions, scanned left to right. Handles
// '...' and "..." with backslash escapes, ''' / """ blocks, //, /* */ and #
// comments. Good enough for the lexical layer; not a parser.
enum class Region { kCode, kString, kComment };

struct Span {
  Region region;
  std::size_t begin;
  std::size_t end;  // exclusive
};

std::vector<Span> scan_regions(std::string_view text) {
  std::vector<Span> spans;
  std::size_t i = 0;
  std::size_t code_start = 0;
  const auto flush_code = [&](std::size_t upto) {
    if (upto > code_start) {
      spans.push_back({Region::kCode, code_start, upto});
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == '"' || c == '\'') {
      flush_code(i);
      const std::size_t start = i;
      const bool triple = i + 2 < text.size() && text[i + 1] == c && text[i + 2] == c;
      if (triple) {
        i += 3;
        while (i < text.size()) {
          if (text[i] == '\\') {
            i += 2;
            continue;
          }
          if (text[i] == c && i + 2 < text.size() && text[i + 1] == c &&
              text[i + 2] == c) {
            i += 3;
            break;
          }
          ++i;
        }
      } else {
        ++i;
        while (i < text.size() && text[i] != '\n') {
          if (text[i] == '\\') {
            i += 2;
            continue;
          }
          if (text[i] == c) {
            ++i;
            break;
          }
          ++i;
        }
      }
      spans.push_back({Region::kString, start, std::min(i, text.size())});
      code_start = std::min(i, text.size());
      continue;
    }
    if (c == '#' || (c == '/' && i + 1 < text.size() && text[i + 1] == '/')) {
      flush_code(i);
      const std::size_t start = i;
      while (i < text.size() && text[i] != '\n') {
        ++i;
      }
      spans.push_back({Region::kComment, start, i});
      code_start = i;
      continue;
    }
    if (c == '/' && i + 1 < text.size() && text[i + 1] == '*') {
      flush_code(i);
      const std::size_t start = i;
      i += 2;
      while (i + 1 < text.size() && !(text[i] == '*' && text[i + 1] == '/')) {
        ++i;
      }
      i = i + 1 < text.size() ? i + 2 : text.size();
      spans.push_back({Region::kComment, start, i});
      code_start = i;
      continue;
    }
    ++i;
  }
  flush_code(text.size());
  return spans;
}

struct IdentifierToken {
  std::size_t begin;
  std::size_t end;
};

// Identifiers within code regions. When join_hyphens is set, runs of the
// form ident-ident-... (hyphen directly between word characters) are lexed
// as a single kebab token.
std::vector<IdentifierToken> lex_identifiers(std::string_view text,
                                             const std::vector<Span>& spans,
                                             bool join_hyphens) {
  std::vector<IdentifierToken> tokens;
  for (const auto& span : spans) {
    if (span.region != Region::kCode) {
      continue;
    }
    std::size_t i = span.begin;
    while (i < span.end) {
      if (!is_ident_start(text[i]) ||
          (i > span.begin && is_ident_char(text[i - 1]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < span.end && is_ident_char(text[j])) {
        ++j;
      }
      if (join_hyphens) {
        while (j < span.end && text[j] == '-' && j + 1 < span.end &&
               is_alpha(text[j + 1])) {
          ++j;
          while (j < span.end && is_ident_char(text[j])) {
            ++j;
          }
        }
      }
      tokens.push_back({i, j});
      i = j;
    }
  }
  return tokens;
}

// Kebab candidates for detection: lowercase ident '-' lowercase ident with
// no intervening space, e.g. "font-size". Counted as votes only.
std::vector<IdentifierToken> lex_kebab_candidates(std::string_view text,
                                                  const std::vector<Span>& spans) {
  std::vector<IdentifierToken> out;
  for (const auto& tok : lex_identifiers(text, spans, true)) {
    const std::string_view s = text.substr(tok.begin, tok.end - tok.begin);
    if (s.find('-') == std::string_view::npos) {
      continue;
    }
    const bool all_lower = std::none_of(s.begin(), s.end(), [](char c) {
      return is_upper(c) || c == '_';
    });
    if (all_lower) {
      out.push_back(tok);
    }
  }
  return out;
}

std::string_view core_of(std::string_view identifier, std::size_t* lead,
                         std::size_t* trail) {
  std::size_t b = 0;
  while (b < identifier.size() && identifier[b] == '_') {
    ++b;
  }
  std::size_t e = identifier.size();
  while (e > b && identifier[e - 1] == '_') {
    --e;
  }
  if (lead != nullptr) {
    *lead = b;
  }
  if (trail != nullptr) {
    *trail = identifier.size() - e;
  }
  return identifier.substr(b, e - b);
}

}  // namespace

std::vector<std::string> name_format_values() {
  return {std::string(kCamelCase), std::string(kPascalCase), std::string(kSnakeCase),
          std::string(kScreamingSnake), std::string(kKebabCase)};
}

std::vector<std::string> indentation_values() {
  return {std::string(kTabs), std::string(kSpaces2), std::string(kSpaces4)};
}

std::optional<std::string> classify_identifier(std::string_view identifier) {
  const std::string_view core = core_of(identifier, nullptr, nullptr);
  if (core.empty()) {
    return std::nullopt;
  }
  if (core.find('-') != std::string_view::npos) {
    const bool clean = std::none_of(core.begin(), core.end(), [](char c) {
      return is_upper(c) || c == '_';
    });
    return clean ? std::optional<std::string>(std::string(kKebabCase)) : std::nullopt;
  }
  // Internal underscore: one with word characters on both sides.
  bool internal_underscore = false;
  for (std::size_t i = 1; i + 1 < core.size(); ++i) {
    if (core[i] == '_' && core[i - 1] != '_' && core[i + 1] != '_') {
      internal_underscore = true;
      break;
    }
  }
  const bool has_lower = std::any_of(core.begin(), core.end(), is_lower);
  const bool has_upper = std::any_of(core.begin(), core.end(), is_upper);
  if (internal_underscore) {
    if (has_lower && !has_upper) {
      return std::string(kSnakeCase);
    }
    if (has_upper && !has_lower) {
      return std::string(kScreamingSnake);
    }
    return std::nullopt;
  }
  // No separators: need a case boundary. lower->upper, or an acronym->word
  // boundary (upper followed by lower, preceded by another upper).
  bool boundary = false;
  for (std::size_t i = 1; i < core.size(); ++i) {
    if (is_lower(core[i - 1]) && is_upper(core[i])) {
      boundary = true;
      break;
    }
    if (i + 1 < core.size() && is_upper(core[i - 1]) && is_upper(core[i]) &&
        is_lower(core[i + 1])) {
      boundary = true;
      break;
    }
  }
  if (!boundary) {
    return std::nullopt;
  }
  std::size_t first_alpha = 0;
  while (first_alpha < core.size() && !is_alpha(core[first_alpha])) {
    ++first_alpha;
  }
  if (first_alpha == core.size()) {
    return std::nullopt;
  }
  return is_lower(core[first_alpha]) ? std::string(kCamelCase)
                                     : std::string(kPascalCase);
}

std::vector<std::string> split_identifier(std::string_view identifier) {
  const std::string_view core = core_of(identifier, nullptr, nullptr);
  std::vector<std::string> segments;
  std::string current;
  const auto flush = [&]() {
    if (!current.empty()) {
      segments.push_back(current);
      current.clear();
    }
  };
  for (std::size_t i = 0; i < core.size(); ++i) {
    const char c = core[i];
    if (c == '_' || c == '-') {
      flush();
      continue;
    }
    if (!current.empty()) {
      const char prev = core[i - 1];
      const bool lower_to_upper = is_lower(prev) && is_upper(c);
      const bool acronym_to_word = is_upper(prev) && is_upper(c) &&
                                   i + 1 < core.size() && is_lower(core[i + 1]);
      if (lower_to_upper || acronym_to_word) {
        flush();
      }
    }
    current.push_back(to_lower(c));
  }
  flush();
  return segments;
}

std::string render_identifier(std::string_view original, std::string_view format) {
  std::size_t lead = 0;
  std::size_t trail = 0;
  core_of(original, &lead, &trail);
  const std::vector<std::string> segments = split_identifier(original);
  std::string out(original.substr(0, lead));
  const auto capitalize = [](const std::string& s) {
    std::string c = s;
    if (!c.empty()) {
      c[0] = to_upper(c[0]);
    }
    return c;
  };
  for (std::size_t i = 0; i < segments.size(); ++i) {
    if (format == kCamelCase) {
      out += i == 0 ? segments[i] : capitalize(segments[i]);
    } else if (format == kPascalCase) {
      out += capitalize(segments[i]);
    } else if (format == kSnakeCase) {
      out += (i > 0 ? "_" : "") + segments[i];
    } else if (format == kScreamingSnake) {
      std::string u = segments[i];
      std::transform(u.begin(), u.end(), u.begin(), to_upper);
      out += (i > 0 ? "_" : "") + u;
    } else if (format == kKebabCase) {
      out += (i > 0 ? "-" : "") + segments[i];
    } else {
      throw std::invalid_argument("unknown name format: " + std::string(format));
    }
  }
  out.append(original.substr(original.size() - trail));
  return out;
}

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == '\n') {
      lines.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  return lines;
}

std::optional<std::string> indentation_vote(std::string_view line) {
  std::size_t ws = 0;
  while (ws < line.size() && (line[ws] == ' ' || line[ws] == '\t')) {
    ++ws;
  }
  if (ws == 0 || ws == line.size()) {
    return std::nullopt;  // unindented or blank
  }
  if (line[0] == '\t') {
    return std::string(kTabs);
  }
  const std::string_view lead = line.substr(0, ws);
  if (lead.find('\t') != std::string_view::npos) {
    return std::nullopt;  // mixed leading whitespace carries no clean vote
  }
  return ws % 4 == 0 ? std::string(kSpaces4) : std::string(kSpaces2);
}

std::optional<std::string> majority(const std::map<std::string, std::size_t>& votes,
                                    const std::vector<std::string>& order) {
  std::size_t best = 0;
  for (const auto& [_, n] : votes) {
    best = std::max(best, n);
  }
  if (best == 0) {
    return std::nullopt;
  }
  for (const auto& value : order) {  // ties resolve in enumeration order
    auto it = votes.find(value);
    if (it != votes.end() && it->second == best) {
      return value;
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<std::pair<std::string, std::string>> detect_style_pairs(
    std::string_view text) {
  const std::vector<Span> spans = scan_regions(text);

  std::map<std::string, std::size_t> name_votes;
  for (const auto& tok : lex_identifiers(text, spans, false)) {
    if (auto cls = classify_identifier(text.substr(tok.begin, tok.end - tok.begin))) {
      ++name_votes[*cls];
    }
  }
  for (const auto& tok : lex_kebab_candidates(text, spans)) {
    (void)tok;
    ++name_votes[std::string(kKebabCase)];
  }

  std::map<std::string, std::size_t> indent_votes;
  for (const auto& line : split_lines(text)) {
    if (auto vote = indentation_vote(line)) {
      ++indent_votes[*vote];
    }
  }

  std::vector<std::pair<std::string, std::string>> pairs;
  if (auto name = majority(name_votes, name_format_values())) {
    pairs.emplace_back(std::string(kNameFormat), *name);
  }
  if (auto indent = majority(indent_votes, indentation_values())) {
    pairs.emplace_back(std::string(kIndentation), *indent);
  }
  return pairs;
}

std::string recase_identifiers(std::string_view text, std::string_view from_format,
                               std::string_view to_format) {
  if (from_format == to_format) {
    return std::string(text);
  }
  const std::vector<Span> spans = scan_regions(text);
  const bool join_hyphens = from_format == kKebabCase;
  std::string out;
  out.reserve(text.size());
  std::size_t pos = 0;
  for (const auto& tok : lex_identifiers(text, spans, join_hyphens)) {
    const std::string_view ident = text.substr(tok.begin, tok.end - tok.begin);
    const auto cls = classify_identifier(ident);
    if (!cls.has_value() || *cls != from_format) {
      continue;
    }
    out.append(text.substr(pos, tok.begin - pos));
    out.append(render_identifier(ident, to_format));
    pos = tok.end;
  }
  out.append(text.substr(pos));
  return out;
}

std::string reindent(std::string_view text, std::string_view from_value,
                     std::string_view to_value) {
  if (from_value == to_value) {
    return std::string(text);
  }
  const auto unit_width = [](std::string_view value) -> std::size_t {
    if (value == kSpaces2) return 2;
    if (value == kSpaces4) return 4;
    return 1;  // tabs
  };
  const std::string target_unit = to_value == kTabs
                                      ? "\t"
                                      : std::string(unit_width(to_value), ' ');
  std::string out;
  out.reserve(text.size());
  const std::vector<std::string_view> lines = split_lines(text);
  for (std::size_t li = 0; li < lines.size(); ++li) {
    const std::string_view line = lines[li];
    std::size_t ws = 0;
    while (ws < line.size() && (line[ws] == ' ' || line[ws] == '\t')) {
      ++ws;
    }
    const std::string_view lead = line.substr(0, ws);
    std::size_t depth = 0;
    std::string remainder;
    if (from_value == kTabs) {
      std::size_t i = 0;
      while (i < lead.size() && lead[i] == '\t') {
        ++depth;
        ++i;
      }
      remainder = std::string(lead.substr(i));
    } else {
      const std::size_t unit = unit_width(from_value);
      std::size_t spaces = 0;
      while (spaces < lead.size() && lead[spaces] == ' ') {
        ++spaces;
      }
      depth = spaces / unit;
      remainder = std::string(spaces % unit, ' ') + std::string(lead.substr(spaces));
    }
    for (std::size_t d = 0; d < depth; ++d) {
      out += target_unit;
    }
    out += remainder;
    out.append(line.substr(ws));
    if (li + 1 < lines.size()) {
      out.push_back('\n');
    }
  }
  return out;
}

}  // namespace hdv::text
