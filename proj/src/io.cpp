#include "hdv/io.hpp"

#include <array>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace hdv::io {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr std::string_view kBase64Alphabet =
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw std::runtime_error("cannot write " + path.string());
  }
  out << content;
  if (!out) {
    throw std::runtime_error("write failed: " + path.string());
  }
}

json parse_json_file(const std::filesystem::path& path) {
  const std::string content = read_file(path);
  try {
    return json::parse(content);
  } catch (const json::exception& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

void require_version(const json& doc, const std::filesystem::path& path) {
  if (!doc.contains("version") || !doc["version"].is_number_integer() ||
      doc["version"].get<int>() != 1) {
    throw std::runtime_error(path.string() + ": unsupported or missing version");
  }
}

std::uint64_t seed_field(const json& doc, const std::filesystem::path& path) {
  if (!doc.contains("seed") || !doc["seed"].is_string()) {
    throw std::runtime_error(path.string() + ": missing seed");
  }
  return parse_seed(doc["seed"].get<std::string>());
}

std::string seed_string(Seed seed) { return std::to_string(seed.value); }

std::vector<NamePair> pairs_field(const json& doc, const char* key,
                                  const std::filesystem::path& path) {
  if (!doc.contains(key) || !doc[key].is_array()) {
    throw std::runtime_error(path.string() + ": missing " + key);
  }
  std::vector<NamePair> pairs;
  for (const auto& entry : doc[key]) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_string() ||
        !entry[1].is_string()) {
      throw std::runtime_error(path.string() + ": malformed entry in " + key);
    }
    pairs.emplace_back(entry[0].get<std::string>(), entry[1].get<std::string>());
  }
  return pairs;
}

ordered_json pairs_to_json(const std::vector<NamePair>& pairs) {
  ordered_json arr = ordered_json::array();
  for (const auto& [a, b] : pairs) {
    arr.push_back(ordered_json::array({a, b}));
  }
  return arr;
}

}  // namespace

std::string base64_encode(std::span<const std::uint8_t> bytes) {
  std::string out;
  out.reserve((bytes.size() + 2) / 3 * 4);
  std::size_t i = 0;
  while (i + 3 <= bytes.size()) {
    const std::uint32_t v = (static_cast<std::uint32_t>(bytes[i]) << 16) |
                            (static_cast<std::uint32_t>(bytes[i + 1]) << 8) |
                            bytes[i + 2];
    out.push_back(kBase64Alphabet[(v >> 18) & 63]);
    out.push_back(kBase64Alphabet[(v >> 12) & 63]);
    out.push_back(kBase64Alphabet[(v >> 6) & 63]);
    out.push_back(kBase64Alphabet[v & 63]);
    i += 3;
  }
  const std::size_t rest = bytes.size() - i;
  if (rest == 1) {
    const std::uint32_t v = static_cast<std::uint32_t>(bytes[i]) << 16;
    out.push_back(kBase64Alphabet[(v >> 18) & 63]);
    out.push_back(kBase64Alphabet[(v >> 12) & 63]);
    out.append("==");
  } else if (rest == 2) {
    const std::uint32_t v = (static_cast<std::uint32_t>(bytes[i]) << 16) |
                            (static_cast<std::uint32_t>(bytes[i + 1]) << 8);
    out.push_back(kBase64Alphabet[(v >> 18) & 63]);
    out.push_back(kBase64Alphabet[(v >> 12) & 63]);
    out.push_back(kBase64Alphabet[(v >> 6) & 63]);
    out.push_back('=');
  }
  return out;
}

std::vector<std::uint8_t> base64_decode(std::string_view encoded) {
  std::array<std::int8_t, 256> table;
  table.fill(-1);
  for (std::size_t i = 0; i < kBase64Alphabet.size(); ++i) {
    table[static_cast<unsigned char>(kBase64Alphabet[i])] = static_cast<std::int8_t>(i);
  }
  std::vector<std::uint8_t> out;
  out.reserve(encoded.size() / 4 * 3);
  std::uint32_t acc = 0;
  int bits = 0;
  for (char c : encoded) {
    if (c == '=' || c == '\n' || c == '\r') {
      continue;
    }
    const std::int8_t v = table[static_cast<unsigned char>(c)];
    if (v < 0) {
      throw std::runtime_error("invalid base64 character");
    }
    acc = (acc << 6) | static_cast<std::uint32_t>(v);
    bits += 6;
    if (bits >= 8) {
      bits -= 8;
      out.push_back(static_cast<std::uint8_t>((acc >> bits) & 0xff));
    }
  }
  return out;
}

void save_codebook(const Codebook& cb, const std::filesystem::path& path) {
  ordered_json doc;
  doc["version"] = 1;
  doc["dimension"] = cb.dimension();
  doc["seed"] = seed_string(cb.seed());
  doc["kind"] = std::string(to_string(cb.kind()));
  doc["names"] = cb.names();
  write_file(path, doc.dump(2) + "\n");
}

Codebook load_codebook(const std::filesystem::path& path) {
  const json doc = parse_json_file(path);
  require_version(doc, path);
  if (!doc.contains("dimension") || !doc.contains("kind") || !doc.contains("names")) {
    throw std::runtime_error(path.string() + ": missing codebook fields");
  }
  Codebook cb(codebook_kind_from_string(doc["kind"].get<std::string>()),
              Seed{seed_field(doc, path)}, doc["dimension"].get<std::size_t>());
  for (const auto& name : doc["names"]) {
    cb.register_name(name.get<std::string>());
  }
  return cb;
}

void save_model(const SequenceModel& model, const std::filesystem::path& path) {
  ordered_json doc;
  doc["version"] = 1;
  doc["n"] = model.n;
  doc["dimension"] = model.behavior.dimension();
  doc["seed"] = seed_string(model.actions.seed());
  doc["windows_trained"] = model.windows_trained();
  doc["codebook"] = model.actions.names();
  std::vector<std::uint8_t> bytes;
  bytes.reserve(model.behavior.dimension() * 4);
  for (std::int32_t s : model.behavior.sums()) {
    const auto u = static_cast<std::uint32_t>(s);
    bytes.push_back(static_cast<std::uint8_t>(u & 0xff));
    bytes.push_back(static_cast<std::uint8_t>((u >> 8) & 0xff));
    bytes.push_back(static_cast<std::uint8_t>((u >> 16) & 0xff));
    bytes.push_back(static_cast<std::uint8_t>((u >> 24) & 0xff));
  }
  doc["sums"] = base64_encode(bytes);
  write_file(path, doc.dump(2) + "\n");
}

SequenceModel load_model(const std::filesystem::path& path) {
  const json doc = parse_json_file(path);
  require_version(doc, path);
  for (const char* key : {"n", "dimension", "windows_trained", "codebook", "sums"}) {
    if (!doc.contains(key)) {
      throw std::runtime_error(path.string() + ": missing model field " + key);
    }
  }
  const auto dimension = doc["dimension"].get<std::size_t>();
  Codebook cb(CodebookKind::kAction, Seed{seed_field(doc, path)}, dimension);
  for (const auto& name : doc["codebook"]) {
    cb.register_name(name.get<std::string>());
  }
  const std::vector<std::uint8_t> bytes =
      base64_decode(doc["sums"].get<std::string>());
  if (bytes.size() != dimension * 4) {
    throw std::runtime_error(path.string() + ": sums length does not match dimension");
  }
  std::vector<std::int32_t> sums(dimension);
  for (std::size_t i = 0; i < dimension; ++i) {
    const std::uint32_t u = static_cast<std::uint32_t>(bytes[4 * i]) |
                            (static_cast<std::uint32_t>(bytes[4 * i + 1]) << 8) |
                            (static_cast<std::uint32_t>(bytes[4 * i + 2]) << 16) |
                            (static_cast<std::uint32_t>(bytes[4 * i + 3]) << 24);
    sums[i] = static_cast<std::int32_t>(u);
  }
  try {
    return SequenceModel{doc["n"].get<int>(),
                         Accumulator::from_sums(std::move(sums),
                                                doc["windows_trained"].get<std::int64_t>()),
                         std::move(cb)};
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

void save_profile(const Profile& profile, const std::filesystem::path& path) {
  ordered_json doc;
  doc["version"] = 1;
  doc["dimension"] = profile.dimension();
  doc["seed"] = seed_string(profile.seed());
  doc["pairs"] = pairs_to_json(profile.pairs);
  write_file(path, doc.dump(2) + "\n");
}

namespace {

Profile load_profile_as(const std::filesystem::path& path, CodebookKind attr_kind,
                        CodebookKind value_kind, bool style_standard_names) {
  const json doc = parse_json_file(path);
  require_version(doc, path);
  if (!doc.contains("dimension")) {
    throw std::runtime_error(path.string() + ": missing dimension");
  }
  const auto dimension = doc["dimension"].get<std::size_t>();
  const Seed seed{seed_field(doc, path)};
  const auto pairs = pairs_field(doc, "pairs", path);
  if (style_standard_names) {
    return build_profile(pairs, standard_style_attributes(seed, dimension),
                         standard_style_values(seed, dimension), /*allow_empty=*/true);
  }
  return build_profile(pairs, Codebook(attr_kind, seed, dimension),
                       Codebook(value_kind, seed, dimension), /*allow_empty=*/true);
}

}  // namespace

Profile load_style_profile(const std::filesystem::path& path) {
  return load_profile_as(path, CodebookKind::kStyleAttribute,
                         CodebookKind::kStyleValue, true);
}

Profile load_context_profile(const std::filesystem::path& path) {
  return load_profile_as(path, CodebookKind::kContextRole,
                         CodebookKind::kContextFiller, false);
}

void save_mapping(const StyleMapping& mapping, std::string_view kind,
                  const std::filesystem::path& path) {
  if (kind != "style" && kind != "context") {
    throw std::invalid_argument("save_mapping: kind must be style or context, got " +
                                std::string(kind));
  }
  ordered_json doc;
  doc["version"] = 1;
  doc["kind"] = std::string(kind);
  doc["dimension"] = mapping.source.dimension();
  doc["seed"] = seed_string(mapping.source.seed());
  doc["source_pairs"] = pairs_to_json(mapping.source.pairs);
  doc["target_pairs"] = pairs_to_json(mapping.target.pairs);
  write_file(path, doc.dump(2) + "\n");
}

std::pair<StyleMapping, std::string> load_mapping(const std::filesystem::path& path) {
  const json doc = parse_json_file(path);
  require_version(doc, path);
  if (!doc.contains("dimension") || !doc.contains("kind")) {
    throw std::runtime_error(path.string() + ": missing mapping fields");
  }
  const auto dimension = doc["dimension"].get<std::size_t>();
  const Seed seed{seed_field(doc, path)};
  const std::string kind = doc["kind"].get<std::string>();
  if (kind != "style" && kind != "context") {
    throw std::runtime_error(path.string() + ": unknown mapping kind " + kind);
  }
  const auto source_pairs = pairs_field(doc, "source_pairs", path);
  const auto target_pairs = pairs_field(doc, "target_pairs", path);
  const bool style = kind == "style";
  const auto build = [&](const std::vector<NamePair>& pairs) {
    if (style) {
      return build_profile(pairs, standard_style_attributes(seed, dimension),
                           standard_style_values(seed, dimension), true);
    }
    return build_profile(pairs,
                         Codebook(CodebookKind::kContextRole, seed, dimension),
                         Codebook(CodebookKind::kContextFiller, seed, dimension),
                         true);
  };
  const Profile source = build(source_pairs);
  const Profile target = build(target_pairs);
  return {build_mapping(source, target), kind};
}

std::vector<ActionEvent> parse_action_log(std::istream& in, std::string_view origin) {
  std::vector<ActionEvent> events;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      continue;
    }
    json doc;
    try {
      doc = json::parse(line);
    } catch (const json::exception&) {
      throw std::runtime_error(std::string(origin) + ":" + std::to_string(line_no) +
                               ": invalid JSON");
    }
    if (!doc.is_object() || !doc.contains("ts") || !doc["ts"].is_number_integer() ||
        !doc.contains("session") || !doc["session"].is_string() ||
        !doc.contains("action") || !doc["action"].is_string()) {
      throw std::runtime_error(std::string(origin) + ":" + std::to_string(line_no) +
                               ": event requires integer \"ts\", string \"session\","
                               " string \"action\"");
    }
    events.push_back(ActionEvent{doc["ts"].get<std::int64_t>(),
                                 doc["session"].get<std::string>(),
                                 doc["action"].get<std::string>()});
  }
  return events;
}

std::vector<ActionEvent> read_action_log(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open " + path.string());
  }
  return parse_action_log(in, path.string());
}

std::string action_log_to_jsonl(const std::vector<ActionEvent>& events) {
  std::string out;
  for (const auto& event : events) {
    ordered_json doc;
    doc["ts"] = event.timestamp_ms;
    doc["session"] = event.session;
    doc["action"] = event.action;
    out += doc.dump();
    out.push_back('\n');
  }
  return out;
}

void write_action_log(const std::vector<ActionEvent>& events,
                      const std::filesystem::path& path) {
  write_file(path, action_log_to_jsonl(events));
}

std::uint64_t parse_seed(std::string_view s) {
  std::uint64_t value = 0;
  std::from_chars_result result{};
  if (s.starts_with("0x") || s.starts_with("0X")) {
    result = std::from_chars(s.data() + 2, s.data() + s.size(), value, 16);
  } else {
    result = std::from_chars(s.data(), s.data() + s.size(), value, 10);
  }
  if (result.ec != std::errc{} || result.ptr != s.data() + s.size()) {
    throw std::runtime_error("invalid seed: " + std::string(s));
  }
  return value;
}

std::string format_score(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", value);
  return buf;
}

}  // namespace hdv::io
