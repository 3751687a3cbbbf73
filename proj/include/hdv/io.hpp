#pragma once

// Persistence. Vectors are never serialized: codebooks store names only,
// models store their lossless integer sums, profiles store their pairs;
// everything else regenerates deterministically from the recorded seed.
//
// File formats (all JSON, seeds as decimal strings of the 64-bit value):
//   codebook  {"version":1,"dimension":D,"seed":"...","kind":"...","names":[...]}
//   model     {"version":1,"n":N,"dimension":D,"seed":"...","windows_trained":W,
//              "codebook":[names...],"sums":"<base64 of little-endian int32>"}
//   profile   {"version":1,"dimension":D,"seed":"...","pairs":[[a,v],...]}
//   mapping   profile fields twice over ("source_pairs"/"target_pairs") plus
//             "kind": "style" | "context"
//   action log  JSON lines {"ts":<int ms>,"session":"...","action":"..."}

#include <cstdint>
#include <filesystem>
#include <istream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hdv/behavior.hpp"
#include "hdv/codebook.hpp"
#include "hdv/profile.hpp"
#include "hdv/style.hpp"

namespace hdv::io {

std::string base64_encode(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> base64_decode(std::string_view encoded);

void save_codebook(const Codebook& cb, const std::filesystem::path& path);
Codebook load_codebook(const std::filesystem::path& path);

void save_model(const SequenceModel& model, const std::filesystem::path& path);
SequenceModel load_model(const std::filesystem::path& path);

void save_profile(const Profile& profile, const std::filesystem::path& path);
Profile load_style_profile(const std::filesystem::path& path);
Profile load_context_profile(const std::filesystem::path& path);

void save_mapping(const StyleMapping& mapping, std::string_view kind,
                  const std::filesystem::path& path);
// Returns the mapping and its recorded kind ("style" or "context").
std::pair<StyleMapping, std::string> load_mapping(const std::filesystem::path& path);

// Rejects lines with missing or mistyped fields, reporting 1-based line
// numbers; blank lines are ignored.
std::vector<ActionEvent> parse_action_log(std::istream& in, std::string_view origin);
std::vector<ActionEvent> read_action_log(const std::filesystem::path& path);
void write_action_log(const std::vector<ActionEvent>& events,
                      const std::filesystem::path& path);
std::string action_log_to_jsonl(const std::vector<ActionEvent>& events);

// Accepts decimal or 0x-prefixed hexadecimal.
std::uint64_t parse_seed(std::string_view s);

// Fixed 6-decimal formatting used for every printed score.
std::string format_score(double value);

}  // namespace hdv::io
