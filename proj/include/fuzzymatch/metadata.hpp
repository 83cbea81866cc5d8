// Copyright 2026 The fuzzymatch authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzymatch/langid.hpp"

namespace fuzzymatch::metadata {

struct LanguageEntry {
  std::string range;  // language-range, e.g. "en-GB" or "*"
  double quality;     // in [0,1]; missing q defaults to 1.0
};

struct AcceptLanguage {
  std::vector<LanguageEntry> entries;
  // Base ISO 639-1 codes, deduplicated, sorted by descending quality then
  // original order. The wildcard "*" carries no base code.
  std::vector<std::string> primary_codes;
};

// Parses an Accept-Language header. Malformed entries are skipped, never
// fatal; a fully unparseable header yields an empty entry list. Quality
// values accept up to three decimal places and are clamped into [0,1].
AcceptLanguage parse_accept_language(std::string_view header);

// Inverse of parsing up to quality formatting; parse(serialize(x)) has the
// same entries as x.
std::string serialize(const AcceptLanguage& parsed);

// Map from ISO 3166-1 alpha-2 country code to the languages spoken there.
class CountryLanguageTable {
 public:
  // One line per country: "CC\tll,ll,ll".
  static CountryLanguageTable load(std::istream& in);
  static CountryLanguageTable load_file(const std::string& path);

  void insert(std::string_view country, std::vector<std::string> langs);
  // Case-insensitive lookup; unknown country yields an empty list.
  std::vector<std::string> languages(std::string_view country) const;
  std::size_t size() const { return map_.size(); }

 private:
  std::map<std::string, std::vector<std::string>> map_;
};

struct ChatRecord {
  std::string id;
  std::string message;
  std::optional<std::string> accept_language;
  std::optional<std::string> country;
};

enum class Bucket { All, HeaderOnly, CountryOnly, None };

std::string_view bucket_name(Bucket bucket);

struct AgreementRecord {
  std::string id;
  std::string classified;
  std::size_t message_length;  // normalized character count
  bool header_match;
  bool country_match;
  Bucket bucket;
};

// Classifies the message and checks it against both metadata signals.
// Absent metadata degrades to a non-match.
AgreementRecord evaluate_record(const ChatRecord& record,
                                const std::vector<langid::LanguageModel>& models,
                                const CountryLanguageTable& table);

struct LengthBin {
  std::size_t lower;                 // inclusive
  std::optional<std::size_t> upper;  // exclusive; nullopt = overflow bin
  double header_rate;
  double country_rate;
  std::size_t count;
};

struct AgreementReport {
  std::size_t total = 0;
  std::size_t all_count = 0;
  std::size_t header_only_count = 0;
  std::size_t country_only_count = 0;
  std::size_t none_count = 0;
  double all_fraction = 0;
  double header_only_fraction = 0;
  double country_only_fraction = 0;
  double none_fraction = 0;
  double header_match_rate = 0;
  double country_match_rate = 0;
  double either_match_rate = 0;
  std::vector<LengthBin> length_bins;
};

// Aggregates per-record flags into bucket counts, match rates and
// per-length-bin rates. Bins are right-open [e_i, e_{i+1}) plus a final
// overflow bin; edges must be strictly ascending.
AgreementReport aggregate(const std::vector<AgreementRecord>& records,
                          const std::vector<std::size_t>& bin_edges);

// Line-delimited records: one JSON object per line with fields id, message,
// accept_language (optional), country (optional).
std::vector<ChatRecord> load_dataset(std::istream& in);
std::vector<ChatRecord> load_dataset_file(const std::string& path);

std::string report_to_json(const AgreementReport& report);
std::string render_table(const AgreementReport& report);

}  // namespace fuzzymatch::metadata
