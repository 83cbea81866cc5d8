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
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace fuzzymatch::langid {

inline constexpr std::size_t kDefaultTopK = 300;
// Messages shorter than this (normalized characters) are flagged as
// low-confidence predictions.
inline constexpr std::size_t kConfidenceFloor = 10;

// Rank-ordered n-gram frequency profile of one language. Grams of sizes
// one to five, extracted from words padded with a boundary sentinel,
// sorted by descending count (ties lexicographic) and truncated to top_k.
struct LanguageModel {
  std::string language;  // ISO 639-1 code
  std::vector<std::string> ranked_grams;
  std::size_t top_k = kDefaultTopK;
  // gram -> rank index, derived from ranked_grams.
  std::unordered_map<std::string, std::size_t> rank_of;
};

// Lowercases, drops ASCII digits and punctuation, and collapses whitespace
// runs to single spaces. The length of the result is the message length
// used for confidence and report binning.
std::string normalize_message(std::string_view text);

LanguageModel train_model(std::string_view corpus, std::string_view language,
                          std::size_t top_k = kDefaultTopK);

// Cavnar-Trenkle out-of-place distance: sum over doc grams of the absolute
// rank difference, with grams absent from the language model contributing
// the maximum penalty top_k.
std::size_t out_of_place(const LanguageModel& doc, const LanguageModel& lang);

struct LanguagePrediction {
  std::string language;
  std::size_t distance;
  bool confident;
};

// Classifies a message against the trained models; ties resolve by model
// declaration order.
LanguagePrediction identify(std::string_view message,
                            const std::vector<LanguageModel>& models);

// Persistence: header line "<code>\t<K>", then "<gram-escaped>\t<rank>"
// per gram. Escaping covers tab, newline, backslash.
void save_model(const LanguageModel& model, std::ostream& out);
LanguageModel load_model(std::istream& in);
void save_model_file(const LanguageModel& model, const std::string& path);
LanguageModel load_model_file(const std::string& path);

// Loads every "*.model" file in a directory, sorted by filename.
std::vector<LanguageModel> load_models_dir(const std::string& dir);

}  // namespace fuzzymatch::langid
