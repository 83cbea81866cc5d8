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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzymatch/similarity.hpp"

namespace fuzzymatch {

// Word-tokenised view of a text: maximal whitespace-free tokens in original
// order, with per-word lengths and per-word gram profiles. Grams never
// cross word boundaries.
struct WordProfile {
  std::vector<std::string> words;
  std::vector<std::size_t> lengths;
  std::vector<NGramProfile> grams;
  std::size_t char_length = 0;  // total characters excluding separators
  // length_prefix[i] = characters of words[0..i); length_prefix.size() ==
  // word_count + 1. Lets span lengths be computed in O(1).
  std::vector<std::size_t> length_prefix;

  std::size_t word_count() const { return words.size(); }
};

WordProfile build_word_profile(std::string_view text,
                               std::size_t n = kDefaultGramSize);

// A run of `width` consecutive words starting at word index `start`.
struct SpanRef {
  std::size_t start;
  std::size_t width;
  std::size_t char_length;
};

// Multiset sum of the per-word gram profiles of the span's words.
NGramProfile span_profile(const WordProfile& p, const SpanRef& span);

struct MatchResult {
  double score;
  SpanRef span;
  int width_class;  // span width minus keyword word count: -1, 0, or +1
};

// Greedy word-level fuzzy keyword search. Scans the text word by word; at
// each start word evaluates spans one word shorter, equal, and one word
// longer than the keyword, skipping spans whose character length differs
// from the keyword's character length l by more than (1-theta)*l.
// Returns at the first start word whose best span score
// reaches theta; score ties among widths resolve toward width class 0,
// then -1, then +1.
std::optional<MatchResult> greedy_search(std::string_view keyword,
                                         std::string_view text, double theta,
                                         std::size_t n = kDefaultGramSize);

inline constexpr double kDefaultTheta = 0.8;

struct KeywordRule {
  std::string keyword;
  double theta = kDefaultTheta;
};

struct CategoryRuleSet {
  std::string category;
  std::vector<KeywordRule> rules;
};

struct ClassificationResult {
  std::string category;
  double score;
};

// Runs greedy_search for every rule and returns the category owning the
// highest-scoring match, or no result when nothing reaches its threshold.
// Ties across categories resolve by declaration order.
std::optional<ClassificationResult> classify_scored(
    std::string_view text, const std::vector<CategoryRuleSet>& categories,
    std::size_t n = kDefaultGramSize);

std::optional<std::string> classify(
    std::string_view text, const std::vector<CategoryRuleSet>& categories,
    std::size_t n = kDefaultGramSize);

}  // namespace fuzzymatch
