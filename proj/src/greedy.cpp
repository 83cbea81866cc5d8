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

#include "fuzzymatch/greedy.hpp"

#include <cctype>
#include <stdexcept>
#include <unordered_set>

namespace fuzzymatch {

namespace {

bool is_space(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}

void validate_theta(double theta) {
  if (!(theta > 0.0 && theta <= 1.0))
    throw std::invalid_argument("theta must be in (0, 1]");
}

}  // namespace

WordProfile build_word_profile(std::string_view text, std::size_t n) {
  if (n == 0) throw std::invalid_argument("gram size must be positive");
  WordProfile profile;
  const std::string norm = normalize(text);
  std::size_t i = 0;
  while (i < norm.size()) {
    while (i < norm.size() && is_space(norm[i])) ++i;
    std::size_t begin = i;
    while (i < norm.size() && !is_space(norm[i])) ++i;
    if (i > begin) profile.words.push_back(norm.substr(begin, i - begin));
  }
  profile.length_prefix.push_back(0);
  for (const std::string& word : profile.words) {
    profile.lengths.push_back(word.size());
    profile.grams.push_back(build_profile(word, n));
    profile.char_length += word.size();
    profile.length_prefix.push_back(profile.char_length);
  }
  return profile;
}

NGramProfile span_profile(const WordProfile& p, const SpanRef& span) {
  if (span.start + span.width > p.word_count())
    throw std::invalid_argument("span out of range");
  std::size_t n = p.grams.empty() ? kDefaultGramSize : p.grams[0].gram_size();
  NGramProfile sum(n);
  for (std::size_t i = span.start; i < span.start + span.width; ++i)
    sum.merge(p.grams[i]);
  return sum;
}

std::optional<MatchResult> greedy_search(std::string_view keyword,
                                         std::string_view text, double theta,
                                         std::size_t n) {
  validate_theta(theta);
  const WordProfile kw = build_word_profile(keyword, n);
  if (kw.word_count() == 0)
    throw std::invalid_argument("keyword must contain at least one word");
  const WordProfile body = build_word_profile(text, n);

  NGramProfile kw_grams(n);
  for (const NGramProfile& g : kw.grams) kw_grams.merge(g);

  const std::size_t keyword_words = kw.word_count();
  const double keyword_chars = static_cast<double>(kw.char_length);
  // A span is only worth scoring when its character count is within the
  // similarity tolerance of the keyword's: |len - l| <= (1-theta)*l.
  const double lower = theta * keyword_chars;
  const double upper = (2.0 - theta) * keyword_chars;

  // Tie order among equal scores: width class 0, then -1, then +1.
  const long width_order[3] = {static_cast<long>(keyword_words),
                               static_cast<long>(keyword_words) - 1,
                               static_cast<long>(keyword_words) + 1};

  for (std::size_t start = 0; start < body.word_count(); ++start) {
    double best_score = -1.0;
    SpanRef best_span{};
    for (long signed_width : width_order) {
      if (signed_width <= 0) continue;
      const std::size_t width = static_cast<std::size_t>(signed_width);
      if (start + width > body.word_count()) continue;  // truncated: skip
      const std::size_t span_chars =
          body.length_prefix[start + width] - body.length_prefix[start];
      const double chars = static_cast<double>(span_chars);
      if (chars < lower || chars > upper) continue;  // pruned
      SpanRef span{start, width, span_chars};
      double score = cosine(kw_grams, span_profile(body, span));
      if (score > best_score) {
        best_score = score;
        best_span = span;
      }
    }
    if (best_score >= theta) {
      int width_class = static_cast<int>(static_cast<long>(best_span.width) -
                                         static_cast<long>(keyword_words));
      return MatchResult{best_score, best_span, width_class};
    }
  }
  return std::nullopt;
}

std::optional<ClassificationResult> classify_scored(
    std::string_view text, const std::vector<CategoryRuleSet>& categories,
    std::size_t n) {
  std::unordered_set<std::string_view> names;
  for (const CategoryRuleSet& set : categories) {
    if (!names.insert(set.category).second)
      throw std::invalid_argument("duplicate category name: " + set.category);
  }
  std::optional<ClassificationResult> best;
  for (const CategoryRuleSet& set : categories) {
    for (const KeywordRule& rule : set.rules) {
      auto match = greedy_search(rule.keyword, text, rule.theta, n);
      if (match && (!best || match->score > best->score))
        best = ClassificationResult{set.category, match->score};
    }
  }
  return best;
}

std::optional<std::string> classify(
    std::string_view text, const std::vector<CategoryRuleSet>& categories,
    std::size_t n) {
  auto result = classify_scored(text, categories, n);
  if (!result) return std::nullopt;
  return result->category;
}

}  // namespace fuzzymatch
