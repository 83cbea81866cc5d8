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
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>

namespace fuzzymatch {

inline constexpr std::size_t kDefaultGramSize = 2;

// ASCII case folding; bytes outside the ASCII range pass through unchanged.
// No Unicode decomposition, no punctuation stripping.
std::string normalize(std::string_view text);

// Multiset of character n-grams with counts. Immutable in practice: the
// library only mutates a profile while assembling it (merge() during span
// sums); everything handed out behaves as a value.
class NGramProfile {
 public:
  explicit NGramProfile(std::size_t n);

  std::size_t gram_size() const { return n_; }
  std::size_t total() const { return total_; }
  double norm() const;
  std::uint64_t sum_squares() const { return sum_squares_; }
  bool empty() const { return total_ == 0; }
  const std::unordered_map<std::string, std::uint32_t>& counts() const {
    return counts_;
  }

  void add_gram(std::string gram, std::uint32_t count = 1);
  // Multiset sum; gram sizes must agree.
  void merge(const NGramProfile& other);

 private:
  std::size_t n_;
  std::unordered_map<std::string, std::uint32_t> counts_;
  std::size_t total_ = 0;
  std::uint64_t sum_squares_ = 0;
};

// Profile of every contiguous length-n substring of the normalized text,
// with multiplicity. No start/end padding: a source shorter than n yields
// an empty profile.
NGramProfile build_profile(std::string_view text, std::size_t n);

// Cosine of the angle between the two gram count vectors. 0 if either
// profile is empty. Result in [0,1].
double cosine(const NGramProfile& p, const NGramProfile& q);

// Dice coefficient: 2 * |multiset intersection| / (total_p + total_q).
// Defined as 0 when both profiles are empty.
double dice(const NGramProfile& p, const NGramProfile& q);

// Levenshtein distance: minimal single-character change/insert/delete
// operations transforming x into y. Case-sensitive, no normalization.
std::size_t edit_distance(std::string_view x, std::string_view y);

struct WindowMatch {
  std::size_t offset;  // character index into the scanned (normalized) text
  std::string window;
  double score;
};

// Baseline scanner: slides a window of exactly the keyword's length across
// the normalized text one character at a time and returns the first offset
// whose cosine score reaches theta. Whitespace inside the window
// participates in grams.
std::optional<WindowMatch> window_scan(std::string_view keyword,
                                       std::string_view text, double theta,
                                       std::size_t n = kDefaultGramSize);

}  // namespace fuzzymatch
