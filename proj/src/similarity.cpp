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

#include "fuzzymatch/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace fuzzymatch {

std::string normalize(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (unsigned char c : text) {
    out.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a')
                                       : static_cast<char>(c));
  }
  return out;
}

NGramProfile::NGramProfile(std::size_t n) : n_(n) {
  if (n == 0) throw std::invalid_argument("gram size must be positive");
}

double NGramProfile::norm() const {
  return std::sqrt(static_cast<double>(sum_squares_));
}

void NGramProfile::add_gram(std::string gram, std::uint32_t count) {
  if (gram.size() != n_)
    throw std::invalid_argument("gram length does not match profile size");
  if (count == 0) return;
  std::uint32_t& slot = counts_[std::move(gram)];
  std::uint64_t before = slot;
  slot += count;
  sum_squares_ += static_cast<std::uint64_t>(slot) * slot - before * before;
  total_ += count;
}

void NGramProfile::merge(const NGramProfile& other) {
  if (other.n_ != n_)
    throw std::invalid_argument("cannot merge profiles of different gram sizes");
  for (const auto& [gram, count] : other.counts_) add_gram(gram, count);
}

NGramProfile build_profile(std::string_view text, std::size_t n) {
  NGramProfile profile(n);
  const std::string norm = normalize(text);
  if (norm.size() >= n) {
    for (std::size_t i = 0; i + n <= norm.size(); ++i)
      profile.add_gram(norm.substr(i, n));
  }
  return profile;
}

double cosine(const NGramProfile& p, const NGramProfile& q) {
  if (p.gram_size() != q.gram_size())
    throw std::invalid_argument("cosine requires equal gram sizes");
  if (p.empty() || q.empty()) return 0.0;
  // Iterate the smaller map.
  const NGramProfile& a = p.counts().size() <= q.counts().size() ? p : q;
  const NGramProfile& b = &a == &p ? q : p;
  std::uint64_t dot = 0;
  for (const auto& [gram, count] : a.counts()) {
    auto it = b.counts().find(gram);
    if (it != b.counts().end())
      dot += static_cast<std::uint64_t>(count) * it->second;
  }
  // Cauchy-Schwarz: dot^2 <= |p|^2 * |q|^2, with equality iff the count
  // vectors are proportional. Deciding the score-1 case in integer
  // arithmetic keeps theta = 1 semantics exact.
  unsigned __int128 lhs = static_cast<unsigned __int128>(dot) * dot;
  unsigned __int128 rhs = static_cast<unsigned __int128>(p.sum_squares()) *
                          q.sum_squares();
  if (lhs >= rhs) return 1.0;
  double value = static_cast<double>(dot) / (p.norm() * q.norm());
  if (value >= 1.0) value = std::nextafter(1.0, 0.0);
  return value;
}

double dice(const NGramProfile& p, const NGramProfile& q) {
  if (p.gram_size() != q.gram_size())
    throw std::invalid_argument("dice requires equal gram sizes");
  if (p.total() + q.total() == 0) return 0.0;
  const NGramProfile& a = p.counts().size() <= q.counts().size() ? p : q;
  const NGramProfile& b = &a == &p ? q : p;
  std::uint64_t shared = 0;
  for (const auto& [gram, count] : a.counts()) {
    auto it = b.counts().find(gram);
    if (it != b.counts().end()) shared += std::min(count, it->second);
  }
  return 2.0 * static_cast<double>(shared) /
         static_cast<double>(p.total() + q.total());
}

std::size_t edit_distance(std::string_view x, std::string_view y) {
  // Single-row dynamic program.
  const std::size_t m = x.size(), n = y.size();
  std::vector<std::size_t> row(n + 1);
  for (std::size_t j = 0; j <= n; ++j) row[j] = j;
  for (std::size_t i = 1; i <= m; ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= n; ++j) {
      std::size_t above = row[j];
      row[j] = x[i - 1] == y[j - 1]
                   ? diag
                   : 1 + std::min({diag, above, row[j - 1]});
      diag = above;
    }
  }
  return row[n];
}

std::optional<WindowMatch> window_scan(std::string_view keyword,
                                       std::string_view text, double theta,
                                       std::size_t n) {
  if (keyword.empty()) throw std::invalid_argument("keyword must be non-empty");
  if (!(theta > 0.0 && theta <= 1.0))
    throw std::invalid_argument("theta must be in (0, 1]");
  const std::string kw = normalize(keyword);
  const std::string body = normalize(text);
  if (kw.size() > body.size()) return std::nullopt;
  const NGramProfile kw_profile = build_profile(kw, n);
  for (std::size_t offset = 0; offset + kw.size() <= body.size(); ++offset) {
    std::string_view window(body.data() + offset, kw.size());
    double score = cosine(kw_profile, build_profile(window, n));
    if (score >= theta)
      return WindowMatch{offset, std::string(window), score};
  }
  return std::nullopt;
}

}  // namespace fuzzymatch
