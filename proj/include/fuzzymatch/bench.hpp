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

#include <cstdint>
#include <string>
#include <vector>

namespace fuzzymatch::bench {

struct BenchConfig {
  std::size_t keyword_count = 20;
  std::size_t doc_count = 500;
  std::size_t doc_length = 1000;  // characters
  double theta = 0.85;
  std::uint64_t seed = 42;
  std::size_t gram_size = 2;
};

// Synthetic corpus: documents of lexicon words with one keyword planted per
// document under a controlled mutation (40% verbatim, 20% split, 20%
// merged, 20% single-character edit).
enum class Mutation { Verbatim, Split, Merged, OneEdit };

struct BenchDoc {
  std::string text;
  std::size_t planted_keyword;  // index into keywords
  Mutation mutation;
};

struct BenchCorpus {
  std::vector<std::string> keywords;
  std::vector<BenchDoc> docs;
};

BenchCorpus generate_corpus(const BenchConfig& config);

struct MethodStats {
  std::string method;  // "baseline" or "greedy"
  std::size_t corpus_size = 0;
  std::size_t keyword_count = 0;
  double mean_seconds = 0;    // per-document wall time over all keywords
  double median_seconds = 0;
  std::size_t matches = 0;    // over all (doc, keyword) pairs
  // Docs planted with a split or merged keyword where the planted keyword
  // was found (the recall-direction subset).
  std::size_t split_merge_hits = 0;
};

struct BenchReport {
  MethodStats baseline;
  MethodStats greedy;
  double speed_ratio = 0;  // baseline mean / greedy mean
  std::size_t split_merge_docs = 0;
};

BenchReport run(const BenchConfig& config);

std::string render(const BenchReport& report);
std::string report_to_json(const BenchReport& report);

}  // namespace fuzzymatch::bench
