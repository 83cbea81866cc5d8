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

#include "fuzzymatch/bench.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "fuzzymatch/greedy.hpp"
#include "fuzzymatch/similarity.hpp"

namespace fuzzymatch::bench {

namespace {

// Filler vocabulary for document bodies.
const char* const kLexicon[] = {
    "the", "a", "my", "our", "this", "that", "it", "is", "was", "has",
    "been", "not", "working", "since", "yesterday", "morning", "please",
    "help", "with", "issue", "problem", "website", "site", "account",
    "after", "before", "change", "update", "setting", "configuration",
    "seems", "broken", "down", "slow", "fast", "again", "still", "when",
    "visit", "open", "browser", "customer", "support", "ticket", "reply",
    "thanks", "regards", "hello", "team", "urgent", "need", "fix", "soon",
    "possible", "tried", "restarting", "clearing", "nothing", "changed",
    "same", "result", "every", "time", "request", "response", "timeout",
    "connection", "refused", "unable", "reach", "host", "provider",
    "email", "notification", "received", "message", "showing", "users",
    "visitors", "traffic", "spike", "dashboard", "panel", "shows", "red",
    "warning", "alert", "status", "code", "returned", "unexpected",
    "behaviour", "intermittent", "random", "occasionally", "always",
    "never", "attached", "screenshot", "details", "below", "above",
    "mentioned", "previous", "contacted", "last", "week", "month",
    "today", "tonight", "production", "staging", "environment", "deploy",
    "release", "version", "upgrade", "plan", "subscription", "payment"};
constexpr std::size_t kLexiconSize = sizeof(kLexicon) / sizeof(kLexicon[0]);

const char* const kKeywordPool[] = {
    "name servers", "dns",           "certificate",     "server error",
    "domain registrar", "page rules", "cache purge",    "rate limiting",
    "load balancer", "firewall rules", "ssl handshake", "origin server",
    "zone transfer", "api token",    "access policy",   "propagation delay",
    "billing invoice", "two factor", "bandwidth usage", "worker script"};
constexpr std::size_t kKeywordPoolSize =
    sizeof(kKeywordPool) / sizeof(kKeywordPool[0]);

std::string split_mutation(const std::string& keyword, std::mt19937_64& rng) {
  // Insert a space in the middle of the longest word.
  std::vector<std::string> words;
  std::istringstream in(keyword);
  std::string word;
  while (in >> word) words.push_back(word);
  std::size_t longest = 0;
  for (std::size_t i = 1; i < words.size(); ++i) {
    if (words[i].size() > words[longest].size()) longest = i;
  }
  std::string& target = words[longest];
  if (target.size() >= 2) {
    std::size_t cut = 1 + rng() % (target.size() - 1);
    target = target.substr(0, cut) + " " + target.substr(cut);
  }
  std::string out;
  for (const std::string& w : words) {
    if (!out.empty()) out.push_back(' ');
    out += w;
  }
  return out;
}

std::string merge_mutation(const std::string& keyword) {
  std::string out;
  for (char c : keyword) {
    if (c != ' ') out.push_back(c);
  }
  return out;
}

std::string edit_mutation(const std::string& keyword, std::mt19937_64& rng) {
  std::string out = keyword;
  std::size_t pos;
  do {
    pos = rng() % out.size();
  } while (out[pos] == ' ');
  char replacement;
  do {
    replacement = static_cast<char>('a' + rng() % 26);
  } while (replacement == out[pos]);
  out[pos] = replacement;
  return out;
}

double mean(const std::vector<double>& values) {
  if (values.empty()) return 0.0;
  double sum = 0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

double median(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  std::size_t mid = values.size() / 2;
  return values.size() % 2 ? values[mid]
                           : 0.5 * (values[mid - 1] + values[mid]);
}

}  // namespace

BenchCorpus generate_corpus(const BenchConfig& config) {
  if (config.doc_count == 0 || config.doc_length == 0 ||
      config.keyword_count == 0)
    throw std::invalid_argument("bench sizes must be positive");

  std::mt19937_64 rng(config.seed);
  BenchCorpus corpus;
  for (std::size_t i = 0; i < config.keyword_count; ++i) {
    if (i < kKeywordPoolSize) {
      corpus.keywords.emplace_back(kKeywordPool[i]);
    } else {
      // Past the pool, pair up lexicon words deterministically.
      corpus.keywords.push_back(std::string(kLexicon[rng() % kLexiconSize]) +
                                " " + kLexicon[rng() % kLexiconSize]);
    }
  }

  for (std::size_t d = 0; d < config.doc_count; ++d) {
    BenchDoc doc;
    std::vector<std::string> words;
    std::size_t chars = 0;
    while (chars < config.doc_length) {
      words.emplace_back(kLexicon[rng() % kLexiconSize]);
      chars += words.back().size() + 1;
    }

    doc.planted_keyword = d % corpus.keywords.size();
    const std::string& keyword = corpus.keywords[doc.planted_keyword];
    std::uint64_t roll = rng() % 100;
    std::string planted;
    if (roll < 40) {
      doc.mutation = Mutation::Verbatim;
      planted = keyword;
    } else if (roll < 60) {
      doc.mutation = Mutation::Split;
      planted = split_mutation(keyword, rng);
    } else if (roll < 80) {
      // A keyword with nothing to merge degrades to a split.
      if (keyword.find(' ') != std::string::npos) {
        doc.mutation = Mutation::Merged;
        planted = merge_mutation(keyword);
      } else {
        doc.mutation = Mutation::Split;
        planted = split_mutation(keyword, rng);
      }
    } else {
      doc.mutation = Mutation::OneEdit;
      planted = edit_mutation(keyword, rng);
    }
    std::size_t insert_at = rng() % (words.size() + 1);
    words.insert(words.begin() + static_cast<std::ptrdiff_t>(insert_at),
                 planted);

    for (const std::string& w : words) {
      if (!doc.text.empty()) doc.text.push_back(' ');
      doc.text += w;
    }
    corpus.docs.push_back(std::move(doc));
  }
  return corpus;
}

BenchReport run(const BenchConfig& config) {
  const BenchCorpus corpus = generate_corpus(config);
  BenchReport report;
  for (const BenchDoc& doc : corpus.docs) {
    if (doc.mutation == Mutation::Split || doc.mutation == Mutation::Merged)
      ++report.split_merge_docs;
  }

  using Clock = std::chrono::steady_clock;
  const std::size_t warmup = std::min<std::size_t>(5, corpus.docs.size());

  auto measure = [&](const std::string& name, auto&& search) {
    MethodStats stats;
    stats.method = name;
    stats.corpus_size = corpus.docs.size();
    stats.keyword_count = corpus.keywords.size();

    // Warm-up pass, excluded from the statistics.
    for (std::size_t d = 0; d < warmup; ++d) {
      for (const std::string& keyword : corpus.keywords)
        (void)search(keyword, corpus.docs[d].text);
    }

    std::vector<double> per_doc;
    per_doc.reserve(corpus.docs.size());
    for (const BenchDoc& doc : corpus.docs) {
      auto start = Clock::now();
      std::size_t doc_matches = 0;
      bool planted_hit = false;
      for (std::size_t k = 0; k < corpus.keywords.size(); ++k) {
        bool hit = search(corpus.keywords[k], doc.text);
        if (hit) {
          ++doc_matches;
          if (k == doc.planted_keyword) planted_hit = true;
        }
      }
      auto stop = Clock::now();
      per_doc.push_back(std::chrono::duration<double>(stop - start).count());
      stats.matches += doc_matches;
      if (planted_hit && (doc.mutation == Mutation::Split ||
                          doc.mutation == Mutation::Merged))
        ++stats.split_merge_hits;
    }
    stats.mean_seconds = mean(per_doc);
    stats.median_seconds = median(per_doc);
    return stats;
  };

  report.baseline =
      measure("baseline", [&](const std::string& kw, const std::string& text) {
        return window_scan(kw, text, config.theta, config.gram_size)
            .has_value();
      });
  report.greedy =
      measure("greedy", [&](const std::string& kw, const std::string& text) {
        return greedy_search(kw, text, config.theta, config.gram_size)
            .has_value();
      });
  report.speed_ratio = report.greedy.mean_seconds > 0
                           ? report.baseline.mean_seconds /
                                 report.greedy.mean_seconds
                           : 0.0;
  return report;
}

std::string render(const BenchReport& report) {
  std::ostringstream out;
  char line[160];
  out << "method    docs  keywords  mean_s      median_s    matches  "
         "split_merge_hits\n";
  for (const MethodStats* stats : {&report.baseline, &report.greedy}) {
    std::snprintf(line, sizeof line,
                  "%-8s %5zu  %8zu  %.6f  %.6f  %7zu  %16zu\n",
                  stats->method.c_str(), stats->corpus_size,
                  stats->keyword_count, stats->mean_seconds,
                  stats->median_seconds, stats->matches,
                  stats->split_merge_hits);
    out << line;
  }
  std::snprintf(line, sizeof line,
                "baseline/greedy mean-time ratio: %.2f  (split/merge docs: "
                "%zu)\n",
                report.speed_ratio, report.split_merge_docs);
  out << line;
  return out.str();
}

std::string report_to_json(const BenchReport& report) {
  auto stats_json = [](const MethodStats& stats) {
    return nlohmann::json{{"method", stats.method},
                          {"corpus_size", stats.corpus_size},
                          {"keyword_count", stats.keyword_count},
                          {"mean_seconds", stats.mean_seconds},
                          {"median_seconds", stats.median_seconds},
                          {"matches", stats.matches},
                          {"split_merge_hits", stats.split_merge_hits}};
  };
  nlohmann::json obj{{"baseline", stats_json(report.baseline)},
                     {"greedy", stats_json(report.greedy)},
                     {"speed_ratio", report.speed_ratio},
                     {"split_merge_docs", report.split_merge_docs}};
  return obj.dump();
}

}  // namespace fuzzymatch::bench
