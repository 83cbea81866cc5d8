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
//
// Acceptance suite: one pass/fail line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fuzzymatch/bench.hpp"
#include "fuzzymatch/greedy.hpp"
#include "fuzzymatch/langid.hpp"
#include "fuzzymatch/metadata.hpp"
#include "fuzzymatch/similarity.hpp"
#include "oracles.hpp"

namespace {

using Clock = std::chrono::steady_clock;

const std::string kDataDir = FUZZYMATCH_DATA_DIR;

int g_failures = 0;

struct Criterion {
  std::string name;
  double time_limit_seconds;
  Clock::time_point start;
  std::vector<std::string> problems;

  Criterion(std::string n, double limit)
      : name(std::move(n)), time_limit_seconds(limit), start(Clock::now()) {}

  void require(bool ok, const std::string& detail) {
    if (!ok) problems.push_back(detail);
  }

  void finish() {
    double elapsed =
        std::chrono::duration<double>(Clock::now() - start).count();
    if (time_limit_seconds > 0 && elapsed > time_limit_seconds)
      problems.push_back("runtime " + std::to_string(elapsed) +
                         "s exceeds limit " +
                         std::to_string(time_limit_seconds) + "s");
    if (problems.empty()) {
      std::printf("PASS  %s (%.2fs)\n", name.c_str(), elapsed);
    } else {
      ++g_failures;
      std::printf("FAIL  %s (%.2fs)\n", name.c_str(), elapsed);
      for (const std::string& problem : problems)
        std::printf("      - %s\n", problem.c_str());
    }
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string random_string(std::mt19937& rng, std::size_t max_len,
                          int alphabet) {
  std::size_t len = rng() % (max_len + 1);
  std::string out;
  for (std::size_t i = 0; i < len; ++i)
    out.push_back(static_cast<char>('a' + rng() % alphabet));
  return out;
}

// 1. Similarity axioms on 1,000 seeded random strings.
void criterion_similarity_axioms() {
  Criterion c("1 similarity axioms (cosine, dice)", 1.0);
  std::mt19937 rng(1001);
  for (int i = 0; i < 1000; ++i) {
    auto p = fuzzymatch::build_profile(random_string(rng, 64, 8), 2);
    auto q = fuzzymatch::build_profile(random_string(rng, 64, 8), 2);
    if (!p.empty()) {
      c.require(std::abs(fuzzymatch::cosine(p, p) - 1.0) <= 1e-9,
                "cosine(p,p) != 1");
      c.require(std::abs(fuzzymatch::dice(p, p) - 1.0) <= 1e-9,
                "dice(p,p) != 1");
    }
    double cs = fuzzymatch::cosine(p, q);
    double ds = fuzzymatch::dice(p, q);
    c.require(cs == fuzzymatch::cosine(q, p), "cosine not symmetric");
    c.require(ds == fuzzymatch::dice(q, p), "dice not symmetric");
    c.require(cs >= 0.0 && cs <= 1.0, "cosine out of range");
    c.require(ds >= 0.0 && ds <= 1.0, "dice out of range");
  }
  c.finish();
}

// 2. Edit-distance oracle agreement.
void criterion_edit_distance() {
  Criterion c("2 edit-distance vs full DP oracle", 1.0);
  c.require(fuzzymatch::edit_distance("kitten", "sitting") == 3,
            "kitten/sitting != 3");
  std::mt19937 rng(1002);
  for (int i = 0; i < 1000; ++i) {
    std::string x = random_string(rng, 12, 4);
    std::string y = random_string(rng, 12, 4);
    if (fuzzymatch::edit_distance(x, y) != oracle::edit_distance(x, y)) {
      c.require(false, "disagreement on \"" + x + "\" / \"" + y + "\"");
      break;
    }
  }
  c.finish();
}

// 3. Greedy vs brute-force equivalence.
void criterion_greedy_equivalence() {
  Criterion c("3 greedy vs exhaustive all-spans evaluator", 5.0);
  static const char* vocab[] = {"name", "servers", "nameservers", "dns",
                                "broke", "my",      "are",         "the",
                                "error", "na",      "serv",        "ers",
                                "server", "names"};
  constexpr std::size_t vocab_size = sizeof(vocab) / sizeof(vocab[0]);
  std::mt19937 rng(1003);
  auto make_text = [&](std::size_t max_words) {
    std::size_t count = 1 + rng() % max_words;
    std::string out;
    for (std::size_t i = 0; i < count; ++i) {
      if (!out.empty()) out.push_back(' ');
      out += vocab[rng() % vocab_size];
    }
    return out;
  };
  for (int i = 0; i < 200; ++i) {
    std::string keyword = make_text(3);
    std::string text = make_text(20);
    double theta = 0.5 + 0.1 * static_cast<double>(rng() % 6);
    auto got = fuzzymatch::greedy_search(keyword, text, theta, 2);
    auto expected = oracle::greedy_search(keyword, text, theta, 2);
    if (got.has_value() != expected.has_value()) {
      c.require(false, "match presence differs on \"" + keyword + "\" / \"" +
                           text + "\"");
      continue;
    }
    if (got) {
      c.require(got->span.start == expected->start &&
                    got->span.width == expected->width,
                "position differs on \"" + keyword + "\" / \"" + text + "\"");
      c.require(std::abs(got->score - expected->score) <= 1e-9,
                "score differs on \"" + keyword + "\" / \"" + text + "\"");
    }
  }
  c.finish();
}

// 4. The split/merge motivating case, both directions.
void criterion_split_merge() {
  Criterion c("4 split/merge motivating case", 0);
  auto merged = fuzzymatch::greedy_search("name servers",
                                          "my nameservers are broken", 0.9, 2);
  c.require(merged.has_value(), "merged-text case did not match");
  if (merged)
    c.require(std::abs(merged->score - 0.957) <= 1e-3,
              "merged-text score " + std::to_string(merged->score) +
                  " not within 0.957 +/- 0.001");
  auto split = fuzzymatch::greedy_search("nameservers",
                                         "my name servers are broken", 0.9, 2);
  c.require(split.has_value(), "split-text case did not match at theta 0.9");
  if (split)
    c.require(split->width_class == +1,
              "split-text case should match the one-word-longer span");
  c.finish();
}

// 5. Speed direction and recall direction on the synthetic corpus.
void criterion_bench() {
  Criterion c("5 bench: baseline/greedy ratio and split/merge recall", 60.0);
  fuzzymatch::bench::BenchConfig config;  // 500 docs x 1000 chars, 20 kw
  config.theta = 0.85;
  config.seed = 42;
  auto report = fuzzymatch::bench::run(config);
  c.require(report.speed_ratio >= 3.0,
            "mean-time ratio " + std::to_string(report.speed_ratio) +
                " below 3.0");
  c.require(report.greedy.split_merge_hits >= report.baseline.split_merge_hits,
            "greedy split/merge matches (" +
                std::to_string(report.greedy.split_merge_hits) +
                ") below baseline (" +
                std::to_string(report.baseline.split_merge_hits) + ")");
  c.finish();
}

// 6. Language identification property suite.
void criterion_langid() {
  Criterion c("6 langid: self-identification, accuracy, length bins", 10.0);
  static const char* langs[] = {"de", "en", "es", "fr", "it"};
  std::vector<fuzzymatch::langid::LanguageModel> models;
  for (const char* lang : langs)
    models.push_back(fuzzymatch::langid::train_model(
        read_file(kDataDir + "/corpora/" + lang + ".txt"), lang));

  for (std::size_t i = 0; i < models.size(); ++i) {
    auto prediction = fuzzymatch::langid::identify(
        read_file(kDataDir + "/corpora/" + std::string(langs[i]) + ".txt"),
        models);
    c.require(prediction.language == langs[i] && prediction.distance == 0,
              std::string("self-identification failed for ") + langs[i]);
  }

  // Held-out sentences, bucketed by normalized length.
  std::size_t correct[3] = {0, 0, 0}, total[3] = {0, 0, 0};
  for (const char* lang : langs) {
    std::ifstream in(kDataDir + "/holdout/" + lang + ".txt");
    c.require(static_cast<bool>(in), std::string("missing holdout for ") + lang);
    std::string sentence;
    while (std::getline(in, sentence)) {
      if (sentence.empty()) continue;
      std::size_t length =
          fuzzymatch::langid::normalize_message(sentence).size();
      std::size_t bin = length < 20 ? 0 : length < 60 ? 1 : 2;
      ++total[bin];
      if (fuzzymatch::langid::identify(sentence, models).language == lang)
        ++correct[bin];
    }
  }
  auto rate = [&](int bin) {
    return total[bin] ? static_cast<double>(correct[bin]) / total[bin] : 0.0;
  };
  c.require(total[0] > 0 && total[1] > 0 && total[2] > 0,
            "holdout fixtures must populate all three length bins");
  c.require(rate(2) >= 0.90, "accuracy on 60+ char sentences " +
                                 std::to_string(rate(2)) + " below 0.90");
  c.require(rate(0) <= rate(1) && rate(1) <= rate(2),
            "binned accuracy not non-decreasing: " + std::to_string(rate(0)) +
                " / " + std::to_string(rate(1)) + " / " +
                std::to_string(rate(2)));
  c.finish();
}

// 7. Accept-Language parser conformance.
void criterion_accept_language() {
  Criterion c("7 Accept-Language parser conformance", 0);
  using fuzzymatch::metadata::parse_accept_language;

  struct Expect {
    const char* header;
    std::vector<std::pair<std::string, double>> entries;
  };
  const std::vector<Expect> fixtures = {
      // The three specified shapes.
      {"en-GB,en;q=0.9,fr;q=0.8",
       {{"en-GB", 1.0}, {"en", 0.9}, {"fr", 0.8}}},
      {"*", {{"*", 1.0}}},
      {"", {}},
      // Grammar edges.
      {"en", {{"en", 1.0}}},
      {"en;q=0", {{"en", 0.0}}},
      {" en , fr ; q=0.5 ", {{"en", 1.0}, {"fr", 0.5}}},
      {"de-DE;Q=0.7", {{"de-DE", 0.7}}},
      {"en;q=5", {{"en", 1.0}}},           // clamped
      {"en;q=-1", {{"en", 0.0}}},          // clamped
      {"xx;q=abc", {}},                    // malformed q
      {"en;q=0.1234", {}},                 // too many decimals
      {";q=0.5", {}},                      // missing range
      {"en-US;q=0.8,,fr", {{"en-US", 0.8}, {"fr", 1.0}}},
      {"zh-Hant-TW,en;q=0.6", {{"zh-Hant-TW", 1.0}, {"en", 0.6}}},
  };
  for (const Expect& fixture : fixtures) {
    auto parsed = parse_accept_language(fixture.header);
    bool ok = parsed.entries.size() == fixture.entries.size();
    for (std::size_t i = 0; ok && i < parsed.entries.size(); ++i) {
      ok = parsed.entries[i].range == fixture.entries[i].first &&
           std::abs(parsed.entries[i].quality - fixture.entries[i].second) <
               1e-12;
    }
    c.require(ok, std::string("entry list mismatch for header \"") +
                      fixture.header + "\"");
  }
  c.finish();
}

// 8. Agreement pipeline exactness on the engineered fixture.
void criterion_agreement() {
  Criterion c("8 agreement pipeline exactness + coverage identity", 0);
  namespace md = fuzzymatch::metadata;

  std::vector<fuzzymatch::langid::LanguageModel> models;
  for (const char* lang : {"de", "en", "es", "fr", "it"})
    models.push_back(fuzzymatch::langid::train_model(
        read_file(kDataDir + "/corpora/" + lang + ".txt"), lang));
  auto table =
      md::CountryLanguageTable::load_file(kDataDir + "/country_languages.tsv");
  auto records =
      md::load_dataset_file(kDataDir + "/fixtures/agreement_100.jsonl");
  c.require(records.size() == 100, "fixture must hold 100 records");

  std::vector<md::AgreementRecord> evaluated;
  for (const auto& record : records)
    evaluated.push_back(md::evaluate_record(record, models, table));
  auto report = md::aggregate(evaluated, {0, 20, 60});

  c.require(report.all_fraction == 0.67,
            "ALL fraction " + std::to_string(report.all_fraction));
  c.require(report.header_only_fraction == 0.15,
            "HEADER_ONLY fraction " +
                std::to_string(report.header_only_fraction));
  c.require(report.country_only_fraction == 0.05,
            "COUNTRY_ONLY fraction " +
                std::to_string(report.country_only_fraction));
  c.require(report.none_fraction == 0.13,
            "NONE fraction " + std::to_string(report.none_fraction));
  c.require(report.header_match_rate == 0.82,
            "header rate " + std::to_string(report.header_match_rate));
  c.require(report.country_match_rate == 0.72,
            "country rate " + std::to_string(report.country_match_rate));
  c.require(report.either_match_rate == 0.87,
            "either rate " + std::to_string(report.either_match_rate));

  // Coverage identity on random synthetic datasets.
  std::mt19937 rng(1008);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<md::AgreementRecord> synth;
    std::size_t count = 1 + rng() % 300;
    for (std::size_t i = 0; i < count; ++i) {
      md::AgreementRecord r;
      r.header_match = rng() % 2 == 0;
      r.country_match = rng() % 2 == 0;
      r.message_length = rng() % 120;
      r.bucket = r.header_match
                     ? (r.country_match ? md::Bucket::All
                                        : md::Bucket::HeaderOnly)
                     : (r.country_match ? md::Bucket::CountryOnly
                                        : md::Bucket::None);
      synth.push_back(r);
    }
    auto rep = md::aggregate(synth, {0, 20, 60});
    double identity = rep.header_match_rate + rep.country_match_rate -
                      rep.all_fraction;
    if (std::abs(rep.either_match_rate - identity) > 1e-12) {
      c.require(false, "coverage identity violated on trial " +
                           std::to_string(trial));
      break;
    }
  }
  c.finish();
}

}  // namespace

int main() {
  criterion_similarity_axioms();
  criterion_edit_distance();
  criterion_greedy_equivalence();
  criterion_split_merge();
  criterion_bench();
  criterion_langid();
  criterion_accept_language();
  criterion_agreement();
  if (g_failures > 0) {
    std::printf("%d criterion(s) FAILED\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
