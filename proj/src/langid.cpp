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

#include "fuzzymatch/langid.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace fuzzymatch::langid {

namespace {

constexpr char kSentinel = '_';
constexpr std::size_t kMinGram = 1;
constexpr std::size_t kMaxGram = 5;

std::vector<std::string> split_words(const std::string& text) {
  std::vector<std::string> words;
  std::istringstream in(text);
  std::string word;
  while (in >> word) words.push_back(word);
  return words;
}

// Counts grams of sizes 1..5 for every word, padded with one leading and
// size-1 trailing sentinels; all-sentinel grams are skipped.
std::unordered_map<std::string, std::size_t> count_grams(
    const std::string& normalized) {
  std::unordered_map<std::string, std::size_t> counts;
  for (const std::string& word : split_words(normalized)) {
    for (std::size_t size = kMinGram; size <= kMaxGram; ++size) {
      std::string padded;
      if (size == 1) {
        padded = word;
      } else {
        padded.reserve(word.size() + size);
        padded.push_back(kSentinel);
        padded += word;
        padded.append(size - 1, kSentinel);
      }
      if (padded.size() < size) continue;
      for (std::size_t i = 0; i + size <= padded.size(); ++i) {
        std::string gram = padded.substr(i, size);
        if (gram.find_first_not_of(kSentinel) == std::string::npos) continue;
        ++counts[gram];
      }
    }
  }
  return counts;
}

LanguageModel model_from_counts(
    std::unordered_map<std::string, std::size_t> counts, std::string language,
    std::size_t top_k) {
  std::vector<std::pair<std::string, std::size_t>> ranked(
      std::make_move_iterator(counts.begin()),
      std::make_move_iterator(counts.end()));
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (ranked.size() > top_k) ranked.resize(top_k);

  LanguageModel model;
  model.language = std::move(language);
  model.top_k = top_k;
  model.ranked_grams.reserve(ranked.size());
  for (std::size_t rank = 0; rank < ranked.size(); ++rank) {
    model.rank_of.emplace(ranked[rank].first, rank);
    model.ranked_grams.push_back(std::move(ranked[rank].first));
  }
  return model;
}

std::string escape_gram(const std::string& gram) {
  std::string out;
  for (char c : gram) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string unescape_gram(const std::string& text) {
  std::string out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '\\' || i + 1 == text.size()) {
      out.push_back(text[i]);
      continue;
    }
    switch (text[++i]) {
      case '\\': out.push_back('\\'); break;
      case 't': out.push_back('\t'); break;
      case 'n': out.push_back('\n'); break;
      default: throw std::runtime_error("bad escape in model file");
    }
  }
  return out;
}

}  // namespace

std::string normalize_message(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (unsigned char c : text) {
    if (std::isspace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (c < 0x80 && (std::isdigit(c) || std::ispunct(c))) continue;
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    out.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a')
                                       : static_cast<char>(c));
  }
  return out;
}

LanguageModel train_model(std::string_view corpus, std::string_view language,
                          std::size_t top_k) {
  if (top_k == 0) throw std::invalid_argument("top_k must be positive");
  const std::string normalized = normalize_message(corpus);
  if (normalized.empty())
    throw std::invalid_argument("training corpus must be non-blank");
  return model_from_counts(count_grams(normalized), std::string(language),
                           top_k);
}

std::size_t out_of_place(const LanguageModel& doc, const LanguageModel& lang) {
  if (doc.ranked_grams.empty() || lang.ranked_grams.empty())
    throw std::invalid_argument("out_of_place requires non-empty models");
  std::size_t distance = 0;
  for (std::size_t rank = 0; rank < doc.ranked_grams.size(); ++rank) {
    auto it = lang.rank_of.find(doc.ranked_grams[rank]);
    if (it == lang.rank_of.end()) {
      distance += lang.top_k;
    } else {
      distance += rank > it->second ? rank - it->second : it->second - rank;
    }
  }
  return distance;
}

LanguagePrediction identify(std::string_view message,
                            const std::vector<LanguageModel>& models) {
  if (models.empty())
    throw std::invalid_argument("identify requires at least one model");
  const std::string normalized = normalize_message(message);
  const bool confident = normalized.size() >= kConfidenceFloor;

  auto counts = count_grams(normalized);
  if (counts.empty())
    return LanguagePrediction{models.front().language, 0, false};

  LanguageModel doc =
      model_from_counts(std::move(counts), "", models.front().top_k);
  LanguagePrediction best{models.front().language,
                          out_of_place(doc, models.front()), confident};
  for (std::size_t i = 1; i < models.size(); ++i) {
    std::size_t distance = out_of_place(doc, models[i]);
    if (distance < best.distance) {
      best.language = models[i].language;
      best.distance = distance;
    }
  }
  return best;
}

void save_model(const LanguageModel& model, std::ostream& out) {
  out << model.language << '\t' << model.top_k << '\n';
  for (std::size_t rank = 0; rank < model.ranked_grams.size(); ++rank)
    out << escape_gram(model.ranked_grams[rank]) << '\t' << rank << '\n';
}

LanguageModel load_model(std::istream& in) {
  LanguageModel model;
  std::string line;
  if (!std::getline(in, line))
    throw std::runtime_error("empty model file");
  std::size_t tab = line.find('\t');
  if (tab == std::string::npos)
    throw std::runtime_error("malformed model header");
  model.language = line.substr(0, tab);
  model.top_k = std::strtoull(line.c_str() + tab + 1, nullptr, 10);
  if (model.top_k == 0) throw std::runtime_error("malformed model header");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    tab = line.rfind('\t');
    if (tab == std::string::npos)
      throw std::runtime_error("malformed model line: " + line);
    std::string gram = unescape_gram(line.substr(0, tab));
    model.rank_of.emplace(gram, model.ranked_grams.size());
    model.ranked_grams.push_back(std::move(gram));
  }
  return model;
}

void save_model_file(const LanguageModel& model, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write model file: " + path);
  save_model(model, out);
}

LanguageModel load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read model file: " + path);
  return load_model(in);
}

std::vector<LanguageModel> load_models_dir(const std::string& dir) {
  namespace fs = std::filesystem;
  std::vector<fs::path> paths;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(dir, ec)) {
    if (entry.path().extension() == ".model") paths.push_back(entry.path());
  }
  if (ec) throw std::runtime_error("cannot read models directory: " + dir);
  std::sort(paths.begin(), paths.end());
  std::vector<LanguageModel> models;
  models.reserve(paths.size());
  for (const fs::path& path : paths)
    models.push_back(load_model_file(path.string()));
  return models;
}

}  // namespace fuzzymatch::langid
