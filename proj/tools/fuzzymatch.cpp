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
// fuzzymatch: fuzzy keyword search, keyword-rule classification, language
// identification and metadata agreement reporting.
//
// Exit status contract: 0 success/match, 1 clean no-result, 2 usage or
// input error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fuzzymatch/bench.hpp"
#include "fuzzymatch/greedy.hpp"
#include "fuzzymatch/langid.hpp"
#include "fuzzymatch/metadata.hpp"
#include "fuzzymatch/similarity.hpp"

namespace {

constexpr int kExitMatch = 0;
constexpr int kExitNoMatch = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void check_theta(double theta) {
  if (!(theta > 0.0 && theta <= 1.0))
    throw UsageError("--theta must be in (0, 1]");
}

std::vector<std::size_t> parse_bins(const std::string& spec) {
  std::vector<std::size_t> edges;
  std::stringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t consumed = 0;
    std::size_t value;
    try {
      value = std::stoull(item, &consumed);
    } catch (const std::exception&) {
      throw UsageError("bad bin edge: '" + item + "'");
    }
    if (consumed != item.size())
      throw UsageError("bad bin edge: '" + item + "'");
    if (!edges.empty() && value <= edges.back())
      throw UsageError("bin edges must be strictly ascending");
    edges.push_back(value);
  }
  if (edges.empty()) throw UsageError("empty bin spec");
  return edges;
}

// Rules file: one rule per line, "category<TAB>keyword<TAB>theta".
std::vector<fuzzymatch::CategoryRuleSet> load_rules(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read rules file: " + path);
  std::vector<fuzzymatch::CategoryRuleSet> categories;
  std::map<std::string, std::size_t> index;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::size_t tab1 = line.find('\t');
    std::size_t tab2 = tab1 == std::string::npos ? std::string::npos
                                                 : line.find('\t', tab1 + 1);
    if (tab2 == std::string::npos)
      throw UsageError("rules file line " + std::to_string(lineno) +
                       ": expected category<TAB>keyword<TAB>theta");
    std::string category = line.substr(0, tab1);
    std::string keyword = line.substr(tab1 + 1, tab2 - tab1 - 1);
    double theta;
    try {
      theta = std::stod(line.substr(tab2 + 1));
    } catch (const std::exception&) {
      throw UsageError("rules file line " + std::to_string(lineno) +
                       ": bad theta");
    }
    if (!(theta > 0.0 && theta <= 1.0) || keyword.empty() || category.empty())
      throw UsageError("rules file line " + std::to_string(lineno) +
                       ": bad rule");
    auto [it, inserted] = index.emplace(category, categories.size());
    if (inserted)
      categories.push_back(fuzzymatch::CategoryRuleSet{category, {}});
    categories[it->second].rules.push_back(
        fuzzymatch::KeywordRule{keyword, theta});
  }
  return categories;
}

int cmd_search(const std::string& keyword, const std::string& text_or_file,
               bool is_file, double theta, const std::string& method,
               std::size_t n) {
  check_theta(theta);
  const std::string text = is_file ? read_file(text_or_file) : text_or_file;
  if (method == "greedy") {
    auto match = fuzzymatch::greedy_search(keyword, text, theta, n);
    if (!match) {
      std::cout << "no match\n";
      return kExitNoMatch;
    }
    std::printf("score %.6f  words [%zu, %zu)  width_class %+d\n",
                match->score, match->span.start,
                match->span.start + match->span.width, match->width_class);
    return kExitMatch;
  }
  auto match = fuzzymatch::window_scan(keyword, text, theta, n);
  if (!match) {
    std::cout << "no match\n";
    return kExitNoMatch;
  }
  std::printf("score %.6f  offset %zu  window \"%s\"\n", match->score,
              match->offset, match->window.c_str());
  return kExitMatch;
}

int cmd_classify(const std::string& rules_path, const std::string& data_path,
                 bool labeled, std::size_t n) {
  auto categories = load_rules(rules_path);

  std::ifstream in(data_path);
  if (!in) throw UsageError("cannot read dataset: " + data_path);

  std::map<std::string, std::size_t> per_category;
  for (const auto& set : categories) per_category[set.category] = 0;
  std::size_t unclassified = 0;

  // label -> (classified-as-label count, total labeled, total classified)
  std::map<std::string, std::size_t> true_positive, labeled_total,
      classified_total;

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw UsageError("dataset line " + std::to_string(lineno) + ": " +
                       e.what());
    }
    std::string id = obj.at("id").get<std::string>();
    std::string message = obj.at("message").get<std::string>();
    auto result = fuzzymatch::classify_scored(message, categories, n);
    if (result) {
      std::printf("%s\t%s\t%.6f\n", id.c_str(), result->category.c_str(),
                  result->score);
      ++per_category[result->category];
      ++classified_total[result->category];
    } else {
      std::printf("%s\tUNCLASSIFIED\n", id.c_str());
      ++unclassified;
    }
    if (labeled) {
      std::string label = obj.at("label").get<std::string>();
      ++labeled_total[label];
      if (result && result->category == label) ++true_positive[label];
    }
  }

  std::cout << "summary:\n";
  for (const auto& [category, count] : per_category)
    std::cout << "  " << category << ": " << count << "\n";
  std::cout << "  UNCLASSIFIED: " << unclassified << "\n";

  if (labeled) {
    std::cout << "precision/recall:\n";
    for (const auto& [label, total] : labeled_total) {
      std::size_t tp = true_positive[label];
      std::size_t classified = classified_total[label];
      double precision = classified ? static_cast<double>(tp) / classified : 0;
      double recall = total ? static_cast<double>(tp) / total : 0;
      std::printf("  %s\tprecision %.3f\trecall %.3f\n", label.c_str(),
                  precision, recall);
    }
  }
  return kExitMatch;
}

int cmd_train(const std::string& corpora_dir, const std::string& models_dir,
              std::size_t top_k) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(corpora_dir))
    throw UsageError("not a directory: " + corpora_dir);
  fs::create_directories(models_dir);
  std::vector<fs::path> paths;
  for (const auto& entry : fs::directory_iterator(corpora_dir)) {
    if (entry.path().extension() == ".txt") paths.push_back(entry.path());
  }
  if (paths.empty()) throw UsageError("no .txt corpora in " + corpora_dir);
  std::sort(paths.begin(), paths.end());
  for (const fs::path& path : paths) {
    std::string language = path.stem().string();
    auto model =
        fuzzymatch::langid::train_model(read_file(path.string()), language,
                                        top_k);
    fs::path out = fs::path(models_dir) / (language + ".model");
    fuzzymatch::langid::save_model_file(model, out.string());
    std::cout << "trained " << language << " (" << model.ranked_grams.size()
              << " grams) -> " << out.string() << "\n";
  }
  return kExitMatch;
}

int cmd_langid(const std::string& models_dir, const std::string& text_or_file,
               bool is_file) {
  auto models = fuzzymatch::langid::load_models_dir(models_dir);
  if (models.empty()) throw UsageError("no models in " + models_dir);
  const std::string message =
      is_file ? read_file(text_or_file) : text_or_file;
  auto prediction = fuzzymatch::langid::identify(message, models);
  std::cout << "language " << prediction.language << "  distance "
            << prediction.distance << "  confident "
            << (prediction.confident ? "yes" : "no") << "\n";
  return kExitMatch;
}

int cmd_agree(const std::string& models_dir, const std::string& table_path,
              const std::string& data_path, const std::string& bins) {
  auto edges = parse_bins(bins);
  auto models = fuzzymatch::langid::load_models_dir(models_dir);
  if (models.empty()) throw UsageError("no models in " + models_dir);
  auto table = fuzzymatch::metadata::CountryLanguageTable::load_file(table_path);
  auto records = fuzzymatch::metadata::load_dataset_file(data_path);

  std::vector<fuzzymatch::metadata::AgreementRecord> evaluated;
  evaluated.reserve(records.size());
  for (const auto& record : records)
    evaluated.push_back(
        fuzzymatch::metadata::evaluate_record(record, models, table));

  auto report = fuzzymatch::metadata::aggregate(evaluated, edges);
  std::cout << fuzzymatch::metadata::report_to_json(report) << "\n";
  std::cout << fuzzymatch::metadata::render_table(report);
  return kExitMatch;
}

int cmd_bench(const fuzzymatch::bench::BenchConfig& config, bool json) {
  check_theta(config.theta);
  auto report = fuzzymatch::bench::run(config);
  if (json)
    std::cout << fuzzymatch::bench::report_to_json(report) << "\n";
  else
    std::cout << fuzzymatch::bench::render(report);
  return kExitMatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fuzzy keyword search, classification and language metadata"};
  app.require_subcommand(1);

  // search
  std::string keyword, text_or_file, method = "greedy";
  bool is_file = false;
  double theta = fuzzymatch::kDefaultTheta;
  std::size_t gram_size = fuzzymatch::kDefaultGramSize;
  auto* search = app.add_subcommand("search", "fuzzy keyword search");
  search->add_option("keyword", keyword)->required();
  search->add_option("text", text_or_file, "text, or a path with --file")
      ->required();
  search->add_flag("--file", is_file, "treat the text argument as a path");
  search->add_option("--theta", theta, "similarity threshold");
  search->add_option("--method", method)
      ->check(CLI::IsMember({"greedy", "window"}));
  search->add_option("--n", gram_size, "gram size");

  // classify
  std::string rules_path, data_path;
  bool labeled = false;
  auto* classify = app.add_subcommand("classify", "keyword-rule classifier");
  classify->add_option("rules", rules_path)->required();
  classify->add_option("dataset", data_path)->required();
  classify->add_flag("--labeled", labeled,
                     "dataset has labels; print precision/recall");
  classify->add_option("--n", gram_size, "gram size");

  // train
  std::string corpora_dir, models_dir;
  std::size_t top_k = fuzzymatch::langid::kDefaultTopK;
  auto* train = app.add_subcommand("train", "train language models");
  train->add_option("corpora", corpora_dir, "directory of <lang>.txt files")
      ->required();
  train->add_option("models", models_dir, "output directory")->required();
  train->add_option("--k", top_k, "ranked grams kept per model");

  // langid
  auto* langid = app.add_subcommand("langid", "identify a message's language");
  langid->add_option("models", models_dir)->required();
  langid->add_option("message", text_or_file)->required();
  langid->add_flag("--file", is_file, "treat the message argument as a path");

  // agree
  std::string table_path, bins = "0,20,60";
  auto* agree = app.add_subcommand("agree", "metadata agreement report");
  agree->add_option("models", models_dir)->required();
  agree->add_option("table", table_path, "country-language table")->required();
  agree->add_option("dataset", data_path)->required();
  agree->add_option("--bins", bins, "comma-separated ascending bin edges");

  // bench
  fuzzymatch::bench::BenchConfig config;
  config.theta = 0.85;
  bool json = false;
  auto* bench = app.add_subcommand("bench", "greedy vs baseline benchmark");
  bench->add_option("--keywords", config.keyword_count)
      ->check(CLI::PositiveNumber);
  bench->add_option("--docs", config.doc_count)->check(CLI::PositiveNumber);
  bench->add_option("--doc-length", config.doc_length)
      ->check(CLI::PositiveNumber);
  bench->add_option("--theta", config.theta);
  bench->add_option("--seed", config.seed);
  bench->add_flag("--json", json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*search)
      return cmd_search(keyword, text_or_file, is_file, theta, method,
                        gram_size);
    if (*classify) return cmd_classify(rules_path, data_path, labeled,
                                       gram_size);
    if (*train) return cmd_train(corpora_dir, models_dir, top_k);
    if (*langid) return cmd_langid(models_dir, text_or_file, is_file);
    if (*agree) return cmd_agree(models_dir, table_path, data_path, bins);
    if (*bench) return cmd_bench(config, json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
