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

#include "fuzzymatch/metadata.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace fuzzymatch::metadata {

namespace {

std::string_view trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  return text;
}

std::string to_lower(std::string_view text) {
  std::string out(text);
  for (char& c : out)
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string to_upper(std::string_view text) {
  std::string out(text);
  for (char& c : out)
    c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

// language-range: "*" or 1-8 alpha subtag followed by alphanumeric subtags.
bool valid_language_range(std::string_view range) {
  if (range == "*") return true;
  if (range.empty()) return false;
  std::size_t subtag_len = 0;
  bool first_subtag = true;
  for (char c : range) {
    if (c == '-') {
      if (subtag_len == 0) return false;
      subtag_len = 0;
      first_subtag = false;
      continue;
    }
    bool alpha = std::isalpha(static_cast<unsigned char>(c)) != 0;
    bool digit = std::isdigit(static_cast<unsigned char>(c)) != 0;
    if (!(alpha || (digit && !first_subtag))) return false;
    if (++subtag_len > 8) return false;
  }
  return subtag_len > 0;
}

// Optional sign, digits, optionally "." and 1-3 decimals.
bool parse_quality(std::string_view text, double& quality) {
  text = trim(text);
  if (text.empty()) return false;
  std::size_t i = 0;
  if (text[i] == '-' || text[i] == '+') ++i;
  std::size_t digits = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    ++i;
    ++digits;
  }
  if (digits == 0) return false;
  if (i < text.size()) {
    if (text[i] != '.') return false;
    ++i;
    std::size_t decimals = 0;
    while (i < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[i]))) {
      ++i;
      ++decimals;
    }
    if (decimals < 1 || decimals > 3 || i != text.size()) return false;
  }
  quality = std::strtod(std::string(text).c_str(), nullptr);
  quality = std::clamp(quality, 0.0, 1.0);
  return true;
}

std::string base_code(std::string_view range) {
  std::size_t dash = range.find('-');
  return to_lower(dash == std::string_view::npos ? range
                                                 : range.substr(0, dash));
}

}  // namespace

AcceptLanguage parse_accept_language(std::string_view header) {
  AcceptLanguage result;
  std::size_t pos = 0;
  while (pos <= header.size()) {
    std::size_t comma = header.find(',', pos);
    std::string_view item = comma == std::string_view::npos
                                ? header.substr(pos)
                                : header.substr(pos, comma - pos);
    pos = comma == std::string_view::npos ? header.size() + 1 : comma + 1;

    std::string_view range_part = item;
    double quality = 1.0;
    std::size_t semi = item.find(';');
    if (semi != std::string_view::npos) {
      range_part = item.substr(0, semi);
      std::string_view param = trim(item.substr(semi + 1));
      if (param.size() < 2 ||
          std::tolower(static_cast<unsigned char>(param[0])) != 'q')
        continue;
      std::string_view after_q = trim(param.substr(1));
      if (after_q.empty() || after_q[0] != '=') continue;
      if (!parse_quality(after_q.substr(1), quality)) continue;
    }
    range_part = trim(range_part);
    if (range_part.empty()) continue;
    if (!valid_language_range(range_part)) continue;
    result.entries.push_back(LanguageEntry{std::string(range_part), quality});
  }

  // primary_codes: stable sort by descending quality, then dedupe.
  std::vector<const LanguageEntry*> ordered;
  ordered.reserve(result.entries.size());
  for (const LanguageEntry& entry : result.entries) ordered.push_back(&entry);
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const LanguageEntry* a, const LanguageEntry* b) {
                     return a->quality > b->quality;
                   });
  for (const LanguageEntry* entry : ordered) {
    if (entry->range == "*") continue;
    std::string code = base_code(entry->range);
    if (std::find(result.primary_codes.begin(), result.primary_codes.end(),
                  code) == result.primary_codes.end())
      result.primary_codes.push_back(std::move(code));
  }
  return result;
}

std::string serialize(const AcceptLanguage& parsed) {
  std::ostringstream out;
  for (std::size_t i = 0; i < parsed.entries.size(); ++i) {
    if (i > 0) out << ',';
    out << parsed.entries[i].range;
    double q = parsed.entries[i].quality;
    if (q != 1.0) {
      // Up to three decimals, trailing zeros trimmed.
      char buf[16];
      std::snprintf(buf, sizeof buf, "%.3f", q);
      std::string text(buf);
      while (text.back() == '0') text.pop_back();
      if (text.back() == '.') text.push_back('0');
      out << ";q=" << text;
    }
  }
  return out.str();
}

CountryLanguageTable CountryLanguageTable::load(std::istream& in) {
  CountryLanguageTable table;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos)
      throw std::runtime_error("country table line " + std::to_string(lineno) +
                               ": missing tab");
    std::string country = line.substr(0, tab);
    std::vector<std::string> langs;
    std::stringstream rest(line.substr(tab + 1));
    std::string lang;
    while (std::getline(rest, lang, ',')) {
      lang = std::string(trim(lang));
      if (!lang.empty()) langs.push_back(to_lower(lang));
    }
    if (langs.empty())
      throw std::runtime_error("country table line " + std::to_string(lineno) +
                               ": no languages");
    table.insert(country, std::move(langs));
  }
  return table;
}

CountryLanguageTable CountryLanguageTable::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read country table: " + path);
  return load(in);
}

void CountryLanguageTable::insert(std::string_view country,
                                  std::vector<std::string> langs) {
  // De-duplicate while preserving order.
  std::vector<std::string> unique;
  for (std::string& lang : langs) {
    if (std::find(unique.begin(), unique.end(), lang) == unique.end())
      unique.push_back(std::move(lang));
  }
  map_[to_upper(country)] = std::move(unique);
}

std::vector<std::string> CountryLanguageTable::languages(
    std::string_view country) const {
  auto it = map_.find(to_upper(country));
  return it == map_.end() ? std::vector<std::string>{} : it->second;
}

std::string_view bucket_name(Bucket bucket) {
  switch (bucket) {
    case Bucket::All: return "ALL";
    case Bucket::HeaderOnly: return "HEADER_ONLY";
    case Bucket::CountryOnly: return "COUNTRY_ONLY";
    case Bucket::None: return "NONE";
  }
  return "NONE";
}

AgreementRecord evaluate_record(const ChatRecord& record,
                                const std::vector<langid::LanguageModel>& models,
                                const CountryLanguageTable& table) {
  AgreementRecord out;
  out.id = record.id;
  out.message_length = langid::normalize_message(record.message).size();
  out.classified = langid::identify(record.message, models).language;

  out.header_match = false;
  if (record.accept_language) {
    auto parsed = parse_accept_language(*record.accept_language);
    out.header_match =
        std::find(parsed.primary_codes.begin(), parsed.primary_codes.end(),
                  out.classified) != parsed.primary_codes.end();
  }

  out.country_match = false;
  if (record.country) {
    auto langs = table.languages(*record.country);
    out.country_match =
        std::find(langs.begin(), langs.end(), out.classified) != langs.end();
  }

  out.bucket = out.header_match
                   ? (out.country_match ? Bucket::All : Bucket::HeaderOnly)
                   : (out.country_match ? Bucket::CountryOnly : Bucket::None);
  return out;
}

AgreementReport aggregate(const std::vector<AgreementRecord>& records,
                          const std::vector<std::size_t>& bin_edges) {
  for (std::size_t i = 1; i < bin_edges.size(); ++i) {
    if (bin_edges[i] <= bin_edges[i - 1])
      throw std::invalid_argument("bin edges must be strictly ascending");
  }

  AgreementReport report;
  report.total = records.size();
  for (const AgreementRecord& record : records) {
    switch (record.bucket) {
      case Bucket::All: ++report.all_count; break;
      case Bucket::HeaderOnly: ++report.header_only_count; break;
      case Bucket::CountryOnly: ++report.country_only_count; break;
      case Bucket::None: ++report.none_count; break;
    }
  }
  if (report.total > 0) {
    double total = static_cast<double>(report.total);
    report.all_fraction = report.all_count / total;
    report.header_only_fraction = report.header_only_count / total;
    report.country_only_fraction = report.country_only_count / total;
    report.none_fraction = report.none_count / total;
    report.header_match_rate =
        (report.all_count + report.header_only_count) / total;
    report.country_match_rate =
        (report.all_count + report.country_only_count) / total;
    report.either_match_rate = 1.0 - report.none_fraction;
  }

  // Right-open bins [e_i, e_{i+1}) plus a final overflow bin.
  struct BinAccum {
    std::size_t count = 0, header = 0, country = 0;
  };
  std::size_t nbins = bin_edges.size();  // bin i covers [e_i, e_{i+1});
                                         // last edge opens the overflow bin
  if (nbins == 0) return report;
  std::vector<BinAccum> accum(nbins);
  for (const AgreementRecord& record : records) {
    if (record.message_length < bin_edges.front()) continue;
    std::size_t bin = nbins - 1;
    for (std::size_t i = 1; i < nbins; ++i) {
      if (record.message_length < bin_edges[i]) {
        bin = i - 1;
        break;
      }
    }
    ++accum[bin].count;
    if (record.header_match) ++accum[bin].header;
    if (record.country_match) ++accum[bin].country;
  }
  for (std::size_t i = 0; i < nbins; ++i) {
    LengthBin bin;
    bin.lower = bin_edges[i];
    bin.upper = i + 1 < nbins ? std::optional<std::size_t>(bin_edges[i + 1])
                              : std::nullopt;
    bin.count = accum[i].count;
    bin.header_rate =
        bin.count ? static_cast<double>(accum[i].header) / bin.count : 0.0;
    bin.country_rate =
        bin.count ? static_cast<double>(accum[i].country) / bin.count : 0.0;
    report.length_bins.push_back(bin);
  }
  return report;
}

std::vector<ChatRecord> load_dataset(std::istream& in) {
  std::vector<ChatRecord> records;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw std::runtime_error("dataset line " + std::to_string(lineno) +
                               ": " + e.what());
    }
    ChatRecord record;
    record.id = obj.at("id").get<std::string>();
    record.message = obj.at("message").get<std::string>();
    if (obj.contains("accept_language") && !obj["accept_language"].is_null())
      record.accept_language = obj["accept_language"].get<std::string>();
    if (obj.contains("country") && !obj["country"].is_null())
      record.country = obj["country"].get<std::string>();
    records.push_back(std::move(record));
  }
  return records;
}

std::vector<ChatRecord> load_dataset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read dataset: " + path);
  return load_dataset(in);
}

std::string report_to_json(const AgreementReport& report) {
  nlohmann::json obj;
  obj["total"] = report.total;
  obj["buckets"] = {
      {"ALL", {{"count", report.all_count}, {"fraction", report.all_fraction}}},
      {"HEADER_ONLY",
       {{"count", report.header_only_count},
        {"fraction", report.header_only_fraction}}},
      {"COUNTRY_ONLY",
       {{"count", report.country_only_count},
        {"fraction", report.country_only_fraction}}},
      {"NONE",
       {{"count", report.none_count}, {"fraction", report.none_fraction}}}};
  obj["header_match_rate"] = report.header_match_rate;
  obj["country_match_rate"] = report.country_match_rate;
  obj["either_match_rate"] = report.either_match_rate;
  obj["length_bins"] = nlohmann::json::array();
  for (const LengthBin& bin : report.length_bins) {
    nlohmann::json jbin;
    jbin["lower"] = bin.lower;
    if (bin.upper)
      jbin["upper"] = *bin.upper;
    else
      jbin["upper"] = nullptr;
    jbin["count"] = bin.count;
    jbin["header_rate"] = bin.header_rate;
    jbin["country_rate"] = bin.country_rate;
    obj["length_bins"].push_back(jbin);
  }
  return obj.dump();
}

std::string render_table(const AgreementReport& report) {
  std::ostringstream out;
  char line[128];
  out << "bucket        count  fraction\n";
  auto row = [&](const char* name, std::size_t count, double fraction) {
    std::snprintf(line, sizeof line, "%-12s %6zu  %8.4f\n", name, count,
                  fraction);
    out << line;
  };
  row("ALL", report.all_count, report.all_fraction);
  row("HEADER_ONLY", report.header_only_count, report.header_only_fraction);
  row("COUNTRY_ONLY", report.country_only_count, report.country_only_fraction);
  row("NONE", report.none_count, report.none_fraction);
  std::snprintf(line, sizeof line,
                "total %zu  header %.4f  country %.4f  either %.4f\n",
                report.total, report.header_match_rate,
                report.country_match_rate, report.either_match_rate);
  out << line;
  out << "length-bin      count  header  country\n";
  for (const LengthBin& bin : report.length_bins) {
    std::string span = std::to_string(bin.lower) + "-" +
                       (bin.upper ? std::to_string(*bin.upper) : "inf");
    std::snprintf(line, sizeof line, "%-14s %6zu  %6.4f  %6.4f\n", span.c_str(),
                  bin.count, bin.header_rate, bin.country_rate);
    out << line;
  }
  return out.str();
}

}  // namespace fuzzymatch::metadata
