/* Copyright 2026 The pcsengine Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "pcs/core.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "pcs/errors.hpp"

namespace pcs::core {

using nlohmann::json;

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string fold_case(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

LabelSpace::LabelSpace(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.size() < 2) {
    throw DataError("label space needs at least 2 labels, got " +
                    std::to_string(labels_.size()));
  }
  folded_.reserve(labels_.size());
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    std::string folded = fold_case(trim(l));
    if (folded.empty()) throw DataError("empty label in label space");
    if (!seen.insert(folded).second) {
      throw DataError("duplicate label after case-folding: \"" + l + "\"");
    }
    folded_.push_back(std::move(folded));
  }
}

std::optional<std::size_t> LabelSpace::find(std::string_view raw) const {
  std::string needle = fold_case(trim(raw));
  for (std::size_t i = 0; i < folded_.size(); ++i) {
    if (folded_[i] == needle) return i;
  }
  return std::nullopt;
}

std::size_t validate_label(const std::string& raw, const LabelSpace& space) {
  auto idx = space.find(raw);
  if (!idx) throw UnknownLabel(raw);
  return *idx;
}

Dataset::Dataset(std::string name, LabelSpace label_space, std::vector<Sample> samples)
    : name_(std::move(name)), label_space_(std::move(label_space)), samples_(std::move(samples)) {
  std::set<std::string> ids;
  for (const auto& s : samples_) {
    if (trim(s.text).empty()) throw DataError("sample \"" + s.id + "\" has empty text");
    if (!ids.insert(s.id).second) throw DataError("duplicate sample id \"" + s.id + "\"");
    if (s.gold && *s.gold >= label_space_.size()) {
      throw DataError("sample \"" + s.id + "\" gold index out of range");
    }
  }
}

namespace {

std::string pad_id(std::size_t row) {
  std::string digits = std::to_string(row);
  if (digits.size() < 6) digits.insert(0, 6 - digits.size(), '0');
  return digits;
}

// RFC-4180-ish CSV: comma separator, double-quote quoting, "" escape,
// newlines allowed inside quoted fields.
std::vector<std::vector<std::string>> parse_csv(const std::string& content,
                                                const std::string& where) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool in_quotes = false;
  bool field_started = false;
  std::size_t i = 0;
  auto end_field = [&] {
    row.push_back(field);
    field.clear();
    field_started = false;
  };
  auto end_row = [&] {
    end_field();
    rows.push_back(row);
    row.clear();
  };
  while (i < content.size()) {
    char c = content[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < content.size() && content[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"' && !field_started) {
      in_quotes = true;
      field_started = true;
    } else if (c == ',') {
      end_field();
    } else if (c == '\r' && i + 1 < content.size() && content[i + 1] == '\n') {
      end_row();
      ++i;
    } else if (c == '\n' || c == '\r') {
      end_row();
    } else {
      field += c;
      field_started = true;
    }
    ++i;
  }
  if (in_quotes) throw DataError(where + ": unterminated quote in CSV");
  if (!field.empty() || !row.empty()) end_row();
  return rows;
}

struct RawRecord {
  std::optional<std::string> id;
  std::string text;
  std::string label;
};

std::vector<RawRecord> read_csv_records(const std::filesystem::path& path,
                                        const LoadOptions& opts) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  auto rows = parse_csv(buf.str(), path.string());
  if (rows.empty()) throw DataError(path.string() + ": missing CSV header row");

  const auto& header = rows.front();
  auto col = [&](const std::string& name) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (trim(header[i]) == name) return i;
    }
    return std::nullopt;
  };
  auto text_col = col(opts.text_field);
  auto label_col = col(opts.label_field);
  auto id_col = col(opts.id_field);
  if (!text_col) throw DataError(path.string() + ": missing column \"" + opts.text_field + "\"");
  if (!label_col) throw DataError(path.string() + ": missing column \"" + opts.label_field + "\"");

  std::vector<RawRecord> records;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& cells = rows[r];
    if (cells.size() == 1 && cells[0].empty()) continue;  // trailing blank line
    std::size_t need = std::max(*text_col, *label_col);
    if (id_col) need = std::max(need, *id_col);
    if (cells.size() <= need) {
      throw DataError(path.string() + ": row " + std::to_string(r) + " is missing fields");
    }
    RawRecord rec;
    rec.text = cells[*text_col];
    rec.label = cells[*label_col];
    if (id_col) rec.id = trim(cells[*id_col]);
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<RawRecord> read_jsonl_records(const std::filesystem::path& path,
                                          const LoadOptions& opts) {
  std::ifstream in(path, std::ios::binary);
  std::vector<RawRecord> records;
  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (trim(line).empty()) continue;
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::parse_error& e) {
      throw DataError(path.string() + ": row " + std::to_string(row) + ": " + e.what());
    }
    if (!obj.contains(opts.text_field)) {
      throw DataError(path.string() + ": row " + std::to_string(row) + " missing field \"" +
                      opts.text_field + "\"");
    }
    if (!obj.contains(opts.label_field)) {
      throw DataError(path.string() + ": row " + std::to_string(row) + " missing field \"" +
                      opts.label_field + "\"");
    }
    RawRecord rec;
    rec.text = obj.at(opts.text_field).get<std::string>();
    const auto& lbl = obj.at(opts.label_field);
    rec.label = lbl.is_string() ? lbl.get<std::string>() : lbl.dump();
    if (obj.contains(opts.id_field)) {
      const auto& idv = obj.at(opts.id_field);
      rec.id = idv.is_string() ? idv.get<std::string>() : idv.dump();
    }
    records.push_back(std::move(rec));
  }
  return records;
}

}  // namespace

Dataset load_dataset(const std::filesystem::path& path, DatasetFormat format,
                     const LoadOptions& opts) {
  if (!std::filesystem::exists(path)) {
    throw DataError("dataset file not found: " + path.string());
  }
  std::vector<RawRecord> records = format == DatasetFormat::Csv
                                       ? read_csv_records(path, opts)
                                       : read_jsonl_records(path, opts);
  if (records.empty()) throw DataError(path.string() + ": empty dataset");

  std::vector<std::string> labels = opts.label_list;
  if (labels.empty()) {
    std::set<std::string> distinct;
    for (const auto& r : records) distinct.insert(fold_case(trim(r.label)));
    labels.assign(distinct.begin(), distinct.end());  // lexicographic, deterministic
  }
  LabelSpace space(std::move(labels));

  std::vector<Sample> samples;
  samples.reserve(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    Sample s;
    s.id = records[i].id ? *records[i].id : pad_id(i);
    s.text = records[i].text;
    s.gold = validate_label(records[i].label, space);
    samples.push_back(std::move(s));
  }
  std::string name = opts.name.empty() ? path.stem().string() : opts.name;
  return Dataset(std::move(name), std::move(space), std::move(samples));
}

void save_dataset_jsonl(const Dataset& dataset, const std::filesystem::path& path,
                        const LoadOptions& opts) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write " + path.string());
  for (const auto& s : dataset.samples()) {
    json obj;
    obj[opts.id_field] = s.id;
    obj[opts.text_field] = s.text;
    if (s.gold) obj[opts.label_field] = dataset.label_space().name(*s.gold);
    out << obj.dump() << "\n";
  }
}

}  // namespace pcs::core
