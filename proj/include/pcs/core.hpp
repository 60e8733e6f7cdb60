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

#ifndef PCS_CORE_HPP_
#define PCS_CORE_HPP_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pcs::core {

std::string trim(std::string_view s);
std::string fold_case(std::string_view s);  // ASCII lowercase

// Ordered set of class labels. The order is fixed at construction and
// defines index positions for every score/weight vector downstream.
// All instances are immutable after construction.
class LabelSpace {
 public:
  explicit LabelSpace(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& name(std::size_t idx) const { return labels_.at(idx); }

  // Case-insensitive, whitespace-trimmed lookup.
  std::optional<std::size_t> find(std::string_view raw) const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::string> folded_;
};

// find() that throws UnknownLabel instead of returning nullopt.
std::size_t validate_label(const std::string& raw, const LabelSpace& space);

struct Sample {
  std::string id;
  std::string text;                 // passed verbatim to mutators and backends
  std::optional<std::size_t> gold;  // index into the dataset's LabelSpace
};

class Dataset {
 public:
  Dataset(std::string name, LabelSpace label_space, std::vector<Sample> samples);

  const std::string& name() const { return name_; }
  const LabelSpace& label_space() const { return label_space_; }
  const std::vector<Sample>& samples() const { return samples_; }
  std::size_t size() const { return samples_.size(); }
  const Sample& sample(std::size_t i) const { return samples_.at(i); }

 private:
  std::string name_;
  LabelSpace label_space_;
  std::vector<Sample> samples_;
};

enum class DatasetFormat { Csv, Jsonl };

struct LoadOptions {
  std::string text_field = "text";
  std::string label_field = "label";
  std::string id_field = "id";            // used when present in the input
  std::vector<std::string> label_list;    // explicit order; overrides inference
  std::string name;                       // defaults to the file stem
};

// Reads a CSV (header row, RFC-4180 quoting) or JSONL corpus. The label
// space is inferred as the lexicographically sorted set of distinct gold
// labels (case-folded) unless opts.label_list is given. Rows keep their
// file order; ids are auto-assigned as zero-padded row indices when the
// input has none.
Dataset load_dataset(const std::filesystem::path& path, DatasetFormat format,
                     const LoadOptions& opts = {});

// One object per line: {"id":..., "text":..., "label":...}. Reloading with
// the same field names and the dataset's label order yields an identical
// Dataset.
void save_dataset_jsonl(const Dataset& dataset, const std::filesystem::path& path,
                        const LoadOptions& opts = {});

}  // namespace pcs::core

#endif  // PCS_CORE_HPP_
