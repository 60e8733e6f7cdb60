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

#ifndef PCS_MRENGINE_HPP_
#define PCS_MRENGINE_HPP_

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pcs/core.hpp"

namespace pcs::mrengine {

// A metamorphic relation: a meaning-preserving text transformation whose
// output should receive the same classification label as the input.
// Identity is the untransformed original and is always present.
struct MrId {
  std::string id;

  static MrId identity() { return {"identity"}; }
  static MrId mr1_passive_active() { return {"mr1_passive_active"}; }
  static MrId mr2_double_negation() { return {"mr2_double_negation"}; }
  static MrId mr3_synonym_replacement() { return {"mr3_synonym_replacement"}; }
  // Extension slot: any other id registers a user-defined MR.
  static MrId custom(std::string name) { return {std::move(name)}; }

  bool is_identity() const { return id == "identity"; }
  bool operator==(const MrId& other) const = default;
  bool operator<(const MrId& other) const { return id < other.id; }
};

struct Variant {
  MrId mr;
  std::string text;
  bool fallback = false;  // mutation failed; text is the original
};

// All variants of one sample, Identity first, then registration order.
struct VariantSet {
  std::string sample_id;
  std::string mutator_name;
  std::vector<Variant> variants;

  bool has_fallback() const;
  std::vector<MrId> mr_order() const;
};

class Mutator {
 public:
  virtual ~Mutator() = default;
  virtual std::string name() const = 0;
  // Transforms text under the given MR. Throws MutationFailed on a
  // degenerate result and BackendUnavailable on transport failure.
  virtual std::string apply(const std::string& text, const MrId& mr) = 0;
};

// Identity returns the input unchanged without touching the mutator.
// Empty or whitespace-only completions raise MutationFailed.
std::string mutate(const std::string& text, const MrId& mr, Mutator& mutator);

struct AuditEntry {
  std::string sample_id;
  std::string mr;
  std::string input_hash;
  std::string output_text;
  bool fallback = false;
};
using AuditSink = std::function<void(const AuditEntry&)>;

// Builds the full variant set for a sample. Identity is prepended when
// absent from mrs. Per-MR failures fall back to the original text with the
// fallback flag set so the set always has |mrs|+1 entries; if the mutator
// is unreachable for every requested MR the whole set fails.
VariantSet build_variant_set(const core::Sample& sample, const std::vector<MrId>& mrs,
                             Mutator& mutator, const AuditSink& audit = nullptr);

// Deterministic rule-based transforms for offline runs and tests.
// Unhandled patterns pass through unchanged.
std::string rule_mutate(const std::string& text, const MrId& mr);
std::string rule_mutate(const std::string& text, const MrId& mr,
                        const std::vector<std::pair<std::string, std::string>>& synonyms);

class RuleMutator : public Mutator {
 public:
  RuleMutator() = default;
  explicit RuleMutator(std::vector<std::pair<std::string, std::string>> synonyms)
      : synonyms_(std::move(synonyms)), custom_table_(true) {}

  std::string name() const override { return "rule"; }
  std::string apply(const std::string& text, const MrId& mr) override;

 private:
  std::vector<std::pair<std::string, std::string>> synonyms_;
  bool custom_table_ = false;
};

// Completion callable: (rendered prompt, payload text) -> completion.
// The payload is what scripted doubles key on; HTTP providers ignore it.
using CompletionFn = std::function<std::string(const std::string& prompt, const std::string& payload)>;

// Mutates through an LLM: renders the MR's prompt template ({text}
// placeholder) and returns the stripped completion.
class LlmMutator : public Mutator {
 public:
  LlmMutator(std::string name, CompletionFn complete,
             std::map<std::string, std::string> templates_by_mr);

  std::string name() const override { return name_; }
  std::string apply(const std::string& text, const MrId& mr) override;

  static std::string render(const std::string& prompt_template, const std::string& text);

 private:
  std::string name_;
  CompletionFn complete_;
  std::map<std::string, std::string> templates_;  // mr id -> template
};

}  // namespace pcs::mrengine

#endif  // PCS_MRENGINE_HPP_
