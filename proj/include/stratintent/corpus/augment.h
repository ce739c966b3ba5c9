//
// Copyright 2026 The Stratintent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef STRATINTENT_CORPUS_AUGMENT_H_
#define STRATINTENT_CORPUS_AUGMENT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stratintent/corpus/corpus.h"
#include "stratintent/rng.h"

namespace stratintent::corpus {

// Byte range [begin, end) of one sentence, terminator included.
struct SentenceSpan {
  size_t begin = 0;
  size_t end = 0;
  bool operator==(const SentenceSpan&) const = default;
};

// Splits at '.', '?' or '!' (plus trailing quotes/brackets) followed by
// whitespace or end of text. A period after a known abbreviation or a
// lone initial does not end a sentence. Whitespace between sentences is
// not part of any span.
std::vector<SentenceSpan> split_sentences(std::string_view text);

class Paraphraser {
 public:
  virtual ~Paraphraser() = default;
  virtual std::vector<std::string> paraphrase(const std::string& sentence,
                                              Rng& rng) const = 0;
};

// Phrase-level synonym substitution plus "A because B" clause swaps.
class RuleParaphraser : public Paraphraser {
 public:
  explicit RuleParaphraser(int num_candidates = 4)
      : num_candidates_(num_candidates) {}
  std::vector<std::string> paraphrase(const std::string& sentence,
                                      Rng& rng) const override;

 private:
  int num_candidates_;
};

struct FilterParams {
  // Matched case-insensitively as whole alphanumeric tokens.
  std::vector<std::string> protected_keywords = default_keywords();
  bool protect_digits = true;
  double min_edit_distance_ratio = 0.15;

  static std::vector<std::string> default_keywords();
};

// Sorted, lowercased protected tokens occurring in `text`.
std::vector<std::string> protected_tokens(std::string_view text,
                                          const FilterParams& params);

// Levenshtein distance over code points.
size_t edit_distance(std::string_view a, std::string_view b);
// edit_distance / max length; 0 for two empty strings.
double normalized_edit_distance(std::string_view a, std::string_view b);

enum class Verdict { kAccepted, kKeywordMismatch, kTooSimilar };

Verdict judge_candidate(std::string_view original, std::string_view candidate,
                        const FilterParams& params);

struct SentenceTrace {
  std::string original;
  std::optional<std::string> replacement;  // nullopt: original kept
  double edit_ratio = 0;                   // of the replacement
  int candidates = 0;
  int rejected_keywords = 0;
  int rejected_similar = 0;
};

struct AugmentResult {
  CorpusExample example;
  std::vector<SentenceTrace> trace;
};

// Labels, selections and map are copied unchanged; source becomes
// kAugmented.
AugmentResult augment(const CorpusExample& example,
                      const Paraphraser& paraphraser,
                      const FilterParams& params, Rng& rng);

// Example i is augmented with Rng(derive(seed, i)).
std::vector<AugmentResult> augment_corpus(
    const std::vector<CorpusExample>& examples, const Paraphraser& paraphraser,
    const FilterParams& params, uint64_t seed);

}  // namespace stratintent::corpus

#endif  // STRATINTENT_CORPUS_AUGMENT_H_
