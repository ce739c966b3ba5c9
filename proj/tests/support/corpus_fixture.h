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

// Shared corpus fixtures for the corpus, extractor and acceptance suites.

#ifndef STRATINTENT_TESTS_SUPPORT_CORPUS_FIXTURE_H_
#define STRATINTENT_TESTS_SUPPORT_CORPUS_FIXTURE_H_

#include <string>
#include <vector>

#include "stratintent/corpus/corpus.h"
#include "stratintent/corpus/generate.h"
#include "stratintent/corpus/templates.h"

namespace stratintent::testing {

inline std::string data_path(const std::string& name) {
  return std::string(STRATINTENT_DATA_DIR) + "/" + name;
}

// The 4000-example synthetic corpus at seed 7, generated once per binary.
inline const std::vector<corpus::CorpusExample>& synthetic_corpus() {
  static const std::vector<corpus::CorpusExample> examples = [] {
    corpus::GenerateOptions options;
    options.count = 4000;
    options.seed = 7;
    return corpus::generate_corpus(options, corpus::builtin_templates());
  }();
  return examples;
}

inline corpus::CorpusExample annotated_example() {
  return corpus::read_corpus(data_path("annotated_example.jsonl")).at(0);
}

}  // namespace stratintent::testing

#endif  // STRATINTENT_TESTS_SUPPORT_CORPUS_FIXTURE_H_
