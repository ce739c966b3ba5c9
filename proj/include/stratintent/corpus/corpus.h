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

#ifndef STRATINTENT_CORPUS_CORPUS_H_
#define STRATINTENT_CORPUS_CORPUS_H_

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stratintent/error.h"
#include "stratintent/intent/intent.h"
#include "stratintent/risk/game_map.h"
#include "stratintent/risk/game_state.h"
#include "stratintent/risk/initialization.h"

namespace stratintent::corpus {

inline constexpr int kMinHumanTextLength = 200;

enum class Source { kHuman, kSynthetic, kAugmented };

std::string_view source_name(Source source);
std::optional<Source> parse_source(std::string_view name);

// Ego placements, territory -> troops.
using Selections = std::map<risk::TerritoryId, int>;

struct CorpusExample {
  int map_id = 1;
  std::string text;
  Selections selections;
  intent::IntentSpec intent;
  Source source = Source::kSynthetic;

  bool operator==(const CorpusExample&) const = default;
};

// Errors from reading a corpus file. `line` is 1-based; 0 when the error
// is not tied to a line.
class CorpusError : public Error {
 public:
  CorpusError(int line, const std::string& message)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + message
                       : message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class ParseError : public CorpusError {
 public:
  using CorpusError::CorpusError;
};

class ValidationError : public CorpusError {
 public:
  using CorpusError::CorpusError;
};

// Number of Unicode code points in UTF-8 `text`.
size_t text_length(std::string_view text);

// First invariant the example breaks: unknown map, selections not summing
// to 14 or touching an occupied territory, empty text, short human text,
// malformed intent. Consistency of the intent itself is not checked here.
std::optional<std::string> find_example_violation(
    const CorpusExample& example,
    const std::vector<risk::MapInitialization>& inits =
        risk::builtin_initializations());

// The board after the ego player's selections are placed on the map's
// initialization.
risk::GameState selections_state(
    const CorpusExample& example,
    const std::vector<risk::MapInitialization>& inits =
        risk::builtin_initializations());

std::string to_json_line(const CorpusExample& example);
// Throws ParseError / ValidationError tagged with `line`.
CorpusExample from_json_line(std::string_view line_text, int line);

// One JSON object per line; blank lines are skipped.
std::vector<CorpusExample> read_corpus(std::istream& in);
std::vector<CorpusExample> read_corpus(const std::string& path);
void write_corpus(const std::vector<CorpusExample>& examples,
                  std::ostream& out);
void write_corpus(const std::vector<CorpusExample>& examples,
                  const std::string& path);

}  // namespace stratintent::corpus

#endif  // STRATINTENT_CORPUS_CORPUS_H_
