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

#include "stratintent/corpus/corpus.h"

#include <fstream>
#include <istream>
#include <ostream>

#include "json.hpp"

namespace stratintent::corpus {

using Json = nlohmann::ordered_json;
using intent::Constraint;
using intent::IntentSpec;
using risk::canonical_map;

namespace {

Json constraint_json(const std::optional<Constraint>& slot) {
  if (!slot) return nullptr;
  Json j;
  j["class"] = intent::class_key(slot->cls);
  if (intent::takes_continent(slot->cls)) {
    j["value"] = risk::continent_names().at(slot->value);
  } else {
    j["value"] = slot->value;
  }
  return j;
}

std::optional<Constraint> constraint_from_json(const Json& j, int line) {
  if (j.is_null()) return std::nullopt;
  if (!j.is_object() || !j.contains("class") || !j.contains("value") ||
      !j["class"].is_string()) {
    throw ParseError(line, "constraint must be null or {class, value}");
  }
  const auto cls = intent::parse_class_key(j["class"].get<std::string>());
  if (!cls) {
    throw ValidationError(line, "unknown constraint class " + j["class"].dump());
  }
  const Json& v = j["value"];
  std::string text = intent::class_key(*cls) + ":";
  if (intent::takes_continent(*cls) ? !v.is_string() : !v.is_number_integer()) {
    throw ParseError(line, "constraint value " + v.dump() +
                               " has the wrong type for " + text);
  }
  text += v.is_string() ? v.get<std::string>() : std::to_string(v.get<int>());
  try {
    return intent::parse_constraint(text);
  } catch (const intent::IntentFormatError& e) {
    throw ValidationError(line, e.what());
  }
}

}  // namespace

std::string_view source_name(Source source) {
  switch (source) {
    case Source::kHuman:
      return "human";
    case Source::kSynthetic:
      return "synthetic";
    case Source::kAugmented:
      return "augmented";
  }
  return "?";
}

std::optional<Source> parse_source(std::string_view name) {
  for (Source s : {Source::kHuman, Source::kSynthetic, Source::kAugmented}) {
    if (source_name(s) == name) return s;
  }
  return std::nullopt;
}

size_t text_length(std::string_view text) {
  size_t n = 0;
  for (unsigned char c : text) n += (c & 0xC0) != 0x80;
  return n;
}

std::optional<std::string> find_example_violation(
    const CorpusExample& example,
    const std::vector<risk::MapInitialization>& inits) {
  const auto* init = risk::find_initialization(inits, example.map_id);
  if (init == nullptr) {
    return "unknown map_id " + std::to_string(example.map_id);
  }
  if (example.text.empty()) return "empty text";
  if (example.source == Source::kHuman &&
      text_length(example.text) < static_cast<size_t>(kMinHumanTextLength)) {
    return "human text shorter than " + std::to_string(kMinHumanTextLength) +
           " characters";
  }
  const risk::GameState start = risk::load_initialization(*init, canonical_map());
  int total = 0;
  for (const auto& [t, n] : example.selections) {
    if (t < 0 || t >= risk::kNumTerritories) {
      return "territory index " + std::to_string(t) + " out of range";
    }
    const std::string& name = canonical_map().territory_name(t);
    if (n < 1) return "selection on " + name + " has " + std::to_string(n) + " troops";
    if (start.owner[t] != risk::kNoOwner) {
      return "selection on " + name + ", which an opponent holds";
    }
    total += n;
  }
  if (total != risk::kDraftTroops) {
    return "selections total " + std::to_string(total) + " troops, expected " +
           std::to_string(risk::kDraftTroops);
  }
  if (auto why = intent::find_spec_violation(example.intent)) return why;
  return std::nullopt;
}

risk::GameState selections_state(
    const CorpusExample& example,
    const std::vector<risk::MapInitialization>& inits) {
  const auto* init = risk::find_initialization(inits, example.map_id);
  if (init == nullptr) {
    throw ValidationError(0, "unknown map_id " + std::to_string(example.map_id));
  }
  risk::GameState s = risk::load_initialization(*init, canonical_map());
  for (const auto& [t, n] : example.selections) {
    s.owner[t] = risk::kEgo;
    s.troops[t] = n;
  }
  s.troops_to_place[risk::kEgo] = 0;
  return s;
}

std::string to_json_line(const CorpusExample& example) {
  Json j;
  j["map_id"] = example.map_id;
  j["text"] = example.text;
  Json selections = Json::object();
  for (const auto& [t, n] : example.selections) {
    selections[canonical_map().territory_name(t)] = n;
  }
  j["selections"] = selections;
  Json goals = Json::object();
  for (int g = 0; g < intent::kNumGoals; ++g) {
    goals[intent::goal_key(g)] = example.intent.goals[g];
  }
  j["goals"] = goals;
  Json constraints = Json::array();
  for (const auto& slot : example.intent.constraints) {
    constraints.push_back(constraint_json(slot));
  }
  j["constraints"] = constraints;
  j["source"] = source_name(example.source);
  return j.dump();
}

CorpusExample from_json_line(std::string_view line_text, int line) {
  Json j;
  try {
    j = Json::parse(line_text);
  } catch (const Json::parse_error& e) {
    throw ParseError(line, std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError(line, "record is not an object");
  for (const char* key :
       {"map_id", "text", "selections", "goals", "constraints", "source"}) {
    if (!j.contains(key)) throw ParseError(line, std::string("missing field ") + key);
  }
  CorpusExample ex;
  if (!j["map_id"].is_number_integer()) throw ParseError(line, "map_id must be an integer");
  ex.map_id = j["map_id"].get<int>();
  if (!j["text"].is_string()) throw ParseError(line, "text must be a string");
  ex.text = j["text"].get<std::string>();

  if (!j["selections"].is_object()) throw ParseError(line, "selections must be an object");
  for (const auto& [name, n] : j["selections"].items()) {
    if (!n.is_number_integer()) throw ParseError(line, "troops for " + name + " not an integer");
    const auto t = canonical_map().find_territory(name);
    if (!t) throw ValidationError(line, "unknown territory " + name);
    ex.selections[*t] = n.get<int>();
  }

  const Json& goals = j["goals"];
  if (!goals.is_object() || goals.size() != intent::kNumGoals) {
    throw ParseError(line, "goals must be an object with G1..G6");
  }
  for (int g = 0; g < intent::kNumGoals; ++g) {
    const std::string key = intent::goal_key(g);
    if (!goals.contains(key) || !goals[key].is_number_integer()) {
      throw ParseError(line, "goal " + key + " missing or not an integer");
    }
    ex.intent.goals[g] = goals[key].get<int>();
  }

  const Json& constraints = j["constraints"];
  if (!constraints.is_array() || constraints.size() != intent::kNumSlots) {
    throw ParseError(line, "constraints must be an array of 8 slots");
  }
  for (int i = 0; i < intent::kNumSlots; ++i) {
    ex.intent.constraints[i] = constraint_from_json(constraints[i], line);
  }

  if (!j["source"].is_string()) throw ParseError(line, "source must be a string");
  const auto source = parse_source(j["source"].get<std::string>());
  if (!source) throw ValidationError(line, "unknown source " + j["source"].dump());
  ex.source = *source;

  if (auto why = find_example_violation(ex)) throw ValidationError(line, *why);
  return ex;
}

std::vector<CorpusExample> read_corpus(std::istream& in) {
  std::vector<CorpusExample> out;
  std::string text;
  int line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(from_json_line(text, line));
  }
  return out;
}

std::vector<CorpusExample> read_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CorpusError(0, "cannot open " + path);
  return read_corpus(in);
}

void write_corpus(const std::vector<CorpusExample>& examples,
                  std::ostream& out) {
  for (const auto& ex : examples) out << to_json_line(ex) << '\n';
}

void write_corpus(const std::vector<CorpusExample>& examples,
                  const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CorpusError(0, "cannot write " + path);
  write_corpus(examples, out);
  if (!out) throw CorpusError(0, "write failed for " + path);
}

}  // namespace stratintent::corpus
