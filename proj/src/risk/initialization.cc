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

#include "stratintent/risk/initialization.h"

#include <array>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>

namespace stratintent::risk {
namespace {

struct RawInit {
  int id;
  std::string_view source;
  std::vector<std::pair<std::string_view, int>> grey;
  std::vector<std::pair<std::string_view, int>> black;
};

// Map 1 is the hand-specified reference layout; 2-15 are synthetic.
const std::vector<RawInit>& raw_initializations() {
  static const std::vector<RawInit> kRaw = {
      {1, "reference",
       {{"Yellow_C", 5}, {"Yellow_D", 4}, {"Red_A", 1}, {"Red_B", 2}, {"Red_C", 2}},
       {{"Blue_A", 4}, {"Blue_C", 2}, {"Green_E", 2}, {"Purple_A", 5}, {"Purple_B", 1}}},
      {2, "synthetic",
       {{"Yellow_A", 3}, {"Yellow_B", 1}, {"Yellow_C", 7}, {"Blue_A", 2}, {"Blue_B", 1}},
       {{"Red_C", 1}, {"Green_C", 1}, {"Purple_E", 8}, {"Yellow_D", 1}, {"Blue_C", 2}, {"Blue_D", 1}}},
      {3, "synthetic",
       {{"Green_A", 3}, {"Green_E", 8}, {"Yellow_D", 3}},
       {{"Red_A", 3}, {"Red_C", 4}, {"Purple_C", 2}, {"Purple_E", 5}}},
      {4, "synthetic",
       {{"Purple_A", 3}, {"Purple_C", 3}, {"Purple_D", 1}, {"Purple_E", 1}, {"Yellow_A", 2}, {"Yellow_C", 4}},
       {{"Red_A", 3}, {"Red_B", 10}, {"Purple_B", 1}}},
      {5, "synthetic",
       {{"Green_A", 3}, {"Green_B", 8}, {"Green_D", 2}, {"Blue_B", 1}},
       {{"Green_E", 2}, {"Yellow_A", 3}, {"Yellow_B", 3}, {"Yellow_D", 6}}},
      {6, "synthetic",
       {{"Red_C", 7}, {"Blue_B", 6}, {"Blue_D", 1}},
       {{"Green_A", 1}, {"Green_B", 1}, {"Green_E", 2}, {"Purple_C", 1}, {"Yellow_C", 9}}},
      {7, "synthetic",
       {{"Purple_A", 3}, {"Blue_C", 1}, {"Blue_D", 10}},
       {{"Red_C", 1}, {"Blue_A", 12}, {"Blue_B", 1}}},
      {8, "synthetic",
       {{"Green_A", 2}, {"Green_C", 2}, {"Green_D", 4}, {"Green_E", 2}, {"Yellow_C", 4}},
       {{"Red_C", 5}, {"Blue_A", 4}, {"Blue_B", 5}}},
      {9, "synthetic",
       {{"Red_A", 3}, {"Red_B", 1}, {"Red_C", 7}, {"Blue_B", 1}, {"Blue_C", 1}, {"Blue_D", 1}},
       {{"Green_A", 3}, {"Green_C", 1}, {"Green_D", 5}, {"Yellow_A", 2}, {"Yellow_B", 1}, {"Yellow_C", 2}}},
      {10, "synthetic",
       {{"Yellow_A", 2}, {"Yellow_C", 2}, {"Yellow_D", 5}, {"Blue_A", 2}, {"Blue_B", 1}, {"Blue_C", 2}},
       {{"Red_A", 3}, {"Red_C", 2}, {"Green_A", 3}, {"Green_C", 1}, {"Green_E", 1}, {"Yellow_B", 4}}},
      {11, "synthetic",
       {{"Green_A", 1}, {"Green_B", 5}, {"Green_C", 3}, {"Yellow_A", 5}},
       {{"Green_D", 10}, {"Green_E", 1}, {"Blue_B", 1}, {"Blue_D", 2}}},
      {12, "synthetic",
       {{"Red_B", 4}, {"Red_C", 1}, {"Yellow_A", 6}, {"Yellow_B", 1}, {"Yellow_C", 1}, {"Yellow_D", 1}},
       {{"Purple_B", 5}, {"Purple_C", 2}, {"Purple_D", 1}, {"Purple_E", 5}, {"Blue_B", 1}}},
      {13, "synthetic",
       {{"Red_A", 1}, {"Red_C", 4}, {"Blue_A", 1}, {"Blue_B", 2}, {"Blue_C", 2}, {"Blue_D", 4}},
       {{"Purple_B", 3}, {"Yellow_A", 1}, {"Yellow_C", 10}}},
      {14, "synthetic",
       {{"Green_A", 11}, {"Purple_B", 2}, {"Purple_E", 1}},
       {{"Yellow_B", 1}, {"Yellow_C", 1}, {"Yellow_D", 1}, {"Blue_B", 8}, {"Blue_C", 2}, {"Blue_D", 1}}},
      {15, "synthetic",
       {{"Green_C", 1}, {"Green_D", 1}, {"Green_E", 4}, {"Yellow_A", 5}, {"Yellow_B", 2}, {"Yellow_D", 1}},
       {{"Green_A", 1}, {"Green_B", 7}, {"Yellow_C", 6}}},
  };
  return kRaw;
}

Deployment resolve(const std::vector<std::pair<std::string_view, int>>& raw) {
  Deployment out;
  for (const auto& [name, troops] : raw) {
    out.push_back({*canonical_map().find_territory(name), troops});
  }
  return out;
}

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  return s.substr(begin, s.find_last_not_of(" \t\r") - begin + 1);
}

}  // namespace

void validate_initialization(const MapInitialization& init) {
  std::array<bool, kNumTerritories> used{};
  for (const Deployment* d : {&init.grey, &init.black}) {
    int total = 0;
    for (const auto& [t, troops] : *d) {
      if (t < 0 || t >= kNumTerritories) {
        throw InvalidInitializationError("map " + std::to_string(init.id) +
                                         ": invalid territory");
      }
      if (used[t]) {
        throw InvalidInitializationError(
            "map " + std::to_string(init.id) + ": " + territory_names()[t] +
            " deployed twice");
      }
      if (troops < 1) {
        throw InvalidInitializationError("map " + std::to_string(init.id) +
                                         ": deployment without troops");
      }
      used[t] = true;
      total += troops;
    }
    if (total != kDraftTroops) {
      throw InvalidInitializationError(
          "map " + std::to_string(init.id) + ": opponent deploys " +
          std::to_string(total) + " troops, expected 14");
    }
  }
}

GameState load_initialization(const MapInitialization& init,
                              const GameMap& /*map*/) {
  validate_initialization(init);
  GameState s;
  for (const auto& [t, troops] : init.grey) {
    s.owner[t] = kGrey;
    s.troops[t] = troops;
  }
  for (const auto& [t, troops] : init.black) {
    s.owner[t] = kBlack;
    s.troops[t] = troops;
  }
  s.phase = Phase::kDraft;
  s.current_player = kEgo;
  s.troops_to_place = {kDraftTroops, 0, 0};
  s.phase_budget = kDraftTroops;
  return s;
}

const std::vector<MapInitialization>& builtin_initializations() {
  static const std::vector<MapInitialization> kInits = [] {
    std::vector<MapInitialization> inits;
    for (const RawInit& raw : raw_initializations()) {
      inits.push_back({raw.id, std::string(raw.source), resolve(raw.grey),
                       resolve(raw.black)});
    }
    return inits;
  }();
  return kInits;
}

const MapInitialization* find_initialization(
    const std::vector<MapInitialization>& inits, int id) {
  for (const MapInitialization& init : inits) {
    if (init.id == id) return &init;
  }
  return nullptr;
}

std::vector<MapInitialization> parse_initializations(std::istream& in,
                                                     const GameMap& map) {
  std::vector<MapInitialization> inits;
  bool versioned = false;
  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string& what) {
    throw InvalidInitializationError("initialization line " +
                                     std::to_string(line_no) + ": " + what);
  };
  auto parse_deployment = [&](const std::string& text) {
    Deployment d;
    std::istringstream items(text);
    std::string item;
    while (items >> item) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) fail("expected <territory>=<troops>");
      const auto t = map.find_territory(item.substr(0, eq));
      if (!t) fail("unknown territory '" + item.substr(0, eq) + "'");
      int troops = 0;
      try {
        troops = std::stoi(item.substr(eq + 1));
      } catch (const std::exception&) {
        fail("bad troop count in '" + item + "'");
      }
      d.push_back({*t, troops});
    }
    return d;
  };
  while (std::getline(in, line)) {
    ++line_no;
    const std::string content = trim(line.substr(0, line.find('#')));
    if (content.empty()) continue;
    const auto colon = content.find(':');
    if (colon == std::string::npos) fail("expected 'key: value'");
    const std::string key = trim(content.substr(0, colon));
    const std::string value = trim(content.substr(colon + 1));
    if (key == "format_version") {
      if (value != "1") fail("unsupported version");
      versioned = true;
    } else if (key == "map") {
      MapInitialization init;
      try {
        init.id = std::stoi(value);
      } catch (const std::exception&) {
        fail("bad map id");
      }
      inits.push_back(std::move(init));
    } else if (inits.empty()) {
      fail("'" + key + "' before the first 'map:' record");
    } else if (key == "source") {
      inits.back().source = value;
    } else if (key == "grey") {
      inits.back().grey = parse_deployment(value);
    } else if (key == "black") {
      inits.back().black = parse_deployment(value);
    } else {
      fail("unknown key '" + key + "'");
    }
  }
  if (!versioned) throw InvalidInitializationError("missing format_version");
  for (const MapInitialization& init : inits) validate_initialization(init);
  return inits;
}

void write_initializations(const std::vector<MapInitialization>& inits,
                           const GameMap& map, std::ostream& out) {
  out << "format_version: 1\n";
  for (const MapInitialization& init : inits) {
    out << "\nmap: " << init.id << "\nsource: " << init.source;
    for (const auto& [label, d] :
         {std::pair{"grey", &init.grey}, std::pair{"black", &init.black}}) {
      out << '\n' << label << ':';
      for (const auto& [t, troops] : *d) {
        out << ' ' << map.territory_name(t) << '=' << troops;
      }
    }
    out << '\n';
  }
}

}  // namespace stratintent::risk
