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

#include "stratintent/risk/game_map.h"

#include <istream>
#include <ostream>
#include <sstream>

namespace stratintent::risk {
namespace {

constexpr std::array<int, kNumContinents> kContinentSizes = {3, 5, 5, 4, 4};
constexpr std::array<int, kNumContinents> kContinentBonus = {2, 3, 3, 2, 2};

std::string trim(std::string_view s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return std::string(s.substr(begin, end - begin + 1));
}

}  // namespace

const std::array<std::string_view, kNumContinents>& continent_names() {
  static constexpr std::array<std::string_view, kNumContinents> kNames = {
      "Red", "Green", "Purple", "Yellow", "Blue"};
  return kNames;
}

const std::array<std::string, kNumTerritories>& territory_names() {
  static const std::array<std::string, kNumTerritories> kNames = [] {
    std::array<std::string, kNumTerritories> names;
    int t = 0;
    for (int c = 0; c < kNumContinents; ++c) {
      for (int i = 0; i < kContinentSizes[c]; ++i) {
        names[t++] = std::string(continent_names()[c]) + "_" +
                     static_cast<char>('A' + i);
      }
    }
    return names;
  }();
  return kNames;
}

const std::vector<std::pair<std::string_view, std::string_view>>&
inter_continent_connections() {
  static const std::vector<std::pair<std::string_view, std::string_view>>
      kConnections = {
          {"Yellow_D", "Green_A"}, {"Green_D", "Red_A"},
          {"Red_A", "Green_D"},    {"Red_B", "Purple_E"},
          {"Red_C", "Yellow_B"},   {"Red_C", "Blue_B"},
          {"Blue_A", "Yellow_C"},  {"Yellow_C", "Blue_D"},
          {"Blue_C", "Purple_A"},  {"Purple_A", "Green_E"},
          {"Green_E", "Purple_A"},
      };
  return kConnections;
}

GameMap::GameMap(std::vector<Continent> continents, std::vector<Edge> edges)
    : continents_(std::move(continents)), edges_(std::move(edges)) {
  if (static_cast<int>(continents_.size()) != kNumContinents) {
    throw MapFormatError("map must declare exactly 5 continents");
  }
  std::array<bool, kNumTerritories> seen{};
  for (int c = 0; c < kNumContinents; ++c) {
    if (continents_[c].name != continent_names()[c]) {
      throw MapFormatError("continent " + std::to_string(c) + " must be " +
                           std::string(continent_names()[c]));
    }
    for (TerritoryId t : continents_[c].territories) {
      if (t < 0 || t >= kNumTerritories || seen[t]) {
        throw MapFormatError("continents must partition the 21 territories");
      }
      seen[t] = true;
      continent_of_[t] = c;
    }
  }
  for (TerritoryId t = 0; t < kNumTerritories; ++t) {
    if (!seen[t]) {
      throw MapFormatError("territory " + territory_names()[t] +
                           " is not in any continent");
    }
    names_[t] = territory_names()[t];
  }
  for (const Edge& e : edges_) {
    if (e.source < 0 || e.source >= kNumTerritories || e.target < 0 ||
        e.target >= kNumTerritories || e.source == e.target) {
      throw MapFormatError("edge references an invalid territory");
    }
    if (adjacency_[e.source][e.target]) {
      throw MapFormatError("duplicate edge " + names_[e.source] + " -> " +
                           names_[e.target]);
    }
    adjacency_[e.source][e.target] = true;
    successors_[e.source].push_back(e.target);
    predecessors_[e.target].push_back(e.source);
  }
  for (TerritoryId t = 0; t < kNumTerritories; ++t) {
    for (TerritoryId s : predecessors_[t]) {
      if (continent_of_[s] != continent_of_[t]) {
        borders_[continent_of_[t]].push_back(t);
        break;
      }
    }
  }
}

std::optional<TerritoryId> GameMap::find_territory(
    std::string_view name) const {
  for (TerritoryId t = 0; t < kNumTerritories; ++t) {
    if (names_[t] == name) return t;
  }
  return std::nullopt;
}

std::optional<ContinentId> GameMap::find_continent(
    std::string_view name) const {
  for (ContinentId c = 0; c < kNumContinents; ++c) {
    if (continents_[c].name == name) return c;
  }
  return std::nullopt;
}

GameMap build_canonical_map() {
  std::vector<Continent> continents;
  std::vector<Edge> edges;
  int first = 0;
  for (int c = 0; c < kNumContinents; ++c) {
    Continent continent{std::string(continent_names()[c]), {},
                        kContinentBonus[c]};
    for (int i = 0; i < kContinentSizes[c]; ++i) {
      continent.territories.push_back(first + i);
    }
    for (TerritoryId s : continent.territories) {
      for (TerritoryId t : continent.territories) {
        if (s != t) edges.push_back({s, t});
      }
    }
    first += kContinentSizes[c];
    continents.push_back(std::move(continent));
  }
  auto index_of = [](std::string_view name) {
    for (TerritoryId t = 0; t < kNumTerritories; ++t) {
      if (territory_names()[t] == name) return t;
    }
    return kNoTerritory;
  };
  for (const auto& [source, target] : inter_continent_connections()) {
    edges.push_back({index_of(source), index_of(target)});
  }
  return GameMap(std::move(continents), std::move(edges));
}

const GameMap& canonical_map() {
  static const GameMap kMap = build_canonical_map();
  return kMap;
}

GameMap parse_map(std::istream& in) {
  std::vector<Continent> continents;
  std::vector<Edge> edges;
  bool versioned = false;
  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string& what) {
    throw MapFormatError("map line " + std::to_string(line_no) + ": " + what);
  };
  auto lookup = [&](const std::string& name) {
    for (TerritoryId t = 0; t < kNumTerritories; ++t) {
      if (territory_names()[t] == name) return t;
    }
    fail("unknown territory '" + name + "'");
    return kNoTerritory;
  };
  while (std::getline(in, line)) {
    ++line_no;
    const std::string content = trim(line.substr(0, line.find('#')));
    if (content.empty()) continue;
    const auto colon = content.find(':');
    if (colon == std::string::npos) fail("expected 'key: value'");
    const std::string key = trim(content.substr(0, colon));
    std::istringstream value(content.substr(colon + 1));
    if (key == "format_version") {
      int version = 0;
      if (!(value >> version) || version != 1) fail("unsupported version");
      versioned = true;
    } else if (key == "continent") {
      Continent c;
      if (!(value >> c.name >> c.bonus)) fail("expected name and bonus");
      std::string name;
      while (value >> name) c.territories.push_back(lookup(name));
      continents.push_back(std::move(c));
    } else if (key == "edge") {
      std::string source, target, extra;
      if (!(value >> source >> target) || (value >> extra)) {
        fail("expected 'edge: <source> <target>'");
      }
      edges.push_back({lookup(source), lookup(target)});
    } else {
      fail("unknown key '" + key + "'");
    }
  }
  if (!versioned) throw MapFormatError("missing format_version");
  return GameMap(std::move(continents), std::move(edges));
}

void write_map(const GameMap& map, std::ostream& out) {
  out << "format_version: 1\n";
  for (const Continent& c : map.continents()) {
    out << "continent: " << c.name << ' ' << c.bonus;
    for (TerritoryId t : c.territories) out << ' ' << map.territory_name(t);
    out << '\n';
  }
  for (const Edge& e : map.edges()) {
    out << "edge: " << map.territory_name(e.source) << ' '
        << map.territory_name(e.target) << '\n';
  }
}

}  // namespace stratintent::risk
