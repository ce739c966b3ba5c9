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

#ifndef STRATINTENT_RISK_GAME_MAP_H_
#define STRATINTENT_RISK_GAME_MAP_H_

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stratintent/error.h"

namespace stratintent::risk {

inline constexpr int kNumTerritories = 21;
inline constexpr int kNumContinents = 5;

// Index into the canonical territory ordering Red_A..Blue_D.
using TerritoryId = int;
inline constexpr TerritoryId kNoTerritory = -1;

// Index into the canonical continent ordering Red, Green, Purple, Yellow,
// Blue.
using ContinentId = int;

struct Edge {
  TerritoryId source;
  TerritoryId target;
  bool operator==(const Edge&) const = default;
};

struct Continent {
  std::string name;
  std::vector<TerritoryId> territories;
  int bonus = 0;
  bool operator==(const Continent&) const = default;
};

class MapFormatError : public Error {
 public:
  using Error::Error;
};

// Territory graph with directed edges. Territory and continent indices are
// fixed by the canonical ordering; only the edge set may vary between map
// files.
class GameMap {
 public:
  // Throws MapFormatError when the continents do not partition the 21
  // canonical territories or an edge references an unknown territory.
  GameMap(std::vector<Continent> continents, std::vector<Edge> edges);

  const std::vector<Continent>& continents() const { return continents_; }
  const std::vector<Edge>& edges() const { return edges_; }

  const std::string& territory_name(TerritoryId t) const { return names_[t]; }
  std::optional<TerritoryId> find_territory(std::string_view name) const;
  std::optional<ContinentId> find_continent(std::string_view name) const;
  ContinentId continent_of(TerritoryId t) const { return continent_of_[t]; }

  bool has_edge(TerritoryId source, TerritoryId target) const {
    return adjacency_[source][target];
  }
  const std::vector<TerritoryId>& successors(TerritoryId t) const {
    return successors_[t];
  }
  const std::vector<TerritoryId>& predecessors(TerritoryId t) const {
    return predecessors_[t];
  }

  // Territories of `c` with an incoming edge from another continent.
  const std::vector<TerritoryId>& border_territories(ContinentId c) const {
    return borders_[c];
  }

  bool operator==(const GameMap& other) const {
    return continents_ == other.continents_ && edges_ == other.edges_;
  }

 private:
  std::vector<Continent> continents_;
  std::vector<Edge> edges_;
  std::array<std::string, kNumTerritories> names_;
  std::array<ContinentId, kNumTerritories> continent_of_{};
  std::array<std::array<bool, kNumTerritories>, kNumTerritories> adjacency_{};
  std::array<std::vector<TerritoryId>, kNumTerritories> successors_;
  std::array<std::vector<TerritoryId>, kNumTerritories> predecessors_;
  std::array<std::vector<TerritoryId>, kNumContinents> borders_;
};

// Canonical continent names, in index order.
const std::array<std::string_view, kNumContinents>& continent_names();

// Canonical territory names, in index order.
const std::array<std::string, kNumTerritories>& territory_names();

// The one-way inter-continent connections of the canonical map, in the order
// they are listed for participants.
const std::vector<std::pair<std::string_view, std::string_view>>&
inter_continent_connections();

// The fixed 21-territory map: each continent is a complete bidirectional
// subgraph, plus the one-way inter-continent connections. Edge order is
// intra-continent edges continent by continent (row-major over
// (source, target) pairs), then inter-continent edges in listing order.
GameMap build_canonical_map();

// Shared immutable instance of build_canonical_map().
const GameMap& canonical_map();

// Key-value map file:
//   format_version: 1
//   continent: <name> <bonus> <territory>...
//   edge: <source> <target>
// Throws MapFormatError on malformed input.
GameMap parse_map(std::istream& in);
void write_map(const GameMap& map, std::ostream& out);

}  // namespace stratintent::risk

#endif  // STRATINTENT_RISK_GAME_MAP_H_
