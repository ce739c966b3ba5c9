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

#ifndef STRATINTENT_RISK_INITIALIZATION_H_
#define STRATINTENT_RISK_INITIALIZATION_H_

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "stratintent/error.h"
#include "stratintent/risk/game_map.h"
#include "stratintent/risk/game_state.h"

namespace stratintent::risk {

class InvalidInitializationError : public Error {
 public:
  using Error::Error;
};

using Deployment = std::vector<std::pair<TerritoryId, int>>;

// Fixed opponent drafts the ego player responds to. `source` is "reference"
// for the hand-specified layout of map 1 and "synthetic" for the
// stand-ins that fill out the 15 map ids.
struct MapInitialization {
  int id = 0;
  std::string source;
  Deployment grey;
  Deployment black;
  bool operator==(const MapInitialization&) const = default;
};

// Throws InvalidInitializationError unless each opponent places exactly 14
// troops (at least one per listed territory) on distinct valid territories
// and no territory is shared between them.
void validate_initialization(const MapInitialization& init);

// Opponents' troops on the board, ego player to draft 14.
GameState load_initialization(const MapInitialization& init,
                              const GameMap& map);

// Ids 1..15; id 1 is the reference layout.
const std::vector<MapInitialization>& builtin_initializations();

// Looks up `id`; nullptr when absent.
const MapInitialization* find_initialization(
    const std::vector<MapInitialization>& inits, int id);

// Record file:
//   format_version: 1
//   map: <id>
//   source: <label>
//   grey: <territory>=<troops> ...
//   black: <territory>=<troops> ...
std::vector<MapInitialization> parse_initializations(std::istream& in,
                                                     const GameMap& map);
void write_initializations(const std::vector<MapInitialization>& inits,
                           const GameMap& map, std::ostream& out);

}  // namespace stratintent::risk

#endif  // STRATINTENT_RISK_INITIALIZATION_H_
