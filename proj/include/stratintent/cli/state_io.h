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

#ifndef STRATINTENT_CLI_STATE_IO_H_
#define STRATINTENT_CLI_STATE_IO_H_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "stratintent/error.h"
#include "stratintent/risk/game_map.h"
#include "stratintent/risk/game_state.h"

namespace stratintent::cli {

class StateFormatError : public Error {
 public:
  StateFormatError(int line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message) {}
};

// One state per line:
//   {"turn":3,"phase":"attack","current_player":"ego","phase_budget":0,
//    "troops_to_place":[0,0,0],"players_alive":[true,true,true],
//    "board":{"Red_A":["ego",3],...}}
// Territories absent from "board" are empty.
std::string state_to_json_line(const risk::GameMap& map,
                               const risk::GameState& state);
risk::GameState state_from_json_line(const risk::GameMap& map,
                                     std::string_view text, int line);

// Blank lines are skipped. Every state must pass the invariant check.
std::vector<risk::GameState> read_states(const risk::GameMap& map,
                                         std::istream& in);

}  // namespace stratintent::cli

#endif  // STRATINTENT_CLI_STATE_IO_H_
