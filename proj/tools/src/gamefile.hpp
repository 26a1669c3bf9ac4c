// Copyright 2026 The cmnash Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CMNASH_TOOLS_GAMEFILE_HPP_
#define CMNASH_TOOLS_GAMEFILE_HPP_

#include <optional>
#include <string>

#include <json.hpp>

#include "cmnash/matrix.hpp"

namespace cmnash::cli {

// Parsed UTF-8 JSON game document: "A" (array of arrays of integer-or-"p/q"
// entries), optional "B" (player 2's own matrix, transposed dimensions),
// optional "symmetric" (requires square A and no B).
struct GameFile {
  GameMatrix a;
  std::optional<GameMatrix> b;
  bool symmetric = false;
};

// Throws std::invalid_argument on malformed documents.
GameFile parse_game_file(const nlohmann::json& doc);
GameFile load_game_file(const std::string& path);

// Serialization used for the input echo in reports; round-trips through
// parse_game_file.
nlohmann::json game_file_json(const GameFile& game);
nlohmann::json matrix_json(const GameMatrix& m);

}  // namespace cmnash::cli

#endif  // CMNASH_TOOLS_GAMEFILE_HPP_
