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

#ifndef CMNASH_TOOLS_COMMANDS_HPP_
#define CMNASH_TOOLS_COMMANDS_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "cmnash/rational.hpp"
#include "gamefile.hpp"

namespace cmnash::cli {

// Exit-code contract: 0 success, 1 input error, 2 domain precondition
// violation. Input errors surface as std::invalid_argument; domain
// violations as DomainError.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommandResult {
  nlohmann::json report;  // null for commands that only write files
  int exit_code = 0;
};

struct SamplerConfig {
  int n = 3;
  int count = 1;
  std::uint64_t seed = 0;
  long denominator_bound = 10;
  bool exhaustive = false;
};

CommandResult cmd_analyze(const GameFile& game, std::optional<int> player);
CommandResult cmd_classify(const GameFile& game);
CommandResult cmd_equilibria(const GameFile& game);
CommandResult cmd_sample(const SamplerConfig& config);
CommandResult cmd_render(const GameFile& game, const std::string& output_path);
CommandResult cmd_adjacency(const Rational& resolution);

}  // namespace cmnash::cli

#endif  // CMNASH_TOOLS_COMMANDS_HPP_
