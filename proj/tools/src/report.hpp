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

#ifndef CMNASH_TOOLS_REPORT_HPP_
#define CMNASH_TOOLS_REPORT_HPP_

#include <string>
#include <vector>

#include <json.hpp>

#include "cmnash/classify.hpp"
#include "cmnash/indifference.hpp"
#include "cmnash/matrix.hpp"
#include "cmnash/oracle.hpp"
#include "cmnash/rational.hpp"

namespace cmnash::cli {

inline constexpr const char* kToolVersion = "1.0";

// Report skeleton: version, command name, echoed input. All rationals are
// serialized as exact strings; nlohmann::json orders keys, so identical
// inputs yield byte-identical documents.
nlohmann::json make_report(const std::string& command,
                           nlohmann::json input_echo);

nlohmann::json rational_list_json(const std::vector<Rational>& v);
nlohmann::json strategy_json(const MixedStrategy& x);
nlohmann::json indifference_json(const indifference::IndifferenceOutcome& out);
nlohmann::json equilibrium_set_json(const oracle::EquilibriumSet& set);
nlohmann::json classification_json(const classify::ClassificationReport& rep);
nlohmann::json adjacency_json(const classify::AdjacencyGraph& graph);
std::string class_name(classify::GameClass c);

}  // namespace cmnash::cli

#endif  // CMNASH_TOOLS_REPORT_HPP_
