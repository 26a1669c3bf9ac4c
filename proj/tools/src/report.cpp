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

#include "report.hpp"

#include "gamefile.hpp"

namespace cmnash::cli {

nlohmann::json make_report(const std::string& command,
                           nlohmann::json input_echo) {
  nlohmann::json report;
  report["version"] = kToolVersion;
  report["command"] = command;
  report["input"] = std::move(input_echo);
  return report;
}

nlohmann::json rational_list_json(const std::vector<Rational>& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& e : v) out.push_back(to_string(e));
  return out;
}

nlohmann::json strategy_json(const MixedStrategy& x) {
  return rational_list_json(x.weights());
}

nlohmann::json indifference_json(const indifference::IndifferenceOutcome& out) {
  nlohmann::json j;
  if (const auto* ind = std::get_if<indifference::Indifferent>(&out)) {
    j["outcome"] = "indifferent";
    j["x"] = strategy_json(ind->x);
    j["common_payoff"] = to_string(ind->common_payoff);
  } else {
    const auto& imp = std::get<indifference::NotPossible>(out);
    j["outcome"] = "not_possible";
    j["witness"] = rational_list_json(imp.witness);
  }
  return j;
}

nlohmann::json equilibrium_set_json(const oracle::EquilibriumSet& set) {
  nlohmann::json j;
  j["degenerate"] = set.degenerate;
  nlohmann::json list = nlohmann::json::array();
  for (const auto& eq : set.equilibria) {
    nlohmann::json e;
    nlohmann::json support = nlohmann::json::array();
    for (int s : eq.support) support.push_back(s + 1);  // 1-based for output
    e["support"] = std::move(support);
    if (eq.support2) {
      nlohmann::json support2 = nlohmann::json::array();
      for (int s : *eq.support2) support2.push_back(s + 1);
      e["support2"] = std::move(support2);
    }
    e["x"] = strategy_json(eq.x);
    if (eq.y) e["y"] = strategy_json(*eq.y);
    e["completely_mixed"] = eq.completely_mixed;
    list.push_back(std::move(e));
  }
  j["equilibria"] = std::move(list);
  return j;
}

std::string class_name(classify::GameClass c) {
  return "A" + std::to_string(classify::class_index(c));
}

namespace {

const char* reason_name(classify::RejectReason r) {
  switch (r) {
    case classify::RejectReason::kNonGeneric:
      return "NonGeneric";
    case classify::RejectReason::kPureSymmetricEquilibrium:
      return "PureSymmetricEquilibrium";
    case classify::RejectReason::kDominatedStrategy:
      return "DominatedStrategy";
    case classify::RejectReason::kConditionViolated:
      return "ConditionViolated";
  }
  return "?";
}

nlohmann::json permutation_json(const Permutation& sigma) {
  nlohmann::json out = nlohmann::json::array();
  for (int i = 0; i < sigma.size(); ++i) out.push_back(sigma.apply(i) + 1);
  return out;
}

}  // namespace

nlohmann::json classification_json(const classify::ClassificationReport& rep) {
  nlohmann::json j;
  if (const auto* cls = std::get_if<classify::Classified>(&rep.outcome)) {
    j["outcome"] = "classified";
    j["class"] = class_name(cls->game_class);
    j["sigma"] = permutation_json(cls->sigma);
    j["params"] = rational_list_json(
        {cls->params[0], cls->params[1], cls->params[2]});
  } else {
    const auto& rej = std::get<classify::Rejected>(rep.outcome);
    j["outcome"] = "rejected";
    j["reason"] = reason_name(rej.reason);
    if (!rej.candidates.empty()) {
      nlohmann::json cands = nlohmann::json::array();
      for (auto c : rej.candidates) cands.push_back(class_name(c));
      j["candidates"] = std::move(cands);
    }
    if (!rej.offending_columns.empty()) {
      nlohmann::json cols = nlohmann::json::array();
      for (int c : rej.offending_columns) cols.push_back(c + 1);
      j["offending_columns"] = std::move(cols);
    }
    if (rej.dominated_strategy) {
      j["dominated_strategy"] = *rej.dominated_strategy + 1;
    }
  }
  if (rep.normalized) {
    nlohmann::json norm;
    norm["matrix"] = matrix_json(rep.normalized->matrix);
    nlohmann::json transforms = nlohmann::json::array();
    for (const auto& t : rep.normalized->transforms) {
      nlohmann::json tj;
      tj["shift"] = to_string(t.shift);
      tj["scale"] = to_string(t.scale);
      transforms.push_back(std::move(tj));
    }
    norm["transforms"] = std::move(transforms);
    j["normalized"] = std::move(norm);
  }
  return j;
}

nlohmann::json adjacency_json(const classify::AdjacencyGraph& graph) {
  nlohmann::json j;
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : graph.edges) {
    nlohmann::json ej;
    ej["classes"] = {class_name(e.a), class_name(e.b)};
    ej["witness"] = matrix_json(e.witness);
    edges.push_back(std::move(ej));
  }
  j["edges"] = std::move(edges);
  j["edge_count"] = graph.edges.size();
  return j;
}

}  // namespace cmnash::cli
