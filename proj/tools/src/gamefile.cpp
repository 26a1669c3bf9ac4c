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

#include "gamefile.hpp"

#include <fstream>
#include <stdexcept>

#include "cmnash/rational.hpp"

namespace cmnash::cli {
namespace {

Rational parse_entry(const nlohmann::json& e) {
  if (e.is_number_integer()) {
    return Rational(static_cast<long>(e.get<long long>()));
  }
  if (e.is_string()) return parse_rational(e.get<std::string>());
  throw std::invalid_argument("matrix entry must be an integer or a string");
}

GameMatrix parse_matrix(const nlohmann::json& m, bool symmetric) {
  if (!m.is_array() || m.empty()) {
    throw std::invalid_argument("matrix must be a non-empty array of rows");
  }
  std::vector<std::vector<Rational>> rows;
  for (const auto& r : m) {
    if (!r.is_array() || r.empty()) {
      throw std::invalid_argument("matrix row must be a non-empty array");
    }
    std::vector<Rational> row;
    for (const auto& e : r) row.push_back(parse_entry(e));
    rows.push_back(std::move(row));
  }
  return GameMatrix(std::move(rows), symmetric);
}

}  // namespace

GameFile parse_game_file(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("A")) {
    throw std::invalid_argument("game file must be an object with field \"A\"");
  }
  const bool symmetric = doc.value("symmetric", false);
  if (symmetric && doc.contains("B")) {
    throw std::invalid_argument("symmetric games must not carry \"B\"");
  }
  GameMatrix a = parse_matrix(doc.at("A"), symmetric);
  std::optional<GameMatrix> b;
  if (doc.contains("B")) {
    b = parse_matrix(doc.at("B"), false);
    if (b->rows() != a.cols() || b->cols() != a.rows()) {
      throw std::invalid_argument(
          "\"B\" dimensions must be transposed relative to \"A\"");
    }
  }
  return GameFile{std::move(a), std::move(b), symmetric};
}

GameFile load_game_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open game file: " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("invalid JSON in " + path + ": " + e.what());
  }
  return parse_game_file(doc);
}

nlohmann::json matrix_json(const GameMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(to_string(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json game_file_json(const GameFile& game) {
  nlohmann::json doc;
  doc["A"] = matrix_json(game.a);
  if (game.b) doc["B"] = matrix_json(*game.b);
  if (game.symmetric) doc["symmetric"] = true;
  return doc;
}

}  // namespace cmnash::cli
