// Copyright 2026 The bianchi-floor Authors
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

// Serialisation of reports.  Exact values travel as integer pairs encoded
// as decimal strings ({"num": "...", "den": "..."}), so nothing depends on
// the range of JSON numbers; decimals are added for reading only.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bianchi/bounds.hpp"
#include "bianchi/jacobsthal.hpp"
#include "bianchi/swan.hpp"

namespace bianchi::cli {

using Json = nlohmann::ordered_json;

Json rational_json(const Rational& q);
Rational rational_from_json(const Json& j);
Json surd_json(const SurdValue& s);
SurdValue surd_from_json(const Json& j);
Json algint_json(const Order& order, AlgInt x);
Json point_json(const PlanePoint& p);

Json bounds_json(const BoundsReport& r);
Json swan_json(const Order& order, const SwanResult& r,
               const std::vector<Generator>* generators = nullptr,
               const GeneratorAudit* audit = nullptr);
Json witness_json(const SievePattern& pattern, const JacobsthalWitness& w);
Json singular_json(const Order& order, const std::vector<FieldElem>& points);

std::string bounds_text(const BoundsReport& r);

struct Fig6Row {
  i64 disc = 0;
  i64 classNumber = 1;
  i64 deltaNormSq = 0;
  i64 J = 1;
  std::string lowerVal;
  std::string upperVal;
  std::optional<i64> swanSq;
  std::string logLower;
  std::string logUpper;
  std::optional<std::string> logSwan;

  friend bool operator==(const Fig6Row&, const Fig6Row&) = default;
};

Fig6Row fig6_row(const BoundsReport& r);
std::string fig6_header();
std::string fig6_line(const Fig6Row& row);
// Inverse of fig6_header() + fig6_line()*; throws on malformed input.
std::vector<Fig6Row> parse_fig6_csv(const std::string& text);

// Natural log of sqrt(n) to 12 significant digits.
std::string log_sqrt_decimal(i64 n);

}  // namespace bianchi::cli
