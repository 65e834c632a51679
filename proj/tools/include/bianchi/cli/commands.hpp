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

// Subcommand implementations.  Each returns the process exit code:
// 0 complete, 2 partial or uncertified.  Usage and validation problems are
// reported by throwing UsageError, which the entry point maps to 1.

#pragma once

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

#include "bianchi/arith.hpp"

namespace bianchi::cli {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Format { kText, kJson };
Format parse_format(const std::string& s);

int cmd_bounds(i64 disc, Format format, std::ostream& out);

struct SwanCommand {
  i64 disc = 0;
  std::optional<i64> capSq;
  double budgetSecs = 0;
  int threads = 1;
  std::string svgPath;
  bool generators = false;
  Format format = Format::kText;
};
int cmd_swan(const SwanCommand& c, std::ostream& out);

struct Figure6Command {
  i64 maxAbsDisc = 400;
  i64 swanUpto = 0;
  double budgetSecs = 0;  // per discriminant
  int threads = 1;
  std::string outPath;    // empty: write to `out`
};
int cmd_figure6(const Figure6Command& c, std::ostream& out);

int cmd_jacobsthal_little(i64 disc, const std::string& ideal, Format format, std::ostream& out);
int cmd_jacobsthal_big(i64 disc, const std::string& x, Format format, std::ostream& out);
int cmd_jacobsthal_fixedpoint(i64 disc, Format format, std::ostream& out);

int cmd_singular(i64 disc, Format format, std::ostream& out);

}  // namespace bianchi::cli
