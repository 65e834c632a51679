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

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "bianchi/cli/commands.hpp"

using namespace bianchi;
using namespace bianchi::cli;

int main(int argc, char** argv) {
  CLI::App app{"Bounds and exact floors for Bianchi groups PSL2(O)"};
  app.require_subcommand(1);

  i64 disc = 0;
  std::string format = "text";
  auto add_disc = [&](CLI::App* sub) {
    sub->add_option("--disc,disc", disc, "Fundamental discriminant, e.g. -23")->required();
    sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* bounds = app.add_subcommand("bounds", "Lower and upper bounds on Swan's number");
  add_disc(bounds);

  SwanCommand swan;
  i64 cap_sq = 0;
  CLI::App* swan_cmd = app.add_subcommand("swan", "Compute the floor and Swan's number");
  add_disc(swan_cmd);
  swan_cmd->add_option("--cap-sq", cap_sq, "Starting cap on N(mu) (default max(|D|, 16))")
      ->check(CLI::PositiveNumber);
  swan_cmd->add_option("--budget-secs", swan.budgetSecs, "Wall-clock budget, 0 for none");
  swan_cmd->add_option("--threads", swan.threads, "Worker threads")->check(CLI::PositiveNumber);
  swan_cmd->add_option("--svg", swan.svgPath, "Write an SVG projection of the floor");
  swan_cmd->add_flag("--generators", swan.generators, "Emit and audit a generating set");

  Figure6Command fig;
  CLI::App* fig_cmd = app.add_subcommand("figure6", "Bounds table for all |D| < N as CSV");
  fig_cmd->add_option("--max-abs-disc", fig.maxAbsDisc, "N")->default_val(400);
  fig_cmd->add_option("--swan-upto", fig.swanUpto, "Compute S for |D| <= M")->default_val(0);
  fig_cmd->add_option("--budget-secs", fig.budgetSecs, "Per-discriminant budget for S");
  fig_cmd->add_option("--threads", fig.threads, "Worker threads")->check(CLI::PositiveNumber);
  fig_cmd->add_option("--out", fig.outPath, "Output CSV path (default stdout)");

  CLI::App* jac = app.add_subcommand("jacobsthal", "Jacobsthal-type functions");
  jac->require_subcommand(1);
  std::string ideal, x;
  CLI::App* little = jac->add_subcommand("little", "j(a) for a primitive ideal");
  add_disc(little);
  little->add_option("--ideal", ideal, "Ideal as \"a,b\": Za + Z(b+sqrt(D))/2")->required();
  CLI::App* big = jac->add_subcommand("big", "Maximum of j over ideals of norm < x^2");
  add_disc(big);
  big->add_option("--x", x, "Bound x (integer or p/q)")->required();
  CLI::App* fixed = jac->add_subcommand("fixedpoint", "The least J with J(2 max(|delta|, J sqrt|D|)) <= J");
  add_disc(fixed);

  CLI::App* singular = app.add_subcommand("singular", "Singular points modulo translation");
  add_disc(singular);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    const Format fmt = parse_format(format);
    if (bounds->parsed()) return cmd_bounds(disc, fmt, std::cout);
    if (swan_cmd->parsed()) {
      swan.disc = disc;
      swan.format = fmt;
      if (cap_sq > 0) swan.capSq = cap_sq;
      return cmd_swan(swan, std::cout);
    }
    if (fig_cmd->parsed()) return cmd_figure6(fig, std::cout);
    if (little->parsed()) return cmd_jacobsthal_little(disc, ideal, fmt, std::cout);
    if (big->parsed()) return cmd_jacobsthal_big(disc, x, fmt, std::cout);
    if (fixed->parsed()) return cmd_jacobsthal_fixedpoint(disc, fmt, std::cout);
    if (singular->parsed()) return cmd_singular(disc, fmt, std::cout);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 1;
}
