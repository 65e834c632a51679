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

#include "bianchi/cli/commands.hpp"

#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>
#include <vector>

#include "bianchi/bounds.hpp"
#include "bianchi/cli/report.hpp"
#include "bianchi/cli/svg.hpp"
#include "bianchi/jacobsthal.hpp"
#include "bianchi/swan.hpp"

namespace bianchi::cli {

namespace {

Order make_order(i64 disc) {
  try {
    return Order(Disc(disc));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open " + path + " for writing");
  f << body;
}

Ideal parse_ideal(const Order& order, const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("ideal must be given as \"a,b\"");
  i64 a = 0, b = 0;
  try {
    a = std::stoll(text.substr(0, comma));
    b = std::stoll(text.substr(comma + 1));
  } catch (const std::exception&) {
    throw UsageError("ideal must be given as \"a,b\" with integers a, b");
  }
  if (a < 1) throw UsageError("ideal: need a >= 1");
  const i64 d = order.disc().value();
  if (mod_floor(checked_add(checked_mul(b, b), -d), checked_mul(4, a)) != 0)
    throw UsageError("ideal: b^2 is not congruent to the discriminant mod 4a");
  return Ideal{a, mod_floor(b, 2 * a)};
}

Rational parse_rational(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(BigInt(text));
    return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  } catch (const std::exception&) {
    throw UsageError("expected a rational number such as 20 or 41/2, got \"" + text + "\"");
  }
}

void print_witness_text(const SievePattern& p, const JacobsthalWitness& w, std::ostream& out) {
  out << "value       " << w.value << "\n";
  for (std::size_t i = 0; i < p.entries.size(); ++i) {
    out << "  p = " << p.entries[i].p << "  forbidden classes:";
    if (i < w.residues.size())
      for (i64 r : w.residues[i]) out << ' ' << r;
    out << "\n";
  }
  out << "run         [" << w.runStart << ", " << w.runStart + w.runLength - 1 << "] ("
      << w.runLength << " integers)\n";
}

}  // namespace

Format parse_format(const std::string& s) {
  if (s == "text") return Format::kText;
  if (s == "json") return Format::kJson;
  throw UsageError("unknown format \"" + s + "\" (expected text or json)");
}

int cmd_bounds(i64 disc, Format format, std::ostream& out) {
  JacobsthalSolver solver(make_order(disc));
  const BoundsReport r = bounds_report(solver);
  if (format == Format::kJson)
    out << bounds_json(r).dump(2) << "\n";
  else
    out << bounds_text(r);
  return 0;
}

int cmd_swan(const SwanCommand& c, std::ostream& out) {
  const Order order = make_order(c.disc);
  SwanOptions opt;
  opt.capSq = c.capSq;
  opt.budgetSecs = c.budgetSecs;
  opt.threads = c.threads;
  const SwanResult r = swan_number(order.disc(), opt);

  std::vector<Generator> gens;
  GeneratorAudit audit;
  const bool want_gens = c.generators && r.certified;
  if (want_gens) {
    gens = emit_generators(order, r);
    audit = audit_generators(order, gens, r.swanSq);
  }
  if (!c.svgPath.empty()) write_file(c.svgPath, render_swan_svg(order, r));

  if (c.format == Format::kJson) {
    out << swan_json(order, r, want_gens ? &gens : nullptr, want_gens ? &audit : nullptr).dump(2)
        << "\n";
  } else {
    out << "disc          " << r.disc << "\n"
        << "S^2           " << r.swanSq << (r.certified ? "" : "  (uncertified)") << "\n"
        << "certified     " << (r.certified ? "yes" : "no") << "\n"
        << "faces         " << r.faces.size() << "\n"
        << "vertices      " << r.vertices.size() << "\n"
        << "min t^2       " << to_string(r.minVertexHeightSq) << "\n"
        << "cap used      " << r.capUsedSq << " (limit " << r.capLimitSq << ")\n"
        << "rounds        " << r.rounds << "\n"
        << "candidates    " << r.candidates << "\n"
        << "singular      " << r.singular.size() << "\n";
    if (!r.note.empty()) out << "note          " << r.note << "\n";
    if (c.generators && !r.certified) out << "generators    skipped (result not certified)\n";
    if (want_gens) {
      out << "generators    " << gens.size() << " (det 1: " << (audit.determinantsOne ? "yes" : "NO")
          << ", |mu|^2 <= S^2: " << (audit.entriesBounded ? "yes" : "NO")
          << ", beta reduced: " << (audit.betaReduced ? "yes" : "NO") << ")\n";
      for (const Generator& g : gens) {
        out << "  [[" << to_string(order, g.matrix.a) << ", " << to_string(order, g.matrix.b)
            << "], [" << to_string(order, g.matrix.c) << ", " << to_string(order, g.matrix.d)
            << "]]  " << g.kind << "\n";
      }
    }
  }
  return r.certified ? 0 : 2;
}

int cmd_figure6(const Figure6Command& c, std::ostream& out) {
  if (c.maxAbsDisc < 3) throw UsageError("--max-abs-disc must be at least 3");
  const std::vector<i64> discs = fundamental_discriminants(c.maxAbsDisc);
  std::vector<Fig6Row> rows(discs.size());
  std::vector<char> partial(discs.size(), 0);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < discs.size();) {
      JacobsthalSolver solver{Order(Disc(discs[i]))};
      BoundsReport r = bounds_report(solver);
      if (-discs[i] <= c.swanUpto) {
        SwanOptions opt;
        opt.J = r.J;
        opt.budgetSecs = c.budgetSecs;
        const SwanResult s = swan_number(Disc(discs[i]), opt);
        if (s.certified)
          r.swanSq = s.swanSq;
        else
          partial[i] = 1;
      }
      rows[i] = fig6_row(r);
    }
  };
  const int nt = std::max(1, c.threads);
  std::vector<std::thread> pool;
  for (int t = 1; t < nt; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  std::ostringstream csv;
  csv << fig6_header() << "\n";
  for (const Fig6Row& row : rows) csv << fig6_line(row) << "\n";
  if (c.outPath.empty())
    out << csv.str();
  else
    write_file(c.outPath, csv.str());
  for (char p : partial)
    if (p) return 2;
  return 0;
}

int cmd_jacobsthal_little(i64 disc, const std::string& ideal_text, Format format,
                          std::ostream& out) {
  const Order order = make_order(disc);
  const Ideal ideal = parse_ideal(order, ideal_text);
  const SievePattern pattern = sieve_pattern(order, ScaledIdeal{ideal, 1});
  const JacobsthalWitness w = little_j(pattern);
  if (format == Format::kJson) {
    Json j;
    j["disc"] = disc;
    j["ideal"] = Json{{"a", ideal.a}, {"b", ideal.b}};
    j["witness"] = witness_json(pattern, w);
    j["witnessChecked"] = check_witness(pattern, w, pattern.period() <= 1'000'000);
    out << j.dump(2) << "\n";
  } else {
    out << "ideal       (" << ideal.a << ", (" << ideal.b << "+sqrt(" << disc << "))/2)\n";
    print_witness_text(pattern, w, out);
  }
  return 0;
}

int cmd_jacobsthal_big(i64 disc, const std::string& x_text, Format format, std::ostream& out) {
  const Rational x = parse_rational(x_text);
  if (x <= 0) throw UsageError("--x must be positive");
  JacobsthalSolver solver(make_order(disc));
  const BigJResult r = solver.big_J(x);
  if (format == Format::kJson) {
    Json j;
    j["disc"] = disc;
    j["x"] = rational_json(x);
    j["value"] = r.value;
    Json primes = Json::array();
    for (const Ideal& p : r.primes) primes.push_back(Json{{"a", p.a}, {"b", p.b}});
    j["primes"] = std::move(primes);
    j["witness"] = witness_json(r.pattern, r.witness);
    out << j.dump(2) << "\n";
  } else {
    out << "J(" << x_text << ") = " << r.value << "\n";
    out << "primes     ";
    for (const Ideal& p : r.primes) out << " (" << p.a << ", " << p.b << ")";
    out << "\n";
    print_witness_text(r.pattern, r.witness, out);
  }
  return 0;
}

int cmd_jacobsthal_fixedpoint(i64 disc, Format format, std::ostream& out) {
  JacobsthalSolver solver(make_order(disc));
  const i64 J = solver.theorem_J();
  if (format == Format::kJson)
    out << Json{{"disc", disc}, {"J", J}}.dump(2) << "\n";
  else
    out << "J = " << J << "\n";
  return 0;
}

int cmd_singular(i64 disc, Format format, std::ostream& out) {
  const Order order = make_order(disc);
  const std::vector<FieldElem> pts = order.singular_points();
  if (format == Format::kJson) {
    out << Json{{"disc", disc}, {"points", singular_json(order, pts)}}.dump(2) << "\n";
  } else {
    for (const FieldElem& z : pts) out << to_string(order, z) << "\n";
  }
  return 0;
}

}  // namespace bianchi::cli
