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

#include "bianchi/cli/report.hpp"

#include <sstream>

namespace bianchi::cli {

Json rational_json(const Rational& q) {
  return Json{{"num", boost::multiprecision::numerator(q).str()},
              {"den", boost::multiprecision::denominator(q).str()}};
}

Rational rational_from_json(const Json& j) {
  return Rational(BigInt(j.at("num").get<std::string>()), BigInt(j.at("den").get<std::string>()));
}

Json surd_json(const SurdValue& s) {
  return Json{{"q0", rational_json(s.q0())},
              {"q1", rational_json(s.q1())},
              {"s", s.s()},
              {"exact", s.exact()},
              {"decimal", s.decimal(12)}};
}

SurdValue surd_from_json(const Json& j) {
  return SurdValue(rational_from_json(j.at("q0")), rational_from_json(j.at("q1")),
                   j.at("s").get<i64>());
}

Json algint_json(const Order& order, AlgInt x) {
  return Json{{"a", x.a}, {"b", x.b}, {"text", to_string(order, x)}};
}

Json point_json(const PlanePoint& p) {
  return Json{{"u", rational_json(p.u)}, {"v", rational_json(p.v)}};
}

Json bounds_json(const BoundsReport& r) {
  Json j;
  j["disc"] = r.disc;
  j["classNumber"] = r.classNumber;
  j["deltaNormSq"] = r.deltaNormSq;
  j["J"] = r.J;
  j["lower"] = surd_json(r.lower);
  j["upper"] = surd_json(r.upper);
  j["swanSq"] = r.swanSq ? Json(*r.swanSq) : Json(nullptr);
  j["consistent"] = r.consistent();
  return j;
}

std::string bounds_text(const BoundsReport& r) {
  std::ostringstream out;
  out << "disc          " << r.disc << "\n"
      << "class number  " << r.classNumber << "\n"
      << "|delta|^2     " << r.deltaNormSq << "\n"
      << "J             " << r.J << "\n"
      << "lower         " << r.lower.decimal(12) << "  = " << r.lower.exact() << "\n"
      << "upper         " << r.upper.decimal(12) << "  = " << r.upper.exact() << "\n";
  if (r.swanSq) out << "S^2           " << *r.swanSq << "\n";
  return out.str();
}

Json swan_json(const Order& order, const SwanResult& r, const std::vector<Generator>* generators,
               const GeneratorAudit* audit) {
  Json j;
  j["disc"] = r.disc;
  j["swanSq"] = r.swanSq;
  j["certified"] = r.certified;
  j["capUsedSq"] = r.capUsedSq;
  j["capLimitSq"] = r.capLimitSq;
  j["minVertexHeightSq"] = rational_json(r.minVertexHeightSq);
  j["rounds"] = r.rounds;
  j["candidates"] = r.candidates;
  j["note"] = r.note;
  Json faces = Json::array();
  for (const FloorFace& f : r.faces) {
    Json fj;
    fj["lambda"] = algint_json(order, f.hemi.lambda);
    fj["mu"] = algint_json(order, f.hemi.mu);
    fj["normMu"] = f.hemi.normMu;
    fj["center"] = point_json(f.hemi.center);
    Json cell = Json::array();
    for (std::size_t i = 0; i < f.cell.size(); ++i) {
      Json v = point_json(f.cell[i]);
      v["tSq"] = rational_json(f.vertexHeightsSq[i]);
      cell.push_back(std::move(v));
    }
    fj["cell"] = std::move(cell);
    faces.push_back(std::move(fj));
  }
  j["faces"] = std::move(faces);
  Json sing = Json::array();
  for (const PlanePoint& p : r.singular) sing.push_back(point_json(p));
  j["singular"] = std::move(sing);
  if (generators) {
    Json gens = Json::array();
    for (const Generator& g : *generators) {
      gens.push_back(Json{{"kind", g.kind},
                          {"matrix",
                           Json::array({Json::array({algint_json(order, g.matrix.a),
                                                     algint_json(order, g.matrix.b)}),
                                        Json::array({algint_json(order, g.matrix.c),
                                                     algint_json(order, g.matrix.d)})})},
                          {"det", algint_json(order, order.det(g.matrix))}});
    }
    j["generators"] = std::move(gens);
  }
  if (audit) {
    j["audit"] = Json{{"count", audit->count},
                      {"determinantsOne", audit->determinantsOne},
                      {"entriesBounded", audit->entriesBounded},
                      {"betaReduced", audit->betaReduced}};
  }
  return j;
}

Json witness_json(const SievePattern& pattern, const JacobsthalWitness& w) {
  Json j;
  j["value"] = w.value;
  Json entries = Json::array();
  for (std::size_t i = 0; i < pattern.entries.size(); ++i) {
    entries.push_back(Json{{"p", pattern.entries[i].p},
                           {"m", pattern.entries[i].m},
                           {"residues", i < w.residues.size() ? Json(w.residues[i]) : Json::array()}});
  }
  j["sieve"] = std::move(entries);
  j["runStart"] = w.runStart;
  j["runLength"] = w.runLength;
  return j;
}

Json singular_json(const Order& order, const std::vector<FieldElem>& points) {
  Json arr = Json::array();
  for (const FieldElem& z : points) {
    arr.push_back(Json{{"num", algint_json(order, z.num)},
                       {"den", z.den},
                       {"text", to_string(order, z)},
                       {"point", point_json(order.to_plane(z))}});
  }
  return arr;
}

std::string log_sqrt_decimal(i64 n) {
  return SurdValue(Rational(n), 0, 1).log_decimal(12);
}

Fig6Row fig6_row(const BoundsReport& r) {
  Fig6Row row;
  row.disc = r.disc;
  row.classNumber = r.classNumber;
  row.deltaNormSq = r.deltaNormSq;
  row.J = r.J;
  row.lowerVal = r.lower.decimal(12);
  row.upperVal = r.upper.decimal(12);
  row.logLower = r.lower.log_decimal(12);
  row.logUpper = r.upper.log_decimal(12);
  row.swanSq = r.swanSq;
  if (r.swanSq) row.logSwan = log_sqrt_decimal(*r.swanSq);
  return row;
}

std::string fig6_header() {
  return "disc,classNumber,deltaNormSq,J,lowerVal,upperVal,swanSq,logLower,logUpper,logSwan";
}

std::string fig6_line(const Fig6Row& row) {
  std::ostringstream out;
  out << row.disc << ',' << row.classNumber << ',' << row.deltaNormSq << ',' << row.J << ','
      << row.lowerVal << ',' << row.upperVal << ',';
  if (row.swanSq) out << *row.swanSq;
  out << ',' << row.logLower << ',' << row.logUpper << ',';
  if (row.logSwan) out << *row.logSwan;
  return out.str();
}

std::vector<Fig6Row> parse_fig6_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != fig6_header())
    throw std::invalid_argument("figure6 csv: unexpected header");
  std::vector<Fig6Row> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) f.push_back(cell);
    if (!line.empty() && line.back() == ',') f.emplace_back();
    if (f.size() != 10) throw std::invalid_argument("figure6 csv: expected 10 fields: " + line);
    Fig6Row r;
    r.disc = std::stoll(f[0]);
    r.classNumber = std::stoll(f[1]);
    r.deltaNormSq = std::stoll(f[2]);
    r.J = std::stoll(f[3]);
    r.lowerVal = f[4];
    r.upperVal = f[5];
    if (!f[6].empty()) r.swanSq = std::stoll(f[6]);
    r.logLower = f[7];
    r.logUpper = f[8];
    if (!f[9].empty()) r.logSwan = f[9];
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace bianchi::cli
