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

#include "bianchi/cli/svg.hpp"

#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <tuple>

namespace bianchi::cli {

namespace {

std::string fmt(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  // Avoid "-0.000000".
  if (std::string(buf) == "-0.000000") return "0.000000";
  return buf;
}

struct View {
  double x0, x1, y0, y1, scale;
  double px(double x) const { return (x - x0) * scale; }
  double py(double y) const { return (y1 - y) * scale; }
};

}  // namespace

std::string render_swan_svg(const Order& order, const SwanResult& result) {
  const double sq = std::sqrt(static_cast<double>(order.abs_disc()));
  const int t = order.disc().trace();
  // F spans x in [-1/2 - t/4, 1/2 + t/4] and y in [-sq/4, sq/4].
  const double margin = 0.5;
  View view{-0.5 - 0.25 * t - margin, 0.5 + 0.25 * t + margin, -0.25 * sq - margin,
            0.25 * sq + margin, 0};
  view.scale = 800.0 / (view.x1 - view.x0);
  const double width = 800.0, height = (view.y1 - view.y0) * view.scale;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(width)
      << "\" height=\"" << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << ' ' << fmt(height)
      << "\">\n"
      << "<title>Floor projection, D = " << result.disc << ", S^2 = " << result.swanSq
      << "</title>\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << fmt(width) << "\" height=\"" << fmt(height)
      << "\" fill=\"white\"/>\n";

  // Distinct face discs, tiled by translations.
  std::set<std::tuple<double, double, double>> discs;
  for (const FloorFace& f : result.faces) {
    const double cu = f.hemi.center.u.convert_to<double>();
    const double cv = f.hemi.center.v.convert_to<double>() * sq;
    const double r = 1.0 / std::sqrt(static_cast<double>(f.hemi.normMu));
    for (int x = -2; x <= 2; ++x) {
      for (int y = -2; y <= 2; ++y) {
        const double u = cu + x + 0.5 * t * y, v = cv + 0.5 * sq * y;
        if (u + r < view.x0 || u - r > view.x1 || v + r < view.y0 || v - r > view.y1) continue;
        discs.emplace(std::round(u * 1e9) / 1e9, std::round(v * 1e9) / 1e9, r);
      }
    }
  }
  out << "<g fill=\"none\" stroke=\"#1f4e99\" stroke-width=\"0.8\">\n";
  for (const auto& [u, v, r] : discs) {
    out << "<circle cx=\"" << fmt(view.px(u)) << "\" cy=\"" << fmt(view.py(v)) << "\" r=\""
        << fmt(r * view.scale) << "\"/>\n";
  }
  out << "</g>\n";

  // Fundamental parallelogram.
  const double hx = 0.5, hy = 0.5;
  const double corners[4][2] = {{-hx, -hy}, {hx, -hy}, {hx, hy}, {-hx, hy}};
  out << "<polygon fill=\"none\" stroke=\"black\" stroke-width=\"1.2\" stroke-dasharray=\"6,4\" points=\"";
  for (int i = 0; i < 4; ++i) {
    const double x = corners[i][0], y = corners[i][1];
    const double u = x + 0.5 * t * y, v = 0.5 * sq * y;
    out << (i ? " " : "") << fmt(view.px(u)) << ',' << fmt(view.py(v));
  }
  out << "\"/>\n";

  out << "<g stroke=\"#c0392b\" stroke-width=\"1.5\">\n";
  const double arm = 5.0;
  for (const PlanePoint& p : result.singular) {
    const double cu = p.u.convert_to<double>(), cv = p.v.convert_to<double>() * sq;
    for (int x = -1; x <= 1; ++x) {
      for (int y = -1; y <= 1; ++y) {
        const double u = cu + x + 0.5 * t * y, v = cv + 0.5 * sq * y;
        if (u < view.x0 || u > view.x1 || v < view.y0 || v > view.y1) continue;
        const double X = view.px(u), Y = view.py(v);
        out << "<line x1=\"" << fmt(X - arm) << "\" y1=\"" << fmt(Y - arm) << "\" x2=\""
            << fmt(X + arm) << "\" y2=\"" << fmt(Y + arm) << "\"/>\n"
            << "<line x1=\"" << fmt(X - arm) << "\" y1=\"" << fmt(Y + arm) << "\" x2=\""
            << fmt(X + arm) << "\" y2=\"" << fmt(Y - arm) << "\"/>\n";
      }
    }
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace bianchi::cli
