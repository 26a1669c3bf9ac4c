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

#include "cmnash/render.hpp"

#include <array>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cmnash/indifference.hpp"

namespace cmnash {
namespace {

constexpr int kCanvas = 600;
constexpr int kCenter = 300;
constexpr int kScale = 200;  // pixels per payoff unit
// Canvas half-width in payoff units (square [-kHalf, kHalf]^2).
const Rational kHalf(3, 2);

struct Point {
  Rational x;
  Rational y;
};

// Math coordinates (y up) to SVG user units (y down).
Point to_svg(const Point& p) {
  return Point{kCenter + kScale * p.x, kCenter - kScale * p.y};
}

std::string svg_coords(const Point& p) {
  const Point s = to_svg(p);
  return decimal_string(s.x) + "," + decimal_string(s.y);
}

// Clips the canvas square against the half plane {v : v.d <= 0}
// (Sutherland-Hodgman, exact arithmetic).
std::vector<Point> halfplane_polygon(const Rational& dx, const Rational& dy) {
  std::vector<Point> poly = {{-kHalf, -kHalf}, {kHalf, -kHalf},
                             {kHalf, kHalf},   {-kHalf, kHalf}};
  std::vector<Point> out;
  const auto inside = [&](const Point& p) { return p.x * dx + p.y * dy <= 0; };
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point& cur = poly[i];
    const Point& nxt = poly[(i + 1) % poly.size()];
    const Rational fc = cur.x * dx + cur.y * dy;
    const Rational fn = nxt.x * dx + nxt.y * dy;
    if (inside(cur)) out.push_back(cur);
    if ((fc < 0 && fn > 0) || (fc > 0 && fn < 0)) {
      const Rational t = fc / (fc - fn);
      out.push_back(Point{cur.x + t * (nxt.x - cur.x),
                          cur.y + t * (nxt.y - cur.y)});
    }
  }
  return out;
}

}  // namespace

std::string decimal_string(const Rational& v) {
  mpz_class num = v.get_num();
  mpz_class den = v.get_den();
  // Exact when den divides 10^k for some k; otherwise scale to 6 places and
  // round half away from zero.
  mpz_class d = den;
  int twos = 0;
  int fives = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++twos;
  }
  while (d % 5 == 0) {
    d /= 5;
    ++fives;
  }
  const bool exact = (d == 1);
  const bool negative = num < 0;
  mpz_class mag = negative ? mpz_class(-num) : num;
  int places;
  mpz_class scaled;
  if (exact) {
    places = twos > fives ? twos : fives;
    mpz_class pow10 = 1;
    for (int i = 0; i < places; ++i) pow10 *= 10;
    scaled = mag * pow10 / den;  // exact by construction
  } else {
    places = 6;
    mpz_class pow10 = 1000000;
    mpz_class prod = mag * pow10;
    scaled = prod / den;
    if (2 * (prod % den) >= den) scaled += 1;
  }
  mpz_class pow10 = 1;
  for (int i = 0; i < places; ++i) pow10 *= 10;
  mpz_class whole = scaled / pow10;
  mpz_class frac = scaled % pow10;
  std::string out = (negative && scaled != 0) ? "-" : "";
  out += whole.get_str();
  if (frac != 0) {
    std::string digits = frac.get_str();
    digits.insert(digits.begin(), places - digits.size(), '0');
    while (!digits.empty() && digits.back() == '0') digits.pop_back();
    out += "." + digits;
  }
  return out;
}

std::string render_halfspace_svg(const GameMatrix& a) {
  if (a.rows() != 3) {
    throw std::invalid_argument("render_halfspace_svg: requires a 3-row game");
  }
  const indifference::DifferenceMatrix d = indifference::difference_matrix(a);
  static const std::array<const char*, 3> kColors = {"#cc0000", "#0000cc",
                                                     "#7f00b2"};
  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
      << "width=\"" << kCanvas << "\" height=\"" << kCanvas
      << "\" viewBox=\"0 0 " << kCanvas << " " << kCanvas << "\">\n"
      << "  <rect x=\"0\" y=\"0\" width=\"" << kCanvas << "\" height=\""
      << kCanvas << "\" fill=\"#ffffff\"/>\n"
      << "  <line x1=\"0\" y1=\"" << kCenter << "\" x2=\"" << kCanvas
      << "\" y2=\"" << kCenter << "\" stroke=\"#999999\" stroke-width=\"1\"/>\n"
      << "  <line x1=\"" << kCenter << "\" y1=\"0\" x2=\"" << kCenter
      << "\" y2=\"" << kCanvas << "\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
  // Shaded half planes first, arrows on top.
  for (int j = 0; j < d.source_cols; ++j) {
    const Rational& dx = d.d[0][j];
    const Rational& dy = d.d[1][j];
    const char* color = kColors[j % kColors.size()];
    if (dx == 0 && dy == 0) continue;  // zero column: whole plane, no shading
    const std::vector<Point> poly = halfplane_polygon(dx, dy);
    svg << "  <polygon points=\"";
    for (std::size_t k = 0; k < poly.size(); ++k) {
      if (k > 0) svg << " ";
      svg << svg_coords(poly[k]);
    }
    svg << "\" fill=\"" << color << "\" fill-opacity=\"0.15\"/>\n";
  }
  for (int j = 0; j < d.source_cols; ++j) {
    const Rational& dx = d.d[0][j];
    const Rational& dy = d.d[1][j];
    const char* color = kColors[j % kColors.size()];
    const Point tip{dx, dy};
    if (dx == 0 && dy == 0) {
      svg << "  <circle cx=\"" << kCenter << "\" cy=\"" << kCenter
          << "\" r=\"4\" fill=\"" << color << "\"/>\n";
      continue;
    }
    svg << "  <line x1=\"" << kCenter << "\" y1=\"" << kCenter << "\" x2=\""
        << decimal_string(to_svg(tip).x) << "\" y2=\""
        << decimal_string(to_svg(tip).y) << "\" stroke=\"" << color
        << "\" stroke-width=\"2\"/>\n";
    // Arrowhead scaled with the vector (keeps coordinates rational).
    const Rational f(9, 10);
    const Rational g(1, 20);
    const Point back1{f * dx - g * (-dy), f * dy - g * dx};
    const Point back2{f * dx + g * (-dy), f * dy + g * dx};
    svg << "  <polygon points=\"" << svg_coords(tip) << " "
        << svg_coords(back1) << " " << svg_coords(back2) << "\" fill=\""
        << color << "\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace cmnash
