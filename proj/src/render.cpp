// Copyright 2026 The Infodiagram Authors.
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

#include "infodiagram/render.hpp"

#include <array>
#include <cstdio>
#include <string>

#include "infodiagram/errors.hpp"

namespace infodiagram {
namespace {

struct Circle {
  int cx, cy, r;
  const char* fill;
};

struct Cell {
  Mask atom;
  int x, y;
};

constexpr std::array<Circle, 2> kTwoCircles{{{170, 190, 110, "#4e79a7"}, {290, 190, 110, "#f28e2b"}}};
constexpr std::array<Cell, 3> kTwoCells{{{0b01, 115, 190}, {0b10, 345, 190}, {0b11, 230, 190}}};

constexpr std::array<Circle, 3> kThreeCircles{
    {{185, 160, 110, "#4e79a7"}, {295, 160, 110, "#f28e2b"}, {240, 255, 110, "#59a14f"}}};
constexpr std::array<Cell, 7> kThreeCells{{{0b001, 135, 125},
                                           {0b010, 345, 125},
                                           {0b100, 240, 320},
                                           {0b011, 240, 110},
                                           {0b101, 175, 230},
                                           {0b110, 305, 230},
                                           {0b111, 240, 195}}};

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string fixed6(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", value);
  return buf;
}

template <std::size_t C, std::size_t K>
std::string draw(const DiagramDocument& doc, const std::array<Circle, C>& circles,
                 const std::array<Cell, K>& cells) {
  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"480\" height=\"400\" "
         "viewBox=\"0 0 480 400\" font-family=\"sans-serif\">\n";
  svg += "  <rect width=\"480\" height=\"400\" fill=\"white\"/>\n";
  std::string title = doc.metadata.instance;
  if (doc.metadata.base) title += " (" + *doc.metadata.base + ")";
  if (doc.metadata.alpha) title += " alpha=" + fixed6(*doc.metadata.alpha);
  svg += "  <text x=\"240\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">" + escape(title) +
         "</text>\n";
  for (std::size_t i = 0; i < C; ++i) {
    const auto& c = circles[i];
    svg += "  <circle cx=\"" + std::to_string(c.cx) + "\" cy=\"" + std::to_string(c.cy) +
           "\" r=\"" + std::to_string(c.r) + "\" fill=\"" + c.fill +
           "\" fill-opacity=\"0.25\" stroke=\"" + c.fill + "\" stroke-width=\"2\"/>\n";
  }
  // Generator names sit outside their circles.
  for (std::size_t i = 0; i < C; ++i) {
    const auto& c = circles[i];
    const std::string name =
        i < doc.metadata.generators.size() ? doc.metadata.generators[i] : "X" + std::to_string(i + 1);
    const int ny = (C == 3 && i == 2) ? c.cy + c.r + 22 : c.cy - c.r - 8;
    svg += "  <text x=\"" + std::to_string(c.cx) + "\" y=\"" + std::to_string(ny) +
           "\" text-anchor=\"middle\" font-size=\"14\" font-weight=\"bold\">" + escape(name) +
           "</text>\n";
  }
  for (const auto& cell : cells) {
    svg += "  <g class=\"atom\" data-subset=\"" + format_subset(cell.atom) + "\">\n";
    svg += "    <text x=\"" + std::to_string(cell.x) + "\" y=\"" + std::to_string(cell.y - 4) +
           "\" text-anchor=\"middle\" font-size=\"11\">" + format_subset(cell.atom) + "</text>\n";
    svg += "    <text x=\"" + std::to_string(cell.x) + "\" y=\"" + std::to_string(cell.y + 10) +
           "\" text-anchor=\"middle\" font-size=\"12\">" + fixed6(doc.atoms[cell.atom]) +
           "</text>\n";
    svg += "  </g>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace

std::string render_svg(const DiagramDocument& doc) {
  switch (doc.generators()) {
    case 2: return draw(doc, kTwoCircles, kTwoCells);
    case 3: return draw(doc, kThreeCircles, kThreeCells);
    default: throw DomainError("rendering supports n=2,3 only");
  }
}

}  // namespace infodiagram
