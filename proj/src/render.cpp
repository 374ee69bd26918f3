#include "phl/render.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace phl {

int render_radius(const PerverseHodgeCube& cube, int d) {
  const int n = static_cast<int>(cube.n());
  int r = std::max(0, std::min(d, 2 * n - d));
  for (const auto& [key, h] : cube.entries()) {
    const auto [dd, k, i] = key;
    if (dd == d) r = std::max({r, std::abs(i), std::abs(k)});
  }
  return r;
}

namespace {

int last_degree(const PerverseHodgeCube& cube) {
  int top = 2 * static_cast<int>(cube.n());
  for (const auto& [key, h] : cube.entries()) top = std::max(top, std::get<0>(key));
  return top;
}

}  // namespace

std::string render_ascii(const PerverseHodgeCube& cube) {
  if (cube.empty()) return "(empty)\n";
  std::size_t width = 1;
  for (const auto& [key, h] : cube.entries()) width = std::max(width, std::to_string(h).size());

  std::ostringstream out;
  for (int d = 0; d <= last_degree(cube); ++d) {
    if (d) out << '\n';
    out << "d = " << d << '\n';
    const int r = render_radius(cube, d);
    for (int k = r; k >= -r; --k) {
      std::string line;
      for (int i = -r; i <= r; ++i) {
        const std::size_t h = cube.at(i, k, d);
        const std::string cell = h ? std::to_string(h) : "·";
        const std::size_t shown = h ? cell.size() : 1;  // "·" is one column, two bytes
        if (i > -r) line += ' ';
        line.append(width - shown, ' ');
        line += cell;
      }
      out << line << '\n';
    }
  }
  return out.str();
}

std::string render_tex(const PerverseHodgeCube& cube) {
  std::ostringstream out;
  out << "\\documentclass[tikz]{standalone}\n"
      << "\\begin{document}\n"
      << "\\begin{tikzpicture}[x=0.8cm,y=0.8cm]\n";
  if (cube.empty()) {
    out << "\\node at (0,0) {(empty)};\n";
  } else {
    int shift = 0;
    for (int d = 0; d <= last_degree(cube); ++d) {
      const int r = render_radius(cube, d);
      shift += r;
      out << "\\begin{scope}[xshift=" << shift * 8 << "mm]\n";
      out << "\\node[anchor=south] at (0," << r + 1 << ") {$d=" << d << "$};\n";
      for (int k = r; k >= -r; --k)
        for (int i = -r; i <= r; ++i) {
          const std::size_t h = cube.at(i, k, d);
          if (h)
            out << "\\node at (" << i << "," << k << ") {$" << h << "$};\n";
          else
            out << "\\node[gray] at (" << i << "," << k << ") {$\\cdot$};\n";
        }
      out << "\\end{scope}\n";
      shift += r + 2;
    }
  }
  out << "\\end{tikzpicture}\n"
      << "\\end{document}\n";
  return out.str();
}

}  // namespace phl
