#pragma once

#include <string>

#include "phl/perverse.hpp"

namespace phl {

/// Half-width of the square drawn for slice d: min(d, 2n - d), widened to
/// cover any entry lying outside it.
int render_radius(const PerverseHodgeCube& cube, int d);

/// One block per slice d = 0..2n headed "d = <d>", rows k from +r down to
/// -r, columns i from -r to +r, zeros shown as "·", counts right-aligned.
/// A cube without entries renders as "(empty)\n".
std::string render_ascii(const PerverseHodgeCube& cube);

/// Standalone LaTeX document with one TikZ scope per slice; see README.
std::string render_tex(const PerverseHodgeCube& cube);

}  // namespace phl
