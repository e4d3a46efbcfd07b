// Deterministic SVG output. Coordinates are the only decimals in the
// library: rationals are printed with 12 significant digits.

#ifndef MOSER_SVG_H_
#define MOSER_SVG_H_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "moser/gnomonic.h"
#include "moser/planar.h"
#include "moser/shadow.h"
#include "moser/spherical.h"

namespace moser {

struct SvgOptions {
  int width = 800;
  int height = 800;
  enum class View { kGnomonic, kOrthographic } view = View::kGnomonic;
  RationalRotation rotation;        // applied before a spherical view
  std::vector<PlanarLine> lines;    // overlays, e.g. a span witness
  // World window (xmin, ymin, xmax, ymax); default fits the vertices.
  std::optional<std::array<ExactRatio, 4>> window;
};

// 12 significant digits, "-0" printed as "0".
std::string svg_number(double v);

std::string render_svg(const PlanarSubdivision& s, const SvgOptions& opt = {});
std::string render_svg(const SphericalSubdivision& d, const SvgOptions& opt = {});
std::string render_svg(const ShadowPolygon& p, const SvgOptions& opt = {});

}  // namespace moser

#endif  // MOSER_SVG_H_
