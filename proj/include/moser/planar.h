// Convex subdivisions of the plane and line stabbing.
//
// Regions are stored in homogeneous coordinates: a finite vertex (x, y)
// is a positive multiple of (x, y, 1) and a direction at infinity (dx, dy)
// is (dx, dy, 0). A region is then a convex cone in the closed upper
// half-space, and unbounded regions need no special casing.

#ifndef MOSER_PLANAR_H_
#define MOSER_PLANAR_H_

#include <cstdint>
#include <string>
#include <vector>

#include "moser/exact.h"
#include "moser/parallel.h"

namespace moser {

struct PlanarRegion {
  std::vector<IVec3> cycle;  // counter-clockwise, entries with W = 0 are directions
  bool exterior = false;     // complement of the bounded polygon `cycle`
  std::string label;

  // Cycle of finite points (x, y) or rays: the first finite vertex follows
  // the last direction in counter-clockwise order.
  static PlanarRegion from_points(const std::vector<RVec2>& points,
                                  const std::vector<RVec2>& rays = {}, bool exterior = false);
  static PlanarRegion from_homogeneous(std::vector<IVec3> cycle, bool exterior = false);

  bool bounded() const;
  // Finite vertices, starting after the directions at infinity.
  std::vector<RVec2> finite_cycle() const;
  // {ray at finite_cycle().front(), ray at finite_cycle().back()}, or empty.
  std::vector<RVec2> rays() const;

  bool contains(const IVec3& p) const;       // closed
  bool contains_open(const IVec3& p) const;  // interior
  bool is_convex() const;
};

struct PlanarSubdivision {
  std::vector<PlanarRegion> regions;

  // Distinct finite vertices (homogeneous, primitive), sorted.
  std::vector<IVec3> vertices() const;
  // Distinct directions at infinity, sorted.
  std::vector<IVec3> directions() const;
  // Distinct undirected boundary arcs.
  std::vector<std::pair<IVec3, IVec3>> edges() const;
  bool check_convex() const;
  bool adjacency_connected() const;
};

// { (x, y) : a x + b y = c } with an optional two-level perturbation. The
// line is the zero set of f0 + e*f1 + e^2*f2 applied to homogeneous points,
// e > 0 infinitesimal; f0 = (a, b, -c).
struct PlanarLine {
  IVec3 f0, f1, f2;

  PlanarLine() = default;
  explicit PlanarLine(IVec3 base, IVec3 l1 = {}, IVec3 l2 = {});
  static PlanarLine from_coefficients(const ExactRatio& a, const ExactRatio& b,
                                      const ExactRatio& c);
  static PlanarLine through(const RVec2& p, const RVec2& q);

  ExactRatio a() const { return ExactRatio(f0[0]); }
  ExactRatio b() const { return ExactRatio(f0[1]); }
  ExactRatio c() const { return ExactRatio(BigInt(-f0[2])); }
  bool perturbed() const { return !f1.is_zero() || !f2.is_zero(); }
  int side(const IVec3& h) const { return lex_sign(f0, f1, f2, h); }
  std::string str() const;
};

bool region_meets_line(const PlanarRegion& r, const PlanarLine& l);
int stab_count(const PlanarSubdivision& s, const PlanarLine& l);
// Stab count over an arbitrary collection of regions, without the
// special-position rule (returns 0 when nothing is crossed).
int regions_crossed(const std::vector<PlanarRegion>& regions, const PlanarLine& l);

// Candidate lines: perturbed lines through vertex pairs and through a
// vertex parallel to each direction at infinity.
std::vector<PlanarLine> candidate_lines(const std::vector<IVec3>& vertices,
                                        const std::vector<IVec3>& directions);

struct LineSpanResult {
  int count = 0;
  PlanarLine witness;
};

LineSpanResult line_span(const PlanarSubdivision& s, Exec exec = Exec::kParallel);
// Maximum of regions_crossed over the candidate lines of the given regions.
LineSpanResult max_regions_crossed(const std::vector<PlanarRegion>& regions,
                                   Exec exec = Exec::kParallel);

// A direction (1, s) not parallel to any difference of two vertices.
RVec2 generic_direction(const PlanarSubdivision& s);

// Homogeneous clipping of a region cone by { X : <h, X> >= 0 }. Returns
// the empty cycle when the intersection has empty interior.
std::vector<IVec3> clip_cycle(const std::vector<IVec3>& cycle, const IVec3& h);
// Removes duplicates and straight vertices; keeps W >= 0 entries primitive.
std::vector<IVec3> normalize_cycle(std::vector<IVec3> cycle);
// Homogeneous cycle of the whole plane.
std::vector<IVec3> whole_plane_cycle();
IVec3 canonical_homogeneous(const IVec3& h);

struct PlanarAudit {
  int samples = 0;
  int uncovered = 0;
  int multiply_open = 0;
  int resampled = 0;
  bool ok() const { return uncovered == 0 && multiply_open == 0; }
};

// Random rational points in a box around the vertices.
PlanarAudit audit_planar(const PlanarSubdivision& s, int samples, uint64_t seed);

}  // namespace moser

#endif  // MOSER_PLANAR_H_
