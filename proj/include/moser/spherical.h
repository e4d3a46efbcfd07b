// Convex spherical polygons, spherical subdivisions and great-circle spans.

#ifndef MOSER_SPHERICAL_H_
#define MOSER_SPHERICAL_H_

#include <optional>
#include <string>
#include <vector>

#include "moser/exact.h"
#include "moser/parallel.h"
#include "moser/polyhedron.h"

namespace moser {

class SphericalPolygon {
 public:
  SphericalPolygon() = default;

  // The cycle is reoriented to be counter-clockwise seen from outside the
  // sphere. When every vertex lies on one great circle the polygon is the
  // closed hemisphere on the side of `pole`, which is then required.
  static SphericalPolygon from_cycle(std::vector<Ray> cycle, std::string label = {},
                                     std::optional<Ray> pole = std::nullopt);

  const std::vector<Ray>& cycle() const { return cycle_; }
  // Normals n with <n, x> >= 0 on the polygon.
  const std::vector<IVec3>& hemispheres() const { return hemispheres_; }
  // Vectors whose positive hull is the polygon's cone.
  const std::vector<IVec3>& generators() const { return generators_; }
  const std::optional<Ray>& pole() const { return pole_; }
  const std::string& label() const { return label_; }
  void set_label(std::string l) { label_ = std::move(l); }

  bool contains(const IVec3& x) const;       // closed
  bool contains_open(const IVec3& x) const;  // interior
  // Whether the great circle with normal u meets the interior.
  bool meets_circle(const PerturbedRay& u) const;
  // Strictly inside an open hemisphere.
  bool pointed() const { return !pole_.has_value(); }
  // Exact convexity check of the stored cycle.
  bool is_convex() const;

 private:
  std::vector<Ray> cycle_;
  std::vector<IVec3> hemispheres_;
  std::vector<IVec3> generators_;
  std::optional<Ray> pole_;
  std::string label_;
};

struct SphericalSubdivision {
  enum class Kind { kFull, kPartial };
  Kind kind = Kind::kFull;
  std::vector<SphericalPolygon> regions;
  std::optional<SphericalPolygon> support;

  // Distinct cycle vertices over all regions, sorted.
  std::vector<Ray> vertices() const;
  // Distinct undirected arcs between consecutive cycle vertices.
  std::vector<std::pair<Ray, Ray>> edges() const;
};

SphericalSubdivision spherical_image(const Polyhedron& p);

// sigma(C) for the cone C spanned by the generators.
SphericalPolygon support_of_cone(const std::vector<Ray>& generators);

int circle_span(const SphericalSubdivision& d, const PerturbedRay& u);

struct CircleSpanResult {
  int count = 0;
  PerturbedRay witness;
};

CircleSpanResult great_circle_span(const SphericalSubdivision& d, Exec exec = Exec::kParallel);

// Arcs of the completed subdivision cut by the circle with normal u;
// u must not pass through a subdivision vertex.
int completed_edge_crossings(const SphericalSubdivision& d, const PerturbedRay& u);

struct CoverageAudit {
  int samples = 0;
  int uncovered = 0;       // inside the support but in no closed region
  int multiply_open = 0;   // in the interior of two or more regions
  int outside_support = 0;
  int leaked = 0;          // outside the support but inside some region
  int resampled = 0;       // on a region boundary
  bool ok() const { return uncovered == 0 && multiply_open == 0 && leaked == 0; }
};

CoverageAudit audit_coverage(const SphericalSubdivision& d, int samples, uint64_t seed);

// Orders vectors counter-clockwise around an axis (seen from its tip).
std::vector<IVec3> sort_around(const IVec3& axis, std::vector<IVec3> v);

}  // namespace moser

#endif  // MOSER_SPHERICAL_H_
