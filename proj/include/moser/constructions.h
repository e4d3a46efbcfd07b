// The ring subdivision E_n, its spherical lift D_n and the unbounded
// polyhedron P_n cut out by tangent planes at the vertices of D_n.

#ifndef MOSER_CONSTRUCTIONS_H_
#define MOSER_CONSTRUCTIONS_H_

#include <string>
#include <vector>

#include "moser/exact.h"
#include "moser/parallel.h"
#include "moser/planar.h"
#include "moser/polyhedron.h"
#include "moser/spherical.h"

namespace moser {

struct RingParams {
  int n = 0;
  ExactRatio r;          // inner radius, (k^2 - 1) / (2k)
  ExactRatio R;          // outer radius, (K^2 - 1) / (2K)
  ExactRatio k_inner;
  ExactRatio k_outer;
  int shrink_steps = 0;  // halvings of K - k
  std::vector<RVec2> inner, outer;  // n - 1 points each, counter-clockwise
};

struct RingSubdivision {
  // Ring regions 0 .. n-2, then the interior region, then the exterior.
  PlanarSubdivision subdivision;
  RingParams params;
  int ring_span = 0;  // most ring regions met by one line
};

// Rational point on the circle of radius r near angle theta.
RVec2 circle_point(double theta, const ExactRatio& r);

RingSubdivision gen_ring_subdivision(int n, int max_shrink = 40);

// Partial subdivision of n regions; support is the lifted outer polygon.
SphericalSubdivision lift_to_sphere(const RingSubdivision& e);

// Half-spaces <w, x> <= |w| for the vertex rays w of D_n, |w| rational.
std::vector<HalfSpace> pn_halfspaces(const SphericalSubdivision& d);

// Checks both concurrency claims exactly and throws kConstruction on a
// failure.
Polyhedron build_pn(const SphericalSubdivision& d);

struct NamedCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Tangent planes at the interior region's vertices share one point; so do
// the four planes of every ring region.
std::vector<NamedCheck> concurrency_claims(const SphericalSubdivision& d);

struct Theorem82Report {
  int n = 0;
  SizeMeasures size;
  int shadow_number = 0;
  int great_circle_span = 0;
  int line_span = 0;
  int ring_span = 0;
  std::vector<NamedCheck> checks;
  bool pass() const;
};

Theorem82Report verify_theorem_82(int n, Exec exec = Exec::kParallel);

}  // namespace moser

#endif  // MOSER_CONSTRUCTIONS_H_
