// Silhouettes of convex polyhedra seen from a point source, point
// silhouettes on a screen, and the silhouette span.

#ifndef MOSER_SILHOUETTE_H_
#define MOSER_SILHOUETTE_H_

#include <cstdint>
#include <optional>
#include <string>

#include "moser/exact.h"
#include "moser/parallel.h"
#include "moser/polyhedron.h"

namespace moser {

// A finite point, optionally displaced by eps * offset with eps > 0
// infinitesimal, or a source at infinity in a (perturbed) direction.
struct ViewPoint {
  bool at_infinity = false;
  RVec3 point;
  PerturbedRay offset{IVec3(), IVec3(), IVec3()};
  PerturbedRay direction;

  static ViewPoint finite(const RVec3& q);
  static ViewPoint perturbed(const RVec3& q, const PerturbedRay& offset);
  static ViewPoint infinite(const PerturbedRay& d);
  std::string str() const;
};

// Faces with <n, q> > c are visible. Returns, per face, +1 visible and -1
// hidden. Throws kInvalidViewpoint when q lies in P and kDegenerate when q
// is on a face plane.
std::vector<int> visibility(const Polyhedron& p, const ViewPoint& q);

// Vertices incident to a visible and to a hidden face.
int silhouette_count(const Polyhedron& p, const ViewPoint& q);

// { x : <normal, x> = offset }.
struct Plane {
  RVec3 normal;
  ExactRatio offset;
};

// Vertices of the central projection of P from q onto H, 0 when the shadow
// has no vertex (in particular when it fills H). H must strictly separate
// q from P: kInvalidScreen otherwise.
int point_silhouette(const Polyhedron& p, const RVec3& q, const Plane& h);

// Random screens -sum(l_i n_i) over the faces visible from q, all of them
// separating. The count can depend on the screen when P is unbounded.
struct ScreenSample {
  int screens = 0;
  int min = 0;
  int max = 0;
  bool depends_on_screen() const { return min != max; }
};

ScreenSample sample_screens(const Polyhedron& p, const RVec3& q, int screens, uint64_t seed);

// A concrete rational point with the visibility pattern of q, or nothing
// if none was found within the refinement budget.
std::optional<RVec3> realize(const Polyhedron& p, const ViewPoint& q);

struct SilhouetteSpan {
  int count = 0;
  ViewPoint witness;
  int finite_best = 0;    // best over finite candidates
  int infinite_best = 0;  // best over sources at infinity
  std::optional<RVec3> finite_witness;  // a concrete point attaining `count`
  int candidates = 0;
  bool attained() const { return finite_witness.has_value(); }
};

// Candidates: every cell around each point where three or more face planes
// meet, every cell of the normal arrangement at infinity, and points beyond
// the bounding box.
SilhouetteSpan silhouette_span(const Polyhedron& p, Exec exec = Exec::kParallel);

}  // namespace moser

#endif  // MOSER_SILHOUETTE_H_
