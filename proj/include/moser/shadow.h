// Orthogonal shadows of polyhedra and the shadow number.

#ifndef MOSER_SHADOW_H_
#define MOSER_SHADOW_H_

#include <cstdint>
#include <utility>
#include <vector>

#include "moser/exact.h"
#include "moser/parallel.h"
#include "moser/polyhedron.h"

namespace moser {

struct ShadowPolygon {
  std::vector<RVec2> cycle;  // counter-clockwise
  std::vector<RVec2> rays;   // empty, or {in, out} at cycle.front() / cycle.back()
  bool fills_plane = false;
};

struct DirectionWitness {
  PerturbedRay direction;
  int count = 0;
  std::vector<int> boundary_edges;
};

// Edges whose two face normals take opposite signs against u. Throws
// kDegenerate when u is orthogonal to a face normal.
std::vector<int> boundary_edges(const Polyhedron& p, const PerturbedRay& u);

// Number of shadow vertices in direction u.
int shadow_count(const Polyhedron& p, const PerturbedRay& u);

// Rational basis (b1, b2) of the plane orthogonal to u.
std::pair<IVec3, IVec3> orthogonal_basis(const Ray& u);

ShadowPolygon shadow_polygon(const Polyhedron& p, const Ray& u);

// Samples every cell of the arrangement of great circles { x : <x, n> = 0 }
// that touches an arrangement vertex. Around each vertex b = +-(n_i x n_j)
// one perturbed ray is emitted per sector. With both_signs false only the
// base with positive leading coordinate is used.
std::vector<PerturbedRay> arrangement_samples(const std::vector<IVec3>& normals, bool both_signs);

std::vector<PerturbedRay> candidate_directions(const Polyhedron& p);

DirectionWitness shadow_number(const Polyhedron& p, Exec exec = Exec::kParallel);

int shadow_number_sampled(const Polyhedron& p, int trials, uint64_t seed);

}  // namespace moser

#endif  // MOSER_SHADOW_H_
