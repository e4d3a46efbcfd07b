// Planar subdivision generators used as test corpus.

#ifndef MOSER_GENERATORS_H_
#define MOSER_GENERATORS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "moser/planar.h"
#include "moser/polyhedron.h"

namespace moser {

// Cells of distinct random integer sites in [0, 2^20)^2, one per site.
PlanarSubdivision voronoi_subdivision(int n, uint64_t seed);
// Voronoi cells of given sites.
PlanarSubdivision voronoi_of(const std::vector<RVec2>& sites);

// Cells of m random lines in general position.
PlanarSubdivision line_arrangement(int m, uint64_t seed);
PlanarSubdivision arrangement_of(const std::vector<IVec3>& lines);

// Four quadrants of the coordinate axes.
PlanarSubdivision quadrants();
// The plane as a single region.
PlanarSubdivision trivial_subdivision();

// kind: "voronoi" (param = sites), "line-arrangement" (param = lines),
// "ring" (param = n).
PlanarSubdivision generate_subdivision(const std::string& kind, int param, uint64_t seed);

// Bounded polytope with exactly `vertices` extreme points, integer
// coordinates near the sphere of radius 1000.
Polyhedron random_polytope(int vertices, uint64_t seed);

}  // namespace moser

#endif  // MOSER_GENERATORS_H_
