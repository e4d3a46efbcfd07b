// Convex 3-polyhedra, bounded or unbounded, with their face lattice.

#ifndef MOSER_POLYHEDRON_H_
#define MOSER_POLYHEDRON_H_

#include <optional>
#include <vector>

#include "moser/exact.h"

namespace moser {

// { x : <normal, x> <= offset }.
struct HalfSpace {
  RVec3 normal;
  ExactRatio offset;
};

struct Edge {
  int v0 = -1;
  int v1 = -1;      // -1 for an unbounded edge v0 + t*direction, t >= 0
  Ray direction;    // v0 -> v1 for bounded edges
  int f0 = -1;
  int f1 = -1;
  bool bounded() const { return v1 >= 0; }
};

struct Face {
  Ray normal;                   // outward
  ExactRatio offset;            // <normal, x> <= offset on P
  IVec3 row;                    // integer row with <row, x> <= row_offset,
  BigInt row_offset;            // gcd of all four entries is 1
  std::vector<int> cycle;       // counter-clockwise seen from outside
  std::optional<Ray> ray_in;    // unbounded faces: boundary comes in along
  std::optional<Ray> ray_out;   // cycle.front()+t*ray_in, leaves along
  std::vector<int> edges;       // cycle.back()+t*ray_out
  bool bounded() const { return !ray_in.has_value(); }
};

struct SizeMeasures {
  int v = 0;
  int e = 0;
  int f = 0;
  bool bounded = true;
};

class Polyhedron {
 public:
  // Convex hull of a finite point set; the points must affinely span R^3.
  static Polyhedron from_vrep(const std::vector<RVec3>& points);
  static Polyhedron from_hrep(const std::vector<HalfSpace>& halfspaces);

  const std::vector<RVec3>& vertices() const { return vertices_; }
  const std::vector<Ray>& rays() const { return rays_; }
  const std::vector<Face>& faces() const { return faces_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool bounded() const { return rays_.empty(); }

  // Vertex i as (X, Y, Z, D) with D > 0 and vertex = (X, Y, Z) / D.
  const std::array<BigInt, 4>& vertex_h(int i) const { return vertex_h_[i]; }
  // Faces containing vertex i, in no particular order.
  const std::vector<int>& vertex_faces(int i) const { return vertex_faces_[i]; }
  // Faces around vertex i ordered counter-clockwise seen from outside.
  std::vector<int> vertex_face_cycle(int i) const;

  std::vector<HalfSpace> facet_halfspaces() const;
  SizeMeasures size_measures() const;

  // Euler relation and the bounded-case edge bounds.
  bool check_euler() const;
  bool check_size_bounds() const;

 private:
  std::vector<RVec3> vertices_;
  std::vector<std::array<BigInt, 4>> vertex_h_;
  std::vector<std::vector<int>> vertex_faces_;
  std::vector<Ray> rays_;
  std::vector<Face> faces_;
  std::vector<Edge> edges_;
};

std::vector<Ray> recession_cone(const Polyhedron& p);
SizeMeasures size_measures(const Polyhedron& p);

// Applies x -> M x / s + t where M is an integer matrix (rows) and s > 0.
// Used by invariance tests with rational rotations.
std::vector<RVec3> transform_points(const std::vector<RVec3>& pts,
                                    const std::array<IVec3, 3>& m, const BigInt& s,
                                    const RVec3& t);

}  // namespace moser

#endif  // MOSER_POLYHEDRON_H_
