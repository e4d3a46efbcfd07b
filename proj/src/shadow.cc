#include "moser/shadow.h"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>

namespace moser {

std::vector<int> boundary_edges(const Polyhedron& p, const PerturbedRay& u) {
  const auto& faces = p.faces();
  std::vector<int> sign(faces.size());
  for (size_t f = 0; f < faces.size(); ++f) {
    sign[f] = sign_dot(u, faces[f].normal.v());
    if (sign[f] == 0) {
      throw Error(ErrorKind::kDegenerate, "direction " + u.str() +
                                              " is orthogonal to the normal of face " +
                                              std::to_string(f));
    }
  }
  std::vector<int> out;
  const auto& edges = p.edges();
  for (size_t e = 0; e < edges.size(); ++e) {
    if (sign[edges[e].f0] * sign[edges[e].f1] < 0) out.push_back(static_cast<int>(e));
  }
  return out;
}

namespace {

int count_from_edges(const Polyhedron& p, size_t edges) {
  if (p.bounded()) return static_cast<int>(edges);
  return edges == 0 ? 0 : static_cast<int>(edges) - 1;
}

}  // namespace

int shadow_count(const Polyhedron& p, const PerturbedRay& u) {
  return count_from_edges(p, boundary_edges(p, u).size());
}

std::pair<IVec3, IVec3> orthogonal_basis(const Ray& u) {
  int axis = 0;
  for (int i = 1; i < 3; ++i) {
    if (mpz_cmpabs(u[i].get_mpz_t(), u[axis].get_mpz_t()) < 0) axis = i;
  }
  IVec3 e;
  e[axis] = 1;
  IVec3 b1 = cross(u.v(), e).primitive();
  IVec3 b2 = cross(u.v(), b1).primitive();
  return {b1, b2};
}

ShadowPolygon shadow_polygon(const Polyhedron& p, const Ray& u) {
  std::vector<int> be = boundary_edges(p, u);
  ShadowPolygon out;
  if (be.empty()) {
    if (p.bounded()) throw Error(ErrorKind::kInvariantViolation, "bounded shadow without edges");
    out.fills_plane = true;
    return out;
  }
  auto [b1, b2] = orthogonal_basis(u);
  RVec3 r1 = b1.to_rvec(), r2 = b2.to_rvec();
  auto proj = [&](const RVec3& x) { return RVec2{dot(x, r1), dot(x, r2)}; };

  std::map<int, std::vector<int>> adj;
  std::vector<std::pair<int, IVec3>> ends;
  for (int ei : be) {
    const Edge& e = p.edges()[ei];
    if (e.bounded()) {
      adj[e.v0].push_back(e.v1);
      adj[e.v1].push_back(e.v0);
    } else {
      adj[e.v0];
      ends.emplace_back(e.v0, e.direction.v());
    }
  }
  if (!(ends.empty() || ends.size() == 2)) {
    throw Error(ErrorKind::kInvariantViolation, "shadow boundary is not a single chain");
  }
  std::vector<int> chain;
  int start = ends.empty() ? adj.begin()->first : ends[0].first;
  int prev = -1, cur = start;
  while (true) {
    chain.push_back(cur);
    int next = -1;
    for (int nb : adj[cur]) {
      if (nb != prev) { next = nb; break; }
    }
    if (next < 0 || next == start) break;
    prev = cur;
    cur = next;
    if (chain.size() > adj.size()) break;
  }
  if (chain.size() != adj.size()) {
    throw Error(ErrorKind::kInvariantViolation, "shadow boundary is disconnected");
  }
  for (int v : chain) out.cycle.push_back(proj(p.vertices()[v]));
  if (ends.empty()) {
    ExactRatio area(0);
    for (size_t i = 0; i < out.cycle.size(); ++i) {
      area += cross(out.cycle[i], out.cycle[(i + 1) % out.cycle.size()]);
    }
    if (area.sign() < 0) std::reverse(out.cycle.begin(), out.cycle.end());
    return out;
  }
  IVec3 din = ends[0].first == chain.front() ? ends[0].second : ends[1].second;
  IVec3 dout = ends[0].first == chain.front() ? ends[1].second : ends[0].second;
  if (chain.size() == 1) {
    // Both unbounded edges start at the same vertex; orient by the turn.
    din = ends[0].second;
    dout = ends[1].second;
  }
  RVec2 pin = proj(din.to_rvec()), pout = proj(dout.to_rvec());
  RVec2 next_dir = out.cycle.size() >= 2 ? out.cycle[1] - out.cycle[0] : pout;
  RVec2 back{-pin.x, -pin.y};
  if (cross(back, next_dir).sign() < 0) {
    std::reverse(out.cycle.begin(), out.cycle.end());
    std::swap(pin, pout);
  }
  out.rays = {pin, pout};
  return out;
}

std::vector<PerturbedRay> arrangement_samples(const std::vector<IVec3>& normals, bool both_signs) {
  std::vector<IVec3> lines;
  {
    std::set<IVec3> seen;
    for (const IVec3& n : normals) {
      if (n.is_zero()) continue;
      IVec3 k = n.line_key();
      if (seen.insert(k).second) lines.push_back(k);
    }
    std::sort(lines.begin(), lines.end());
  }
  std::map<IVec3, std::set<int>> circles_at;
  for (size_t i = 0; i < lines.size(); ++i) {
    for (size_t j = i + 1; j < lines.size(); ++j) {
      IVec3 c = cross(lines[i], lines[j]);
      if (c.is_zero()) continue;
      auto& s = circles_at[c.line_key()];
      s.insert(static_cast<int>(i));
      s.insert(static_cast<int>(j));
    }
  }
  std::vector<PerturbedRay> out;
  for (const auto& [key, circles] : circles_at) {
    for (int sgnb : {1, -1}) {
      if (sgnb < 0 && !both_signs) continue;
      IVec3 b = sgnb > 0 ? key : IVec3(-key);
      for (int ci : circles) {
        IVec3 t = cross(b, lines[ci]).primitive();
        for (const IVec3& s : {t, IVec3(-t)}) {
          out.emplace_back(b, s, cross(b, s).primitive());
        }
      }
    }
  }
  return out;
}

namespace {

std::vector<IVec3> face_normals(const Polyhedron& p) {
  std::vector<IVec3> n;
  for (const Face& f : p.faces()) n.push_back(f.normal.v());
  return n;
}

}  // namespace

std::vector<PerturbedRay> candidate_directions(const Polyhedron& p) {
  std::vector<PerturbedRay> c = arrangement_samples(face_normals(p), true);
  if (c.empty()) throw Error(ErrorKind::kInvariantViolation, "all face normals are parallel");
  return c;
}

DirectionWitness shadow_number(const Polyhedron& p, Exec exec) {
  std::vector<PerturbedRay> cand = arrangement_samples(face_normals(p), false);
  if (cand.empty()) throw Error(ErrorKind::kInvariantViolation, "all face normals are parallel");
  ArgMax best = argmax(cand.size(), exec, [&](size_t i) -> int64_t {
    return shadow_count(p, cand[i]);
  });
  DirectionWitness w;
  w.direction = cand[best.index];
  w.count = static_cast<int>(best.value);
  w.boundary_edges = boundary_edges(p, w.direction);
  return w;
}

int shadow_number_sampled(const Polyhedron& p, int trials, uint64_t seed) {
  if (trials < 1) throw Error(ErrorKind::kInvalidArgument, "trials must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> d(-1000000, 1000000);
  int best = -1;
  for (int t = 0; t < trials;) {
    IVec3 v(d(rng), d(rng), d(rng));
    if (v.is_zero()) continue;
    try {
      best = std::max(best, shadow_count(p, Ray(v)));
      ++t;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kDegenerate) throw;
    }
  }
  return best;
}

}  // namespace moser
