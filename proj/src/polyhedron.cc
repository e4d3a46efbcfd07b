#include "moser/polyhedron.h"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace moser {

namespace {

struct Row {
  IVec3 a;
  BigInt d;
};

BigInt lcm_den(std::initializer_list<const ExactRatio*> xs) {
  BigInt l = 1;
  for (const ExactRatio* x : xs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x->den().get_mpz_t());
  return l;
}

Row make_row(const HalfSpace& h) {
  if (h.normal.is_zero()) throw Error(ErrorKind::kInvalidArgument, "half-space with zero normal");
  BigInt l = lcm_den({&h.normal.x, &h.normal.y, &h.normal.z, &h.offset});
  auto scale = [&](const ExactRatio& r) { return BigInt(r.num() * (l / r.den())); };
  Row row{IVec3(scale(h.normal.x), scale(h.normal.y), scale(h.normal.z)), scale(h.offset)};
  BigInt g;
  mpz_gcd(g.get_mpz_t(), row.a[0].get_mpz_t(), row.a[1].get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), row.a[2].get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), row.d.get_mpz_t());
  if (g != 1) {
    for (int i = 0; i < 3; ++i) row.a[i] /= g;
    row.d /= g;
  }
  return row;
}

using HPoint = std::array<BigInt, 4>;  // (X, Y, Z, D), D > 0

HPoint normalize_hpoint(HPoint p) {
  if (sgn(p[3]) < 0) {
    for (auto& c : p) c = -c;
  }
  BigInt g = p[3];
  for (int i = 0; i < 3; ++i) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), p[i].get_mpz_t());
  if (g != 1) {
    for (auto& c : p) c /= g;
  }
  return p;
}

// Sign of <a, x> - d for x = P/D.
int row_slack_sign(const Row& r, const HPoint& p) {
  BigInt s = r.a[0] * p[0];
  mpz_addmul(s.get_mpz_t(), r.a[1].get_mpz_t(), p[1].get_mpz_t());
  mpz_addmul(s.get_mpz_t(), r.a[2].get_mpz_t(), p[2].get_mpz_t());
  mpz_submul(s.get_mpz_t(), r.d.get_mpz_t(), p[3].get_mpz_t());
  return sgn(s);
}

IVec3 hp_xyz(const HPoint& p) { return IVec3(p[0], p[1], p[2]); }

int normals_rank(const std::vector<Row>& rows, IVec3* null_dir) {
  int first = -1;
  for (size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].a.is_zero()) { first = static_cast<int>(i); break; }
  }
  if (first < 0) return 0;
  int second = -1;
  for (size_t i = 0; i < rows.size(); ++i) {
    if (!cross(rows[first].a, rows[i].a).is_zero()) { second = static_cast<int>(i); break; }
  }
  if (second < 0) {
    // Rank 1: any direction orthogonal to the common normal.
    const IVec3& a = rows[first].a;
    IVec3 e = sgn(a[0]) != 0 ? IVec3(0, 1, 0) : IVec3(1, 0, 0);
    if (null_dir) *null_dir = cross(a, e);
    return 1;
  }
  IVec3 c = cross(rows[first].a, rows[second].a);
  for (const Row& r : rows) {
    if (sgn(dot(r.a, c)) != 0) return 3;
  }
  if (null_dir) *null_dir = c;
  return 2;
}

struct VertexEnum {
  std::vector<HPoint> points;
  std::vector<std::vector<int>> tight;
};

VertexEnum enumerate_vertices(const std::vector<Row>& rows) {
  VertexEnum out;
  std::map<HPoint, int> index;
  const int m = static_cast<int>(rows.size());
  int last_violator = 0;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      IVec3 cij = cross(rows[i].a, rows[j].a);
      if (cij.is_zero()) continue;
      for (int k = j + 1; k < m; ++k) {
        BigInt det = dot(rows[k].a, cij);
        if (sgn(det) == 0) continue;
        IVec3 x = cross(rows[j].a, rows[k].a) * rows[i].d +
                  cross(rows[k].a, rows[i].a) * rows[j].d + cij * rows[k].d;
        HPoint p{x[0], x[1], x[2], det};
        p = normalize_hpoint(p);
        if (row_slack_sign(rows[last_violator], p) > 0) continue;
        bool feasible = true;
        for (int l = 0; l < m; ++l) {
          if (row_slack_sign(rows[l], p) > 0) {
            last_violator = l;
            feasible = false;
            break;
          }
        }
        if (!feasible) continue;
        if (index.count(p)) continue;
        index.emplace(p, static_cast<int>(out.points.size()));
        std::vector<int> t;
        for (int l = 0; l < m; ++l) {
          if (row_slack_sign(rows[l], p) == 0) t.push_back(l);
        }
        out.points.push_back(p);
        out.tight.push_back(std::move(t));
      }
    }
  }
  return out;
}

RVec3 to_rvec(const HPoint& p) {
  return {ExactRatio(p[0], p[3]), ExactRatio(p[1], p[3]), ExactRatio(p[2], p[3])};
}

// Extreme rays of { d : <a_l, d> <= 0 for l in idx }, assumed pointed.
std::vector<IVec3> extreme_rays(const std::vector<Row>& rows, const std::vector<int>& idx) {
  std::set<IVec3> seen;
  std::vector<IVec3> out;
  for (size_t i = 0; i < idx.size(); ++i) {
    for (size_t j = i + 1; j < idx.size(); ++j) {
      IVec3 c = cross(rows[idx[i]].a, rows[idx[j]].a);
      if (c.is_zero()) continue;
      c = c.primitive();
      for (const IVec3& d : {c, IVec3(-c)}) {
        if (seen.count(d)) continue;
        bool ok = true;
        for (int l : idx) {
          if (sgn(dot(rows[l].a, d)) > 0) { ok = false; break; }
        }
        if (ok) {
          seen.insert(d);
          out.push_back(d);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Polyhedron Polyhedron::from_hrep(const std::vector<HalfSpace>& halfspaces) {
  std::vector<Row> rows;
  for (const HalfSpace& h : halfspaces) {
    Row r = make_row(h);
    bool dup = false;
    for (const Row& o : rows) {
      if (o.a == r.a && o.d == r.d) { dup = true; break; }
    }
    if (!dup) rows.push_back(r);
  }
  if (rows.empty()) throw Error(ErrorKind::kUnsupportedShape, "no half-spaces: the result is R^3");

  IVec3 null_dir;
  int rank = normals_rank(rows, &null_dir);
  if (rank < 3) {
    // Decide feasibility after cutting the lineality space down to a point.
    std::vector<Row> cut = rows;
    IVec3 n1 = null_dir;
    cut.push_back({n1, BigInt(0)});
    cut.push_back({-n1, BigInt(0)});
    if (rank == 1) {
      IVec3 n2 = cross(rows[0].a, n1);
      for (const Row& r : rows) {
        if (!r.a.is_zero()) { n2 = cross(r.a, n1); break; }
      }
      cut.push_back({n2, BigInt(0)});
      cut.push_back({-n2, BigInt(0)});
    }
    if (!enumerate_vertices(cut).points.empty()) {
      throw Error(ErrorKind::kUnsupportedShape,
                  "polyhedron contains a line (normals have rank " + std::to_string(rank) + ")");
    }
    throw Error(ErrorKind::kInfeasible, "half-space system is infeasible");
  }

  VertexEnum ve = enumerate_vertices(rows);
  if (ve.points.empty()) throw Error(ErrorKind::kInfeasible, "half-space system is infeasible");

  std::vector<int> all(rows.size());
  for (size_t i = 0; i < rows.size(); ++i) all[i] = static_cast<int>(i);
  std::vector<IVec3> rec = extreme_rays(rows, all);

  // Full-dimensionality: no row may hold with equality on all of P.
  for (size_t l = 0; l < rows.size(); ++l) {
    bool implicit = true;
    for (const auto& t : ve.tight) {
      if (!std::binary_search(t.begin(), t.end(), static_cast<int>(l))) { implicit = false; break; }
    }
    if (!implicit) continue;
    for (const IVec3& d : rec) {
      if (sgn(dot(rows[l].a, d)) != 0) { implicit = false; break; }
    }
    if (implicit) throw Error(ErrorKind::kInfeasible, "polyhedron has empty interior");
  }

  Polyhedron P;
  std::map<HPoint, int> vindex;
  for (size_t i = 0; i < ve.points.size(); ++i) {
    vindex.emplace(ve.points[i], static_cast<int>(i));
    P.vertices_.push_back(to_rvec(ve.points[i]));
    P.vertex_h_.push_back(ve.points[i]);
  }

  // Edges from the extreme rays of each vertex's tangent cone.
  struct RawEdge {
    int v0, v1;
    IVec3 dir;
    std::vector<int> planes;
  };
  std::vector<RawEdge> raw;
  std::map<std::pair<int, int>, int> bounded_index;
  for (size_t vi = 0; vi < ve.points.size(); ++vi) {
    const HPoint& p = ve.points[vi];
    const std::vector<int>& T = ve.tight[vi];
    for (const IVec3& d : extreme_rays(rows, T)) {
      // Ratio test along p + t d.
      bool have = false;
      mpq_class best;
      for (size_t l = 0; l < rows.size(); ++l) {
        BigInt ad = dot(rows[l].a, d);
        if (sgn(ad) <= 0) continue;
        // slack/(a.d) with slack = d_l - a.x, x = P/D
        BigInt num = rows[l].d * p[3] - dot(rows[l].a, hp_xyz(p));
        mpq_class t(num, BigInt(ad * p[3]));
        t.canonicalize();
        if (!have || t < best) { best = t; have = true; }
      }
      std::vector<int> planes;
      for (int l : T) {
        if (sgn(dot(rows[l].a, d)) == 0) planes.push_back(l);
      }
      if (!have) {
        raw.push_back({static_cast<int>(vi), -1, d, planes});
        continue;
      }
      // w = p + best * d
      const BigInt& bn = best.get_num();
      const BigInt& bd = best.get_den();
      HPoint w{BigInt(p[0] * bd + bn * d[0] * p[3]), BigInt(p[1] * bd + bn * d[1] * p[3]),
               BigInt(p[2] * bd + bn * d[2] * p[3]), BigInt(p[3] * bd)};
      w = normalize_hpoint(w);
      auto it = vindex.find(w);
      if (it == vindex.end()) {
        throw Error(ErrorKind::kInvariantViolation, "edge endpoint is not an enumerated vertex");
      }
      int a = static_cast<int>(vi), b = it->second;
      auto key = std::make_pair(std::min(a, b), std::max(a, b));
      if (bounded_index.count(key)) continue;
      bounded_index.emplace(key, static_cast<int>(raw.size()));
      raw.push_back({a, b, d, planes});
    }
  }

  // Facets: planes carrying at least two edges.
  std::vector<int> plane_edges(rows.size(), 0);
  for (const RawEdge& e : raw) {
    for (int l : e.planes) ++plane_edges[l];
  }
  std::vector<int> face_of_plane(rows.size(), -1);
  for (size_t l = 0; l < rows.size(); ++l) {
    if (plane_edges[l] < 2) continue;
    face_of_plane[l] = static_cast<int>(P.faces_.size());
    Face f;
    IVec3 n = rows[l].a.primitive();
    f.normal = Ray(n);
    BigInt g;
    mpz_gcd(g.get_mpz_t(), rows[l].a[0].get_mpz_t(), rows[l].a[1].get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), rows[l].a[2].get_mpz_t());
    f.offset = ExactRatio(rows[l].d, g);
    f.row = rows[l].a;
    f.row_offset = rows[l].d;
    P.faces_.push_back(std::move(f));
  }

  for (const RawEdge& re : raw) {
    Edge e;
    e.v0 = re.v0;
    e.v1 = re.v1;
    e.direction = Ray(re.dir);
    std::vector<int> fs;
    for (int l : re.planes) {
      if (face_of_plane[l] >= 0) fs.push_back(face_of_plane[l]);
    }
    if (fs.size() != 2) {
      throw Error(ErrorKind::kInvariantViolation,
                  "edge with " + std::to_string(fs.size()) + " incident facets");
    }
    e.f0 = fs[0];
    e.f1 = fs[1];
    int id = static_cast<int>(P.edges_.size());
    P.faces_[e.f0].edges.push_back(id);
    P.faces_[e.f1].edges.push_back(id);
    P.edges_.push_back(e);
  }

  P.vertex_faces_.assign(P.vertices_.size(), {});
  for (size_t vi = 0; vi < ve.points.size(); ++vi) {
    for (int l : ve.tight[vi]) {
      if (face_of_plane[l] >= 0) P.vertex_faces_[vi].push_back(face_of_plane[l]);
    }
  }

  // Face cycles.
  for (size_t fi = 0; fi < P.faces_.size(); ++fi) {
    Face& f = P.faces_[fi];
    std::map<int, std::vector<int>> adj;  // vertex -> neighbour vertices
    std::vector<std::pair<int, IVec3>> ends;
    for (int ei : f.edges) {
      const Edge& e = P.edges_[ei];
      if (e.bounded()) {
        adj[e.v0].push_back(e.v1);
        adj[e.v1].push_back(e.v0);
      } else {
        adj[e.v0];
        ends.emplace_back(e.v0, e.direction.v());
      }
    }
    if (!(ends.empty() || ends.size() == 2)) {
      throw Error(ErrorKind::kInvariantViolation, "face with " + std::to_string(ends.size()) +
                                                      " unbounded edges");
    }
    std::vector<int> cyc;
    int start = ends.empty() ? adj.begin()->first : ends[0].first;
    int prev = -1, cur = start;
    while (true) {
      cyc.push_back(cur);
      int next = -1;
      for (int nb : adj[cur]) {
        if (nb != prev) { next = nb; break; }
      }
      if (next < 0 || next == start) break;
      prev = cur;
      cur = next;
      if (cyc.size() > adj.size()) {
        throw Error(ErrorKind::kInvariantViolation, "face boundary is not a simple chain");
      }
    }
    if (cyc.size() != adj.size()) {
      throw Error(ErrorKind::kInvariantViolation, "face boundary is disconnected");
    }
    const IVec3& n = f.row;
    if (ends.empty()) {
      RVec3 newell{0, 0, 0};
      for (size_t i = 0; i < cyc.size(); ++i) {
        newell = newell + cross(P.vertices_[cyc[i]], P.vertices_[cyc[(i + 1) % cyc.size()]]);
      }
      if (dot(newell, n.to_rvec()).sign() < 0) std::reverse(cyc.begin(), cyc.end());
    } else {
      IVec3 din, dout;
      if (ends[0].first == cyc.front()) {
        din = ends[0].second;
        dout = ends[1].second;
      } else {
        din = ends[1].second;
        dout = ends[0].second;
      }
      IVec3 second_dir;
      if (cyc.size() >= 2) {
        second_dir = integer_direction(P.vertices_[cyc[1]] - P.vertices_[cyc[0]]);
      } else {
        second_dir = dout;
      }
      if (sgn(det3(-din, second_dir, n)) < 0) {
        std::reverse(cyc.begin(), cyc.end());
        std::swap(din, dout);
      }
      f.ray_in = Ray(din);
      f.ray_out = Ray(dout);
    }
    f.cycle = std::move(cyc);
  }

  for (const IVec3& d : rec) P.rays_.push_back(Ray(d));
  return P;
}

Polyhedron Polyhedron::from_vrep(const std::vector<RVec3>& input) {
  std::vector<RVec3> pts;
  {
    std::set<RVec3> seen;
    for (const RVec3& p : input) {
      if (seen.insert(p).second) pts.push_back(p);
    }
  }
  // Integer coordinates after clearing a common denominator.
  BigInt L = 1;
  for (const RVec3& p : pts) {
    for (const ExactRatio* c : {&p.x, &p.y, &p.z}) {
      mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), c->den().get_mpz_t());
    }
  }
  std::vector<IVec3> ip;
  for (const RVec3& p : pts) {
    auto s = [&](const ExactRatio& r) { return BigInt(r.num() * (L / r.den())); };
    ip.emplace_back(s(p.x), s(p.y), s(p.z));
  }
  int rank = 0;
  {
    const int n = static_cast<int>(ip.size());
    int i1 = -1, i2 = -1, i3 = -1;
    for (int i = 1; i < n && i1 < 0; ++i) {
      if (!(ip[i] - ip[0]).is_zero()) i1 = i;
    }
    if (i1 >= 0) {
      rank = 1;
      for (int i = 1; i < n && i2 < 0; ++i) {
        if (!cross(ip[i1] - ip[0], ip[i] - ip[0]).is_zero()) i2 = i;
      }
    }
    if (i2 >= 0) {
      rank = 2;
      IVec3 nrm = cross(ip[i1] - ip[0], ip[i2] - ip[0]);
      for (int i = 1; i < n && i3 < 0; ++i) {
        if (sgn(dot(nrm, ip[i] - ip[0])) != 0) i3 = i;
      }
    }
    if (i3 >= 0) rank = 3;
  }
  if (rank < 3) {
    throw Error(ErrorKind::kDimension,
                "points have affine rank " + std::to_string(rank) + ", need 3");
  }
  std::vector<HalfSpace> hs;
  std::set<std::pair<IVec3, BigInt>> seen;
  const size_t n = ip.size();
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      IVec3 eij = ip[j] - ip[i];
      for (size_t k = j + 1; k < n; ++k) {
        IVec3 nrm = cross(eij, ip[k] - ip[i]);
        if (nrm.is_zero()) continue;
        BigInt off = dot(nrm, ip[i]);
        int side = 0;
        bool ok = true;
        for (size_t l = 0; l < n; ++l) {
          int s = sgn(BigInt(dot(nrm, ip[l]) - off));
          if (s == 0) continue;
          if (side == 0) {
            side = s;
          } else if (s != side) {
            ok = false;
            break;
          }
        }
        if (!ok || side == 0) continue;
        if (side > 0) {
          nrm = -nrm;
          off = -off;
        }
        BigInt g;
        mpz_gcd(g.get_mpz_t(), nrm[0].get_mpz_t(), nrm[1].get_mpz_t());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), nrm[2].get_mpz_t());
        IVec3 pn = nrm.primitive();
        // off is in scaled coordinates: <nrm, L x> <= off.
        BigInt num = off / g;
        if (!seen.insert({pn, num}).second) continue;
        hs.push_back({pn.to_rvec(), ExactRatio(num, L)});
      }
    }
  }
  return from_hrep(hs);
}

std::vector<int> Polyhedron::vertex_face_cycle(int vi) const {
  const std::vector<int>& fs = vertex_faces_[vi];
  // Adjacency between faces through edges at this vertex.
  std::map<int, std::vector<int>> adj;
  for (const Edge& e : edges_) {
    if (e.v0 != vi && e.v1 != vi) continue;
    adj[e.f0].push_back(e.f1);
    adj[e.f1].push_back(e.f0);
  }
  std::vector<int> cyc;
  if (fs.empty()) return cyc;
  int start = *std::min_element(fs.begin(), fs.end());
  int prev = -1, cur = start;
  while (true) {
    cyc.push_back(cur);
    const std::vector<int>& nb = adj[cur];
    if (nb.size() != 2) {
      throw Error(ErrorKind::kInvariantViolation, "vertex fan is not a cycle");
    }
    int next = nb[0] != prev ? nb[0] : nb[1];
    if (prev < 0) next = nb[0];
    if (next == start) break;
    prev = cur;
    cur = next;
    if (cyc.size() > fs.size()) {
      throw Error(ErrorKind::kInvariantViolation, "vertex fan is not a simple cycle");
    }
  }
  // Counter-clockwise seen from outside: det(n_0, n_1, sum) > 0.
  IVec3 sum;
  for (int f : cyc) sum = sum + faces_[f].normal.v();
  if (cyc.size() >= 2 && sgn(det3(faces_[cyc[0]].normal.v(), faces_[cyc[1]].normal.v(), sum)) < 0) {
    std::reverse(cyc.begin() + 1, cyc.end());
  }
  return cyc;
}

std::vector<HalfSpace> Polyhedron::facet_halfspaces() const {
  std::vector<HalfSpace> out;
  for (const Face& f : faces_) out.push_back({f.normal.v().to_rvec(), f.offset});
  return out;
}

SizeMeasures Polyhedron::size_measures() const {
  return {static_cast<int>(vertices_.size()), static_cast<int>(edges_.size()),
          static_cast<int>(faces_.size()), bounded()};
}

bool Polyhedron::check_euler() const {
  SizeMeasures s = size_measures();
  return s.v - s.e + s.f == (s.bounded ? 2 : 1);
}

bool Polyhedron::check_size_bounds() const {
  SizeMeasures s = size_measures();
  if (!s.bounded) return true;
  return s.v <= s.e && 2 * s.e <= s.v * (s.v - 1);
}

std::vector<Ray> recession_cone(const Polyhedron& p) { return p.rays(); }
SizeMeasures size_measures(const Polyhedron& p) { return p.size_measures(); }

std::vector<RVec3> transform_points(const std::vector<RVec3>& pts,
                                    const std::array<IVec3, 3>& m, const BigInt& s,
                                    const RVec3& t) {
  std::vector<RVec3> out;
  ExactRatio inv(BigInt(1), s);
  for (const RVec3& p : pts) {
    RVec3 q;
    ExactRatio* dst[3] = {&q.x, &q.y, &q.z};
    for (int i = 0; i < 3; ++i) *dst[i] = dot(m[i].to_rvec(), p) * inv;
    out.push_back(q + t);
  }
  return out;
}

}  // namespace moser
