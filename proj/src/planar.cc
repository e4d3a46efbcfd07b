#include "moser/planar.h"

#include <algorithm>
#include <map>
#include <functional>
#include <numeric>
#include <random>
#include <set>

namespace moser {

namespace {

bool positively_parallel(const IVec3& a, const IVec3& b) {
  return cross(a, b).is_zero() && sgn(dot(a, b)) > 0;
}

bool antipodal(const IVec3& a, const IVec3& b) {
  return cross(a, b).is_zero() && sgn(dot(a, b)) < 0;
}

bool has_rank3(const std::vector<IVec3>& v) {
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = i + 1; j < v.size(); ++j) {
      IVec3 c = cross(v[i], v[j]);
      if (c.is_zero()) continue;
      for (size_t k = j + 1; k < v.size(); ++k) {
        if (sgn(dot(c, v[k])) != 0) return true;
      }
    }
  return false;
}

// Normals of the closed half-spaces bounding the cone of a cycle.
std::vector<IVec3> cycle_hemispheres(const std::vector<IVec3>& c) {
  std::vector<IVec3> h;
  for (size_t i = 0; i < c.size(); ++i) {
    IVec3 n = cross(c[i], c[(i + 1) % c.size()]);
    if (!n.is_zero()) h.push_back(n.primitive());
  }
  h.push_back(IVec3(0, 0, 1));
  return h;
}

const IVec3 kPole(0, 0, 1);

}  // namespace

IVec3 canonical_homogeneous(const IVec3& h) {
  if (h.is_zero()) throw Error(ErrorKind::kInvalidArgument, "zero homogeneous vector");
  IVec3 p = h.primitive();
  if (sgn(p[2]) < 0) p = -p;
  return p;
}

std::vector<IVec3> whole_plane_cycle() {
  return {IVec3(1, 0, 0), IVec3(0, 1, 0), IVec3(-1, 0, 0), IVec3(0, -1, 0)};
}

std::vector<IVec3> normalize_cycle(std::vector<IVec3> c) {
  for (IVec3& v : c) v = v[2] == 0 ? v.primitive() : canonical_homogeneous(v);
  bool changed = true;
  while (changed && c.size() >= 2) {
    changed = false;
    for (size_t i = 0; i < c.size() && c.size() >= 2; ++i) {
      const IVec3& a = c[(i + c.size() - 1) % c.size()];
      const IVec3& b = c[i];
      const IVec3& d = c[(i + 1) % c.size()];
      bool drop = positively_parallel(a, b);
      if (!drop && c.size() >= 3) {
        IVec3 ab = cross(a, b), bd = cross(b, d), ad = cross(a, d);
        drop = !ab.is_zero() && !bd.is_zero() && !ad.is_zero() && sgn(dot(ab, d)) == 0 &&
               sgn(dot(ab, bd)) > 0 && sgn(dot(ab, ad)) > 0;
      }
      if (drop) {
        c.erase(c.begin() + static_cast<long>(i));
        changed = true;
        break;
      }
    }
  }
  return c;
}

std::vector<IVec3> clip_cycle(const std::vector<IVec3>& cycle, const IVec3& h) {
  bool pos = false, neg = false;
  for (const IVec3& v : cycle) {
    int s = sgn(dot(h, v));
    pos |= s > 0;
    neg |= s < 0;
  }
  bool flat = !has_rank3(cycle);
  // A flat cycle is the whole plane; its pole is strictly inside.
  if (flat) {
    int s = sgn(dot(h, kPole));
    pos |= s > 0;
    neg |= s < 0;
  }
  if (!neg) return cycle;
  if (!pos) return {};
  std::vector<IVec3> out;
  const size_t n = cycle.size();
  for (size_t i = 0; i < n; ++i) {
    const IVec3& a = cycle[i];
    const IVec3& b = cycle[(i + 1) % n];
    BigInt ha = dot(h, a), hb = dot(h, b);
    if (sgn(ha) >= 0) out.push_back(a);
    if (sgn(ha) * sgn(hb) < 0) {
      BigInt aa = abs(ha), ab = abs(hb);
      out.push_back((b * aa + a * ab).primitive());
    }
  }
  // Consecutive antipodal entries lie on the clipping line; join them
  // through the side that belongs to the original region.
  std::vector<IVec3> hs = cycle_hemispheres(cycle);
  auto inside = [&](const IVec3& x) {
    if (flat) return sgn(x[2]) >= 0;
    for (const IVec3& n2 : hs) {
      if (sgn(dot(n2, x)) < 0) return false;
    }
    return true;
  };
  std::vector<IVec3> fixed;
  for (size_t i = 0; i < out.size(); ++i) {
    fixed.push_back(out[i]);
    const IVec3& q = out[(i + 1) % out.size()];
    if (antipodal(out[i], q)) {
      IVec3 m = cross(h, out[i]).primitive();
      if (!inside(m)) m = -m;
      fixed.push_back(m);
    }
  }
  fixed = normalize_cycle(std::move(fixed));
  if (fixed.size() < 3 || !has_rank3(fixed)) return {};
  return fixed;
}

PlanarRegion PlanarRegion::from_homogeneous(std::vector<IVec3> cycle, bool exterior) {
  PlanarRegion r;
  r.exterior = exterior;
  for (IVec3& v : cycle) {
    if (sgn(v[2]) < 0) {
      v = -v;
    }
  }
  cycle = normalize_cycle(std::move(cycle));
  if (cycle.size() < 3) throw Error(ErrorKind::kInvalidArgument, "planar region needs 3 vertices");
  IVec3 g;
  if (has_rank3(cycle)) {
    for (const IVec3& v : cycle) g = g + v;
  } else {
    g = kPole;
  }
  BigInt orient = 0;
  for (size_t i = 0; i < cycle.size(); ++i) orient += det3(g, cycle[i], cycle[(i + 1) % cycle.size()]);
  if (sgn(orient) < 0) std::reverse(cycle.begin(), cycle.end());
  r.cycle = std::move(cycle);
  return r;
}

PlanarRegion PlanarRegion::from_points(const std::vector<RVec2>& points,
                                       const std::vector<RVec2>& rays, bool exterior) {
  if (!rays.empty() && rays.size() != 2) {
    throw Error(ErrorKind::kInvalidArgument, "a region has 0 or 2 rays");
  }
  if (exterior && !rays.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "exterior region must be bounded polygon");
  }
  std::vector<IVec3> c;
  for (const RVec2& p : points) c.push_back(homogenize_point(p));
  if (!rays.empty()) {
    if (points.empty()) throw Error(ErrorKind::kInvalidArgument, "rays need a finite vertex");
    IVec3 din = homogenize_direction(rays[0]), dout = homogenize_direction(rays[1]);
    c.push_back(dout);
    if (antipodal(din, dout)) c.push_back(IVec3(BigInt(-dout[1]), dout[0], BigInt(0)).primitive());
    c.push_back(din);
  }
  return from_homogeneous(std::move(c), exterior);
}

bool PlanarRegion::bounded() const {
  if (exterior) return false;
  return std::all_of(cycle.begin(), cycle.end(), [](const IVec3& v) { return sgn(v[2]) > 0; });
}

std::vector<RVec2> PlanarRegion::finite_cycle() const {
  const size_t n = cycle.size();
  size_t start = 0;
  for (size_t i = 0; i < n; ++i) {
    if (sgn(cycle[i][2]) == 0 && sgn(cycle[(i + 1) % n][2]) > 0) start = (i + 1) % n;
  }
  std::vector<RVec2> out;
  for (size_t k = 0; k < n; ++k) {
    const IVec3& v = cycle[(start + k) % n];
    if (sgn(v[2]) > 0) out.push_back(dehomogenize(v));
  }
  return out;
}

std::vector<RVec2> PlanarRegion::rays() const {
  const size_t n = cycle.size();
  for (size_t i = 0; i < n; ++i) {
    const IVec3& v = cycle[i];
    const IVec3& next = cycle[(i + 1) % n];
    if (sgn(v[2]) == 0 && sgn(next[2]) > 0) {
      // v is the incoming direction; walk forward to the first direction.
      for (size_t k = 1; k < n; ++k) {
        const IVec3& w = cycle[(i + 1 + k) % n];
        if (sgn(w[2]) == 0) {
          return {RVec2{ExactRatio(v[0]), ExactRatio(v[1])},
                  RVec2{ExactRatio(w[0]), ExactRatio(w[1])}};
        }
      }
    }
  }
  return {};
}

namespace {

bool polygon_contains(const std::vector<IVec3>& cycle, const IVec3& p, bool open) {
  for (const IVec3& h : cycle_hemispheres(cycle)) {
    int s = sgn(dot(h, p));
    if (s < 0 || (open && s == 0)) return false;
  }
  return true;
}

}  // namespace

bool PlanarRegion::contains(const IVec3& p) const {
  if (exterior) return !polygon_contains(cycle, p, true);
  return polygon_contains(cycle, p, false);
}

bool PlanarRegion::contains_open(const IVec3& p) const {
  if (exterior) return !polygon_contains(cycle, p, false);
  return polygon_contains(cycle, p, true);
}

bool PlanarRegion::is_convex() const {
  const size_t n = cycle.size();
  if (n < 3) return false;
  if (!has_rank3(cycle)) return !exterior;
  bool strict = false;
  for (size_t i = 0; i < n; ++i) {
    int s = sgn(det3(cycle[i], cycle[(i + 1) % n], cycle[(i + 2) % n]));
    if (s < 0) return false;
    strict |= s > 0;
  }
  for (const IVec3& h : cycle_hemispheres(cycle)) {
    for (const IVec3& v : cycle) {
      if (sgn(dot(h, v)) < 0) return false;
    }
  }
  if (exterior) {
    for (const IVec3& v : cycle) {
      if (sgn(v[2]) <= 0) return false;
    }
  }
  return strict;
}

std::vector<IVec3> PlanarSubdivision::vertices() const {
  std::set<IVec3> s;
  for (const PlanarRegion& r : regions)
    for (const IVec3& v : r.cycle)
      if (sgn(v[2]) > 0) s.insert(v);
  return {s.begin(), s.end()};
}

std::vector<IVec3> PlanarSubdivision::directions() const {
  std::set<IVec3> s;
  for (const PlanarRegion& r : regions)
    for (const IVec3& v : r.cycle)
      if (sgn(v[2]) == 0) s.insert(v);
  return {s.begin(), s.end()};
}

std::vector<std::pair<IVec3, IVec3>> PlanarSubdivision::edges() const {
  std::set<std::pair<IVec3, IVec3>> s;
  for (const PlanarRegion& r : regions) {
    const auto& c = r.cycle;
    for (size_t i = 0; i < c.size(); ++i) {
      const IVec3& a = c[i];
      const IVec3& b = c[(i + 1) % c.size()];
      if (sgn(a[2]) == 0 && sgn(b[2]) == 0) continue;
      s.insert(a < b ? std::make_pair(a, b) : std::make_pair(b, a));
    }
  }
  return {s.begin(), s.end()};
}

bool PlanarSubdivision::check_convex() const {
  int exteriors = 0;
  for (const PlanarRegion& r : regions) {
    exteriors += r.exterior;
    if (!r.is_convex()) return false;
  }
  return exteriors <= 1;
}

namespace {

// Position along a line: value/W, with W = 0 meaning +-infinity.
struct LinePos {
  int inf = 0;  // -1, 0, +1
  mpq_class t;
  bool operator<(const LinePos& o) const {
    if (inf != o.inf) return inf < o.inf;
    return inf == 0 && t < o.t;
  }
};

LinePos line_pos(const IVec3& dir, const IVec3& x) {
  BigInt d = dir[0] * x[0] + dir[1] * x[1];
  if (sgn(x[2]) == 0) return {sgn(d), 0};
  mpq_class t(d, x[2]);
  t.canonicalize();
  return {0, t};
}

}  // namespace

bool PlanarSubdivision::adjacency_connected() const {
  const size_t n = regions.size();
  if (n <= 1) return true;
  std::vector<size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  struct Piece {
    size_t region;
    LinePos lo, hi;
  };
  std::map<IVec3, std::vector<Piece>> by_line;
  for (size_t i = 0; i < n; ++i) {
    const auto& c = regions[i].cycle;
    for (size_t k = 0; k < c.size(); ++k) {
      const IVec3& a = c[k];
      const IVec3& b = c[(k + 1) % c.size()];
      if (sgn(a[2]) == 0 && sgn(b[2]) == 0) continue;
      IVec3 key = cross(a, b).line_key();
      IVec3 dir(BigInt(-key[1]), key[0], BigInt(0));
      LinePos pa = line_pos(dir, a), pb = line_pos(dir, b);
      if (pb < pa) std::swap(pa, pb);
      by_line[key].push_back({i, pa, pb});
    }
  }
  for (const auto& [key, pieces] : by_line) {
    for (size_t x = 0; x < pieces.size(); ++x)
      for (size_t y = x + 1; y < pieces.size(); ++y) {
        const Piece& p = pieces[x];
        const Piece& q = pieces[y];
        if (p.region == q.region) continue;
        // Overlap in more than a point.
        if (p.lo < q.hi && q.lo < p.hi) parent[find(p.region)] = find(q.region);
      }
  }
  size_t root = find(0);
  for (size_t i = 1; i < n; ++i) {
    if (find(i) != root) return false;
  }
  return true;
}

PlanarLine::PlanarLine(IVec3 base, IVec3 l1, IVec3 l2)
    : f0(std::move(base)), f1(std::move(l1)), f2(std::move(l2)) {
  if (sgn(f0[0]) == 0 && sgn(f0[1]) == 0) {
    throw Error(ErrorKind::kInvalidArgument, "line needs (a, b) != 0");
  }
  f0 = f0.primitive();
  if (!f1.is_zero()) f1 = f1.primitive();
  if (!f2.is_zero()) f2 = f2.primitive();
  int lead = sgn(f0[0]) != 0 ? sgn(f0[0]) : sgn(f0[1]);
  if (lead < 0) {
    f0 = -f0;
    f1 = -f1;
    f2 = -f2;
  }
}

PlanarLine PlanarLine::from_coefficients(const ExactRatio& a, const ExactRatio& b,
                                         const ExactRatio& c) {
  RVec3 v{a, b, -c};
  if (a.is_zero() && b.is_zero()) throw Error(ErrorKind::kInvalidArgument, "line needs (a, b) != 0");
  return PlanarLine(integer_direction(v));
}

PlanarLine PlanarLine::through(const RVec2& p, const RVec2& q) {
  if (p == q) throw Error(ErrorKind::kInvalidArgument, "line through coincident points");
  return PlanarLine(cross(homogenize_point(p), homogenize_point(q)));
}

std::string PlanarLine::str() const {
  std::string s = a().str() + "*x + " + b().str() + "*y = " + c().str();
  if (perturbed()) s += " [" + f1.str() + ", " + f2.str() + "]";
  return s;
}

bool region_meets_line(const PlanarRegion& r, const PlanarLine& l) {
  if (r.exterior) return true;
  bool pos = false, neg = false;
  auto look = [&](const IVec3& g) {
    int s = l.side(g);
    pos |= s > 0;
    neg |= s < 0;
    return pos && neg;
  };
  for (const IVec3& g : r.cycle) {
    if (look(g)) return true;
  }
  if (!has_rank3(r.cycle)) return look(kPole);
  return false;
}

int regions_crossed(const std::vector<PlanarRegion>& regions, const PlanarLine& l) {
  int c = 0;
  for (const PlanarRegion& r : regions) c += region_meets_line(r, l);
  return c;
}

int stab_count(const PlanarSubdivision& s, const PlanarLine& l) {
  return std::max(1, regions_crossed(s.regions, l));
}

std::vector<PlanarLine> candidate_lines(const std::vector<IVec3>& vertices,
                                        const std::vector<IVec3>& directions) {
  std::vector<IVec3> pts;
  {
    std::set<IVec3> seen;
    for (const IVec3& v : vertices) {
      IVec3 c = canonical_homogeneous(v);
      if (seen.insert(c).second) pts.push_back(c);
    }
    std::set<IVec3> dirs;
    for (const IVec3& d : directions) dirs.insert(d.line_key());
    dirs.insert(IVec3(1, 0, 0));
    dirs.insert(IVec3(0, 1, 0));
    pts.insert(pts.end(), dirs.begin(), dirs.end());
  }
  std::map<IVec3, std::set<size_t>> lines;
  for (size_t i = 0; i < pts.size(); ++i) {
    for (size_t j = i + 1; j < pts.size(); ++j) {
      if (sgn(pts[i][2]) == 0 && sgn(pts[j][2]) == 0) continue;
      IVec3 f = cross(pts[i], pts[j]);
      if (f.is_zero()) continue;
      IVec3 key = PlanarLine(f).f0;
      auto& on = lines[key];
      on.insert(i);
      on.insert(j);
    }
  }
  std::vector<PlanarLine> out;
  for (const auto& [f0, on] : lines) {
    // One sector pair per point of the line; the last point's sectors are
    // all adjacent to some other point's.
    std::vector<size_t> idx(on.begin(), on.end());
    idx.pop_back();
    for (size_t i : idx) {
      const IVec3& r = pts[i];
      IVec3 rot = cross(r, f0);
      for (int s1 : {1, -1})
        for (int s2 : {1, -1}) out.emplace_back(f0, rot * BigInt(s1), r * BigInt(s2));
    }
  }
  if (out.empty()) out.emplace_back(IVec3(1, 0, 0));
  return out;
}

namespace {

LineSpanResult best_line(const std::vector<PlanarLine>& cand, Exec exec,
                         const std::function<int(const PlanarLine&)>& eval) {
  ArgMax best = argmax(cand.size(), exec, [&](size_t i) -> int64_t { return eval(cand[i]); });
  return {static_cast<int>(best.value), cand[best.index]};
}

}  // namespace

LineSpanResult line_span(const PlanarSubdivision& s, Exec exec) {
  std::vector<PlanarLine> cand = candidate_lines(s.vertices(), s.directions());
  return best_line(cand, exec, [&](const PlanarLine& l) { return stab_count(s, l); });
}

LineSpanResult max_regions_crossed(const std::vector<PlanarRegion>& regions, Exec exec) {
  PlanarSubdivision tmp{regions};
  std::vector<PlanarLine> cand = candidate_lines(tmp.vertices(), tmp.directions());
  return best_line(cand, exec, [&](const PlanarLine& l) { return regions_crossed(regions, l); });
}

RVec2 generic_direction(const PlanarSubdivision& s) {
  std::vector<RVec2> v;
  for (const IVec3& h : s.vertices()) v.push_back(dehomogenize(h));
  std::vector<IVec3> dirs = s.directions();
  for (long k = 2;; ++k) {
    ExactRatio slope(k);
    bool ok = true;
    for (const IVec3& d : dirs) {
      if (d[1] == d[0] * k) { ok = false; break; }
    }
    if (!ok) continue;
    // Parallel to a vertex difference iff two vertices share y - s x.
    std::vector<ExactRatio> key;
    key.reserve(v.size());
    for (const RVec2& p : v) key.push_back(p.y - slope * p.x);
    std::sort(key.begin(), key.end());
    if (std::adjacent_find(key.begin(), key.end()) == key.end()) return {ExactRatio(1), slope};
  }
}

PlanarAudit audit_planar(const PlanarSubdivision& s, int samples, uint64_t seed) {
  std::vector<IVec3> vs = s.vertices();
  mpq_class lo_x = -1, hi_x = 1, lo_y = -1, hi_y = 1;
  for (const IVec3& h : vs) {
    RVec2 p = dehomogenize(h);
    lo_x = std::min(lo_x, p.x.value());
    hi_x = std::max(hi_x, p.x.value());
    lo_y = std::min(lo_y, p.y.value());
    hi_y = std::max(hi_y, p.y.value());
  }
  mpq_class mx = (hi_x - lo_x) / 4, my = (hi_y - lo_y) / 4;
  lo_x -= mx;
  hi_x += mx;
  lo_y -= my;
  hi_y += my;
  std::mt19937_64 rng(seed);
  const long kRes = 1000003;
  std::uniform_int_distribution<long> dist(0, kRes);
  PlanarAudit a;
  while (a.samples < samples) {
    mpq_class x = lo_x + (hi_x - lo_x) * mpq_class(dist(rng), kRes);
    mpq_class y = lo_y + (hi_y - lo_y) * mpq_class(dist(rng), kRes);
    IVec3 p = homogenize_point({ExactRatio(x), ExactRatio(y)});
    int closed = 0, open = 0;
    bool boundary = false;
    for (const PlanarRegion& r : s.regions) {
      bool c = r.contains(p), o = r.contains_open(p);
      closed += c;
      open += o;
      boundary |= c && !o;
    }
    if (boundary) {
      ++a.resampled;
      continue;
    }
    ++a.samples;
    if (closed == 0) ++a.uncovered;
    if (open > 1) ++a.multiply_open;
  }
  return a;
}

}  // namespace moser
