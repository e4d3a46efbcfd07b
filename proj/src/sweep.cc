#include "moser/sweep.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace moser {

namespace {

// Rational extended by -inf (inf = -1) and +inf (inf = 1).
struct Ext {
  int inf = 0;
  mpq_class v;

  static Ext lo_inf() { return {-1, 0}; }
  static Ext hi_inf() { return {1, 0}; }
  static Ext of(const mpq_class& q) { return {0, q}; }
  bool finite() const { return inf == 0; }
};

int cmp(const Ext& a, const Ext& b) {
  if (a.inf != b.inf) return a.inf < b.inf ? -1 : 1;
  if (a.inf != 0) return 0;
  return a.v < b.v ? -1 : (b.v < a.v ? 1 : 0);
}
bool operator<(const Ext& a, const Ext& b) { return cmp(a, b) < 0; }
const Ext& emax(const Ext& a, const Ext& b) { return cmp(a, b) >= 0 ? a : b; }
const Ext& emin(const Ext& a, const Ext& b) { return cmp(a, b) <= 0 ? a : b; }

std::string ext_str(const Ext& e) {
  if (e.inf < 0) return "-inf";
  if (e.inf > 0) return "inf";
  return ExactRatio(e.v).str();
}

struct Interval {
  Ext lo = Ext::lo_inf(), hi = Ext::hi_inf();
  bool empty = false;
  bool flat = false;  // the line runs along a supporting line
  bool open_nonempty() const { return !empty && !flat && cmp(lo, hi) < 0; }
};

struct Cell {
  int id = 0;
  std::vector<IVec3> cycle;  // sheared
  std::vector<IVec3> cons;   // <g, p> >= 0
  Ext ylo, yhi;
};

struct EdgeInfo {
  bool valid = false;  // false for arcs at infinity
  mpq_class ax, ay, slope;  // anchor and dx/dy
  Ext lo, hi;
  bool up = false;  // counter-clockwise traversal goes up
  IVec3 key;
  mpq_class x_at(const mpq_class& y) const { return ax + slope * (y - ay); }
};

struct Adj {
  int edge;
  int other;
  Ext lo, hi;
};

struct Prep {
  BigInt s;
  std::vector<Cell> cells;
  std::vector<std::vector<EdgeInfo>> edges;
  std::vector<std::vector<Adj>> adj;
  std::vector<mpq_class> heights;  // distinct vertex heights, sorted
  std::vector<mpq_class> xs;       // distinct vertex abscissae, sorted
  // Cells incident to each finite vertex, by increasing height.
  std::vector<std::pair<mpq_class, std::vector<int>>> fans;
};

// Points P0 + t D with P0 = (px, py), D = (dx, dy).
Interval section(const Cell& c, const mpq_class& px, const mpq_class& py, const mpq_class& dx,
                 const mpq_class& dy) {
  Interval r;
  for (const IVec3& g : c.cons) {
    mpq_class a = mpq_class(g[0]) * dx + mpq_class(g[1]) * dy;
    mpq_class b = mpq_class(g[0]) * px + mpq_class(g[1]) * py + mpq_class(g[2]);
    int sa = sgn(a);
    if (sa == 0) {
      int sb = sgn(b);
      if (sb < 0) r.empty = true;
      if (sb == 0) r.flat = true;
      continue;
    }
    Ext t = Ext::of(-b / a);
    if (sa > 0) {
      if (cmp(t, r.lo) > 0) r.lo = t;
    } else if (cmp(t, r.hi) < 0) {
      r.hi = t;
    }
  }
  if (cmp(r.lo, r.hi) > 0) r.empty = true;
  return r;
}

// Section of x = A + B y, parametrized by y.
Interval line_section(const Cell& c, const mpq_class& A, const mpq_class& B) {
  return section(c, A, 0, B, 1);
}

// Section of the horizontal line at height h, parametrized by x.
Interval level_section(const Cell& c, const mpq_class& h) { return section(c, 0, h, 1, 0); }

IVec3 shear(const IVec3& p, const BigInt& s) { return IVec3(p[0], BigInt(p[1] - s * p[0]), p[2]); }

mpq_class height(const IVec3& p) { return mpq_class(p[1]) / mpq_class(p[2]); }

EdgeInfo edge_info(const IVec3& a, const IVec3& b) {
  EdgeInfo e;
  bool fa = sgn(a[2]) != 0, fb = sgn(b[2]) != 0;
  if (!fa && !fb) return e;
  e.valid = true;
  e.key = cross(a, b).line_key();
  auto fail = [] {
    throw Error(ErrorKind::kInvariantViolation, "horizontal edge after shearing");
  };
  if (fa && fb) {
    mpq_class ax = mpq_class(a[0]) / mpq_class(a[2]), ay = height(a);
    mpq_class bx = mpq_class(b[0]) / mpq_class(b[2]), by = height(b);
    if (ay == by) fail();
    e.ax = ax;
    e.ay = ay;
    e.slope = (bx - ax) / (by - ay);
    e.up = by > ay;
    e.lo = Ext::of(e.up ? ay : by);
    e.hi = Ext::of(e.up ? by : ay);
    return e;
  }
  const IVec3& p = fa ? a : b;
  const IVec3& d = fa ? b : a;
  if (sgn(d[1]) == 0) fail();
  e.ax = mpq_class(p[0]) / mpq_class(p[2]);
  e.ay = height(p);
  e.slope = mpq_class(d[0]) / mpq_class(d[1]);
  bool rising = sgn(d[1]) > 0;
  // Traversal runs along d out of a finite start, against d into a finite end.
  e.up = fa ? rising : !rising;
  e.lo = rising ? Ext::of(e.ay) : Ext::lo_inf();
  e.hi = rising ? Ext::hi_inf() : Ext::of(e.ay);
  return e;
}

Cell make_cell(int id, std::vector<IVec3> cyc) {
  Cell c;
  c.id = id;
  c.cycle = std::move(cyc);
  bool any = false;
  c.ylo = Ext::hi_inf();
  c.yhi = Ext::lo_inf();
  const size_t m = c.cycle.size();
  for (size_t i = 0; i < m; ++i) {
    const IVec3& p = c.cycle[i];
    IVec3 g = cross(p, c.cycle[(i + 1) % m]);
    if (!g.is_zero()) c.cons.push_back(g.primitive());
    if (sgn(p[2]) != 0) {
      Ext y = Ext::of(height(p));
      c.ylo = emin(c.ylo, y);
      c.yhi = emax(c.yhi, y);
      any = true;
    } else if (sgn(p[1]) > 0) {
      c.yhi = Ext::hi_inf();
    } else if (sgn(p[1]) < 0) {
      c.ylo = Ext::lo_inf();
    }
  }
  if (!any && cmp(c.ylo, c.yhi) > 0) {
    c.ylo = Ext::lo_inf();
    c.yhi = Ext::hi_inf();
  }
  return c;
}

// Convex cones p_i + cone(e_{i-1}, e_i) covering the outside of a bounded
// counter-clockwise polygon; p_{i+1} is kept as a straight vertex so that
// the polygon edge appears in the cell boundary.
std::vector<std::vector<IVec3>> pinwheel(const std::vector<RVec2>& p) {
  std::vector<std::vector<IVec3>> out;
  const size_t m = p.size();
  for (size_t i = 0; i < m; ++i) {
    const RVec2& prev = p[(i + m - 1) % m];
    const RVec2& next = p[(i + 1) % m];
    out.push_back({homogenize_point(p[i]), homogenize_direction(p[i] - prev),
                   homogenize_direction(next - p[i]), homogenize_point(next)});
  }
  return out;
}

Prep prepare(const PlanarSubdivision& s, const BigInt& slope) {
  Prep pr;
  pr.s = slope;
  for (size_t r = 0; r < s.regions.size(); ++r) {
    const PlanarRegion& reg = s.regions[r];
    std::vector<std::vector<IVec3>> cycles;
    if (reg.exterior) {
      cycles = pinwheel(reg.finite_cycle());
    } else {
      cycles.push_back(reg.cycle);
    }
    for (auto& cyc : cycles) {
      for (IVec3& p : cyc) p = shear(p, slope);
      pr.cells.push_back(make_cell(static_cast<int>(r), std::move(cyc)));
    }
  }
  const size_t n = pr.cells.size();
  pr.edges.resize(n);
  pr.adj.resize(n);
  std::map<IVec3, std::vector<std::pair<int, int>>> by_line;
  std::set<mpq_class> hs, xs;
  for (size_t c = 0; c < n; ++c) {
    const auto& cyc = pr.cells[c].cycle;
    for (size_t i = 0; i < cyc.size(); ++i) {
      pr.edges[c].push_back(edge_info(cyc[i], cyc[(i + 1) % cyc.size()]));
      if (pr.edges[c].back().valid) by_line[pr.edges[c].back().key].push_back({int(c), int(i)});
      if (sgn(cyc[i][2]) != 0) {
        hs.insert(height(cyc[i]));
        xs.insert(mpq_class(cyc[i][0]) / mpq_class(cyc[i][2]));
      }
    }
  }
  std::map<IVec3, std::vector<int>> at;
  for (size_t c = 0; c < n; ++c) {
    for (const IVec3& p : pr.cells[c].cycle) {
      if (sgn(p[2]) != 0) at[canonical_homogeneous(p)].push_back(int(c));
    }
  }
  for (auto& [p, cells] : at) {
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    pr.fans.push_back({height(p), std::move(cells)});
  }
  std::sort(pr.fans.begin(), pr.fans.end(),
            [](const auto& u, const auto& v) { return u.first < v.first; });
  pr.heights.assign(hs.begin(), hs.end());
  pr.xs.assign(xs.begin(), xs.end());
  for (auto& [key, list] : by_line) {
    std::sort(list.begin(), list.end(), [&](const auto& u, const auto& v) {
      return pr.edges[u.first][u.second].lo < pr.edges[v.first][v.second].lo;
    });
    for (size_t i = 0; i < list.size(); ++i) {
      const EdgeInfo& ei = pr.edges[list[i].first][list[i].second];
      for (size_t j = i + 1; j < list.size(); ++j) {
        const EdgeInfo& ej = pr.edges[list[j].first][list[j].second];
        if (cmp(ej.lo, ei.hi) >= 0) break;
        if (list[i].first == list[j].first) continue;
        Ext lo = emax(ei.lo, ej.lo), hi = emin(ei.hi, ej.hi);
        if (cmp(lo, hi) >= 0) continue;
        pr.adj[list[i].first].push_back({list[i].second, list[j].first, lo, hi});
        pr.adj[list[j].first].push_back({list[j].second, list[i].first, lo, hi});
      }
    }
  }
  return pr;
}

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void join(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) p[std::max(a, b)] = std::min(a, b);
  }
};

// a A + b B >= c.
struct Constraint {
  mpq_class a, b, c;
};

struct P2 {
  mpq_class A, B;
};

// A point of { (A, B) : all constraints }, as the vertex centroid of the
// feasible polygon clipped to a box that contains all its vertices.
P2 feasible_point(const std::vector<Constraint>& cons) {
  mpq_class big = 1;
  auto bump = [&](const mpq_class& v) {
    mpq_class a = abs(v);
    if (a > big) big = a;
  };
  for (const Constraint& c : cons) bump(c.c);
  for (size_t i = 0; i < cons.size(); ++i)
    for (size_t j = i + 1; j < cons.size(); ++j) {
      const Constraint &u = cons[i], &w = cons[j];
      mpq_class det = u.a * w.b - w.a * u.b;
      if (sgn(det) == 0) continue;
      bump((u.c * w.b - w.c * u.b) / det);
      bump((u.a * w.c - w.a * u.c) / det);
    }
  big = 2 * big + 1;
  std::vector<P2> poly = {{-big, -big}, {big, -big}, {big, big}, {-big, big}};
  for (const Constraint& c : cons) {
    std::vector<P2> next;
    for (size_t i = 0; i < poly.size(); ++i) {
      const P2& p = poly[i];
      const P2& q = poly[(i + 1) % poly.size()];
      mpq_class vp = c.a * p.A + c.b * p.B - c.c;
      mpq_class vq = c.a * q.A + c.b * q.B - c.c;
      if (sgn(vp) >= 0) next.push_back(p);
      if ((sgn(vp) > 0 && sgn(vq) < 0) || (sgn(vp) < 0 && sgn(vq) > 0)) {
        mpq_class t = vp / (vp - vq);
        next.push_back({p.A + (q.A - p.A) * t, p.B + (q.B - p.B) * t});
      }
    }
    poly = std::move(next);
    if (poly.empty()) {
      throw Error(ErrorKind::kInvariantViolation, "no line runs through the kernel");
    }
  }
  P2 m{0, 0};
  for (const P2& p : poly) {
    m.A += p.A;
    m.B += p.B;
  }
  m.A /= static_cast<long>(poly.size());
  m.B /= static_cast<long>(poly.size());
  return m;
}

// x = A + B y through the kernel (band, members) from bottom to top.
P2 kernel_line(const Prep& pr, const std::vector<int>& members, const std::vector<char>& member,
               const Ext& lo, const Ext& hi) {
  std::vector<Constraint> cons;
  for (int r : members) {
    const auto& edges = pr.edges[r];
    for (size_t e = 0; e < edges.size(); ++e) {
      const EdgeInfo& ed = edges[e];
      if (!ed.valid) continue;
      Ext a = emax(lo, ed.lo), b = emin(hi, ed.hi);
      if (cmp(a, b) >= 0) continue;
      std::vector<std::pair<Ext, Ext>> shared;
      for (const Adj& x : pr.adj[r]) {
        if (x.edge == static_cast<int>(e) && member[x.other]) shared.push_back({x.lo, x.hi});
      }
      std::sort(shared.begin(), shared.end(),
                [](const auto& u, const auto& v) { return u.first < v.first; });
      std::vector<std::pair<Ext, Ext>> free;
      Ext cur = a;
      for (const auto& [slo, shi] : shared) {
        if (cmp(slo, cur) > 0) free.push_back({cur, emin(slo, b)});
        cur = emax(cur, shi);
      }
      if (cmp(cur, b) < 0) free.push_back({cur, b});
      // Downward traversal leaves the cell on the right: x >= edge.
      const bool left = !ed.up;
      const int sign = left ? 1 : -1;
      for (const auto& [p, q] : free) {
        if (cmp(p, q) >= 0) continue;
        for (const Ext* y : {&p, &q}) {
          if (!y->finite()) continue;
          cons.push_back({sign, sign * y->v, sign * ed.x_at(y->v)});
        }
        if (p.inf < 0) cons.push_back({0, -sign, -sign * ed.slope});
        if (q.inf > 0) cons.push_back({0, sign, sign * ed.slope});
      }
    }
  }
  std::sort(cons.begin(), cons.end(), [](const Constraint& u, const Constraint& w) {
    if (u.a != w.a) return u.a < w.a;
    if (u.b != w.b) return u.b < w.b;
    return u.c < w.c;
  });
  cons.erase(std::unique(cons.begin(), cons.end(),
                         [](const Constraint& u, const Constraint& w) {
                           return u.a == w.a && u.b == w.b && u.c == w.c;
                         }),
             cons.end());
  return feasible_point(cons);
}

BigInt ipow(long base, int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

// Original-coordinate line of x = A + B y in sheared coordinates.
PlanarLine unshear_line(const P2& l, const BigInt& s) {
  ExactRatio A(l.A), B(l.B);
  return PlanarLine::from_coefficients(ExactRatio(1) + ExactRatio(s) * B, -B, A);
}

PlanarLine unshear_level(const mpq_class& h, const BigInt& s) {
  return PlanarLine::from_coefficients(ExactRatio(BigInt(-s)), ExactRatio(1), ExactRatio(h));
}

}  // namespace

const char* certificate_kind_name(StabCertificate::Kind kind) {
  return kind == StabCertificate::Kind::kHorizontal ? "horizontal" : "nonhorizontal";
}

int sweep_guarantee(int n, int k) {
  if (k < 5) throw Error(ErrorKind::kParameter, "sweep needs k >= 5");
  BigInt target = BigInt(3 * k - 5) * n;
  int m = 0;
  while (ipow(3 * k - 4, m) * (k - 1) < target) ++m;
  return std::min(m, k);
}

StabCertificate sweep_certificate(const PlanarSubdivision& s, int k, Exec exec) {
  if (k < 5) throw Error(ErrorKind::kParameter, "sweep needs k >= 5");
  if (s.regions.empty()) throw Error(ErrorKind::kInvalidArgument, "empty subdivision");
  if (!s.check_convex()) throw Error(ErrorKind::kInvalidArgument, "subdivision is not convex");

  StabCertificate cert;
  cert.k = k;
  cert.n = static_cast<int>(s.regions.size());
  cert.guarantee = sweep_guarantee(cert.n, k);
  cert.horizontal = generic_direction(s);
  for (const PlanarRegion& r : s.regions) cert.convex_input &= !r.exterior;
  const BigInt slope = cert.horizontal.y.num();
  Prep pr = prepare(s, slope);
  const size_t ncells = pr.cells.size();

  std::vector<int> members(ncells);
  std::iota(members.begin(), members.end(), 0);
  Ext lo = Ext::lo_inf(), hi = Ext::hi_inf();
  P2 line{0, 0};
  if (!pr.xs.empty()) {
    size_t m = pr.xs.size() / 2;
    line.A = m > 0 ? mpq_class((pr.xs[m - 1] + pr.xs[m]) / 2) : mpq_class(pr.xs[0] + mpq_class(1, 2));
  }

  for (;;) {
    std::vector<char> member(ncells, 0);
    for (int r : members) member[r] = 1;
    std::set<int> ids;
    for (int r : members) ids.insert(pr.cells[r].id);

    SweepStage st;
    st.band_lo = ext_str(lo);
    st.band_hi = ext_str(hi);
    st.regions = static_cast<int>(ids.size());
    st.line = unshear_line(line, slope);

    // Cells of the kernel met by the line inside the band.
    std::vector<Interval> along(members.size());
    std::vector<char> meets(members.size(), 0);
    parallel_for(members.size(), exec, [&](size_t i) {
      Interval iv = line_section(pr.cells[members[i]], line.A, line.B);
      if (!iv.open_nonempty()) return;
      iv.lo = emax(iv.lo, lo);
      iv.hi = emin(iv.hi, hi);
      if (cmp(iv.lo, iv.hi) < 0) {
        along[i] = iv;
        meets[i] = 1;
      }
    });
    std::set<int> crit_ids;
    std::vector<std::pair<Ext, Ext>> cover;
    for (size_t i = 0; i < members.size(); ++i) {
      if (!meets[i]) continue;
      crit_ids.insert(pr.cells[members[i]].id);
      cover.push_back({along[i].lo, along[i].hi});
    }
    std::sort(cover.begin(), cover.end(),
              [](const auto& u, const auto& v) { return u.first < v.first; });
    Ext reach = lo;
    for (const auto& [a, b] : cover) {
      if (cmp(a, reach) > 0) break;
      reach = emax(reach, b);
    }
    if (cmp(reach, hi) < 0) {
      throw Error(ErrorKind::kInvariantViolation,
                  "line leaves the kernel at stage " + std::to_string(cert.stages.size()));
    }
    st.critical = static_cast<int>(crit_ids.size());

    if (st.critical >= k) {
      cert.stages.push_back(st);
      cert.kind = StabCertificate::Kind::kNonhorizontal;
      cert.line = st.line;
      cert.count = stab_count(s, cert.line);
      return cert;
    }

    std::vector<char> crit(ncells, 0);
    std::vector<int> rest;
    int crit_cells = 0;
    for (int r : members) {
      if (crit_ids.count(pr.cells[r].id)) {
        crit[r] = 1;
        ++crit_cells;
      } else {
        rest.push_back(r);
      }
    }

    if (rest.empty()) {
      cert.stages.push_back(st);
      // Any height of the band off the vertices crosses one critical
      // region per stage; take the best of a spread of such heights.
      auto first = std::upper_bound(pr.heights.begin(), pr.heights.end(), lo.v);
      if (lo.inf < 0) first = pr.heights.begin();
      auto last = std::lower_bound(pr.heights.begin(), pr.heights.end(), hi.v);
      if (hi.inf > 0) last = pr.heights.end();
      std::vector<mpq_class> hs(first, last);
      std::vector<mpq_class> cand;
      if (hs.empty()) {
        if (lo.finite() && hi.finite()) {
          cand.push_back((lo.v + hi.v) / 2);
        } else if (lo.finite()) {
          cand.push_back(lo.v + 1);
        } else if (hi.finite()) {
          cand.push_back(hi.v - 1);
        } else {
          cand.push_back(0);
        }
      } else {
        cand.push_back(lo.finite() ? mpq_class((lo.v + hs.front()) / 2) : mpq_class(hs.front() - 1));
        for (size_t i = 0; i + 1 < hs.size(); ++i) cand.push_back((hs[i] + hs[i + 1]) / 2);
        cand.push_back(hi.finite() ? mpq_class((hs.back() + hi.v) / 2) : mpq_class(hs.back() + 1));
      }
      const size_t kMaxHeights = 64;
      if (cand.size() > kMaxHeights) {
        std::vector<mpq_class> pick;
        for (size_t i = 0; i < kMaxHeights; ++i) {
          pick.push_back(cand[i * (cand.size() - 1) / (kMaxHeights - 1)]);
        }
        cand = std::move(pick);
      }
      ArgMax best = argmax(cand.size(), exec,
                           [&](size_t i) { return stab_count(s, unshear_level(cand[i], slope)); });
      cert.kind = StabCertificate::Kind::kHorizontal;
      cert.line = unshear_level(cand[best.index], slope);
      cert.count = static_cast<int>(best.value);
      return cert;
    }

    // Cut heights: tops and bottoms of critical cells inside the band.
    std::map<mpq_class, int> cut_cell;
    for (int r : members) {
      if (!crit[r]) continue;
      const Cell& c = pr.cells[r];
      if (c.ylo.finite() && cmp(lo, c.ylo) < 0 && cmp(c.ylo, hi) < 0) cut_cell.emplace(c.ylo.v, r);
      if (c.yhi.finite() && cmp(lo, c.yhi) < 0 && cmp(c.yhi, hi) < 0) cut_cell.emplace(c.yhi.v, r);
    }
    std::vector<Ext> H = {lo};
    for (const auto& [h, r] : cut_cell) H.push_back(Ext::of(h));
    H.push_back(hi);
    const int bands = static_cast<int>(H.size()) - 1;

    // Nodes (sub-band j, cell r) for the non-critical cells.
    std::vector<int> base(ncells, -1), jfirst(ncells, 0), jlast(ncells, -1);
    int nodes = 0;
    for (int r : rest) {
      const Cell& c = pr.cells[r];
      for (int j = 0; j < bands; ++j) {
        Ext a = emax(H[j], c.ylo), b = emin(H[j + 1], c.yhi);
        if (cmp(a, b) >= 0) continue;
        if (jlast[r] < jfirst[r]) jfirst[r] = j;
        jlast[r] = j;
      }
      if (jlast[r] >= jfirst[r]) {
        base[r] = nodes;
        nodes += jlast[r] - jfirst[r] + 1;
      }
    }
    auto node = [&](int r, int j) { return base[r] + j - jfirst[r]; };
    UnionFind uf(nodes);

    // Across each cut height, cells off the cut segment continue.
    int j = 1;
    for (const auto& [h, origin] : cut_cell) {
      Interval vi = level_section(pr.cells[origin], h);
      const mpq_class vx = vi.lo.finite() ? vi.lo.v : vi.hi.v;
      std::vector<int> crossing;
      for (int r : members) {
        const Cell& c = pr.cells[r];
        if (cmp(c.ylo, Ext::of(h)) < 0 && cmp(Ext::of(h), c.yhi) < 0) crossing.push_back(r);
      }
      std::vector<Interval> secs(crossing.size());
      parallel_for(crossing.size(), exec,
                   [&](size_t i) { secs[i] = level_section(pr.cells[crossing[i]], h); });
      std::map<mpq_class, size_t> by_left, by_right;
      for (size_t i = 0; i < crossing.size(); ++i) {
        if (secs[i].lo.finite()) by_left[secs[i].lo.v] = i;
        if (secs[i].hi.finite()) by_right[secs[i].hi.v] = i;
      }
      std::vector<char> on_cut(crossing.size(), 0);
      for (int dir : {-1, 1}) {
        mpq_class cur = vx;
        for (;;) {
          auto& side = dir < 0 ? by_right : by_left;
          auto it = side.find(cur);
          if (it == side.end()) break;
          size_t i = it->second;
          if (crit[crossing[i]] || on_cut[i]) break;
          on_cut[i] = 1;
          const Ext& next = dir < 0 ? secs[i].lo : secs[i].hi;
          if (!next.finite()) break;
          cur = next.v;
        }
      }
      for (size_t i = 0; i < crossing.size(); ++i) {
        int r = crossing[i];
        if (crit[r] || on_cut[i]) continue;
        uf.join(node(r, j - 1), node(r, j));
      }
      ++j;
    }

    // Within a sub-band, cells sharing an edge belong to the same piece.
    for (int r : rest) {
      if (base[r] < 0) continue;
      for (const Adj& x : pr.adj[r]) {
        if (x.other < r || !member[x.other] || crit[x.other] || base[x.other] < 0) continue;
        for (int b = std::max(jfirst[r], jfirst[x.other]); b <= std::min(jlast[r], jlast[x.other]);
             ++b) {
          Ext a = emax(emax(H[b], x.lo), lo), c = emin(emin(H[b + 1], x.hi), hi);
          if (cmp(a, c) < 0) uf.join(node(r, b), node(x.other, b));
        }
      }
    }

    // The closed complement stays connected through a vertex where a
    // critical cell pinches it, unless the vertex lies on a cut.
    {
      auto it = pr.fans.begin();
      if (lo.finite()) {
        it = std::upper_bound(pr.fans.begin(), pr.fans.end(), lo.v,
                              [](const mpq_class& y, const auto& f) { return y < f.first; });
      }
      for (; it != pr.fans.end(); ++it) {
        const Ext y = Ext::of(it->first);
        if (cmp(y, hi) >= 0) break;
        if (cut_cell.count(it->first)) continue;
        int b = 0;
        while (b + 1 < bands && cmp(H[b + 1], y) < 0) ++b;
        int first = -1;
        for (int r : it->second) {
          if (!member[r] || crit[r] || base[r] < 0 || b < jfirst[r] || b > jlast[r]) continue;
          if (first < 0) {
            first = node(r, b);
          } else {
            uf.join(first, node(r, b));
          }
        }
      }
    }

    struct Piece {
      std::set<int> ids;
      std::set<int> cells;
      int jmin = 1 << 30, jmax = -1;
      Ext ylo = Ext::hi_inf(), yhi = Ext::lo_inf();  // may pinch inside a sub-band
    };
    std::map<int, Piece> pieces;
    for (int r : rest) {
      if (base[r] < 0) continue;
      for (int b = jfirst[r]; b <= jlast[r]; ++b) {
        Piece& p = pieces[uf.find(node(r, b))];
        p.ids.insert(pr.cells[r].id);
        p.cells.insert(r);
        p.jmin = std::min(p.jmin, b);
        p.jmax = std::max(p.jmax, b);
        p.ylo = emin(p.ylo, emax(H[b], pr.cells[r].ylo));
        p.yhi = emax(p.yhi, emin(H[b + 1], pr.cells[r].yhi));
      }
    }
    if (pieces.empty()) {
      throw Error(ErrorKind::kInvariantViolation, "kernel complement has no pieces");
    }
    const Piece* kernel = nullptr;
    int kernel_root = -1;
    for (const auto& [root, p] : pieces) {
      if (!kernel || p.ids.size() > kernel->ids.size() ||
          (p.ids.size() == kernel->ids.size() && *p.ids.begin() < *kernel->ids.begin())) {
        kernel = &p;
        kernel_root = root;
      }
    }
    for (int r : kernel->cells) {
      for (int b = std::max(jfirst[r], kernel->jmin); b <= std::min(jlast[r], kernel->jmax); ++b) {
        if (uf.find(node(r, b)) != kernel_root) {
          throw Error(ErrorKind::kInvariantViolation,
                      "kernel cell split across pieces at stage " +
                          std::to_string(cert.stages.size()));
        }
      }
    }

    st.pieces = static_cast<int>(pieces.size());
    st.kernel_regions = static_cast<int>(kernel->ids.size());
    cert.pieces_ok &= st.pieces <= 3 * crit_cells - 1;
    cert.recurrence_ok &= BigInt(3 * k - 4) * st.kernel_regions >= BigInt(st.regions - (k - 1));
    cert.stages.push_back(st);

    members.assign(kernel->cells.begin(), kernel->cells.end());
    lo = kernel->ylo;
    hi = kernel->yhi;
    std::vector<char> next_member(ncells, 0);
    for (int r : members) next_member[r] = 1;
    line = kernel_line(pr, members, next_member, lo, hi);
  }
}

CertificateCheck check_certificate(const PlanarSubdivision& s, const StabCertificate& c) {
  CertificateCheck out;
  int measured = stab_count(s, c.line);
  out.count_matches = measured == c.count;
  out.meets_guarantee = measured >= sweep_guarantee(static_cast<int>(s.regions.size()), c.k);
  out.recurrence = true;
  for (size_t i = 0; i + 1 < c.stages.size(); ++i) {
    const SweepStage& a = c.stages[i];
    const SweepStage& b = c.stages[i + 1];
    if (b.regions != a.kernel_regions ||
        (3 * c.k - 4) * static_cast<long>(b.regions) < a.regions - (c.k - 1)) {
      out.recurrence = false;
      out.detail = "stage " + std::to_string(i + 1) + " breaks the kernel recurrence";
    }
  }
  if (c.kind == StabCertificate::Kind::kHorizontal &&
      measured < static_cast<int>(c.stages.size())) {
    out.meets_guarantee = false;
    out.detail = "horizontal line crosses fewer regions than stages";
  }
  if (!out.count_matches) {
    out.detail = "recorded " + std::to_string(c.count) + ", measured " + std::to_string(measured);
  }
  return out;
}

}  // namespace moser
