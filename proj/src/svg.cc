#include "moser/svg.h"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace moser {

namespace {

const char* const kPalette[] = {"#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462",
                                "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd", "#ccebc5", "#ffed6f"};

struct Frame {
  ExactRatio x0, y0, x1, y1;
  int w, h;

  std::string pt(const RVec2& p) const {
    double x = ((p.x - x0) / (x1 - x0)).to_double() * w;
    double y = (1 - ((p.y - y0) / (y1 - y0)).to_double()) * h;
    return svg_number(x) + "," + svg_number(y);
  }
};

std::string header(int w, int h) {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(w) + "\" height=\"" +
         std::to_string(h) + "\" viewBox=\"0 0 " + std::to_string(w) + " " + std::to_string(h) +
         "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

IVec3 halfplane(const ExactRatio& a, const ExactRatio& b, const ExactRatio& c) {
  // a x + b y + c >= 0, scaled to integers.
  return integer_direction({a, b, c});
}

Frame fit(const PlanarSubdivision& s, const SvgOptions& opt) {
  Frame f;
  f.w = opt.width;
  f.h = opt.height;
  if (opt.window) {
    f.x0 = (*opt.window)[0];
    f.y0 = (*opt.window)[1];
    f.x1 = (*opt.window)[2];
    f.y1 = (*opt.window)[3];
    return f;
  }
  std::vector<IVec3> vs = s.vertices();
  if (vs.empty()) {
    f.x0 = f.y0 = ExactRatio(-1);
    f.x1 = f.y1 = ExactRatio(1);
    return f;
  }
  RVec2 lo = dehomogenize(vs[0]), hi = lo;
  for (const IVec3& v : vs) {
    RVec2 p = dehomogenize(v);
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
  }
  // Square window with a margin, so unbounded pieces stay visible.
  ExactRatio span = std::max(hi.x - lo.x, hi.y - lo.y);
  if (span.is_zero()) span = ExactRatio(1);
  ExactRatio pad = span * ExactRatio(1, 5);
  ExactRatio cx = (lo.x + hi.x) * ExactRatio(1, 2), cy = (lo.y + hi.y) * ExactRatio(1, 2);
  ExactRatio r = span * ExactRatio(1, 2) + pad;
  f.x0 = cx - r;
  f.x1 = cx + r;
  f.y0 = cy - r;
  f.y1 = cy + r;
  return f;
}

std::vector<RVec2> clip_to(const Frame& f, std::vector<IVec3> cycle) {
  for (const IVec3& h : {halfplane(1, 0, -f.x0), halfplane(-1, 0, f.x1), halfplane(0, 1, -f.y0),
                         halfplane(0, -1, f.y1)}) {
    cycle = clip_cycle(cycle, h);
    if (cycle.empty()) return {};
  }
  std::vector<RVec2> out;
  for (const IVec3& v : cycle) out.push_back(dehomogenize(v));
  return out;
}

std::string polygon_path(const Frame& f, const std::vector<RVec2>& pts) {
  std::string d;
  for (size_t i = 0; i < pts.size(); ++i) d += (i == 0 ? "M" : " L") + f.pt(pts[i]);
  return d + " Z";
}

std::string line_segment(const Frame& f, const PlanarLine& l) {
  ExactRatio a = l.a(), b = l.b(), c = l.c();
  std::vector<RVec2> hits;
  auto in = [](const ExactRatio& v, const ExactRatio& lo, const ExactRatio& hi) {
    return lo <= v && v <= hi;
  };
  if (!b.is_zero()) {
    for (const ExactRatio& x : {f.x0, f.x1}) {
      ExactRatio y = (c - a * x) / b;
      if (in(y, f.y0, f.y1)) hits.push_back({x, y});
    }
  }
  if (!a.is_zero()) {
    for (const ExactRatio& y : {f.y0, f.y1}) {
      ExactRatio x = (c - b * y) / a;
      if (in(x, f.x0, f.x1)) hits.push_back({x, y});
    }
  }
  if (hits.size() < 2) return {};
  auto [mn, mx] = std::minmax_element(hits.begin(), hits.end());
  if (*mn == *mx) return {};
  return "<path d=\"M" + f.pt(*mn) + " L" + f.pt(*mx) +
         "\" stroke=\"#d62728\" stroke-width=\"2\" fill=\"none\"/>\n";
}

std::string planar_body(const PlanarSubdivision& s, const Frame& f, const SvgOptions& opt) {
  std::string out;
  for (size_t i = 0; i < s.regions.size(); ++i) {
    const PlanarRegion& r = s.regions[i];
    const char* color = kPalette[i % (sizeof(kPalette) / sizeof(kPalette[0]))];
    if (r.exterior) {
      std::vector<RVec2> box = {{f.x0, f.y0}, {f.x1, f.y0}, {f.x1, f.y1}, {f.x0, f.y1}};
      std::vector<RVec2> hole = clip_to(f, r.cycle);
      out += "<path d=\"" + polygon_path(f, box) + (hole.empty() ? "" : " " + polygon_path(f, hole)) +
             "\" fill=\"" + color + "\" fill-rule=\"evenodd\" stroke=\"black\" stroke-width=\"1\"/>\n";
      continue;
    }
    std::vector<RVec2> pts = clip_to(f, r.cycle);
    if (pts.empty()) continue;
    out += "<path d=\"" + polygon_path(f, pts) + "\" fill=\"" + color +
           "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  }
  for (const PlanarLine& l : opt.lines) out += line_segment(f, l);
  return out;
}

std::array<double, 3> unit(const IVec3& v) {
  double x = v[0].get_d(), y = v[1].get_d(), z = v[2].get_d();
  double n = std::sqrt(x * x + y * y + z * z);
  return {x / n, y / n, z / n};
}

}  // namespace

std::string svg_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  std::string s = buf;
  if (s == "-0") s = "0";
  return s;
}

std::string render_svg(const PlanarSubdivision& s, const SvgOptions& opt) {
  Frame f = fit(s, opt);
  return header(f.w, f.h) + planar_body(s, f, opt) + "</svg>\n";
}

std::string render_svg(const SphericalSubdivision& d, const SvgOptions& opt) {
  if (opt.view == SvgOptions::View::kGnomonic) {
    return render_svg(project_subdivision(d, opt.rotation), opt);
  }
  // Orthographic view of the lower hemisphere, seen from below.
  SphericalSubdivision r = rotate(d, opt.rotation);
  int w = opt.width, h = opt.height;
  double cx = w / 2.0, cy = h / 2.0, rad = 0.45 * std::min(w, h);
  auto pt = [&](const std::array<double, 3>& u) {
    return svg_number(cx + rad * u[0]) + "," + svg_number(cy - rad * u[1]);
  };
  std::string out = header(w, h);
  out += "<circle cx=\"" + svg_number(cx) + "\" cy=\"" + svg_number(cy) + "\" r=\"" + svg_number(rad) +
         "\" fill=\"none\" stroke=\"gray\" stroke-width=\"1\"/>\n";
  for (size_t i = 0; i < r.regions.size(); ++i) {
    const auto& cyc = r.regions[i].cycle();
    std::string path;
    bool front = true;
    for (size_t k = 0; k < cyc.size(); ++k) {
      std::array<double, 3> a = unit(cyc[k].v()), b = unit(cyc[(k + 1) % cyc.size()].v());
      for (int t = 0; t < 16; ++t) {
        double s = t / 16.0;
        std::array<double, 3> m = {(1 - s) * a[0] + s * b[0], (1 - s) * a[1] + s * b[1],
                                   (1 - s) * a[2] + s * b[2]};
        double n = std::sqrt(m[0] * m[0] + m[1] * m[1] + m[2] * m[2]);
        if (n == 0) continue;
        m = {m[0] / n, m[1] / n, m[2] / n};
        front &= m[2] <= 1e-12;
        path += (path.empty() ? "M" : " L") + pt(m);
      }
    }
    const char* color = kPalette[i % (sizeof(kPalette) / sizeof(kPalette[0]))];
    out += "<path d=\"" + path + " Z\" fill=\"" + (front ? color : "none") +
           "\" stroke=\"black\" stroke-width=\"1\"" + (front ? "" : " stroke-dasharray=\"4 3\"") +
           "/>\n";
  }
  return out + "</svg>\n";
}

std::string render_svg(const ShadowPolygon& p, const SvgOptions& opt) {
  PlanarSubdivision s;
  if (p.fills_plane) {
    s.regions.push_back(PlanarRegion::from_homogeneous(whole_plane_cycle()));
  } else {
    s.regions.push_back(PlanarRegion::from_points(p.cycle, p.rays));
  }
  return render_svg(s, opt);
}

}  // namespace moser
