#include "moser/io.h"

#include <fstream>
#include <sstream>

namespace moser {

namespace {

std::vector<std::string> data_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(line);
  }
  return out;
}

std::vector<ExactRatio> fields(const std::string& line, size_t expect, size_t lineno) {
  std::istringstream in(line);
  std::vector<ExactRatio> out;
  std::string tok;
  while (in >> tok) out.push_back(ExactRatio::parse(tok));
  if (out.size() != expect) {
    throw Error(ErrorKind::kParse, "line " + std::to_string(lineno) + ": expected " +
                                       std::to_string(expect) + " rationals, got " +
                                       std::to_string(out.size()));
  }
  return out;
}

size_t header(const std::vector<std::string>& lines, const std::string& tag) {
  if (lines.empty()) throw Error(ErrorKind::kParse, "empty input");
  std::istringstream in(lines[0]);
  std::string t;
  long long n = -1;
  if (!(in >> t >> n) || t != tag || n < 0) {
    throw Error(ErrorKind::kParse, "expected header \"" + tag + " <count>\"");
  }
  if (lines.size() != static_cast<size_t>(n) + 1) {
    throw Error(ErrorKind::kParse, tag + " header says " + std::to_string(n) + " rows, found " +
                                       std::to_string(lines.size() - 1));
  }
  return static_cast<size_t>(n);
}

std::string str_of(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw Error(ErrorKind::kParse, "expected a rational string, got " + j.dump());
}

RVec2 vec2_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw Error(ErrorKind::kParse, "expected [x, y]");
  return {ratio_from_json(j[0]), ratio_from_json(j[1])};
}

Ray ray_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) throw Error(ErrorKind::kParse, "expected [x, y, z]");
  return Ray(RVec3{ratio_from_json(j[0]), ratio_from_json(j[1]), ratio_from_json(j[2])});
}

Json polygon_json(const SphericalPolygon& p) {
  Json r;
  r["label"] = p.label();
  Json cyc = Json::array();
  for (const Ray& v : p.cycle()) cyc.push_back(to_json(v.v()));
  r["cycle"] = cyc;
  if (p.pole()) r["pole"] = to_json(p.pole()->v());
  return r;
}

SphericalPolygon polygon_from_json(const Json& j) {
  std::vector<Ray> cyc;
  for (const Json& v : j.at("cycle")) cyc.push_back(ray_from_json(v));
  std::optional<Ray> pole;
  if (j.contains("pole")) pole = ray_from_json(j["pole"]);
  return SphericalPolygon::from_cycle(std::move(cyc), j.value("label", std::string()), pole);
}

}  // namespace

std::string write_vpoly(const std::vector<RVec3>& points) {
  std::string s = "VPOLY " + std::to_string(points.size()) + "\n";
  for (const RVec3& p : points) s += p.x.str() + " " + p.y.str() + " " + p.z.str() + "\n";
  return s;
}

std::vector<RVec3> read_vpoly(const std::string& text) {
  std::vector<std::string> lines = data_lines(text);
  size_t n = header(lines, "VPOLY");
  std::vector<RVec3> out;
  for (size_t i = 0; i < n; ++i) {
    std::vector<ExactRatio> f = fields(lines[i + 1], 3, i + 2);
    out.push_back({f[0], f[1], f[2]});
  }
  return out;
}

std::string write_hpoly(const std::vector<HalfSpace>& halfspaces) {
  std::string s = "HPOLY " + std::to_string(halfspaces.size()) + "\n";
  for (const HalfSpace& h : halfspaces) {
    s += h.normal.x.str() + " " + h.normal.y.str() + " " + h.normal.z.str() + " " +
         h.offset.str() + "\n";
  }
  return s;
}

std::vector<HalfSpace> read_hpoly(const std::string& text) {
  std::vector<std::string> lines = data_lines(text);
  size_t m = header(lines, "HPOLY");
  std::vector<HalfSpace> out;
  for (size_t i = 0; i < m; ++i) {
    std::vector<ExactRatio> f = fields(lines[i + 1], 4, i + 2);
    out.push_back({{f[0], f[1], f[2]}, f[3]});
  }
  return out;
}

Polyhedron read_polyhedron(const std::string& text) {
  std::vector<std::string> lines = data_lines(text);
  if (lines.empty()) throw Error(ErrorKind::kParse, "empty input");
  if (lines[0].rfind("VPOLY", 0) == 0) return Polyhedron::from_vrep(read_vpoly(text));
  if (lines[0].rfind("HPOLY", 0) == 0) return Polyhedron::from_hrep(read_hpoly(text));
  throw Error(ErrorKind::kParse, "unknown polyhedron format: " + lines[0]);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kInvalidArgument, "cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kInvalidArgument, "cannot write " + path);
  out << text;
}

RVec3 parse_vec3(const std::string& text) {
  std::vector<ExactRatio> v;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) v.push_back(ExactRatio::parse(tok));
  if (v.size() != 3) throw Error(ErrorKind::kParse, "expected x,y,z: " + text);
  return {v[0], v[1], v[2]};
}

Json to_json(const ExactRatio& r) { return r.str(); }
Json to_json(const RVec2& v) { return Json::array({v.x.str(), v.y.str()}); }
Json to_json(const RVec3& v) { return Json::array({v.x.str(), v.y.str(), v.z.str()}); }
Json to_json(const IVec3& v) { return Json::array({v[0].get_str(), v[1].get_str(), v[2].get_str()}); }

Json to_json(const PerturbedRay& d) {
  Json j;
  j["base"] = to_json(d.base);
  if (d.is_perturbed()) {
    j["first"] = to_json(d.first);
    j["second"] = to_json(d.second);
  }
  return j;
}

Json to_json(const PlanarLine& l) {
  Json j;
  j["a"] = l.a().str();
  j["b"] = l.b().str();
  j["c"] = l.c().str();
  if (l.perturbed()) {
    j["f1"] = to_json(l.f1);
    j["f2"] = to_json(l.f2);
  }
  return j;
}

Json to_json(const SizeMeasures& m) {
  Json j;
  j["vertices"] = m.v;
  j["edges"] = m.e;
  j["faces"] = m.f;
  j["bounded"] = m.bounded;
  return j;
}

ExactRatio ratio_from_json(const Json& j) { return ExactRatio::parse(str_of(j)); }

IVec3 ivec_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) throw Error(ErrorKind::kParse, "expected an integer triple");
  IVec3 v;
  for (int i = 0; i < 3; ++i) {
    ExactRatio r = ratio_from_json(j[i]);
    if (r.den() != 1) throw Error(ErrorKind::kParse, "expected integers, got " + r.str());
    v[i] = r.num();
  }
  return v;
}

PlanarLine line_from_json(const Json& j) {
  PlanarLine base = PlanarLine::from_coefficients(ratio_from_json(j.at("a")), ratio_from_json(j.at("b")),
                                                  ratio_from_json(j.at("c")));
  if (!j.contains("f1")) return base;
  return PlanarLine(base.f0, ivec_from_json(j["f1"]), ivec_from_json(j.at("f2")));
}

Json to_json(const SphericalSubdivision& d) {
  Json j;
  j["kind"] = d.kind == SphericalSubdivision::Kind::kFull ? "full" : "partial";
  if (d.support) {
    Json s = Json::array();
    for (const Ray& r : d.support->cycle()) s.push_back(to_json(r.v()));
    j["support"] = s;
  }
  Json regions = Json::array();
  for (const SphericalPolygon& p : d.regions) regions.push_back(polygon_json(p));
  j["regions"] = regions;
  return j;
}

SphericalSubdivision spherical_from_json(const Json& j) {
  SphericalSubdivision d;
  std::string kind = j.value("kind", std::string("full"));
  if (kind == "full") {
    d.kind = SphericalSubdivision::Kind::kFull;
  } else if (kind == "partial") {
    d.kind = SphericalSubdivision::Kind::kPartial;
  } else {
    throw Error(ErrorKind::kParse, "unknown subdivision kind " + kind);
  }
  if (j.contains("support")) {
    std::vector<Ray> cyc;
    for (const Json& v : j["support"]) cyc.push_back(ray_from_json(v));
    d.support = SphericalPolygon::from_cycle(std::move(cyc), "support");
  }
  for (const Json& r : j.at("regions")) d.regions.push_back(polygon_from_json(r));
  return d;
}

Json to_json(const PlanarSubdivision& s) {
  Json regions = Json::array();
  for (const PlanarRegion& r : s.regions) {
    Json o;
    if (!r.label.empty()) o["label"] = r.label;
    std::vector<RVec2> fin = r.finite_cycle();
    std::vector<RVec2> rays = r.rays();
    bool simple = !fin.empty();
    if (simple) {
      try {
        simple = PlanarRegion::from_points(fin, rays, r.exterior).cycle == r.cycle;
      } catch (const Error&) {
        simple = false;
      }
    }
    if (simple) {
      Json c = Json::array();
      for (const RVec2& p : fin) c.push_back(to_json(p));
      o["cycle"] = c;
      if (!rays.empty()) o["rays"] = Json::array({to_json(rays[0]), to_json(rays[1])});
    } else {
      Json c = Json::array();
      for (const IVec3& h : r.cycle) c.push_back(to_json(h));
      o["hcycle"] = c;
    }
    if (r.exterior) o["exterior"] = true;
    regions.push_back(o);
  }
  Json j;
  j["regions"] = regions;
  return j;
}

PlanarSubdivision planar_from_json(const Json& j) {
  PlanarSubdivision s;
  for (const Json& o : j.at("regions")) {
    bool ext = o.value("exterior", false);
    PlanarRegion r;
    if (o.contains("hcycle")) {
      std::vector<IVec3> c;
      for (const Json& h : o["hcycle"]) c.push_back(ivec_from_json(h));
      r = PlanarRegion::from_homogeneous(std::move(c), ext);
    } else {
      std::vector<RVec2> pts, rays;
      for (const Json& p : o.at("cycle")) pts.push_back(vec2_from_json(p));
      if (o.contains("rays")) {
        for (const Json& d : o["rays"]) rays.push_back(vec2_from_json(d));
      }
      r = PlanarRegion::from_points(pts, rays, ext);
    }
    r.label = o.value("label", std::string());
    s.regions.push_back(std::move(r));
  }
  return s;
}

Json to_json(const ShadowPolygon& s) {
  Json j;
  j["fills_plane"] = s.fills_plane;
  Json c = Json::array();
  for (const RVec2& p : s.cycle) c.push_back(to_json(p));
  j["cycle"] = c;
  if (!s.rays.empty()) j["rays"] = Json::array({to_json(s.rays[0]), to_json(s.rays[1])});
  return j;
}

Json to_json(const StabCertificate& c) {
  Json j;
  j["line"] = to_json(c.line);
  j["count"] = c.count;
  j["kind"] = certificate_kind_name(c.kind);
  j["k"] = c.k;
  j["n"] = c.n;
  j["guarantee"] = c.guarantee;
  j["horizontal"] = to_json(c.horizontal);
  j["convex_input"] = c.convex_input;
  j["recurrence_ok"] = c.recurrence_ok;
  j["pieces_ok"] = c.pieces_ok;
  Json st = Json::array();
  for (const SweepStage& s : c.stages) {
    Json o;
    o["band"] = Json::array({s.band_lo, s.band_hi});
    o["regions"] = s.regions;
    o["critical"] = s.critical;
    o["pieces"] = s.pieces;
    o["kernel_regions"] = s.kernel_regions;
    o["line"] = to_json(s.line);
    st.push_back(o);
  }
  j["stages"] = st;
  return j;
}

StabCertificate certificate_from_json(const Json& j) {
  StabCertificate c;
  c.line = line_from_json(j.at("line"));
  c.count = j.at("count").get<int>();
  std::string kind = j.at("kind").get<std::string>();
  if (kind == certificate_kind_name(StabCertificate::Kind::kNonhorizontal)) {
    c.kind = StabCertificate::Kind::kNonhorizontal;
  } else if (kind == certificate_kind_name(StabCertificate::Kind::kHorizontal)) {
    c.kind = StabCertificate::Kind::kHorizontal;
  } else {
    throw Error(ErrorKind::kParse, "unknown certificate kind " + kind);
  }
  c.k = j.at("k").get<int>();
  c.n = j.at("n").get<int>();
  c.guarantee = j.at("guarantee").get<int>();
  c.horizontal = vec2_from_json(j.at("horizontal"));
  c.convex_input = j.value("convex_input", true);
  c.recurrence_ok = j.value("recurrence_ok", true);
  c.pieces_ok = j.value("pieces_ok", true);
  for (const Json& o : j.at("stages")) {
    SweepStage s;
    s.band_lo = o.at("band")[0].get<std::string>();
    s.band_hi = o.at("band")[1].get<std::string>();
    s.regions = o.at("regions").get<int>();
    s.critical = o.at("critical").get<int>();
    s.pieces = o.at("pieces").get<int>();
    s.kernel_regions = o.at("kernel_regions").get<int>();
    s.line = line_from_json(o.at("line"));
    c.stages.push_back(std::move(s));
  }
  return c;
}

}  // namespace moser
