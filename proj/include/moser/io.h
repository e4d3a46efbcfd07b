// Text and JSON formats. Rationals are written in canonical "p/q" form
// and are JSON strings, so nothing passes through floating point.

#ifndef MOSER_IO_H_
#define MOSER_IO_H_

#include <string>
#include <vector>

#include "json.hpp"
#include "moser/exact.h"
#include "moser/planar.h"
#include "moser/polyhedron.h"
#include "moser/shadow.h"
#include "moser/spherical.h"
#include "moser/sweep.h"

namespace moser {

using Json = nlohmann::ordered_json;

// "VPOLY n" then n lines "x y z".
std::string write_vpoly(const std::vector<RVec3>& points);
std::vector<RVec3> read_vpoly(const std::string& text);

// "HPOLY m" then m lines "a b c d" for <(a, b, c), x> <= d.
std::string write_hpoly(const std::vector<HalfSpace>& halfspaces);
std::vector<HalfSpace> read_hpoly(const std::string& text);

// Either format, chosen by the header line.
Polyhedron read_polyhedron(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

// "a,b,c" with rational entries.
RVec3 parse_vec3(const std::string& text);

Json to_json(const ExactRatio& r);
Json to_json(const RVec2& v);
Json to_json(const RVec3& v);
Json to_json(const IVec3& v);
Json to_json(const PerturbedRay& d);
Json to_json(const PlanarLine& l);
Json to_json(const SizeMeasures& m);

ExactRatio ratio_from_json(const Json& j);
IVec3 ivec_from_json(const Json& j);
PlanarLine line_from_json(const Json& j);

// { "kind", "support"?, "regions": [ { "label", "cycle", "pole"? } ] }.
Json to_json(const SphericalSubdivision& d);
SphericalSubdivision spherical_from_json(const Json& j);

// { "regions": [ { "cycle", "rays"?, "exterior"?, "label"? } ] }; regions
// without a finite vertex use "hcycle" with homogeneous triples.
Json to_json(const PlanarSubdivision& s);
PlanarSubdivision planar_from_json(const Json& j);

Json to_json(const ShadowPolygon& s);

Json to_json(const StabCertificate& c);
StabCertificate certificate_from_json(const Json& j);

}  // namespace moser

#endif  // MOSER_IO_H_
