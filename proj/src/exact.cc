#include "moser/exact.h"

#include <cctype>
#include <sstream>

namespace moser {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return "invalid-argument";
    case ErrorKind::kParse: return "parse";
    case ErrorKind::kDimension: return "dimension";
    case ErrorKind::kInfeasible: return "infeasible";
    case ErrorKind::kUnsupportedShape: return "unsupported-shape";
    case ErrorKind::kDegenerate: return "degenerate";
    case ErrorKind::kOutOfHemisphere: return "out-of-hemisphere";
    case ErrorKind::kSearchFailure: return "search-failure";
    case ErrorKind::kParameter: return "parameter";
    case ErrorKind::kInvariantViolation: return "invariant-violation";
    case ErrorKind::kInvalidViewpoint: return "invalid-viewpoint";
    case ErrorKind::kInvalidScreen: return "invalid-screen";
    case ErrorKind::kConstruction: return "construction";
  }
  return "unknown";
}

ExactRatio::ExactRatio(const BigInt& n, const BigInt& d) {
  if (sgn(d) == 0) throw Error(ErrorKind::kInvalidArgument, "zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

ExactRatio& ExactRatio::operator/=(const ExactRatio& o) {
  if (o.is_zero()) throw Error(ErrorKind::kInvalidArgument, "division by zero");
  v_ /= o.v_;
  return *this;
}

namespace {

bool valid_integer(std::string_view s, bool allow_sign) {
  size_t i = 0;
  if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

BigInt parse_int(std::string_view s) {
  std::string t(s);
  if (!t.empty() && t[0] == '+') t.erase(0, 1);
  return BigInt(t, 10);
}

}  // namespace

ExactRatio ExactRatio::parse(std::string_view text) {
  size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  std::string_view s = text.substr(b, e - b);
  size_t slash = s.find('/');
  if (slash == std::string_view::npos) {
    if (!valid_integer(s, true)) {
      throw Error(ErrorKind::kParse, "malformed rational '" + std::string(text) + "'");
    }
    return ExactRatio(parse_int(s));
  }
  std::string_view p = s.substr(0, slash), q = s.substr(slash + 1);
  if (!valid_integer(p, true) || !valid_integer(q, true)) {
    throw Error(ErrorKind::kParse, "malformed rational '" + std::string(text) + "'");
  }
  BigInt den = parse_int(q);
  if (sgn(den) == 0) {
    throw Error(ErrorKind::kParse, "zero denominator in '" + std::string(text) + "'");
  }
  return ExactRatio(parse_int(p), den);
}

std::string ExactRatio::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

ExactRatio dot(const RVec2& a, const RVec2& b) { return a.x * b.x + a.y * b.y; }
ExactRatio cross(const RVec2& a, const RVec2& b) { return a.x * b.y - a.y * b.x; }
ExactRatio dot(const RVec3& a, const RVec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}
RVec3 cross(const RVec3& a, const RVec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

IVec3 IVec3::operator+(const IVec3& o) const {
  return IVec3(BigInt(c[0] + o.c[0]), BigInt(c[1] + o.c[1]), BigInt(c[2] + o.c[2]));
}
IVec3 IVec3::operator-(const IVec3& o) const {
  return IVec3(BigInt(c[0] - o.c[0]), BigInt(c[1] - o.c[1]), BigInt(c[2] - o.c[2]));
}
IVec3 IVec3::operator-() const {
  return IVec3(BigInt(-c[0]), BigInt(-c[1]), BigInt(-c[2]));
}
IVec3 IVec3::operator*(const BigInt& s) const {
  return IVec3(BigInt(c[0] * s), BigInt(c[1] * s), BigInt(c[2] * s));
}

bool IVec3::operator<(const IVec3& o) const {
  for (int i = 0; i < 3; ++i) {
    int r = cmp(c[i], o.c[i]);
    if (r != 0) return r < 0;
  }
  return false;
}

IVec3 IVec3::primitive() const {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), c[0].get_mpz_t(), c[1].get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c[2].get_mpz_t());
  if (sgn(g) == 0 || g == 1) return *this;
  IVec3 r;
  for (int i = 0; i < 3; ++i) mpz_divexact(r.c[i].get_mpz_t(), c[i].get_mpz_t(), g.get_mpz_t());
  return r;
}

IVec3 IVec3::line_key() const {
  IVec3 p = primitive();
  for (int i = 0; i < 3; ++i) {
    int s = sgn(p.c[i]);
    if (s > 0) return p;
    if (s < 0) return -p;
  }
  return p;
}

RVec3 IVec3::to_rvec() const {
  return {ExactRatio(c[0]), ExactRatio(c[1]), ExactRatio(c[2])};
}

std::string IVec3::str() const {
  return "(" + c[0].get_str() + "," + c[1].get_str() + "," + c[2].get_str() + ")";
}

BigInt dot(const IVec3& a, const IVec3& b) {
  BigInt r = a.c[0] * b.c[0];
  mpz_addmul(r.get_mpz_t(), a.c[1].get_mpz_t(), b.c[1].get_mpz_t());
  mpz_addmul(r.get_mpz_t(), a.c[2].get_mpz_t(), b.c[2].get_mpz_t());
  return r;
}

IVec3 cross(const IVec3& a, const IVec3& b) {
  return IVec3(BigInt(a.c[1] * b.c[2] - a.c[2] * b.c[1]),
               BigInt(a.c[2] * b.c[0] - a.c[0] * b.c[2]),
               BigInt(a.c[0] * b.c[1] - a.c[1] * b.c[0]));
}

BigInt det3(const IVec3& a, const IVec3& b, const IVec3& c) { return dot(a, cross(b, c)); }

int sign_of_dot(const IVec3& a, const IVec3& b) { return sgn(dot(a, b)); }

IVec3 integer_direction(const RVec3& v) {
  BigInt l = v.x.den();
  mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.y.den().get_mpz_t());
  mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.z.den().get_mpz_t());
  IVec3 r(BigInt(v.x.num() * (l / v.x.den())), BigInt(v.y.num() * (l / v.y.den())),
          BigInt(v.z.num() * (l / v.z.den())));
  return r.primitive();
}

Ray::Ray(const IVec3& v) : v_(v.primitive()) {
  if (v_.is_zero()) throw Error(ErrorKind::kInvalidArgument, "zero vector is not a ray");
}

Ray::Ray(const RVec3& v) : Ray(integer_direction(v)) {}

Ray Ray::operator-() const {
  Ray r;
  r.v_ = -v_;
  return r;
}

std::string PerturbedRay::str() const {
  return base.str() + "+d" + first.str() + "+d2" + second.str();
}

int lex_sign(const IVec3& a0, const IVec3& a1, const IVec3& a2, const IVec3& v) {
  int s = sign_of_dot(a0, v);
  if (s != 0) return s;
  s = sign_of_dot(a1, v);
  if (s != 0) return s;
  return sign_of_dot(a2, v);
}

int sign_dot(const PerturbedRay& d, const IVec3& n) {
  return lex_sign(d.base, d.first, d.second, n);
}

int sign_dot(const PerturbedRay& d, const RVec3& n) {
  if (n.is_zero()) throw Error(ErrorKind::kInvalidArgument, "zero normal in sign_dot");
  return sign_dot(d, integer_direction(n));
}

int orient2d(const RVec2& a, const RVec2& b, const RVec2& c) {
  return cross(b - a, c - a).sign();
}

IVec3 homogenize_point(const RVec2& p) {
  BigInt l = p.x.den();
  mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), p.y.den().get_mpz_t());
  return IVec3(BigInt(p.x.num() * (l / p.x.den())), BigInt(p.y.num() * (l / p.y.den())), l)
      .primitive();
}

IVec3 homogenize_direction(const RVec2& d) {
  return integer_direction({d.x, d.y, ExactRatio(0)});
}

RVec2 dehomogenize(const IVec3& h) {
  if (sgn(h[2]) == 0) throw Error(ErrorKind::kInvalidArgument, "point at infinity");
  return {ExactRatio(h[0], h[2]), ExactRatio(h[1], h[2])};
}

}  // namespace moser
