// Exact rational scalars, vectors and sign predicates.
//
// Every geometric decision in the library goes through the predicates in
// this header. Directions are stored as primitive integer vectors so that
// sign tests reduce to integer dot products.

#ifndef MOSER_EXACT_H_
#define MOSER_EXACT_H_

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace moser {

using BigInt = mpz_class;

enum class ErrorKind {
  kInvalidArgument,
  kParse,
  kDimension,
  kInfeasible,
  kUnsupportedShape,
  kDegenerate,
  kOutOfHemisphere,
  kSearchFailure,
  kParameter,
  kInvariantViolation,
  kInvalidViewpoint,
  kInvalidScreen,
  kConstruction,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

class ExactRatio {
 public:
  ExactRatio() = default;
  ExactRatio(int v) : v_(v) {}
  ExactRatio(long v) : v_(v) {}
  ExactRatio(long long v) : v_(static_cast<long>(v)) {}
  explicit ExactRatio(const BigInt& n) : v_(n) {}
  ExactRatio(const BigInt& n, const BigInt& d);
  explicit ExactRatio(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  // Accepts "p/q" or a plain integer, optional leading sign.
  static ExactRatio parse(std::string_view text);
  // Canonical form: "p" when the denominator is 1, otherwise "p/q", q > 0.
  std::string str() const;

  const mpq_class& value() const { return v_; }
  BigInt num() const { return v_.get_num(); }
  BigInt den() const { return v_.get_den(); }
  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  double to_double() const { return v_.get_d(); }

  ExactRatio operator-() const { return ExactRatio(mpq_class(-v_)); }
  ExactRatio& operator+=(const ExactRatio& o) { v_ += o.v_; return *this; }
  ExactRatio& operator-=(const ExactRatio& o) { v_ -= o.v_; return *this; }
  ExactRatio& operator*=(const ExactRatio& o) { v_ *= o.v_; return *this; }
  ExactRatio& operator/=(const ExactRatio& o);

  friend ExactRatio operator+(ExactRatio a, const ExactRatio& b) { return a += b; }
  friend ExactRatio operator-(ExactRatio a, const ExactRatio& b) { return a -= b; }
  friend ExactRatio operator*(ExactRatio a, const ExactRatio& b) { return a *= b; }
  friend ExactRatio operator/(ExactRatio a, const ExactRatio& b) { return a /= b; }
  friend bool operator==(const ExactRatio& a, const ExactRatio& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const ExactRatio& a, const ExactRatio& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  friend std::ostream& operator<<(std::ostream& os, const ExactRatio& r) {
    return os << r.str();
  }

 private:
  mpq_class v_;
};

struct RVec2 {
  ExactRatio x, y;

  RVec2 operator+(const RVec2& o) const { return {x + o.x, y + o.y}; }
  RVec2 operator-(const RVec2& o) const { return {x - o.x, y - o.y}; }
  RVec2 operator*(const ExactRatio& s) const { return {x * s, y * s}; }
  bool operator==(const RVec2& o) const = default;
  auto operator<=>(const RVec2& o) const = default;
};

struct RVec3 {
  ExactRatio x, y, z;

  RVec3 operator+(const RVec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  RVec3 operator-(const RVec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  RVec3 operator*(const ExactRatio& s) const { return {x * s, y * s, z * s}; }
  RVec3 operator-() const { return {-x, -y, -z}; }
  bool operator==(const RVec3& o) const = default;
  auto operator<=>(const RVec3& o) const = default;
  bool is_zero() const { return x.is_zero() && y.is_zero() && z.is_zero(); }
};

ExactRatio dot(const RVec2& a, const RVec2& b);
ExactRatio cross(const RVec2& a, const RVec2& b);
ExactRatio dot(const RVec3& a, const RVec3& b);
RVec3 cross(const RVec3& a, const RVec3& b);

// Integer 3-vector. Used for directions, plane normals and homogeneous
// planar points (X, Y, W).
struct IVec3 {
  std::array<BigInt, 3> c;

  IVec3() : c{BigInt(0), BigInt(0), BigInt(0)} {}
  IVec3(BigInt x, BigInt y, BigInt z) : c{std::move(x), std::move(y), std::move(z)} {}
  IVec3(long x, long y, long z) : c{BigInt(x), BigInt(y), BigInt(z)} {}

  const BigInt& operator[](int i) const { return c[i]; }
  BigInt& operator[](int i) { return c[i]; }

  IVec3 operator+(const IVec3& o) const;
  IVec3 operator-(const IVec3& o) const;
  IVec3 operator-() const;
  IVec3 operator*(const BigInt& s) const;
  bool operator==(const IVec3& o) const { return c == o.c; }
  bool operator<(const IVec3& o) const;
  bool is_zero() const { return sgn(c[0]) == 0 && sgn(c[1]) == 0 && sgn(c[2]) == 0; }

  // Divides out the gcd of the entries; the sign is preserved.
  IVec3 primitive() const;
  // Primitive with the first nonzero entry positive. Identifies a line
  // through the origin, so v and -v share a key.
  IVec3 line_key() const;
  RVec3 to_rvec() const;
  std::string str() const;
};

BigInt dot(const IVec3& a, const IVec3& b);
IVec3 cross(const IVec3& a, const IVec3& b);
BigInt det3(const IVec3& a, const IVec3& b, const IVec3& c);
int sign_of_dot(const IVec3& a, const IVec3& b);

// Clears denominators. The result is a positive multiple of v, primitive.
IVec3 integer_direction(const RVec3& v);

// A nonzero direction, canonicalised to its primitive integer
// representative. Ray(v) and Ray(-v) are distinct.
class Ray {
 public:
  Ray() = default;
  explicit Ray(const IVec3& v);
  explicit Ray(const RVec3& v);
  Ray(long x, long y, long z) : Ray(IVec3(x, y, z)) {}

  const IVec3& v() const { return v_; }
  const BigInt& operator[](int i) const { return v_[i]; }
  Ray operator-() const;
  IVec3 line_key() const { return v_.line_key(); }
  bool operator==(const Ray& o) const { return v_ == o.v_; }
  bool operator<(const Ray& o) const { return v_ < o.v_; }
  std::string str() const { return v_.str(); }

 private:
  IVec3 v_{0, 0, 1};
};

// A direction base + delta*first + delta^2*second for an infinitesimal
// delta > 0. Signs are taken lexicographically over the three levels.
struct PerturbedRay {
  IVec3 base;
  IVec3 first;
  IVec3 second;

  PerturbedRay() = default;
  PerturbedRay(const Ray& r) : base(r.v()) {}  // NOLINT: implicit on purpose
  PerturbedRay(IVec3 b, IVec3 f, IVec3 s)
      : base(std::move(b)), first(std::move(f)), second(std::move(s)) {}

  PerturbedRay operator-() const { return {-base, -first, -second}; }
  bool is_perturbed() const { return !first.is_zero() || !second.is_zero(); }
  std::string str() const;
};

// Lexicographic sign of (a0.v, a1.v, a2.v).
int lex_sign(const IVec3& a0, const IVec3& a1, const IVec3& a2, const IVec3& v);

// Sign of <d, n> for the (possibly perturbed) direction d.
int sign_dot(const PerturbedRay& d, const IVec3& n);
// Same with a rational normal; a zero normal raises kInvalidArgument.
int sign_dot(const PerturbedRay& d, const RVec3& n);

// +1 for a counter-clockwise turn a -> b -> c, -1 clockwise, 0 collinear.
int orient2d(const RVec2& a, const RVec2& b, const RVec2& c);

// Homogeneous planar coordinates: a point (x, y) becomes a positive
// multiple of (x, y, 1) and a direction (dx, dy) becomes (dx, dy, 0).
IVec3 homogenize_point(const RVec2& p);
IVec3 homogenize_direction(const RVec2& d);
RVec2 dehomogenize(const IVec3& h);

}  // namespace moser

#endif  // MOSER_EXACT_H_
